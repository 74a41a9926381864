//! The Gepner potential for Grassmannians Gr(r, N): critical points of
//! W~ = sum(lambda_i^{N+1}/(N+1) + (-1)^r lambda_i) are the tuples of
//! N-th roots of unity, and their images under the elementary symmetric
//! map Phi bound the critical values of W itself. The engine enumerates
//! the images exactly: in positive characteristic inside a splitting
//! field, in characteristic zero inside the group ring Z[x]/(x^N - 1),
//! where distinct root multisets provably stay distinct.

use super::{roots_of_unity, split_prime_power, splitting_field_of_unity};
use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Zero};

/// An element of Q[x]/(x^N - 1), used to carry symmetric-function
/// values of roots of unity in characteristic zero without a number
/// field. Coefficients are indexed by powers of the root x.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct CycElem {
    pub coeffs: Vec<BigRational>,
}

impl CycElem {
    fn zero(n: usize) -> CycElem {
        CycElem {
            coeffs: vec![BigRational::zero(); n],
        }
    }

    fn root_power(n: usize, k: usize) -> CycElem {
        let mut c = Self::zero(n);
        c.coeffs[k % n] = BigRational::one();
        c
    }

    fn add(&self, other: &CycElem) -> CycElem {
        CycElem {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    fn mul(&self, other: &CycElem) -> CycElem {
        let n = self.coeffs.len();
        let mut out = Self::zero(n);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out.coeffs[(i + j) % n] = &out.coeffs[(i + j) % n] + a * b;
            }
        }
        out
    }

    pub fn is_rational(&self) -> bool {
        self.coeffs.iter().skip(1).all(|c| c.is_zero())
    }

    pub fn render(&self) -> String {
        let mut terms = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let t = match k {
                0 => format!("{c}"),
                1 if c.is_one() => "z".to_string(),
                1 => format!("{c}*z"),
                _ if c.is_one() => format!("z^{k}"),
                _ => format!("{c}*z^{k}"),
            };
            terms.push(t);
        }
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join("+")
        }
    }
}

/// An elementary-symmetric image tuple together with whether it comes
/// from a tuple of pairwise distinct roots.
#[derive(Clone, Debug)]
pub enum GepnerImages {
    /// Positive characteristic: values in the (possibly extended) field.
    Field(Vec<(Vec<Scalar>, bool)>),
    /// Characteristic zero: values in Q[x]/(x^N - 1).
    Cyclotomic(Vec<(Vec<CycElem>, bool)>),
}

#[derive(Clone, Debug)]
pub struct GepnerReport {
    pub r: u32,
    pub big_n: u64,
    /// The field the roots were enumerated in (the input field or its
    /// extension; the rationals in characteristic zero, where roots are
    /// carried symbolically).
    pub field: Field,
    pub root_count: usize,
    pub images: GepnerImages,
}

impl GepnerReport {
    pub fn image_count(&self) -> usize {
        match &self.images {
            GepnerImages::Field(v) => v.len(),
            GepnerImages::Cyclotomic(v) => v.len(),
        }
    }

    pub fn distinct_coordinate_count(&self) -> usize {
        match &self.images {
            GepnerImages::Field(v) => v.iter().filter(|(_, d)| *d).count(),
            GepnerImages::Cyclotomic(v) => v.iter().filter(|(_, d)| *d).count(),
        }
    }
}

const MULTISET_BOUND: u128 = 1_000_000;

/// Enumerate the Phi-images of all size-r multisets of N-th roots of
/// unity (the critical tuples of the symmetrized Gepner potential).
pub fn gepner_critical_images(
    r: u32,
    big_n: u64,
    field: &Field,
    allow_extension: bool,
    cap: usize,
) -> Result<GepnerReport> {
    if r == 0 || big_n == 0 {
        return Err(Error::InvariantViolation("gepner needs r, N >= 1".into()));
    }
    let p = field.characteristic();
    if p == 0 {
        return gepner_char_zero(r, big_n);
    }
    let (_, n_reduced) = split_prime_power(p, big_n);
    let target = splitting_field_of_unity(p, n_reduced, cap)?;
    let work_field = if target.extension_degree() > field.extension_degree() {
        if !allow_extension {
            return Err(Error::MissingRootsOfUnity(format!(
                "{field} lacks the {n_reduced}-th roots of unity and extension is disallowed"
            )));
        }
        let d = num::integer::lcm(field.extension_degree(), target.extension_degree());
        Field::with_cap(p, d, cap)?
    } else {
        field.clone()
    };
    let roots = roots_of_unity(&work_field, n_reduced)?;
    if roots.len() as u64 != n_reduced {
        return Err(Error::Internal(
            "splitting field does not contain the expected roots".into(),
        ));
    }
    check_multiset_bound(roots.len(), r)?;
    let mut images: Vec<(Vec<Scalar>, bool)> = Vec::new();
    for multiset in multisets(roots.len(), r as usize) {
        let lambda: Vec<&Scalar> = multiset.iter().map(|&i| &roots[i]).collect();
        let distinct = multiset.windows(2).all(|w| w[0] != w[1]);
        let mut sigma = vec![work_field.zero(); r as usize + 1];
        sigma[0] = work_field.one();
        for l in &lambda {
            for k in (1..=r as usize).rev() {
                let t = work_field.mul(&sigma[k - 1], l);
                sigma[k] = work_field.add(&sigma[k], &t);
            }
        }
        images.push((sigma[1..].to_vec(), distinct));
    }
    images.sort();
    images.dedup_by(|a, b| a.0 == b.0);
    Ok(GepnerReport {
        r,
        big_n,
        field: work_field,
        root_count: roots.len(),
        images: GepnerImages::Field(images),
    })
}

fn gepner_char_zero(r: u32, big_n: u64) -> Result<GepnerReport> {
    let n = big_n as usize;
    if n > 64 {
        return Err(Error::SearchBoundExceeded {
            size: n as u128,
            bound: 64,
        });
    }
    check_multiset_bound(n, r)?;
    let mut images: Vec<(Vec<CycElem>, bool)> = Vec::new();
    for multiset in multisets(n, r as usize) {
        let distinct = multiset.windows(2).all(|w| w[0] != w[1]);
        let mut sigma = vec![CycElem::zero(n); r as usize + 1];
        sigma[0] = CycElem::root_power(n, 0);
        for &k in &multiset {
            let lambda = CycElem::root_power(n, k);
            for j in (1..=r as usize).rev() {
                let t = sigma[j - 1].mul(&lambda);
                sigma[j] = sigma[j].add(&t);
            }
        }
        images.push((sigma[1..].to_vec(), distinct));
    }
    images.sort();
    images.dedup_by(|a, b| a.0 == b.0);
    Ok(GepnerReport {
        r,
        big_n,
        field: Field::rationals(),
        root_count: n,
        images: GepnerImages::Cyclotomic(images),
    })
}

fn check_multiset_bound(roots: usize, r: u32) -> Result<()> {
    let mut count: u128 = 1;
    // C(roots + r - 1, r)
    for k in 0..r as u128 {
        count = count.saturating_mul(roots as u128 + r as u128 - 1 - k) / (k + 1);
        if count > MULTISET_BOUND {
            return Err(Error::SearchBoundExceeded {
                size: count,
                bound: MULTISET_BOUND,
            });
        }
    }
    Ok(())
}

/// Nondecreasing index tuples of length r over 0..n (multisets).
fn multisets(n: usize, r: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = vec![0usize; r];
    loop {
        out.push(cur.clone());
        // increment as a nondecreasing odometer
        let mut i = r;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] + 1 < n {
                let v = cur[i] + 1;
                for slot in cur.iter_mut().skip(i) {
                    *slot = v;
                }
                break;
            }
        }
    }
}

/// True iff binom(2^s, i) is even for all 0 < i < 2^s. Decided by
/// Lucas' theorem (bitmask containment mod 2) and cross-checked against
/// direct big-integer binomial coefficients for s <= 6.
pub fn binomial_column_test(s: u32) -> Result<bool> {
    if s == 0 || s > 26 {
        return Err(Error::InvariantViolation(
            "binomial column test expects 1 <= s <= 26".into(),
        ));
    }
    let n: u64 = 1 << s;
    let mut all_even = true;
    for i in 1..n {
        // Lucas mod 2: binom(n, i) is odd iff the bits of i sit inside
        // the bits of n.
        let odd = (i & n) == i;
        if odd {
            all_even = false;
        }
        if s <= 6 {
            let direct = big_binomial(n, i);
            let direct_odd = direct % BigInt::from(2) == BigInt::one();
            if direct_odd != odd {
                return Err(Error::Internal(
                    "Lucas parity disagrees with the direct binomial".into(),
                ));
            }
        }
    }
    Ok(all_even)
}

fn big_binomial(n: u64, k: u64) -> BigInt {
    let mut acc = BigInt::one();
    for j in 0..k {
        acc = acc * BigInt::from(n - j) / BigInt::from(j + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn char2_power_of_two_case_has_single_image() {
        // r = 2, N = 4 in characteristic 2: only root is 1, image (0, 1)
        let f2 = Field::new(2, 1).unwrap();
        let rep = gepner_critical_images(2, 4, &f2, true, 12).unwrap();
        assert_eq!(rep.root_count, 1);
        assert_eq!(rep.image_count(), 1);
        match &rep.images {
            GepnerImages::Field(v) => {
                assert_eq!(v[0].0, vec![f2.zero(), f2.one()]);
            }
            _ => panic!("expected field images"),
        }
    }

    #[test]
    fn char0_square_roots_of_unity() {
        // r = 1, N = 2: images {(1), (-1)}
        let q = Field::rationals();
        let rep = gepner_critical_images(1, 2, &q, false, 12).unwrap();
        assert_eq!(rep.image_count(), 2);
        match &rep.images {
            GepnerImages::Cyclotomic(v) => {
                let rendered: Vec<String> =
                    v.iter().map(|(t, _)| t[0].render()).collect();
                assert!(rendered.contains(&"1".to_string()));
                // -1 = z in Q[x]/(x^2-1)? no: z is the primitive square
                // root, which equals -1 in any field; here it stays
                // symbolic as z.
                assert!(rendered.contains(&"z".to_string()));
            }
            _ => panic!("expected cyclotomic images"),
        }
    }

    #[test]
    fn char0_gr_2_4_counts() {
        // r = 2, N = 4 over the rationals with roots adjoined: 10 images,
        // 6 with pairwise distinct coordinates (= dim QH(Gr(2,4)))
        let q = Field::rationals();
        let rep = gepner_critical_images(2, 4, &q, false, 12).unwrap();
        assert_eq!(rep.image_count(), 10);
        assert_eq!(rep.distinct_coordinate_count(), 6);
    }

    #[test]
    fn gepner_locality_for_s_up_to_three() {
        for s in 1u32..=3 {
            let r = 1u32 << s;
            let big_n = 1u64 << (s + 1);
            let f2 = Field::new(2, 1).unwrap();
            let rep = gepner_critical_images(r, big_n, &f2, true, 12).unwrap();
            assert_eq!(rep.image_count(), 1, "s = {s}");
            match &rep.images {
                GepnerImages::Field(v) => {
                    let mut expected = vec![f2.zero(); r as usize];
                    expected[r as usize - 1] = f2.one();
                    assert_eq!(v[0].0, expected);
                }
                _ => panic!("expected field images"),
            }
            assert!(binomial_column_test(s).unwrap());
        }
    }

    #[test]
    fn binomial_column_examples() {
        assert!(binomial_column_test(1).unwrap());
        assert!(binomial_column_test(2).unwrap());
        assert!(binomial_column_test(3).unwrap());
        assert!(binomial_column_test(10).unwrap());
    }

    #[test]
    fn missing_roots_without_extension() {
        // F_3 lacks 4th roots of unity (it has only the square roots)
        let f3 = Field::new(3, 1).unwrap();
        assert!(matches!(
            gepner_critical_images(2, 8, &f3, false, 12),
            Err(Error::MissingRootsOfUnity(_))
        ));
        // with extension allowed it extends to F_9
        let rep = gepner_critical_images(2, 8, &f3, true, 12).unwrap();
        assert_eq!(rep.field.extension_degree(), 2);
        assert_eq!(rep.root_count, 8);
    }
}
