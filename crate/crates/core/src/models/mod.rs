//! Model ring constructors: CP^n and quadric 3-fold quantum
//! cohomology in arbitrary characteristic, graded tensor products,
//! superpotential critical loci, and the Gepner symmetric-function
//! potential for Grassmannians.

mod gepner;
mod superpotential;

pub use gepner::{binomial_column_test, gepner_critical_images, CycElem, GepnerImages, GepnerReport};
pub use superpotential::{
    toric_critical_points, toric_critical_points_seq, CriticalPoint, CriticalReport,
    Superpotential, DEFAULT_SEARCH_BOUND,
};

use crate::algebra::{Algebra, Element, Presentation, Relation};
use crate::error::{Error, Result};
use crate::field::{factor, Field, UniPoly};

/// QH(CP^n): k[H]/(H^{n+1} - 1) with |H| = 2, graded mod 2n+2.
pub fn qh_cpn(n: u32, field: &Field) -> Result<Algebra> {
    if n == 0 {
        return Err(Error::InvariantViolation("qh_cpn needs n >= 1".into()));
    }
    Presentation::new(
        field.clone(),
        2 * (n as i64) + 2,
        vec![("H".into(), 2)],
        vec![Relation {
            lhs: vec![n + 1],
            rhs: vec![(field.one(), vec![0])],
        }],
    )
    .build()
}

/// QH of the quadric 3-fold: k[H,E]/(H^2 - 2E, E^2 - H) on basis
/// {1, H, E, HE}, graded mod 6 (the relation E^2 = H shifts degree by
/// twice the minimal Chern number 3).
pub fn qh_quadric3(field: &Field) -> Result<Algebra> {
    Presentation::new(
        field.clone(),
        6,
        vec![("H".into(), 2), ("E".into(), 4)],
        vec![
            Relation {
                lhs: vec![2, 0],
                rhs: vec![(field.from_i64(2), vec![0, 1])],
            },
            Relation {
                lhs: vec![0, 2],
                rhs: vec![(field.one(), vec![1, 0])],
            },
        ],
    )
    .build()
}

/// Graded tensor product of even-supported algebras.
pub fn qh_product(a: &Algebra, b: &Algebra) -> Result<Algebra> {
    a.tensor(b)
}

/// The idempotents (1/q) sum_i mu^i H^{p^s i} of QH(CP^n), one per q-th
/// root of unity mu, where n+1 = p^s q with p the characteristic and
/// p coprime to q (q = n+1 in characteristic 0). The field must already
/// contain all q-th roots of unity.
pub fn cpn_idempotents(n: u32, field: &Field) -> Result<Vec<Element>> {
    let alg = qh_cpn(n, field)?;
    let p = field.characteristic();
    let (s, q) = split_prime_power(p, n as u64 + 1);
    let roots = roots_of_unity(field, q)?;
    if roots.len() as u64 != q {
        return Err(Error::MissingRootsOfUnity(format!(
            "found {} q-th roots of unity, need q = {}",
            roots.len(),
            q
        )));
    }
    let qinv = field.inv(&field.from_i64(q as i64))?;
    let ps = if p == 0 { 1u64 } else { p.pow(s) };
    let mut out = Vec::new();
    for mu in roots {
        let mut e = alg.zero();
        let mut mu_pow = field.one();
        for i in 0..q {
            let exp = ((ps % (n as u64 + 1)) * i) % (n as u64 + 1);
            let term = e.coords[exp as usize].clone();
            e.coords[exp as usize] = field.add(&term, &mu_pow);
            mu_pow = field.mul(&mu_pow, &mu);
        }
        e = alg.scale(&qinv, &e);
        if alg.mul(&e, &e) != e {
            return Err(Error::Internal(
                "closed-formula idempotent failed the idempotency check".into(),
            ));
        }
        out.push(e);
    }
    out.sort_by(|a, b| a.coords.cmp(&b.coords));
    Ok(out)
}

/// n+1 = p^s q with p coprime to q. In characteristic 0, (0, n+1).
fn split_prime_power(p: u64, m: u64) -> (u32, u64) {
    if p == 0 {
        return (0, m);
    }
    let mut s = 0u32;
    let mut q = m;
    while q % p == 0 {
        q /= p;
        s += 1;
    }
    (s, q)
}

/// All q-th roots of unity in the field. Over the rationals only q <= 2
/// can be complete; over F_{p^d} the roots of x^q - 1 are enumerated by
/// factorization (p-power parts of q collapse onto the same roots).
pub fn roots_of_unity(field: &Field, q: u64) -> Result<Vec<crate::field::Scalar>> {
    if q == 1 {
        return Ok(vec![field.one()]);
    }
    if field.characteristic() == 0 {
        let mut out = vec![field.one()];
        if q % 2 == 0 {
            out.push(field.from_i64(-1));
        }
        out.sort();
        return Ok(out);
    }
    let mut coeffs = vec![field.zero(); q as usize + 1];
    coeffs[0] = field.neg(&field.one());
    coeffs[q as usize] = field.one();
    let f = UniPoly::new(field, coeffs);
    let fac = factor(field, &f)?;
    let mut roots: Vec<crate::field::Scalar> =
        fac.roots(field).into_iter().map(|(r, _)| r).collect();
    roots.sort();
    Ok(roots)
}

/// The minimal extension of F_p containing the q-th roots of unity:
/// F_{p^d} with d the multiplicative order of p modulo the prime-to-p
/// part of q.
pub fn splitting_field_of_unity(p: u64, q: u64, cap: usize) -> Result<Field> {
    if p == 0 {
        return Ok(Field::rationals());
    }
    let (_, q) = split_prime_power(p, q);
    if q == 1 {
        return Field::with_cap(p, 1, cap);
    }
    let mut d = 1usize;
    let mut pow = p % q;
    while pow != 1 {
        pow = (pow * (p % q)) % q;
        d += 1;
        if d > cap {
            return Err(Error::ExtensionTooLarge { requested: d, cap });
        }
    }
    Field::with_cap(p, d, cap)
}

/// Block count law for CP^n over a splitting extension: q blocks of
/// dimension p^s each, where n+1 = p^s q.
pub fn cpn_block_law(n: u32, p: u64) -> (u64, u64) {
    let (s, q) = split_prime_power(p, n as u64 + 1);
    let ps = if p == 0 { 1 } else { p.pow(s) };
    (q, ps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{
        block_decompose, classify_element, jordan_chevalley, minimal_polynomial, radical,
        Classification,
    };
    use crate::field::DEFAULT_EXTENSION_CAP;

    #[test]
    fn cp1_over_f2_is_local_and_not_semisimple() {
        let f2 = Field::new(2, 1).unwrap();
        let alg = qh_cpn(1, &f2).unwrap();
        assert_eq!(alg.dim(), 2);
        let d = block_decompose(&alg, false, DEFAULT_EXTENSION_CAP).unwrap();
        assert_eq!(d.blocks.len(), 1);
        assert_eq!(d.blocks[0].radical_dim(), 1);
        assert!(!d.is_semisimple());
        // radical is spanned by H + 1
        let rad = radical(&alg).unwrap();
        assert_eq!(rad.len(), 1);
        let hp1 = alg.add(&alg.basis_element(1), &alg.unit());
        assert_eq!(rad[0], hp1);
    }

    #[test]
    fn cp2_over_f3_has_one_block() {
        let f3 = Field::new(3, 1).unwrap();
        let alg = qh_cpn(2, &f3).unwrap();
        let d = block_decompose(&alg, true, DEFAULT_EXTENSION_CAP).unwrap();
        assert_eq!(d.blocks.len(), 1);
        assert_eq!(d.extension_used().extension_degree(), 1);
    }

    #[test]
    fn cp4_over_f7_extends_and_splits_into_five_fields() {
        let f7 = Field::new(7, 1).unwrap();
        let alg = qh_cpn(4, &f7).unwrap();
        let d = block_decompose(&alg, true, DEFAULT_EXTENSION_CAP).unwrap();
        assert_eq!(d.blocks.len(), 5);
        assert!(d.blocks.iter().all(|b| b.is_field && b.dim == 1));
        // splitting field of lambda^5 - 1 over F_7: ord_5(7) = 4
        assert_eq!(d.extension_used().extension_degree(), 4);
    }

    #[test]
    fn cp5_over_f2_extends_to_f4_with_three_blocks() {
        let f2 = Field::new(2, 1).unwrap();
        let alg = qh_cpn(5, &f2).unwrap();
        let d = block_decompose(&alg, true, DEFAULT_EXTENSION_CAP).unwrap();
        assert_eq!(d.extension_used().extension_degree(), 2);
        assert_eq!(d.blocks.len(), 3);
        assert!(d.blocks.iter().all(|b| b.dim == 2));
    }

    #[test]
    fn cp5_over_f2_without_extension_has_two_blocks() {
        let f2 = Field::new(2, 1).unwrap();
        let alg = qh_cpn(5, &f2).unwrap();
        let d = block_decompose(&alg, false, DEFAULT_EXTENSION_CAP).unwrap();
        assert_eq!(d.blocks.len(), 2);
        assert!(!d.scalar_residues);
    }

    #[test]
    fn cpn_idempotent_formula_examples() {
        // n = 5 over F_4: e_1 = 1 + H^2 + H^4
        let f4 = Field::new(2, 2).unwrap();
        let alg = qh_cpn(5, &f4).unwrap();
        let ids = cpn_idempotents(5, &f4).unwrap();
        assert_eq!(ids.len(), 3);
        let mut e1 = alg.zero();
        e1.coords[0] = f4.one();
        e1.coords[2] = f4.one();
        e1.coords[4] = f4.one();
        assert!(ids.contains(&e1));
        // n = 2 over F_3: q = 1, single idempotent 1
        let f3 = Field::new(3, 1).unwrap();
        let ids = cpn_idempotents(2, &f3).unwrap();
        assert_eq!(ids.len(), 1);
        assert_eq!(ids[0], qh_cpn(2, &f3).unwrap().unit());
        // n = 1 over F_3: e_pm = 2(1 +- H)
        let ids = cpn_idempotents(1, &f3).unwrap();
        let alg = qh_cpn(1, &f3).unwrap();
        assert_eq!(ids.len(), 2);
        for e in &ids {
            assert_eq!(alg.mul(e, e), *e);
        }
        let two = f3.from_i64(2);
        let mut plus = alg.zero();
        plus.coords[0] = two.clone();
        plus.coords[1] = two.clone();
        assert!(ids.contains(&plus));
    }

    #[test]
    fn idempotents_match_decomposition_for_cp5_f4() {
        let f4 = Field::new(2, 2).unwrap();
        let alg = qh_cpn(5, &f4).unwrap();
        let d = block_decompose(&alg, false, DEFAULT_EXTENSION_CAP).unwrap();
        let mut from_blocks: Vec<Element> = d.idempotents();
        from_blocks.sort_by(|a, b| a.coords.cmp(&b.coords));
        let from_formula = cpn_idempotents(5, &f4).unwrap();
        assert_eq!(from_blocks, from_formula);
    }

    #[test]
    fn quadric_characteristic_table() {
        // char 2: one block of dim 4, not semisimple
        let f2 = Field::new(2, 1).unwrap();
        let alg = qh_quadric3(&f2).unwrap();
        let d = block_decompose(&alg, true, DEFAULT_EXTENSION_CAP).unwrap();
        assert_eq!(d.blocks.len(), 1);
        assert_eq!(d.blocks[0].dim, 4);
        assert_eq!(d.blocks[0].radical_dim(), 3);
        // char 3: blocks of dims 1 and 3, the small one a field
        let f3 = Field::new(3, 1).unwrap();
        let alg = qh_quadric3(&f3).unwrap();
        let d = block_decompose(&alg, true, DEFAULT_EXTENSION_CAP).unwrap();
        let dims: Vec<usize> = d.blocks.iter().map(|b| b.dim).collect();
        assert_eq!(dims, vec![1, 3]);
        assert!(d.blocks[0].is_field);
        assert!(!d.blocks[1].is_field);
        // char 5 with extension: four blocks, all fields
        let f5 = Field::new(5, 1).unwrap();
        let alg = qh_quadric3(&f5).unwrap();
        let d = block_decompose(&alg, true, DEFAULT_EXTENSION_CAP).unwrap();
        assert_eq!(d.blocks.len(), 4);
        assert!(d.blocks.iter().all(|b| b.is_field));
        assert_eq!(d.extension_used().extension_degree(), 2);
    }

    #[test]
    fn quadric_char_polys_match_the_model() {
        for field in [Field::rationals(), Field::new(11, 1).unwrap()] {
            let alg = qh_quadric3(&field).unwrap();
            let h = alg.generator("H").unwrap().clone();
            let e = alg.generator("E").unwrap().clone();
            let cp_h = alg.mult_operator(&h).char_poly(&field).unwrap();
            // lambda(lambda^3 - 4) = lambda^4 - 4 lambda
            assert_eq!(cp_h, UniPoly::from_i64(&field, &[0, -4, 0, 0, 1]));
            let cp_e = alg.mult_operator(&e).char_poly(&field).unwrap();
            assert_eq!(cp_e, UniPoly::from_i64(&field, &[0, -2, 0, 0, 1]));
        }
    }

    #[test]
    fn quadric_minimal_polynomials() {
        let q = Field::rationals();
        let alg = qh_quadric3(&q).unwrap();
        let e = alg.generator("E").unwrap().clone();
        assert_eq!(
            minimal_polynomial(&alg, &e),
            UniPoly::from_i64(&q, &[0, -2, 0, 0, 1])
        );
        assert_eq!(
            minimal_polynomial(&alg, &alg.unit()),
            UniPoly::from_i64(&q, &[-1, 1])
        );
        // H in CP^n: lambda^{n+1} - 1
        for n in [2u32, 3, 4] {
            let alg = qh_cpn(n, &q).unwrap();
            let h = alg.generator("H").unwrap().clone();
            let mut coeffs = vec![0i64; n as usize + 2];
            coeffs[0] = -1;
            coeffs[n as usize + 1] = 1;
            assert_eq!(minimal_polynomial(&alg, &h), UniPoly::from_i64(&q, &coeffs));
        }
    }

    #[test]
    fn quadric_e_multiplication_matrix_over_f2() {
        let f2 = Field::new(2, 1).unwrap();
        let alg = qh_quadric3(&f2).unwrap();
        let e = alg.generator("E").unwrap().clone();
        let m = alg.mult_operator(&e);
        // columns: E*1 = E, E*H = HE, E*E = H, E*HE = 0
        assert_eq!(m.column(0), e.coords);
        assert_eq!(m.column(1), alg.basis_element(3).coords);
        assert_eq!(m.column(2), alg.basis_element(1).coords);
        assert!(m.column(3).iter().all(|c| f2.is_zero(c)));
        assert_eq!(m.rank(&f2), 3);
    }

    #[test]
    fn classify_e_in_quadric_blocks() {
        // char 2: E nilpotent of index 4 in the single block
        let f2 = Field::new(2, 1).unwrap();
        let alg = qh_quadric3(&f2).unwrap();
        let d = block_decompose(&alg, false, DEFAULT_EXTENSION_CAP).unwrap();
        let e = d.algebra.generator("E").unwrap().clone();
        assert_eq!(
            classify_element(&d, 0, &e).unwrap(),
            Classification::Nilpotent { index: 4 }
        );
        // any block: the idempotent is invertible with itself as inverse
        for (i, b) in d.blocks.iter().enumerate() {
            match classify_element(&d, i, &b.idempotent).unwrap() {
                Classification::Invertible { inverse } => assert_eq!(inverse, b.idempotent),
                other => panic!("idempotent classified as {other:?}"),
            }
        }
    }

    #[test]
    fn classify_h_in_cpn_blocks_inverse_is_h_to_n() {
        let f7 = Field::new(7, 1).unwrap();
        let n = 3u32;
        let alg = qh_cpn(n, &f7).unwrap();
        let d = block_decompose(&alg, true, DEFAULT_EXTENSION_CAP).unwrap();
        for (i, b) in d.blocks.iter().enumerate() {
            let h = d.algebra.generator("H").unwrap().clone();
            let x = d.algebra.mul(&b.idempotent, &h);
            match classify_element(&d, i, &x).unwrap() {
                Classification::Invertible { inverse } => {
                    let hn = d.algebra.pow(&h, n as usize);
                    let expected = d.algebra.mul(&hn, &b.idempotent);
                    assert_eq!(inverse, expected);
                }
                other => panic!("H e_alpha classified as {other:?}"),
            }
        }
    }

    #[test]
    fn jordan_chevalley_of_e_over_f3() {
        let f3 = Field::new(3, 1).unwrap();
        let alg = qh_quadric3(&f3).unwrap();
        let e = alg.generator("E").unwrap().clone();
        let (xs, xn, p, q) = jordan_chevalley(&alg, &e).unwrap();
        assert_eq!(alg.add(&xs, &xn), e);
        assert_eq!(alg.eval_poly(&p, &e), xs);
        assert_eq!(alg.eval_poly(&q, &e), xn);
        // x_n^4 = 0
        assert!(alg.is_zero(&alg.pow(&xn, 4)));
        // x_s has eigenvalue set {0, 2}: minimal polynomial lambda^2 - 2 lambda
        let ms = minimal_polynomial(&alg, &xs);
        assert_eq!(ms, UniPoly::from_i64(&f3, &[0, -2, 1]));
    }

    #[test]
    fn jordan_chevalley_trivial_cases() {
        let f5 = Field::new(5, 1).unwrap();
        let alg = qh_cpn(1, &f5).unwrap();
        // idempotent -> (x, 0)
        let ids = cpn_idempotents(1, &f5).unwrap();
        let (xs, xn, _, _) = jordan_chevalley(&alg, &ids[0]).unwrap();
        assert_eq!(xs, ids[0]);
        assert!(alg.is_zero(&xn));
        // nilpotent -> (0, x)
        let f2 = Field::new(2, 1).unwrap();
        let alg = qh_cpn(1, &f2).unwrap();
        let hp1 = alg.add(&alg.basis_element(1), &alg.unit());
        let (xs, xn, _, _) = jordan_chevalley(&alg, &hp1).unwrap();
        assert!(alg.is_zero(&xs));
        assert_eq!(xn, hp1);
    }

    #[test]
    fn radical_examples() {
        // F_5[H]/(H^2-1) splits as F_5 x F_5: radical 0
        let f5 = Field::new(5, 1).unwrap();
        let alg = qh_cpn(1, &f5).unwrap();
        assert!(radical(&alg).unwrap().is_empty());
        // ground field: radical 0
        let q = Field::rationals();
        let ground = Presentation::new(q, 0, vec![], vec![]).build().unwrap();
        assert!(radical(&ground).unwrap().is_empty());
    }

    #[test]
    fn tensor_products_of_models() {
        // CP^1(F_2) (x) CP^1(F_2): dim 4, local, radical dim 3
        let f2 = Field::new(2, 1).unwrap();
        let cp1 = qh_cpn(1, &f2).unwrap();
        let prod = qh_product(&cp1, &cp1).unwrap();
        assert_eq!(prod.dim(), 4);
        let d = block_decompose(&prod, true, DEFAULT_EXTENSION_CAP).unwrap();
        assert_eq!(d.blocks.len(), 1);
        assert_eq!(d.blocks[0].radical_dim(), 3);
        // quadric(F_3) (x) quadric(F_3): block dims {1, 3, 3, 9}
        let f3 = Field::new(3, 1).unwrap();
        let quad = qh_quadric3(&f3).unwrap();
        let prod = qh_product(&quad, &quad).unwrap();
        let d = block_decompose(&prod, true, DEFAULT_EXTENSION_CAP).unwrap();
        let dims: Vec<usize> = d.blocks.iter().map(|b| b.dim).collect();
        assert_eq!(dims, vec![1, 3, 3, 9]);
    }

    #[test]
    fn quadric_over_rationals_splits_rationally() {
        let q = Field::rationals();
        let alg = qh_quadric3(&q).unwrap();
        let d = block_decompose(&alg, false, DEFAULT_EXTENSION_CAP).unwrap();
        let dims: Vec<usize> = d.blocks.iter().map(|b| b.dim).collect();
        assert_eq!(dims, vec![1, 3]);
        // the 3-dimensional piece is a cubic field: radical 0 everywhere
        assert!(d.blocks.iter().all(|b| b.is_field));
        assert!(!d.scalar_residues);
    }

    #[test]
    fn cpn_block_law_table() {
        assert_eq!(cpn_block_law(5, 2), (3, 2));
        assert_eq!(cpn_block_law(2, 3), (1, 3));
        assert_eq!(cpn_block_law(8, 3), (1, 9));
        assert_eq!(cpn_block_law(4, 7), (5, 1));
    }
}
