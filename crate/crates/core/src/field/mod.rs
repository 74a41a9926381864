//! Exact arithmetic over the rationals, prime fields and their finite
//! extensions.
//!
//! A [`Field`] is a small value object describing the coefficient field;
//! all arithmetic goes through it so that [`Scalar`] values stay plain
//! data. Extension fields F_{p^d} are represented as F_p[t]/(m(t)) where
//! m is the lexicographically least monic irreducible polynomial of
//! degree d, so two constructions of the same field are identical.

pub mod factor;
mod poly;

pub use factor::{factor, is_irreducible, squarefree_part, Factorization};
pub use poly::UniPoly;

use crate::error::{Error, Result};
use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Zero};
use std::fmt;

/// Default cap on extension degrees over the prime field.
pub const DEFAULT_EXTENSION_CAP: usize = 12;

/// Largest supported characteristic. Products of two residues must fit
/// in a u128 accumulator with room to spare; desk-scale primes are tiny
/// anyway.
const MAX_CHARACTERISTIC: u64 = (1 << 31) - 1;

/// A coefficient field: the rationals (characteristic 0) or F_{p^d}.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Field {
    characteristic: u64,
    extension_degree: usize,
    /// Monic modulus over F_p, length d+1, present iff d > 1.
    modulus: Option<Vec<u64>>,
}

/// An element of a [`Field`], in canonical form.
///
/// Rationals are reduced fractions with positive denominator (enforced
/// by `BigRational`); extension elements are coefficient vectors of
/// length exactly d with entries in [0, p).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Scalar {
    Rat(BigRational),
    Ext(Vec<u64>),
}

impl Field {
    /// The rationals.
    pub fn rationals() -> Field {
        Field {
            characteristic: 0,
            extension_degree: 1,
            modulus: None,
        }
    }

    /// Construct the field with `p^d` elements (or the rationals when
    /// `p = 0`, which requires `d = 1`). Uses the default extension cap.
    pub fn new(p: u64, d: usize) -> Result<Field> {
        Field::with_cap(p, d, DEFAULT_EXTENSION_CAP)
    }

    /// As [`Field::new`] with an explicit cap on the extension degree.
    pub fn with_cap(p: u64, d: usize, cap: usize) -> Result<Field> {
        if d == 0 {
            return Err(Error::BadExtensionDegree(d));
        }
        if p == 0 {
            if d != 1 {
                return Err(Error::BadExtensionDegree(d));
            }
            return Ok(Field::rationals());
        }
        if p > MAX_CHARACTERISTIC {
            return Err(Error::CharacteristicTooLarge(p));
        }
        if !is_prime(p) {
            return Err(Error::CompositeCharacteristic(p));
        }
        if d > cap {
            return Err(Error::ExtensionTooLarge { requested: d, cap });
        }
        if d == 1 {
            return Ok(Field {
                characteristic: p,
                extension_degree: 1,
                modulus: None,
            });
        }
        let modulus = least_irreducible(p, d);
        Ok(Field {
            characteristic: p,
            extension_degree: d,
            modulus: Some(modulus),
        })
    }

    pub fn characteristic(&self) -> u64 {
        self.characteristic
    }

    pub fn extension_degree(&self) -> usize {
        self.extension_degree
    }

    /// Monic modulus over the prime field (present iff degree > 1).
    pub fn modulus(&self) -> Option<&[u64]> {
        self.modulus.as_deref()
    }

    pub fn is_rational(&self) -> bool {
        self.characteristic == 0
    }

    /// Number of elements, if finite and small enough to enumerate.
    pub fn order(&self) -> Option<u128> {
        if self.characteristic == 0 {
            return None;
        }
        let mut n: u128 = 1;
        for _ in 0..self.extension_degree {
            n = n.checked_mul(self.characteristic as u128)?;
        }
        Some(n)
    }

    pub fn zero(&self) -> Scalar {
        match self.characteristic {
            0 => Scalar::Rat(BigRational::zero()),
            _ => Scalar::Ext(vec![0; self.extension_degree]),
        }
    }

    pub fn one(&self) -> Scalar {
        match self.characteristic {
            0 => Scalar::Rat(BigRational::one()),
            _ => {
                let mut c = vec![0; self.extension_degree];
                c[0] = 1;
                Scalar::Ext(c)
            }
        }
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        match self.characteristic {
            0 => Scalar::Rat(BigRational::from(BigInt::from(n))),
            p => {
                let mut c = vec![0; self.extension_degree];
                c[0] = n.rem_euclid(p as i64) as u64;
                Scalar::Ext(c)
            }
        }
    }

    pub fn from_ratio(&self, num: i64, den: i64) -> Result<Scalar> {
        if den == 0 {
            return Err(Error::DivisionByZero);
        }
        match self.characteristic {
            0 => Ok(Scalar::Rat(BigRational::new(
                BigInt::from(num),
                BigInt::from(den),
            ))),
            _ => {
                let d = self.from_i64(den);
                if self.is_zero(&d) {
                    return Err(Error::DivisionByZero);
                }
                Ok(self.mul(&self.from_i64(num), &self.inv(&d)?))
            }
        }
    }

    /// Element `t^k` of the extension (the generator when k = 1).
    pub fn generator_power(&self, k: usize) -> Scalar {
        match self.characteristic {
            0 => {
                assert_eq!(k, 0, "rationals have no extension generator");
                self.one()
            }
            p => {
                let mut v = vec![0u64; k + 1];
                v[k] = 1;
                Scalar::Ext(self.reduce_ext(v, p))
            }
        }
    }

    /// Check that a scalar is a canonical element of this field.
    pub fn validate(&self, s: &Scalar) -> Result<()> {
        match (self.characteristic, s) {
            (0, Scalar::Rat(_)) => Ok(()),
            (0, Scalar::Ext(_)) => Err(Error::MixedFields(
                "finite-field element passed to the rationals".into(),
            )),
            (_, Scalar::Rat(_)) => Err(Error::MixedFields(
                "rational element passed to a finite field".into(),
            )),
            (p, Scalar::Ext(c)) => {
                if c.len() != self.extension_degree {
                    return Err(Error::MixedFields(format!(
                        "coefficient vector of length {} in a degree-{} extension",
                        c.len(),
                        self.extension_degree
                    )));
                }
                if c.iter().any(|&x| x >= p) {
                    return Err(Error::MixedFields("coefficient out of range".into()));
                }
                Ok(())
            }
        }
    }

    pub fn is_zero(&self, s: &Scalar) -> bool {
        match s {
            Scalar::Rat(r) => r.is_zero(),
            Scalar::Ext(c) => c.iter().all(|&x| x == 0),
        }
    }

    pub fn is_one(&self, s: &Scalar) -> bool {
        *s == self.one()
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (a, b) {
            (Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(x + y),
            (Scalar::Ext(x), Scalar::Ext(y)) => {
                let p = self.characteristic;
                debug_assert_eq!(x.len(), y.len());
                Scalar::Ext(
                    x.iter()
                        .zip(y.iter())
                        .map(|(&u, &v)| {
                            let s = u + v;
                            if s >= p {
                                s - p
                            } else {
                                s
                            }
                        })
                        .collect(),
                )
            }
            _ => panic!("mixed scalar representations"),
        }
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        match a {
            Scalar::Rat(x) => Scalar::Rat(-x),
            Scalar::Ext(x) => {
                let p = self.characteristic;
                Scalar::Ext(
                    x.iter()
                        .map(|&u| if u == 0 { 0 } else { p - u })
                        .collect(),
                )
            }
        }
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (a, b) {
            (Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(x * y),
            (Scalar::Ext(x), Scalar::Ext(y)) => {
                let p = self.characteristic;
                if self.extension_degree == 1 {
                    return Scalar::Ext(vec![mul_mod(x[0], y[0], p)]);
                }
                let mut acc = vec![0u128; x.len() + y.len() - 1];
                for (i, &u) in x.iter().enumerate() {
                    if u == 0 {
                        continue;
                    }
                    for (j, &v) in y.iter().enumerate() {
                        acc[i + j] += (u as u128) * (v as u128);
                    }
                }
                let raw: Vec<u64> = acc.iter().map(|&t| (t % p as u128) as u64).collect();
                Scalar::Ext(self.reduce_ext(raw, p))
            }
            _ => panic!("mixed scalar representations"),
        }
    }

    pub fn inv(&self, a: &Scalar) -> Result<Scalar> {
        if self.is_zero(a) {
            return Err(Error::DivisionByZero);
        }
        match a {
            Scalar::Rat(x) => Ok(Scalar::Rat(x.recip())),
            Scalar::Ext(c) => {
                let p = self.characteristic;
                if self.extension_degree == 1 {
                    return Ok(Scalar::Ext(vec![inv_mod(c[0], p)?]));
                }
                // Extended Euclid in F_p[t] against the modulus.
                let m = self.modulus.as_ref().unwrap().clone();
                let inv = poly_inv_mod(c, &m, p)?;
                Ok(Scalar::Ext(self.pad(inv)))
            }
        }
    }

    pub fn div(&self, a: &Scalar, b: &Scalar) -> Result<Scalar> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    pub fn pow(&self, a: &Scalar, e: i64) -> Result<Scalar> {
        if e < 0 {
            let inv = self.inv(a)?;
            return self.pow(&inv, -e);
        }
        let mut result = self.one();
        let mut base = a.clone();
        let mut e = e as u64;
        while e > 0 {
            if e & 1 == 1 {
                result = self.mul(&result, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        Ok(result)
    }

    /// Frobenius inverse: the unique p-th root of `a`.
    pub fn pth_root(&self, a: &Scalar) -> Scalar {
        let p = self.characteristic;
        assert!(p > 0, "p-th roots only exist in positive characteristic");
        // a^(p^(d-1)) since a^(p^d) = a.
        let mut r = a.clone();
        for _ in 0..self.extension_degree - 1 {
            r = self.pow(&r, p as i64).unwrap();
        }
        r
    }

    /// Enumerate the field elements in canonical order (finite fields
    /// only; panics on the rationals).
    pub fn enumerate(&self) -> impl Iterator<Item = Scalar> + '_ {
        let p = self.characteristic;
        assert!(p > 0, "cannot enumerate the rationals");
        let d = self.extension_degree;
        let total = self.order().expect("field too large to enumerate");
        (0..total).map(move |k| {
            let mut c = vec![0u64; d];
            let mut k = k;
            for slot in c.iter_mut() {
                *slot = (k % p as u128) as u64;
                k /= p as u128;
            }
            Scalar::Ext(c)
        })
    }

    /// The element of this field with the same prime-field coordinates,
    /// for embedding F_p into F_{p^d}.
    pub fn from_prime_subfield(&self, c0: u64) -> Scalar {
        assert!(self.characteristic > 0);
        let mut c = vec![0; self.extension_degree];
        c[0] = c0 % self.characteristic;
        Scalar::Ext(c)
    }

    /// Render a scalar. Extension elements print as polynomials in `t`.
    pub fn render(&self, s: &Scalar) -> String {
        match s {
            Scalar::Rat(r) => {
                if r.is_integer() {
                    r.numer().to_string()
                } else {
                    format!("{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Ext(c) => {
                let mut terms = Vec::new();
                for (k, &v) in c.iter().enumerate() {
                    if v == 0 {
                        continue;
                    }
                    let t = match (k, v) {
                        (0, _) => format!("{v}"),
                        (1, 1) => "t".to_string(),
                        (1, _) => format!("{v}*t"),
                        (_, 1) => format!("t^{k}"),
                        (_, _) => format!("{v}*t^{k}"),
                    };
                    terms.push(t);
                }
                if terms.is_empty() {
                    "0".to_string()
                } else {
                    terms.join("+")
                }
            }
        }
    }

    /// Parse a scalar from a decimal integer or `a/b` fraction string.
    pub fn parse_ratio(&self, s: &str) -> Result<Scalar> {
        let s = s.trim();
        let parse_int = |t: &str| -> Result<i64> {
            t.trim()
                .parse::<i64>()
                .map_err(|_| Error::MixedFields(format!("cannot parse scalar {t:?}")))
        };
        match s.split_once('/') {
            Some((n, d)) => self.from_ratio(parse_int(n)?, parse_int(d)?),
            None => Ok(self.from_i64(parse_int(s)?)),
        }
    }

    fn pad(&self, mut v: Vec<u64>) -> Vec<u64> {
        v.resize(self.extension_degree, 0);
        v
    }

    fn reduce_ext(&self, mut v: Vec<u64>, p: u64) -> Vec<u64> {
        let d = self.extension_degree;
        if let Some(m) = &self.modulus {
            while v.len() > d {
                let lead = v.pop().unwrap();
                if lead == 0 {
                    continue;
                }
                let k = v.len() - d; // t^(d+k) = -(m_0 + ... + m_{d-1} t^{d-1}) t^k
                for (i, &mi) in m.iter().take(d).enumerate() {
                    let sub = mul_mod(lead, mi, p);
                    v[k + i] = (v[k + i] + p - sub) % p;
                }
            }
        }
        v.resize(d, 0);
        v
    }
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.characteristic == 0 {
            write!(f, "Q")
        } else if self.extension_degree == 1 {
            write!(f, "F{}", self.characteristic)
        } else {
            write!(f, "F{}^{}", self.characteristic, self.extension_degree)
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// A field embedding F_{p^a} -> F_{p^b} (a | b), or the identity on the
/// rationals. The generator of the source is sent to the least root of
/// the source modulus in the target, so embeddings are deterministic.
#[derive(Clone, Debug)]
pub struct Embedding {
    from: Field,
    to: Field,
    /// Image of the source generator t, when the source is a proper
    /// extension.
    gen_image: Option<Scalar>,
}

impl Embedding {
    pub fn new(from: &Field, to: &Field) -> Result<Embedding> {
        if from == to {
            return Ok(Embedding {
                from: from.clone(),
                to: to.clone(),
                gen_image: None,
            });
        }
        if from.characteristic() == 0 || to.characteristic() == 0 {
            return Err(Error::MixedFields(
                "embeddings are only constructed between finite fields".into(),
            ));
        }
        if from.characteristic() != to.characteristic()
            || to.extension_degree() % from.extension_degree() != 0
        {
            return Err(Error::MixedFields(format!(
                "{from} does not embed into {to}"
            )));
        }
        let gen_image = match from.modulus() {
            None => None,
            Some(m) => {
                let coeffs: Vec<Scalar> =
                    m.iter().map(|&c| to.from_prime_subfield(c)).collect();
                let poly = UniPoly::new(to, coeffs);
                let fac = factor::factor(to, &poly)?;
                let mut roots: Vec<Scalar> =
                    fac.roots(to).into_iter().map(|(r, _)| r).collect();
                roots.sort();
                let root = roots.into_iter().next().ok_or_else(|| {
                    Error::Internal("source modulus has no root in the target field".into())
                })?;
                Some(root)
            }
        };
        Ok(Embedding {
            from: from.clone(),
            to: to.clone(),
            gen_image,
        })
    }

    pub fn source(&self) -> &Field {
        &self.from
    }

    pub fn target(&self) -> &Field {
        &self.to
    }

    pub fn map(&self, s: &Scalar) -> Scalar {
        if self.from == self.to {
            return s.clone();
        }
        match (s, &self.gen_image) {
            (Scalar::Ext(c), None) => self.to.from_prime_subfield(c[0]),
            (Scalar::Ext(c), Some(g)) => {
                let mut acc = self.to.zero();
                for &coeff in c.iter().rev() {
                    acc = self.to.mul(&acc, g);
                    acc = self.to.add(&acc, &self.to.from_prime_subfield(coeff));
                }
                acc
            }
            (Scalar::Rat(_), _) => s.clone(),
        }
    }
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

#[inline]
fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn inv_mod(a: u64, p: u64) -> Result<u64> {
    if a == 0 {
        return Err(Error::DivisionByZero);
    }
    // Extended Euclid over the integers.
    let (mut r0, mut r1) = (p as i128, a as i128);
    let (mut s0, mut s1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    debug_assert_eq!(r0, 1, "modulus must be prime");
    Ok(s0.rem_euclid(p as i128) as u64)
}

// -- raw polynomial helpers over F_p (u64 coefficient vectors, no
//    trailing-zero guarantee needed internally) --

fn raw_trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn raw_rem(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    let mut r: Vec<u64> = a.to_vec();
    raw_trim(&mut r);
    let dm = m.len() - 1;
    let lead_inv = inv_mod(m[dm], p).expect("monic or unit leading coefficient");
    while r.len() > dm {
        let lead = *r.last().unwrap();
        if lead != 0 {
            let c = mul_mod(lead, lead_inv, p);
            let k = r.len() - 1 - dm;
            for (i, &mi) in m.iter().enumerate() {
                let sub = mul_mod(c, mi, p);
                r[k + i] = (r[k + i] + p - sub) % p;
            }
        }
        r.pop();
        raw_trim(&mut r);
    }
    r
}

fn raw_mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut acc = vec![0u128; a.len() + b.len() - 1];
    for (i, &u) in a.iter().enumerate() {
        for (j, &v) in b.iter().enumerate() {
            acc[i + j] += u as u128 * v as u128;
        }
    }
    acc.iter().map(|&t| (t % p as u128) as u64).collect()
}

/// Inverse of `a` modulo the monic polynomial `m` over F_p.
fn poly_inv_mod(a: &[u64], m: &[u64], p: u64) -> Result<Vec<u64>> {
    let mut a = a.to_vec();
    raw_trim(&mut a);
    if a.is_empty() {
        return Err(Error::DivisionByZero);
    }
    // Extended Euclid: track s with s*a = r mod m.
    let (mut r0, mut r1) = (m.to_vec(), a);
    let (mut s0, mut s1) = (Vec::new(), vec![1u64]);
    while !r1.is_empty() {
        // divide r0 by r1
        let d1 = r1.len() - 1;
        let lead_inv = inv_mod(r1[d1], p)?;
        let mut q = vec![0u64; r0.len().saturating_sub(d1)];
        let mut rem = r0.clone();
        while rem.len() > d1 {
            let lead = *rem.last().unwrap();
            let k = rem.len() - 1 - d1;
            if lead != 0 {
                let c = mul_mod(lead, lead_inv, p);
                q[k] = c;
                for (i, &mi) in r1.iter().enumerate() {
                    let sub = mul_mod(c, mi, p);
                    rem[k + i] = (rem[k + i] + p - sub) % p;
                }
            }
            rem.pop();
            raw_trim(&mut rem);
        }
        // (r0, r1) = (r1, rem); (s0, s1) = (s1, s0 - q*s1)
        let qs1 = raw_mul(&q, &s1, p);
        let mut s2 = s0.clone();
        s2.resize(s2.len().max(qs1.len()), 0);
        for (i, &t) in qs1.iter().enumerate() {
            s2[i] = (s2[i] + p - t) % p;
        }
        raw_trim(&mut s2);
        r0 = std::mem::take(&mut r1);
        r1 = rem;
        s0 = std::mem::take(&mut s1);
        s1 = s2;
    }
    // r0 = gcd; must be a nonzero constant for invertibility.
    if r0.len() != 1 {
        return Err(Error::DivisionByZero);
    }
    let c = inv_mod(r0[0], p)?;
    let mut out: Vec<u64> = s0.iter().map(|&t| mul_mod(t, c, p)).collect();
    out = raw_rem(&out, m, p);
    Ok(out)
}

/// Lexicographically least monic irreducible polynomial of degree d over
/// F_p. Candidates are ordered by their coefficient tuple (c_0, ...,
/// c_{d-1}) read as big-endian base-p digits.
fn least_irreducible(p: u64, d: usize) -> Vec<u64> {
    let total = (p as u128).pow(d as u32);
    for k in 0..total {
        let mut coeffs = vec![0u64; d + 1];
        coeffs[d] = 1;
        let mut k = k;
        for i in (0..d).rev() {
            coeffs[i] = (k % p as u128) as u64;
            k /= p as u128;
        }
        if raw_is_irreducible(&coeffs, p) {
            return coeffs;
        }
    }
    unreachable!("irreducible polynomials of every degree exist over F_p")
}

/// Irreducibility over F_p via the x^(p^i) - x gcd criterion.
fn raw_is_irreducible(f: &[u64], p: u64) -> bool {
    let d = f.len() - 1;
    if d == 0 {
        return false;
    }
    if d == 1 {
        return true;
    }
    // x^(p^d) = x mod f, and gcd(x^(p^i) - x, f) = 1 for 1 <= i <= d/2.
    let x = vec![0u64, 1];
    let mut xp = x.clone();
    for i in 1..=d {
        xp = raw_pow_mod(&xp, p, f, p);
        if i <= d / 2 {
            let mut diff = xp.clone();
            diff.resize(diff.len().max(2), 0);
            diff[1] = (diff[1] + p - 1) % p;
            raw_trim(&mut diff);
            if raw_gcd(&diff, f, p).len() != 1 {
                return false;
            }
        }
    }
    // check x^(p^d) == x
    let mut diff = xp;
    diff.resize(diff.len().max(2), 0);
    diff[1] = (diff[1] + p - 1) % p;
    raw_trim(&mut diff);
    diff.is_empty()
}

fn raw_pow_mod(a: &[u64], mut e: u64, m: &[u64], p: u64) -> Vec<u64> {
    let mut result = vec![1u64];
    let mut base = raw_rem(a, m, p);
    while e > 0 {
        if e & 1 == 1 {
            result = raw_rem(&raw_mul(&result, &base, p), m, p);
        }
        base = raw_rem(&raw_mul(&base, &base, p), m, p);
        e >>= 1;
    }
    result
}

fn raw_gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    raw_trim(&mut a);
    raw_trim(&mut b);
    while !b.is_empty() {
        let r = raw_rem(&a, &b, p);
        a = b;
        b = r;
    }
    if let Some(&lead) = a.last() {
        let c = inv_mod(lead, p).unwrap();
        for t in a.iter_mut() {
            *t = mul_mod(*t, c, p);
        }
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals_and_prime_fields() {
        let q = Field::new(0, 1).unwrap();
        assert!(q.is_rational());
        let f3 = Field::new(3, 1).unwrap();
        assert_eq!(f3.characteristic(), 3);
        assert!(Field::new(4, 1).is_err());
        assert!(Field::new(0, 2).is_err());
        assert!(Field::new(2, 13).is_err()); // beyond default cap
        assert!(Field::with_cap(2, 13, 16).is_ok());
    }

    #[test]
    fn f4_has_canonical_modulus() {
        let f4 = Field::new(2, 2).unwrap();
        // unique monic irreducible quadratic over F_2: t^2 + t + 1
        assert_eq!(f4.modulus(), Some(&[1, 1, 1][..]));
        // determinism: same spec twice
        assert_eq!(f4, Field::new(2, 2).unwrap());
    }

    #[test]
    fn scalar_arith_examples() {
        // inv(3) in F_4 where 3 reduces to 1
        let f4 = Field::new(2, 2).unwrap();
        let three = f4.from_i64(3);
        assert!(f4.is_one(&three));
        assert!(f4.is_one(&f4.inv(&three).unwrap()));
        // inv(2) in F_3 is 2
        let f3 = Field::new(3, 1).unwrap();
        assert_eq!(f3.inv(&f3.from_i64(2)).unwrap(), f3.from_i64(2));
        // omega^3 = 1 in F_4 for omega a root of t^2+t+1
        let omega = f4.generator_power(1);
        assert!(f4.is_one(&f4.pow(&omega, 3).unwrap()));
        assert!(!f4.is_one(&f4.pow(&omega, 2).unwrap()));
        // zero inversion fails
        assert_eq!(f4.inv(&f4.zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn mixed_field_validation() {
        let q = Field::rationals();
        let f3 = Field::new(3, 1).unwrap();
        let f9 = Field::new(3, 2).unwrap();
        assert!(q.validate(&f3.one()).is_err());
        assert!(f3.validate(&q.one()).is_err());
        assert!(f9.validate(&f3.one()).is_err());
        assert!(f9.validate(&f9.one()).is_ok());
    }

    #[test]
    fn enumeration_is_canonical() {
        let f9 = Field::new(3, 2).unwrap();
        let all: Vec<Scalar> = f9.enumerate().collect();
        assert_eq!(all.len(), 9);
        assert_eq!(all[0], f9.zero());
        assert_eq!(all[1], f9.one());
        // all distinct
        let mut sorted = all.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), 9);
    }

    #[test]
    fn pth_root_inverts_frobenius() {
        for (p, d) in [(2, 3), (3, 2), (5, 1)] {
            let f = Field::new(p, d).unwrap();
            for a in f.enumerate() {
                let r = f.pth_root(&a);
                assert_eq!(f.pow(&r, p as i64).unwrap(), a);
            }
        }
    }

    #[test]
    fn field_axioms_on_f8() {
        let f8 = Field::new(2, 3).unwrap();
        let elems: Vec<Scalar> = f8.enumerate().collect();
        for a in &elems {
            if !f8.is_zero(a) {
                let inv = f8.inv(a).unwrap();
                assert!(f8.is_one(&f8.mul(a, &inv)));
            }
            for b in &elems {
                assert_eq!(f8.mul(a, b), f8.mul(b, a));
                for c in &elems {
                    let left = f8.mul(&f8.mul(a, b), c);
                    let right = f8.mul(a, &f8.mul(b, c));
                    assert_eq!(left, right);
                    let dist_l = f8.mul(a, &f8.add(b, c));
                    let dist_r = f8.add(&f8.mul(a, b), &f8.mul(a, c));
                    assert_eq!(dist_l, dist_r);
                }
            }
        }
    }

    #[test]
    fn rational_arithmetic_is_exact() {
        let q = Field::rationals();
        let a = q.from_ratio(1, 3).unwrap();
        let b = q.from_ratio(1, 6).unwrap();
        let s = q.add(&a, &b);
        assert_eq!(s, q.from_ratio(1, 2).unwrap());
        assert_eq!(q.render(&s), "1/2");
        assert!(q.is_one(&q.mul(&s, &q.from_i64(2))));
    }
}
