//! Dense univariate polynomials over a [`Field`].

use super::{Field, Scalar};
use crate::error::{Error, Result};

/// A univariate polynomial in canonical form: coefficients indexed by
/// degree, no trailing zeros, the zero polynomial being empty.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct UniPoly {
    coeffs: Vec<Scalar>,
}

impl UniPoly {
    pub fn new(field: &Field, mut coeffs: Vec<Scalar>) -> UniPoly {
        while coeffs.last().map_or(false, |c| field.is_zero(c)) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> UniPoly {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one(field: &Field) -> UniPoly {
        UniPoly {
            coeffs: vec![field.one()],
        }
    }

    pub fn constant(field: &Field, c: Scalar) -> UniPoly {
        UniPoly::new(field, vec![c])
    }

    /// The monomial `x`.
    pub fn x(field: &Field) -> UniPoly {
        UniPoly {
            coeffs: vec![field.zero(), field.one()],
        }
    }

    /// Build from i64 coefficients, constant term first.
    pub fn from_i64(field: &Field, coeffs: &[i64]) -> UniPoly {
        UniPoly::new(field, coeffs.iter().map(|&c| field.from_i64(c)).collect())
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn coeff(&self, field: &Field, k: usize) -> Scalar {
        self.coeffs.get(k).cloned().unwrap_or_else(|| field.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports None.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Scalar> {
        self.coeffs.last()
    }

    pub fn is_monic(&self, field: &Field) -> bool {
        self.leading().map_or(false, |c| field.is_one(c))
    }

    pub fn add(&self, field: &Field, other: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(field.add(&self.coeff(field, k), &other.coeff(field, k)));
        }
        UniPoly::new(field, out)
    }

    pub fn sub(&self, field: &Field, other: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(field.sub(&self.coeff(field, k), &other.coeff(field, k)));
        }
        UniPoly::new(field, out)
    }

    pub fn neg(&self, field: &Field) -> UniPoly {
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| field.neg(c)).collect(),
        }
    }

    pub fn scale(&self, field: &Field, c: &Scalar) -> UniPoly {
        if field.is_zero(c) {
            return UniPoly::zero();
        }
        UniPoly {
            coeffs: self.coeffs.iter().map(|a| field.mul(a, c)).collect(),
        }
    }

    pub fn mul(&self, field: &Field, other: &UniPoly) -> UniPoly {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![field.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if field.is_zero(a) {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = field.add(&out[i + j], &field.mul(a, b));
            }
        }
        UniPoly::new(field, out)
    }

    /// Quotient and remainder; the divisor must be nonzero.
    pub fn div_rem(&self, field: &Field, divisor: &UniPoly) -> Result<(UniPoly, UniPoly)> {
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let dd = divisor.degree().unwrap();
        let lead_inv = field.inv(divisor.leading().unwrap())?;
        let mut rem = self.coeffs.clone();
        let mut quot = vec![field.zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd {
            let lead = rem.last().unwrap().clone();
            let k = rem.len() - 1 - dd;
            if !field.is_zero(&lead) {
                let c = field.mul(&lead, &lead_inv);
                quot[k] = c.clone();
                for (i, m) in divisor.coeffs.iter().enumerate() {
                    let sub = field.mul(&c, m);
                    rem[k + i] = field.sub(&rem[k + i], &sub);
                }
            }
            rem.pop();
            while rem.last().map_or(false, |c| field.is_zero(c)) {
                rem.pop();
            }
        }
        Ok((UniPoly::new(field, quot), UniPoly::new(field, rem)))
    }

    pub fn rem(&self, field: &Field, divisor: &UniPoly) -> Result<UniPoly> {
        Ok(self.div_rem(field, divisor)?.1)
    }

    /// Exact division; errors if the remainder is nonzero.
    pub fn div_exact(&self, field: &Field, divisor: &UniPoly) -> Result<UniPoly> {
        let (q, r) = self.div_rem(field, divisor)?;
        if !r.is_zero() {
            return Err(Error::Internal("inexact polynomial division".into()));
        }
        Ok(q)
    }

    /// Monic normalization of a nonzero polynomial.
    pub fn monic(&self, field: &Field) -> UniPoly {
        match self.leading() {
            None => UniPoly::zero(),
            Some(l) => self.scale(field, &field.inv(l).unwrap()),
        }
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, field: &Field, other: &UniPoly) -> UniPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(field, &b).unwrap();
            a = b;
            b = r;
        }
        a.monic(field)
    }

    pub fn derivative(&self, field: &Field) -> UniPoly {
        if self.coeffs.len() <= 1 {
            return UniPoly::zero();
        }
        let out = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| field.mul(&field.from_i64(k as i64), c))
            .collect();
        UniPoly::new(field, out)
    }

    pub fn eval(&self, field: &Field, x: &Scalar) -> Scalar {
        let mut acc = field.zero();
        for c in self.coeffs.iter().rev() {
            acc = field.add(&field.mul(&acc, x), c);
        }
        acc
    }

    /// Substitute another polynomial, reducing modulo `m` at each step.
    pub fn compose_mod(&self, field: &Field, inner: &UniPoly, m: &UniPoly) -> Result<UniPoly> {
        let mut acc = UniPoly::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(field, inner).rem(field, m)?;
            acc = acc.add(field, &UniPoly::constant(field, c.clone()));
        }
        Ok(acc)
    }

    pub fn pow_mod(&self, field: &Field, mut e: u128, m: &UniPoly) -> Result<UniPoly> {
        let mut result = UniPoly::one(field);
        let mut base = self.rem(field, m)?;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(field, &base).rem(field, m)?;
            }
            base = base.mul(field, &base).rem(field, m)?;
            e >>= 1;
        }
        Ok(result)
    }

    /// Inverse modulo `m`, when gcd(self, m) = 1.
    pub fn inv_mod(&self, field: &Field, m: &UniPoly) -> Result<UniPoly> {
        let (mut r0, mut r1) = (m.clone(), self.rem(field, m)?);
        let (mut s0, mut s1) = (UniPoly::zero(), UniPoly::one(field));
        while !r1.is_zero() {
            let (q, r2) = r0.div_rem(field, &r1)?;
            let s2 = s0.sub(field, &q.mul(field, &s1));
            r0 = r1;
            r1 = r2;
            s0 = s1;
            s1 = s2;
        }
        match r0.degree() {
            Some(0) => {
                let c = field.inv(&r0.coeffs[0])?;
                Ok(s0.scale(field, &c).rem(field, m)?)
            }
            _ => Err(Error::DivisionByZero),
        }
    }

    /// The roots of this polynomial lying in the field itself, with
    /// multiplicities, found through factorization of the linear part.
    pub fn render(&self, field: &Field, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut terms = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if field.is_zero(c) {
                continue;
            }
            let cs = field.render(c);
            let t = match k {
                0 => cs,
                1 if field.is_one(c) => var.to_string(),
                1 => format!("{cs}*{var}"),
                _ if field.is_one(c) => format!("{var}^{k}"),
                _ => format!("{cs}*{var}^{k}"),
            };
            terms.push(t);
        }
        terms.join(" + ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form_trims_zeros() {
        let f5 = Field::new(5, 1).unwrap();
        let p = UniPoly::from_i64(&f5, &[1, 2, 0, 0]);
        assert_eq!(p.degree(), Some(1));
        assert!(UniPoly::from_i64(&f5, &[0, 0]).is_zero());
    }

    #[test]
    fn div_rem_roundtrip() {
        let f7 = Field::new(7, 1).unwrap();
        let a = UniPoly::from_i64(&f7, &[3, 0, 1, 5, 2]);
        let b = UniPoly::from_i64(&f7, &[1, 4, 1]);
        let (q, r) = a.div_rem(&f7, &b).unwrap();
        let back = q.mul(&f7, &b).add(&f7, &r);
        assert_eq!(back, a);
        assert!(r.degree() < b.degree());
    }

    #[test]
    fn gcd_of_common_factor() {
        let f5 = Field::new(5, 1).unwrap();
        let xp1 = UniPoly::from_i64(&f5, &[1, 1]);
        let xp2 = UniPoly::from_i64(&f5, &[2, 1]);
        let a = xp1.mul(&f5, &xp1);
        let b = xp1.mul(&f5, &xp2);
        assert_eq!(a.gcd(&f5, &b), xp1);
    }

    #[test]
    fn eval_and_derivative() {
        let q = Field::rationals();
        // x^3 - 2x
        let p = UniPoly::from_i64(&q, &[0, -2, 0, 1]);
        assert_eq!(p.eval(&q, &q.from_i64(2)), q.from_i64(4));
        let d = p.derivative(&q);
        assert_eq!(d, UniPoly::from_i64(&q, &[-2, 0, 3]));
    }

    #[test]
    fn inv_mod_works() {
        let f3 = Field::new(3, 1).unwrap();
        let m = UniPoly::from_i64(&f3, &[1, 0, 1]); // x^2 + 1, irreducible over F_3
        let a = UniPoly::from_i64(&f3, &[1, 1]); // x + 1
        let inv = a.inv_mod(&f3, &m).unwrap();
        let prod = a.mul(&f3, &inv).rem(&f3, &m).unwrap();
        assert_eq!(prod, UniPoly::one(&f3));
    }
}
