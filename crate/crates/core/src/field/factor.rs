//! Univariate polynomial factorization.
//!
//! Finite fields use deterministic Berlekamp: the Frobenius null space
//! plus character/trace splitting, falling back to exhaustive constant
//! enumeration (the base fields are tiny, and determinism keeps outputs
//! reproducible). Over the rationals the scope is deliberately limited:
//! squarefree (Yun) decomposition and rational roots, certifying
//! irreducibility only up to degree 3; anything deeper is returned
//! unsplit with `complete = false`.

use super::poly::UniPoly;
use super::{Field, Scalar};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use num::bigint::BigInt;
use num::{One, Signed, Zero};

/// Result of [`factor`]: monic factors with multiplicities, sorted
/// canonically, whose product reassembles the input exactly. Each factor
/// is irreducible when `complete` is true; otherwise factors of degree
/// >= 4 over the rationals may secretly be composite.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub factors: Vec<(UniPoly, usize)>,
    pub complete: bool,
}

impl Factorization {
    pub fn product(&self, field: &Field) -> UniPoly {
        let mut acc = UniPoly::one(field);
        for (f, m) in &self.factors {
            for _ in 0..*m {
                acc = acc.mul(field, f);
            }
        }
        acc
    }

    /// Roots in the ground field, read off the linear factors.
    pub fn roots(&self, field: &Field) -> Vec<(Scalar, usize)> {
        self.factors
            .iter()
            .filter(|(f, _)| f.degree() == Some(1))
            .map(|(f, m)| (field.neg(&f.coeff(field, 0)), *m))
            .collect()
    }
}

/// Squarefree part (radical): monic, same root set over the closure.
/// Over characteristic p, p-th power content is peeled off through
/// coefficient p-th roots, which is valid because our fields are perfect.
pub fn squarefree_part(field: &Field, f: &UniPoly) -> Result<UniPoly> {
    if f.degree().unwrap_or(0) == 0 {
        return Err(Error::BadPolynomial);
    }
    Ok(radical(field, &f.monic(field)))
}

fn radical(field: &Field, f: &UniPoly) -> UniPoly {
    if f.degree().unwrap_or(0) == 0 {
        return UniPoly::one(field);
    }
    let deriv = f.derivative(field);
    if deriv.is_zero() {
        // f = g(x^p); replace by the p-th root of its coefficients.
        return radical(field, &pth_root_poly(field, f));
    }
    let g = f.gcd(field, &deriv);
    let w = f.div_exact(field, &g).unwrap().monic(field);
    // w carries each factor of multiplicity not divisible by p exactly
    // once; strip those from f entirely, what is left is a p-th power.
    let mut v = f.clone();
    loop {
        let h = v.gcd(field, &w);
        if h.degree() == Some(0) {
            break;
        }
        v = v.div_exact(field, &h).unwrap();
    }
    if v.degree().unwrap_or(0) == 0 {
        return w;
    }
    w.mul(field, &radical(field, &pth_root_poly(field, &v.monic(field))))
        .monic(field)
}

/// For f with f' = 0 in characteristic p, the polynomial g with
/// g(x)^p = f(x).
fn pth_root_poly(field: &Field, f: &UniPoly) -> UniPoly {
    let p = field.characteristic() as usize;
    assert!(p > 0, "vanishing derivative is impossible in char 0");
    let mut out = Vec::new();
    for (k, c) in f.coeffs().iter().enumerate() {
        if k % p == 0 {
            out.push(field.pth_root(c));
        } else {
            debug_assert!(field.is_zero(c));
        }
    }
    UniPoly::new(field, out)
}

/// Factor a monic nonconstant polynomial into monic factors with
/// multiplicities, sorted by (degree, coefficients).
pub fn factor(field: &Field, f: &UniPoly) -> Result<Factorization> {
    if f.degree().unwrap_or(0) == 0 || !f.is_monic(field) {
        return Err(Error::BadPolynomial);
    }
    let mut result = if field.characteristic() == 0 {
        factor_rationals(field, f)?
    } else {
        factor_finite(field, f)?
    };
    result
        .factors
        .sort_by(|(a, _), (b, _)| a.degree().cmp(&b.degree()).then_with(|| a.coeffs().cmp(b.coeffs())));
    debug_assert_eq!(result.product(field), *f);
    Ok(result)
}

/// Convenience wrapper: is a monic nonconstant polynomial irreducible?
pub fn is_irreducible(field: &Field, f: &UniPoly) -> Result<bool> {
    let fac = factor(field, f)?;
    if !fac.complete {
        return Err(Error::IncompleteFactorization(f.render(field, "x")));
    }
    Ok(fac.factors.len() == 1 && fac.factors[0].1 == 1)
}

fn factor_finite(field: &Field, f: &UniPoly) -> Result<Factorization> {
    let rad = radical(field, f);
    let irreducibles = berlekamp_squarefree(field, &rad)?;
    let mut factors = Vec::new();
    for g in irreducibles {
        let mut m = 0usize;
        let mut rest = f.clone();
        loop {
            let (q, r) = rest.div_rem(field, &g)?;
            if !r.is_zero() {
                break;
            }
            m += 1;
            rest = q;
        }
        debug_assert!(m > 0);
        factors.push((g, m));
    }
    Ok(Factorization {
        factors,
        complete: true,
    })
}

/// Deterministic Berlekamp for a monic squarefree polynomial over F_q.
fn berlekamp_squarefree(field: &Field, f: &UniPoly) -> Result<Vec<UniPoly>> {
    let n = f.degree().unwrap();
    if n == 1 {
        return Ok(vec![f.clone()]);
    }
    let q = field.order().ok_or(Error::InfiniteSearchDomain)?;

    // Frobenius matrix: column j holds x^(jq) mod f.
    let xq = UniPoly::x(field).pow_mod(field, q, f)?;
    let mut frob = Matrix::zero(field, n, n);
    let mut col = UniPoly::one(field);
    for j in 0..n {
        for i in 0..n {
            frob.set(i, j, col.coeff(field, i));
        }
        if j + 1 < n {
            col = col.mul(field, &xq).rem(field, f)?;
        }
    }
    for i in 0..n {
        let d = field.sub(frob.get(i, i), &field.one());
        frob.set(i, i, d);
    }
    let null = frob.kernel_basis(field);
    let expected = null.len();
    if expected == 1 {
        return Ok(vec![f.clone()]);
    }
    let null_polys: Vec<UniPoly> = null
        .iter()
        .map(|v| UniPoly::new(field, v.clone()))
        .collect();

    let mut factors = vec![f.clone()];
    // Pass 1: character/trace splitting with each null-space vector.
    for v in &null_polys {
        if factors.len() == expected {
            break;
        }
        factors = split_pass(field, factors, v, q)?;
    }
    // Pass 2 (rare): exhaustive constants, guaranteed complete.
    if factors.len() != expected {
        'outer: for v in &null_polys {
            for c in field.enumerate() {
                if factors.len() == expected {
                    break 'outer;
                }
                let shift = UniPoly::constant(field, c);
                let mut next = Vec::new();
                for g in factors {
                    if g.degree() == Some(1) {
                        next.push(g);
                        continue;
                    }
                    let w = v.sub(field, &shift);
                    let d = g.gcd(field, &w);
                    let dd = d.degree().unwrap_or(0);
                    if dd > 0 && dd < g.degree().unwrap() {
                        next.push(g.div_exact(field, &d)?.monic(field));
                        next.push(d);
                    } else {
                        next.push(g);
                    }
                }
                next.sort_by(|a, b| a.coeffs().cmp(b.coeffs()));
                factors = next;
            }
        }
    }
    if factors.len() != expected {
        return Err(Error::Internal(
            "Berlekamp splitting did not reach the factor count".into(),
        ));
    }
    Ok(factors)
}

fn split_pass(
    field: &Field,
    factors: Vec<UniPoly>,
    v: &UniPoly,
    q: u128,
) -> Result<Vec<UniPoly>> {
    let mut out = Vec::new();
    for g in factors {
        if g.degree() == Some(1) {
            out.push(g);
            continue;
        }
        let w = v.rem(field, &g)?;
        if w.degree().unwrap_or(0) == 0 {
            out.push(g);
            continue;
        }
        let mut parts = Vec::new();
        if field.characteristic() == 2 {
            // Trace to F_2 of the Berlekamp element.
            let mut tr = w.clone();
            let mut sq = w.clone();
            let steps = (q.trailing_zeros().max(1)) as usize; // q = 2^k
            let k = (128 - q.leading_zeros() - 1) as usize;
            let _ = steps;
            for _ in 1..k {
                sq = sq.mul(field, &sq).rem(field, &g)?;
                tr = tr.add(field, &sq);
            }
            parts.push(g.gcd(field, &tr));
            parts.push(g.gcd(field, &tr.sub(field, &UniPoly::one(field))));
        } else {
            let u = w.pow_mod(field, (q - 1) / 2, &g)?;
            parts.push(g.gcd(field, &w));
            parts.push(g.gcd(field, &u.sub(field, &UniPoly::one(field))));
            parts.push(g.gcd(field, &u.add(field, &UniPoly::one(field))));
        }
        let mut pieces: Vec<UniPoly> = parts
            .into_iter()
            .filter(|d| d.degree().map_or(false, |dd| dd >= 1))
            .collect();
        pieces.sort_by(|a, b| a.coeffs().cmp(b.coeffs()));
        pieces.dedup();
        let total: usize = pieces.iter().map(|d| d.degree().unwrap()).sum();
        if total == g.degree().unwrap() && pieces.len() > 1 {
            out.extend(pieces);
        } else {
            out.push(g);
        }
    }
    Ok(out)
}

fn factor_rationals(field: &Field, f: &UniPoly) -> Result<Factorization> {
    let mut factors: Vec<(UniPoly, usize)> = Vec::new();
    let mut complete = true;
    for (part, mult) in yun_squarefree(field, f)? {
        let (mut rest, roots) = strip_rational_roots(field, &part);
        for r in roots {
            let lin = UniPoly::new(field, vec![field.neg(&r), field.one()]);
            factors.push((lin, mult));
        }
        match rest.degree() {
            None | Some(0) => {}
            Some(d) if d <= 3 => {
                // no rational roots and degree <= 3: irreducible over Q
                factors.push((rest, mult));
            }
            Some(_) => {
                complete = false;
                rest = rest.monic(field);
                factors.push((rest, mult));
            }
        }
    }
    Ok(Factorization { factors, complete })
}

/// Yun's squarefree decomposition over characteristic zero:
/// f = prod_i out_i^i with the out_i squarefree and pairwise coprime.
fn yun_squarefree(field: &Field, f: &UniPoly) -> Result<Vec<(UniPoly, usize)>> {
    let mut out = Vec::new();
    let deriv = f.derivative(field);
    let mut g = f.gcd(field, &deriv);
    let mut w = f.div_exact(field, &g)?.monic(field);
    let mut i = 1usize;
    while w.degree().unwrap_or(0) > 0 {
        let y = w.gcd(field, &g);
        let z = w.div_exact(field, &y)?.monic(field);
        if z.degree().unwrap_or(0) > 0 {
            out.push((z, i));
        }
        g = g.div_exact(field, &y)?;
        w = y;
        i += 1;
    }
    Ok(out)
}

/// Remove all rational roots from a monic squarefree rational polynomial.
fn strip_rational_roots(field: &Field, f: &UniPoly) -> (UniPoly, Vec<Scalar>) {
    let mut rest = f.clone();
    let mut roots = Vec::new();
    loop {
        match find_rational_root(field, &rest) {
            Some(r) => {
                let lin = UniPoly::new(field, vec![field.neg(&r), field.one()]);
                rest = rest.div_exact(field, &lin).unwrap();
                roots.push(r);
            }
            None => break,
        }
    }
    roots.sort();
    (rest, roots)
}

fn find_rational_root(field: &Field, f: &UniPoly) -> Option<Scalar> {
    let d = f.degree()?;
    if d == 0 {
        return None;
    }
    if field.is_zero(&f.coeff(field, 0)) {
        return Some(field.zero());
    }
    // Clear denominators to an integer polynomial, then apply the
    // rational root theorem: roots are p/q with p | c_0 and q | c_d.
    let mut den = BigInt::one();
    for c in f.coeffs() {
        if let Scalar::Rat(r) = c {
            den = num::integer::lcm(den, r.denom().clone());
        }
    }
    let ints: Vec<BigInt> = f
        .coeffs()
        .iter()
        .map(|c| match c {
            Scalar::Rat(r) => (r * num::BigRational::from(den.clone()))
                .to_integer(),
            _ => unreachable!(),
        })
        .collect();
    let c0 = ints[0].abs();
    let cd = ints[d].abs();
    let num_divs = small_divisors(&c0)?;
    let den_divs = small_divisors(&cd)?;
    let mut candidates: Vec<Scalar> = Vec::new();
    for p in &num_divs {
        for q in &den_divs {
            let r = num::BigRational::new(BigInt::from(*p), BigInt::from(*q));
            candidates.push(Scalar::Rat(r.clone()));
            candidates.push(Scalar::Rat(-r));
        }
    }
    candidates.sort();
    candidates.dedup();
    candidates
        .into_iter()
        .find(|cand| field.is_zero(&f.eval(field, cand)))
}

/// Positive divisors, provided the number fits comfortably in i64.
fn small_divisors(n: &BigInt) -> Option<Vec<i64>> {
    if n.is_zero() {
        return Some(vec![1]);
    }
    let n: i64 = n.try_into().ok()?;
    let n = n.abs();
    let mut divs = Vec::new();
    let mut d = 1i64;
    while d * d <= n {
        if n % d == 0 {
            divs.push(d);
            divs.push(n / d);
        }
        d += 1;
    }
    Some(divs)
}
