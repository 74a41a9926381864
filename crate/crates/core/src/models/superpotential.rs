//! Laurent-polynomial superpotentials and exhaustive critical-point
//! search over the units of a finite field.

use crate::error::{Error, Result};
use crate::field::{factor, Field, Scalar, UniPoly};
use crate::linalg::Matrix;
use crate::par;

/// A Laurent polynomial with exact coefficients and integer exponent
/// vectors (possibly negative).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Superpotential {
    num_vars: usize,
    terms: Vec<(Scalar, Vec<i64>)>,
}

impl Superpotential {
    pub fn new(num_vars: usize, terms: Vec<(Scalar, Vec<i64>)>) -> Result<Superpotential> {
        if num_vars == 0 || terms.is_empty() {
            return Err(Error::InvariantViolation(
                "a superpotential needs at least one variable and one term".into(),
            ));
        }
        let mut seen = std::collections::BTreeSet::new();
        for (_, e) in &terms {
            if e.len() != num_vars {
                return Err(Error::InvariantViolation(
                    "exponent vector arity mismatch".into(),
                ));
            }
            if !seen.insert(e.clone()) {
                return Err(Error::InvariantViolation(format!(
                    "duplicate exponent vector {e:?}"
                )));
            }
        }
        Ok(Superpotential { num_vars, terms })
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn terms(&self) -> &[(Scalar, Vec<i64>)] {
        &self.terms
    }

    fn monomial(field: &Field, point: &[Scalar], exps: &[i64]) -> Scalar {
        let mut acc = field.one();
        for (x, &e) in point.iter().zip(exps) {
            if e != 0 {
                acc = field.mul(&acc, &field.pow(x, e).expect("point coordinates are units"));
            }
        }
        acc
    }

    /// Value of x_i dW/dx_i at a point of the torus.
    fn log_derivative_at(&self, field: &Field, point: &[Scalar], i: usize) -> Scalar {
        let mut acc = field.zero();
        for (c, e) in &self.terms {
            if e[i] == 0 {
                continue;
            }
            let coeff = field.mul(c, &field.from_i64(e[i]));
            if field.is_zero(&coeff) {
                continue;
            }
            acc = field.add(&acc, &field.mul(&coeff, &Self::monomial(field, point, e)));
        }
        acc
    }

    /// Value of d^2 W / dx_i dx_j at a point of the torus.
    fn hessian_at(&self, field: &Field, point: &[Scalar], i: usize, j: usize) -> Scalar {
        let mut acc = field.zero();
        for (c, e) in &self.terms {
            let factor = if i == j {
                e[i] * (e[i] - 1)
            } else {
                e[i] * e[j]
            };
            if factor == 0 {
                continue;
            }
            let coeff = field.mul(c, &field.from_i64(factor));
            if field.is_zero(&coeff) {
                continue;
            }
            let mut shifted = e.clone();
            shifted[i] -= 1;
            shifted[j] -= 1;
            acc = field.add(&acc, &field.mul(&coeff, &Self::monomial(field, point, &shifted)));
        }
        acc
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriticalPoint {
    pub coords: Vec<Scalar>,
    pub nondegenerate: bool,
    /// Root multiplicity in the Jacobian ideal; computed through
    /// univariate factorization, so only reported for one variable.
    pub multiplicity: Option<usize>,
}

#[derive(Clone, Debug)]
pub struct CriticalReport {
    /// The field that was searched exhaustively.
    pub field: Field,
    pub points: Vec<CriticalPoint>,
    /// True when the search covered all of (F^x)^n.
    pub complete: bool,
}

pub const DEFAULT_SEARCH_BOUND: u128 = 4_000_000;

/// Exhaustively enumerate the critical points of `w` on the torus
/// (F^x)^n of a finite field, with exact Hessian nondegeneracy flags.
pub fn toric_critical_points(
    w: &Superpotential,
    field: &Field,
    search_bound: u128,
) -> Result<CriticalReport> {
    search(w, field, search_bound, true)
}

/// Sequential twin of [`toric_critical_points`], kept callable alongside
/// the parallel path so benchmarks can compare the two.
pub fn toric_critical_points_seq(
    w: &Superpotential,
    field: &Field,
    search_bound: u128,
) -> Result<CriticalReport> {
    search(w, field, search_bound, false)
}

fn search(
    w: &Superpotential,
    field: &Field,
    search_bound: u128,
    parallel: bool,
) -> Result<CriticalReport> {
    let n = w.num_vars;
    if n > 4 {
        return Err(Error::InvariantViolation(
            "critical-point search is capped at 4 variables".into(),
        ));
    }
    let order = field.order().ok_or(Error::InfiniteSearchDomain)?;
    let units_count = order - 1;
    let size = units_count.pow(n as u32);
    if size > search_bound {
        return Err(Error::SearchBoundExceeded {
            size,
            bound: search_bound,
        });
    }
    let units: Vec<Scalar> = field.enumerate().filter(|s| !field.is_zero(s)).collect();
    let u = units.len();

    let scan = |outer: usize| -> Vec<CriticalPoint> {
        let mut found = Vec::new();
        let inner = (u as u128).pow((n - 1) as u32);
        let mut point: Vec<Scalar> = vec![field.one(); n];
        point[0] = units[outer].clone();
        for k in 0..inner {
            let mut idx = k;
            for slot in 1..n {
                point[slot] = units[(idx % u as u128) as usize].clone();
                idx /= u as u128;
            }
            if (0..n).all(|i| field.is_zero(&w.log_derivative_at(field, &point, i))) {
                let mut hess = Matrix::zero(field, n, n);
                for i in 0..n {
                    for j in 0..n {
                        hess.set(i, j, w.hessian_at(field, &point, i, j));
                    }
                }
                let nondegenerate = hess.rank(field) == n;
                found.push(CriticalPoint {
                    coords: point.clone(),
                    nondegenerate,
                    multiplicity: None,
                });
            }
        }
        found
    };

    let chunks = if parallel {
        par::map_range(u, scan)
    } else {
        par::map_range_seq(u, scan)
    };
    let mut points: Vec<CriticalPoint> = chunks.into_iter().flatten().collect();
    points.sort_by(|a, b| a.coords.cmp(&b.coords));

    if n == 1 {
        annotate_multiplicities(w, field, &mut points)?;
    }

    // every reported point satisfies the critical equations exactly
    for pt in &points {
        for i in 0..n {
            if !field.is_zero(&w.log_derivative_at(field, &pt.coords, i)) {
                return Err(Error::Internal("reported point is not critical".into()));
            }
        }
    }
    Ok(CriticalReport {
        field: field.clone(),
        points,
        complete: true,
    })
}

/// For one variable, x dW/dx clears to an ordinary polynomial whose
/// factorization yields the multiplicity of each critical point.
fn annotate_multiplicities(
    w: &Superpotential,
    field: &Field,
    points: &mut [CriticalPoint],
) -> Result<()> {
    let min_exp = w
        .terms
        .iter()
        .filter(|(_, e)| e[0] != 0)
        .map(|(_, e)| e[0] - 1)
        .min()
        .unwrap_or(0);
    let max_exp = w
        .terms
        .iter()
        .filter(|(_, e)| e[0] != 0)
        .map(|(_, e)| e[0] - 1)
        .max()
        .unwrap_or(0);
    let len = (max_exp - min_exp + 1) as usize;
    let mut coeffs = vec![field.zero(); len];
    for (c, e) in &w.terms {
        if e[0] == 0 {
            continue;
        }
        let coeff = field.mul(c, &field.from_i64(e[0]));
        let slot = (e[0] - 1 - min_exp) as usize;
        coeffs[slot] = field.add(&coeffs[slot], &coeff);
    }
    let g = UniPoly::new(field, coeffs);
    if g.is_zero() {
        return Ok(());
    }
    let fac = factor(field, &g.monic(field))?;
    for (root, mult) in fac.roots(field) {
        if let Some(pt) = points.iter_mut().find(|p| p.coords[0] == root) {
            pt.multiplicity = Some(mult);
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w_x_plus_inv(field: &Field) -> Superpotential {
        Superpotential::new(
            1,
            vec![(field.one(), vec![1]), (field.one(), vec![-1])],
        )
        .unwrap()
    }

    #[test]
    fn cp1_potential_over_f3() {
        let f3 = Field::new(3, 1).unwrap();
        let w = w_x_plus_inv(&f3);
        let rep = toric_critical_points(&w, &f3, DEFAULT_SEARCH_BOUND).unwrap();
        assert!(rep.complete);
        assert_eq!(rep.points.len(), 2);
        let coords: Vec<Scalar> = rep.points.iter().map(|p| p.coords[0].clone()).collect();
        assert_eq!(coords, vec![f3.from_i64(1), f3.from_i64(2)]);
        assert!(rep.points.iter().all(|p| p.nondegenerate));
        assert!(rep.points.iter().all(|p| p.multiplicity == Some(1)));
    }

    #[test]
    fn cp1_potential_over_f2_is_degenerate() {
        let f2 = Field::new(2, 1).unwrap();
        let w = w_x_plus_inv(&f2);
        let rep = toric_critical_points(&w, &f2, DEFAULT_SEARCH_BOUND).unwrap();
        assert_eq!(rep.points.len(), 1);
        assert_eq!(rep.points[0].coords, vec![f2.one()]);
        assert!(!rep.points[0].nondegenerate);
        // x dW/dx = x^2 - 1 = (x+1)^2 over F_2: multiplicity 2
        assert_eq!(rep.points[0].multiplicity, Some(2));
    }

    #[test]
    fn quadric_torus_potential_has_three_points_over_f25() {
        // x + y + z + 1/(xy) + 1/(xz) over F_25
        let f25 = Field::new(5, 2).unwrap();
        let one = f25.one();
        let w = Superpotential::new(
            3,
            vec![
                (one.clone(), vec![1, 0, 0]),
                (one.clone(), vec![0, 1, 0]),
                (one.clone(), vec![0, 0, 1]),
                (one.clone(), vec![-1, -1, 0]),
                (one.clone(), vec![-1, 0, -1]),
            ],
        )
        .unwrap();
        let rep = toric_critical_points(&w, &f25, DEFAULT_SEARCH_BOUND).unwrap();
        assert_eq!(rep.points.len(), 3);
        assert!(rep.points.iter().all(|p| p.nondegenerate));
    }

    #[test]
    fn sequential_and_parallel_agree() {
        let f7 = Field::new(7, 1).unwrap();
        let w = Superpotential::new(
            2,
            vec![
                (f7.one(), vec![1, 0]),
                (f7.one(), vec![0, 1]),
                (f7.one(), vec![-1, -1]),
            ],
        )
        .unwrap();
        let a = toric_critical_points(&w, &f7, DEFAULT_SEARCH_BOUND).unwrap();
        let b = toric_critical_points_seq(&w, &f7, DEFAULT_SEARCH_BOUND).unwrap();
        assert_eq!(a.points, b.points);
        // CP^2 potential: x^3 = 1, y = x, so 3 points iff cube roots
        // exist; over F_7 they do
        assert_eq!(a.points.len(), 3);
    }

    #[test]
    fn infinite_field_rejected() {
        let q = Field::rationals();
        let w = w_x_plus_inv(&q);
        assert!(matches!(
            toric_critical_points(&w, &q, DEFAULT_SEARCH_BOUND),
            Err(Error::InfiniteSearchDomain)
        ));
    }

    #[test]
    fn search_bound_enforced() {
        let f7 = Field::new(7, 1).unwrap();
        let w = w_x_plus_inv(&f7);
        assert!(matches!(
            toric_critical_points(&w, &f7, 3),
            Err(Error::SearchBoundExceeded { .. })
        ));
    }

    #[test]
    fn duplicate_exponents_rejected() {
        let f3 = Field::new(3, 1).unwrap();
        assert!(Superpotential::new(
            1,
            vec![(f3.one(), vec![1]), (f3.from_i64(2), vec![1])]
        )
        .is_err());
    }
}
