//! Koszul twisted complexes: iterated cones on commuting even-degree
//! edges, modeled on the classical Koszul complex. Built out of the base
//! object with 2^m summands for m edges; the level-j edge morphisms are
//! diagonal left multiplications and every diagonal correction term
//! vanishes over a formal base.

use super::{cone, mc_check, TwMorphism, TwObject};
use crate::algebra::{Algebra, Element};
use crate::error::{Error, Result};
use std::sync::Arc;

#[derive(Clone, Debug)]
pub struct KoszulComplex {
    /// The 2^m-summand twisted complex.
    pub object: TwObject,
    /// The edges (a_i, s_i): a_i of even degree -s_i.
    pub edges: Vec<(Element, i64)>,
    /// The intermediate cones K_0 (the base object) through K_m = object.
    pub levels: Vec<TwObject>,
}

impl KoszulComplex {
    pub fn base(&self) -> &Arc<Algebra> {
        self.object.base()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// The morphism a_{i,j}: K_j[s_i] -> K_j (diagonal left
    /// multiplication by the i-th edge on the j-th level).
    pub fn edge_morphism(&self, i: usize, level: usize) -> Result<TwMorphism> {
        let (a, s) = &self.edges[i];
        TwMorphism::diagonal(&self.levels[level], a, *s)
    }

    /// The diagonal correction term c_{i,j}, identically zero over a
    /// formal base.
    pub fn diagonal_term(&self, _i: usize, _level: usize) -> Element {
        self.object.base().zero()
    }
}

/// Build the Koszul twisted complex on the given edges. Each edge must
/// be homogeneous of even degree -s_i with s_i an even nonnegative
/// shift; the Maurer-Cartan equation is re-checked on the result.
pub fn koszul_build(base: Arc<Algebra>, edges: &[(Element, i64)]) -> Result<KoszulComplex> {
    let m = base.effective_modulus();
    for (a, s) in edges {
        if *s < 0 || s % 2 != 0 {
            return Err(Error::DegreeMismatch(format!(
                "edge shift {s} must be even and nonnegative"
            )));
        }
        if !base.is_zero(a) {
            match base.degree_class(a) {
                Some(d) if (d + s).rem_euclid(m) == 0 && d % 2 == 0 => {}
                _ => {
                    return Err(Error::DegreeMismatch(format!(
                        "edge is not homogeneous of even degree -{s} mod {m}"
                    )))
                }
            }
        }
    }
    let mut levels = vec![TwObject::base_object(Arc::clone(&base))];
    for (a, s) in edges {
        let prev = levels.last().unwrap();
        let f = TwMorphism::diagonal(prev, a, *s)?;
        if !f.is_closed() {
            return Err(Error::NotClosed);
        }
        levels.push(cone(&f)?);
    }
    let object = levels.last().unwrap().clone();
    if mc_check(&object).is_err() {
        return Err(Error::Internal("Koszul complex fails Maurer-Cartan".into()));
    }
    Ok(KoszulComplex {
        object,
        edges: edges.to_vec(),
        levels,
    })
}

/// Classical compact groups without torsion, used to derive Koszul
/// shifts from the exterior-generator degrees of their cohomology.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LieGroup {
    U(u32),
    SU(u32),
    Sp(u32),
}

impl LieGroup {
    pub fn parse(s: &str) -> Result<LieGroup> {
        let s = s.trim();
        let parse_n = |inner: &str| -> Result<u32> {
            inner
                .parse::<u32>()
                .map_err(|_| Error::UnsupportedGroup(s.to_string()))
        };
        if let Some(rest) = s.strip_prefix("SU(") {
            let inner = rest.strip_suffix(')').ok_or_else(|| Error::UnsupportedGroup(s.into()))?;
            return Ok(LieGroup::SU(parse_n(inner)?));
        }
        if let Some(rest) = s.strip_prefix("Sp(") {
            let inner = rest.strip_suffix(')').ok_or_else(|| Error::UnsupportedGroup(s.into()))?;
            return Ok(LieGroup::Sp(parse_n(inner)?));
        }
        if let Some(rest) = s.strip_prefix("U(") {
            let inner = rest.strip_suffix(')').ok_or_else(|| Error::UnsupportedGroup(s.into()))?;
            return Ok(LieGroup::U(parse_n(inner)?));
        }
        Err(Error::UnsupportedGroup(s.to_string()))
    }
}

impl std::fmt::Display for LieGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            LieGroup::U(n) => write!(f, "U({n})"),
            LieGroup::SU(n) => write!(f, "SU({n})"),
            LieGroup::Sp(n) => write!(f, "Sp({n})"),
        }
    }
}

/// Even Koszul shifts for the classical torsion-free groups: the
/// exterior generator degrees of H^*(G) minus one.
///
/// U(n): generators x_1, x_3, ..., x_{2n-1} -> shifts 0, 2, ..., 2n-2;
/// SU(n): x_3, ..., x_{2n-1} -> 2, ..., 2n-2;
/// Sp(n): x_3, x_7, ..., x_{4n-1} -> 2, 6, ..., 4n-2.
pub fn loop_group_shifts(group: LieGroup) -> Result<Vec<i64>> {
    match group {
        LieGroup::U(n) if n >= 1 => Ok((1..=n as i64).map(|k| 2 * k - 2).collect()),
        LieGroup::SU(n) if n >= 1 => Ok((2..=n as i64).map(|k| 2 * k - 2).collect()),
        LieGroup::Sp(n) if n >= 1 => Ok((1..=n as i64).map(|k| 4 * k - 2).collect()),
        g => Err(Error::UnsupportedGroup(g.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use crate::models::qh_quadric3;

    #[test]
    fn shift_tables() {
        assert_eq!(loop_group_shifts(LieGroup::SU(2)).unwrap(), vec![2]);
        assert_eq!(loop_group_shifts(LieGroup::SU(3)).unwrap(), vec![2, 4]);
        assert_eq!(loop_group_shifts(LieGroup::Sp(2)).unwrap(), vec![2, 6]);
        assert_eq!(loop_group_shifts(LieGroup::U(3)).unwrap(), vec![0, 2, 4]);
        assert_eq!(loop_group_shifts(LieGroup::SU(1)).unwrap(), Vec::<i64>::new());
    }

    #[test]
    fn parse_groups() {
        assert_eq!(LieGroup::parse("SU(2)").unwrap(), LieGroup::SU(2));
        assert_eq!(LieGroup::parse("Sp(4)").unwrap(), LieGroup::Sp(4));
        assert!(matches!(
            LieGroup::parse("SO(3)"),
            Err(Error::UnsupportedGroup(_))
        ));
        assert!(matches!(
            LieGroup::parse("Spin(7)"),
            Err(Error::UnsupportedGroup(_))
        ));
    }

    #[test]
    fn one_edge_build_matches_the_model_complex() {
        let f2 = Field::new(2, 1).unwrap();
        let base = Arc::new(qh_quadric3(&f2).unwrap());
        let e = base.generator("E").unwrap().clone();
        let k = koszul_build(Arc::clone(&base), &[(e.clone(), 2)]).unwrap();
        assert_eq!(k.object.shifts(), &[3, 0]);
        assert_eq!(k.object.delta()[1][0], base.neg(&e));
        assert_eq!(k.levels.len(), 2);
    }

    #[test]
    fn zero_edges_is_the_base_object() {
        let f2 = Field::new(2, 1).unwrap();
        let base = Arc::new(qh_quadric3(&f2).unwrap());
        let k = koszul_build(Arc::clone(&base), &[]).unwrap();
        assert_eq!(k.object, TwObject::base_object(base));
    }

    #[test]
    fn two_commuting_edges_satisfy_mc() {
        let q = Field::rationals();
        let base = Arc::new(qh_quadric3(&q).unwrap());
        let h = base.generator("H").unwrap().clone();
        let e = base.generator("E").unwrap().clone();
        // H has degree 2 = -4 mod 6, E has degree 4 = -2 mod 6
        let k = koszul_build(Arc::clone(&base), &[(h, 4), (e, 2)]).unwrap();
        assert_eq!(k.object.summands(), 4);
        assert!(mc_check(&k.object).is_ok());
        // edge morphisms at every level are closed
        for i in 0..2 {
            for level in 0..2 {
                assert!(k.edge_morphism(i, level).unwrap().is_closed());
            }
        }
    }

    #[test]
    fn odd_shift_rejected() {
        let f2 = Field::new(2, 1).unwrap();
        let base = Arc::new(qh_quadric3(&f2).unwrap());
        let e = base.generator("E").unwrap().clone();
        assert!(koszul_build(Arc::clone(&base), &[(e, 3)]).is_err());
    }
}
