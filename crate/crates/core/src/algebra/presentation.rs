//! Presentations of graded-commutative algebras by generators and
//! monomial rewrite rules, with an explicit confluence check.
//!
//! Monomials are exponent vectors ordered by graded-lex (total exponent
//! degree first, ties broken lexicographically with earlier-declared
//! generators larger). Each relation sends its leading monomial to a
//! polynomial in strictly smaller monomials; local confluence is
//! verified by reducing every critical pair to a common normal form, and
//! the quotient basis is enumerated breadth-first with a cap so an
//! infinite-dimensional quotient is detected rather than looped on.

use super::{Algebra, Element};
use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};

/// Exponent vector over the declared generators.
pub type Monomial = Vec<u32>;

/// Polynomial as a map monomial -> coefficient.
type Poly = BTreeMap<Monomial, Scalar>;

#[derive(Clone, Debug)]
pub struct Relation {
    pub lhs: Monomial,
    pub rhs: Vec<(Scalar, Monomial)>,
}

#[derive(Clone, Debug)]
pub struct Presentation {
    pub field: Field,
    /// 2N; 0 means plain Z/2 grading by parity.
    pub grading_modulus: i64,
    pub generators: Vec<(String, i64)>,
    pub relations: Vec<Relation>,
    /// Bail out when the irreducible-monomial count exceeds this.
    pub max_basis: usize,
}

pub const DEFAULT_MAX_BASIS: usize = 10_000;

impl Presentation {
    pub fn new(
        field: Field,
        grading_modulus: i64,
        generators: Vec<(String, i64)>,
        relations: Vec<Relation>,
    ) -> Presentation {
        Presentation {
            field,
            grading_modulus,
            generators,
            relations,
            max_basis: DEFAULT_MAX_BASIS,
        }
    }

    fn effective_modulus(&self) -> i64 {
        if self.grading_modulus == 0 {
            2
        } else {
            self.grading_modulus
        }
    }

    fn gen_degree(&self, i: usize) -> i64 {
        self.generators[i].1
    }

    fn gen_is_odd(&self, i: usize) -> bool {
        self.gen_degree(i).rem_euclid(2) != 0
    }

    fn monomial_degree(&self, m: &Monomial) -> i64 {
        m.iter()
            .enumerate()
            .map(|(i, &e)| self.gen_degree(i) * e as i64)
            .sum()
    }

    fn render_monomial(&self, m: &Monomial) -> String {
        let mut parts = Vec::new();
        for (i, &e) in m.iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(self.generators[i].0.clone()),
                _ => parts.push(format!("{}^{}", self.generators[i].0, e)),
            }
        }
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("*")
        }
    }

    fn render_poly(&self, p: &Poly) -> String {
        if p.is_empty() {
            return "0".into();
        }
        p.iter()
            .map(|(m, c)| {
                if self.field.is_one(c) {
                    self.render_monomial(m)
                } else {
                    format!("{}*{}", self.field.render(c), self.render_monomial(m))
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }

    /// Graded-lex comparison: total exponent degree first, ties broken by
    /// the reversed exponent vector, so among monomials of equal total
    /// degree the ones in earlier-declared generators come first (H
    /// before E for declaration order H, E).
    fn grlex_less(a: &Monomial, b: &Monomial) -> bool {
        let (da, db) = (
            a.iter().map(|&e| e as u64).sum::<u64>(),
            b.iter().map(|&e| e as u64).sum::<u64>(),
        );
        if da != db {
            return da < db;
        }
        a.iter().rev().lt(b.iter().rev())
    }

    /// Sign-correct product of canonical monomials; None when the product
    /// is zero (an odd generator squared away from characteristic 2).
    fn mono_mul(&self, a: &Monomial, b: &Monomial) -> Option<(bool, Monomial)> {
        let char2 = self.field.characteristic() == 2;
        let mut neg = false;
        if !char2 {
            // count crossings of odd units in b past odd units of a with
            // larger generator index
            let mut odd_tail: u64 = a
                .iter()
                .enumerate()
                .filter(|(i, _)| self.gen_is_odd(*i))
                .map(|(_, &e)| e as u64)
                .sum();
            for (j, &bj) in b.iter().enumerate() {
                if self.gen_is_odd(j) {
                    odd_tail -= a[j] as u64;
                }
                if self.gen_is_odd(j) && bj > 0 {
                    // b_j units cross all odd units of a at indices > j
                    if (bj as u64 * odd_tail) % 2 == 1 {
                        neg = !neg;
                    }
                }
            }
        }
        let mut out = vec![0u32; a.len()];
        for i in 0..a.len() {
            out[i] = a[i] + b[i];
            if !char2 && self.gen_is_odd(i) && out[i] >= 2 {
                return None; // odd squares vanish
            }
        }
        Some((neg, out))
    }

    fn divides(lhs: &Monomial, m: &Monomial) -> bool {
        lhs.iter().zip(m.iter()).all(|(&l, &e)| l <= e)
    }

    /// Away from characteristic 2, odd generators square to zero in the
    /// ambient free graded-commutative algebra, so monomials with an odd
    /// exponent >= 2 do not exist; a relation mentioning one is
    /// meaningless.
    fn monomial_is_legal(&self, m: &Monomial) -> bool {
        self.field.characteristic() == 2
            || m.iter()
                .enumerate()
                .all(|(i, &e)| e < 2 || !self.gen_is_odd(i))
    }

    fn is_irreducible(&self, rules: &[Relation], m: &Monomial) -> bool {
        !rules.iter().any(|r| Self::divides(&r.lhs, m))
    }

    /// One rewrite step of `rule` applied at monomial `m` (which the
    /// rule's lhs must divide), as a polynomial.
    fn apply_rule(&self, rule: &Relation, m: &Monomial) -> Poly {
        let q: Monomial = m.iter().zip(&rule.lhs).map(|(&e, &l)| e - l).collect();
        // m = sigma * q * lhs as canonical monomials
        let (sigma_neg, back) = self
            .mono_mul(&q, &rule.lhs)
            .expect("q*lhs reassembles m, so it cannot vanish");
        debug_assert_eq!(&back, m);
        let mut out = Poly::new();
        for (c, r) in &rule.rhs {
            let Some((neg, prod)) = self.mono_mul(&q, r) else {
                continue;
            };
            let mut coeff = c.clone();
            if neg != sigma_neg {
                coeff = self.field.neg(&coeff);
            }
            add_term(&self.field, &mut out, prod, coeff);
        }
        out
    }

    /// Full normal form of a polynomial under the rule set.
    fn reduce(&self, rules: &[Relation], mut work: Poly) -> Poly {
        loop {
            // largest reducible monomial
            let target = work
                .keys()
                .filter(|m| !self.is_irreducible(rules, m))
                .cloned()
                .max_by(|a, b| {
                    if Self::grlex_less(a, b) {
                        std::cmp::Ordering::Less
                    } else if a == b {
                        std::cmp::Ordering::Equal
                    } else {
                        std::cmp::Ordering::Greater
                    }
                });
            let Some(m) = target else {
                return work;
            };
            let c = work.remove(&m).unwrap();
            let rule = rules
                .iter()
                .find(|r| Self::divides(&r.lhs, &m))
                .expect("monomial was reducible");
            let replaced = self.apply_rule(rule, &m);
            for (rm, rc) in replaced {
                add_term(&self.field, &mut work, rm, self.field.mul(&c, &rc));
            }
        }
    }

    fn validate(&self, rules: &[Relation]) -> Result<()> {
        let n = self.generators.len();
        let modulus = self.effective_modulus();
        if self.grading_modulus < 0 || self.grading_modulus % 2 != 0 {
            return Err(Error::InvariantViolation(
                "grading modulus must be 0 or a positive even integer".into(),
            ));
        }
        let mut names = HashSet::new();
        for (name, _) in &self.generators {
            if name.is_empty() || !names.insert(name.clone()) {
                return Err(Error::InvariantViolation(format!(
                    "generator name {name:?} is empty or duplicated"
                )));
            }
        }
        for r in rules {
            if r.lhs.len() != n || r.rhs.iter().any(|(_, m)| m.len() != n) {
                return Err(Error::InvariantViolation(
                    "relation arity does not match the generator count".into(),
                ));
            }
            if r.lhs.iter().all(|&e| e == 0) {
                return Err(Error::BadRelation {
                    lhs: "1".into(),
                    rhs: self.render_poly(&to_poly(&self.field, &r.rhs)),
                });
            }
            if !self.monomial_is_legal(&r.lhs)
                || r.rhs.iter().any(|(_, m)| !self.monomial_is_legal(m))
            {
                return Err(Error::BadRelation {
                    lhs: self.render_monomial(&r.lhs),
                    rhs: "a monomial with a squared odd generator".into(),
                });
            }
            let d = self.monomial_degree(&r.lhs);
            for (c, m) in &r.rhs {
                self.field.validate(c)?;
                if !Self::grlex_less(m, &r.lhs) {
                    return Err(Error::BadRelation {
                        lhs: self.render_monomial(&r.lhs),
                        rhs: self.render_monomial(m),
                    });
                }
                if (self.monomial_degree(m) - d).rem_euclid(modulus) != 0 {
                    return Err(Error::InhomogeneousRelation {
                        lhs: self.render_monomial(&r.lhs),
                        rhs: self.render_monomial(m),
                        modulus,
                    });
                }
            }
        }
        Ok(())
    }

    /// Verify local confluence by reducing all critical pairs.
    fn check_confluence(&self, rules: &[Relation]) -> Result<()> {
        for (i, r1) in rules.iter().enumerate() {
            for r2 in rules.iter().skip(i + 1) {
                let overlap: Monomial = r1
                    .lhs
                    .iter()
                    .zip(&r2.lhs)
                    .map(|(&a, &b)| a.max(b))
                    .collect();
                let p1 = self.reduce(rules, self.apply_rule(r1, &overlap));
                let p2 = self.reduce(rules, self.apply_rule(r2, &overlap));
                if p1 != p2 {
                    return Err(Error::NonConfluent {
                        overlap: self.render_monomial(&overlap),
                        left: self.render_poly(&p1),
                        right: self.render_poly(&p2),
                    });
                }
            }
        }
        Ok(())
    }

    /// Enumerate the irreducible monomials breadth-first. The set is
    /// closed under divisors, so expanding by one generator at a time
    /// reaches all of it.
    fn enumerate_basis(&self, rules: &[Relation]) -> Result<Vec<Monomial>> {
        let n = self.generators.len();
        let one = vec![0u32; n];
        let mut seen: HashSet<Monomial> = HashSet::new();
        let mut queue: VecDeque<Monomial> = VecDeque::new();
        seen.insert(one.clone());
        queue.push_back(one);
        while let Some(m) = queue.pop_front() {
            for i in 0..n {
                let mut next = m.clone();
                next[i] += 1;
                if self.field.characteristic() != 2 && self.gen_is_odd(i) && next[i] >= 2 {
                    continue;
                }
                if seen.contains(&next) || !self.is_irreducible(rules, &next) {
                    continue;
                }
                seen.insert(next.clone());
                if seen.len() > self.max_basis {
                    return Err(Error::InfiniteDimensional(self.max_basis));
                }
                queue.push_back(next);
            }
        }
        let mut basis: Vec<Monomial> = seen.into_iter().collect();
        basis.sort_by(|a, b| {
            if Self::grlex_less(a, b) {
                std::cmp::Ordering::Less
            } else if a == b {
                std::cmp::Ordering::Equal
            } else {
                std::cmp::Ordering::Greater
            }
        });
        Ok(basis)
    }

    /// Build the quotient algebra: verify the rules, check confluence,
    /// enumerate the basis, compute structure constants, and run the
    /// full algebra invariant battery on the result.
    pub fn build(&self) -> Result<Algebra> {
        let rules = self.relations.clone();
        self.validate(&rules)?;
        self.check_confluence(&rules)?;
        let basis = self.enumerate_basis(&rules)?;
        let index: HashMap<Monomial, usize> = basis
            .iter()
            .enumerate()
            .map(|(k, m)| (m.clone(), k))
            .collect();
        let dim = basis.len();
        let f = &self.field;
        let modulus = self.effective_modulus();

        let coords_of = |p: &Poly| -> Result<Vec<Scalar>> {
            let mut v = vec![f.zero(); dim];
            for (m, c) in p {
                let k = index.get(m).ok_or_else(|| {
                    Error::Internal(format!(
                        "normal form contains a reducible monomial {}",
                        self.render_monomial(m)
                    ))
                })?;
                v[*k] = c.clone();
            }
            Ok(v)
        };

        let mut table = Vec::with_capacity(dim * dim);
        for bi in &basis {
            for bj in &basis {
                let poly = match self.mono_mul(bi, bj) {
                    None => Poly::new(),
                    Some((neg, m)) => {
                        let coeff = if neg { f.neg(&f.one()) } else { f.one() };
                        let mut p = Poly::new();
                        p.insert(m, coeff);
                        self.reduce(&rules, p)
                    }
                };
                table.push(coords_of(&poly)?);
            }
        }
        let labels: Vec<String> = basis.iter().map(|m| self.render_monomial(m)).collect();
        let degrees: Vec<i64> = basis
            .iter()
            .map(|m| self.monomial_degree(m).rem_euclid(modulus))
            .collect();
        let alg = Algebra::from_table(f.clone(), self.grading_modulus, degrees, labels, table)?;

        // normal forms of the generators themselves, for element parsing
        let mut gens = Vec::new();
        for (i, (name, _)) in self.generators.iter().enumerate() {
            let mut m = vec![0u32; self.generators.len()];
            m[i] = 1;
            let mut p = Poly::new();
            p.insert(m, f.one());
            let nf = self.reduce(&rules, p);
            gens.push((name.clone(), Element::new(coords_of(&nf)?)));
        }
        Ok(alg.with_generators(gens))
    }
}

fn add_term(field: &Field, poly: &mut Poly, m: Monomial, c: Scalar) {
    if field.is_zero(&c) {
        return;
    }
    match poly.remove(&m) {
        None => {
            poly.insert(m, c);
        }
        Some(old) => {
            let s = field.add(&old, &c);
            if !field.is_zero(&s) {
                poly.insert(m, s);
            }
        }
    }
}

fn to_poly(field: &Field, terms: &[(Scalar, Monomial)]) -> Poly {
    let mut p = Poly::new();
    for (c, m) in terms {
        add_term(field, &mut p, m.clone(), c.clone());
    }
    p
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cpn(n: u32, field: Field) -> Presentation {
        Presentation::new(
            field.clone(),
            2 * (n as i64) + 2,
            vec![("H".into(), 2)],
            vec![Relation {
                lhs: vec![n + 1],
                rhs: vec![(field.one(), vec![0])],
            }],
        )
    }

    #[test]
    fn cp2_has_dimension_three() {
        let alg = cpn(2, Field::new(3, 1).unwrap()).build().unwrap();
        assert_eq!(alg.dim(), 3);
        assert_eq!(alg.basis_labels(), &["1", "H", "H^2"]);
        let h = alg.generator("H").unwrap().clone();
        assert_eq!(alg.pow(&h, 3), alg.unit());
    }

    #[test]
    fn empty_generator_list_gives_ground_field() {
        let p = Presentation::new(Field::rationals(), 0, vec![], vec![]);
        let alg = p.build().unwrap();
        assert_eq!(alg.dim(), 1);
        assert_eq!(alg.basis_labels(), &["1"]);
    }

    #[test]
    fn quadric_presentation_dimension_four() {
        let f = Field::rationals();
        let p = Presentation::new(
            f.clone(),
            6,
            vec![("H".into(), 2), ("E".into(), 4)],
            vec![
                Relation {
                    lhs: vec![2, 0],
                    rhs: vec![(f.from_i64(2), vec![0, 1])],
                },
                Relation {
                    lhs: vec![0, 2],
                    rhs: vec![(f.one(), vec![1, 0])],
                },
            ],
        );
        let alg = p.build().unwrap();
        assert_eq!(alg.dim(), 4);
        assert_eq!(alg.basis_labels(), &["1", "H", "E", "H*E"]);
        assert_eq!(alg.degrees(), &[0, 2, 4, 0]);
    }

    #[test]
    fn non_confluent_system_reports_witness() {
        // x^2 -> y, x*y -> 1 over F_5 (all degrees 0 mod 2): the overlap
        // x^2 y reduces to y^2 one way and to x the other.
        let f = Field::new(5, 1).unwrap();
        let p = Presentation::new(
            f.clone(),
            2,
            vec![("x".into(), 2), ("y".into(), 2)],
            vec![
                Relation {
                    lhs: vec![2, 0],
                    rhs: vec![(f.one(), vec![0, 1])],
                },
                Relation {
                    lhs: vec![1, 1],
                    rhs: vec![(f.one(), vec![0, 0])],
                },
            ],
        );
        match p.build() {
            Err(Error::NonConfluent { overlap, .. }) => assert_eq!(overlap, "x^2*y"),
            other => panic!("expected non-confluence, got {other:?}"),
        }
    }

    #[test]
    fn infinite_quotient_detected() {
        let f = Field::new(2, 1).unwrap();
        let mut p = Presentation::new(f, 2, vec![("x".into(), 2)], vec![]);
        p.max_basis = 50;
        assert!(matches!(p.build(), Err(Error::InfiniteDimensional(50))));
    }

    #[test]
    fn exterior_algebra_on_two_odd_generators() {
        let f = Field::new(3, 1).unwrap();
        let p = Presentation::new(f.clone(), 2, vec![("x".into(), 1), ("y".into(), 1)], vec![]);
        let alg = p.build().unwrap();
        assert_eq!(alg.dim(), 4);
        let x = alg.generator("x").unwrap().clone();
        let y = alg.generator("y").unwrap().clone();
        assert!(alg.is_zero(&alg.mul(&x, &x)));
        // anticommutativity
        assert_eq!(alg.mul(&x, &y), alg.neg(&alg.mul(&y, &x)));
    }

    #[test]
    fn relation_violating_order_rejected() {
        let f = Field::rationals();
        // x -> x^2 is not order-decreasing
        let p = Presentation::new(
            f.clone(),
            2,
            vec![("x".into(), 2)],
            vec![Relation {
                lhs: vec![1],
                rhs: vec![(f.one(), vec![2])],
            }],
        );
        assert!(matches!(p.build(), Err(Error::BadRelation { .. })));
    }

    #[test]
    fn inhomogeneous_relation_rejected() {
        let f = Field::rationals();
        // H^2 -> H with modulus 8: degrees 4 vs 2
        let p = Presentation::new(
            f.clone(),
            8,
            vec![("H".into(), 2)],
            vec![Relation {
                lhs: vec![2],
                rhs: vec![(f.one(), vec![1])],
            }],
        );
        assert!(matches!(p.build(), Err(Error::InhomogeneousRelation { .. })));
    }
}
