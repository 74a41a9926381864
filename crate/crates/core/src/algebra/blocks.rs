//! Block (Peirce) decomposition of a finite-dimensional
//! graded-commutative algebra into local rings, via Jordan-Chevalley
//! decomposition of multiplication operators.
//!
//! The splitting strategy walks the even basis elements in declaration
//! order. For each one, its semisimple part is computed (Newton
//! iteration against the squarefree part of the minimal polynomial),
//! the squarefree minimal polynomial is factored, and the block is cut
//! along the corresponding polynomial idempotents. When a factor is
//! irreducible of degree > 1 and extension is allowed, the whole
//! computation restarts over the splitting field (a deterministic
//! extension tower capped by configuration).

use super::{element_in_span, Algebra, Element};
use crate::error::{Error, Result};
use crate::field::{factor, squarefree_part, Embedding, Field, Scalar, UniPoly};
use crate::linalg::{coordinates_in_span, Matrix};

/// One local-ring summand of a decomposition.
#[derive(Clone, Debug)]
pub struct Block {
    pub idempotent: Element,
    /// Canonical parity-split basis of e*A (even vectors first).
    pub even_basis: Vec<Element>,
    pub odd_basis: Vec<Element>,
    pub dim: usize,
    /// For each even basis index i of the ambient algebra, the scalar by
    /// which the semisimple part of e*b_i acts on this block; None for
    /// odd indices and for non-scalar (unsplit) actions.
    pub residues: Vec<Option<Scalar>>,
    pub radical_basis: Vec<Element>,
    pub is_field: bool,
}

impl Block {
    pub fn basis(&self) -> Vec<Element> {
        let mut b = self.even_basis.clone();
        b.extend(self.odd_basis.iter().cloned());
        b
    }

    pub fn radical_dim(&self) -> usize {
        self.radical_basis.len()
    }
}

#[derive(Clone, Debug)]
pub struct BlockDecomposition {
    /// The algebra actually decomposed: the input, or its extension of
    /// scalars when a splitting field was required.
    pub algebra: Algebra,
    pub blocks: Vec<Block>,
    /// Present when the field was extended; maps input scalars into
    /// `algebra.field()`.
    pub embedding: Option<Embedding>,
    /// True when every recorded residue is an honest scalar (always the
    /// case over a splitting extension).
    pub scalar_residues: bool,
}

impl BlockDecomposition {
    pub fn extension_used(&self) -> &Field {
        self.algebra.field()
    }

    pub fn radical_dim(&self) -> usize {
        self.blocks.iter().map(|b| b.radical_dim()).sum()
    }

    pub fn is_semisimple(&self) -> bool {
        self.radical_dim() == 0
    }

    pub fn idempotents(&self) -> Vec<Element> {
        self.blocks.iter().map(|b| b.idempotent.clone()).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Classification {
    Nilpotent { index: usize },
    Invertible { inverse: Element },
}

/// Least-degree monic polynomial annihilating multiplication by `x`,
/// computed by iterating powers of `x` until linear dependence.
pub fn minimal_polynomial(alg: &Algebra, x: &Element) -> UniPoly {
    let f = alg.field();
    let mut powers: Vec<Vec<Scalar>> = vec![alg.unit().coords];
    let mut acc = alg.unit();
    loop {
        acc = alg.mul(&acc, x);
        if let Some(coords) = coordinates_in_span(f, &powers, &acc.coords) {
            let k = powers.len();
            let mut poly = vec![f.zero(); k + 1];
            for (i, c) in coords.iter().enumerate() {
                poly[i] = f.neg(c);
            }
            poly[k] = f.one();
            return UniPoly::new(f, poly);
        }
        powers.push(acc.coords.clone());
    }
}

/// The polynomial p with p(x) semisimple and x - p(x) nilpotent, found
/// by Newton iteration z <- z - f(z)/f'(z) in k[z]/(m) where f is the
/// squarefree part of the minimal polynomial m.
fn jc_polynomial(field: &Field, m: &UniPoly, dim: usize) -> Result<UniPoly> {
    let f = squarefree_part(field, m)?;
    let mut z = UniPoly::x(field).rem(field, m)?;
    let fprime = f.derivative(field);
    let iters = (usize::BITS - dim.leading_zeros()) as usize + 1;
    for _ in 0..iters {
        let fz = f.compose_mod(field, &z, m)?;
        if fz.is_zero() {
            break;
        }
        let fpz = fprime.compose_mod(field, &z, m)?;
        let inv = fpz.inv_mod(field, m).map_err(|_| {
            Error::Internal("derivative not invertible in Newton iteration".into())
        })?;
        let step = fz.mul(field, &inv).rem(field, m)?;
        z = z.sub(field, &step).rem(field, m)?;
    }
    if !f.compose_mod(field, &z, m)?.is_zero() {
        return Err(Error::Internal(
            "Newton iteration did not converge to the semisimple part".into(),
        ));
    }
    Ok(z)
}

/// Jordan-Chevalley decomposition x = x_s + x_n with x_s = p(x)
/// semisimple, x_n = q(x) nilpotent. Away from characteristic 2 the
/// element must be of even degree (odd parts are handled by callers).
pub fn jordan_chevalley(
    alg: &Algebra,
    x: &Element,
) -> Result<(Element, Element, UniPoly, UniPoly)> {
    let f = alg.field();
    if f.characteristic() != 2 && !alg.is_even(x) {
        return Err(Error::OddDegree);
    }
    let m = minimal_polynomial(alg, x);
    let p = jc_polynomial(f, &m, alg.dim())?;
    let xs = alg.eval_poly(&p, x);
    let xn = alg.sub(x, &xs);
    let q = UniPoly::x(f).sub(f, &p);
    // hard checks: x_s has squarefree minimal polynomial, x_n nilpotent
    let ms = minimal_polynomial(alg, &xs);
    let d = ms.derivative(f);
    if d.is_zero() || ms.gcd(f, &d).degree() != Some(0) {
        return Err(Error::Internal(
            "semisimple part has a non-squarefree minimal polynomial".into(),
        ));
    }
    if alg.nilpotency_index(&xn).is_none() {
        return Err(Error::Internal("nilpotent part is not nilpotent".into()));
    }
    Ok((xs, xn, p, q))
}

// ---------------------------------------------------------------------
// internal ring-with-table view of a block

struct SubRing {
    field: Field,
    dim: usize,
    /// Number of leading even coordinates (the basis is parity-split).
    even_dim: usize,
    table: Vec<Vec<Scalar>>,
    unit: Vec<Scalar>,
}

impl SubRing {
    fn of_block(alg: &Algebra, even: &[Element], odd: &[Element], idem: &Element) -> SubRing {
        let f = alg.field().clone();
        let mut basis: Vec<Vec<Scalar>> = even.iter().map(|e| e.coords.clone()).collect();
        basis.extend(odd.iter().map(|e| e.coords.clone()));
        let n = basis.len();
        let span = Matrix::from_columns(&f, basis.clone());
        let coords = |v: &[Scalar]| -> Vec<Scalar> {
            span.solve(&f, v)
                .expect("product of block elements stays in the block")
        };
        let mut table = Vec::with_capacity(n * n);
        for a in &basis {
            for b in &basis {
                let prod = alg.mul(&Element::new(a.clone()), &Element::new(b.clone()));
                table.push(coords(&prod.coords));
            }
        }
        let unit = coords(&idem.coords);
        SubRing {
            field: f,
            dim: n,
            even_dim: even.len(),
            table,
            unit,
        }
    }

    fn zero(&self) -> Vec<Scalar> {
        vec![self.field.zero(); self.dim]
    }

    fn is_zero(&self, v: &[Scalar]) -> bool {
        v.iter().all(|c| self.field.is_zero(c))
    }

    fn add(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        a.iter()
            .zip(b)
            .map(|(x, y)| self.field.add(x, y))
            .collect()
    }

    fn sub(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        a.iter()
            .zip(b)
            .map(|(x, y)| self.field.sub(x, y))
            .collect()
    }

    fn mul(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        let f = &self.field;
        let mut out = self.zero();
        for (i, x) in a.iter().enumerate() {
            if f.is_zero(x) {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if f.is_zero(y) {
                    continue;
                }
                let c = f.mul(x, y);
                for (k, t) in self.table[i * self.dim + j].iter().enumerate() {
                    if !f.is_zero(t) {
                        out[k] = f.add(&out[k], &f.mul(&c, t));
                    }
                }
            }
        }
        out
    }

    fn eval_poly(&self, p: &UniPoly, x: &[Scalar]) -> Vec<Scalar> {
        let mut acc = self.zero();
        for c in p.coeffs().iter().rev() {
            acc = self.mul(&acc, x);
            let cu: Vec<Scalar> = self.unit.iter().map(|u| self.field.mul(c, u)).collect();
            acc = self.add(&acc, &cu);
        }
        acc
    }

    fn min_poly(&self, x: &[Scalar]) -> UniPoly {
        let f = &self.field;
        let mut powers: Vec<Vec<Scalar>> = vec![self.unit.clone()];
        let mut acc = self.unit.clone();
        loop {
            acc = self.mul(&acc, x);
            if let Some(coords) = coordinates_in_span(f, &powers, &acc) {
                let k = powers.len();
                let mut poly = vec![f.zero(); k + 1];
                for (i, c) in coords.iter().enumerate() {
                    poly[i] = f.neg(c);
                }
                poly[k] = f.one();
                return UniPoly::new(f, poly);
            }
            powers.push(acc.clone());
        }
    }

    fn nilpotency_index(&self, x: &[Scalar]) -> Option<usize> {
        let mut acc = x.to_vec();
        for m in 1..=self.dim + 1 {
            if self.is_zero(&acc) {
                return Some(m);
            }
            acc = self.mul(&acc, x);
        }
        None
    }

    /// Solve x*y = unit inside the block.
    fn inverse(&self, x: &[Scalar]) -> Option<Vec<Scalar>> {
        let cols: Vec<Vec<Scalar>> = (0..self.dim)
            .map(|j| {
                let mut e = self.zero();
                e[j] = self.field.one();
                self.mul(x, &e)
            })
            .collect();
        Matrix::from_columns(&self.field, cols).solve(&self.field, &self.unit)
    }

    /// Semisimple part of a block element: away from characteristic 2 the
    /// odd coordinates contribute nothing (odd elements square to zero);
    /// in characteristic 2 the algebra is commutative and the minimal
    /// polynomial route applies directly.
    fn semisimple_part(&self, x: &[Scalar]) -> Result<Vec<Scalar>> {
        let f = &self.field;
        let v: Vec<Scalar> = if f.characteristic() != 2 {
            x.iter()
                .enumerate()
                .map(|(k, c)| {
                    if k < self.even_dim {
                        c.clone()
                    } else {
                        f.zero()
                    }
                })
                .collect()
        } else {
            x.to_vec()
        };
        if self.is_zero(&v) {
            return Ok(self.zero());
        }
        let m = self.min_poly(&v);
        let p = jc_polynomial(f, &m, self.dim)?;
        Ok(self.eval_poly(&p, &v))
    }
}

// ---------------------------------------------------------------------
// decomposition driver

struct RawBlock {
    idem: Element,
    even: Vec<Element>,
    odd: Vec<Element>,
}

enum Attempt {
    Done(Vec<RawBlock>),
    NeedExtension(usize),
}

fn parity_image(alg: &Algebra, idem: &Element, even: &[Element], odd: &[Element]) -> RawBlock {
    let f = alg.field();
    let even_rows: Vec<Vec<Scalar>> = even
        .iter()
        .map(|w| alg.mul(idem, w).coords)
        .collect();
    let odd_rows: Vec<Vec<Scalar>> = odd.iter().map(|w| alg.mul(idem, w).coords).collect();
    let even_basis = Matrix::from_rows(f, even_rows)
        .row_space_basis(f)
        .into_iter()
        .map(Element::new)
        .collect();
    let odd_basis = if odd_rows.is_empty() {
        Vec::new()
    } else {
        Matrix::from_rows(f, odd_rows)
            .row_space_basis(f)
            .into_iter()
            .map(Element::new)
            .collect()
    };
    RawBlock {
        idem: idem.clone(),
        even: even_basis,
        odd: odd_basis,
    }
}

fn decompose_attempt(alg: &Algebra, allow_extension: bool) -> Result<Attempt> {
    let f = alg.field();
    let finite = f.characteristic() > 0;
    let even_std: Vec<Element> = (0..alg.dim())
        .filter(|&i| alg.degrees()[i] % 2 == 0)
        .map(|i| alg.basis_element(i))
        .collect();
    let odd_std: Vec<Element> = (0..alg.dim())
        .filter(|&i| alg.degrees()[i] % 2 != 0)
        .map(|i| alg.basis_element(i))
        .collect();
    let mut blocks = vec![parity_image(alg, &alg.unit(), &even_std, &odd_std)];

    for i in 0..alg.dim() {
        if alg.degrees()[i] % 2 != 0 {
            continue;
        }
        let bi = alg.basis_element(i);
        let mut next = Vec::new();
        for block in blocks {
            let sub = SubRing::of_block(alg, &block.even, &block.odd, &block.idem);
            let x = alg.mul(&block.idem, &bi);
            let basis: Vec<Element> = block
                .even
                .iter()
                .chain(block.odd.iter())
                .cloned()
                .collect();
            let x_local = element_in_span(alg, &basis, &x)
                .ok_or_else(|| Error::Internal("e*b_i escaped its block".into()))?;
            let m = sub.min_poly(&x_local);
            let ms = if m.degree() == Some(0) {
                m.clone()
            } else {
                squarefree_part(f, &m)?
            };
            if ms.degree().unwrap_or(0) <= 1 {
                next.push(block);
                continue;
            }
            let fac = factor(f, &ms)?;
            if !fac.complete {
                return Err(Error::IncompleteFactorization(ms.render(f, "x")));
            }
            if allow_extension && finite {
                if let Some((g, _)) = fac.factors.iter().find(|(g, _)| g.degree() > Some(1)) {
                    return Ok(Attempt::NeedExtension(g.degree().unwrap()));
                }
            }
            if fac.factors.len() == 1 {
                next.push(block);
                continue;
            }
            // split along the polynomial idempotents of the squarefree
            // minimal polynomial, evaluated at the semisimple part
            let xs_local = {
                let p = jc_polynomial(f, &m, sub.dim)?;
                sub.eval_poly(&p, &x_local)
            };
            let mut sum = alg.zero();
            let mut pieces = Vec::new();
            for (g, _) in &fac.factors {
                let h = ms.div_exact(f, g)?;
                let hinv = h.inv_mod(f, g)?;
                let u = h.mul(f, &hinv).rem(f, &ms)?;
                let ej_local = sub.eval_poly(&u, &xs_local);
                let mut ej = alg.zero();
                for (k, c) in ej_local.iter().enumerate() {
                    ej = alg.add(&ej, &alg.scale(c, &basis[k]));
                }
                if alg.mul(&ej, &ej) != ej {
                    return Err(Error::Internal("polynomial idempotent is not idempotent".into()));
                }
                sum = alg.add(&sum, &ej);
                pieces.push(ej);
            }
            if sum != block.idem {
                return Err(Error::Internal(
                    "polynomial idempotents do not sum to the block unit".into(),
                ));
            }
            for ej in &pieces {
                next.push(parity_image(alg, ej, &block.even, &block.odd));
            }
        }
        blocks = next;
    }
    Ok(Attempt::Done(blocks))
}

/// Decompose into local blocks. With `allow_extension` (positive
/// characteristic only) the field is extended to a deterministic
/// splitting tower whenever an irreducible factor of degree > 1
/// appears, restarting the decomposition over the larger field; the
/// tower is capped at extension degree `cap` over the prime field.
pub fn block_decompose(
    alg: &Algebra,
    allow_extension: bool,
    cap: usize,
) -> Result<BlockDecomposition> {
    let mut current = alg.clone();
    let mut embedding: Option<Embedding> = None;
    loop {
        match decompose_attempt(&current, allow_extension)? {
            Attempt::NeedExtension(k) => {
                let p = alg.field().characteristic();
                let d_new = current.field().extension_degree() * k;
                let new_field = Field::with_cap(p, d_new, cap)?;
                let (next, emb) = alg.extend_scalars(&new_field)?;
                current = next;
                embedding = Some(emb);
            }
            Attempt::Done(raw) => {
                let decomp = assemble(current, raw, embedding)?;
                return Ok(decomp);
            }
        }
    }
}

fn assemble(
    alg: Algebra,
    mut raw: Vec<RawBlock>,
    embedding: Option<Embedding>,
) -> Result<BlockDecomposition> {
    let f = alg.field().clone();
    raw.sort_by(|a, b| {
        (a.even.len() + a.odd.len(), &a.idem.coords).cmp(&(b.even.len() + b.odd.len(), &b.idem.coords))
    });
    // exact decomposition invariants
    let mut sum = alg.zero();
    for b in &raw {
        if alg.mul(&b.idem, &b.idem) != b.idem {
            return Err(Error::Internal("block idempotent is not idempotent".into()));
        }
        sum = alg.add(&sum, &b.idem);
    }
    if sum != alg.unit() {
        return Err(Error::Internal("block idempotents do not sum to 1".into()));
    }
    for (i, a) in raw.iter().enumerate() {
        for b in raw.iter().skip(i + 1) {
            if !alg.is_zero(&alg.mul(&a.idem, &b.idem)) {
                return Err(Error::Internal("block idempotents are not orthogonal".into()));
            }
        }
    }
    let total: usize = raw.iter().map(|b| b.even.len() + b.odd.len()).sum();
    if total != alg.dim() {
        return Err(Error::Internal("block dimensions do not sum to dim".into()));
    }

    let mut blocks = Vec::new();
    let mut scalar_residues = true;
    for rb in raw {
        let sub = SubRing::of_block(&alg, &rb.even, &rb.odd, &rb.idem);
        let basis = {
            let mut v = rb.even.clone();
            v.extend(rb.odd.iter().cloned());
            v
        };
        // residues of the even ambient basis elements
        let mut residues = vec![None; alg.dim()];
        for i in 0..alg.dim() {
            if alg.degrees()[i] % 2 != 0 {
                continue;
            }
            let x = alg.mul(&rb.idem, &alg.basis_element(i));
            let x_local = element_in_span(&alg, &basis, &x)
                .ok_or_else(|| Error::Internal("e*b_i escaped its block".into()))?;
            let xs = sub.semisimple_part(&x_local)?;
            match coordinates_in_span(&f, &[sub.unit.clone()], &xs) {
                Some(c) => residues[i] = Some(c[0].clone()),
                None => scalar_residues = false,
            }
        }
        // radical = kernel of the semisimple-part map on the block
        let ss_cols: Vec<Vec<Scalar>> = (0..sub.dim)
            .map(|k| {
                let mut e = sub.zero();
                e[k] = f.one();
                sub.semisimple_part(&e)
            })
            .collect::<Result<_>>()?;
        let kernel = Matrix::from_columns(&f, ss_cols).kernel_basis(&f);
        let rad_rows: Vec<Vec<Scalar>> = kernel
            .iter()
            .map(|v| {
                let mut w = alg.zero();
                for (k, c) in v.iter().enumerate() {
                    w = alg.add(&w, &alg.scale(c, &basis[k]));
                }
                w.coords
            })
            .collect();
        let radical_basis: Vec<Element> = Matrix::from_rows(&f, rad_rows)
            .row_space_basis(&f)
            .into_iter()
            .map(Element::new)
            .collect();
        let dim = sub.dim;
        let is_field = radical_basis.is_empty();
        blocks.push(Block {
            idempotent: rb.idem,
            even_basis: rb.even,
            odd_basis: rb.odd,
            dim,
            residues,
            radical_basis,
            is_field,
        });
    }
    Ok(BlockDecomposition {
        algebra: alg,
        blocks,
        embedding,
        scalar_residues,
    })
}

/// Classify an element of a block as nilpotent (with least index) or
/// invertible (with its inverse, computed through the geometric-series
/// formula and cross-checked by a direct linear solve).
pub fn classify_element(
    decomp: &BlockDecomposition,
    block_index: usize,
    x: &Element,
) -> Result<Classification> {
    let alg = &decomp.algebra;
    let f = alg.field();
    let block = &decomp.blocks[block_index];
    if alg.mul(&block.idempotent, x) != *x {
        return Err(Error::NotInBlock);
    }
    if alg.is_zero(x) {
        return Ok(Classification::Nilpotent { index: 1 });
    }
    if f.characteristic() != 2 {
        let (v, z) = alg.parity_split(x);
        if alg.is_zero(&v) {
            // purely odd: z^2 = 0
            debug_assert!(alg.is_zero(&alg.mul(x, x)));
            return Ok(Classification::Nilpotent { index: 2 });
        }
        if !alg.is_zero(&z) {
            // mixed parity: invertibility is decided by the even part
            return match classify_even(decomp, block, &v)? {
                Classification::Nilpotent { .. } => {
                    let index = alg.nilpotency_index(x).ok_or_else(|| {
                        Error::Internal("mixed element with nilpotent even part must be nilpotent".into())
                    })?;
                    Ok(Classification::Nilpotent { index })
                }
                Classification::Invertible { inverse: y } => {
                    // (v + z)^(-1) = y - y^2 z for odd z with z^2 = 0
                    let y2z = alg.mul(&alg.mul(&y, &y), &z);
                    let inv = alg.sub(&y, &y2z);
                    check_inverse(alg, &block.idempotent, x, &inv)?;
                    Ok(Classification::Invertible { inverse: inv })
                }
            };
        }
        return classify_even(decomp, block, x);
    }
    classify_even(decomp, block, x)
}

fn classify_even(
    decomp: &BlockDecomposition,
    block: &Block,
    x: &Element,
) -> Result<Classification> {
    let alg = &decomp.algebra;
    let sub = SubRing::of_block(alg, &block.even_basis, &block.odd_basis, &block.idempotent);
    let basis = block.basis();
    let x_local =
        element_in_span(alg, &basis, x).ok_or(Error::NotInBlock)?;
    let xs = sub.semisimple_part(&x_local)?;
    if sub.is_zero(&xs) {
        let index = sub
            .nilpotency_index(&x_local)
            .ok_or_else(|| Error::Internal("element with zero semisimple part must be nilpotent".into()))?;
        if index > block.dim + 1 {
            return Err(Error::Internal("nilpotency index exceeds the block dimension".into()));
        }
        return Ok(Classification::Nilpotent { index });
    }
    // invertible: geometric series against the nilpotent part
    let xn = sub.sub(&x_local, &xs);
    let u = sub
        .inverse(&xs)
        .ok_or_else(|| Error::Internal("nonzero semisimple part must be invertible in a local ring".into()))?;
    let w = sub.mul(&u, &xn);
    let m = sub
        .nilpotency_index(&w)
        .ok_or_else(|| Error::Internal("x_s^{-1} x_n must be nilpotent".into()))?;
    let mut series = sub.unit.clone();
    let mut wpow = sub.unit.clone();
    for k in 1..m {
        wpow = sub.mul(&wpow, &w);
        if k % 2 == 1 {
            series = sub.sub(&series, &wpow);
        } else {
            series = sub.add(&series, &wpow);
        }
    }
    let y_local = sub.mul(&series, &u);
    // cross-check against a direct linear solve
    let solved = sub
        .inverse(&x_local)
        .ok_or_else(|| Error::Internal("direct solve found no inverse".into()))?;
    if solved != y_local {
        return Err(Error::Internal(
            "geometric-series inverse disagrees with the linear solve".into(),
        ));
    }
    let mut y = alg.zero();
    for (k, c) in y_local.iter().enumerate() {
        y = alg.add(&y, &alg.scale(c, &basis[k]));
    }
    check_inverse(alg, &block.idempotent, x, &y)?;
    Ok(Classification::Invertible { inverse: y })
}

fn check_inverse(alg: &Algebra, idem: &Element, x: &Element, y: &Element) -> Result<()> {
    if alg.mul(x, y) != *idem {
        return Err(Error::Internal("computed inverse fails x*y = e".into()));
    }
    Ok(())
}

/// Canonical basis of the nilpotent ideal (union of the block
/// radicals), computed over the ground field.
pub fn radical(alg: &Algebra) -> Result<Vec<Element>> {
    let decomp = block_decompose(alg, false, crate::field::DEFAULT_EXTENSION_CAP)?;
    let rows: Vec<Vec<Scalar>> = decomp
        .blocks
        .iter()
        .flat_map(|b| b.radical_basis.iter().map(|e| e.coords.clone()))
        .collect();
    if rows.is_empty() {
        return Ok(Vec::new());
    }
    Ok(Matrix::from_rows(alg.field(), rows)
        .row_space_basis(alg.field())
        .into_iter()
        .map(Element::new)
        .collect())
}
