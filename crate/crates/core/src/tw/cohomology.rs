//! Cohomology of hom-complexes between twisted complexes, by exact rank
//! computation per degree class. The differential is
//! f |-> delta_Y f - (-1)^{|f|} f delta_X, of degree +1 in the cyclic
//! Z/2N grading; ranks in different classes are independent and are
//! computed in parallel when the `parallel` feature is on.

use super::{TwMorphism, TwObject};
use crate::algebra::{Block, Element};
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::linalg::Matrix;
use crate::par;
use std::collections::BTreeMap;
use std::collections::HashMap;

/// Exact cohomology dimensions per degree class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomTable {
    pub modulus: i64,
    pub dims: BTreeMap<i64, usize>,
}

impl HomTable {
    pub fn total(&self) -> usize {
        self.dims.values().sum()
    }

    pub fn dim(&self, class: i64) -> usize {
        *self
            .dims
            .get(&class.rem_euclid(self.modulus))
            .unwrap_or(&0)
    }
}

struct HomLayout {
    /// (target summand, source summand, base-algebra basis index)
    cells: Vec<(usize, usize, usize)>,
    pos: HashMap<(usize, usize, usize), usize>,
}

fn layout(x: &TwObject, y: &TwObject, class: i64) -> HomLayout {
    let base = x.base();
    let m = base.effective_modulus();
    let mut cells = Vec::new();
    for i in 0..y.summands() {
        for j in 0..x.summands() {
            let want = (class + y.shifts()[i] - x.shifts()[j]).rem_euclid(m);
            for (k, d) in base.degrees().iter().enumerate() {
                if d.rem_euclid(m) == want {
                    cells.push((i, j, k));
                }
            }
        }
    }
    let pos = cells
        .iter()
        .enumerate()
        .map(|(c, &cell)| (cell, c))
        .collect();
    HomLayout { cells, pos }
}

/// Matrix of d: hom^class -> hom^{class+1}.
fn differential_matrix(x: &TwObject, y: &TwObject, class: i64) -> Matrix {
    let base = x.base();
    let f = base.field();
    let dom = layout(x, y, class);
    let cod = layout(x, y, class + 1);
    let negate = class.rem_euclid(2) == 0;
    let mut mat = Matrix::zero(f, cod.cells.len(), dom.cells.len());
    for (col, &(i, j, k)) in dom.cells.iter().enumerate() {
        let b = base.basis_element(k);
        // delta_Y composed with the single entry: rows (t, j)
        for t in 0..y.summands() {
            let prod = base.mul(&y.delta()[t][i], &b);
            for (bk, c) in prod.coords.iter().enumerate() {
                if f.is_zero(c) {
                    continue;
                }
                let row = cod.pos[&(t, j, bk)];
                mat.set(row, col, f.add(mat.get(row, col), c));
            }
        }
        // the entry composed with delta_X: rows (i, l), sign -(-1)^class
        for l in 0..x.summands() {
            let prod = base.mul(&b, &x.delta()[j][l]);
            for (bk, c) in prod.coords.iter().enumerate() {
                if f.is_zero(c) {
                    continue;
                }
                let row = cod.pos[&(i, l, bk)];
                let signed = if negate { f.neg(c) } else { c.clone() };
                mat.set(row, col, f.add(mat.get(row, col), &signed));
            }
        }
    }
    mat
}

fn hom_cohomology_impl(x: &TwObject, y: &TwObject, parallel: bool) -> Result<HomTable> {
    if x.base() != y.base() {
        return Err(Error::ShapeMismatch(
            "hom-cohomology needs a common base".into(),
        ));
    }
    let m = x.base().effective_modulus();
    let classes = m as usize;
    let rank_of = |n: usize| {
        let mat = differential_matrix(x, y, n as i64);
        (mat.ncols(), mat.rank(x.base().field()))
    };
    let ranks: Vec<(usize, usize)> = if parallel {
        par::map_range(classes, rank_of)
    } else {
        par::map_range_seq(classes, rank_of)
    };
    let mut dims = BTreeMap::new();
    for n in 0..classes {
        let (dim_n, rank_n) = ranks[n];
        let rank_prev = ranks[(n + classes - 1) % classes].1;
        let h = dim_n - rank_n - rank_prev;
        if h > 0 {
            dims.insert(n as i64, h);
        }
    }
    Ok(HomTable {
        modulus: m,
        dims,
    })
}

/// Graded dimension table of H(hom(X, Y)).
pub fn hom_cohomology(x: &TwObject, y: &TwObject) -> Result<HomTable> {
    hom_cohomology_impl(x, y, true)
}

/// Sequential twin of [`hom_cohomology`] for benchmarking both paths.
pub fn hom_cohomology_seq(x: &TwObject, y: &TwObject) -> Result<HomTable> {
    hom_cohomology_impl(x, y, false)
}

/// Cohomology of the hom-complex with every matrix slot restricted to a
/// block e*A of the base. Block idempotents mix Z/2N degree classes but
/// preserve parity, so the table is Z/2-graded.
pub fn hom_cohomology_block(x: &TwObject, y: &TwObject, block: &Block) -> Result<HomTable> {
    if x.base() != y.base() {
        return Err(Error::ShapeMismatch(
            "hom-cohomology needs a common base".into(),
        ));
    }
    let base = x.base();
    let f = base.field();
    let parity_basis = [&block.even_basis, &block.odd_basis];
    let span = |p: usize| -> Matrix {
        Matrix::from_columns(
            f,
            parity_basis[p].iter().map(|e| e.coords.clone()).collect(),
        )
    };
    let spans = [span(0), span(1)];

    // cells: (target summand, source summand, parity-basis index)
    let cell_parity = |i: usize, j: usize, n: i64| -> usize {
        ((n + y.shifts()[i] - x.shifts()[j]).rem_euclid(2)) as usize
    };
    let layout_block = |n: i64| -> (Vec<(usize, usize, usize)>, HashMap<(usize, usize, usize), usize>) {
        let mut cells = Vec::new();
        for i in 0..y.summands() {
            for j in 0..x.summands() {
                let p = cell_parity(i, j, n);
                for k in 0..parity_basis[p].len() {
                    cells.push((i, j, k));
                }
            }
        }
        let pos = cells
            .iter()
            .enumerate()
            .map(|(c, &cell)| (cell, c))
            .collect();
        (cells, pos)
    };

    let mut ranks = Vec::new();
    for n in 0..2i64 {
        let (dom, _) = layout_block(n);
        let (cod, cod_pos) = layout_block(n + 1);
        let negate = n.rem_euclid(2) == 0;
        let mut mat = Matrix::zero(f, cod.len(), dom.len());
        for (col, &(i, j, k)) in dom.iter().enumerate() {
            let p = cell_parity(i, j, n);
            let w: &Element = &parity_basis[p][k];
            let mut add_entry = |ti: usize, sj: usize, v: &Element, neg: bool| -> Result<()> {
                if base.is_zero(v) {
                    return Ok(());
                }
                let tp = cell_parity(ti, sj, n + 1);
                let coords = spans[tp].solve(f, &v.coords).ok_or_else(|| {
                    Error::Internal("block product escaped the block parity span".into())
                })?;
                for (bk, c) in coords.iter().enumerate() {
                    if f.is_zero(c) {
                        continue;
                    }
                    let row = cod_pos[&(ti, sj, bk)];
                    let signed = if neg { f.neg(c) } else { c.clone() };
                    mat.set(row, col, f.add(mat.get(row, col), &signed));
                }
                Ok(())
            };
            for t in 0..y.summands() {
                let prod = base.mul(&y.delta()[t][i], w);
                add_entry(t, j, &prod, false)?;
            }
            for l in 0..x.summands() {
                let prod = base.mul(w, &x.delta()[j][l]);
                add_entry(i, l, &prod, negate)?;
            }
        }
        ranks.push((dom.len(), mat.rank(f)));
    }
    let mut dims = BTreeMap::new();
    for n in 0..2usize {
        let (dim_n, rank_n) = ranks[n];
        let rank_prev = ranks[(n + 1) % 2].1;
        let h = dim_n - rank_n - rank_prev;
        if h > 0 {
            dims.insert(n as i64, h);
        }
    }
    Ok(HomTable { modulus: 2, dims })
}

/// Induced map on hom(B, -) cohomology classes of a closed degree-0
/// morphism phi: per degree class, a matrix from the cohomology of
/// hom(B, source) to that of hom(B, target), with explicit quotient
/// bases. Used by the cone-comparison check.
pub(super) struct InducedMap {
    pub per_class: Vec<Matrix>,
}

pub(super) fn induced_on_cohomology(
    test: &TwObject,
    phi: &TwMorphism,
) -> Result<InducedMap> {
    let base = test.base();
    let f = base.field();
    let m = base.effective_modulus();
    let x = &phi.source;
    let y = &phi.target;

    let mut per_class = Vec::new();
    for n in 0..m {
        // cohomology quotient representatives on both sides
        let (lay_x, quot_x) = cohomology_basis(test, x, n)?;
        let (_, quot_y) = cohomology_basis(test, y, n)?;
        let im_y = image_basis(test, y, n - 1)?;
        let cod_layout = layout(test, y, n);
        let mut cols = Vec::new();
        for rep in &quot_x {
            let g = vector_to_morphism(test, x, n, rep, &lay_x);
            let composed = super::compose(phi, &g)?;
            let v = morphism_to_vector(&composed, &cod_layout);
            // coordinates of v in [quot_y | im_y]
            let mut basis_cols: Vec<Vec<Scalar>> = quot_y.clone();
            basis_cols.extend(im_y.iter().cloned());
            let sol = Matrix::from_columns(f, basis_cols)
                .solve(f, &v)
                .ok_or_else(|| Error::Internal("induced image is not a cocycle class".into()))?;
            cols.push(sol[..quot_y.len()].to_vec());
        }
        let mat = if cols.is_empty() {
            Matrix::zero(f, quot_y.len(), 0)
        } else {
            Matrix::from_columns(f, cols)
        };
        per_class.push(mat);
    }
    Ok(InducedMap { per_class })
}

/// Layout and cohomology-quotient representatives of hom(test, obj) in
/// one class: kernel vectors extending the image to a basis.
fn cohomology_basis(
    test: &TwObject,
    obj: &TwObject,
    class: i64,
) -> Result<(HomLayout, Vec<Vec<Scalar>>)> {
    let f = test.base().field();
    let lay = layout(test, obj, class);
    let kernel = differential_matrix(test, obj, class).kernel_basis(f);
    let image = image_basis(test, obj, class - 1)?;
    let mut quot = Vec::new();
    let mut rank_so_far = if image.is_empty() {
        0
    } else {
        Matrix::from_rows(f, image.clone()).rank(f)
    };
    for row in kernel {
        let mut candidate: Vec<Vec<Scalar>> = image.clone();
        candidate.extend(quot.iter().cloned());
        candidate.push(row.clone());
        let r = Matrix::from_rows(f, candidate).rank(f);
        if r > rank_so_far {
            quot.push(row);
            rank_so_far = r;
        }
    }
    Ok((lay, quot))
}

fn image_basis(test: &TwObject, obj: &TwObject, class: i64) -> Result<Vec<Vec<Scalar>>> {
    let f = test.base().field();
    let d = differential_matrix(test, obj, class);
    let cols: Vec<Vec<Scalar>> = (0..d.ncols()).map(|j| d.column(j)).collect();
    if cols.is_empty() {
        return Ok(Vec::new());
    }
    Ok(Matrix::from_rows(f, cols).row_space_basis(f))
}

fn vector_to_morphism(
    test: &TwObject,
    obj: &TwObject,
    class: i64,
    v: &[Scalar],
    lay: &HomLayout,
) -> TwMorphism {
    let base = test.base();
    let f = base.field();
    let mut entries = vec![vec![base.zero(); test.summands()]; obj.summands()];
    for (c, &(i, j, k)) in lay.cells.iter().enumerate() {
        if f.is_zero(&v[c]) {
            continue;
        }
        entries[i][j].coords[k] = f.add(&entries[i][j].coords[k], &v[c]);
    }
    TwMorphism {
        source: test.clone(),
        target: obj.clone(),
        degree: class,
        entries,
    }
}

fn morphism_to_vector(phi: &TwMorphism, lay: &HomLayout) -> Vec<Scalar> {
    let base = phi.source.base();
    let f = base.field();
    let mut v = vec![f.zero(); lay.cells.len()];
    for (c, &(i, j, k)) in lay.cells.iter().enumerate() {
        v[c] = phi.entries[i][j].coords[k].clone();
    }
    v
}
