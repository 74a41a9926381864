//! Dense exact linear algebra over a [`Field`]: reduced row echelon
//! form, rank, kernels and solving. Everything is deterministic; kernel
//! and row-space bases are the canonical ones read off the RREF.

use crate::error::{Error, Result};
use crate::field::{Field, Scalar, UniPoly};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zero(field: &Field, rows: usize, cols: usize) -> Matrix {
        Matrix {
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: &Field, n: usize) -> Matrix {
        let mut m = Matrix::zero(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_rows(field: &Field, rows: Vec<Vec<Scalar>>) -> Matrix {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c));
        let _ = field;
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_columns(field: &Field, cols: Vec<Vec<Scalar>>) -> Matrix {
        let c = cols.len();
        let r = cols.first().map_or(0, |x| x.len());
        let mut m = Matrix::zero(field, r, c);
        for (j, col) in cols.iter().enumerate() {
            assert_eq!(col.len(), r);
            for (i, v) in col.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn transpose(&self, field: &Field) -> Matrix {
        let mut t = Matrix::zero(field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, field: &Field, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows);
        let mut out = Matrix::zero(field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if field.is_zero(a) {
                    continue;
                }
                for j in 0..other.cols {
                    let t = field.mul(a, other.get(k, j));
                    let s = field.add(out.get(i, j), &t);
                    out.set(i, j, s);
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, field: &Field, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = field.zero();
                for j in 0..self.cols {
                    acc = field.add(&acc, &field.mul(self.get(i, j), &v[j]));
                }
                acc
            })
            .collect()
    }

    pub fn add(&self, field: &Field, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self
            .data
            .iter()
            .zip(other.data.iter())
            .map(|(a, b)| field.add(a, b))
            .collect();
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn is_zero(&self, field: &Field) -> bool {
        self.data.iter().all(|v| field.is_zero(v))
    }

    /// In-place reduced row echelon form; returns the pivot columns.
    pub fn rref(&mut self, field: &Field) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0usize;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(pr) = (r..self.rows).find(|&i| !field.is_zero(self.get(i, c))) else {
                continue;
            };
            self.swap_rows(r, pr);
            let inv = field.inv(self.get(r, c)).unwrap();
            for j in c..self.cols {
                let v = field.mul(self.get(r, j), &inv);
                self.set(r, j, v);
            }
            for i in 0..self.rows {
                if i == r || field.is_zero(self.get(i, c)) {
                    continue;
                }
                let factor = self.get(i, c).clone();
                for j in c..self.cols {
                    let t = field.mul(&factor, self.get(r, j));
                    let v = field.sub(self.get(i, j), &t);
                    self.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self, field: &Field) -> usize {
        let mut m = self.clone();
        m.rref(field).len()
    }

    /// Canonical basis of the right kernel, one vector per free column.
    pub fn kernel_basis(&self, field: &Field) -> Vec<Vec<Scalar>> {
        let mut m = self.clone();
        let pivots = m.rref(field);
        let pivot_set: std::collections::BTreeMap<usize, usize> =
            pivots.iter().enumerate().map(|(r, &c)| (c, r)).collect();
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_set.contains_key(&free) {
                continue;
            }
            let mut v = vec![field.zero(); self.cols];
            v[free] = field.one();
            for (&pc, &pr) in &pivot_set {
                v[pc] = field.neg(m.get(pr, free));
            }
            basis.push(v);
        }
        basis
    }

    /// Canonical basis of the row space (nonzero RREF rows).
    pub fn row_space_basis(&self, field: &Field) -> Vec<Vec<Scalar>> {
        let mut m = self.clone();
        let pivots = m.rref(field);
        (0..pivots.len()).map(|i| m.row(i).to_vec()).collect()
    }

    /// Solve `self * x = b`, returning one solution if any exists.
    pub fn solve(&self, field: &Field, b: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(b.len(), self.rows);
        let mut aug = Matrix::zero(field, self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, self.cols, b[i].clone());
        }
        let pivots = aug.rref(field);
        if pivots.contains(&self.cols) {
            return None; // inconsistent
        }
        let mut x = vec![field.zero(); self.cols];
        for (r, &c) in pivots.iter().enumerate() {
            x[c] = aug.get(r, self.cols).clone();
        }
        Some(x)
    }

    /// Characteristic polynomial det(lambda*I - M) by subset dynamic
    /// programming over column subsets (exact, division free).
    pub fn char_poly(&self, field: &Field) -> Result<UniPoly> {
        if self.rows != self.cols {
            return Err(Error::ShapeMismatch("char_poly needs a square matrix".into()));
        }
        let n = self.rows;
        if n > 16 {
            return Err(Error::SearchBoundExceeded {
                size: 1u128 << n,
                bound: 1 << 16,
            });
        }
        // entries of lambda*I - M as linear polynomials
        let entry = |i: usize, j: usize| -> UniPoly {
            let c = field.neg(self.get(i, j));
            if i == j {
                UniPoly::new(field, vec![c, field.one()])
            } else {
                UniPoly::constant(field, c)
            }
        };
        // dp over subsets of columns: minor determinants of the leading
        // rows against each column subset, Laplace expansion on rows.
        let mut dp: Vec<Option<UniPoly>> = vec![None; 1 << n];
        dp[0] = Some(UniPoly::one(field));
        for mask in 1usize..(1 << n) {
            let row = (mask.count_ones() - 1) as usize;
            let mut acc = UniPoly::zero();
            let mut sign_neg = row % 2 == 1;
            for j in 0..n {
                if mask & (1 << j) == 0 {
                    continue;
                }
                let sub = dp[mask ^ (1 << j)].clone().unwrap();
                let term = sub.mul(field, &entry(row, j));
                acc = if sign_neg {
                    acc.sub(field, &term)
                } else {
                    acc.add(field, &term)
                };
                sign_neg = !sign_neg;
            }
            dp[mask] = Some(acc);
        }
        Ok(dp[(1 << n) - 1].clone().unwrap())
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

/// Coordinates of `v` in the span of `basis` (as rows), if it lies there.
pub fn coordinates_in_span(
    field: &Field,
    basis: &[Vec<Scalar>],
    v: &[Scalar],
) -> Option<Vec<Scalar>> {
    if basis.is_empty() {
        return v.iter().all(|c| field.is_zero(c)).then(Vec::new);
    }
    let m = Matrix::from_columns(field, basis.to_vec());
    m.solve(field, v)
}
