//! Column-compressed exact sparse matrices for module structure maps.

use std::fmt;

use crate::matrix::Matrix;
use crate::scalar::{Field, Scalar};

/// Sparse matrix stored by columns; each column is sorted by row and holds no zeros.
#[derive(Clone, PartialEq, Eq)]
pub struct SpMat {
    rows: usize,
    field: Field,
    cols: Vec<Vec<(usize, Scalar)>>,
}

impl fmt::Debug for SpMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SpMat {}x{} nnz={}", self.rows, self.cols.len(), self.nnz())
    }
}

/// Dense accumulator reused across column combinations.
struct Acc {
    vals: Vec<Scalar>,
    touched: Vec<usize>,
    mark: Vec<bool>,
}

impl Acc {
    fn new(field: Field, n: usize) -> Acc {
        Acc { vals: vec![field.zero(); n], touched: Vec::new(), mark: vec![false; n] }
    }

    fn add(&mut self, i: usize, x: &Scalar) {
        if !self.mark[i] {
            self.mark[i] = true;
            self.touched.push(i);
        }
        self.vals[i] += x;
    }

    fn drain(&mut self, zero: &Scalar) -> Vec<(usize, Scalar)> {
        self.touched.sort_unstable();
        let mut out = Vec::with_capacity(self.touched.len());
        for &i in &self.touched {
            self.mark[i] = false;
            let v = std::mem::replace(&mut self.vals[i], zero.clone());
            if !v.is_zero() {
                out.push((i, v));
            }
        }
        self.touched.clear();
        out
    }
}

impl SpMat {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> SpMat {
        SpMat { rows, field, cols: vec![Vec::new(); cols] }
    }

    pub fn identity(field: Field, n: usize) -> SpMat {
        SpMat { rows: n, field, cols: (0..n).map(|i| vec![(i, field.one())]).collect() }
    }

    /// `c · I`.
    pub fn scalar(field: Field, n: usize, c: &Scalar) -> SpMat {
        if c.is_zero() {
            return SpMat::zeros(field, n, n);
        }
        SpMat { rows: n, field, cols: (0..n).map(|i| vec![(i, c.clone())]).collect() }
    }

    /// From unsorted columns that may contain repeats or zeros.
    pub fn from_columns(field: Field, rows: usize, cols: Vec<Vec<(usize, Scalar)>>) -> SpMat {
        let mut acc = Acc::new(field, rows);
        let zero = field.zero();
        let cols = cols
            .into_iter()
            .map(|c| {
                for (i, x) in &c {
                    acc.add(*i, x);
                }
                acc.drain(&zero)
            })
            .collect();
        SpMat { rows, field, cols }
    }

    pub fn from_dense(m: &Matrix) -> SpMat {
        SpMat { rows: m.rows(), field: m.field(), cols: crate::tensor::sparse_columns(m) }
    }

    pub fn to_dense(&self) -> Matrix {
        let mut m = Matrix::zeros(self.field, self.rows, self.cols.len());
        for (j, col) in self.cols.iter().enumerate() {
            for (i, x) in col {
                m[(*i, j)] = x.clone();
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols.len()
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(Vec::len).sum()
    }

    pub fn column(&self, j: usize) -> &[(usize, Scalar)] {
        &self.cols[j]
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(Vec::is_empty)
    }

    pub fn get(&self, i: usize, j: usize) -> Scalar {
        self.cols[j].binary_search_by_key(&i, |(r, _)| *r).map(|k| self.cols[j][k].1.clone()).unwrap_or_else(|_| self.field.zero())
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols.len(), "SpMat::apply: dimension mismatch");
        let mut out = vec![self.field.zero(); self.rows];
        for (x, col) in v.iter().zip(&self.cols) {
            if x.is_zero() {
                continue;
            }
            for (i, a) in col {
                out[*i] += &(a * x);
            }
        }
        out
    }

    /// `self · v` for sparse `v`.
    pub fn apply_sparse(&self, v: &[(usize, Scalar)]) -> Vec<(usize, Scalar)> {
        let mut acc = Acc::new(self.field, self.rows);
        for (j, x) in v {
            for (i, a) in &self.cols[*j] {
                acc.add(*i, &(a * x));
            }
        }
        acc.drain(&self.field.zero())
    }

    pub fn mul(&self, other: &SpMat) -> SpMat {
        assert_eq!(self.cols.len(), other.rows, "SpMat::mul: {}x{} * {}x{}", self.rows, self.cols.len(), other.rows, other.cols.len());
        let mut acc = Acc::new(self.field, self.rows);
        let zero = self.field.zero();
        let cols = other
            .cols
            .iter()
            .map(|col| {
                for (k, b) in col {
                    for (i, a) in &self.cols[*k] {
                        acc.add(*i, &(a * b));
                    }
                }
                acc.drain(&zero)
            })
            .collect();
        SpMat { rows: self.rows, field: self.field, cols }
    }

    pub fn transpose(&self) -> SpMat {
        let mut cols = vec![Vec::new(); self.rows];
        for (j, col) in self.cols.iter().enumerate() {
            for (i, x) in col {
                cols[*i].push((j, x.clone()));
            }
        }
        SpMat { rows: self.cols.len(), field: self.field, cols }
    }

    /// `self + c · other`.
    pub fn add_scaled(&self, other: &SpMat, c: &Scalar) -> SpMat {
        assert_eq!((self.rows, self.cols()), (other.rows, other.cols()));
        if c.is_zero() {
            return self.clone();
        }
        let mut acc = Acc::new(self.field, self.rows);
        let zero = self.field.zero();
        let cols = self
            .cols
            .iter()
            .zip(&other.cols)
            .map(|(a, b)| {
                for (i, x) in a {
                    acc.add(*i, x);
                }
                for (i, x) in b {
                    acc.add(*i, &(x * c));
                }
                acc.drain(&zero)
            })
            .collect();
        SpMat { rows: self.rows, field: self.field, cols }
    }

    pub fn add(&self, other: &SpMat) -> SpMat {
        self.add_scaled(other, &self.field.one())
    }

    pub fn sub(&self, other: &SpMat) -> SpMat {
        self.add_scaled(other, &self.field.int(-1))
    }

    pub fn scale(&self, c: &Scalar) -> SpMat {
        if c.is_zero() {
            return SpMat::zeros(self.field, self.rows, self.cols());
        }
        SpMat { rows: self.rows, field: self.field, cols: self.cols.iter().map(|col| col.iter().map(|(i, x)| (*i, x * c)).collect()).collect() }
    }

    /// Kronecker product, `(i ⊗ j) ↦ i * dim(B) + j`.
    pub fn kron(&self, other: &SpMat) -> SpMat {
        let (r2, c2) = (other.rows, other.cols());
        let mut cols = Vec::with_capacity(self.cols() * c2);
        for a in &self.cols {
            for b in &other.cols {
                let mut col = Vec::with_capacity(a.len() * b.len());
                for (i, x) in a {
                    for (k, y) in b {
                        col.push((i * r2 + k, x * y));
                    }
                }
                cols.push(col);
            }
        }
        SpMat { rows: self.rows * r2, field: self.field, cols }
    }

    /// `self · m` for dense `m`.
    pub fn mul_dense(&self, m: &Matrix) -> Matrix {
        assert_eq!(self.cols(), m.rows(), "SpMat::mul_dense: dimension mismatch");
        let mut out = Matrix::zeros(self.field, self.rows, m.cols());
        for (k, col) in self.cols.iter().enumerate() {
            let row = m.row(k);
            for (i, a) in col {
                for (j, b) in row.iter().enumerate() {
                    if !b.is_zero() {
                        out[(*i, j)] += &(a * b);
                    }
                }
            }
        }
        out
    }

    /// Columns as residues modulo `p`; `None` if a rational denominator vanishes.
    pub fn residues(&self, p: u64) -> Option<Vec<Vec<(usize, u64)>>> {
        let red = |x: &Scalar| -> Option<u64> {
            match self.field {
                Field::Prime { p: q } if q == p => x.residue(),
                Field::Prime { .. } => None,
                Field::Rationals => x.reduce_mod(p)?.residue(),
            }
        };
        self.cols.iter().map(|col| col.iter().map(|(i, x)| Some((*i, red(x)?))).collect()).collect()
    }

    /// Linear combination `Σ c_k M_k` of equally shaped matrices.
    pub fn combination<'a>(field: Field, rows: usize, cols: usize, terms: impl IntoIterator<Item = (Scalar, &'a SpMat)>) -> SpMat {
        let terms: Vec<(Scalar, &SpMat)> = terms.into_iter().filter(|(c, _)| !c.is_zero()).collect();
        let mut acc = Acc::new(field, rows);
        let zero = field.zero();
        let out = (0..cols)
            .map(|j| {
                for (c, m) in &terms {
                    for (i, x) in &m.cols[j] {
                        acc.add(*i, &(x * c));
                    }
                }
                acc.drain(&zero)
            })
            .collect();
        SpMat { rows, field, cols: out }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dense(rows: &[&[i64]]) -> Matrix {
        Matrix::from_i64(Field::Rationals, rows)
    }

    #[test]
    fn agrees_with_dense_operations() {
        let a = dense(&[&[1, 0, 2], &[0, 0, -1]]);
        let b = dense(&[&[0, 1], &[3, 0], &[1, 1]]);
        let (sa, sb) = (SpMat::from_dense(&a), SpMat::from_dense(&b));
        assert_eq!(sa.mul(&sb).to_dense(), a.mul(&b));
        assert_eq!(sa.kron(&sb).to_dense(), a.kron(&b));
        assert_eq!(sa.transpose().to_dense(), a.transpose());
        let c = dense(&[&[-1, 0, -2], &[0, 1, 1]]);
        assert_eq!(sa.add(&SpMat::from_dense(&c)).to_dense(), a.add(&c));
        assert!(sa.sub(&sa).is_zero());
    }
}
