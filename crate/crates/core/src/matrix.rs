//! Dense exact matrices and the elimination kernel.
//!
//! Tensor index convention, used everywhere: the basis vector `e_i ⊗ e_j` of
//! `V ⊗ W` sits at position `i * dim(W) + j`.

use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::{Field, Scalar};

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    field: Field,
    data: Vec<Scalar>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over {}", self.rows, self.cols, self.field)?;
        for i in 0..self.rows.min(24) {
            let row: Vec<String> = (0..self.cols.min(24)).map(|j| self[(i, j)].to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = Scalar;
    fn index(&self, (i, j): (usize, usize)) -> &Scalar {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Scalar {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl Matrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Matrix {
        Matrix { rows, cols, field, data: vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: Field, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m[(i, i)] = field.one();
        }
        m
    }

    pub fn from_fn(field: Field, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Matrix {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, field, data }
    }

    pub fn from_rows(field: Field, rows: &[Vec<Scalar>]) -> Matrix {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged rows");
        Matrix { rows: r, cols: c, field, data: rows.iter().flatten().cloned().collect() }
    }

    pub fn from_i64(field: Field, rows: &[&[i64]]) -> Matrix {
        let rows: Vec<Vec<Scalar>> = rows.iter().map(|r| r.iter().map(|&x| field.int(x)).collect()).collect();
        Matrix::from_rows(field, &rows)
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(field: Field, len: usize, cols: &[Vec<Scalar>]) -> Matrix {
        let mut m = Matrix::zeros(field, len, cols.len());
        for (j, c) in cols.iter().enumerate() {
            assert_eq!(c.len(), len);
            for (i, x) in c.iter().enumerate() {
                m[(i, j)] = x.clone();
            }
        }
        m
    }

    pub fn column_vector(field: Field, v: &[Scalar]) -> Matrix {
        Matrix { rows: v.len(), cols: 1, field, data: v.to_vec() }
    }

    pub fn row_vector(field: Field, v: &[Scalar]) -> Matrix {
        Matrix { rows: 1, cols: v.len(), field, data: v.to_vec() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<Scalar>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.field, self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        Matrix { data: self.data.iter().map(|x| x * s).collect(), ..self.clone() }
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.shape(), other.shape(), "add: shape mismatch");
        Matrix { data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(), ..self.clone() }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.shape(), other.shape(), "sub: shape mismatch");
        Matrix { data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(), ..self.clone() }
    }

    pub fn add_assign(&mut self, other: &Matrix) {
        assert_eq!(self.shape(), other.shape(), "add: shape mismatch");
        for (a, b) in self.data.iter_mut().zip(&other.data) {
            if !b.is_zero() {
                *a += b;
            }
        }
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "mul: {}x{} * {}x{}", self.rows, self.cols, other.rows, other.cols);
        let mut out = Matrix::zeros(self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                let brow = other.row(k);
                let orow = &mut out.data[i * other.cols..(i + 1) * other.cols];
                for (o, b) in orow.iter_mut().zip(brow) {
                    if !b.is_zero() {
                        *o += &(a * b);
                    }
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len(), "apply: dimension mismatch");
        let mut out = vec![self.field.zero(); self.rows];
        for (j, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (i, o) in out.iter_mut().enumerate() {
                let a = &self[(i, j)];
                if !a.is_zero() {
                    *o += &(a * x);
                }
            }
        }
        out
    }

    /// Kronecker product, `(i ⊗ j) ↦ i * dim(B) + j`.
    pub fn kron(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.field, other.field, "kron: mixed fields");
        let (r, c) = (self.rows * other.rows, self.cols * other.cols);
        let mut out = Matrix::zeros(self.field, r, c);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = &self[(i, j)];
                if a.is_zero() {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        let b = &other[(k, l)];
                        if !b.is_zero() {
                            out[(i * other.rows + k, j * other.cols + l)] = a * b;
                        }
                    }
                }
            }
        }
        out
    }

    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows);
        Matrix::from_fn(self.field, self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols { self[(i, j)].clone() } else { other[(i, j - self.cols)].clone() }
        })
    }

    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Matrix { rows: self.rows + other.rows, cols: self.cols, field: self.field, data }
    }

    pub fn vstack_all(field: Field, cols: usize, blocks: &[Matrix]) -> Matrix {
        let mut data = Vec::new();
        let mut rows = 0;
        for b in blocks {
            assert_eq!(b.cols, cols);
            rows += b.rows;
            data.extend(b.data.iter().cloned());
        }
        Matrix { rows, cols, field, data }
    }

    /// Brings the matrix to reduced row echelon form in place, returning pivot columns.
    /// Pivoting is deterministic: first nonzero column, topmost eligible row.
    pub fn rref_in_place(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self[(i, c)].is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..self.cols {
                    self.data.swap(p * self.cols + j, r * self.cols + j);
                }
            }
            let inv = self[(r, c)].inv().unwrap();
            for j in c..self.cols {
                if !self[(r, j)].is_zero() {
                    self[(r, j)] = &self[(r, j)] * &inv;
                }
            }
            let pivot_row: Vec<(usize, Scalar)> =
                (c..self.cols).filter(|&j| !self[(r, j)].is_zero()).map(|j| (j, self[(r, j)].clone())).collect();
            for i in 0..self.rows {
                if i == r || self[(i, c)].is_zero() {
                    continue;
                }
                let f = self[(i, c)].clone();
                for (j, v) in &pivot_row {
                    let t = &f * v;
                    self[(i, *j)] -= &t;
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let p = m.rref_in_place();
        (m, p)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the kernel, one vector per free column, normalized to 1 there.
    pub fn nullspace(&self) -> Vec<Vec<Scalar>> {
        let (r, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![self.field.zero(); self.cols];
            v[free] = self.field.one();
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -&r[(row, free)];
            }
            basis.push(v);
        }
        basis
    }

    /// Some `X` with `self * X = b`, free variables set to zero.
    pub fn solve(&self, b: &Matrix) -> Result<Matrix> {
        if self.rows != b.rows {
            return Err(Error::ShapeMismatch(format!("solve: {} rows vs {} rows", self.rows, b.rows)));
        }
        let aug = self.hstack(b);
        let (r, pivots) = aug.rref();
        if pivots.iter().any(|&p| p >= self.cols) {
            return Err(Error::Inconsistent);
        }
        let mut x = Matrix::zeros(self.field, self.cols, b.cols);
        for (row, &p) in pivots.iter().enumerate() {
            for j in 0..b.cols {
                x[(p, j)] = r[(row, self.cols + j)].clone();
            }
        }
        Ok(x)
    }

    pub fn invert(&self) -> Result<Matrix> {
        if !self.is_square() {
            return Err(Error::ShapeMismatch(format!("invert: {}x{}", self.rows, self.cols)));
        }
        let n = self.rows;
        let aug = self.hstack(&Matrix::identity(self.field, n));
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] >= n {
            return Err(Error::Singular);
        }
        Ok(Matrix::from_fn(self.field, n, n, |i, j| r[(i, n + j)].clone()))
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    pub fn determinant(&self) -> Scalar {
        assert!(self.is_square());
        let n = self.rows;
        let mut m = self.clone();
        let mut det = self.field.one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m[(i, c)].is_zero()) else {
                return self.field.zero();
            };
            if p != c {
                for j in 0..n {
                    m.data.swap(p * n + j, c * n + j);
                }
                det = -det;
            }
            let piv = m[(c, c)].clone();
            det = &det * &piv;
            let inv = piv.inv().unwrap();
            for i in c + 1..n {
                if m[(i, c)].is_zero() {
                    continue;
                }
                let f = &m[(i, c)] * &inv;
                for j in c..n {
                    let t = &f * &m[(c, j)];
                    m[(i, j)] -= &t;
                }
            }
        }
        det
    }

    /// Entrywise reduction of a rational matrix modulo `p`; `None` if a denominator vanishes.
    pub fn reduce_mod(&self, p: u64) -> Option<Matrix> {
        let f = Field::Prime { p };
        let data: Option<Vec<Scalar>> = self.data.iter().map(|x| x.reduce_mod(p)).collect();
        Some(Matrix { rows: self.rows, cols: self.cols, field: f, data: data? })
    }

    /// Entries as residues modulo `p` (the field's own prime, or a reduction of rationals).
    pub fn residues(&self, p: u64) -> Option<Vec<u64>> {
        match self.field {
            Field::Prime { p: q } if q == p => self.data.iter().map(Scalar::residue).collect(),
            Field::Prime { .. } => None,
            Field::Rationals => self.data.iter().map(|x| x.reduce_mod(p)?.residue()).collect(),
        }
    }

    /// Rank of the reduction modulo `p`, computed in machine arithmetic.
    pub fn rank_mod(&self, p: u64) -> Option<usize> {
        Some(rank_mod_u64(self.rows, self.cols, self.residues(p)?, p))
    }

    /// Rank, via machine arithmetic when the field is a prime field.
    pub fn fast_rank(&self) -> usize {
        match self.field {
            Field::Prime { p } => self.rank_mod(p).expect("own residues"),
            Field::Rationals => self.rank(),
        }
    }

    /// Sufficient certificate of invertibility: full rank here or after reduction modulo a large prime.
    pub fn certify_invertible(&self) -> bool {
        if !self.is_square() {
            return false;
        }
        if self.field == Field::Rationals {
            for p in CERT_PRIMES {
                if self.rank_mod(p) == Some(self.rows) {
                    return true;
                }
            }
        }
        self.fast_rank() == self.rows
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    /// Submatrix of the given columns.
    pub fn select_columns(&self, cols: &[usize]) -> Matrix {
        Matrix::from_fn(self.field, self.rows, cols.len(), |i, j| self[(i, cols[j])].clone())
    }

    pub fn select_rows(&self, rows: &[usize]) -> Matrix {
        Matrix::from_fn(self.field, rows.len(), self.cols, |i, j| self[(rows[i], j)].clone())
    }
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn inv_mod(a: u64, p: u64) -> u64 {
    let (mut acc, mut base, mut e) = (1u64, a, p - 2);
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        e >>= 1;
    }
    acc
}

/// Rank of a row-major residue matrix modulo the prime `p`.
pub fn rank_mod_u64(rows: usize, cols: usize, mut d: Vec<u64>, p: u64) -> usize {
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(piv) = (r..rows).find(|&i| d[i * cols + c] != 0) else {
            continue;
        };
        if piv != r {
            for j in 0..cols {
                d.swap(piv * cols + j, r * cols + j);
            }
        }
        let inv = inv_mod(d[r * cols + c], p);
        for j in c..cols {
            d[r * cols + j] = mul_mod(d[r * cols + j], inv, p);
        }
        for i in r + 1..rows {
            let f = d[i * cols + c];
            if f == 0 {
                continue;
            }
            for j in c..cols {
                let t = mul_mod(f, d[r * cols + j], p);
                let x = d[i * cols + j];
                d[i * cols + j] = if x >= t { x - t } else { x + p - t };
            }
        }
        r += 1;
    }
    r
}

/// Large primes used to certify invertibility of rational matrices by reduction.
pub const CERT_PRIMES: [u64; 3] = [2305843009213693951, 1000000007, 998244353];

/// Incrementally maintained echelon basis with coordinates of every reduced row
/// in terms of the inserted vectors.
#[derive(Clone, Debug)]
pub struct EchelonBasis {
    field: Field,
    dim: usize,
    rows: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
    coords: Vec<Vec<Scalar>>,
    inserted: usize,
    track: bool,
}

impl EchelonBasis {
    pub fn new(field: Field, dim: usize, track: bool) -> EchelonBasis {
        EchelonBasis { field, dim, rows: Vec::new(), pivots: Vec::new(), coords: Vec::new(), inserted: 0, track }
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// The stored (mutually reduced) rows.
    pub fn rows(&self) -> &[Vec<Scalar>] {
        &self.rows
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.dim
    }

    /// Reduces `v` against the stored rows; returns the remainder and (if tracking)
    /// the combination of stored rows that was subtracted.
    fn reduce(&self, v: &[Scalar]) -> (Vec<Scalar>, Vec<Scalar>) {
        let mut v = v.to_vec();
        let mut comb = if self.track { vec![self.field.zero(); self.inserted] } else { Vec::new() };
        for (k, (row, &p)) in self.rows.iter().zip(&self.pivots).enumerate() {
            if v[p].is_zero() {
                continue;
            }
            let f = v[p].clone();
            for (x, r) in v.iter_mut().zip(row) {
                if !r.is_zero() {
                    *x -= &(&f * r);
                }
            }
            if self.track {
                for (c, r) in comb.iter_mut().zip(&self.coords[k]) {
                    if !r.is_zero() {
                        *c += &(&f * r);
                    }
                }
            }
        }
        (v, comb)
    }

    /// `v` reduced against the stored rows: zero at every pivot.
    pub fn remainder(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.reduce(v).0
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.reduce(v).0.iter().all(Scalar::is_zero)
    }

    /// Coordinates of `v` in terms of the inserted (independent) vectors, if `v` lies in the span.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        assert!(self.track);
        let (rest, comb) = self.reduce(v);
        rest.iter().all(Scalar::is_zero).then_some(comb)
    }

    /// Inserts `v` if independent; returns whether it was added.
    pub fn insert(&mut self, v: &[Scalar]) -> bool {
        assert_eq!(v.len(), self.dim);
        let (mut rest, comb) = self.reduce(v);
        let Some(p) = rest.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = rest[p].inv().unwrap();
        for x in rest.iter_mut() {
            if !x.is_zero() {
                *x = &*x * &inv;
            }
        }
        if self.track {
            // new row = inv * (v - Σ comb_k inserted_k)
            let mut c: Vec<Scalar> = comb.iter().map(|x| -&(x * &inv)).collect();
            c.push(inv);
            for old in self.coords.iter_mut() {
                old.push(self.field.zero());
            }
            self.coords.push(c);
        }
        // keep every stored row zero at every other pivot
        for k in 0..self.rows.len() {
            if self.rows[k][p].is_zero() {
                continue;
            }
            let f = self.rows[k][p].clone();
            for (x, r) in self.rows[k].iter_mut().zip(&rest) {
                if !r.is_zero() {
                    *x -= &(&f * r);
                }
            }
            if self.track {
                let last = self.coords.len() - 1;
                let newc = self.coords[last].clone();
                for (x, r) in self.coords[k].iter_mut().zip(&newc) {
                    if !r.is_zero() {
                        *x -= &(&f * r);
                    }
                }
            }
        }
        self.inserted += 1;
        self.rows.push(rest);
        self.pivots.push(p);
        true
    }
}

pub fn vec_is_zero(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

pub fn vec_add(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn vec_scale(a: &[Scalar], s: &Scalar) -> Vec<Scalar> {
    a.iter().map(|x| x * s).collect()
}

pub fn unit_vector(field: Field, n: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![field.zero(); n];
    v[i] = field.one();
    v
}

/// Kernel of a family of maps, computed by stacking.
pub fn common_kernel(field: Field, cols: usize, maps: &[Matrix]) -> Vec<Vec<Scalar>> {
    if maps.is_empty() {
        return (0..cols).map(|i| unit_vector(field, cols, i)).collect();
    }
    Matrix::vstack_all(field, cols, maps).nullspace()
}

/// Dimension of the span of a list of vectors.
pub fn span_dim(field: Field, dim: usize, vs: &[Vec<Scalar>]) -> usize {
    let mut e = EchelonBasis::new(field, dim, false);
    for v in vs {
        e.insert(v);
    }
    e.len()
}
