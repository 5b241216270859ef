//! Dense and sparse vectors in tensor powers, and local application of maps.

use std::collections::BTreeMap;

use crate::matrix::Matrix;
use crate::scalar::{Field, Scalar};

/// Sparse vector: `(index, coefficient)` pairs with nonzero coefficients.
pub type Sparse = Vec<(usize, Scalar)>;

pub fn sparse_of(v: &[Scalar]) -> Sparse {
    v.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, x)| (i, x.clone())).collect()
}

pub fn dense_of(field: Field, len: usize, s: &[(usize, Scalar)]) -> Vec<Scalar> {
    let mut v = vec![field.zero(); len];
    for (i, x) in s {
        v[*i] += x;
    }
    v
}

/// Column `j` of `m` as a sparse vector.
pub fn sparse_column(m: &Matrix, j: usize) -> Sparse {
    (0..m.rows()).filter(|&i| !m[(i, j)].is_zero()).map(|i| (i, m[(i, j)].clone())).collect()
}

/// Sparse columns of a matrix.
pub fn sparse_columns(m: &Matrix) -> Vec<Sparse> {
    let mut cols = vec![Vec::new(); m.cols()];
    for i in 0..m.rows() {
        for (j, x) in m.row(i).iter().enumerate() {
            if !x.is_zero() {
                cols[j].push((i, x.clone()));
            }
        }
    }
    cols
}

/// Applies `f` (given on basis vectors, `din → dout`) to the middle block of a
/// vector in `k^pre ⊗ k^din ⊗ k^post`.
pub fn apply_local(
    field: Field,
    v: &[Scalar],
    pre: usize,
    din: usize,
    post: usize,
    dout: usize,
    mut f: impl FnMut(usize) -> Sparse,
) -> Vec<Scalar> {
    assert_eq!(v.len(), pre * din * post, "apply_local: length mismatch");
    let images: Vec<Sparse> = (0..din).map(&mut f).collect();
    let mut out = vec![field.zero(); pre * dout * post];
    for (idx, x) in v.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        let q = idx % post;
        let rest = idx / post;
        let (p, i) = (rest / din, rest % din);
        for (o, c) in &images[i] {
            out[(p * dout + o) * post + q] += &(x * c);
        }
    }
    out
}

/// Sparse analogue of [`apply_local`], with `m` of shape `dout × din`.
pub fn apply_sparse_local(v: &[(usize, Scalar)], pre: usize, post: usize, m: &crate::sparse::SpMat) -> Sparse {
    let (din, dout) = (m.cols(), m.rows());
    debug_assert!(v.iter().all(|(i, _)| *i < pre * din * post));
    let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
    for (idx, x) in v {
        let q = idx % post;
        let rest = idx / post;
        let (p, i) = (rest / din, rest % din);
        for (o, c) in m.column(i) {
            let k = (p * dout + o) * post + q;
            let t = x * c;
            match acc.get_mut(&k) {
                Some(s) => *s += &t,
                None => {
                    acc.insert(k, t);
                }
            }
        }
    }
    acc.into_iter().filter(|(_, x)| !x.is_zero()).collect()
}

/// `apply_local` with a matrix `dout × din`.
pub fn apply_matrix_local(v: &[Scalar], pre: usize, post: usize, m: &Matrix) -> Vec<Scalar> {
    let cols = sparse_columns(m);
    apply_local(m.field(), v, pre, m.cols(), post, m.rows(), |i| cols[i].clone())
}

/// Swaps the two factors of `k^a ⊗ k^b`.
pub fn flip(field: Field, v: &[Scalar], a: usize, b: usize) -> Vec<Scalar> {
    let mut out = vec![field.zero(); a * b];
    for i in 0..a {
        for j in 0..b {
            out[j * a + i] = v[i * b + j].clone();
        }
    }
    out
}

/// The matrix of the flip `k^a ⊗ k^b → k^b ⊗ k^a`.
pub fn flip_matrix(field: Field, a: usize, b: usize) -> Matrix {
    let mut m = Matrix::zeros(field, a * b, a * b);
    for i in 0..a {
        for j in 0..b {
            m[(j * a + i, i * b + j)] = field.one();
        }
    }
    m
}

pub fn kron_vec(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    let mut out = Vec::with_capacity(a.len() * b.len());
    for x in a {
        for y in b {
            out.push(x * y);
        }
    }
    out
}
