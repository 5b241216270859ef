//! Finite-dimensional Hopf algebras given by structure constants.
//!
//! Matrices follow the "matrix of a linear map" convention: `mult[(k, i*n+j)]`
//! is the coefficient of `e_k` in `e_i e_j`, `comult[(i*n+j, k)]` that of
//! `e_i ⊗ e_j` in `Δ(e_k)`, and column `j` of `antipode` is `S(e_j)`.

mod builders;
mod integrals;
mod io;
mod quasi;

use std::sync::OnceLock;

pub use builders::*;
pub use integrals::*;
pub use io::*;
pub use quasi::*;

use crate::error::{Error, Result};
use crate::matrix::{EchelonBasis, Matrix};
use crate::report::Report;
use crate::scalar::{Field, Scalar};
use crate::tensor::{sparse_columns, sparse_of, Sparse};

/// Raw structure constants, as read from or written to disk.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfData {
    pub name: String,
    pub field: Field,
    pub basis: Vec<String>,
    pub mult: Matrix,
    pub unit: Vec<Scalar>,
    pub comult: Matrix,
    pub counit: Vec<Scalar>,
    pub antipode: Matrix,
    pub rmatrix: Option<Vec<Scalar>>,
    pub ribbon: Option<Vec<Scalar>>,
}

/// A triple `(i, j, c)`: coefficient `c` on `e_i ⊗ e_j`.
pub type Pair = (usize, usize, Scalar);

#[derive(Debug)]
pub struct HopfAlgebra {
    data: HopfData,
    prod: Vec<Sparse>,
    cop: Vec<Vec<Pair>>,
    anti: Vec<Sparse>,
    anti_inv: OnceLock<Option<Matrix>>,
    gens: OnceLock<Vec<usize>>,
    cop2: OnceLock<Vec<Vec<(usize, usize, usize, Scalar)>>>,
}

impl Clone for HopfAlgebra {
    fn clone(&self) -> Self {
        HopfAlgebra::new(self.data.clone()).expect("already validated")
    }
}

impl HopfAlgebra {
    /// Wraps structure constants after checking shapes; axioms are checked by [`verify_hopf`].
    pub fn new(data: HopfData) -> Result<HopfAlgebra> {
        let n = data.basis.len();
        let shape = |what: &str, got: (usize, usize), want: (usize, usize)| {
            if got == want {
                Ok(())
            } else {
                Err(Error::ShapeMismatch(format!("{what} is {}x{}, expected {}x{}", got.0, got.1, want.0, want.1)))
            }
        };
        if n == 0 {
            return Err(Error::ShapeMismatch("empty basis".into()));
        }
        shape("multiplication", data.mult.shape(), (n, n * n))?;
        shape("comultiplication", data.comult.shape(), (n * n, n))?;
        shape("antipode", data.antipode.shape(), (n, n))?;
        shape("unit", (data.unit.len(), 1), (n, 1))?;
        shape("counit", (data.counit.len(), 1), (n, 1))?;
        if let Some(r) = &data.rmatrix {
            shape("R-matrix", (r.len(), 1), (n * n, 1))?;
        }
        if let Some(v) = &data.ribbon {
            shape("ribbon element", (v.len(), 1), (n, 1))?;
        }
        for m in [&data.mult, &data.comult, &data.antipode] {
            if m.field() != data.field {
                return Err(Error::ShapeMismatch("structure constants over the wrong field".into()));
            }
        }
        let prod = sparse_columns(&data.mult);
        let cop = sparse_columns(&data.comult)
            .into_iter()
            .map(|col| col.into_iter().map(|(ij, c)| (ij / n, ij % n, c)).collect())
            .collect();
        let anti = sparse_columns(&data.antipode);
        Ok(HopfAlgebra {
            data,
            prod,
            cop,
            anti,
            anti_inv: OnceLock::new(),
            gens: OnceLock::new(),
            cop2: OnceLock::new(),
        })
    }

    pub fn data(&self) -> &HopfData {
        &self.data
    }

    pub fn into_data(self) -> HopfData {
        self.data
    }

    pub fn name(&self) -> &str {
        &self.data.name
    }

    pub fn dim(&self) -> usize {
        self.data.basis.len()
    }

    pub fn field(&self) -> Field {
        self.data.field
    }

    pub fn basis(&self) -> &[String] {
        &self.data.basis
    }

    pub fn rmatrix(&self) -> Option<&[Scalar]> {
        self.data.rmatrix.as_deref()
    }

    pub fn ribbon(&self) -> Option<&[Scalar]> {
        self.data.ribbon.as_deref()
    }

    pub fn with_rmatrix(&self, r: Option<Vec<Scalar>>, ribbon: Option<Vec<Scalar>>) -> Result<HopfAlgebra> {
        let mut d = self.data.clone();
        d.rmatrix = r;
        d.ribbon = ribbon;
        HopfAlgebra::new(d)
    }

    pub fn zero(&self) -> Vec<Scalar> {
        vec![self.field().zero(); self.dim()]
    }

    pub fn one(&self) -> Vec<Scalar> {
        self.data.unit.clone()
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Scalar> {
        crate::matrix::unit_vector(self.field(), self.dim(), i)
    }

    /// `e_i e_j`.
    pub fn mul_basis(&self, i: usize, j: usize) -> &[(usize, Scalar)] {
        &self.prod[i * self.dim() + j]
    }

    /// `Δ(e_k)` as `(i, j, c)` triples.
    pub fn comult_basis(&self, k: usize) -> &[Pair] {
        &self.cop[k]
    }

    /// `S(e_j)`.
    pub fn antipode_basis(&self, j: usize) -> &[(usize, Scalar)] {
        &self.anti[j]
    }

    pub fn counit_basis(&self, i: usize) -> &Scalar {
        &self.data.counit[i]
    }

    pub fn mul(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        let mut out = self.zero();
        for (i, x) in a.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (j, y) in b.iter().enumerate().filter(|(_, y)| !y.is_zero()) {
                let xy = x * y;
                for (k, c) in self.mul_basis(i, j) {
                    out[*k] += &(&xy * c);
                }
            }
        }
        out
    }

    pub fn counit(&self, a: &[Scalar]) -> Scalar {
        let mut s = self.field().zero();
        for (x, e) in a.iter().zip(&self.data.counit) {
            if !x.is_zero() && !e.is_zero() {
                s += &(x * e);
            }
        }
        s
    }

    pub fn comult(&self, a: &[Scalar]) -> Vec<Scalar> {
        let n = self.dim();
        let mut out = vec![self.field().zero(); n * n];
        for (k, x) in a.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (i, j, c) in self.comult_basis(k) {
                out[i * n + j] += &(x * c);
            }
        }
        out
    }

    pub fn antipode(&self, a: &[Scalar]) -> Vec<Scalar> {
        self.data.antipode.apply(a)
    }

    pub fn antipode_matrix(&self) -> &Matrix {
        &self.data.antipode
    }

    pub fn mult_matrix(&self) -> &Matrix {
        &self.data.mult
    }

    pub fn comult_matrix(&self) -> &Matrix {
        &self.data.comult
    }

    pub fn unit_vector(&self) -> &[Scalar] {
        &self.data.unit
    }

    pub fn counit_vector(&self) -> &[Scalar] {
        &self.data.counit
    }

    pub fn antipode_inv_matrix(&self) -> Result<&Matrix> {
        self.anti_inv.get_or_init(|| self.data.antipode.invert().ok()).as_ref().ok_or(Error::Singular)
    }

    pub fn antipode_inv(&self, a: &[Scalar]) -> Result<Vec<Scalar>> {
        Ok(self.antipode_inv_matrix()?.apply(a))
    }

    /// `(Δ ⊗ id)Δ(e_k)` as `(i, j, l, c)`.
    pub fn comult2_basis(&self, k: usize) -> &[(usize, usize, usize, Scalar)] {
        let all = self.cop2.get_or_init(|| {
            (0..self.dim())
                .map(|k| {
                    let n = self.dim();
                    let mut acc = vec![self.field().zero(); n * n * n];
                    for (a, l, c) in self.comult_basis(k) {
                        for (i, j, d) in self.comult_basis(*a) {
                            acc[(i * n + j) * n + l] += &(c * d);
                        }
                    }
                    sparse_of(&acc).into_iter().map(|(idx, c)| (idx / (n * n), (idx / n) % n, idx % n, c)).collect()
                })
                .collect()
        });
        &all[k]
    }

    /// Matrix of `x ↦ a x`.
    pub fn left_mult_matrix(&self, a: &[Scalar]) -> Matrix {
        let n = self.dim();
        let cols: Vec<Vec<Scalar>> = (0..n).map(|j| self.mul(a, &self.basis_vector(j))).collect();
        Matrix::from_columns(self.field(), n, &cols)
    }

    /// Matrix of `x ↦ x a`.
    pub fn right_mult_matrix(&self, a: &[Scalar]) -> Matrix {
        let n = self.dim();
        let cols: Vec<Vec<Scalar>> = (0..n).map(|j| self.mul(&self.basis_vector(j), a)).collect();
        Matrix::from_columns(self.field(), n, &cols)
    }

    /// Product in `H^{⊗k}`, factorwise.
    pub fn mul_tensor(&self, a: &[Scalar], b: &[Scalar], k: usize) -> Vec<Scalar> {
        let n = self.dim();
        let len = n.pow(k as u32);
        assert_eq!(a.len(), len);
        assert_eq!(b.len(), len);
        let mut out = vec![self.field().zero(); len];
        let digits = |mut idx: usize| {
            let mut d = vec![0; k];
            for slot in d.iter_mut().rev() {
                *slot = idx % n;
                idx /= n;
            }
            d
        };
        for (ia, x) in a.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            let da = digits(ia);
            for (ib, y) in b.iter().enumerate().filter(|(_, y)| !y.is_zero()) {
                let db = digits(ib);
                let mut terms: Vec<(usize, Scalar)> = vec![(0, x * y)];
                for f in 0..k {
                    let p = self.mul_basis(da[f], db[f]);
                    let mut next = Vec::with_capacity(terms.len() * p.len());
                    for (idx, c) in &terms {
                        for (m, d) in p {
                            next.push((idx * n + m, c * d));
                        }
                    }
                    terms = next;
                }
                for (idx, c) in terms {
                    out[idx] += &c;
                }
            }
        }
        out
    }

    /// Pure tensor `a_1 ⊗ ... ⊗ a_k`.
    pub fn tensor_of(&self, parts: &[&[Scalar]]) -> Vec<Scalar> {
        let mut acc = vec![self.field().one()];
        for p in parts {
            acc = crate::tensor::kron_vec(&acc, p);
        }
        acc
    }

    /// Basis indices generating `H` as an algebra, chosen greedily in basis order.
    pub fn algebra_generators(&self) -> &[usize] {
        self.gens.get_or_init(|| {
            let n = self.dim();
            let mut gens = Vec::new();
            let mut span = EchelonBasis::new(self.field(), n, false);
            let mut vectors = vec![self.one()];
            span.insert(&self.one());
            for i in 0..n {
                if span.is_full() {
                    break;
                }
                if span.contains(&self.basis_vector(i)) {
                    continue;
                }
                gens.push(i);
                // close span under left multiplication by the generators
                let mut k = 0;
                let mut frontier: Vec<Vec<Scalar>> = vectors.clone();
                while k < frontier.len() {
                    let v = frontier[k].clone();
                    k += 1;
                    for &g in &gens {
                        let w = self.mul(&self.basis_vector(g), &v);
                        if span.insert(&w) {
                            vectors.push(w.clone());
                            frontier.push(w);
                        }
                    }
                }
            }
            gens
        })
    }

    /// Element label for witnesses.
    pub fn label(&self, i: usize) -> &str {
        &self.data.basis[i]
    }

    pub fn format_element(&self, v: &[Scalar]) -> String {
        let mut out = String::new();
        for (i, x) in v.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            let c = x.to_string();
            let (neg, c) = match c.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, c),
            };
            let term = if c == "1" { self.label(i).to_string() } else { format!("{c}·{}", self.label(i)) };
            match (out.is_empty(), neg) {
                (true, true) => out.push('-'),
                (true, false) => {}
                (false, true) => out.push_str(" - "),
                (false, false) => out.push_str(" + "),
            }
            out.push_str(&term);
        }
        if out.is_empty() { "0".into() } else { out }
    }
}

/// Checks every Hopf algebra axiom on basis elements.
pub fn verify_hopf(h: &HopfAlgebra) -> Report {
    let n = h.dim();
    let f = h.field();
    let mut rep = Report::new();
    let e = |i: usize| h.basis_vector(i);
    let lab = |ix: &[usize]| ix.iter().map(|&i| h.label(i)).collect::<Vec<_>>().join(", ");

    let mut w = None;
    'a: for i in 0..n {
        for j in 0..n {
            let ij = h.mul(&e(i), &e(j));
            for k in 0..n {
                if h.mul(&ij, &e(k)) != h.mul(&e(i), &h.mul(&e(j), &e(k))) {
                    w = Some(format!("({})", lab(&[i, j, k])));
                    break 'a;
                }
            }
        }
    }
    rep.outcome("associativity", w);

    let one = h.one();
    let w = (0..n).find(|&i| h.mul(&one, &e(i)) != e(i) || h.mul(&e(i), &one) != e(i));
    rep.outcome("unit", w.map(|i| lab(&[i])));

    let w = (0..n).find(|&k| {
        let d = h.comult(&e(k));
        let left = crate::tensor::apply_local(f, &d, 1, n, n, n * n, |i| sparse_of(&h.comult(&e(i))));
        let right = crate::tensor::apply_local(f, &d, n, n, 1, n * n, |i| sparse_of(&h.comult(&e(i))));
        left != right
    });
    rep.outcome("coassociativity", w.map(|k| lab(&[k])));

    let w = (0..n).find(|&k| {
        let d = h.comult(&e(k));
        let eps_row = |i: usize| -> Sparse {
            let c = h.counit_basis(i);
            if c.is_zero() { vec![] } else { vec![(0, c.clone())] }
        };
        let left = crate::tensor::apply_local(f, &d, 1, n, n, 1, eps_row);
        let right = crate::tensor::apply_local(f, &d, n, n, 1, 1, eps_row);
        left != e(k) || right != e(k)
    });
    rep.outcome("counit", w.map(|k| lab(&[k])));

    let mut w = None;
    'm: for i in 0..n {
        for j in 0..n {
            let lhs = h.comult(&h.mul(&e(i), &e(j)));
            let rhs = h.mul_tensor(&h.comult(&e(i)), &h.comult(&e(j)), 2);
            if lhs != rhs {
                w = Some(format!("({})", lab(&[i, j])));
                break 'm;
            }
        }
    }
    rep.outcome("comultiplication is multiplicative", w);
    let one2 = h.tensor_of(&[&one, &one]);
    rep.outcome("comultiplication is unital", (h.comult(&one) != one2).then(|| "Δ(1) ≠ 1⊗1".to_string()));

    let mut w = None;
    'c: for i in 0..n {
        for j in 0..n {
            if h.counit(&h.mul(&e(i), &e(j))) != h.counit_basis(i) * h.counit_basis(j) {
                w = Some(format!("({})", lab(&[i, j])));
                break 'c;
            }
        }
    }
    rep.outcome("counit is multiplicative", w);
    rep.outcome("counit is unital", (!h.counit(&one).is_one()).then(|| format!("ε(1) = {}", h.counit(&one))));

    let mut left_w = None;
    let mut right_w = None;
    for k in 0..n {
        let mut l = h.zero();
        let mut r = h.zero();
        for (i, j, c) in h.comult_basis(k) {
            let sl = h.mul(&h.antipode(&e(*i)), &e(*j));
            let sr = h.mul(&e(*i), &h.antipode(&e(*j)));
            for t in 0..n {
                l[t] += &(c * &sl[t]);
                r[t] += &(c * &sr[t]);
            }
        }
        let target: Vec<Scalar> = one.iter().map(|x| x * h.counit_basis(k)).collect();
        if left_w.is_none() && l != target {
            left_w = Some(lab(&[k]));
        }
        if right_w.is_none() && r != target {
            right_w = Some(lab(&[k]));
        }
    }
    rep.outcome("antipode (left)", left_w);
    rep.outcome("antipode (right)", right_w);
    rep.outcome("antipode is bijective", h.antipode_inv_matrix().is_err().then(|| "S is singular".to_string()));
    rep
}
