//! Quasitriangular and ribbon structures.

use super::{grouplikes, HopfAlgebra};
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::report::Report;
use crate::scalar::Scalar;
use crate::tensor::{apply_local, flip, sparse_of};

/// `(a ⊗ b) ↦ a ⊗ 1 ⊗ b`.
fn embed13(h: &HopfAlgebra, r: &[Scalar]) -> Vec<Scalar> {
    let n = h.dim();
    apply_local(h.field(), r, n, 1, n, n, |_| sparse_of(h.unit_vector()))
}

fn tensor1(h: &HopfAlgebra, r: &[Scalar], left: bool) -> Vec<Scalar> {
    let n = h.dim();
    if left {
        apply_local(h.field(), r, 1, 1, n * n, n, |_| sparse_of(h.unit_vector()))
    } else {
        apply_local(h.field(), r, n * n, 1, 1, n, |_| sparse_of(h.unit_vector()))
    }
}

fn comult_factor(h: &HopfAlgebra, v: &[Scalar], pre: usize, post: usize) -> Vec<Scalar> {
    let n = h.dim();
    apply_local(h.field(), v, pre, n, post, n * n, |i| {
        h.comult_basis(i).iter().map(|(a, b, c)| (a * n + b, c.clone())).collect()
    })
}

/// Inverse of an element of `H ⊗ H`, if any.
pub fn tensor_inverse(h: &HopfAlgebra, r: &[Scalar]) -> Option<Vec<Scalar>> {
    let n2 = h.dim() * h.dim();
    let f = h.field();
    let cols: Vec<Vec<Scalar>> = (0..n2).map(|j| h.mul_tensor(r, &crate::matrix::unit_vector(f, n2, j), 2)).collect();
    let lm = Matrix::from_columns(f, n2, &cols);
    let one = h.tensor_of(&[h.unit_vector(), h.unit_vector()]);
    let x = lm.solve(&Matrix::column_vector(f, &one)).ok()?.column(0);
    (h.mul_tensor(&x, r, 2) == one).then_some(x)
}

/// Checks the quasitriangular axioms for the R-matrix carried by `h`.
pub fn verify_quasitriangular(h: &HopfAlgebra) -> Result<Report> {
    let r = h.rmatrix().ok_or(Error::MissingRMatrix)?.to_vec();
    verify_rmatrix(h, &r)
}

/// Checks the quasitriangular axioms for a candidate `R ∈ H ⊗ H`.
pub fn verify_rmatrix(h: &HopfAlgebra, r: &[Scalar]) -> Result<Report> {
    let n = h.dim();
    let f = h.field();
    let mut rep = Report::new();
    rep.outcome("R is invertible", tensor_inverse(h, r).is_none().then(|| "no inverse in H⊗H".to_string()));

    let r13 = embed13(h, r);
    let r12 = tensor1(h, r, false);
    let r23 = tensor1(h, r, true);
    let lhs = comult_factor(h, r, 1, n);
    let rhs = h.mul_tensor(&r13, &r23, 3);
    rep.outcome("(Δ⊗id)R = R13 R23", (lhs != rhs).then(|| "mismatch in H⊗H⊗H".to_string()));
    let lhs = comult_factor(h, r, n, 1);
    let rhs = h.mul_tensor(&r13, &r12, 3);
    rep.outcome("(id⊗Δ)R = R13 R12", (lhs != rhs).then(|| "mismatch in H⊗H⊗H".to_string()));

    let w = h.algebra_generators().iter().copied().find(|&g| {
        let d = h.comult(&h.basis_vector(g));
        let dop = flip(f, &d, n, n);
        h.mul_tensor(r, &d, 2) != h.mul_tensor(&dop, r, 2)
    });
    rep.outcome("R Δ(h) = Δ^op(h) R", w.map(|g| h.label(g).to_string()));
    Ok(rep)
}

/// Drinfeld element `u = Σ S(r'') r'`.
pub fn drinfeld_element(h: &HopfAlgebra) -> Result<Vec<Scalar>> {
    let r = h.rmatrix().ok_or(Error::MissingRMatrix)?;
    let n = h.dim();
    let mut u = h.zero();
    for (idx, c) in r.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
        let (a, b) = (idx / n, idx % n);
        let s = h.antipode(&h.basis_vector(b));
        let p = h.mul(&s, &h.basis_vector(a));
        for (x, y) in u.iter_mut().zip(&p) {
            *x += &(c * y);
        }
    }
    Ok(u)
}

/// Checks the ribbon axioms for `v`.
pub fn verify_ribbon_element(h: &HopfAlgebra, v: &[Scalar]) -> Result<Report> {
    let r = h.rmatrix().ok_or(Error::MissingRMatrix)?.to_vec();
    let n = h.dim();
    let f = h.field();
    let u = drinfeld_element(h)?;
    let mut rep = Report::new();
    let w = (0..n).find(|&i| {
        let e = h.basis_vector(i);
        h.mul(v, &e) != h.mul(&e, v)
    });
    rep.outcome("v is central", w.map(|i| h.label(i).to_string()));
    rep.outcome("v² = u S(u)", (h.mul(v, v) != h.mul(&u, &h.antipode(&u))).then(|| "mismatch".to_string()));
    rep.outcome("S(v) = v", (h.antipode(v) != v).then(|| "mismatch".to_string()));
    rep.outcome("ε(v) = 1", (!h.counit(v).is_one()).then(|| format!("ε(v) = {}", h.counit(v))));
    let r21 = flip(f, &r, n, n);
    let lhs = h.mul_tensor(&h.mul_tensor(&r21, &r, 2), &h.comult(v), 2);
    let rhs = h.tensor_of(&[v, v]);
    rep.outcome("(R21 R) Δ(v) = v ⊗ v", (lhs != rhs).then(|| "mismatch".to_string()));
    Ok(rep)
}

/// Checks the ribbon element carried by `h`.
pub fn verify_ribbon(h: &HopfAlgebra) -> Result<Report> {
    let v = h.ribbon().ok_or(Error::MissingRibbon)?.to_vec();
    verify_ribbon_element(h, &v)
}

/// Searches `v = G⁻¹u` over grouplikes `G` implementing `S²` by conjugation,
/// unit grouplike first. Exhaustive over the finite set of grouplikes.
pub fn ribbon_search(h: &HopfAlgebra) -> Result<Option<Vec<Scalar>>> {
    let u = drinfeld_element(h)?;
    let mut gs = grouplikes(h)?;
    let one = h.one();
    gs.sort_by_key(|g| *g != one);
    let s = h.antipode_matrix();
    let s2 = s.mul(s);
    for g in gs {
        let g_inv = h.antipode(&g);
        let implements_s2 = (0..h.dim()).all(|i| {
            let e = h.basis_vector(i);
            s2.apply(&e) == h.mul(&h.mul(&g, &e), &g_inv)
        });
        if !implements_s2 {
            continue;
        }
        let v = h.mul(&g_inv, &u);
        if verify_ribbon_element(h, &v)?.all_passed() {
            return Ok(Some(v));
        }
    }
    Ok(None)
}

#[derive(serde::Deserialize)]
struct RFamilyFile {
    basis: Vec<String>,
    terms: Vec<(usize, usize, super::Coef, super::Coef)>,
    parameters: Vec<super::Coef>,
}

/// Members `R_t = Σ (a + b·t) e_i ⊗ e_j` of a one-parameter family of candidate
/// R-matrices, one per listed parameter value, labelled `t = ...`.
pub fn rmatrix_candidates(h: &HopfAlgebra, text: &str) -> Result<Vec<(String, Vec<Scalar>)>> {
    let file: RFamilyFile = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    let n = h.dim();
    let f = h.field();
    if file.basis != h.basis() {
        return Err(Error::ShapeMismatch(format!("family is written in basis {:?}, algebra has {:?}", file.basis, h.basis())));
    }
    let mut out = Vec::new();
    for t in &file.parameters {
        let t = t.value(f)?;
        let mut r = vec![f.zero(); n * n];
        for (i, j, a, b) in &file.terms {
            if *i >= n || *j >= n {
                return Err(Error::ShapeMismatch(format!("term ({i}, {j}) out of range")));
            }
            r[i * n + j] += &(&a.value(f)? + &(&b.value(f)? * &t));
        }
        out.push((format!("t = {t}"), r));
    }
    Ok(out)
}

/// The first candidate passing [`verify_rmatrix`].
pub fn first_rmatrix(h: &HopfAlgebra, candidates: &[(String, Vec<Scalar>)]) -> Result<Option<(String, Vec<Scalar>)>> {
    for (label, r) in candidates {
        if verify_rmatrix(h, r)?.all_passed() {
            return Ok(Some((label.clone(), r.clone())));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::{cyclic_group_algebra, drinfeld_double, sweedler};
    use crate::scalar::Field;

    #[test]
    fn doubles_are_quasitriangular() {
        for h in [cyclic_group_algebra(Field::Rationals, 2).unwrap(), sweedler(Field::Rationals).unwrap()] {
            let d = drinfeld_double(&h).unwrap();
            let r = verify_quasitriangular(&d).unwrap();
            assert!(r.all_passed(), "{}: {r}", d.name());
        }
    }

    #[test]
    fn trivial_rmatrix_on_group_algebra() {
        let h = cyclic_group_algebra(Field::Rationals, 2).unwrap();
        let n = h.dim();
        let mut r = vec![Field::Rationals.zero(); n * n];
        r[0] = Field::Rationals.one();
        let h = h.with_rmatrix(Some(r), None).unwrap();
        assert!(verify_quasitriangular(&h).unwrap().all_passed());
        assert_eq!(ribbon_search(&h).unwrap(), Some(h.one()));
    }

    #[test]
    fn perturbed_rmatrix_fails() {
        let d = drinfeld_double(&sweedler(Field::Rationals).unwrap()).unwrap();
        let mut r = d.rmatrix().unwrap().to_vec();
        let k = r.iter().position(|x| !x.is_zero()).unwrap();
        r[k] = &r[k] + &Field::Rationals.one();
        assert!(!verify_rmatrix(&d, &r).unwrap().all_passed());
    }
}
