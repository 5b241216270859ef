//! The commutative algebra `B = R(1)` in the center, its traces and Frobenius
//! copairings, and the QCQSA axioms.

use crate::error::{Error, Result};
use crate::hopf::left_integral_space;
use crate::matrix::{common_kernel, Matrix};
use crate::report::Report;
use crate::scalar::Scalar;
use crate::yd::{MorphismMatrix, ObjectTag, YDModule, YdCategory};

/// An algebra object of the center.
#[derive(Clone, Debug)]
pub struct AlgebraInYD {
    pub object: YDModule,
    pub mult: MorphismMatrix,
    pub unit: MorphismMatrix,
}

#[derive(Clone, Debug)]
pub struct FrobeniusData {
    pub algebra: AlgebraInYD,
    pub trace: MorphismMatrix,
    pub copairing: MorphismMatrix,
}

fn unit_tag() -> ObjectTag {
    ObjectTag { name: "1".into(), dim: 1 }
}

/// Associativity and unitality as matrix identities.
pub fn verify_algebra(cat: &YdCategory, a: &AlgebraInYD) -> Report {
    let d = a.object.dim();
    let f = cat.field();
    let id = Matrix::identity(f, d);
    let m = &a.mult.matrix;
    let u = &a.unit.matrix;
    let mut rep = Report::new();
    let bb = cat.tensor_yd(&a.object, &a.object);
    let m_ok = bb.as_ref().map(|bb| cat.is_yd_morphism(m, bb, &a.object)).unwrap_or(false);
    rep.check("multiplication is a YD morphism", m_ok, None);
    rep.check("unit is a YD morphism", cat.is_yd_morphism(u, &cat.unit_yd(), &a.object), None);
    rep.check("associativity", m.mul(&m.kron(&id)) == m.mul(&id.kron(m)), None);
    rep.check("unitality", m.mul(&u.kron(&id)) == id && m.mul(&id.kron(u)) == id, None);
    rep
}

/// `B = R(k)` with the multiplication and unit of `H`.
pub fn build_b(cat: &YdCategory) -> Result<AlgebraInYD> {
    let h = cat.hopf();
    let object = cat.functor_r(&cat.unit_hmod())?.renamed("B");
    let tag = object.tag();
    let b = AlgebraInYD {
        mult: MorphismMatrix::new(h.mult_matrix().clone(), crate::yd::tensor_tag(&tag, &tag), tag.clone())?,
        unit: MorphismMatrix::new(Matrix::column_vector(h.field(), h.unit_vector()), unit_tag(), tag)?,
        object,
    };
    let rep = verify_algebra(cat, &b);
    match rep.failures().first() {
        None => Ok(b),
        Some(c) => Err(Error::AxiomFailure(format!("B: {}", c.name))),
    }
}

/// `m ∘ σ_{B,B} = m`.
pub fn verify_commutative(cat: &YdCategory, b: &AlgebraInYD) -> bool {
    let sigma = cat.braiding_yd(&b.object, &b.object).matrix;
    verify_commutative_with(b, &sigma)
}

/// Commutativity with respect to an arbitrary braiding matrix.
pub fn verify_commutative_with(b: &AlgebraInYD, sigma: &Matrix) -> bool {
    b.mult.matrix.mul(sigma) == b.mult.matrix
}

/// Basis of `Hom_Z(B, 1)`, as `1 × dim` matrices.
pub fn traces_in_yd(cat: &YdCategory, b: &AlgebraInYD) -> Vec<MorphismMatrix> {
    cat.hom_yd(&b.object, &cat.unit_yd())
}

/// Basis of the comodule maps `B → k`, as functionals on the basis.
pub fn colinear_traces(cat: &YdCategory, b: &AlgebraInYD) -> Vec<Vec<Scalar>> {
    let f = cat.field();
    let d = b.object.dim();
    let unit = cat.hopf().unit_vector();
    let maps: Vec<Matrix> = b.object.coacts().iter().zip(unit).map(|(c, u)| c.to_dense().transpose().sub(&Matrix::identity(f, d).scale(u))).collect();
    common_kernel(f, d, &maps)
}

/// Colinear traces coincide with left integrals of `H*`.
pub fn colinear_traces_are_integrals(cat: &YdCategory, b: &AlgebraInYD) -> Result<bool> {
    let ours = colinear_traces(cat, b);
    let dual = crate::hopf::dual(cat.hopf())?;
    let theirs = left_integral_space(&dual);
    let n = cat.hopf().dim();
    let mut all = ours.clone();
    all.extend(theirs.iter().cloned());
    Ok(ours.len() == theirs.len() && crate::matrix::span_dim(cat.field(), n, &all) == ours.len())
}

/// Pairing matrix `P[a][b] = e(e_a ⊗ e_b)` of a form `e: A ⊗ A → 1`.
fn pairing_matrix(e: &Matrix, d: usize) -> Matrix {
    Matrix::from_fn(e.field(), d, d, |a, b| e[(0, a * d + b)].clone())
}

/// Copairing `c = Σ (P⁻¹)_{ab} e_a ⊗ e_b` for the form `e`.
fn copairing_of(e: &Matrix, d: usize) -> Result<Matrix> {
    let p = pairing_matrix(e, d);
    let inv = p.invert().map_err(|_| Error::Degenerate)?;
    Ok(Matrix::from_fn(e.field(), d * d, 1, |i, _| inv[(i / d, i % d)].clone()))
}

fn snakes_hold(e: &Matrix, c: &Matrix, d: usize) -> bool {
    let id = Matrix::identity(e.field(), d);
    e.kron(&id).mul(&id.kron(c)) == id && id.kron(e).mul(&c.kron(&id)) == id
}

/// Frobenius structure from a trace `λ`: `e = λ ∘ m` and its inverse copairing.
pub fn frobenius_copairing(_cat: &YdCategory, b: &AlgebraInYD, lambda: &MorphismMatrix) -> Result<FrobeniusData> {
    let d = b.object.dim();
    let e = lambda.matrix.mul(&b.mult.matrix);
    let c = copairing_of(&e, d)?;
    if !snakes_hold(&e, &c, d) {
        return Err(Error::AxiomFailure("snake identities for the copairing".into()));
    }
    let tag = b.object.tag();
    Ok(FrobeniusData {
        algebra: b.clone(),
        trace: lambda.clone(),
        copairing: MorphismMatrix::new(c, unit_tag(), crate::yd::tensor_tag(&tag, &tag))?,
    })
}

/// Whether `B` admits a trace in the center whose pairing is invertible.
pub fn pairing_invertible(cat: &YdCategory, b: &AlgebraInYD) -> bool {
    traces_in_yd(cat, b).iter().any(|l| frobenius_copairing(cat, b, l).is_ok())
}

/// Checks Q1..Q5 for `(A, m, e)` with the braiding of the center.
pub fn verify_qcqsa(cat: &YdCategory, a: &YDModule, m: &Matrix, e: &Matrix) -> Result<Report> {
    let sigma = cat.braiding_yd(a, a).matrix;
    verify_qcqsa_with(cat, a, m, e, &sigma)
}

/// Q1..Q5 with an explicit braiding matrix on `A ⊗ A`.
pub fn verify_qcqsa_with(cat: &YdCategory, a: &YDModule, m: &Matrix, e: &Matrix, sigma: &Matrix) -> Result<Report> {
    let d = a.dim();
    let f = cat.field();
    if m.shape() != (d, d * d) || e.shape() != (1, d * d) || sigma.shape() != (d * d, d * d) {
        return Err(Error::ShapeMismatch("QCQSA data has the wrong shape".into()));
    }
    let id = Matrix::identity(f, d);
    let aa = cat.tensor_yd(a, a)?;
    let mut rep = Report::new();
    rep.check("m is a YD morphism", cat.is_yd_morphism(m, &aa, a), None);
    rep.check("e is a YD morphism", cat.is_yd_morphism(e, &aa, &cat.unit_yd()), None);
    rep.check("Q1 m ∘ (m ⊗ id) = m ∘ (id ⊗ m)", m.mul(&m.kron(&id)) == m.mul(&id.kron(m)), None);
    rep.check("Q2 e ∘ (m ⊗ id) = e ∘ (id ⊗ m)", e.mul(&m.kron(&id)) == e.mul(&id.kron(m)), None);
    rep.check("Q3 m ∘ σ = m", m.mul(sigma) == *m, None);
    rep.check("Q4 e ∘ σ = e", e.mul(sigma) == *e, None);
    match copairing_of(e, d) {
        Ok(c) => {
            let ok = snakes_hold(e, &c, d) && cat.is_yd_morphism(&c, &cat.unit_yd(), &aa);
            rep.check("Q5 A is self-dual via e", ok, (!ok).then(|| "snake identity fails".to_string()));
        }
        Err(_) => rep.fail("Q5 A is self-dual via e", "e is degenerate"),
    }
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::{cyclic_group_algebra, drinfeld_double, sweedler, symmetric_group_s3, trivial_hopf};
    use crate::scalar::Field;
    use crate::tensor::flip_matrix;

    fn q() -> Field {
        Field::Rationals
    }

    #[test]
    fn b_is_commutative_even_when_not_unimodular() {
        for h in [symmetric_group_s3(q()).unwrap(), sweedler(q()).unwrap(), trivial_hopf(q()).unwrap()] {
            let c = YdCategory::new(&h).unwrap();
            let b = build_b(&c).unwrap();
            assert!(verify_commutative(&c, &b), "{}", h.name());
        }
    }

    #[test]
    fn flip_braiding_breaks_commutativity_for_s3() {
        let c = YdCategory::new(&symmetric_group_s3(q()).unwrap()).unwrap();
        let b = build_b(&c).unwrap();
        assert!(!verify_commutative_with(&b, &flip_matrix(q(), 6, 6)));
    }

    #[test]
    fn traces_detect_unimodularity() {
        let c = YdCategory::new(&sweedler(q()).unwrap()).unwrap();
        let b = build_b(&c).unwrap();
        assert_eq!(colinear_traces(&c, &b).len(), 1);
        assert!(colinear_traces_are_integrals(&c, &b).unwrap());
        assert!(traces_in_yd(&c, &b).is_empty());
        assert!(!pairing_invertible(&c, &b));
        let c = YdCategory::new(&cyclic_group_algebra(q(), 2).unwrap()).unwrap();
        let b = build_b(&c).unwrap();
        assert_eq!(traces_in_yd(&c, &b).len(), 1);
    }

    #[test]
    fn group_algebra_copairing_is_sum_of_g_tensor_inverse() {
        let h = symmetric_group_s3(q()).unwrap();
        let c = YdCategory::new(&h).unwrap();
        let b = build_b(&c).unwrap();
        let t = traces_in_yd(&c, &b);
        let l = &t[0];
        // normalize λ(1) = 1, so λ = δ_e
        let s = l.matrix[(0, 0)].inv().unwrap();
        let lam = MorphismMatrix { matrix: l.matrix.scale(&s), ..l.clone() };
        let fd = frobenius_copairing(&c, &b, &lam).unwrap();
        for g in 0..6 {
            let ginv = h.antipode_basis(g)[0].0;
            for k in 0..6 {
                let want = if k == ginv { q().one() } else { q().zero() };
                assert_eq!(fd.copairing.matrix[(g * 6 + k, 0)], want);
            }
        }
    }

    #[test]
    fn qcqsa_on_unimodular_examples() {
        for h in [symmetric_group_s3(q()).unwrap(), drinfeld_double(&cyclic_group_algebra(q(), 2).unwrap()).unwrap()] {
            let c = YdCategory::new(&h).unwrap();
            let b = build_b(&c).unwrap();
            let l = &traces_in_yd(&c, &b)[0];
            let e = l.matrix.mul(&b.mult.matrix);
            let rep = verify_qcqsa(&c, &b.object, &b.mult.matrix, &e).unwrap();
            assert!(rep.all_passed(), "{}: {rep}", h.name());
            let n = h.dim();
            let rep = verify_qcqsa_with(&c, &b.object, &b.mult.matrix, &e, &flip_matrix(q(), n, n)).unwrap();
            if h.name() == "kS3" {
                assert!(!rep.passed("Q3 m ∘ σ = m"));
            }
        }
    }

    #[test]
    fn colinear_trace_on_sweedler_is_not_yd_linear() {
        let c = YdCategory::new(&sweedler(q()).unwrap()).unwrap();
        let b = build_b(&c).unwrap();
        let lam = &colinear_traces(&c, &b)[0];
        let e = Matrix::row_vector(q(), lam).mul(&b.mult.matrix);
        let rep = verify_qcqsa(&c, &b.object, &b.mult.matrix, &e).unwrap();
        assert!(!rep.passed("e is a YD morphism"));
    }
}
