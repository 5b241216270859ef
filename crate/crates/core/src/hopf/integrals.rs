//! Integrals, distinguished characters, centers, characters and grouplikes.

use super::{dual, HopfAlgebra};
use crate::error::{Error, Result};
use crate::matrix::{common_kernel, Matrix};
use crate::poly::{minimal_polynomial, roots};
use crate::report::Report;
use crate::scalar::Scalar;

fn one_dim(space: Vec<Vec<Scalar>>) -> Result<Vec<Scalar>> {
    match space.len() {
        1 => Ok(space.into_iter().next().unwrap()),
        d => Err(Error::IntegralDimensionNotOne(d)),
    }
}

fn eps_shifted(h: &HopfAlgebra, m: Matrix, i: usize) -> Matrix {
    let n = h.dim();
    m.sub(&Matrix::identity(h.field(), n).scale(h.counit_basis(i)))
}

/// Basis of `{Λ : hΛ = ε(h)Λ}`.
pub fn left_integral_space(h: &HopfAlgebra) -> Vec<Vec<Scalar>> {
    let maps: Vec<Matrix> = (0..h.dim()).map(|i| eps_shifted(h, h.left_mult_matrix(&h.basis_vector(i)), i)).collect();
    common_kernel(h.field(), h.dim(), &maps)
}

/// Basis of `{Λ : Λh = ε(h)Λ}`.
pub fn right_integral_space(h: &HopfAlgebra) -> Vec<Vec<Scalar>> {
    let maps: Vec<Matrix> = (0..h.dim()).map(|i| eps_shifted(h, h.right_mult_matrix(&h.basis_vector(i)), i)).collect();
    common_kernel(h.field(), h.dim(), &maps)
}

pub fn left_integral(h: &HopfAlgebra) -> Result<Vec<Scalar>> {
    one_dim(left_integral_space(h))
}

pub fn right_integral(h: &HopfAlgebra) -> Result<Vec<Scalar>> {
    one_dim(right_integral_space(h))
}

/// The character `α` with `Λh = α(h)Λ` for a left integral `Λ`, as values on the basis.
pub fn distinguished_character(h: &HopfAlgebra) -> Result<Vec<Scalar>> {
    let lam = left_integral(h)?;
    let p = lam.iter().position(|x| !x.is_zero()).expect("integral is nonzero");
    let inv = lam[p].inv().unwrap();
    let mut alpha = Vec::with_capacity(h.dim());
    for i in 0..h.dim() {
        let prod = h.mul(&lam, &h.basis_vector(i));
        let a = &prod[p] * &inv;
        if prod.iter().zip(&lam).any(|(x, l)| *x != &a * l) {
            return Err(Error::AxiomFailure(format!("Λ·{} is not a multiple of Λ", h.label(i))));
        }
        alpha.push(a);
    }
    Ok(alpha)
}

/// Whether left and right integrals coincide, i.e. `α = ε`.
pub fn is_unimodular(h: &HopfAlgebra) -> Result<bool> {
    let alpha = distinguished_character(h)?;
    let uni = alpha == h.counit_vector();
    let (l, r) = (left_integral(h)?, right_integral(h)?);
    let same_line = crate::matrix::span_dim(h.field(), h.dim(), &[l, r]) == 1;
    if uni != same_line {
        return Err(Error::AxiomFailure("distinguished character disagrees with integral comparison".into()));
    }
    Ok(uni)
}

/// Basis of the center `Z(H)`.
pub fn center(h: &HopfAlgebra) -> Vec<Vec<Scalar>> {
    let maps: Vec<Matrix> = h
        .algebra_generators()
        .iter()
        .map(|&g| {
            let e = h.basis_vector(g);
            h.right_mult_matrix(&e).sub(&h.left_mult_matrix(&e))
        })
        .collect();
    common_kernel(h.field(), h.dim(), &maps)
}

/// All algebra maps `H → k`, as values on the basis, in a deterministic order.
pub fn characters(h: &HopfAlgebra) -> Result<Vec<Vec<Scalar>>> {
    let f = h.field();
    let n = h.dim();
    let gens = h.algebra_generators().to_vec();
    let mut candidates: Vec<Vec<Scalar>> = Vec::new();
    for &g in &gens {
        let mp = minimal_polynomial(f, &h.one(), &h.basis_vector(g), |a, b| h.mul(a, b));
        candidates.push(roots(&mp, g as u64)?);
    }
    let mut out = Vec::new();
    let mut choice = vec![0usize; gens.len()];
    if candidates.iter().any(Vec::is_empty) {
        return Ok(out);
    }
    loop {
        // χ(g e_j) = χ(g) χ(e_j), χ(1) = 1
        let mut rows: Vec<Vec<Scalar>> = Vec::new();
        let mut rhs = Vec::new();
        for (gi, &g) in gens.iter().enumerate() {
            let val = &candidates[gi][choice[gi]];
            for j in 0..n {
                let mut row = h.mul(&h.basis_vector(g), &h.basis_vector(j));
                row[j] -= val;
                rows.push(row);
                rhs.push(f.zero());
            }
            let mut row = vec![f.zero(); n];
            row[g] = f.one();
            rows.push(row);
            rhs.push(val.clone());
        }
        rows.push(h.one());
        rhs.push(f.one());
        let a = Matrix::from_rows(f, &rows);
        if let Ok(x) = a.solve(&Matrix::column_vector(f, &rhs)) {
            let chi = x.column(0);
            if is_character(h, &chi) {
                out.push(chi);
            }
        }
        let mut k = 0;
        loop {
            if k == gens.len() {
                out.sort();
                out.dedup();
                return Ok(out);
            }
            choice[k] += 1;
            if choice[k] < candidates[k].len() {
                break;
            }
            choice[k] = 0;
            k += 1;
        }
    }
}

pub fn is_character(h: &HopfAlgebra, chi: &[Scalar]) -> bool {
    let n = h.dim();
    let val = |v: &[Scalar]| -> Scalar { v.iter().zip(chi).fold(h.field().zero(), |acc, (a, b)| &acc + &(a * b)) };
    if !val(&h.one()).is_one() {
        return false;
    }
    (0..n).all(|i| (0..n).all(|j| val(&h.mul(&h.basis_vector(i), &h.basis_vector(j))) == &chi[i] * &chi[j]))
}

/// Grouplike elements of `H`, found as the characters of `H*`.
pub fn grouplikes(h: &HopfAlgebra) -> Result<Vec<Vec<Scalar>>> {
    characters(&dual(h)?)
}

/// The distinguished grouplike `a ∈ H`: the distinguished character of `H*`.
pub fn distinguished_grouplike(h: &HopfAlgebra) -> Result<Vec<Scalar>> {
    distinguished_character(&dual(h)?)
}

/// Convolution inverse of a character: `χ∘S`.
pub fn character_inverse(h: &HopfAlgebra, chi: &[Scalar]) -> Vec<Scalar> {
    h.antipode_matrix().transpose().apply(chi)
}

/// `χ ⇀ x = x₁ χ(x₂)`.
pub fn hit_left(h: &HopfAlgebra, chi: &[Scalar], x: &[Scalar]) -> Vec<Scalar> {
    let n = h.dim();
    let d = h.comult(x);
    let mut out = h.zero();
    for i in 0..n {
        for j in 0..n {
            let c = &d[i * n + j];
            if !c.is_zero() && !chi[j].is_zero() {
                out[i] += &(c * &chi[j]);
            }
        }
    }
    out
}

/// `x ↼ χ = χ(x₁) x₂`.
pub fn hit_right(h: &HopfAlgebra, chi: &[Scalar], x: &[Scalar]) -> Vec<Scalar> {
    let n = h.dim();
    let d = h.comult(x);
    let mut out = h.zero();
    for i in 0..n {
        for j in 0..n {
            let c = &d[i * n + j];
            if !c.is_zero() && !chi[i].is_zero() {
                out[j] += &(c * &chi[i]);
            }
        }
    }
    out
}

/// Checks `S⁴(h) = a⁻¹ (α ⇀ h ↼ α⁻¹) a` on the basis, with `a` the distinguished
/// grouplike and `α` the distinguished character.
pub fn radford_s4_check(h: &HopfAlgebra) -> Result<Report> {
    let alpha = distinguished_character(h)?;
    let alpha_inv = character_inverse(h, &alpha);
    let a = distinguished_grouplike(h)?;
    let a_inv = h.antipode(&a);
    let s = h.antipode_matrix();
    let s4 = s.mul(s).mul(&s.mul(s));
    let mut rep = Report::new();
    let w = (0..h.dim()).find(|&i| {
        let x = h.basis_vector(i);
        let inner = hit_right(h, &alpha_inv, &hit_left(h, &alpha, &x));
        let rhs = h.mul(&h.mul(&a_inv, &inner), &a);
        s4.apply(&x) != rhs
    });
    rep.outcome("Radford S^4 formula", w.map(|i| h.label(i).to_string()));
    rep.value("S^4 = id", s4 == Matrix::identity(h.field(), h.dim()), None);
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::{cyclic_group_algebra, sweedler, symmetric_group_s3, taft};
    use crate::scalar::Field;

    #[test]
    fn sweedler_is_not_unimodular() {
        let h = sweedler(Field::Rationals).unwrap();
        let alpha = distinguished_character(&h).unwrap();
        // basis 1, x, g, gx
        assert_eq!(alpha[2], Field::Rationals.int(-1));
        assert!(!is_unimodular(&h).unwrap());
    }

    #[test]
    fn group_algebras_are_unimodular() {
        let h = symmetric_group_s3(Field::Rationals).unwrap();
        assert!(is_unimodular(&h).unwrap());
        assert_eq!(left_integral(&h).unwrap(), vec![Field::Rationals.one(); 6]);
        assert_eq!(center(&h).len(), 3);
        assert_eq!(characters(&h).unwrap().len(), 2);
        assert_eq!(grouplikes(&h).unwrap().len(), 6);
    }

    #[test]
    fn radford_holds_on_taft_algebras() {
        let f7 = Field::prime(7).unwrap();
        for h in [sweedler(Field::Rationals).unwrap(), taft(f7, 3, &f7.int(2)).unwrap(), cyclic_group_algebra(Field::Rationals, 2).unwrap()] {
            let r = radford_s4_check(&h).unwrap();
            assert!(r.all_passed(), "{}: {r}", h.name());
        }
    }
}
