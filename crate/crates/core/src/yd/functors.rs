//! The adjoints `L ⊣ U ⊣ R` of the forgetful functor, the distinguished object,
//! and the socle of the projective cover of the unit.

use std::collections::HashMap;

use super::{HModule, YDModule, YdCategory};
use crate::error::{Error, Result};
use crate::hopf::{character_inverse, characters, distinguished_character, drinfeld_double};
use crate::matrix::{EchelonBasis, Matrix};
use crate::scalar::{Field, Scalar};
use crate::sparse::SpMat;

/// Which candidate for the distinguished object passed the induction check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Convention {
    /// `D = k_α`
    Alpha,
    /// `D = k_{α⁻¹}`
    AlphaInverse,
}

impl YdCategory {
    /// `x ↦ e_p x S(e_r)`, as an `n × n` matrix.
    fn adjoint_block(&self, p: usize, r: usize) -> SpMat {
        let h = self.hopf();
        let sr = h.antipode(&h.basis_vector(r));
        let cols = (0..h.dim()).map(|x| crate::tensor::sparse_of(&h.mul(&h.mul(&h.basis_vector(p), &h.basis_vector(x)), &sr))).collect();
        SpMat::from_columns(self.field(), h.dim(), cols)
    }

    /// `e^k ↦ (e_p ⇀ e^k ↼ S⁻¹(e_r))`, i.e. `f ↦ f(S⁻¹(e_r) · e_p)`.
    fn coadjoint_block(&self, p: usize, r: usize) -> SpMat {
        let h = self.hopf();
        let n = h.dim();
        let sr = self.sinv().column(r);
        // entry (k, i) = coefficient of e_i in S⁻¹(e_r) e_k e_p
        let rows: Vec<Vec<Scalar>> = (0..n).map(|k| h.mul(&h.mul(&sr, &h.basis_vector(k)), &h.basis_vector(p))).collect();
        SpMat::from_dense(&Matrix::from_rows(self.field(), &rows))
    }

    /// Action `h ↦ Σ block(h₁, h₃) ⊗ ρ_V(h₂)`.
    fn twisted_action(&self, v: &HModule, block: impl Fn(usize, usize) -> SpMat) -> Vec<SpMat> {
        let h = self.hopf();
        let n = h.dim();
        let d = n * v.dim();
        let mut cache: HashMap<(usize, usize), SpMat> = HashMap::new();
        (0..n)
            .map(|e| {
                let mut acc = SpMat::zeros(self.field(), d, d);
                for (p, q, r, c) in h.comult2_basis(e) {
                    let b = cache.entry((*p, *r)).or_insert_with(|| block(*p, *r));
                    acc = acc.add_scaled(&b.kron(v.act(*q)), c);
                }
                acc
            })
            .collect()
    }

    /// `R(V) = H ⊗ V` with `h·(a⊗v) = h₁ a S(h₃) ⊗ h₂ v` and `a⊗v ↦ a₁ ⊗ (a₂⊗v)`.
    pub fn functor_r(&self, v: &HModule) -> Result<YDModule> {
        let h = self.hopf();
        let n = h.dim();
        let acts = self.twisted_action(v, |p, r| self.adjoint_block(p, r));
        let module = HModule::new(format!("R({})", v.name), self.field(), n * v.dim(), acts);
        let id = SpMat::identity(self.field(), v.dim());
        let coacts = (0..n)
            .map(|x| {
                // K_x[b][a] = coefficient of e_x ⊗ e_b in Δ(e_a)
                let cols = (0..n).map(|a| h.comult_basis(a).iter().filter(|(i, _, _)| *i == x).map(|(_, j, c)| (*j, c.clone())).collect()).collect();
                SpMat::from_columns(self.field(), n, cols).kron(&id)
            })
            .collect();
        self.yd(module, coacts)
    }

    /// `L(V) = D(H) ⊗_H V`, written on the complement `H* ⊗ V` of the induction
    /// relations: `h·(f⊗v) = (h₁ ⇀ f ↼ S⁻¹(h₃)) ⊗ h₂ v`, `e^i·(f⊗v) = e^i f ⊗ v`.
    pub fn functor_l(&self, v: &HModule) -> Result<YDModule> {
        let h = self.hopf();
        let n = h.dim();
        let f = self.field();
        let acts = self.twisted_action(v, |p, r| self.coadjoint_block(p, r));
        let module = HModule::new(format!("L({})", v.name), f, n * v.dim(), acts);
        let id = SpMat::identity(f, v.dim());
        // left multiplication by e^i in H*: e^i e^j = Σ_k ⟨e^i e^j, e_k⟩ e^k
        let dual_mult: Vec<SpMat> = (0..n)
            .map(|i| {
                let cols = (0..n).map(|j| (0..n).map(|k| (k, h.comult_matrix()[(i * n + j, k)].clone())).collect()).collect();
                SpMat::from_columns(f, n, cols).kron(&id)
            })
            .collect();
        let s = h.antipode_matrix();
        let d = n * v.dim();
        let coacts = (0..n).map(|y| SpMat::combination(f, d, d, (0..n).map(|i| (s[(y, i)].clone(), &dual_mult[i])))).collect();
        self.yd(module, coacts)
    }

    /// `L(V)` built literally as the quotient of `D(H) ⊗ V` by
    /// `span{d h ⊗ v − d ⊗ h v}`, on the first-fit complement of standard basis
    /// vectors.
    pub fn functor_l_induced(&self, v: &HModule) -> Result<YDModule> {
        let h = self.hopf();
        let n = h.dim();
        let f = self.field();
        let dv = v.dim();
        let dd = drinfeld_double(h)?;
        let big = n * n * dv;
        let idx = |a: usize, b: usize, m: usize| (a * n + b) * dv + m;
        // relations (e^a⋈e_b)(ε⋈e_g) ⊗ e_m − (e^a⋈e_b) ⊗ g·e_m for generators g
        let mut rels: Vec<Vec<Scalar>> = Vec::new();
        for a in 0..n {
            for b in 0..n {
                for &g in h.algebra_generators() {
                    for m in 0..dv {
                        let mut r = vec![f.zero(); big];
                        for (k, c) in h.mul_basis(b, g) {
                            r[idx(a, *k, m)] += c;
                        }
                        for (j, c) in v.act(g).column(m) {
                            r[idx(a, b, *j)] -= c;
                        }
                        rels.push(r);
                    }
                }
            }
        }
        let mut eb = EchelonBasis::new(f, big, false);
        for r in &rels {
            eb.insert(r);
        }
        let mut complement = Vec::new();
        for c in 0..big {
            if eb.is_full() {
                break;
            }
            let mut e = vec![f.zero(); big];
            e[c] = f.one();
            if eb.insert(&e) {
                complement.push(c);
            }
        }
        // relations again, with the complement coordinates ordered last so
        // every pivot lands outside the complement
        let mut order: Vec<usize> = (0..big).filter(|c| !complement.contains(c)).collect();
        order.extend(&complement);
        let permute = |w: &[Scalar]| -> Vec<Scalar> { order.iter().map(|&c| w[c].clone()).collect() };
        let mut red = EchelonBasis::new(f, big, false);
        for r in &rels {
            red.insert(&permute(r));
        }
        let k = complement.len();
        let project = |w: &[Scalar]| -> Vec<(usize, Scalar)> {
            let rest = red.remainder(&permute(w));
            rest[big - k..].iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, x)| (i, x.clone())).collect()
        };
        // action of a D(H) element on the complement
        let act = |x: &[Scalar]| -> SpMat {
            let cols = complement
                .iter()
                .map(|&c| {
                    let (ab, m) = (c / dv, c % dv);
                    let prod = dd.mul(x, &dd.basis_vector(ab));
                    let mut w = vec![f.zero(); big];
                    for (y, coef) in prod.iter().enumerate().filter(|(_, y)| !y.is_zero()) {
                        w[y * dv + m] += coef;
                    }
                    project(&w)
                })
                .collect();
            SpMat::from_columns(f, k, cols)
        };
        let eps = h.counit_vector();
        let one = h.unit_vector();
        let acts = (0..n)
            .map(|b| {
                let mut x = vec![f.zero(); n * n];
                for a in 0..n {
                    x[a * n + b] = eps[a].clone();
                }
                act(&x)
            })
            .collect();
        let duals: Vec<SpMat> = (0..n)
            .map(|i| {
                let mut x = vec![f.zero(); n * n];
                for b in 0..n {
                    x[i * n + b] = one[b].clone();
                }
                act(&x)
            })
            .collect();
        let s = h.antipode_matrix();
        let coacts = (0..n).map(|y| SpMat::combination(f, k, k, (0..n).map(|i| (s[(y, i)].clone(), &duals[i])))).collect();
        self.yd(HModule::new(format!("L({})", v.name), f, k, acts), coacts)
    }

    /// The distinguished invertible object, with the convention that makes
    /// `R(k) ≅ L(D)`.
    pub fn distinguished_object(&self) -> Result<(HModule, Convention)> {
        let h = self.hopf();
        let alpha = distinguished_character(h)?;
        let alpha_inv = character_inverse(h, &alpha);
        let rk = self.functor_r(&self.unit_hmod())?;
        for (chi, conv) in [(alpha, Convention::Alpha), (alpha_inv, Convention::AlphaInverse)] {
            let d = self.character_module("D", &chi);
            if self.is_iso_yd(&rk, &self.functor_l(&d)?)? {
                return Ok((d, conv));
            }
        }
        Err(Error::ConventionUndetermined)
    }

    /// All 1-dimensional modules, `k` first.
    pub fn one_dimensional_modules(&self) -> Result<Vec<HModule>> {
        let h = self.hopf();
        let eps = h.counit_vector().to_vec();
        let mut chars = characters(h)?;
        chars.retain(|c| *c != eps);
        let mut out = vec![self.unit_hmod()];
        for (i, c) in chars.iter().enumerate() {
            out.push(self.character_module(&format!("k_χ{}", i + 1), c));
        }
        Ok(out)
    }
}

/// The socle of the projective cover of the trivial module, computed from the
/// Jacobson radical by idempotent lifting.
pub fn socle_of_projective_cover(cat: &YdCategory) -> Result<HModule> {
    let h = cat.hopf();
    let n = h.dim();
    let f = h.field();
    let lm: Vec<Matrix> = (0..n).map(|i| h.left_mult_matrix(&h.basis_vector(i))).collect();
    let trace = |m: &Matrix| (0..n).fold(f.zero(), |acc, i| &acc + &m[(i, i)]);
    // T[a][b] = tr L_{e_a e_b}; its kernel is the radical
    let tl: Vec<Scalar> = lm.iter().map(trace).collect();
    let t = Matrix::from_fn(f, n, n, |a, b| h.mul_basis(a, b).iter().fold(f.zero(), |acc, (k, c)| &acc + &(c * &tl[*k])));
    let jbasis = t.nullspace();
    // the kernel always contains J; it equals J once it is a nilpotent ideal,
    // which is automatic when p > dim H
    let small = matches!(f, Field::Prime { p } if p as usize <= n);
    if small && !is_nilpotent_ideal(h, &jbasis) {
        return Err(Error::FieldTooSmall(format!("trace form kernel is not nilpotent in characteristic {}", f.characteristic())));
    }
    // z with (h − ε(h))z, z(h − ε(h)) ∈ J for generators h, and ε(z) = 1
    let mut blocks = Vec::new();
    for &g in h.algebra_generators() {
        let e = h.basis_vector(g);
        let eps = Matrix::identity(f, n).scale(h.counit_basis(g));
        blocks.push(t.mul(&h.left_mult_matrix(&e).sub(&eps)));
        blocks.push(t.mul(&h.right_mult_matrix(&e).sub(&eps)));
    }
    blocks.push(Matrix::row_vector(f, h.counit_vector()));
    let a = Matrix::vstack_all(f, n, &blocks);
    let mut rhs = vec![f.zero(); a.rows()];
    *rhs.last_mut().unwrap() = f.one();
    let mut e = a.solve(&Matrix::column_vector(f, &rhs))?.column(0);
    // e ← 3e² − 2e³ converges to an idempotent lifting e mod J
    let (three, two) = (f.int(3), f.int(2));
    let mut steps = 0;
    loop {
        let e2 = h.mul(&e, &e);
        if e2 == e {
            break;
        }
        steps += 1;
        if steps > 64 {
            return Err(Error::AxiomFailure("idempotent lifting did not converge".into()));
        }
        let e3 = h.mul(&e2, &e);
        e = e2.iter().zip(&e3).map(|(x, y)| &(&three * x) - &(&two * y)).collect();
    }
    // P = He, soc P = {v ∈ P : J v = 0}
    let pspan: Vec<Vec<Scalar>> = (0..n).map(|a| h.mul(&h.basis_vector(a), &e)).collect();
    let pcols = {
        let mut eb = EchelonBasis::new(f, n, false);
        pspan.into_iter().filter(|v| eb.insert(v)).collect::<Vec<_>>()
    };
    let pm = Matrix::from_columns(f, n, &pcols);
    let conds: Vec<Matrix> = jbasis.iter().map(|j| h.left_mult_matrix(j).mul(&pm)).collect();
    let coeffs = crate::matrix::common_kernel(f, pcols.len(), &conds);
    if coeffs.len() != 1 {
        return Err(Error::SocleNotSimple(coeffs.len()));
    }
    let s = pm.apply(&coeffs[0]);
    let piv = s.iter().position(|x| !x.is_zero()).expect("nonzero socle vector");
    let inv = s[piv].inv().unwrap();
    let chi: Vec<Scalar> = (0..n).map(|i| &h.mul(&h.basis_vector(i), &s)[piv] * &inv).collect();
    Ok(cat.character_module("soc P(k)", &chi))
}

fn is_nilpotent_ideal(h: &crate::hopf::HopfAlgebra, ideal: &[Vec<Scalar>]) -> bool {
    let mut power = ideal.to_vec();
    for _ in 0..=h.dim() {
        if power.is_empty() {
            return true;
        }
        let mut eb = EchelonBasis::new(h.field(), h.dim(), false);
        let mut next = Vec::new();
        for a in &power {
            for b in ideal {
                let c = h.mul(a, b);
                if eb.insert(&c) {
                    next.push(c);
                }
            }
        }
        power = next;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::{cyclic_group_algebra, sweedler, symmetric_group_s3, taft, trivial_hopf};

    fn taft3() -> crate::hopf::HopfAlgebra {
        let f7 = Field::prime(7).unwrap();
        taft(f7, 3, &f7.int(2)).unwrap()
    }

    #[test]
    fn functors_have_expected_dimensions() {
        let c = YdCategory::new(&sweedler(Field::Rationals).unwrap()).unwrap();
        let k = c.unit_hmod();
        assert_eq!(c.functor_l(&k).unwrap().dim(), 4);
        assert_eq!(c.functor_r(&k).unwrap().dim(), 4);
        let reg = c.regular_hmod();
        assert_eq!(c.functor_r(&reg).unwrap().dim(), 16);
        let t = YdCategory::new(&trivial_hopf(Field::Rationals).unwrap()).unwrap();
        assert_eq!(t.functor_l(&t.unit_hmod()).unwrap().dim(), 1);
    }

    #[test]
    fn normal_form_of_l_matches_induction() {
        for h in [sweedler(Field::Rationals).unwrap(), cyclic_group_algebra(Field::Rationals, 2).unwrap(), symmetric_group_s3(Field::Rationals).unwrap(), taft3()] {
            let c = YdCategory::new(&h).unwrap();
            let mut probes = c.one_dimensional_modules().unwrap();
            if h.dim() <= 4 {
                probes.push(c.regular_hmod());
            }
            for v in probes {
                let a = c.functor_l(&v).unwrap();
                let b = c.functor_l_induced(&v).unwrap();
                assert_eq!(a, b, "{} on {}", h.name(), v.name);
            }
        }
    }

    #[test]
    fn r_of_k_for_abelian_group_has_trivial_action() {
        let c = YdCategory::new(&cyclic_group_algebra(Field::Rationals, 2).unwrap()).unwrap();
        let r = c.functor_r(&c.unit_hmod()).unwrap();
        for g in 0..2 {
            assert_eq!(*r.act(g), SpMat::identity(Field::Rationals, 2));
        }
    }

    #[test]
    fn r_of_regular_module_has_stated_action() {
        let h = sweedler(Field::Rationals).unwrap();
        let c = YdCategory::new(&h).unwrap();
        let r = c.functor_r(&c.regular_hmod()).unwrap();
        let n = 4;
        for e in 0..n {
            for a in 0..n {
                for v in 0..n {
                    let mut want = vec![Field::Rationals.zero(); n * n];
                    for (p, q, s, coef) in h.comult2_basis(e) {
                        let left = h.mul(&h.mul(&h.basis_vector(*p), &h.basis_vector(a)), &h.antipode(&h.basis_vector(*s)));
                        let right = h.mul(&h.basis_vector(*q), &h.basis_vector(v));
                        for (i, x) in left.iter().enumerate() {
                            for (j, y) in right.iter().enumerate() {
                                want[i * n + j] += &(&(coef * x) * y);
                            }
                        }
                    }
                    let mut basis = vec![Field::Rationals.zero(); n * n];
                    basis[a * n + v] = Field::Rationals.one();
                    assert_eq!(r.act(e).apply(&basis), want);
                }
            }
        }
    }

    #[test]
    fn distinguished_object_agrees_with_socle() {
        for h in [symmetric_group_s3(Field::Rationals).unwrap(), sweedler(Field::Rationals).unwrap(), taft3()] {
            let c = YdCategory::new(&h).unwrap();
            let (d, _) = c.distinguished_object().unwrap();
            let s = socle_of_projective_cover(&c).unwrap();
            assert_eq!(d.acts(), s.acts(), "{}", h.name());
        }
    }

    #[test]
    fn sweedler_distinguished_object_sends_g_to_minus_one() {
        let c = YdCategory::new(&sweedler(Field::Rationals).unwrap()).unwrap();
        let (d, _) = c.distinguished_object().unwrap();
        assert_eq!(d.act(2).get(0, 0), Field::Rationals.int(-1));
    }

    #[test]
    fn small_field_is_rejected_by_socle_oracle() {
        let f = Field::prime(3).unwrap();
        let c = YdCategory::new(&cyclic_group_algebra(f, 3).unwrap()).unwrap();
        assert!(matches!(socle_of_projective_cover(&c), Err(Error::FieldTooSmall(_))));
    }

    #[test]
    fn adjunction_dimensions_on_small_pairs() {
        let c = YdCategory::new(&symmetric_group_s3(Field::Rationals).unwrap()).unwrap();
        let k = c.unit_hmod();
        let lk = c.functor_l(&k).unwrap();
        let rk = c.functor_r(&k).unwrap();
        assert_eq!(c.hom_yd_dim(&lk, &rk), c.hom_hmod_dim(&k, rk.underlying()));
        assert_eq!(c.hom_yd_dim(&lk, &rk), c.hom_hmod_dim(lk.underlying(), &k));
        assert_eq!(c.hom_yd_dim(&c.unit_yd(), &lk), 1);
        let s = YdCategory::new(&sweedler(Field::Rationals).unwrap()).unwrap();
        let l1 = s.functor_l(&s.unit_hmod()).unwrap();
        assert_eq!(s.hom_yd_dim(&s.unit_yd(), &l1), 0);
    }
}
