use super::{parse_tangle, Gen, TangleExpr};
use crate::error::{Error, Result};
use crate::hopf::{center, is_unimodular, HopfAlgebra};
use crate::matrix::Matrix;
use crate::qcqsa::{build_b, frobenius_copairing, traces_in_yd, FrobeniusData};
use crate::report::Report;
use crate::scalar::{Field, Scalar};
use crate::sparse::SpMat;
use crate::tensor::{apply_sparse_local, Sparse};
use crate::yd::{MorphismMatrix, ObjectTag, YdCategory};

/// Largest tensor power dimension we are willing to materialize.
const MAX_DIM: usize = 1 << 22;

/// Generator matrices of the functor into the center, built from `B = R(1)`
/// and a trace `λ`.
#[derive(Clone, Debug)]
pub struct EvalContext {
    pub frobenius: FrobeniusData,
    field: Field,
    d: usize,
    e: SpMat,
    c: SpMat,
    m: SpMat,
    sigma: SpMat,
    sigma_inv: SpMat,
    eps: Vec<Scalar>,
}

impl EvalContext {
    /// Uses the trace normalized by `λ(1) = 1`, or by its first nonzero
    /// coordinate when `λ(1) = 0`.
    pub fn new(cat: &YdCategory) -> Result<EvalContext> {
        if !is_unimodular(cat.hopf())? {
            return Err(Error::NotUnimodular);
        }
        let b = build_b(cat)?;
        let traces = traces_in_yd(cat, &b);
        let Some(l) = traces.first() else {
            return Err(Error::NotUnimodular);
        };
        let row = l.matrix.row(0);
        let pivot = if !row[0].is_zero() { 0 } else { row.iter().position(|x| !x.is_zero()).expect("nonzero trace") };
        let s = row[pivot].inv().unwrap();
        let lambda: Vec<Scalar> = row.iter().map(|x| x * &s).collect();
        EvalContext::with_trace(cat, &lambda)
    }

    /// Context for an explicit trace `λ` on `B`, given on the basis.
    pub fn with_trace(cat: &YdCategory, lambda: &[Scalar]) -> Result<EvalContext> {
        if !is_unimodular(cat.hopf())? {
            return Err(Error::NotUnimodular);
        }
        let b = build_b(cat)?;
        let d = b.object.dim();
        let f = cat.field();
        if lambda.len() != d {
            return Err(Error::ShapeMismatch(format!("trace has {} entries, B has dimension {d}", lambda.len())));
        }
        let lm = Matrix::row_vector(f, lambda);
        if !cat.is_yd_morphism(&lm, &b.object, &cat.unit_yd()) {
            return Err(Error::AxiomFailure("λ is not a morphism B → 1 of YD modules".into()));
        }
        let tag = b.object.tag();
        let lam = MorphismMatrix::new(lm, tag, ObjectTag { name: "1".into(), dim: 1 })?;
        let frobenius = frobenius_copairing(cat, &b, &lam)?;
        let m = SpMat::from_dense(&b.mult.matrix);
        let e = SpMat::from_dense(&lam.matrix).mul(&m);
        let c = SpMat::from_dense(&frobenius.copairing.matrix);
        let sigma = SpMat::from_dense(&cat.braiding_yd(&b.object, &b.object).matrix);
        let sigma_inv = SpMat::from_dense(&cat.braiding_inv_yd(&b.object, &b.object).matrix);
        let eps = cat.hopf().counit_vector().to_vec();
        Ok(EvalContext { frobenius, field: f, d, e, c, m, sigma, sigma_inv, eps })
    }

    pub fn dim(&self) -> usize {
        self.d
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn trace(&self) -> Vec<Scalar> {
        self.frobenius.trace.matrix.row(0).to_vec()
    }

    fn power(&self, n: usize) -> Result<usize> {
        match u32::try_from(n).ok().and_then(|n| self.d.checked_pow(n)) {
            Some(x) if x <= MAX_DIM => Ok(x),
            _ => Err(Error::ShapeMismatch(format!("B^{n} is too large to evaluate"))),
        }
    }

    fn generator(&self, g: Gen) -> Option<&SpMat> {
        match g {
            Gen::Cup => Some(&self.e),
            Gen::Cap => Some(&self.c),
            Gen::Y => Some(&self.m),
            Gen::XPlus => Some(&self.sigma),
            Gen::XMinus => Some(&self.sigma_inv),
            Gen::Id(_) => None,
        }
    }

    /// Applies `expr` to the middle block of `v ∈ k^pre ⊗ B^dom ⊗ k^post`.
    fn apply_at(&self, expr: &TangleExpr, v: Sparse, pre: usize, post: usize) -> Result<Sparse> {
        match expr {
            TangleExpr::Gen(g, _) => match self.generator(*g) {
                None => Ok(v),
                Some(m) => Ok(apply_sparse_local(&v, pre, post, m)),
            },
            TangleExpr::Compose(a, b, _) => {
                let w = self.apply_at(a, v, pre, post)?;
                self.apply_at(b, w, pre, post)
            }
            TangleExpr::Tensor(a, b, _) => {
                let (_, ca) = arity(a)?;
                let (db, _) = arity(b)?;
                let w = self.apply_at(a, v, pre, self.power(db)? * post)?;
                self.apply_at(b, w, pre * self.power(ca)?, post)
            }
        }
    }

    /// `F(expr)` applied to a vector of `B^dom`.
    pub fn apply(&self, expr: &TangleExpr, v: &[(usize, Scalar)]) -> Result<Sparse> {
        self.apply_at(expr, v.to_vec(), 1, 1)
    }

    /// `F(expr)` as a sparse matrix, one column per basis vector of `B^dom`.
    pub fn evaluate_sparse(&self, expr: &TangleExpr) -> Result<SpMat> {
        let (dom, cod) = arity(expr)?;
        let (rows, cols) = (self.power(cod)?, self.power(dom)?);
        let one = self.field.one();
        let columns = (0..cols).map(|j| self.apply(expr, &[(j, one.clone())])).collect::<Result<Vec<_>>>()?;
        Ok(SpMat::from_columns(self.field, rows, columns))
    }

    pub fn evaluate(&self, expr: &TangleExpr) -> Result<MorphismMatrix> {
        let (dom, cod) = arity(expr)?;
        let m = self.evaluate_sparse(expr)?.to_dense();
        let tag = |n: usize| ObjectTag { name: format!("B^{n}"), dim: self.d.pow(n as u32) };
        MorphismMatrix::new(m, tag(dom), tag(cod))
    }

    pub fn evaluate_str(&self, text: &str) -> Result<MorphismMatrix> {
        self.evaluate(&parse_tangle(text)?)
    }
}

fn arity(e: &TangleExpr) -> Result<(usize, usize)> {
    e.arity().map_err(|(s, message)| Error::Type { line: s.line, column: s.column, message })
}

/// `(ε ⊗ ε) ∘ F(T′)` for a `0 → 2` tangle `T′`.
pub fn invariant_v(ctx: &EvalContext, tprime: &TangleExpr) -> Result<Scalar> {
    let (dom, cod) = arity(tprime)?;
    if (dom, cod) != (0, 2) {
        let s = tprime.span();
        return Err(Error::Type { line: s.line, column: s.column, message: format!("expected a 0 → 2 tangle, found {dom} → {cod}") });
    }
    let v = ctx.apply(tprime, &[(0, ctx.field.one())])?;
    let d = ctx.d;
    let mut total = ctx.field.zero();
    for (k, x) in v {
        total += &(&(x * &ctx.eps[k / d]) * &ctx.eps[k % d]);
    }
    Ok(total)
}

/// Whether `λ(S z) = λ(z)` for every central `z`, with `λ` a functional on `H`.
pub fn check_s_condition(h: &HopfAlgebra, lambda: &[Scalar]) -> bool {
    let ev = |v: &[Scalar]| v.iter().zip(lambda).fold(h.field().zero(), |a, (x, y)| a + x * y);
    center(h).iter().all(|z| ev(&h.antipode(z)) == ev(z))
}

/// Identities among the generator images that follow from the QCQSA axioms.
pub const RELATIONS: [(&str, &str, &str); 12] = [
    ("Y is associative", "(Y * id1) ; Y", "(id1 * Y) ; Y"),
    ("cup is invariant (Q2)", "(Y * id1) ; cup", "(id1 * Y) ; cup"),
    ("Y absorbs X+ (Q3)", "X+ ; Y", "Y"),
    ("cup absorbs X+ (Q4)", "X+ ; cup", "cup"),
    ("left snake", "(id1 * cap) ; (cup * id1)", "id1"),
    ("right snake", "(cap * id1) ; (id1 * cup)", "id1"),
    ("X+ is natural in the left factor", "(Y * id1) ; X+", "(id1 * X+) ; (X+ * id1) ; (id1 * Y)"),
    ("X+ is natural in the right factor", "(id1 * Y) ; X+", "(X+ * id1) ; (id1 * X+) ; (Y * id1)"),
    ("Yang-Baxter for X+", "(X+ * id1) ; (id1 * X+) ; (X+ * id1)", "(id1 * X+) ; (X+ * id1) ; (id1 * X+)"),
    ("Yang-Baxter for X-", "(X- * id1) ; (id1 * X-) ; (X- * id1)", "(id1 * X-) ; (X- * id1) ; (id1 * X-)"),
    ("X+ ; X- = id2", "X+ ; X-", "id2"),
    ("X- ; X+ = id2", "X- ; X+", "id2"),
];

pub fn relation_suite(ctx: &EvalContext) -> Result<Report> {
    let mut rep = Report::new();
    for (name, lhs, rhs) in RELATIONS {
        let a = ctx.evaluate_sparse(&parse_tangle(lhs)?)?;
        let b = ctx.evaluate_sparse(&parse_tangle(rhs)?)?;
        let diff = a.sub(&b);
        let witness = (0..diff.cols()).find(|&j| !diff.column(j).is_empty()).map(|j| format!("column {j} differs"));
        rep.check(name, witness.is_none(), witness);
    }
    Ok(rep)
}

/// Pairs of `0 → 2` tangles presenting the same handlebody-link.
pub const DECOMPOSITION_PAIRS: [(&str, &str, &str); 3] = [
    ("genus-1 unknot, twisted", "cap", "cap ; X+"),
    ("genus-2 unknot, two openings", "cap ; (id1 * cap * id1) ; (Y * Y)", "cap ; (cap * id2) ; (id1 * Y * id1) ; (Y * id1)"),
    ("genus-2 unknot, twisted", "cap ; (id1 * cap * id1) ; (Y * Y)", "cap ; (id1 * cap * id1) ; (Y * Y) ; X-"),
];

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::{cyclic_group_algebra, drinfeld_double, left_integral, sweedler, symmetric_group_s3};
    use crate::tangle::genus_presentation;

    fn q() -> Field {
        Field::Rationals
    }

    fn ctx(h: &HopfAlgebra) -> EvalContext {
        EvalContext::new(&YdCategory::new(h).unwrap()).unwrap()
    }

    #[test]
    fn cap_then_cup_on_z2() {
        let c = ctx(&cyclic_group_algebra(q(), 2).unwrap());
        let v = c.evaluate_str("cap ; cup").unwrap();
        assert_eq!(v.matrix[(0, 0)], q().int(2));
        assert_eq!(c.evaluate_str("id1").unwrap().matrix, Matrix::identity(q(), 2));
    }

    #[test]
    fn twisted_copairing_on_s3() {
        let h = symmetric_group_s3(q()).unwrap();
        let c = ctx(&h);
        let v = c.evaluate_str("cap ; X+").unwrap().matrix;
        for g in 0..6 {
            let ginv = h.antipode_basis(g)[0].0;
            for k in 0..6 {
                let want = if k == g { q().one() } else { q().zero() };
                assert_eq!(v[(ginv * 6 + k, 0)], want);
            }
        }
    }

    #[test]
    fn group_invariants_count_homomorphisms() {
        let h = symmetric_group_s3(q()).unwrap();
        let c = ctx(&h);
        for g in 1..=3 {
            let t = parse_tangle(&genus_presentation(g)).unwrap();
            assert_eq!(invariant_v(&c, &t).unwrap(), q().int(6i64.pow(g as u32)));
        }
        for (_, a, b) in DECOMPOSITION_PAIRS {
            let (a, b) = (parse_tangle(a).unwrap(), parse_tangle(b).unwrap());
            assert_eq!(invariant_v(&c, &a).unwrap(), invariant_v(&c, &b).unwrap());
        }
    }

    #[test]
    fn sweedler_is_refused() {
        let cat = YdCategory::new(&sweedler(q()).unwrap()).unwrap();
        assert!(matches!(EvalContext::new(&cat), Err(Error::NotUnimodular)));
    }

    #[test]
    fn relation_suite_on_s3_and_double() {
        for h in [symmetric_group_s3(q()).unwrap(), drinfeld_double(&sweedler(q()).unwrap()).unwrap()] {
            let rep = relation_suite(&ctx(&h)).unwrap();
            assert!(rep.all_passed(), "{}: {rep}", h.name());
        }
    }

    #[test]
    fn s_condition_on_groups() {
        let h = symmetric_group_s3(q()).unwrap();
        assert!(check_s_condition(&h, &h.counit_vector().iter().enumerate().map(|(i, _)| if i == 0 { q().one() } else { q().zero() }).collect::<Vec<_>>()));
        let d = crate::hopf::dual(&h).unwrap();
        assert!(check_s_condition(&d, &left_integral(&crate::hopf::dual(&d).unwrap()).unwrap()));
    }

    #[test]
    fn wrong_arity_is_a_type_error() {
        let c = ctx(&cyclic_group_algebra(q(), 2).unwrap());
        assert!(matches!(invariant_v(&c, &parse_tangle("cap ; cup").unwrap()), Err(Error::Type { .. })));
    }
}
