//! Machine checks of the characterizations of unimodularity and of the
//! relations between `L`, `R` and the distinguished object.

use super::{Convention, HModule, YdCategory};
use crate::error::Result;
use crate::hopf::distinguished_character;
use crate::report::Report;

/// Names of the eight conditions, in order.
pub const MAIN_THEOREM_CONDITIONS: [&str; 8] = [
    "(1) D ≅ 1",
    "(2) L(V) ≅ R(V) [object-wise evidence]",
    "(3) L(V*) ≅ L(V)* [object-wise evidence]",
    "(4) R(V*) ≅ R(V)* [object-wise evidence]",
    "(5) L(1) ≅ L(1)*",
    "(6) R(1) ≅ R(1)*",
    "(7) Hom(1, L(1)) ≠ 0",
    "(8) Hom(R(1), 1) ≠ 0",
];

/// Which of the two candidate formulas for `L^!` is compared with `R`.
pub const L_SHRIEK_VARIANT: &str = "*L(V*)";

impl YdCategory {
    /// `k`, the regular module and every 1-dimensional module, up to dimension `cap`.
    pub fn probe_set(&self, cap: Option<usize>) -> Result<Vec<HModule>> {
        let n = self.hopf().dim();
        let cap = cap.unwrap_or(n * n);
        let mut out = self.one_dimensional_modules()?;
        out.insert(1, self.regular_hmod());
        out.retain(|v| v.dim() <= cap);
        Ok(out)
    }

    fn for_all_probes(&self, probes: &[HModule], mut test: impl FnMut(&HModule) -> Result<bool>) -> Result<(bool, Option<String>)> {
        for v in probes {
            if !test(v)? {
                return Ok((false, Some(format!("fails at V = {}", v.name))));
            }
        }
        Ok((true, Some(format!("holds on {} probes", probes.len()))))
    }

    /// Evaluates each condition independently; the only assertion is that they agree.
    pub fn check_main_theorem(&self, cap: Option<usize>) -> Result<Report> {
        let h = self.hopf();
        let probes = self.probe_set(cap)?;
        let mut vals = Vec::with_capacity(8);
        let mut details = Vec::with_capacity(8);
        let mut push = |v: bool, d: Option<String>| {
            vals.push(v);
            details.push(d);
        };

        push(distinguished_character(h)? == h.counit_vector(), None);
        let (v, d) = self.for_all_probes(&probes, |v| self.is_iso_yd(&self.functor_l(v)?, &self.functor_r(v)?))?;
        push(v, d);
        let (v, d) = self.for_all_probes(&probes, |v| self.is_iso_yd(&self.functor_l(&self.dual_hmod(v))?, &self.dual_yd(&self.functor_l(v)?)?))?;
        push(v, d);
        let (v, d) = self.for_all_probes(&probes, |v| self.is_iso_yd(&self.functor_r(&self.dual_hmod(v))?, &self.dual_yd(&self.functor_r(v)?)?))?;
        push(v, d);
        let k = self.unit_hmod();
        let l1 = self.functor_l(&k)?;
        let r1 = self.functor_r(&k)?;
        push(self.is_iso_yd(&l1, &self.dual_yd(&l1)?)?, None);
        push(self.is_iso_yd(&r1, &self.dual_yd(&r1)?)?, None);
        let unit = self.unit_yd();
        let d7 = self.hom_yd_dim(&unit, &l1);
        push(d7 != 0, Some(format!("dim = {d7}")));
        let d8 = self.hom_yd_dim(&r1, &unit);
        push(d8 != 0, Some(format!("dim = {d8}")));

        let mut rep = Report::new();
        for ((name, v), d) in MAIN_THEOREM_CONDITIONS.iter().zip(&vals).zip(details) {
            rep.value(*name, *v, d);
        }
        let agree = vals.iter().all(|v| *v == vals[0]);
        let shown: Vec<&str> = vals.iter().map(|v| if *v { "T" } else { "F" }).collect();
        rep.outcome("conditions agree", (!agree).then(|| shown.join("")));
        Ok(rep)
    }

    /// Object-wise checks of `R ≅ L(D ⊗ -) ≅ L(- ⊗ D)`, `L^! ≅ R`, and the hom
    /// identities that follow from them.
    pub fn check_l_r_relations(&self, cap: Option<usize>) -> Result<Report> {
        let probes = self.probe_set(cap)?;
        let (d, conv) = self.distinguished_object()?;
        let d_dual = self.dual_hmod(&d);
        let mut rep = Report::new();
        rep.value("D = k_α (rather than k_α⁻¹)", conv == Convention::Alpha, None);
        let k = self.unit_hmod();
        let tests = [self.unit_yd(), self.functor_l(&k)?, self.functor_r(&k)?];
        for v in &probes {
            let tag = &v.name;
            let rv = self.functor_r(v)?;
            let lv = self.functor_l(v)?;
            rep.check(format!("R(V) ≅ L(D⊗V) [{tag}]"), self.is_iso_yd(&rv, &self.functor_l(&self.tensor_hmod(&d, v))?)?, None);
            rep.check(format!("R(V) ≅ L(V⊗D) [{tag}]"), self.is_iso_yd(&rv, &self.functor_l(&self.tensor_hmod(v, &d))?)?, None);
            let a = self.is_iso_yd(&rv, &self.right_dual_yd(&self.functor_l(&self.dual_hmod(v))?)?)?;
            let b = self.is_iso_yd(&rv, &self.dual_yd(&self.functor_l(&self.right_dual_hmod(v))?)?)?;
            rep.value(format!("R(V) ≅ L(*V)* [{tag}]"), b, None);
            rep.check(format!("L^!(V) ≅ R(V) via {L_SHRIEK_VARIANT} [{tag}]"), a, None);
            rep.check(format!("R(V) ≠ 0 [{tag}]"), rv.dim() > 0 && rv.dim() == self.hopf().dim() * v.dim(), None);
            for x in &tests {
                let ux = x.underlying();
                let xn = x.name();
                let left = self.hom_hmod_dim(&self.tensor_hmod(&d, ux), v);
                let mid = self.hom_yd_dim(x, &lv);
                let right = self.hom_hmod_dim(&self.tensor_hmod(ux, &d), v);
                rep.outcome(
                    format!("Hom(D⊗UX, V) = Hom(X, L(V)) = Hom(UX⊗D, V) [X = {xn}, {tag}]"),
                    (left != mid || mid != right).then(|| format!("{left}, {mid}, {right}")),
                );
                let left = self.hom_hmod_dim(v, &self.tensor_hmod(&d_dual, ux));
                let mid = self.hom_yd_dim(&rv, x);
                let right = self.hom_hmod_dim(v, &self.tensor_hmod(ux, &d_dual));
                rep.outcome(
                    format!("Hom(V, D*⊗UX) = Hom(R(V), X) = Hom(V, UX⊗D*) [X = {xn}, {tag}]"),
                    (left != mid || mid != right).then(|| format!("{left}, {mid}, {right}")),
                );
                let (a, b) = (self.hom_yd_dim(&lv, x), self.hom_hmod_dim(v, ux));
                rep.outcome(format!("Hom(L(V), X) = Hom(V, UX) [X = {xn}, {tag}]"), (a != b).then(|| format!("{a} vs {b}")));
                let (a, b) = (self.hom_yd_dim(x, &rv), self.hom_hmod_dim(ux, v));
                rep.outcome(format!("Hom(X, R(V)) = Hom(UX, V) [X = {xn}, {tag}]"), (a != b).then(|| format!("{a} vs {b}")));
            }
        }
        Ok(rep)
    }
}

/// The values of the eight conditions recorded by [`YdCategory::check_main_theorem`].
pub fn condition_vector(rep: &Report) -> Vec<bool> {
    MAIN_THEOREM_CONDITIONS.iter().map(|n| rep.passed(n)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::{cyclic_group_algebra, sweedler, symmetric_group_s3, trivial_hopf};
    use crate::scalar::Field;

    #[test]
    fn sweedler_fails_every_condition() {
        let c = YdCategory::new(&sweedler(Field::Rationals).unwrap()).unwrap();
        let rep = c.check_main_theorem(None).unwrap();
        assert!(rep.all_passed(), "{rep}");
        assert_eq!(condition_vector(&rep), vec![false; 8]);
    }

    #[test]
    fn group_algebras_satisfy_every_condition() {
        for h in [cyclic_group_algebra(Field::Rationals, 2).unwrap(), symmetric_group_s3(Field::Rationals).unwrap()] {
            let c = YdCategory::new(&h).unwrap();
            let rep = c.check_main_theorem(None).unwrap();
            assert!(rep.all_passed(), "{rep}");
            assert_eq!(condition_vector(&rep), vec![true; 8]);
        }
    }

    #[test]
    fn relations_hold_on_small_examples() {
        for h in [trivial_hopf(Field::Rationals).unwrap(), sweedler(Field::Rationals).unwrap(), symmetric_group_s3(Field::Rationals).unwrap()] {
            let c = YdCategory::new(&h).unwrap();
            let rep = c.check_l_r_relations(None).unwrap();
            assert!(rep.all_passed(), "{}: {rep}", h.name());
        }
    }
}
