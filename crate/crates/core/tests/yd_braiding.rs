use hopfwork::hopf::{sweedler, symmetric_group_s3, taft};
use hopfwork::matrix::Matrix;
use hopfwork::yd::{YDModule, YdCategory};
use hopfwork::{Field, HopfAlgebra};
use proptest::prelude::*;

fn taft3() -> HopfAlgebra {
    let f7 = Field::prime(7).unwrap();
    taft(f7, 3, &f7.int(2)).unwrap()
}

fn objects(c: &YdCategory) -> Vec<YDModule> {
    let mut out = vec![c.unit_yd(), c.functor_r(&c.unit_hmod()).unwrap(), c.functor_l(&c.unit_hmod()).unwrap()];
    for v in c.one_dimensional_modules().unwrap().iter().skip(1).take(1) {
        out.push(c.functor_l(v).unwrap());
    }
    out
}

fn id(c: &YdCategory, m: &YDModule) -> Matrix {
    Matrix::identity(c.field(), m.dim())
}

fn check_hexagons(c: &YdCategory) {
    let obs = objects(c);
    for m in &obs {
        for n in &obs {
            let s_mn = c.braiding_yd(m, n).matrix;
            assert_eq!(s_mn.mul(&c.braiding_inv_yd(m, n).matrix), Matrix::identity(c.field(), m.dim() * n.dim()));
            assert!(c.is_yd_morphism(&s_mn, &c.tensor_yd(m, n).unwrap(), &c.tensor_yd(n, m).unwrap()));
            for p in &obs {
                let np = c.tensor_yd(n, p).unwrap();
                let lhs = c.braiding_yd(m, &np).matrix;
                let rhs = id(c, n).kron(&c.braiding_yd(m, p).matrix).mul(&s_mn.kron(&id(c, p)));
                assert_eq!(lhs, rhs, "σ(M, N⊗P) for {} {} {}", m.name(), n.name(), p.name());
                let mn = c.tensor_yd(m, n).unwrap();
                let lhs = c.braiding_yd(&mn, p).matrix;
                let rhs = c.braiding_yd(m, p).matrix.kron(&id(c, n)).mul(&id(c, m).kron(&c.braiding_yd(n, p).matrix));
                assert_eq!(lhs, rhs, "σ(M⊗N, P) for {} {} {}", m.name(), n.name(), p.name());
            }
        }
    }
}

#[test]
fn hexagons_on_sweedler() {
    check_hexagons(&YdCategory::new(&sweedler(Field::Rationals).unwrap()).unwrap());
}

#[test]
fn hexagons_on_taft3() {
    check_hexagons(&YdCategory::new(&taft3()).unwrap());
}

#[test]
fn adjunctions_hold_dimensionwise() {
    for h in [sweedler(Field::Rationals).unwrap(), taft3(), symmetric_group_s3(Field::Rationals).unwrap()] {
        let c = YdCategory::new(&h).unwrap();
        let mut vs = c.one_dimensional_modules().unwrap();
        vs.push(c.regular_hmod());
        let obs = objects(&c);
        for v in &vs {
            let (l, r) = (c.functor_l(v).unwrap(), c.functor_r(v).unwrap());
            for m in &obs {
                assert_eq!(c.hom_yd_dim(&l, m), c.hom_hmod_dim(v, m.underlying()), "L ⊣ U on {}", h.name());
                assert_eq!(c.hom_yd_dim(m, &r), c.hom_hmod_dim(m.underlying(), v), "U ⊣ R on {}", h.name());
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn braiding_is_natural(coefs in prop::collection::vec(-3i64..=3, 16), which in 0usize..3) {
        let c = YdCategory::new(&sweedler(Field::Rationals).unwrap()).unwrap();
        let f = c.field();
        let obs = objects(&c);
        let (a, b) = (&obs[1 + which % 2], &obs[1 + (which + 1) % 3]);
        let homs = c.hom_yd(a, b);
        let mut g = Matrix::zeros(f, b.dim(), a.dim());
        for (t, k) in homs.iter().zip(&coefs) {
            g = g.add(&t.matrix.scale(&f.int(*k)));
        }
        prop_assert!(c.is_yd_morphism(&g, a, b));
        for n in &obs {
            let lhs = c.braiding_yd(b, n).matrix.mul(&g.kron(&id(&c, n)));
            let rhs = id(&c, n).kron(&g).mul(&c.braiding_yd(a, n).matrix);
            prop_assert_eq!(lhs, rhs);
            let lhs = c.braiding_yd(n, b).matrix.mul(&id(&c, n).kron(&g));
            let rhs = g.kron(&id(&c, n)).mul(&c.braiding_yd(n, a).matrix);
            prop_assert_eq!(lhs, rhs);
        }
    }
}
