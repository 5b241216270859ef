use hopfwork::hopf::{cyclic_group_algebra, drinfeld_double, grouplikes, sweedler, symmetric_group_s3};
use hopfwork::matrix::Matrix;
use hopfwork::qcqsa::{build_b, colinear_traces};
use hopfwork::tangle::{check_s_condition, genus_presentation, invariant_v, parse_tangle, EvalContext};
use hopfwork::yd::YdCategory;
use hopfwork::{Field, HopfAlgebra, Scalar};
use proptest::prelude::*;

const Q: Field = Field::Rationals;

fn ctx(h: &HopfAlgebra) -> EvalContext {
    EvalContext::new(&YdCategory::new(h).unwrap()).unwrap()
}

fn id(n: usize) -> String {
    format!("id{n}")
}

/// One layer `id_p * g * id_q` acting on `w` strands, and its output width.
fn layer(w: usize, pick: usize, pos: usize) -> (String, usize) {
    let gens: [(&str, usize, usize); 5] = [("cup", 2, 0), ("cap", 0, 2), ("Y", 2, 1), ("X+", 2, 2), ("X-", 2, 2)];
    let fits: Vec<_> = gens.iter().filter(|g| g.1 <= w && w - g.1 + g.2 <= 4).collect();
    let (name, i, o) = *fits[pick % fits.len()];
    let p = pos % (w - i + 1);
    let q = w - i - p;
    let mut parts = vec![];
    if p > 0 {
        parts.push(id(p));
    }
    parts.push(name.to_string());
    if q > 0 {
        parts.push(id(q));
    }
    (format!("({})", parts.join(" * ")), w - i + o)
}

fn random_tangle(w0: usize, picks: &[(usize, usize)]) -> (Vec<String>, usize) {
    let mut w = w0;
    let mut layers = vec![];
    for &(a, b) in picks {
        let (l, w2) = layer(w, a, b);
        layers.push(l);
        w = w2;
    }
    (layers, w)
}

fn eval(c: &EvalContext, s: &str) -> Matrix {
    c.evaluate_str(s).unwrap().matrix
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn evaluation_is_functorial(w0 in 0usize..=3, picks in prop::collection::vec((0usize..5, 0usize..4), 1..6),
                                w1 in 0usize..=1, picks2 in prop::collection::vec((0usize..5, 0usize..4), 1..3)) {
        let c = ctx(&cyclic_group_algebra(Q, 2).unwrap());
        let (layers, _) = random_tangle(w0, &picks);
        let whole = eval(&c, &layers.join(" ; "));
        let mut prod = Matrix::identity(Q, 2usize.pow(w0 as u32));
        for l in &layers {
            prod = eval(&c, l).mul(&prod);
        }
        prop_assert_eq!(&whole, &prod);

        let (other, _) = random_tangle(w1, &picks2);
        let other = other.join(" ; ");
        let t = eval(&c, &format!("({}) * ({other})", layers.join(" ; ")));
        prop_assert_eq!(t, whole.kron(&eval(&c, &other)));
    }

    #[test]
    fn rescaling_the_trace_scales_by_cup_and_cap_counts(w0 in 0usize..=2, picks in prop::collection::vec((0usize..5, 0usize..4), 1..6), k in 1i64..5) {
        let h = symmetric_group_s3(Q).unwrap();
        let cat = YdCategory::new(&h).unwrap();
        let c = EvalContext::new(&cat).unwrap();
        let factor = Q.int(k + 1);
        let scaled: Vec<Scalar> = c.trace().iter().map(|x| x * &factor).collect();
        let c2 = EvalContext::with_trace(&cat, &scaled).unwrap();
        let (layers, _) = random_tangle(w0, &picks);
        let text = layers.join(" ; ");
        let (cups, caps) = parse_tangle(&text).unwrap().cup_cap_count();
        let ratio = factor.pow(cups as u64) * factor.inv().unwrap().pow(caps as u64);
        prop_assert_eq!(eval(&c2, &text), eval(&c, &text).scale(&ratio));
    }
}

/// |Hom(F_g, G)|: a homomorphism from a free group is any choice of images
/// of the generators, so enumerate those tuples.
fn count_homs_from_free_group(h: &HopfAlgebra, g: usize) -> usize {
    let order = grouplikes(h).unwrap().len();
    let mut tuples: Vec<Vec<usize>> = vec![vec![]];
    for _ in 0..g {
        tuples = tuples.into_iter().flat_map(|t| (0..order).map(move |x| [t.clone(), vec![x]].concat())).collect();
    }
    tuples.len()
}

#[test]
fn unknotted_handlebodies_count_homomorphisms() {
    for h in [cyclic_group_algebra(Q, 2).unwrap(), symmetric_group_s3(Q).unwrap()] {
        let c = ctx(&h);
        for g in 1..=3 {
            let v = invariant_v(&c, &parse_tangle(&genus_presentation(g)).unwrap()).unwrap();
            assert_eq!(v, Q.int(count_homs_from_free_group(&h, g) as i64), "{} genus {g}", h.name());
        }
    }
}

#[test]
fn s_condition_goldens() {
    let d = drinfeld_double(&sweedler(Q).unwrap()).unwrap();
    for (h, want) in [(d, true), (symmetric_group_s3(Q).unwrap(), true)] {
        let cat = YdCategory::new(&h).unwrap();
        let lam = colinear_traces(&cat, &build_b(&cat).unwrap()).remove(0);
        assert_eq!(check_s_condition(&h, &lam), want, "{}", h.name());
    }
}
