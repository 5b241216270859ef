use hopfwork::matrix::{EchelonBasis, Matrix};
use hopfwork::{Field, Scalar};
use proptest::prelude::*;

fn small_matrix(max: usize) -> impl Strategy<Value = (usize, usize, Vec<i64>)> {
    (1..=max, 1..=max).prop_flat_map(|(r, c)| (Just(r), Just(c), prop::collection::vec(-3i64..=3, r * c)))
}

fn build(field: Field, r: usize, c: usize, v: &[i64]) -> Matrix {
    Matrix::from_fn(field, r, c, |i, j| field.int(v[i * c + j]))
}

fn fields() -> impl Strategy<Value = Field> {
    prop_oneof![Just(Field::Rationals), Just(Field::Prime { p: 7 }), Just(Field::Prime { p: 3 })]
}

proptest! {
    #[test]
    fn nullspace_is_annihilated((r, c, v) in small_matrix(6), f in fields()) {
        let a = build(f, r, c, &v);
        let ns = a.nullspace();
        prop_assert_eq!(a.rank() + ns.len(), c);
        for n in &ns {
            prop_assert!(a.apply(n).iter().all(Scalar::is_zero));
        }
    }

    #[test]
    fn solve_round_trip((r, c, v) in small_matrix(6), x in prop::collection::vec(-4i64..=4, 6), f in fields()) {
        let a = build(f, r, c, &v);
        let xv: Vec<Scalar> = x[..c].iter().map(|&t| f.int(t)).collect();
        let b = Matrix::column_vector(f, &a.apply(&xv));
        let sol = a.solve(&b).unwrap();
        prop_assert_eq!(a.mul(&sol), b);
    }

    #[test]
    fn kron_mixed_product((r, c, v) in small_matrix(3), (r2, c2, w) in small_matrix(3)) {
        let f = Field::Rationals;
        let a = build(f, r, c, &v);
        let b = build(f, r2, c2, &w);
        let at = a.transpose();
        let bt = b.transpose();
        prop_assert_eq!(a.kron(&b).mul(&at.kron(&bt)), a.mul(&at).kron(&b.mul(&bt)));
        let i = Matrix::identity(f, 2);
        prop_assert_eq!(a.kron(&b).kron(&i), a.kron(&b.kron(&i)));
    }

    #[test]
    fn inverse_is_two_sided((n, _c, v) in small_matrix(5).prop_filter("square", |(r, c, _)| r == c)) {
        let a = build(Field::Rationals, n, n, &v);
        match a.invert() {
            Ok(inv) => {
                prop_assert_eq!(a.mul(&inv), Matrix::identity(Field::Rationals, n));
                prop_assert!(!a.determinant().is_zero());
            }
            Err(_) => prop_assert!(a.determinant().is_zero()),
        }
    }

    #[test]
    fn fractions_stay_reduced(n in -1000i64..1000, d in 1i64..1000, m in -1000i64..1000, e in 1i64..1000) {
        let f = Field::Rationals;
        let x = Scalar::ratio(f, n, d).unwrap();
        let y = Scalar::ratio(f, m, e).unwrap();
        let s = &x + &y;
        prop_assert_eq!(Scalar::parse(f, &s.to_string()).unwrap(), s.clone());
        prop_assert_eq!(&(&s - &y) , &x);
        if !y.is_zero() {
            prop_assert_eq!(&(&(&x * &y) * &y.inv().unwrap()), &x);
        }
    }

    #[test]
    fn echelon_coordinates_reconstruct(vs in prop::collection::vec(prop::collection::vec(-2i64..=2, 4), 1..7)) {
        let f = Field::Rationals;
        let mut e = EchelonBasis::new(f, 4, true);
        let mut kept: Vec<Vec<Scalar>> = Vec::new();
        for v in &vs {
            let v: Vec<Scalar> = v.iter().map(|&t| f.int(t)).collect();
            if let Some(c) = e.coordinates(&v) {
                let mut acc = vec![f.zero(); 4];
                for (k, w) in c.iter().zip(&kept) {
                    for (a, b) in acc.iter_mut().zip(w) {
                        *a += &(k * b);
                    }
                }
                prop_assert_eq!(acc, v);
            } else {
                prop_assert!(e.insert(&v));
                kept.push(v);
            }
        }
    }
}
