//! Standard examples, duals and Drinfeld doubles.

use super::{HopfAlgebra, HopfData};
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::{Field, Scalar};

fn assemble(
    name: &str,
    field: Field,
    basis: Vec<String>,
    prod: impl Fn(usize, usize) -> Vec<(usize, Scalar)>,
    unit: Vec<Scalar>,
    cop: impl Fn(usize) -> Vec<(usize, usize, Scalar)>,
    counit: Vec<Scalar>,
    anti: impl Fn(usize) -> Vec<(usize, Scalar)>,
) -> Result<HopfAlgebra> {
    let n = basis.len();
    let mut mult = Matrix::zeros(field, n, n * n);
    let mut comult = Matrix::zeros(field, n * n, n);
    let mut antipode = Matrix::zeros(field, n, n);
    for i in 0..n {
        for j in 0..n {
            for (k, c) in prod(i, j) {
                mult[(k, i * n + j)] += &c;
            }
        }
        for (a, b, c) in cop(i) {
            comult[(a * n + b, i)] += &c;
        }
        for (k, c) in anti(i) {
            antipode[(k, i)] += &c;
        }
    }
    HopfAlgebra::new(HopfData {
        name: name.to_string(),
        field,
        basis,
        mult,
        unit,
        comult,
        counit,
        antipode,
        rmatrix: None,
        ribbon: None,
    })
}

/// Group algebra from a Cayley table `table[a][b] = index of a·b`.
pub fn group_algebra(field: Field, name: &str, labels: &[&str], table: &[Vec<usize>]) -> Result<HopfAlgebra> {
    let n = labels.len();
    if table.len() != n || table.iter().any(|r| r.len() != n || r.iter().any(|&x| x >= n)) {
        return Err(Error::NotAGroup("table is not closed on the listed elements".into()));
    }
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if table[table[a][b]][c] != table[a][table[b][c]] {
                    return Err(Error::NotAGroup(format!("({}·{})·{} ≠ {}·({}·{})", labels[a], labels[b], labels[c], labels[a], labels[b], labels[c])));
                }
            }
        }
    }
    let e = (0..n)
        .find(|&e| (0..n).all(|a| table[e][a] == a && table[a][e] == a))
        .ok_or_else(|| Error::NotAGroup("no identity element".into()))?;
    let mut inv = vec![0; n];
    for a in 0..n {
        inv[a] = (0..n)
            .find(|&b| table[a][b] == e && table[b][a] == e)
            .ok_or_else(|| Error::NotAGroup(format!("{} has no inverse", labels[a])))?;
    }
    let one = field.one();
    let mut unit = vec![field.zero(); n];
    unit[e] = one.clone();
    assemble(
        name,
        field,
        labels.iter().map(|s| s.to_string()).collect(),
        |a, b| vec![(table[a][b], one.clone())],
        unit,
        |a| vec![(a, a, one.clone())],
        vec![one.clone(); n],
        |a| vec![(inv[a], one.clone())],
    )
}

pub fn cyclic_group_algebra(field: Field, n: usize) -> Result<HopfAlgebra> {
    let labels: Vec<String> = (0..n).map(|i| if i == 0 { "1".into() } else if i == 1 { "g".into() } else { format!("g^{i}") }).collect();
    let refs: Vec<&str> = labels.iter().map(String::as_str).collect();
    let table: Vec<Vec<usize>> = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
    group_algebra(field, &format!("kZ{n}"), &refs, &table)
}

/// `kS3` with basis `1, (12), (23), (13), (123), (132)`.
pub fn symmetric_group_s3(field: Field) -> Result<HopfAlgebra> {
    // permutations of {0,1,2} as images; composition (a·b)(x) = a(b(x))
    let perms: [[usize; 3]; 6] = [[0, 1, 2], [1, 0, 2], [0, 2, 1], [2, 1, 0], [1, 2, 0], [2, 0, 1]];
    let labels = ["1", "(12)", "(23)", "(13)", "(123)", "(132)"];
    let table: Vec<Vec<usize>> = (0..6)
        .map(|a| {
            (0..6)
                .map(|b| {
                    let c = [perms[a][perms[b][0]], perms[a][perms[b][1]], perms[a][perms[b][2]]];
                    perms.iter().position(|p| *p == c).unwrap()
                })
                .collect()
        })
        .collect();
    group_algebra(field, "kS3", &labels, &table)
}

pub fn trivial_hopf(field: Field) -> Result<HopfAlgebra> {
    group_algebra(field, "k", &["1"], &[vec![0]])
}

fn taft_label(i: usize, j: usize) -> String {
    let g = match i {
        0 => String::new(),
        1 => "g".into(),
        _ => format!("g^{i}"),
    };
    let x = match j {
        0 => String::new(),
        1 => "x".into(),
        _ => format!("x^{j}"),
    };
    if g.is_empty() && x.is_empty() { "1".into() } else { g + &x }
}

/// Taft algebra `T_n(q)`: `g^n = 1`, `x^n = 0`, `xg = q gx`, `Δx = x⊗1 + g⊗x`.
/// Basis `g^i x^j` at index `i*n + j`.
pub fn taft(field: Field, n: usize, q: &Scalar) -> Result<HopfAlgebra> {
    if n < 2 {
        return Err(Error::NotPrimitiveRoot(format!("{q} (order {n})")));
    }
    let mut pw = vec![field.one()];
    for k in 1..=n {
        pw.push(&pw[k - 1] * q);
    }
    if !pw[n].is_one() || (1..n).any(|k| pw[k].is_one()) {
        return Err(Error::NotPrimitiveRoot(format!("{q} (order {n})")));
    }
    let dim = n * n;
    let idx = |i: usize, j: usize| (i % n) * n + j;
    let prod = |a: usize, b: usize| -> Vec<(usize, Scalar)> {
        let (i, j) = (a / n, a % n);
        let (k, l) = (b / n, b % n);
        if j + l >= n {
            return vec![];
        }
        vec![(idx(i + k, j + l), pw[(j * k) % n].clone())]
    };
    let mulv = |a: &[Scalar], b: &[Scalar]| -> Vec<Scalar> {
        let mut out = vec![field.zero(); dim];
        for (i, x) in a.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (j, y) in b.iter().enumerate().filter(|(_, y)| !y.is_zero()) {
                for (k, c) in prod(i, j) {
                    out[k] += &(&(x * y) * &c);
                }
            }
        }
        out
    };
    let mul2 = |a: &[Scalar], b: &[Scalar]| -> Vec<Scalar> {
        let mut out = vec![field.zero(); dim * dim];
        for (i, x) in a.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (j, y) in b.iter().enumerate().filter(|(_, y)| !y.is_zero()) {
                for (p, c) in prod(i / dim, j / dim) {
                    for (r, d) in prod(i % dim, j % dim) {
                        out[p * dim + r] += &(&(x * y) * &(&c * &d));
                    }
                }
            }
        }
        out
    };
    let e = |i: usize, j: usize| crate::matrix::unit_vector(field, dim, idx(i, j));
    let e2 = |a: usize, b: usize| crate::matrix::unit_vector(field, dim * dim, a * dim + b);
    let dg = e2(idx(1, 0), idx(1, 0));
    let mut dx = e2(idx(0, 1), idx(0, 0));
    dx[idx(1, 0) * dim + idx(0, 1)] = field.one();
    let sg = e(n - 1, 0);
    let mut sx = e(n - 1, 1);
    for v in sx.iter_mut() {
        *v = -&*v;
    }
    let mut cops = Vec::with_capacity(dim);
    let mut antis = Vec::with_capacity(dim);
    for a in 0..dim {
        let (i, j) = (a / n, a % n);
        let mut d = e2(0, 0);
        let mut s = e(0, 0);
        for _ in 0..i {
            d = mul2(&d, &dg);
        }
        for _ in 0..j {
            d = mul2(&d, &dx);
            s = mulv(&sx, &s);
        }
        for _ in 0..i {
            s = mulv(&s, &sg);
        }
        cops.push(d);
        antis.push(s);
    }
    let mut counit = vec![field.zero(); dim];
    for i in 0..n {
        counit[idx(i, 0)] = field.one();
    }
    let basis = (0..dim).map(|a| taft_label(a / n, a % n)).collect();
    let name = if n == 2 { "H4".to_string() } else { format!("T{n}({q})") };
    assemble(
        &name,
        field,
        basis,
        prod,
        e(0, 0),
        |a| {
            cops[a]
                .iter()
                .enumerate()
                .filter(|(_, x)| !x.is_zero())
                .map(|(k, x)| (k / dim, k % dim, x.clone()))
                .collect()
        },
        counit,
        |a| crate::tensor::sparse_of(&antis[a]),
    )
}

/// Sweedler's four-dimensional algebra, `T_2(-1)`.
pub fn sweedler(field: Field) -> Result<HopfAlgebra> {
    taft(field, 2, &field.int(-1))
}

/// The dual Hopf algebra `H*` in the dual basis.
pub fn dual(h: &HopfAlgebra) -> Result<HopfAlgebra> {
    let d = h.data();
    HopfAlgebra::new(HopfData {
        name: format!("{}*", d.name),
        field: d.field,
        basis: d.basis.iter().map(|b| format!("{b}^*")).collect(),
        mult: d.comult.transpose(),
        unit: d.counit.clone(),
        comult: d.mult.transpose(),
        counit: d.unit.clone(),
        antipode: d.antipode.transpose(),
        rmatrix: None,
        ribbon: None,
    })
}

/// Drinfeld double `D(H) = H*^cop ⋈ H`, basis `e^a ⋈ e_b` at index `a*n + b`,
/// carrying its canonical R-matrix `Σ (ε⋈e_i) ⊗ (e^i⋈1)`.
pub fn drinfeld_double(h: &HopfAlgebra) -> Result<HopfAlgebra> {
    let n = h.dim();
    let f = h.field();
    let dn = n * n;
    let sinv = h.antipode_inv_matrix()?.clone();
    let e = |i: usize| h.basis_vector(i);

    // conj[r*n + p][x] = coefficient vector (over c) of S^{-1}(e_r) e_x e_p
    let mut conj: Vec<Vec<Vec<Scalar>>> = Vec::with_capacity(n * n);
    for r in 0..n {
        let sr = sinv.apply(&e(r));
        for p in 0..n {
            conj.push((0..n).map(|x| h.mul(&h.mul(&sr, &e(x)), &e(p))).collect());
        }
    }
    // dual product e^a e^c = Σ_k comult[(a,c),k] e^k
    let dual_mul = |a: usize, phi: &[Scalar]| -> Vec<Scalar> {
        let mut out = vec![f.zero(); n];
        for (c, y) in phi.iter().enumerate().filter(|(_, y)| !y.is_zero()) {
            for k in 0..n {
                let m = &h.comult_matrix()[(a * n + c, k)];
                if !m.is_zero() {
                    out[k] += &(y * m);
                }
            }
        }
        out
    };

    let mut mult = Matrix::zeros(f, dn, dn * dn);
    for a in 0..n {
        for b in 0..n {
            let terms = h.comult2_basis(b).to_vec();
            for c in 0..n {
                for d in 0..n {
                    let col = (a * n + b) * dn + (c * n + d);
                    for (p, q, r, coef) in &terms {
                        // φ(x) = e^c(S^{-1}(e_r) x e_p)
                        let phi: Vec<Scalar> = (0..n).map(|x| conj[r * n + p][x][c].clone()).collect();
                        if phi.iter().all(Scalar::is_zero) {
                            continue;
                        }
                        let left = dual_mul(a, &phi);
                        let right = h.mul(&e(*q), &e(d));
                        for (i, u) in left.iter().enumerate().filter(|(_, u)| !u.is_zero()) {
                            for (j, v) in right.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                                mult[(i * n + j, col)] += &(&(coef * u) * v);
                            }
                        }
                    }
                }
            }
        }
    }

    let mut unit = vec![f.zero(); dn];
    for a in 0..n {
        for u in 0..n {
            let c = h.counit_basis(a) * &h.unit_vector()[u];
            if !c.is_zero() {
                unit[a * n + u] = c;
            }
        }
    }
    let mut counit = vec![f.zero(); dn];
    for a in 0..n {
        for b in 0..n {
            counit[a * n + b] = &h.unit_vector()[a] * h.counit_basis(b);
        }
    }
    // Δ(e^a ⋈ e_b) = Σ (e^j ⋈ e_p) ⊗ (e^i ⋈ e_q) with mult[a,(i,j)], Δ(e_b) = Σ e_p ⊗ e_q
    let mut comult = Matrix::zeros(f, dn * dn, dn);
    for a in 0..n {
        for b in 0..n {
            for i in 0..n {
                for j in 0..n {
                    let m = &h.mult_matrix()[(a, i * n + j)];
                    if m.is_zero() {
                        continue;
                    }
                    for (p, q, c) in h.comult_basis(b) {
                        comult[((j * n + p) * dn + (i * n + q), a * n + b)] += &(m * c);
                    }
                }
            }
        }
    }
    let labels: Vec<String> = (0..n)
        .flat_map(|a| (0..n).map(move |b| (a, b)))
        .map(|(a, b)| format!("{}^*⋈{}", h.label(a), h.label(b)))
        .collect();
    let mut data = HopfData {
        name: format!("D({})", h.name()),
        field: f,
        basis: labels,
        mult,
        unit,
        comult,
        counit,
        antipode: Matrix::zeros(f, dn, dn),
        rmatrix: None,
        ribbon: None,
    };
    // S(f ⋈ h) = (ε ⋈ S(h)) (f∘S^{-1} ⋈ 1)
    let partial = HopfAlgebra::new(data.clone())?;
    let eps_h = |v: &[Scalar]| -> Vec<Scalar> {
        let mut out = vec![f.zero(); dn];
        for a in 0..n {
            for (b, x) in v.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
                out[a * n + b] += &(h.counit_basis(a) * x);
            }
        }
        out
    };
    let f_one = |phi: &[Scalar]| -> Vec<Scalar> {
        let mut out = vec![f.zero(); dn];
        for (a, x) in phi.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (u, y) in h.unit_vector().iter().enumerate().filter(|(_, y)| !y.is_zero()) {
                out[a * n + u] += &(x * y);
            }
        }
        out
    };
    let mut antipode = Matrix::zeros(f, dn, dn);
    for a in 0..n {
        // (e^a ∘ S^{-1})(e_x) = coefficient of e_a in S^{-1}(e_x)
        let phi: Vec<Scalar> = (0..n).map(|x| sinv[(a, x)].clone()).collect();
        let right = f_one(&phi);
        for b in 0..n {
            let left = eps_h(&h.antipode(&e(b)));
            let s = partial.mul(&left, &right);
            for (k, x) in s.into_iter().enumerate() {
                antipode[(k, a * n + b)] = x;
            }
        }
    }
    data.antipode = antipode;
    // R = Σ_i (ε ⋈ e_i) ⊗ (e^i ⋈ 1)
    let mut r = vec![f.zero(); dn * dn];
    for i in 0..n {
        let left = eps_h(&e(i));
        let mut phi = vec![f.zero(); n];
        phi[i] = f.one();
        let right = f_one(&phi);
        for (x, u) in left.iter().enumerate().filter(|(_, u)| !u.is_zero()) {
            for (y, v) in right.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                r[x * dn + y] += &(u * v);
            }
        }
    }
    data.rmatrix = Some(r);
    HopfAlgebra::new(data)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::verify_hopf;

    #[test]
    fn group_algebras_are_hopf() {
        for h in [trivial_hopf(Field::Rationals).unwrap(), cyclic_group_algebra(Field::Rationals, 2).unwrap(), symmetric_group_s3(Field::Rationals).unwrap()] {
            let r = verify_hopf(&h);
            assert!(r.all_passed(), "{}: {r}", h.name());
        }
    }

    #[test]
    fn non_group_table_is_rejected() {
        let t = vec![vec![0, 1], vec![1, 1]];
        assert!(matches!(group_algebra(Field::Rationals, "bad", &["a", "b"], &t), Err(Error::NotAGroup(_))));
    }

    #[test]
    fn taft_algebras_are_hopf() {
        let h4 = sweedler(Field::Rationals).unwrap();
        assert!(verify_hopf(&h4).all_passed(), "{}", verify_hopf(&h4));
        let f7 = Field::prime(7).unwrap();
        let t3 = taft(f7, 3, &f7.int(2)).unwrap();
        assert!(verify_hopf(&t3).all_passed(), "{}", verify_hopf(&t3));
        assert!(matches!(taft(f7, 3, &f7.int(3)), Err(Error::NotPrimitiveRoot(_))));
    }

    #[test]
    fn duals_and_doubles_are_hopf() {
        let h4 = sweedler(Field::Rationals).unwrap();
        let d = dual(&h4).unwrap();
        assert!(verify_hopf(&d).all_passed());
        let z2 = cyclic_group_algebra(Field::Rationals, 2).unwrap();
        for h in [&z2, &h4] {
            let dd = drinfeld_double(h).unwrap();
            let r = verify_hopf(&dd);
            assert!(r.all_passed(), "{}: {r}", dd.name());
        }
    }
}
