//! Intertwiner spaces and isomorphism tests.
//!
//! Homs are found by spinning: a basis of the domain is grown from seed vectors
//! under the generators, a map is determined by its values on the seeds, and
//! every non-tree edge of the spin contributes one block of linear relations.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{HModule, MorphismMatrix, YDModule, YdCategory};
use crate::error::{Error, Result};
use crate::matrix::{rank_mod_u64, unit_vector, EchelonBasis, Matrix, CERT_PRIMES};
use crate::scalar::{Field, Scalar};
use crate::sparse::SpMat;

struct Spin {
    /// spanning vectors `w_i` of the domain
    ws: Vec<Vec<Scalar>>,
    /// `(parent, generator)` or the seed number
    nodes: Vec<std::result::Result<(usize, usize), usize>>,
    /// non-tree edges `D_k w_i = Σ c_l w_l`
    rels: Vec<(usize, usize, Vec<Scalar>)>,
    seeds: usize,
}

fn spin(field: Field, dim: usize, ops: &[SpMat]) -> Spin {
    let mut eb = EchelonBasis::new(field, dim, true);
    let mut s = Spin { ws: Vec::new(), nodes: Vec::new(), rels: Vec::new(), seeds: 0 };
    let mut q = 0;
    let mut next_seed = 0;
    loop {
        while q < s.ws.len() {
            for (k, op) in ops.iter().enumerate() {
                let v = op.apply(&s.ws[q]);
                match eb.coordinates(&v) {
                    Some(c) => s.rels.push((q, k, c)),
                    None => {
                        eb.insert(&v);
                        s.ws.push(v);
                        s.nodes.push(Ok((q, k)));
                    }
                }
            }
            q += 1;
        }
        if eb.is_full() {
            break;
        }
        loop {
            let e = unit_vector(field, dim, next_seed);
            next_seed += 1;
            if eb.insert(&e) {
                s.ws.push(e);
                s.nodes.push(Err(s.seeds));
                s.seeds += 1;
                break;
            }
        }
    }
    s
}

enum Want {
    Dim,
    Basis,
}

/// `{X : X D_k = C_k X}` for a domain of dimension `a` and codomain of dimension `b`.
fn solve(field: Field, a: usize, b: usize, dom: &[SpMat], cod: &[SpMat], want: Want) -> (usize, Vec<Matrix>) {
    if a == 0 || b == 0 {
        return (0, Vec::new());
    }
    let sp = spin(field, a, dom);
    let n = b * sp.seeds;
    let mut ps: Vec<Matrix> = Vec::with_capacity(sp.ws.len());
    for node in &sp.nodes {
        let p = match node {
            Ok((i, k)) => cod[*k].mul_dense(&ps[*i]),
            Err(j) => Matrix::from_fn(field, b, n, |r, c| if c == j * b + r { field.one() } else { field.zero() }),
        };
        ps.push(p);
    }
    let mut eb = EchelonBasis::new(field, n, false);
    'rels: for (i, k, c) in &sp.rels {
        let mut r = cod[*k].mul_dense(&ps[*i]);
        for (l, x) in c.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            r = r.sub(&ps[l].scale(x));
        }
        for row in 0..b {
            eb.insert(r.row(row));
            if eb.is_full() {
                break 'rels;
            }
        }
    }
    let dim = n - eb.len();
    if matches!(want, Want::Dim) || dim == 0 {
        return (dim, Vec::new());
    }
    let ys = if eb.is_empty() { (0..n).map(|i| unit_vector(field, n, i)).collect() } else { Matrix::from_rows(field, eb.rows()).nullspace() };
    let winv = Matrix::from_columns(field, a, &sp.ws).invert().expect("spin basis is independent");
    let xs = ys
        .iter()
        .map(|y| {
            let cols: Vec<Vec<Scalar>> = ps.iter().map(|p| p.apply(y)).collect();
            Matrix::from_columns(field, b, &cols).mul(&winv)
        })
        .collect();
    (dim, xs)
}

/// Orients the problem so the relation space lives on the smaller side.
fn intertwiners(field: Field, a: usize, b: usize, dom: &[&SpMat], cod: &[&SpMat], want: Want) -> (usize, Vec<Matrix>) {
    if b > a {
        let dt: Vec<SpMat> = dom.iter().map(|m| m.transpose()).collect();
        let ct: Vec<SpMat> = cod.iter().map(|m| m.transpose()).collect();
        let (d, xs) = solve(field, b, a, &ct, &dt, want);
        (d, xs.iter().map(Matrix::transpose).collect())
    } else {
        let d: Vec<SpMat> = dom.iter().map(|m| (*m).clone()).collect();
        let c: Vec<SpMat> = cod.iter().map(|m| (*m).clone()).collect();
        solve(field, a, b, &d, &c, want)
    }
}

impl YdCategory {
    /// Basis of `Hom_H(M, N)`.
    pub fn hom_hmod(&self, m: &HModule, n: &HModule) -> Vec<Matrix> {
        intertwiners(self.field(), m.dim(), n.dim(), &self.hmod_generators(m), &self.hmod_generators(n), Want::Basis).1
    }

    pub fn hom_hmod_dim(&self, m: &HModule, n: &HModule) -> usize {
        intertwiners(self.field(), m.dim(), n.dim(), &self.hmod_generators(m), &self.hmod_generators(n), Want::Dim).0
    }

    /// Basis of the Yetter-Drinfeld morphisms `M → N`.
    pub fn hom_yd(&self, m: &YDModule, n: &YDModule) -> Vec<MorphismMatrix> {
        intertwiners(self.field(), m.dim(), n.dim(), &self.yd_generators(m), &self.yd_generators(n), Want::Basis)
            .1
            .into_iter()
            .map(|x| MorphismMatrix { matrix: x, domain: m.tag(), codomain: n.tag() })
            .collect()
    }

    pub fn hom_yd_dim(&self, m: &YDModule, n: &YDModule) -> usize {
        intertwiners(self.field(), m.dim(), n.dim(), &self.yd_generators(m), &self.yd_generators(n), Want::Dim).0
    }

    fn modulus(&self) -> u64 {
        match self.field() {
            Field::Prime { p } => p,
            Field::Rationals => CERT_PRIMES[1],
        }
    }

    /// Whether `M` is free of rank one over `D(H)`: some vector has an orbit of
    /// full rank. A `false` is inconclusive.
    pub fn looks_free(&self, m: &YDModule) -> bool {
        let n = self.hopf().dim();
        if m.dim() != n * n {
            return false;
        }
        let p = self.modulus();
        let acts: Option<Vec<_>> = (0..n).map(|b| m.act(b).residues(p)).collect();
        let duals: Option<Vec<_>> = self.dual_part_action(m).iter().map(|x| x.residues(p)).collect();
        let (Some(acts), Some(duals)) = (acts, duals) else {
            return false;
        };
        let apply = |cols: &Vec<Vec<(usize, u64)>>, v: &[u64]| -> Vec<u64> {
            let mut out = vec![0u64; v.len()];
            for (j, col) in cols.iter().enumerate() {
                if v[j] == 0 {
                    continue;
                }
                for (i, x) in col {
                    out[*i] = ((out[*i] as u128 + *x as u128 * v[j] as u128) % p as u128) as u64;
                }
            }
            out
        };
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed() ^ 0x6672_6565);
        for _ in 0..3 {
            let v: Vec<u64> = (0..m.dim()).map(|_| rng.gen_range(0..p)).collect();
            let mut rows = Vec::with_capacity(n * n * m.dim());
            for b in &acts {
                let u = apply(b, &v);
                for a in &duals {
                    rows.extend(apply(a, &u));
                }
            }
            if rank_mod_u64(n * n, m.dim(), rows, p) == m.dim() {
                return true;
            }
        }
        false
    }

    /// Whether `M ≅ N` as Yetter-Drinfeld modules.
    pub fn is_iso_yd(&self, m: &YDModule, n: &YDModule) -> Result<bool> {
        if m.dim() != n.dim() {
            return Ok(false);
        }
        if m.dim() == 0 {
            return Ok(true);
        }
        if self.looks_free(m) && self.looks_free(n) {
            return Ok(true);
        }
        let basis: Vec<Matrix> = self.hom_yd(m, n).into_iter().map(|x| x.matrix).collect();
        invertible_combination(self.field(), m.dim(), &basis, self.seed())
    }
}

fn combine(field: Field, d: usize, basis: &[Matrix], cs: &[Scalar]) -> Matrix {
    let mut x = Matrix::zeros(field, d, d);
    for (c, b) in cs.iter().zip(basis) {
        if !c.is_zero() {
            x.add_assign(&b.scale(c));
        }
    }
    x
}

/// Whether the span of `basis` contains an invertible matrix.
pub fn invertible_combination(field: Field, d: usize, basis: &[Matrix], seed: u64) -> Result<bool> {
    if basis.is_empty() {
        return Ok(false);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x6973_6f);
    for t in 0..8 {
        let range = 1i64 << (t + 1);
        let cs: Vec<Scalar> = basis.iter().map(|_| field.int(rng.gen_range(-range..=range))).collect();
        if combine(field, d, basis, &cs).certify_invertible() {
            return Ok(true);
        }
    }
    let r = basis.len() as u32;
    match field {
        Field::Prime { p } => {
            // exhaustive over all coefficient vectors
            let total = (p as u128).checked_pow(r).filter(|&t| t <= 100_000).ok_or_else(|| Error::Undecided(format!("{p}^{r} combinations")))?;
            for idx in 1..total {
                let mut k = idx;
                let cs: Vec<Scalar> = (0..r)
                    .map(|_| {
                        let c = (k % p as u128) as i64;
                        k /= p as u128;
                        field.int(c)
                    })
                    .collect();
                if combine(field, d, basis, &cs).fast_rank() == d {
                    return Ok(true);
                }
            }
            Ok(false)
        }
        Field::Rationals => {
            // det of the generic combination has degree ≤ d in each variable,
            // so it vanishes identically iff it vanishes on {0..d}^r
            let side = d as u128 + 1;
            let total = side.checked_pow(r).filter(|&t| t <= 10_000).ok_or_else(|| Error::Undecided(format!("{side}^{r} grid points")))?;
            for idx in 0..total {
                let mut k = idx;
                let cs: Vec<Scalar> = (0..r)
                    .map(|_| {
                        let c = (k % side) as i64;
                        k /= side;
                        field.int(c)
                    })
                    .collect();
                let x = combine(field, d, basis, &cs);
                if x.certify_invertible() || x.is_invertible() {
                    return Ok(true);
                }
            }
            Ok(false)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::{sweedler, symmetric_group_s3, trivial_hopf};

    #[test]
    fn endomorphisms_of_unit() {
        let c = YdCategory::new(&sweedler(Field::Rationals).unwrap()).unwrap();
        let u = c.unit_yd();
        assert_eq!(c.hom_yd(&u, &u).len(), 1);
        assert!(c.is_iso_yd(&u, &u).unwrap());
    }

    #[test]
    fn hom_matches_brute_force_on_regular_module() {
        let h = symmetric_group_s3(Field::Rationals).unwrap();
        let c = YdCategory::new(&h).unwrap();
        let reg = c.regular_hmod();
        // End_H(H) ≅ H^op
        let basis = c.hom_hmod(&reg, &reg);
        assert_eq!(basis.len(), 6);
        for x in &basis {
            assert!(c.is_hmod_morphism(x, &reg, &reg));
        }
        assert_eq!(c.hom_hmod_dim(&reg, &c.unit_hmod()), 1);
        assert_eq!(c.hom_hmod_dim(&c.unit_hmod(), &reg), 1);
    }

    #[test]
    fn trivial_hopf_algebra_homs_are_all_maps() {
        let c = YdCategory::new(&trivial_hopf(Field::Rationals).unwrap()).unwrap();
        let k = c.unit_hmod();
        let two = c.tensor_hmod(&c.regular_hmod(), &HModule::new("k2", Field::Rationals, 2, vec![SpMat::identity(Field::Rationals, 2)]));
        assert_eq!(c.hom_hmod_dim(&k, &two), 2);
        assert_eq!(c.hom_hmod_dim(&two, &two), 4);
    }

    #[test]
    fn one_dimensional_modules_are_distinguished() {
        let h = sweedler(Field::Rationals).unwrap();
        let c = YdCategory::new(&h).unwrap();
        let alpha = crate::hopf::distinguished_character(&h).unwrap();
        // k_α is a YD module with coaction 1 ↦ g ⊗ 1 (basis 1, x, g, gx)
        let coacts = (0..4).map(|x| if x == 2 { SpMat::identity(Field::Rationals, 1) } else { SpMat::zeros(Field::Rationals, 1, 1) }).collect();
        let ka = c.yd(c.character_module("k_α", &alpha), coacts).unwrap();
        assert!(!c.is_iso_yd(&c.unit_yd(), &ka).unwrap());
    }

    #[test]
    fn exhaustive_fallback_over_small_field() {
        let f = Field::prime(3).unwrap();
        let a = Matrix::from_i64(f, &[&[1, 0], &[0, 0]]);
        let b = Matrix::from_i64(f, &[&[0, 0], &[0, 1]]);
        assert!(invertible_combination(f, 2, &[a.clone(), b], 0).unwrap());
        assert!(!invertible_combination(f, 2, &[a], 0).unwrap());
    }
}
