//! Univariate polynomials and root finding in the base field.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::matrix::{EchelonBasis, Matrix};
use crate::scalar::{Field, Scalar};

/// Coefficients, constant term first, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    field: Field,
    c: Vec<Scalar>,
}

impl Poly {
    pub fn new(field: Field, mut c: Vec<Scalar>) -> Poly {
        while c.last().is_some_and(Scalar::is_zero) {
            c.pop();
        }
        Poly { field, c }
    }

    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    fn x_plus(field: Field, a: Scalar) -> Poly {
        Poly::new(field, vec![a, field.one()])
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        let mut acc = self.field.zero();
        for c in self.c.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    fn monic(&self) -> Poly {
        let lead = self.c.last().expect("nonzero").inv().unwrap();
        Poly::new(self.field, self.c.iter().map(|x| x * &lead).collect())
    }

    pub fn mul(&self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::new(self.field, vec![]);
        }
        let mut c = vec![self.field.zero(); self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            for (j, b) in o.c.iter().enumerate() {
                c[i + j] += &(a * b);
            }
        }
        Poly::new(self.field, c)
    }

    pub fn sub(&self, o: &Poly) -> Poly {
        let len = self.c.len().max(o.c.len());
        let z = self.field.zero();
        Poly::new(self.field, (0..len).map(|i| self.c.get(i).unwrap_or(&z) - o.c.get(i).unwrap_or(&z)).collect())
    }

    pub fn divrem(&self, d: &Poly) -> (Poly, Poly) {
        let dd = d.degree().expect("division by zero polynomial");
        let inv = d.c[dd].inv().unwrap();
        let mut r = self.c.clone();
        let mut q = vec![self.field.zero(); self.c.len().saturating_sub(dd)];
        while r.len() > dd && !r.is_empty() {
            let k = r.len() - 1 - dd;
            let f = &r[r.len() - 1] * &inv;
            if !f.is_zero() {
                for (i, x) in d.c.iter().enumerate() {
                    r[k + i] -= &(&f * x);
                }
                q[k] = f;
            }
            r.pop();
        }
        (Poly::new(self.field, q), Poly::new(self.field, r))
    }

    pub fn gcd(&self, o: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.divrem(&b).1;
            a = b;
            b = r;
        }
        if a.is_zero() { a } else { a.monic() }
    }

    fn powmod(&self, mut e: BigInt, m: &Poly) -> Poly {
        let mut base = self.divrem(m).1;
        let mut acc = Poly::new(self.field, vec![self.field.one()]).divrem(m).1;
        while e > BigInt::zero() {
            if e.is_odd() {
                acc = acc.mul(&base).divrem(m).1;
            }
            base = base.mul(&base).divrem(m).1;
            e >>= 1;
        }
        acc
    }
}

/// Minimal polynomial of `x` under the multiplication `mul`, from powers of `x`.
pub fn minimal_polynomial(field: Field, one: &[Scalar], x: &[Scalar], mul: impl Fn(&[Scalar], &[Scalar]) -> Vec<Scalar>) -> Poly {
    let mut powers = vec![one.to_vec()];
    let mut e = EchelonBasis::new(field, one.len(), true);
    e.insert(one);
    loop {
        let next = mul(powers.last().unwrap(), x);
        if let Some(coords) = e.coordinates(&next) {
            let mut c: Vec<Scalar> = coords.iter().map(|v| -v).collect();
            c.push(field.one());
            return Poly::new(field, c);
        }
        e.insert(&next);
        powers.push(next);
    }
}

/// Minimal polynomial of a square matrix.
pub fn matrix_minimal_polynomial(m: &Matrix) -> Poly {
    let n = m.rows();
    let f = m.field();
    let flat = |a: &Matrix| a.entries().to_vec();
    let id = Matrix::identity(f, n);
    minimal_polynomial(f, &flat(&id), &flat(m), |a, b| {
        let a = Matrix::from_fn(f, n, n, |i, j| a[i * n + j].clone());
        let b = Matrix::from_fn(f, n, n, |i, j| b[i * n + j].clone());
        flat(&a.mul(&b))
    })
}

/// Distinct roots in the base field, sorted.
pub fn roots(p: &Poly, seed: u64) -> Result<Vec<Scalar>> {
    let mut out = match p.field {
        Field::Rationals => rational_roots(p)?,
        Field::Prime { p: q } => prime_roots(p, q, seed),
    };
    out.sort();
    out.dedup();
    Ok(out)
}

fn divisors(n: &BigInt) -> Result<Vec<BigInt>> {
    let n = n.abs();
    let limit = n.to_u64().filter(|&v| v <= 1 << 40).ok_or_else(|| Error::Undecided(format!("coefficient {n} too large for rational root search")))?;
    let mut ds = Vec::new();
    let mut d = 1u64;
    while d * d <= limit {
        if limit % d == 0 {
            ds.push(BigInt::from(d));
            if d * d != limit {
                ds.push(BigInt::from(limit / d));
            }
        }
        d += 1;
    }
    Ok(ds)
}

fn rational_roots(p: &Poly) -> Result<Vec<Scalar>> {
    let f = p.field;
    let mut out = Vec::new();
    let mut c: Vec<_> = p.c.iter().map(|x| x.as_rational().unwrap()).collect();
    while c.first().is_some_and(|x| x.is_zero()) {
        c.remove(0);
        if !out.iter().any(Scalar::is_zero) {
            out.push(f.zero());
        }
    }
    if c.len() <= 1 {
        return Ok(out);
    }
    let lcm = c.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = c.iter().map(|x| (x * num_rational::BigRational::from_integer(lcm.clone())).to_integer()).collect();
    let reduced = Poly::new(f, c.iter().map(|x| Scalar::from_bigint_ratio(f, x.numer(), x.denom()).unwrap()).collect());
    for num in divisors(&ints[0])? {
        for den in divisors(ints.last().unwrap())? {
            for sign in [1, -1] {
                let cand = Scalar::from_bigint_ratio(f, &(&num * sign), &den).unwrap();
                if reduced.eval(&cand).is_zero() {
                    out.push(cand);
                }
            }
        }
    }
    Ok(out)
}

fn prime_roots(p: &Poly, q: u64, seed: u64) -> Vec<Scalar> {
    let f = p.field;
    if q <= 1 << 16 {
        return (0..q).map(|a| f.int(a as i64)).filter(|a| p.eval(a).is_zero()).collect();
    }
    // gcd with x^q - x isolates the split part, then equal-degree splitting
    let x = Poly::x_plus(f, f.zero());
    let xq = x.powmod(BigInt::from(q), p);
    let split = p.gcd(&xq.sub(&x));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    let mut stack = vec![split];
    while let Some(g) = stack.pop() {
        match g.degree() {
            None | Some(0) => {}
            Some(1) => out.push(-&(&g.c[0] * &g.c[1].inv().unwrap())),
            Some(_) => loop {
                let a = f.int(rng.gen_range(0..q) as i64);
                let h = Poly::x_plus(f, a).powmod(BigInt::from((q - 1) / 2), &g);
                let d = g.gcd(&h.sub(&Poly::new(f, vec![f.one()])));
                if let Some(dd) = d.degree() {
                    if dd > 0 && Some(dd) < g.degree() {
                        stack.push(g.divrem(&d).0);
                        stack.push(d);
                        break;
                    }
                }
            },
        }
    }
    out
}
