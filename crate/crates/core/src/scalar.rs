//! Exact field elements over the rationals or a prime field.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The base field every structure constant lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum Field {
    #[serde(rename = "Q")]
    Rationals,
    #[serde(rename = "Fp")]
    Prime { p: u64 },
}

impl Field {
    pub fn prime(p: u64) -> Result<Field> {
        if p <= 2 || !is_prime(p) {
            return Err(Error::InvalidField(format!("{p} is not an odd prime")));
        }
        if p >= 1 << 62 {
            return Err(Error::InvalidField(format!("modulus {p} too large")));
        }
        Ok(Field::Prime { p })
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            Field::Rationals => 0,
            Field::Prime { p } => *p,
        }
    }

    pub fn zero(&self) -> Scalar {
        Scalar::from_i64(*self, 0)
    }

    pub fn one(&self) -> Scalar {
        Scalar::from_i64(*self, 1)
    }

    pub fn int(&self, n: i64) -> Scalar {
        Scalar::from_i64(*self, n)
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rationals => write!(f, "Q"),
            Field::Prime { p } => write!(f, "F{p}"),
        }
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

#[derive(Clone, Debug)]
enum Repr {
    /// Reduced fraction with positive denominator that fits in machine words.
    Small(i64, i64),
    Big(Box<BigRational>),
    Mod(u64, u64),
}

/// An exact field element. Rationals are kept in lowest terms, residues in `0..p`.
#[derive(Clone, Debug)]
pub struct Scalar(Repr);

fn small_from_i128(n: i128, d: i128) -> Repr {
    debug_assert!(d != 0);
    let g = n.gcd(&d);
    let (mut n, mut d) = (n / g, d / g);
    if d < 0 {
        n = -n;
        d = -d;
    }
    match (i64::try_from(n), i64::try_from(d)) {
        (Ok(n), Ok(d)) => Repr::Small(n, d),
        _ => Repr::Big(Box::new(BigRational::new(BigInt::from(n), BigInt::from(d)))),
    }
}

fn from_big(r: BigRational) -> Repr {
    match (r.numer().to_i64(), r.denom().to_i64()) {
        (Some(n), Some(d)) => Repr::Small(n, d),
        _ => Repr::Big(Box::new(r)),
    }
}

fn to_big(r: &Repr) -> BigRational {
    match r {
        Repr::Small(n, d) => BigRational::new_raw(BigInt::from(*n), BigInt::from(*d)),
        Repr::Big(b) => (**b).clone(),
        Repr::Mod(..) => unreachable!("prime-field residue used as a rational"),
    }
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    acc
}

impl Scalar {
    pub fn from_i64(field: Field, n: i64) -> Scalar {
        match field {
            Field::Rationals => Scalar(Repr::Small(n, 1)),
            Field::Prime { p } => Scalar(Repr::Mod(n.rem_euclid(p as i64) as u64, p)),
        }
    }

    /// `n / d` in the given field; `None` when `d` vanishes there.
    pub fn ratio(field: Field, n: i64, d: i64) -> Option<Scalar> {
        let d = Scalar::from_i64(field, d).inv()?;
        Some(Scalar::from_i64(field, n) * d)
    }

    pub fn from_bigint_ratio(field: Field, n: &BigInt, d: &BigInt) -> Option<Scalar> {
        if d.is_zero() {
            return None;
        }
        match field {
            Field::Rationals => Some(Scalar(from_big(BigRational::new(n.clone(), d.clone())))),
            Field::Prime { p } => {
                let pb = BigInt::from(p);
                let nm = n.mod_floor(&pb).to_u64().unwrap();
                let dm = d.mod_floor(&pb).to_u64().unwrap();
                if dm == 0 {
                    return None;
                }
                Some(Scalar(Repr::Mod(nm, p)) * Scalar(Repr::Mod(dm, p)).inv()?)
            }
        }
    }

    pub fn field(&self) -> Field {
        match &self.0 {
            Repr::Small(..) | Repr::Big(_) => Field::Rationals,
            Repr::Mod(_, p) => Field::Prime { p: *p },
        }
    }

    pub fn is_zero(&self) -> bool {
        match &self.0 {
            Repr::Small(n, _) => *n == 0,
            Repr::Big(b) => b.is_zero(),
            Repr::Mod(v, _) => *v == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match &self.0 {
            Repr::Small(n, d) => *n == 1 && *d == 1,
            Repr::Big(b) => b.is_one(),
            Repr::Mod(v, _) => *v == 1,
        }
    }

    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(Scalar(match &self.0 {
            Repr::Small(n, d) => small_from_i128(*d as i128, *n as i128),
            Repr::Big(b) => from_big(b.recip()),
            Repr::Mod(v, p) => Repr::Mod(pow_mod(*v, p - 2, *p), *p),
        }))
    }

    pub fn pow(&self, mut e: u64) -> Scalar {
        let mut base = self.clone();
        let mut acc = self.field().one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Numerator and denominator of a rational value.
    pub fn as_rational(&self) -> Option<BigRational> {
        match &self.0 {
            Repr::Mod(..) => None,
            r => Some(to_big(r)),
        }
    }

    /// Residue of a prime-field value.
    pub fn residue(&self) -> Option<u64> {
        match &self.0 {
            Repr::Mod(v, _) => Some(*v),
            _ => None,
        }
    }

    /// Image of a rational under reduction modulo `p`; `None` if `p` divides the denominator.
    pub fn reduce_mod(&self, p: u64) -> Option<Scalar> {
        match &self.0 {
            Repr::Small(n, d) => {
                let f = Field::Prime { p };
                let dm = d.rem_euclid(p as i64);
                if dm == 0 {
                    return None;
                }
                Some(Scalar::from_i64(f, *n) * Scalar(Repr::Mod(dm as u64, p)).inv()?)
            }
            Repr::Big(b) => Scalar::from_bigint_ratio(Field::Prime { p }, b.numer(), b.denom()),
            Repr::Mod(..) => Some(self.clone()),
        }
    }

    pub fn parse(field: Field, s: &str) -> Result<Scalar> {
        let bad = || Error::Parse(format!("malformed scalar {s:?}"));
        let s = s.trim();
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s, "1"),
        };
        let n: BigInt = num.parse().map_err(|_| bad())?;
        let d: BigInt = den.parse().map_err(|_| bad())?;
        Scalar::from_bigint_ratio(field, &n, &d).ok_or_else(|| Error::Parse(format!("zero denominator in {s:?}")))
    }

    fn check_same(&self, other: &Scalar) {
        debug_assert_eq!(self.field(), other.field(), "mixed-field arithmetic");
    }
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Scalar) -> bool {
        match (&self.0, &other.0) {
            (Repr::Small(a, b), Repr::Small(c, d)) => a == c && b == d,
            (Repr::Mod(a, p), Repr::Mod(b, q)) => a == b && p == q,
            (Repr::Mod(..), _) | (_, Repr::Mod(..)) => false,
            (x, y) => to_big(x) == to_big(y),
        }
    }
}

impl Eq for Scalar {}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Scalar) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Total order used only for deterministic sorting (numeric for rationals, by residue mod p).
impl Ord for Scalar {
    fn cmp(&self, other: &Scalar) -> Ordering {
        match (&self.0, &other.0) {
            (Repr::Mod(a, _), Repr::Mod(b, _)) => a.cmp(b),
            (Repr::Mod(..), _) => Ordering::Greater,
            (_, Repr::Mod(..)) => Ordering::Less,
            (x, y) => to_big(x).cmp(&to_big(y)),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Small(n, 1) => write!(f, "{n}"),
            Repr::Small(n, d) => write!(f, "{n}/{d}"),
            Repr::Big(b) if b.denom().is_one() => write!(f, "{}", b.numer()),
            Repr::Big(b) => write!(f, "{}/{}", b.numer(), b.denom()),
            Repr::Mod(v, _) => write!(f, "{v}"),
        }
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        self.check_same(rhs);
        Scalar(match (&self.0, &rhs.0) {
            (Repr::Small(a, b), Repr::Small(c, d)) => {
                if *b == 1 && *d == 1 {
                    match a.checked_add(*c) {
                        Some(s) => Repr::Small(s, 1),
                        None => small_from_i128(*a as i128 + *c as i128, 1),
                    }
                } else {
                    let (a, b, c, d) = (*a as i128, *b as i128, *c as i128, *d as i128);
                    small_from_i128(a * d + c * b, b * d)
                }
            }
            (Repr::Mod(a, p), Repr::Mod(b, _)) => {
                let s = a + b;
                Repr::Mod(if s >= *p { s - p } else { s }, *p)
            }
            (x, y) => from_big(to_big(x) + to_big(y)),
        })
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        self.check_same(rhs);
        Scalar(match (&self.0, &rhs.0) {
            (Repr::Small(a, b), Repr::Small(c, d)) => {
                if *b == 1 && *d == 1 {
                    match a.checked_mul(*c) {
                        Some(s) => Repr::Small(s, 1),
                        None => small_from_i128(*a as i128 * *c as i128, 1),
                    }
                } else {
                    let (a, b, c, d) = (*a as i128, *b as i128, *c as i128, *d as i128);
                    // cross-cancel first to keep the products small
                    let g1 = a.gcd(&d).max(1);
                    let g2 = c.gcd(&b).max(1);
                    small_from_i128((a / g1) * (c / g2), (b / g2) * (d / g1))
                }
            }
            (Repr::Mod(a, p), Repr::Mod(b, _)) => Repr::Mod(mul_mod(*a, *b, *p), *p),
            (x, y) => from_big(to_big(x) * to_big(y)),
        })
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar(match &self.0 {
            Repr::Small(n, d) => match n.checked_neg() {
                Some(m) => Repr::Small(m, *d),
                None => small_from_i128(-(*n as i128), *d as i128),
            },
            Repr::Big(b) => from_big(-(**b).clone()),
            Repr::Mod(v, p) => Repr::Mod(if *v == 0 { 0 } else { p - v }, *p),
        })
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar {
                (&self).$m(rhs)
            }
        }
        impl<'a> $tr<Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                self.$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = &*self * rhs;
    }
}

impl Serialize for Scalar {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals_stay_reduced() {
        let q = Field::Rationals;
        let a = Scalar::ratio(q, 2, 4).unwrap();
        assert_eq!(a.to_string(), "1/2");
        let b = Scalar::ratio(q, 3, -6).unwrap();
        assert_eq!(b.to_string(), "-1/2");
        assert!((a + b).is_zero());
    }

    #[test]
    fn overflow_promotes_to_big() {
        let q = Field::Rationals;
        let big = q.int(i64::MAX);
        let sq = &big * &big;
        assert_eq!(sq.to_string(), "85070591730234615847396907784232501249");
        let back = &sq * &big.inv().unwrap();
        assert_eq!(back, big);
    }

    #[test]
    fn prime_field_inverse() {
        let f = Field::prime(7).unwrap();
        for n in 1..7 {
            let x = f.int(n);
            assert!((&x * &x.inv().unwrap()).is_one());
        }
        assert_eq!(f.int(-1).to_string(), "6");
        assert!(Field::prime(9).is_err());
        assert!(Field::prime(2).is_err());
    }

    #[test]
    fn parse_formats() {
        let q = Field::Rationals;
        assert_eq!(Scalar::parse(q, "3/4").unwrap().to_string(), "3/4");
        assert_eq!(Scalar::parse(q, "-2").unwrap().to_string(), "-2");
        let f = Field::prime(7).unwrap();
        assert_eq!(Scalar::parse(f, "1/2").unwrap().to_string(), "4");
        assert!(Scalar::parse(q, "1/0").is_err());
        assert!(Scalar::parse(q, "x").is_err());
    }

    #[test]
    fn reduction_mod_p() {
        let q = Field::Rationals;
        let h = Scalar::ratio(q, 1, 2).unwrap();
        assert_eq!(h.reduce_mod(7).unwrap().to_string(), "4");
        let s = Scalar::ratio(q, 1, 7).unwrap();
        assert!(s.reduce_mod(7).is_none());
    }
}
