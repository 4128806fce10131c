//! Ground-field scalars: exact rationals or residues modulo a prime.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Field descriptor shared by every scalar, matrix, algebra and module.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Field {
    Rational,
    Prime(u32),
}

impl Field {
    pub fn prime(p: u32) -> Result<Field> {
        if p < 2 || !is_prime(p) {
            return Err(Error::Field(format!("{p} is not prime")));
        }
        Ok(Field::Prime(p))
    }

    pub fn zero(self) -> Scalar {
        match self {
            Field::Rational => Scalar::Q(BigRational::zero()),
            Field::Prime(p) => Scalar::Fp(0, p),
        }
    }

    pub fn one(self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(self, v: i64) -> Scalar {
        match self {
            Field::Rational => Scalar::Q(BigRational::from_integer(BigInt::from(v))),
            Field::Prime(p) => Scalar::Fp(v.rem_euclid(p as i64) as u32, p),
        }
    }

    /// Canonical image of a rational number; fails when the denominator
    /// is not invertible in the field.
    pub fn from_rational(self, q: &BigRational) -> Result<Scalar> {
        match self {
            Field::Rational => Ok(Scalar::Q(q.clone())),
            Field::Prime(p) => {
                let m = BigInt::from(p);
                let num = residue(q.numer(), &m);
                let den = residue(q.denom(), &m);
                if den == 0 {
                    return Err(Error::Field(format!("denominator of {q} vanishes mod {p}")));
                }
                let num = Scalar::Fp(num, p);
                num.checked_div(&Scalar::Fp(den, p))
            }
        }
    }

    /// All field elements, for prime fields only.
    pub fn elements(self) -> Option<Vec<Scalar>> {
        match self {
            Field::Rational => None,
            Field::Prime(p) => Some((0..p).map(|v| Scalar::Fp(v, p)).collect()),
        }
    }

    pub fn characteristic(self) -> u32 {
        match self {
            Field::Rational => 0,
            Field::Prime(p) => p,
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "Q"),
            Field::Prime(p) => write!(f, "Fp {p}"),
        }
    }
}

fn residue(v: &BigInt, m: &BigInt) -> u32 {
    let r = ((v % m) + m) % m;
    r.to_u32().expect("residue fits")
}

pub(crate) fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= p as u64 {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// An element of `Q` or of `F_p`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Q(BigRational),
    /// Residue in `[0, p)` together with `p`.
    Fp(u32, u32),
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Q(_) => Field::Rational,
            Scalar::Fp(_, p) => Field::Prime(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Q(q) => q.is_zero(),
            Scalar::Fp(v, _) => *v == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Q(q) => q.is_one(),
            Scalar::Fp(v, _) => *v == 1,
        }
    }

    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Scalar::Q(q) => Scalar::Q(q.recip()),
            Scalar::Fp(v, p) => Scalar::Fp(pow_mod(*v as u64, (*p - 2) as u64, *p as u64) as u32, *p),
        })
    }

    pub fn checked_div(&self, rhs: &Scalar) -> Result<Scalar> {
        let inv = rhs.inv().ok_or(Error::DivisionByZero)?;
        Ok(self * &inv)
    }

    /// The rational value, when the scalar is rational.
    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Q(q) => Some(q),
            Scalar::Fp(..) => None,
        }
    }

    /// Integer value for rationals with denominator one.
    pub fn as_integer(&self) -> Option<BigInt> {
        match self {
            Scalar::Q(q) if q.is_integer() => Some(q.to_integer()),
            Scalar::Q(_) => None,
            Scalar::Fp(v, _) => Some(BigInt::from(*v)),
        }
    }

    /// Representative in `(-p/2, p/2]` for residues, the value itself for rationals.
    pub fn symmetric_i64(&self) -> Option<i64> {
        match self {
            Scalar::Q(q) if q.is_integer() => q.to_integer().to_i64(),
            Scalar::Q(_) => None,
            Scalar::Fp(v, p) => {
                let v = *v as i64;
                let p = *p as i64;
                Some(if v > p / 2 { v - p } else { v })
            }
        }
    }

    pub fn is_negative(&self) -> bool {
        match self {
            Scalar::Q(q) => q.is_negative(),
            Scalar::Fp(..) => false,
        }
    }
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    r
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Q(q) => write!(f, "{q}"),
            Scalar::Fp(v, _) => write!(f, "{v}"),
        }
    }
}

fn mismatch(a: &Scalar, b: &Scalar) -> ! {
    panic!("field mismatch: {} vs {}", a.field(), b.field())
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a + b),
            (Scalar::Fp(a, p), Scalar::Fp(b, q)) if p == q => Scalar::Fp(((*a as u64 + *b as u64) % *p as u64) as u32, *p),
            _ => mismatch(self, rhs),
        }
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a - b),
            (Scalar::Fp(a, p), Scalar::Fp(b, q)) if p == q => {
                Scalar::Fp(((*a as u64 + *p as u64 - *b as u64) % *p as u64) as u32, *p)
            }
            _ => mismatch(self, rhs),
        }
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a * b),
            (Scalar::Fp(a, p), Scalar::Fp(b, q)) if p == q => Scalar::Fp(((*a as u64 * *b as u64) % *p as u64) as u32, *p),
            _ => mismatch(self, rhs),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Q(a) => Scalar::Q(-a),
            Scalar::Fp(a, p) => Scalar::Fp((*p - *a) % *p, *p),
        }
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, rhs: Scalar) -> Scalar {
        &self + &rhs
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, rhs: Scalar) -> Scalar {
        &self - &rhs
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        &self * &rhs
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_arithmetic() {
        let f = Field::prime(5).unwrap();
        let a = f.from_i64(3);
        let b = f.from_i64(4);
        assert_eq!(&a + &b, f.from_i64(2));
        assert_eq!(&a * &b, f.from_i64(2));
        assert_eq!(&a - &b, f.from_i64(4));
        assert_eq!(a.inv().unwrap(), f.from_i64(2));
        assert_eq!(-&a, f.from_i64(2));
    }

    #[test]
    fn division_by_zero_is_rejected() {
        let q = Field::Rational;
        assert!(matches!(q.one().checked_div(&q.zero()), Err(Error::DivisionByZero)));
        let f = Field::Prime(3);
        assert!(f.from_i64(3).inv().is_none());
    }

    #[test]
    fn non_prime_rejected() {
        assert!(Field::prime(4).is_err());
        assert!(Field::prime(1).is_err());
        assert!(Field::prime(7).is_ok());
    }

    #[test]
    fn rational_reduction_mod_p() {
        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        assert_eq!(Field::Prime(5).from_rational(&half).unwrap(), Field::Prime(5).from_i64(3));
        assert!(Field::Prime(2).from_rational(&half).is_err());
    }

    #[test]
    fn symmetric_representatives() {
        assert_eq!(Field::Prime(3).from_i64(-1).symmetric_i64(), Some(-1));
        assert_eq!(Field::Prime(2).from_i64(1).symmetric_i64(), Some(1));
    }
}
