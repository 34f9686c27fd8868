//! Arbitrary-precision rational numbers.
//!
//! Thin wrapper around `num_rational::BigRational` that pins the invariants
//! used throughout the crate: reduced form, positive denominator, `0/1` zero.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct Rational(num_rational::BigRational);

impl Rational {
    pub fn new(numer: BigInt, denom: BigInt) -> Result<Self> {
        if denom.is_zero() {
            return Err(Error::Domain("rational with zero denominator".into()));
        }
        Ok(Rational(num_rational::BigRational::new(numer, denom)))
    }

    pub fn from_int(n: i64) -> Self {
        Rational(num_rational::BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Rational(num_rational::BigRational::from_integer(n))
    }

    pub fn ratio(numer: i64, denom: i64) -> Self {
        Rational::new(BigInt::from(numer), BigInt::from(denom)).expect("nonzero denominator")
    }

    pub fn zero() -> Self {
        Rational::from_int(0)
    }

    pub fn one() -> Self {
        Rational::from_int(1)
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    /// The integer value, when the denominator is 1.
    pub fn to_integer(&self) -> Option<BigInt> {
        if self.is_integer() {
            Some(self.0.to_integer())
        } else {
            None
        }
    }

    pub fn to_i64(&self) -> Option<i64> {
        self.to_integer().and_then(|n| n.to_i64())
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::Domain("division by zero".into()));
        }
        Ok(Rational(self.0.recip()))
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Rational::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    pub fn cmp_value(&self, other: &Self) -> Ordering {
        self.0.cmp(&other.0)
    }

    /// gcd as positive rational: gcd(p1/q1, p2/q2) = gcd(p1,p2)/lcm(q1,q2).
    pub fn gcd(&self, other: &Self) -> Self {
        use num_integer::Integer;
        if self.is_zero() {
            return other.abs();
        }
        if other.is_zero() {
            return self.abs();
        }
        let n = self.numer().gcd(other.numer());
        let d = self.denom().lcm(other.denom());
        Rational::new(n, d).expect("lcm of nonzero denominators is nonzero")
    }

    /// Parses "p/q" or "p"; whitespace around tokens tolerated.
    pub fn parse(text: &str) -> Result<Self> {
        let t = text.trim();
        let (ns, ds) = match t.split_once('/') {
            Some((a, b)) => (a.trim(), b.trim()),
            None => (t, "1"),
        };
        let numer = BigInt::from_str(ns).map_err(|_| Error::Parse {
            position: 0,
            message: format!("invalid integer `{ns}` in rational `{text}`"),
        })?;
        let denom = BigInt::from_str(ds).map_err(|_| Error::Parse {
            position: 0,
            message: format!("invalid integer `{ds}` in rational `{text}`"),
        })?;
        if denom.is_zero() {
            return Err(Error::Parse {
                position: 0,
                message: format!("zero denominator in rational `{text}`"),
            });
        }
        Ok(Rational(num_rational::BigRational::new(numer, denom)))
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
        impl $trait for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational(self.0.$method(rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Div for &Rational {
    type Output = Rational;
    fn div(self, rhs: &Rational) -> Rational {
        assert!(!rhs.is_zero(), "rational division by zero");
        Rational(&self.0 / &rhs.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_int(n)
    }
}

impl From<BigInt> for Rational {
    fn from(n: BigInt) -> Self {
        Rational::from_bigint(n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduced_and_positive_denominator() {
        let r = Rational::new(BigInt::from(6), BigInt::from(-4)).unwrap();
        assert_eq!(r.numer(), &BigInt::from(-3));
        assert_eq!(r.denom(), &BigInt::from(2));
        assert_eq!(r.to_string(), "-3/2");
    }

    #[test]
    fn zero_is_zero_over_one() {
        let r = Rational::new(BigInt::from(0), BigInt::from(7)).unwrap();
        assert!(r.is_zero());
        assert_eq!(r.denom(), &BigInt::from(1));
    }

    #[test]
    fn parse_forms() {
        assert_eq!(Rational::parse("3/6").unwrap(), Rational::ratio(1, 2));
        assert_eq!(Rational::parse("-5").unwrap(), Rational::from_int(-5));
        assert_eq!(Rational::parse(" 7 / -2 ").unwrap(), Rational::ratio(-7, 2));
        assert!(Rational::parse("1/0").is_err());
        assert!(Rational::parse("a/2").is_err());
    }

    #[test]
    fn gcd_of_rationals() {
        let g = Rational::ratio(1, 2).gcd(&Rational::ratio(3, 4));
        assert_eq!(g, Rational::ratio(1, 4));
        assert_eq!(Rational::zero().gcd(&Rational::ratio(-2, 3)), Rational::ratio(2, 3));
    }

    #[test]
    fn pow_and_recip() {
        assert_eq!(Rational::ratio(2, 3).pow(3), Rational::ratio(8, 27));
        assert_eq!(Rational::ratio(2, 3).recip().unwrap(), Rational::ratio(3, 2));
        assert!(Rational::zero().recip().is_err());
    }
}
