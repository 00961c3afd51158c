use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::ring::Ring;
use crate::error::{Error, Result};

/// Exact rational number, always in lowest terms with a positive denominator.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Rational(BigRational);

impl Rational {
    pub fn new(num: i64, den: i64) -> Result<Self> {
        if den == 0 {
            return Err(Error::ZeroDenominator);
        }
        Ok(Rational(BigRational::new(num.into(), den.into())))
    }

    pub fn from_big(num: BigInt, den: BigInt) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Rational(BigRational::new(num, den)))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Rational(BigRational::from_integer(n))
    }

    /// p/q for small integers; panics on q = 0. Used for literal constants.
    pub fn frac(p: i64, q: i64) -> Self {
        Self::new(p, q).expect("nonzero literal denominator")
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn inner(&self) -> &BigRational {
        &self.0
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(self.0.recip()))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(&self.0 / &other.0))
    }

    pub fn powi(&self, e: i32) -> Result<Self> {
        if e < 0 && self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(num_traits::pow::Pow::pow(&self.0, e)))
    }

    pub fn to_i64(&self) -> Option<i64> {
        if self.0.is_integer() {
            self.0.numer().to_i64()
        } else {
            None
        }
    }

    /// n! as a rational.
    pub fn factorial(n: u64) -> Self {
        let mut acc = BigInt::one();
        for i in 2..=n {
            acc *= i;
        }
        Rational::from_bigint(acc)
    }

    /// Binomial coefficient with an integer top that may be negative:
    /// a(a-1)...(a-b+1)/b!, and 0 for b < 0.
    pub fn binomial(a: i64, b: i64) -> Self {
        if b < 0 {
            return Rational::zero();
        }
        let mut acc = Rational::one();
        for i in 0..b {
            acc = &acc * &Rational::from(a - i);
        }
        acc.0 /= Rational::factorial(b as u64).0;
        acc
    }

    /// Falling factorial x(x-1)...(x-m+1).
    pub fn falling(&self, m: u64) -> Self {
        let mut acc = Rational::one();
        let mut t = self.clone();
        for _ in 0..m {
            acc = &acc * &t;
            t = &t - &Rational::one();
        }
        acc
    }

    pub fn signum(&self) -> i32 {
        match self.0.cmp(&BigRational::zero()) {
            Ordering::Less => -1,
            Ordering::Equal => 0,
            Ordering::Greater => 1,
        }
    }

    /// Power of x with an integer exponent, e.g. the sign (-1)^n.
    pub fn minus_one_pow(n: i64) -> Self {
        if n.rem_euclid(2) == 0 {
            Rational::one()
        } else {
            -Rational::one()
        }
    }

    pub fn gcd_int(a: &BigInt, b: &BigInt) -> BigInt {
        a.gcd(b)
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational(BigRational::from_integer(n.into()))
    }
}

impl From<BigInt> for Rational {
    fn from(n: BigInt) -> Self {
        Rational::from_bigint(n)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let parse = |t: &str| {
            t.trim()
                .parse::<BigInt>()
                .map_err(|_| Error::Parse(format!("not a rational: {s:?}")))
        };
        match s.split_once('/') {
            Some((p, q)) => Rational::from_big(parse(p)?, parse(q)?),
            None => Ok(Rational::from_bigint(parse(s)?)),
        }
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $op:tt) => {
        impl $tr<&Rational> for &Rational {
            type Output = Rational;
            fn $m(self, o: &Rational) -> Rational {
                Rational(&self.0 $op &o.0)
            }
        }
        impl $tr<Rational> for Rational {
            type Output = Rational;
            fn $m(self, o: Rational) -> Rational {
                Rational(self.0 $op o.0)
            }
        }
    };
}

binop!(Add, add, +);
binop!(Sub, sub, -);
binop!(Mul, mul, *);

impl Div<&Rational> for &Rational {
    type Output = Rational;
    /// Panics on division by zero; use [`Rational::checked_div`] when the
    /// divisor is not known to be nonzero.
    fn div(self, o: &Rational) -> Rational {
        assert!(!o.is_zero(), "rational division by zero");
        Rational(&self.0 / &o.0)
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl Ring for Rational {
    fn zero() -> Self {
        Rational::zero()
    }
    fn one() -> Self {
        Rational::one()
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
    fn plus(&self, o: &Self) -> Self {
        self + o
    }
    fn minus(&self, o: &Self) -> Self {
        self - o
    }
    fn times(&self, o: &Self) -> Self {
        self * o
    }
    fn negated(&self) -> Self {
        -self
    }
    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }
}

/// Shorthand for the literal p/d.
pub fn q(p: i64, d: i64) -> Rational {
    Rational::frac(p, d)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form() {
        let r = Rational::new(6, -4).unwrap();
        assert_eq!(r.to_string(), "-3/2");
        assert_eq!(Rational::new(0, 5).unwrap().to_string(), "0");
        assert!(Rational::new(1, 0).is_err());
    }

    #[test]
    fn parse_round_trip() {
        for s in ["1/80", "-17/10644480", "3", "0"] {
            let r: Rational = s.parse().unwrap();
            assert_eq!(r.to_string(), s);
        }
        assert!("1/0".parse::<Rational>().is_err());
        assert!("x".parse::<Rational>().is_err());
    }

    #[test]
    fn binomial_negative_top() {
        assert_eq!(Rational::binomial(5, 2), Rational::from(10));
        assert_eq!(Rational::binomial(-1, 3), Rational::from(-1));
        assert_eq!(Rational::binomial(2, 3), Rational::zero());
        assert_eq!(Rational::binomial(4, -1), Rational::zero());
    }

    #[test]
    fn falling_factorial() {
        assert_eq!(q(5, 2).falling(2), q(15, 4));
        assert_eq!(Rational::from(4).falling(0), Rational::one());
    }
}
