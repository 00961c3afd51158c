use std::fmt;

use super::rational::Rational;

/// Commutative ring with a unit and a canonical embedding of the rationals.
///
/// Every concrete coefficient type in the crate implements this, as do the
/// series types built on top of them, so determinants and recursions are
/// written once.
pub trait Ring: Clone + PartialEq + fmt::Debug + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn plus(&self, other: &Self) -> Self;
    fn minus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn negated(&self) -> Self;
    fn from_rational(r: &Rational) -> Self;

    fn from_i64(n: i64) -> Self {
        Self::from_rational(&Rational::from(n))
    }

    fn scaled(&self, r: &Rational) -> Self {
        if r.is_zero() {
            return Self::zero();
        }
        self.times(&Self::from_rational(r))
    }

    fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = acc.times(self);
        }
        acc
    }
}

/// Sum of an iterator of ring values.
pub fn sum<R: Ring, I: IntoIterator<Item = R>>(it: I) -> R {
    it.into_iter().fold(R::zero(), |a, b| a.plus(&b))
}
