use std::fmt;

use serde::{Deserialize, Serialize};

use super::poly::PolyK;
use super::rational::Rational;
use super::ring::Ring;
use crate::error::{Error, Result};

/// Rational function of k: reduced, with a monic denominator.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RatFuncK {
    num: PolyK,
    den: PolyK,
}

impl RatFuncK {
    pub fn new(num: PolyK, den: PolyK) -> Result<Self> {
        ratfunc_reduce(num, den)
    }

    pub fn from_poly(p: PolyK) -> Self {
        RatFuncK { num: p, den: PolyK::one() }
    }

    pub fn num(&self) -> &PolyK {
        &self.num
    }

    pub fn den(&self) -> &PolyK {
        &self.den
    }

    pub fn eval(&self, k: &Rational) -> Result<Rational> {
        let d = self.den.eval(k);
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(&self.num.eval(k) / &d)
    }

    pub fn recip(&self) -> Result<Self> {
        if self.num.is_zero() {
            return Err(Error::DivisionByZero);
        }
        ratfunc_reduce(self.den.clone(), self.num.clone())
    }

    pub fn div(&self, o: &Self) -> Result<Self> {
        Ok(self.times(&o.recip()?))
    }
}

/// Cancels the gcd and makes the denominator monic.
pub fn ratfunc_reduce(num: PolyK, den: PolyK) -> Result<RatFuncK> {
    if den.is_zero() {
        return Err(Error::ZeroDenominator);
    }
    if num.is_zero() {
        return Ok(RatFuncK { num, den: PolyK::one() });
    }
    let g = num.gcd(&den);
    let (n, _) = num.div_rem(&g)?;
    let (d, _) = den.div_rem(&g)?;
    let l = d.leading().recip()?;
    Ok(RatFuncK { num: n.scale(&l), den: d.scale(&l) })
}

impl Ring for RatFuncK {
    fn zero() -> Self {
        RatFuncK { num: PolyK::zero(), den: PolyK::one() }
    }
    fn one() -> Self {
        RatFuncK { num: PolyK::one(), den: PolyK::one() }
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn plus(&self, o: &Self) -> Self {
        if self.den == o.den {
            return ratfunc_reduce(self.num.plus(&o.num), self.den.clone()).expect("nonzero den");
        }
        let n = self.num.times(&o.den).plus(&o.num.times(&self.den));
        ratfunc_reduce(n, self.den.times(&o.den)).expect("nonzero den")
    }
    fn minus(&self, o: &Self) -> Self {
        self.plus(&o.negated())
    }
    fn times(&self, o: &Self) -> Self {
        ratfunc_reduce(self.num.times(&o.num), self.den.times(&o.den)).expect("nonzero den")
    }
    fn negated(&self) -> Self {
        RatFuncK { num: self.num.negated(), den: self.den.clone() }
    }
    fn from_rational(r: &Rational) -> Self {
        RatFuncK::from_poly(PolyK::constant(r.clone()))
    }
    fn scaled(&self, r: &Rational) -> Self {
        if r.is_zero() {
            return Self::zero();
        }
        RatFuncK { num: self.num.scale(r), den: self.den.clone() }
    }
}

impl fmt::Display for RatFuncK {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == PolyK::one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatFuncK {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFuncK({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rational::q;

    #[test]
    fn reduce_common_factor() {
        let r = RatFuncK::new(PolyK::from_ints(&[-1, 0, 1]), PolyK::from_ints(&[-1, 1])).unwrap();
        assert_eq!(r.num(), &PolyK::from_ints(&[1, 1]));
        assert_eq!(r.den(), &PolyK::one());
        let r = RatFuncK::new(PolyK::from_ints(&[0, 2]), PolyK::from_ints(&[2])).unwrap();
        assert_eq!(r.num(), &PolyK::k());
        assert!(RatFuncK::new(PolyK::one(), PolyK::zero()).is_err());
    }

    #[test]
    fn first_moment_ratio_at_one() {
        let den = PolyK::from_linear_factors(&[(2, -1), (2, 3)]).scale(&Rational::from(16));
        let r = RatFuncK::new(PolyK::one(), den).unwrap();
        assert_eq!(r.num(), &PolyK::constant(q(1, 64)));
        assert_eq!(r.den(), &PolyK::new(vec![q(-3, 4), Rational::one(), Rational::one()]));
        assert_eq!(r.eval(&Rational::one()).unwrap(), q(1, 80));
    }
}
