use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use super::rational::Rational;
use super::ring::Ring;
use crate::error::{Error, Result};

/// Truncation value meaning "no unknown tail".
pub const UNBOUNDED: i64 = i64::MAX / 4;

fn tadd(a: i64, b: i64) -> i64 {
    if a >= UNBOUNDED || b >= UNBOUNDED {
        UNBOUNDED
    } else {
        (a + b).min(UNBOUNDED)
    }
}

/// Truncated Laurent series in u = x^{1/2}.
///
/// `coeffs[i]` is the coefficient of `u^(min_exp + i)`; every exponent at or
/// above `trunc` is unknown. After normalization the first and last stored
/// coefficients are nonzero, and an all-zero series has `min_exp == trunc`, so
/// `min_exp` is always a valid lower bound for the valuation.
#[derive(Clone, PartialEq, Debug)]
pub struct HalfSeries<C> {
    min_exp: i64,
    coeffs: Vec<C>,
    trunc: i64,
}

impl<C: Ring> HalfSeries<C> {
    /// Series with the given coefficients, known below `trunc`. Coefficients
    /// at or above `trunc` are discarded.
    pub fn new(min_exp: i64, mut coeffs: Vec<C>, trunc: i64) -> Self {
        let trunc = trunc.min(UNBOUNDED);
        let keep = (trunc - min_exp).clamp(0, coeffs.len() as i64) as usize;
        coeffs.truncate(keep);
        let mut s = HalfSeries { min_exp, coeffs, trunc };
        s.normalize();
        s
    }

    /// Finite Laurent polynomial with no unknown tail.
    pub fn exact(min_exp: i64, coeffs: Vec<C>) -> Self {
        Self::new(min_exp, coeffs, UNBOUNDED)
    }

    pub fn monomial(p: i64, c: C) -> Self {
        Self::exact(p, vec![c])
    }

    /// The zero series with every coefficient below `trunc` known.
    pub fn zero_to(trunc: i64) -> Self {
        Self::new(0, vec![], trunc)
    }

    /// Builds a series from (exponent, coefficient) pairs.
    pub fn from_terms<I: IntoIterator<Item = (i64, C)>>(terms: I, trunc: i64) -> Self {
        let terms: Vec<(i64, C)> = terms.into_iter().filter(|(e, _)| *e < trunc).collect();
        if terms.is_empty() {
            return Self::zero_to(trunc);
        }
        let lo = terms.iter().map(|t| t.0).min().unwrap();
        let hi = terms.iter().map(|t| t.0).max().unwrap();
        let mut coeffs = vec![C::zero(); (hi - lo + 1) as usize];
        for (e, c) in terms {
            let slot = &mut coeffs[(e - lo) as usize];
            *slot = slot.plus(&c);
        }
        Self::new(lo, coeffs, trunc)
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.min_exp += lead as i64;
        }
        if self.coeffs.is_empty() {
            self.min_exp = self.trunc;
        }
    }

    /// Lower bound for the valuation (first possibly nonzero exponent).
    pub fn min_exp(&self) -> i64 {
        self.min_exp
    }

    pub fn trunc(&self) -> i64 {
        self.trunc
    }

    pub fn is_exact(&self) -> bool {
        self.trunc >= UNBOUNDED
    }

    pub fn raw_coeffs(&self) -> &[C] {
        &self.coeffs
    }

    /// True when every known coefficient is zero.
    pub fn is_known_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Highest exponent with a stored nonzero coefficient.
    pub fn max_exp(&self) -> Option<i64> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.min_exp + self.coeffs.len() as i64 - 1)
        }
    }

    /// Coefficient of u^e; an error if e is in the unknown tail.
    pub fn coeff(&self, e: i64) -> Result<C> {
        if e >= self.trunc {
            return Err(Error::TruncationExhausted { needed: e, available: self.trunc });
        }
        if e < self.min_exp || e >= self.min_exp + self.coeffs.len() as i64 {
            return Ok(C::zero());
        }
        Ok(self.coeffs[(e - self.min_exp) as usize].clone())
    }

    /// Nonzero terms as (exponent, coefficient).
    pub fn terms(&self) -> impl Iterator<Item = (i64, &C)> {
        let m = self.min_exp;
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (m + i as i64, c))
    }

    /// Forgets everything at or above `t`.
    pub fn truncated(&self, t: i64) -> Self {
        if t >= self.trunc {
            return self.clone();
        }
        Self::new(self.min_exp, self.coeffs.clone(), t)
    }

    /// Errors unless the series is known at least below `needed`.
    pub fn require(&self, needed: i64) -> Result<()> {
        if self.trunc < needed {
            return Err(Error::TruncationExhausted { needed, available: self.trunc });
        }
        Ok(())
    }

    pub fn add(&self, o: &Self) -> Self {
        self.combine(o, |a, b| a.plus(b))
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.combine(o, |a, b| a.minus(b))
    }

    fn combine(&self, o: &Self, f: impl Fn(&C, &C) -> C) -> Self {
        let trunc = self.trunc.min(o.trunc);
        let lo = match (self.coeffs.is_empty(), o.coeffs.is_empty()) {
            (true, true) => return Self::zero_to(trunc),
            (false, true) => self.min_exp,
            (true, false) => o.min_exp,
            (false, false) => self.min_exp.min(o.min_exp),
        };
        if lo >= trunc {
            return Self::zero_to(trunc);
        }
        let hi_a = self.max_exp().unwrap_or(lo);
        let hi_b = o.max_exp().unwrap_or(lo);
        let hi = hi_a.max(hi_b).min(trunc - 1);
        let z = C::zero();
        let get = |s: &Self, e: i64| -> C {
            if e < s.min_exp || e >= s.min_exp + s.coeffs.len() as i64 {
                z.clone()
            } else {
                s.coeffs[(e - s.min_exp) as usize].clone()
            }
        };
        let coeffs = (lo..=hi).map(|e| f(&get(self, e), &get(o, e))).collect();
        Self::new(lo, coeffs, trunc)
    }

    pub fn neg(&self) -> Self {
        HalfSeries {
            min_exp: self.min_exp,
            coeffs: self.coeffs.iter().map(|c| c.negated()).collect(),
            trunc: self.trunc,
        }
    }

    /// Product; the result is known below
    /// min(a.trunc + b.min_exp, b.trunc + a.min_exp).
    pub fn mul(&self, o: &Self) -> Self {
        if (self.coeffs.is_empty() && self.is_exact()) || (o.coeffs.is_empty() && o.is_exact()) {
            return Self::exact(0, vec![]);
        }
        let trunc = tadd(self.trunc, o.min_exp).min(tadd(o.trunc, self.min_exp));
        if self.coeffs.is_empty() || o.coeffs.is_empty() {
            return Self::zero_to(trunc);
        }
        let lo = self.min_exp + o.min_exp;
        let n = (self.coeffs.len() + o.coeffs.len() - 1).min((trunc - lo).max(0) as usize);
        let mut out = vec![C::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() || i >= n {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                if i + j >= n {
                    break;
                }
                if !b.is_zero() {
                    out[i + j] = out[i + j].plus(&a.times(b));
                }
            }
        }
        Self::new(lo, out, trunc)
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() && self.is_exact() {
            return Self::exact(0, vec![]);
        }
        Self::new(self.min_exp, self.coeffs.iter().map(|a| a.times(c)).collect(), self.trunc)
    }

    pub fn scale_q(&self, r: &Rational) -> Self {
        self.scale(&C::from_rational(r))
    }

    /// Multiplication by the monomial u^p.
    pub fn mul_u(&self, p: i64) -> Self {
        HalfSeries {
            min_exp: if self.coeffs.is_empty() { tadd(self.min_exp, p) } else { self.min_exp + p },
            coeffs: self.coeffs.clone(),
            trunc: tadd(self.trunc, p),
        }
    }

    /// d/du: coefficient of u^{p-1} is p times that of u^p.
    pub fn ddu(&self) -> Self {
        let terms: Vec<(i64, C)> = self
            .terms()
            .map(|(p, c)| (p - 1, c.scaled(&Rational::from(p))))
            .collect();
        let trunc = if self.is_exact() { UNBOUNDED } else { self.trunc - 1 };
        Self::from_terms(terms, trunc)
    }

    /// d/dx = (1/(2u)) d/du: coefficient of u^{p-2} is (p/2) times that of u^p.
    pub fn ddx(&self) -> Self {
        let half = Rational::frac(1, 2);
        let terms: Vec<(i64, C)> = self
            .terms()
            .map(|(p, c)| (p - 2, c.scaled(&(&Rational::from(p) * &half))))
            .collect();
        let trunc = if self.is_exact() { UNBOUNDED } else { self.trunc - 2 };
        Self::from_terms(terms, trunc)
    }

    /// Plain derivative in the series variable, for ordinary power series.
    pub fn deriv_var(&self) -> Self {
        self.ddu()
    }

    pub fn map_coeffs<D: Ring>(&self, f: impl Fn(&C) -> D) -> HalfSeries<D> {
        HalfSeries::new(self.min_exp, self.coeffs.iter().map(f).collect(), self.trunc)
    }

    /// Agreement of all coefficients below the common truncation.
    pub fn agrees_with(&self, o: &Self) -> bool {
        self.sub(o).is_known_zero()
    }

    /// Agreement below `t`, failing if either side is not known that far.
    pub fn agrees_below(&self, o: &Self, t: i64) -> Result<bool> {
        self.require(t)?;
        o.require(t)?;
        Ok(self.truncated(t).sub(&o.truncated(t)).is_known_zero())
    }
}

impl<C: Ring> Ring for HalfSeries<C> {
    fn zero() -> Self {
        Self::exact(0, vec![])
    }
    fn one() -> Self {
        Self::monomial(0, C::one())
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn plus(&self, o: &Self) -> Self {
        self.add(o)
    }
    fn minus(&self, o: &Self) -> Self {
        self.sub(o)
    }
    fn times(&self, o: &Self) -> Self {
        self.mul(o)
    }
    fn negated(&self) -> Self {
        self.neg()
    }
    fn from_rational(r: &Rational) -> Self {
        Self::monomial(0, C::from_rational(r))
    }
    fn scaled(&self, r: &Rational) -> Self {
        self.scale_q(r)
    }
}

impl<C: Ring + Serialize> Serialize for HalfSeries<C> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("HalfSeries", 3)?;
        st.serialize_field("min_exp", &self.min_exp)?;
        st.serialize_field("trunc", &if self.is_exact() { None } else { Some(self.trunc) })?;
        st.serialize_field("coeffs", &self.coeffs)?;
        st.end()
    }
}

/// Series over the rationals.
pub type QSeries = HalfSeries<Rational>;

/// Product of two series (free-function form).
pub fn series_mul<C: Ring>(a: &HalfSeries<C>, b: &HalfSeries<C>) -> HalfSeries<C> {
    a.mul(b)
}

/// d/dx of a series in u = x^{1/2}.
pub fn series_ddx<C: Ring>(a: &HalfSeries<C>) -> HalfSeries<C> {
    a.ddx()
}
