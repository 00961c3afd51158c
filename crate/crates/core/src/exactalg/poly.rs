use std::fmt;

use serde::{Deserialize, Serialize};

use super::rational::Rational;
use super::ring::Ring;
use crate::error::{Error, Result};

/// Polynomial in k with rational coefficients, dense, lowest power first.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PolyK {
    coeffs: Vec<Rational>,
}

impl PolyK {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        PolyK { coeffs }
    }

    pub fn from_ints(c: &[i64]) -> Self {
        Self::new(c.iter().map(|&v| Rational::from(v)).collect())
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// The polynomial k.
    pub fn k() -> Self {
        Self::from_ints(&[0, 1])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    /// Degree; the zero polynomial has degree `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn eval(&self, k: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * k) + c;
        }
        acc
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * r).collect())
    }

    /// Quotient and remainder by a nonzero divisor.
    pub fn div_rem(&self, d: &PolyK) -> Result<(PolyK, PolyK)> {
        let dd = d.degree().ok_or(Error::DivisionByZero)?;
        let lead = d.leading();
        let mut rem = self.coeffs.clone();
        let n = self.coeffs.len();
        if n <= dd {
            return Ok((PolyK::default(), self.clone()));
        }
        let mut quo = vec![Rational::zero(); n - dd];
        for i in (0..n - dd).rev() {
            let c = &rem[i + dd] / &lead;
            if !c.is_zero() {
                for (j, dc) in d.coeffs.iter().enumerate() {
                    rem[i + j] = &rem[i + j] - &(&c * dc);
                }
            }
            quo[i] = c;
        }
        rem.truncate(dd);
        Ok((PolyK::new(quo), PolyK::new(rem)))
    }

    /// Monic greatest common divisor (zero if both are zero).
    pub fn gcd(&self, other: &PolyK) -> PolyK {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn monic(&self) -> PolyK {
        if self.is_zero() {
            return self.clone();
        }
        let l = self.leading();
        self.scale(&l.recip().expect("nonzero leading coefficient"))
    }

    /// Product of linear factors (a k + b).
    pub fn from_linear_factors(factors: &[(i64, i64)]) -> PolyK {
        factors
            .iter()
            .fold(PolyK::one(), |acc, &(a, b)| acc.times(&PolyK::from_ints(&[b, a])))
    }
}

impl Ring for PolyK {
    fn zero() -> Self {
        PolyK::default()
    }
    fn one() -> Self {
        PolyK::from_ints(&[1])
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn plus(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        PolyK::new((0..n).map(|i| &self.coeff(i) + &o.coeff(i)).collect())
    }
    fn minus(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        PolyK::new((0..n).map(|i| &self.coeff(i) - &o.coeff(i)).collect())
    }
    fn times(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return PolyK::default();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        PolyK::new(out)
    }
    fn negated(&self) -> Self {
        PolyK::new(self.coeffs.iter().map(|c| -c).collect())
    }
    fn from_rational(r: &Rational) -> Self {
        PolyK::constant(r.clone())
    }
    fn scaled(&self, r: &Rational) -> Self {
        self.scale(r)
    }
}

impl fmt::Display for PolyK {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.signum() < 0;
            let a = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            let unit = a == Rational::one();
            match i {
                0 => write!(f, "{a}")?,
                1 if unit => write!(f, "k")?,
                1 => write!(f, "{a}*k")?,
                _ if unit => write!(f, "k^{i}")?,
                _ => write!(f, "{a}*k^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for PolyK {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PolyK({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rational::q;

    #[test]
    fn division_and_gcd() {
        let a = PolyK::from_ints(&[-1, 0, 1]);
        let b = PolyK::from_ints(&[-1, 1]);
        let (quo, rem) = a.div_rem(&b).unwrap();
        assert_eq!(quo, PolyK::from_ints(&[1, 1]));
        assert!(rem.is_zero());
        assert_eq!(a.gcd(&PolyK::from_ints(&[2, 2])), PolyK::from_ints(&[1, 1]));
    }

    #[test]
    fn display() {
        assert_eq!(PolyK::from_ints(&[-99, -32, 40, 64, 16]).to_string(), "16*k^4 + 64*k^3 + 40*k^2 - 32*k - 99");
        assert_eq!(PolyK::new(vec![q(1, 2), -Rational::one()]).to_string(), "-k + 1/2");
    }

    #[test]
    fn eval_horner() {
        let p = PolyK::from_linear_factors(&[(2, -1), (2, 3)]);
        assert_eq!(p.eval(&Rational::from(1)), Rational::from(5));
    }
}
