use std::collections::BTreeMap;
use std::fmt;

use serde_json::{Map, Value};

use super::rational::Rational;
use super::ring::Ring;
use super::series::HalfSeries;
use crate::error::Result;

/// Differential polynomial Σ_m P_m(u) · d^m τ / dx^m, with each P_m a finite
/// Laurent polynomial in u = x^{1/2}.
#[derive(Clone, PartialEq, Debug)]
pub struct TauExpr<C> {
    terms: BTreeMap<usize, HalfSeries<C>>,
}

impl<C: Ring> Default for TauExpr<C> {
    fn default() -> Self {
        TauExpr { terms: BTreeMap::new() }
    }
}

impl<C: Ring> TauExpr<C> {
    pub fn zero() -> Self {
        Self::default()
    }

    /// τ itself.
    pub fn tau() -> Self {
        Self::term(0, HalfSeries::one())
    }

    /// The single term P · τ^{(m)}.
    pub fn term(m: usize, p: HalfSeries<C>) -> Self {
        let mut e = Self::zero();
        e.add_term(m, p);
        e
    }

    fn add_term(&mut self, m: usize, p: HalfSeries<C>) {
        debug_assert!(p.is_exact(), "TauExpr coefficients must be finite");
        if p.is_known_zero() {
            return;
        }
        let merged = match self.terms.remove(&m) {
            Some(old) => old.add(&p),
            None => p,
        };
        if !merged.is_known_zero() {
            self.terms.insert(m, merged);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &BTreeMap<usize, HalfSeries<C>> {
        &self.terms
    }

    pub fn coeff(&self, m: usize) -> HalfSeries<C> {
        self.terms.get(&m).cloned().unwrap_or_else(HalfSeries::zero)
    }

    /// Highest derivative order present.
    pub fn max_order(&self) -> Option<usize> {
        self.terms.keys().next_back().copied()
    }

    /// Lowest u-exponent over all coefficients.
    pub fn min_u_exp(&self) -> Option<i64> {
        self.terms.values().map(|p| p.min_exp()).min()
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (m, p) in &o.terms {
            out.add_term(*m, p.clone());
        }
        out
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        TauExpr { terms: self.terms.iter().map(|(m, p)| (*m, p.neg())).collect() }
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut out = Self::zero();
        for (m, p) in &self.terms {
            out.add_term(*m, p.scale(c));
        }
        out
    }

    pub fn scale_q(&self, r: &Rational) -> Self {
        self.scale(&C::from_rational(r))
    }

    /// Multiplication by u^p.
    pub fn mul_u(&self, p: i64) -> Self {
        TauExpr { terms: self.terms.iter().map(|(m, c)| (*m, c.mul_u(p))).collect() }
    }

    /// Multiplication by a finite Laurent polynomial in u.
    pub fn mul_laurent(&self, l: &HalfSeries<C>) -> Self {
        let mut out = Self::zero();
        for (m, p) in &self.terms {
            out.add_term(*m, p.mul(l));
        }
        out
    }

    /// d/dx by the product rule: P τ^{(m)} ↦ P' τ^{(m)} + P τ^{(m+1)}.
    pub fn ddx(&self) -> Self {
        let mut out = Self::zero();
        for (m, p) in &self.terms {
            out.add_term(*m, p.ddx());
            out.add_term(*m + 1, p.clone());
        }
        out
    }

    /// Applies the expression to a concrete series for τ.
    pub fn eval(&self, tau: &HalfSeries<C>) -> HalfSeries<C> {
        let Some(top) = self.max_order() else {
            return HalfSeries::zero();
        };
        let mut derivs = Vec::with_capacity(top + 1);
        derivs.push(tau.clone());
        for m in 1..=top {
            let d = derivs[m - 1].ddx();
            derivs.push(d);
        }
        let mut acc = HalfSeries::zero();
        for (m, p) in &self.terms {
            acc = acc.add(&p.mul(&derivs[*m]));
        }
        acc
    }

    pub fn map_coeffs<D: Ring>(&self, f: impl Fn(&C) -> D) -> TauExpr<D> {
        let mut out = TauExpr::zero();
        for (m, p) in &self.terms {
            out.add_term(*m, p.map_coeffs(&f));
        }
        out
    }

    /// Fallible variant of [`TauExpr::map_coeffs`].
    pub fn try_map_coeffs<D: Ring>(&self, f: impl Fn(&C) -> Result<D>) -> Result<TauExpr<D>> {
        let mut out = TauExpr::zero();
        for (m, p) in &self.terms {
            let mut terms = Vec::new();
            for (e, c) in p.terms() {
                terms.push((e, f(c)?));
            }
            out.add_term(*m, HalfSeries::from_terms(terms, super::series::UNBOUNDED));
        }
        Ok(out)
    }

    /// JSON as {m: {u-exponent: coefficient}}.
    pub fn to_json(&self, coeff: impl Fn(&C) -> Value) -> Value {
        let mut outer = Map::new();
        for (m, p) in &self.terms {
            let mut inner = Map::new();
            for (e, c) in p.terms() {
                inner.insert(e.to_string(), coeff(c));
            }
            outer.insert(m.to_string(), Value::Object(inner));
        }
        Value::Object(outer)
    }
}

impl<C: Ring + fmt::Display> fmt::Display for TauExpr<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, p) in &self.terms {
            let mut parts = Vec::new();
            for (e, c) in p.terms() {
                let base = match e {
                    0 => String::new(),
                    1 => "*u".to_string(),
                    _ => format!("*u^{e}"),
                };
                parts.push(format!("({c}){base}"));
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let d = match m {
                0 => "tau".to_string(),
                _ => format!("tau^({m})"),
            };
            write!(f, "[{}]*{d}", parts.join(" + "))?;
        }
        Ok(())
    }
}
