//! Taylor data of τ_k at x = 0: the a_j of x^{-k²/2}τ_k, the D_{l,q}(n)
//! table, the η coefficients c_n, and residual checks.

use std::collections::HashMap;

use serde::Serialize;

use crate::besselrec::tau_hook_exprs;
use crate::error::{Error, Result};
use crate::exactalg::{QSeries, Rational};
use crate::oracle::tau_series;
use crate::young::YoungDiagram;

/// a_0..a_N and c_0..c_M for one k.
#[derive(Clone, Debug, Serialize)]
pub struct TaylorData {
    pub k: usize,
    pub a: Vec<Rational>,
    pub c: Vec<Rational>,
}

impl TaylorData {
    pub fn new(k: usize, terms: usize) -> Result<Self> {
        let a = tau_taylor(k, terms);
        let c = eta_coeffs(k, terms, &a)?;
        Ok(TaylorData { k, a, c })
    }
}

/// Memoized D_{l,q}(n) for one k.
#[derive(Clone, Debug, Default)]
pub struct DTable {
    k: i64,
    values: HashMap<(i64, i64, i64), Rational>,
}

impl DTable {
    pub fn new(k: usize) -> Self {
        DTable { k: k as i64, values: HashMap::new() }
    }

    pub fn get(&mut self, l: i64, q: i64, n: i64) -> Rational {
        if l < 1 || q < 0 || q > l / 2 {
            return Rational::zero();
        }
        if let Some(v) = self.values.get(&(l, q, n)) {
            return v.clone();
        }
        let k = self.k;
        let v = match (l, q) {
            (1, 0) => Rational::from(n),
            (2, 0) => Rational::frac(n * (2 * k - 1 + n), 2),
            (2, 1) => Rational::frac(-k, 2),
            _ => {
                let a = &Rational::frac(n + (l - 1) * (2 * k - l + 1), l) * &self.get(l - 1, q, n);
                let b = &Rational::frac(l - k - 2, l) * &self.get(l - 2, q - 1, n - 1);
                &a + &b
            }
        };
        self.values.insert((l, q, n), v.clone());
        v
    }
}

/// D_{l,q}(n) for the given k.
pub fn d_value(k: usize, l: i64, q: i64, n: i64) -> Rational {
    DTable::new(k).get(l, q, n)
}

/// a_0, …, a_{count−1} of x^{−k²/2}τ_k normalised so that a_0 = 1.
pub fn tau_taylor(k: usize, count: usize) -> Vec<Rational> {
    let mut t = DTable::new(k);
    let kk = k as i64 + 1;
    let mut a = vec![Rational::one()];
    for i in 1..count as i64 {
        let mut rhs = Rational::zero();
        for q in 1..=i.min(kk / 2) {
            rhs = &rhs - &(&a[(i - q) as usize] * &t.get(kk, q, i));
        }
        let d = t.get(kk, 0, i);
        a.push(rhs.checked_div(&d).expect("D_{k+1,0}(i) vanished"));
    }
    a
}

/// Power series exp(h) to `n` terms, for h with zero constant term.
pub fn exp_series(h: &[Rational], n: usize) -> Vec<Rational> {
    let mut g = vec![Rational::zero(); n];
    if n == 0 {
        return g;
    }
    g[0] = Rational::one();
    for m in 1..n {
        let mut acc = Rational::zero();
        for j in 1..=m {
            if let Some(hj) = h.get(j) {
                if !hj.is_zero() {
                    acc = &acc + &(&(hj * &Rational::from(j as i64)) * &g[m - j]);
                }
            }
        }
        g[m] = &acc * &Rational::frac(1, m as i64);
    }
    g
}

fn pow_q(b: i64, e: i32) -> Rational {
    Rational::from(b).powi(e).expect("nonzero base")
}

fn poly_mul(a: &[Rational], b: &[Rational], n: usize) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); n];
    for (i, x) in a.iter().enumerate().take(n) {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(n - i) {
            out[i + j] = &out[i + j] + &(x * y);
        }
    }
    out
}

/// c_0, …, c_{count−1}. c_{2k+1} is fixed from a_{2k+1}.
pub fn eta_coeffs(k: usize, count: usize, a: &[Rational]) -> Result<Vec<Rational>> {
    let ki = k as i64;
    let c_odd = 2 * k + 1;
    if count > c_odd && a.len() <= c_odd {
        return Err(Error::InsufficientTerms { have: a.len(), need: c_odd + 1 });
    }
    let mut c: Vec<Rational> = Vec::with_capacity(count);
    let k2 = Rational::from(ki * ki);
    let lead = Rational::frac(1, 16 * (4 * ki * ki - 1));
    for qn in 0..count {
        let qi = qn as i64;
        let v = match qn {
            0 => -k2.clone(),
            1 => Rational::zero(),
            2 => Rational::frac(1, 64 * (4 * ki * ki - 1)),
            _ if qn == c_odd => c_from_a(k, &c, &a[c_odd]),
            _ => {
                let cc = |i: i64| c[i as usize].clone();
                let e = |m: i64| {
                    let mut s = Rational::zero();
                    for l in 0..=m {
                        s = &s + &(&Rational::from((l + 1) * (m - l + 1)) * &(&cc(l + 1) * &cc(m - l + 1)));
                    }
                    s
                };
                let mut rhs = Rational::zero();
                for l in 1..=qi - 3 {
                    let w = Rational::from((l + 1) * (l + 2) * (qi - l) * (qi - l - 1));
                    rhs = &rhs - &(&w * &(&cc(l + 2) * &cc(qi - l)));
                }
                for l in 2..=qi - 1 {
                    rhs = &rhs + &(&Rational::from(4 * (l - 1)) * &(&cc(l) * &e(qi - l)));
                }
                for l in 2..=qi - 2 {
                    let w = &k2 * &Rational::from(4 * (l + 1) * (qi - l + 1));
                    rhs = &rhs + &(&w * &(&cc(l + 1) * &cc(qi - l + 1)));
                }
                let lhs = &lead * &Rational::from((qi - 1 - 2 * ki) * (qi - 1 + 2 * ki));
                rhs.checked_div(&lhs)?
            }
        };
        c.push(v);
    }
    Ok(c)
}

/// Solves a_{2k+1} + 4^{2k+1}/(2k+1) c_{2k+1} = [x^{2k+1}] of the finite product.
fn c_from_a(k: usize, c: &[Rational], a_odd: &Rational) -> Rational {
    let n = 2 * k + 2;
    let mut h = vec![Rational::zero(); n];
    for m in 1..=k {
        let e = 2 * m;
        h[e] = -(&(&c[e] * &pow_q(4, e as i32)) * &Rational::frac(1, e as i64));
    }
    let mut half = vec![Rational::zero(); n];
    for (i, v) in half.iter_mut().enumerate() {
        *v = &pow_q(2, -(i as i32)) * &Rational::factorial(i as u64).recip().expect("nonzero");
    }
    let p = poly_mul(&half, &exp_series(&h, n), n);
    let w = &Rational::from(2 * k as i64 + 1) * &pow_q(4, -(2 * k as i32 + 1));
    &(&p[2 * k + 1] - a_odd) * &w
}

/// a_0.. re-expanded from c through the exponential relation.
pub fn a_from_c(k: usize, c: &[Rational], count: usize) -> Vec<Rational> {
    let mut h = vec![Rational::zero(); count];
    if count > 1 {
        h[1] = Rational::frac(1, 2);
    }
    for (nn, item) in h.iter_mut().enumerate().skip(2) {
        let used = if nn <= 2 * k { nn % 2 == 0 } else { nn < c.len() };
        if used {
            *item = -(&(&c[nn] * &pow_q(4, nn as i32)) * &Rational::frac(1, nn as i64));
        }
    }
    exp_series(&h, count)
}

/// (sη'')² + 4((η')² − 1/64)(η − sη') − k²/16 in s, known below `ord`.
pub fn painleve_residual(k: usize, c: &[Rational], ord: usize) -> Result<QSeries> {
    if c.len() < ord + 2 {
        return Err(Error::InsufficientTerms { have: c.len(), need: ord + 2 });
    }
    let t = (c.len() as i64 - 2).min(ord as i64);
    let eta = QSeries::new(0, c.to_vec(), c.len() as i64);
    let d1 = eta.deriv_var();
    let d2 = d1.deriv_var();
    let s = QSeries::monomial(1, Rational::one());
    let sd2 = s.mul(&d2);
    let first = sd2.mul(&sd2);
    let second = d1.mul(&d1).sub(&QSeries::monomial(0, Rational::frac(1, 64)));
    let third = eta.sub(&s.mul(&d1));
    let kk = Rational::frac((k * k) as i64, 16);
    let r = first.add(&second.mul(&third).scale_q(&Rational::from(4))).sub(&QSeries::monomial(0, kk));
    Ok(r.truncated(t))
}

/// τ_{k,Y_{k+1,k+1}} applied to the oracle τ_k, whose Bessel inputs are
/// known below u^{k²+ord}.
pub fn diffeq_residual(k: usize, ord: i64) -> Result<QSeries> {
    let exprs = tau_hook_exprs(&Rational::from(k as i64), k + 1)?;
    let tau = tau_series(k, &YoungDiagram::empty(), (k * k) as i64 + ord)?;
    let last = exprs.last().expect("k+1 entries");
    Ok(last.eval(&tau))
}
