//! Leading coefficients F_1, F_2, F_3 of the joint moments, the third-order
//! recursion, R_M reconstruction and the Toeplitz cross-check.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::besselrec::{RecState, Route};
use crate::error::{Error, Result};
use crate::exactalg::{rational_interpolate, HalfSeries, QSeries, RatFuncK, Rational, Ring, TauExpr};
use crate::exactalg::interp::rational_interpolate_degrees;
use crate::oracle::det;
use crate::shiftrec::{rational_matrix, MatrixKind};
use crate::taylor::tau_taylor;

/// One moment coefficient with its Barnes factor split off.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MomentResult {
    pub order: u32,
    #[serde(rename = "M")]
    pub m: Rational,
    pub k: usize,
    pub value: Rational,
    pub barnes_ratio: Rational,
    #[serde(rename = "R")]
    pub r: Rational,
}

impl MomentResult {
    fn new(order: u32, m: Rational, k: usize, value: Rational) -> Self {
        let br = barnes_ratio(k);
        let r = value.checked_div(&br).expect("Barnes ratio is positive");
        MomentResult { order, m, k, value, barnes_ratio: br, r }
    }
}

/// G²(k+1)/G(2k+1) = Π_{j<k} j!/(j+k)!.
pub fn barnes_ratio(k: usize) -> Rational {
    let mut acc = Rational::one();
    for j in 0..k as u64 {
        acc = &acc * &Rational::factorial(j);
        acc = acc.checked_div(&Rational::factorial(j + k as u64)).expect("nonzero");
    }
    acc
}

fn check_mk(m: usize, k: usize) -> Result<()> {
    if k == 0 || m > k {
        return Err(Error::InvalidRange(format!("need 0 <= M <= k and k >= 1, got M={m}, k={k}")));
    }
    Ok(())
}

/// Coefficients of e^{-x/2}.
fn exp_half(n: usize) -> Vec<Rational> {
    let mut out = Vec::with_capacity(n);
    let mut c = Rational::one();
    for i in 0..n {
        out.push(c.clone());
        c = &c * &Rational::frac(-1, 2 * (i as i64 + 1));
    }
    out
}

/// m! [x^m] (e^{-x/2} · Σ s_j x^j).
fn deriv_at_zero(s: &[Rational], m: usize) -> Rational {
    let e = exp_half(m + 1);
    let mut acc = Rational::zero();
    for j in 0..=m.min(s.len().saturating_sub(1)) {
        acc = &acc + &(&s[j] * &e[m - j]);
    }
    &acc * &Rational::factorial(m as u64)
}

/// Number of a_j needed so that u^{shift} x^{-k²/2} E(τ) is known through x^{upto}.
pub fn required_taylor_len(e: &TauExpr<Rational>, shift: i64, upto: usize) -> usize {
    let mut need = 1usize;
    for (m, p) in e.terms() {
        for (ep, _) in p.terms() {
            // exponent 2j + ep − 2m + shift ≤ 2·upto
            let jmax = (2 * upto as i64 - ep + 2 * *m as i64 - shift).div_euclid(2);
            if jmax >= 0 {
                need = need.max(jmax as usize + 1);
            }
        }
    }
    need
}

/// Power-series coefficients (in x) of u^{shift} x^{-k²/2} E(τ_k) divided by
/// the signed Barnes ratio, through x^{upto}. Fails if a negative or
/// half-integer power survives.
pub fn normalized_series(
    e: &TauExpr<Rational>,
    k: usize,
    a: &[Rational],
    shift: i64,
    upto: usize,
) -> Result<Vec<Rational>> {
    let need = required_taylor_len(e, shift, upto);
    if a.len() < need {
        return Err(Error::InsufficientTerms { have: a.len(), need });
    }
    let half_k2 = Rational::frac((k * k) as i64, 2);
    let mut acc: BTreeMap<i64, Rational> = BTreeMap::new();
    for (m, p) in e.terms() {
        let m = *m as i64;
        for (ep, c) in p.terms() {
            for (j, aj) in a.iter().enumerate() {
                let j = j as i64;
                let ex = 2 * j + ep - 2 * m + shift;
                if ex > 2 * upto as i64 {
                    break;
                }
                if aj.is_zero() {
                    continue;
                }
                let ff = (&half_k2 + &Rational::from(j)).falling(m as u64);
                let v = &(c * aj) * &ff;
                let slot = acc.entry(ex).or_insert_with(Rational::zero);
                *slot = &*slot + &v;
            }
        }
    }
    let mut out = vec![Rational::zero(); upto + 1];
    for (ex, v) in acc {
        if v.is_zero() {
            continue;
        }
        if ex < 0 || ex % 2 != 0 {
            return Err(Error::Inconsistent(format!("normalised series has u^{ex} with coefficient {v}")));
        }
        out[(ex / 2) as usize] = v;
    }
    Ok(out)
}

/// F_1(M,k) for 2M = `two_m`, from the Taylor coefficients a.
pub fn f1(two_m: usize, k: usize, a: &[Rational]) -> Result<MomentResult> {
    if k == 0 || two_m > 2 * k {
        return Err(Error::InvalidRange(format!("need 0 <= 2M <= 2k, got 2M={two_m}, k={k}")));
    }
    if a.len() < two_m + 1 {
        return Err(Error::InsufficientTerms { have: a.len(), need: two_m + 1 });
    }
    let d = deriv_at_zero(a, two_m);
    // the sign is (−1)^{⌊M⌋}; for odd 2M ≤ 2k the derivative vanishes anyway
    let sign = Rational::minus_one_pow((two_m / 2) as i64);
    let br = barnes_ratio(k);
    let m = Rational::frac(two_m as i64, 2);
    Ok(MomentResult::new(1, m, k, &(&sign * &br) * &d))
}

/// F_2(M,k) from the f_l expressions and the Taylor coefficients of τ_k.
pub fn f2(m: usize, k: usize) -> Result<MomentResult> {
    check_mk(m, k)?;
    let mut st = RecState::new(Rational::from(k as i64), None, false, Route::TwoOne)?;
    st.run(2 * m)?;
    let mut need = 1;
    for l in 0..=2 * m {
        need = need.max(required_taylor_len(st.f(l)?, -2 * l as i64, 4 * m - 2 * l));
    }
    let a = tau_taylor(k, need + 2);
    let mut total = Rational::zero();
    for l in 0..=2 * m {
        let d = 4 * m - 2 * l;
        let s = normalized_series(st.f(l)?, k, &a, -2 * l as i64, d)?;
        let w = Rational::binomial(2 * m as i64, l as i64);
        total = &total + &(&w * &deriv_at_zero(&s, d));
    }
    let br = barnes_ratio(k);
    Ok(MomentResult::new(2, Rational::from(m as i64), k, &br * &total))
}

/// Which form of the f^{(n1,n2−1)}_{m+1,3..} contribution the third-order
/// recursion uses.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum LastTerm {
    /// −3n2 B (d/dx − (k²+m+2n1+3n2−2)/(2x)) [f^{(n1,n2−1)}_{m+1,3}; 0], obtained by
    /// differentiating the generating identity in t1, t2.
    Derived,
    /// −3n2 B (d/dx − (k²+m+1)/(2x)) [f^{(n1,n2−1)}_{m+1,3}; 0]
    /// + (3n1n2/x) B [f^{(n1−1,n2−1)}_{m+1,3}; 0] + (9n2(n2−1)/(2x)) B [f^{(n1,n2−2)}_{m+1,3}; 0].
    Printed,
}

/// Store of f^{(n1,n2)}_{m,q} and F(n1,n2) for the third-order moment.
#[derive(Clone, Debug)]
pub struct ThirdOrderState<C> {
    k: C,
    last: LastTerm,
    store: BTreeMap<(usize, usize, usize), Vec<TauExpr<C>>>,
    completed_f: BTreeMap<(usize, usize), TauExpr<C>>,
}

fn lin_q<C: Ring>(m: &[Vec<Rational>], v: &[TauExpr<C>]) -> Vec<TauExpr<C>> {
    m.iter()
        .map(|row| {
            let mut acc = TauExpr::zero();
            for (c, e) in row.iter().zip(v) {
                if !c.is_zero() {
                    acc = acc.add(&e.scale_q(c));
                }
            }
            acc
        })
        .collect()
}

fn add_into<C: Ring>(out: &mut [TauExpr<C>], v: &[TauExpr<C>]) {
    for (o, e) in out.iter_mut().zip(v) {
        *o = o.add(e);
    }
}

fn alt<C: Ring>(v: &[TauExpr<C>], weight: impl Fn(i64) -> C) -> TauExpr<C> {
    let mut acc = TauExpr::zero();
    for (i, e) in v.iter().enumerate() {
        let s = i as i64 + 1;
        let t = e.scale(&weight(s));
        acc = if s % 2 == 1 { acc.add(&t) } else { acc.sub(&t) };
    }
    acc
}

impl<C: Ring> ThirdOrderState<C> {
    pub fn new(k: C, last: LastTerm) -> Self {
        let mut completed_f = BTreeMap::new();
        completed_f.insert((0, 0), TauExpr::tau());
        ThirdOrderState { k, last, store: BTreeMap::new(), completed_f }
    }

    fn c(&self, n: i64) -> C {
        C::from_i64(n)
    }

    /// (f^{(n1,n2)}_{m,1}, …, f^{(n1,n2)}_{m,m}).
    pub fn vec(&mut self, n1: usize, n2: usize, m: usize) -> Result<Vec<TauExpr<C>>> {
        if m == 0 {
            return Err(Error::InvalidRange("hook length 0".into()));
        }
        if let Some(v) = self.store.get(&(n1, n2, m)) {
            return Ok(v.clone());
        }
        let v = match m {
            1 => vec![self.init_f11(n1, n2)?],
            2 => self.init_f2(n1, n2)?,
            _ => self.step(n1, n2, m)?,
        };
        self.store.insert((n1, n2, m), v.clone());
        Ok(v)
    }

    fn init_f11(&mut self, n1: usize, n2: usize) -> Result<TauExpr<C>> {
        let f = self.big_f(n1, n2)?;
        let k2 = self.k.times(&self.k);
        let a = k2.scaled(&Rational::frac(1, 2)).plus(&C::from_rational(&Rational::frac(2 * n1 as i64 + 3 * n2 as i64, 2)));
        Ok(f.ddx().mul_u(1).sub(&f.scale(&a).mul_u(-1)))
    }

    fn init_f2(&mut self, n1: usize, n2: usize) -> Result<Vec<TauExpr<C>>> {
        let f = self.big_f(n1, n2)?;
        let up = self.big_f(n1 + 1, n2)?;
        let (a, b) = (n1 as i64, n2 as i64);
        let k2 = self.k.times(&self.k);
        let d1 = f.ddx();
        let d2 = d1.ddx();
        let c1 = k2.plus(&self.c(2 * a + 3 * b));
        let quarter = Rational::frac(1, 4);
        let c0 = k2
            .plus(&self.c(2))
            .scaled(&Rational::from(a))
            .plus(&k2.times(&k2.plus(&self.c(2))).scaled(&quarter))
            .plus(&self.c(a * (a - 1)))
            .plus(&k2.scaled(&Rational::from(6)).plus(&self.c(15)).scaled(&(&quarter * &Rational::from(b))))
            .plus(&C::from_rational(&Rational::frac(9 * b * (b - 1), 4)))
            .plus(&self.c(3 * a * b));
        let half = Rational::frac(1, 2);
        let common = d2.mul_u(2).sub(&d1.scale(&c1)).add(&f.scale(&c0).mul_u(-2)).scale_q(&half);
        let hup = up.scale_q(&half);
        Ok(vec![hup.add(&common), hup.neg().add(&common)])
    }

    fn padded_tail(v: &[TauExpr<C>], skip: usize, len: usize) -> Vec<TauExpr<C>> {
        let mut out: Vec<TauExpr<C>> = v.iter().skip(skip).cloned().collect();
        out.resize(len, TauExpr::zero());
        out
    }

    fn step(&mut self, n1: usize, n2: usize, m: usize) -> Result<Vec<TauExpr<C>>> {
        let (a, b, mi) = (n1 as i64, n2 as i64, m as i64);
        let k = self.k.clone();
        let k2 = k.times(&k);
        let bm = rational_matrix(MatrixKind::B, m)?;
        let c1 = crate::shiftrec::build_matrix(MatrixKind::C1, m, Some(&k), None)?.entries;
        let c2 = crate::shiftrec::build_matrix(MatrixKind::C2, m, Some(&k), None)?.entries;
        let prev1 = self.vec(n1, n2, m - 1)?;
        let prev2 = self.vec(n1, n2, m - 2)?;
        let half = Rational::frac(1, 2);

        // d/dx − c/(2x) applied entrywise
        let op = |v: &[TauExpr<C>], c: &C| -> Vec<TauExpr<C>> {
            v.iter().map(|e| e.ddx().sub(&e.scale(&c.scaled(&half)).mul_u(-2))).collect()
        };

        let a1 = k2.plus(&self.c(mi - 1 - 2 * a - 3 * b));
        let t1: Vec<_> = op(&prev1, &a1).into_iter().map(|e| e.mul_u(1)).collect();
        let mut out: Vec<_> = lin_q(&bm, &Self::padded_tail(&t1, 0, m)).into_iter().map(|e| e.neg()).collect();
        let mut lin_c = |mat: &[Vec<C>], v: &[TauExpr<C>], f: &dyn Fn(TauExpr<C>) -> TauExpr<C>| {
            let r: Vec<_> = mat
                .iter()
                .map(|row| {
                    let mut acc = TauExpr::zero();
                    for (c, e) in row.iter().zip(v) {
                        if !c.is_zero() {
                            acc = acc.add(&e.scale(c));
                        }
                    }
                    f(acc)
                })
                .collect();
            add_into(&mut out, &r);
        };
        lin_c(&c1, &prev1, &|e| e.mul_u(-1).neg());
        lin_c(&c2, &prev2, &|e| e);
        if n1 >= 1 {
            let up = self.vec(n1 - 1, n2, m + 1)?;
            let c3 = rational_matrix(MatrixKind::C3, m)?;
            let r: Vec<_> = lin_q(&c3, &up).into_iter().map(|e| e.mul_u(-1).scale_q(&Rational::from(2 * a))).collect();
            add_into(&mut out, &r);
            let same = self.vec(n1 - 1, n2, m)?;
            let a6 = k2.plus(&self.c(mi + 2 * a + 3 * b - 2));
            let t6: Vec<_> = op(&Self::padded_tail(&same, 1, m - 1), &a6);
            let r: Vec<_> = lin_q(&bm, &Self::padded_tail(&t6, 0, m)).into_iter().map(|e| e.scale_q(&Rational::from(2 * a))).collect();
            add_into(&mut out, &r);
        }
        if n2 >= 1 {
            let three_b = Rational::from(3 * b);
            let up2 = self.vec(n1, n2 - 1, m + 2)?;
            let c4 = rational_matrix(MatrixKind::C4, m)?;
            let r: Vec<_> = lin_q(&c4, &up2).into_iter().map(|e| e.mul_u(-1).scale_q(&three_b).neg()).collect();
            add_into(&mut out, &r);
            let cross = self.vec(n1 + 1, n2 - 1, m)?;
            let r: Vec<_> = lin_q(&bm, &Self::padded_tail(&cross, 1, m)).into_iter().map(|e| e.mul_u(-1).scale_q(&three_b)).collect();
            add_into(&mut out, &r);
            let nxt = self.vec(n1, n2 - 1, m + 1)?;
            let tail = Self::padded_tail(&nxt, 2, m - 1);
            let a8 = match self.last {
                LastTerm::Derived => k2.plus(&self.c(mi + 2 * a + 3 * b - 2)),
                LastTerm::Printed => k2.plus(&self.c(mi + 1)),
            };
            let t8 = op(&tail, &a8);
            let r: Vec<_> = lin_q(&bm, &Self::padded_tail(&t8, 0, m)).into_iter().map(|e| e.scale_q(&three_b).neg()).collect();
            add_into(&mut out, &r);
            if self.last == LastTerm::Printed {
                if n1 >= 1 {
                    let v = self.vec(n1 - 1, n2 - 1, m + 1)?;
                    let r: Vec<_> = lin_q(&bm, &Self::padded_tail(&v, 2, m))
                        .into_iter()
                        .map(|e| e.mul_u(-2).scale_q(&Rational::from(3 * a * b)))
                        .collect();
                    add_into(&mut out, &r);
                }
                if n2 >= 2 {
                    let v = self.vec(n1, n2 - 2, m + 1)?;
                    let r: Vec<_> = lin_q(&bm, &Self::padded_tail(&v, 2, m))
                        .into_iter()
                        .map(|e| e.mul_u(-2).scale_q(&Rational::frac(9 * b * (b - 1), 2)))
                        .collect();
                    add_into(&mut out, &r);
                }
            }
        }
        Ok(out)
    }

    /// F(n1, n2) = ∂^{n1}_{t1} ∂^{n2}_{t2} G_k at t = 0.
    pub fn big_f(&mut self, n1: usize, n2: usize) -> Result<TauExpr<C>> {
        if let Some(f) = self.completed_f.get(&(n1, n2)) {
            return Ok(f.clone());
        }
        let k = self.k.clone();
        let two_k = k.scaled(&Rational::from(2));
        let f = if n1 >= 1 {
            let mut acc = self.big_f(n1 - 1, n2)?.scale(&k);
            for j in 0..=n2 {
                for i in 0..n1 {
                    let (ii, jj) = (i as i64, j as i64);
                    let mut w = &Rational::factorial((i + j) as u64) * &Rational::binomial(n2 as i64, jj);
                    w = &w * &Rational::binomial(n1 as i64 - 1, ii);
                    w = &w * &(&Rational::from(3).powi(j as i32)? * &Rational::from(2).powi(i as i32)?);
                    w = &w * &Rational::minus_one_pow(ii + jj);
                    let (lvl1, lvl2) = (n1 - 1 - i, n2 - j);
                    let h = i + 2 * j;
                    let s1 = if h == 0 { TauExpr::zero() } else { alt(&self.vec(lvl1, lvl2, h)?, |_| C::one()) };
                    let hh = h as i64;
                    let s2 = alt(&self.vec(lvl1, lvl2, h + 1)?, |s| two_k.plus(&C::from_i64(hh + 2 - 2 * s)));
                    let inner = s1.sub(&s2.mul_u(-1));
                    acc = acc.add(&inner.mul_u(-(ii + jj)).scale_q(&w));
                }
            }
            acc
        } else if n2 >= 1 {
            let mut acc = TauExpr::zero();
            for i in 0..n2 {
                let ii = i as i64;
                let w = &(&Rational::factorial(i as u64) * &Rational::binomial(n2 as i64 - 1, ii))
                    * &(&Rational::from(3).powi(i as i32)? * &Rational::minus_one_pow(ii));
                let lvl = n2 - 1 - i;
                let s1 = alt(&self.vec(0, lvl, 2 * i + 1)?, |_| C::one());
                let s2 = alt(&self.vec(0, lvl, 2 * i + 2)?, |s| two_k.plus(&C::from_i64(2 * ii + 3 - 2 * s)));
                acc = acc.add(&s1.sub(&s2.mul_u(-1)).mul_u(-ii).scale_q(&w));
            }
            acc
        } else {
            TauExpr::tau()
        };
        self.completed_f.insert((n1, n2), f.clone());
        Ok(f)
    }

    /// Computes F(n1, n2) for n1 + n2 ≤ 2M, t2-order outermost.
    pub fn run(&mut self, m: usize) -> Result<()> {
        for n2 in 0..=2 * m {
            for n1 in 0..=2 * m - n2 {
                self.big_f(n1, n2)?;
            }
        }
        Ok(())
    }
}

/// F_3(M,k), using the generating-identity form of the t2 term.
pub fn f3(m: usize, k: usize) -> Result<MomentResult> {
    f3_with(m, k, LastTerm::Derived)
}

pub fn f3_with(m: usize, k: usize, last: LastTerm) -> Result<MomentResult> {
    check_mk(m, k)?;
    let mut st = ThirdOrderState::new(Rational::from(k as i64), last);
    st.run(m)?;
    let tm = 2 * m;
    let mut parts = Vec::new();
    let mut need = 1;
    for n1 in 0..=tm {
        for n2 in 0..=tm - n1 {
            let n3 = tm - n1 - n2;
            let d = n1 + 3 * n3;
            let shift = -(2 * n1 as i64) - 3 * n2 as i64;
            let f = st.big_f(n1, n2)?;
            need = need.max(required_taylor_len(&f, shift, d));
            parts.push((n1, n2, n3, d, shift, f));
        }
    }
    let a = tau_taylor(k, need + 2);
    let mut total = Rational::zero();
    for (n1, n2, n3, d, shift, f) in parts {
        let s = normalized_series(&f, k, &a, shift, d)?;
        let multi = Rational::factorial(tm as u64)
            .checked_div(&(&(&Rational::factorial(n1 as u64) * &Rational::factorial(n2 as u64)) * &Rational::factorial(n3 as u64)))?;
        let w = &multi
            * &(&Rational::from(6).powi(tm as i32)?
                * &(&(&Rational::from(2).powi(-(n1 as i32))? * &Rational::from(3).powi(-(n2 as i32))?) * &Rational::from(6).powi(-(n3 as i32))?));
        total = &total + &(&w * &deriv_at_zero(&s, d));
    }
    let value = &(&Rational::minus_one_pow(m as i64) * &barnes_ratio(k)) * &total;
    Ok(MomentResult::new(3, Rational::from(m as i64), k, value))
}

/// Rebuilds R_M from exact samples at the given integer k. With `degrees`
/// the numerator/denominator degrees are fixed; otherwise the lowest total
/// degree fitting all samples is taken.
pub fn r_reconstruct(order: u32, m: usize, ks: &[usize], degrees: Option<(usize, usize)>) -> Result<RatFuncK> {
    let mut samples = Vec::with_capacity(ks.len());
    for &k in ks {
        let r = match order {
            1 => {
                let a = tau_taylor(k, 2 * m + 1);
                f1(2 * m, k, &a)?.r
            }
            2 => f2(m, k)?.r,
            3 => f3(m, k)?.r,
            _ => return Err(Error::InvalidRange(format!("moment order {order}"))),
        };
        samples.push((Rational::from(k as i64), r));
    }
    match degrees {
        Some((n, d)) => rational_interpolate_degrees(&samples, n, d),
        None => rational_interpolate(&samples, samples.len().saturating_sub(2) / 2),
    }
}

/// Entry d_{ij} of the Toeplitz-limit matrix as a polynomial in ν = iNβ
/// through ν^{ord}.
fn toeplitz_entry(k: i64, n1: i64, n: i64, i: i64, j: i64, ord: i64) -> Result<QSeries> {
    let mut terms = Vec::new();
    let base = 2 * k - n + i - 1;
    for m in 0..=ord {
        // (base)!/(base+m)! = 1/((base+1)…(base+m))
        let mut c = Rational::one();
        for t in 1..=m {
            c = c.checked_div(&Rational::from(base + t))?;
        }
        c = &c * &Rational::binomial(i + k - n - 1 + m, m);
        c = &c * &Rational::binomial(i + m - 1, j - 1);
        if i > n1 {
            let mut s = Rational::zero();
            for l in 0..=m {
                let w = Rational::factorial((i - 1) as u64) * Rational::factorial(m as u64);
                let w = w.checked_div(&(Rational::factorial((i - 1 + l) as u64) * Rational::factorial((m - l) as u64)))?;
                s = &s + &(&w * &Rational::binomial(i - n1 - 1 + l, i - n1 - 1));
            }
            c = &c * &s;
        }
        terms.push((m, c));
    }
    Ok(HalfSeries::from_terms(terms, ord + 1))
}

/// F_2(M,k) through the Toeplitz-determinant expansion, with the standalone
/// N factors set to 1.
pub fn toeplitz_f2_check(m: usize, k: usize) -> Result<Rational> {
    check_mk(m, k)?;
    let (mi, ki) = (m as i64, k as i64);
    let ord = 4 * mi;
    let mut total = Rational::zero();
    for n1 in 0..=2 * mi {
        for n2 in 0..=2 * mi - n1 {
            let n = n1 + n2;
            let z = if n == 0 {
                QSeries::one()
            } else {
                let mut mat = Vec::new();
                for i in 1..=n {
                    let mut row = Vec::new();
                    for j in 1..=n {
                        row.push(toeplitz_entry(ki, n1, n, i, j, ord)?);
                    }
                    mat.push(row);
                }
                det(&mat).truncated(ord + 1)
            };
            let w = &(&Rational::from(-2).powi(n1 as i32)? * &Rational::binomial(2 * mi, n1)) * &Rational::binomial(2 * mi - n1, n2);
            let lam = &Rational::frac(n1, 2) + &Rational::from(n2);
            let mut s = Rational::zero();
            for mm in 0..=ord {
                let c = &(&Rational::minus_one_pow(mm) * &lam.powi(mm as i32)?) * &Rational::factorial(mm as u64).recip()?;
                s = &s + &(&c * &z.coeff(ord - mm)?);
            }
            total = &total + &(&w * &s);
        }
    }
    Ok(&barnes_ratio(k) * &total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::q;

    #[test]
    fn barnes_small() {
        assert_eq!(barnes_ratio(1), q(1, 1));
        assert_eq!(barnes_ratio(2), q(1, 12));
        assert_eq!(barnes_ratio(3), q(1, 8640));
    }

    #[test]
    fn f2_first_entries() {
        assert_eq!(f2(1, 1).unwrap().value, q(1, 80));
        assert_eq!(f2(2, 2).unwrap().value, q(17, 1024 * 27 * 5 * 7 * 11));
        assert_eq!(f2(1, 2).unwrap().value, &q(1, 12) * &q(1, 336));
        for k in 1..=4 {
            assert_eq!(f2(0, k).unwrap().value, barnes_ratio(k));
        }
    }

    #[test]
    fn f1_small() {
        let a = tau_taylor(1, 4);
        assert_eq!(f1(2, 1, &a).unwrap().value, q(1, 12));
        assert_eq!(f1(1, 1, &a).unwrap().value, q(0, 1));
        assert_eq!(f1(0, 3, &tau_taylor(3, 2)).unwrap().value, barnes_ratio(3));
    }

    #[test]
    fn toeplitz_agrees() {
        for (m, k) in [(0, 1), (0, 2), (1, 1), (1, 2)] {
            assert_eq!(toeplitz_f2_check(m, k).unwrap(), f2(m, k).unwrap().value, "M={m} k={k}");
        }
    }
}
