//! The hook recursion for f^{(i)}_{l,q} = ∂_t^i G_{k,Y_{l,q}} at t = 0, and the
//! assembly of f_l as a differential polynomial in τ_k.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactalg::{HalfSeries, PolyK, Rational, Ring, TauExpr};
use crate::shiftrec::{build_matrix, rational_matrix, MatrixKind};

/// Fixed integer k or k kept as an indeterminate.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum KMode {
    Fixed(usize),
    Symbolic,
}

/// How f_{i+1} is formed from level i.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum Route {
    /// f_{i+1} = f^{(i)}_{2,1} − f^{(i)}_{2,2}.
    TwoOne,
    /// The expansion of ∂_t G_k in powers of t.
    Expansion,
}

/// Rows of the recursion store plus the completed f_l.
#[derive(Clone, Debug)]
pub struct RecState<C> {
    k: C,
    k_int: Option<usize>,
    truncated: bool,
    route: Route,
    store: BTreeMap<(usize, usize), Vec<TauExpr<C>>>,
    completed_f: Vec<TauExpr<C>>,
}

fn q(n: i64) -> Rational {
    Rational::from(n)
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

fn lin_c<C: Ring>(m: &[Vec<C>], v: &[TauExpr<C>]) -> Vec<TauExpr<C>> {
    m.iter()
        .map(|row| {
            let mut acc = TauExpr::zero();
            for (c, e) in row.iter().zip(v) {
                if !c.is_zero() {
                    acc = acc.add(&e.scale(c));
                }
            }
            acc
        })
        .collect()
}

fn add_vec<C: Ring>(a: &mut [TauExpr<C>], b: &[TauExpr<C>]) {
    for (x, y) in a.iter_mut().zip(b) {
        *x = x.add(y);
    }
}

fn alt_sum<C: Ring>(v: &[TauExpr<C>]) -> TauExpr<C> {
    let mut acc = TauExpr::zero();
    for (q, e) in v.iter().enumerate() {
        acc = if q % 2 == 0 { acc.add(e) } else { acc.sub(e) };
    }
    acc
}

impl<C: Ring> RecState<C> {
    /// Empty state with f_0 = τ_k. `k_int` is required when `truncated`.
    pub fn new(k: C, k_int: Option<usize>, truncated: bool, route: Route) -> Result<Self> {
        if truncated && k_int.is_none() {
            return Err(Error::MissingK("truncated recursion"));
        }
        Ok(RecState { k, k_int, truncated, route, store: BTreeMap::new(), completed_f: vec![TauExpr::tau()] })
    }

    pub fn k(&self) -> &C {
        &self.k
    }

    /// Stored vector (f^{(i)}_{l,1}, …).
    pub fn get(&self, i: usize, l: usize) -> Result<&Vec<TauExpr<C>>> {
        self.store
            .get(&(i, l))
            .ok_or_else(|| Error::MissingPrerequisite(format!("f^({i})_{l} not computed")))
    }

    /// Every stored vector, keyed by (i, l).
    pub fn entries(&self) -> impl Iterator<Item = (&(usize, usize), &Vec<TauExpr<C>>)> {
        self.store.iter()
    }

    pub fn f(&self, l: usize) -> Result<&TauExpr<C>> {
        self.completed_f
            .get(l)
            .ok_or_else(|| Error::MissingPrerequisite(format!("f_{l} not computed")))
    }

    fn width(&self, l: usize) -> usize {
        match (self.truncated, self.k_int) {
            (true, Some(k)) => l.min(k),
            _ => l,
        }
    }

    fn c(&self, n: i64) -> C {
        C::from_i64(n)
    }

    /// f^{(i)}_{1,1}, f^{(i)}_{2,1}, f^{(i)}_{2,2} from f_i and f^{(i−1)}_{3,·}.
    pub fn init_level(&mut self, i: usize) -> Result<()> {
        let fi = self.f(i)?.clone();
        let s3 = if i == 0 { TauExpr::zero() } else { alt_sum(self.get(i - 1, 3)?) };
        let k = self.k.clone();
        let ii = i as i64;
        let k2 = k.times(&k);
        let d1 = fi.ddx();
        let d2 = d1.ddx();
        let half = Rational::frac(1, 2);

        // √x f' − (k²/2 + i)/√x f
        let a11 = k2.scaled(&half).plus(&self.c(ii));
        let f11 = d1.mul_u(1).sub(&fi.scale(&a11).mul_u(-1));

        let s3_term = s3.mul_u(-1).scale_q(&q(ii));
        let k2i = k2.plus(&self.c(2 * ii));
        let two_part = |sign: i64| {
            let sk = k.scaled(&q(2 * sign));
            // x f'' − (k² ± 2k + 2i) f' + (k²+2i)(k² ± 4k + 2i + 2)/(4x) f
            let c1 = k2i.plus(&sk);
            let c0 = k2i.times(&k2i.plus(&sk.scaled(&q(2))).plus(&self.c(2))).scaled(&Rational::frac(1, 4));
            d2.mul_u(2).sub(&d1.scale(&c1)).add(&fi.scale(&c0).mul_u(-2)).scale_q(&half)
        };
        let halfk = fi.scale(&k.scaled(&half));
        let f21 = halfk.sub(&s3_term).add(&two_part(1));
        let f22 = halfk.neg().add(&s3_term).add(&two_part(-1));

        self.store.insert((i, 1), vec![f11]);
        let mut v2 = vec![f21, f22];
        v2.truncate(self.width(2));
        self.store.insert((i, 2), v2);
        Ok(())
    }

    /// One step l ≥ 3 of the recursion at level i.
    pub fn step_level(&mut self, i: usize, l: usize) -> Result<Vec<TauExpr<C>>> {
        if l < 3 {
            return Err(Error::InvalidRange(format!("recursion step needs l >= 3, got {l}")));
        }
        let li = l as i64;
        let ii = i as i64;
        let w0 = self.width(l);
        let k_int = if self.truncated { self.k_int } else { None };
        let k = self.k.clone();
        let k2 = k.times(&k);
        let (c1k, c2k, c3k) = if self.truncated {
            (MatrixKind::C1Trunc, MatrixKind::C2Trunc, MatrixKind::C3Trunc)
        } else {
            (MatrixKind::C1, MatrixKind::C2, MatrixKind::C3)
        };
        let b = rational_matrix(MatrixKind::B, w0)?;
        let c1 = build_matrix(c1k, l, Some(&k), k_int)?.entries;
        let c2 = build_matrix(c2k, l, Some(&k), k_int)?.entries;

        let prev1 = self.get(i, l - 1)?.clone();
        let prev2 = self.get(i, l - 2)?.clone();
        if prev1.len() != self.width(l - 1) || prev2.len() != self.width(l - 2) {
            return Err(Error::Inconsistent(format!("stored widths at level {i} do not match l = {l}")));
        }

        // −B (√x d/dx − (k²+l−1−2i)/(2√x)) [f^{(i)}_{l−1, w0−1}; 0]
        let a = k2.plus(&self.c(li - 1 - 2 * ii)).scaled(&Rational::frac(1, 2));
        let mut padded: Vec<TauExpr<C>> =
            prev1.iter().take(w0 - 1).map(|e| e.ddx().mul_u(1).sub(&e.scale(&a).mul_u(-1))).collect();
        padded.resize(w0, TauExpr::zero());
        let mut out: Vec<TauExpr<C>> = lin_q(&b, &padded).into_iter().map(|e| e.neg()).collect();

        // −(1/√x) C1 f_{l−1} + C2 f_{l−2}
        let t1: Vec<_> = lin_c(&c1, &prev1).into_iter().map(|e| e.mul_u(-1).neg()).collect();
        add_vec(&mut out, &t1);
        add_vec(&mut out, &lin_c(&c2, &prev2));

        if i > 0 {
            let up = self.get(i - 1, l + 1)?.clone();
            let same = self.get(i - 1, l)?.clone();
            let c3 = build_matrix(c3k, l, Some(&k), k_int)?.entries;
            // (2i/√x) C3 f^{(i−1)}_{l+1}
            let t3: Vec<_> = lin_c(&c3, &up).into_iter().map(|e| e.mul_u(-1).scale_q(&q(2 * ii))).collect();
            add_vec(&mut out, &t3);
            // B (2i d/dx − (i(k²+l) + 2i(i−1))/x) [f̂^{(i−1)}_{l, w0}; 0]
            let cst = k2.plus(&self.c(li)).scaled(&q(ii)).plus(&self.c(2 * ii * (ii - 1)));
            let mut hat: Vec<TauExpr<C>> = same
                .iter()
                .skip(1)
                .take(w0 - 1)
                .map(|e| e.ddx().scale_q(&q(2 * ii)).sub(&e.scale(&cst).mul_u(-2)))
                .collect();
            hat.resize(w0, TauExpr::zero());
            add_vec(&mut out, &lin_q(&b, &hat));
        }
        self.store.insert((i, l), out.clone());
        Ok(out)
    }

    /// f_{i+1} from level i, by the state's route.
    fn next_f(&self, i: usize) -> Result<TauExpr<C>> {
        if self.truncated || self.route == Route::TwoOne {
            return Ok(alt_sum(self.get(i, 2)?));
        }
        let k = &self.k;
        let ii = i as i64;
        let mut acc = self.f(i)?.scale(k);
        acc = acc.sub(&self.get(i, 1)?[0].mul_u(-1).scale(&k.scaled(&q(2))));
        for j in 1..=ii {
            let lvl = (ii - j) as usize;
            let mut w = &Rational::factorial(j as u64) * &Rational::binomial(ii, j);
            w = &w * &Rational::from(1i64 << j);
            if j % 2 == 0 {
                w = -w;
            }
            let s1 = alt_sum(self.get(lvl, j as usize)?);
            acc = acc.sub(&s1.mul_u(-j).scale_q(&w));
            let mut s2 = TauExpr::zero();
            for (qi, e) in self.get(lvl, j as usize + 1)?.iter().enumerate() {
                let qq = qi as i64 + 1;
                let coef = k.scaled(&q(2)).plus(&self.c(j + 2 - 2 * qq));
                let t = e.scale(&coef);
                s2 = if qq % 2 == 1 { s2.add(&t) } else { s2.sub(&t) };
            }
            acc = acc.add(&s2.mul_u(-j - 1).scale_q(&w));
        }
        Ok(acc)
    }

    /// Runs levels until f_1, …, f_{l_max} are available.
    pub fn run(&mut self, l_max: usize) -> Result<()> {
        for i in 0..l_max {
            if self.completed_f.len() > i + 1 {
                continue;
            }
            self.init_level(i)?;
            let f = self.next_f(i)?;
            self.completed_f.push(f);
            for l in 3..=(l_max + 1 - i) {
                self.step_level(i, l)?;
            }
        }
        Ok(())
    }
}

/// Expressions for τ_{k,Y_{l,1}}, …, τ_{k,Y_{l,l}} in terms of τ_k.
pub fn tau_hook_exprs<C: Ring>(k: &C, l: usize) -> Result<Vec<TauExpr<C>>> {
    if l == 0 {
        return Err(Error::InvalidRange("hook length must be >= 1".into()));
    }
    let mut st = RecState::new(k.clone(), None, false, Route::TwoOne)?;
    st.init_level(0)?;
    for m in 3..=l {
        st.step_level(0, m)?;
    }
    Ok(st.get(0, l)?.clone())
}

/// f_l as a differential polynomial in τ_k.
pub fn f_expr<C: Ring>(k: &C, l: usize, route: Route) -> Result<TauExpr<C>> {
    let mut st = RecState::new(k.clone(), None, false, route)?;
    st.run(l)?;
    Ok(st.f(l)?.clone())
}

/// f_l for an integer k via the size-min(l,k) recursion.
pub fn f_expr_truncated(k: usize, l: usize) -> Result<TauExpr<Rational>> {
    let mut st = RecState::new(Rational::from(k as i64), Some(k), true, Route::TwoOne)?;
    st.run(l)?;
    Ok(st.f(l)?.clone())
}

pub fn f_expr_fixed(k: usize, l: usize, route: Route) -> Result<TauExpr<Rational>> {
    f_expr(&Rational::from(k as i64), l, route)
}

pub fn f_expr_symbolic(l: usize, route: Route) -> Result<TauExpr<PolyK>> {
    f_expr(&PolyK::k(), l, route)
}

/// Checks the shape of f_l: integer x-powers from x^{−l} upward and
/// derivative order at most l.
pub fn check_f_shape<C: Ring>(l: usize, e: &TauExpr<C>) -> Result<()> {
    if let Some(top) = e.max_order() {
        if top > l {
            return Err(Error::Inconsistent(format!("f_{l} has derivative order {top}")));
        }
    }
    for (m, p) in e.terms() {
        for (u, _) in p.terms() {
            if u % 2 != 0 || u < -2 * l as i64 {
                return Err(Error::Inconsistent(format!("f_{l} has u^{u} on tau^({m})")));
            }
        }
    }
    Ok(())
}

/// Lowest u-exponent allowed in f^{(i)}_{l,q}: −2i − l.
pub fn check_level_shape<C: Ring>(i: usize, l: usize, e: &TauExpr<C>) -> Result<()> {
    if let Some(lo) = e.min_u_exp() {
        if lo < -(2 * i as i64) - l as i64 {
            return Err(Error::Inconsistent(format!("f^({i})_{l} reaches u^{lo}")));
        }
    }
    if let Some(top) = e.max_order() {
        if top > i + l {
            return Err(Error::Inconsistent(format!("f^({i})_{l} has derivative order {top}")));
        }
    }
    Ok(())
}

/// Rational specialisation of a symbolic expression.
pub fn eval_at_k(e: &TauExpr<PolyK>, k: &Rational) -> TauExpr<Rational> {
    e.map_coeffs(|p| p.eval(k))
}

/// Wraps a finite Laurent polynomial in u.
pub fn laurent<C: Ring>(terms: Vec<(i64, C)>) -> HalfSeries<C> {
    HalfSeries::from_terms(terms, crate::exactalg::UNBOUNDED)
}
