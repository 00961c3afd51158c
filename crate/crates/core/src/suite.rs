//! Verification checks with exact rational comparisons, grouped into a fast
//! and a full suite. Each check covers one criterion and reports the first
//! mismatch it finds.

use std::str::FromStr;

use num_bigint::BigInt;
use serde::Serialize;

use crate::besselrec::{f_expr_fixed, f_expr_symbolic, tau_hook_exprs, RecState, Route};
use crate::error::{Error, Result};
use crate::exactalg::{PolyK, QSeries, RatFuncK, Rational, TauExpr};
use crate::moments::{barnes_ratio, f2, f3, toeplitz_f2_check, LastTerm, ThirdOrderState};
use crate::oracle::identities::{
    hook_system, hook_system_vanishing, hook_translation, row_expansion, translation_by_rows,
    translation_to_row_hooks, weighted_translation, Mismatch,
};
use crate::oracle::{det, f_l_bruteforce, g_partial_bruteforce, tau_series, RandomSeq, ShiftedHankelSpec};
use crate::shiftrec::{mat_mul, rational_matrix, MatrixKind};
use crate::taylor::{diffeq_residual, eta_coeffs, painleve_residual, tau_taylor};
use crate::young::{hook, YoungDiagram};

/// Result of one check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub expected: String,
    pub actual: String,
    pub detail: String,
}

/// A failed comparison: what was wanted, what came out, and where.
#[derive(Clone, Debug)]
pub struct Failure {
    pub expected: String,
    pub actual: String,
    pub detail: String,
}

impl Failure {
    fn new(expected: impl ToString, actual: impl ToString, detail: impl Into<String>) -> Self {
        Failure { expected: expected.to_string(), actual: actual.to_string(), detail: detail.into() }
    }

    fn identity(what: &str, m: String) -> Self {
        Failure::new("identity holds", "mismatch", format!("{what}: {m}"))
    }
}

fn run_check(name: &str, ok_detail: impl Into<String>, f: impl FnOnce() -> Result<Option<Failure>>) -> Check {
    match f() {
        Ok(None) => Check {
            name: name.into(),
            pass: true,
            expected: String::new(),
            actual: String::new(),
            detail: ok_detail.into(),
        },
        Ok(Some(fl)) => Check { name: name.into(), pass: false, expected: fl.expected, actual: fl.actual, detail: fl.detail },
        Err(e) => Check {
            name: name.into(),
            pass: false,
            expected: "success".into(),
            actual: format!("error: {e}"),
            detail: String::new(),
        },
    }
}

/// Which checks to run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SuiteKind {
    /// F_2(k,k) for k ≤ 4 plus every other check.
    Fast,
    /// As `Fast`, with F_2(k,k) for k ≤ 9.
    Full,
}

impl FromStr for SuiteKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "fast" => Ok(SuiteKind::Fast),
            "full" => Ok(SuiteKind::Full),
            _ => Err(Error::Parse(format!("unknown suite {s:?}"))),
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct SuiteOptions {
    pub kind: SuiteKind,
    /// First seed of the random sequences for the identity checks.
    pub seed: u64,
    /// Number of random sequences.
    pub seeds: u64,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions { kind: SuiteKind::Fast, seed: 0, seeds: 20 }
    }
}

/// Runs every check of the suite, in a fixed order.
pub fn run_suite(opts: &SuiteOptions) -> Vec<Check> {
    let diag_max = match opts.kind {
        SuiteKind::Fast => 4,
        SuiteKind::Full => 9,
    };
    vec![
        diagonal_table_check(1, diag_max),
        r_function_check(),
        oracle_equivalence_check(),
        identity_check(opts.seed, opts.seeds),
        taylor_check(),
        painleve_check(),
        diffeq_check(),
        structure_check(),
        matrix_check(),
        third_order_check(),
        toeplitz_check(),
    ]
}

/// One line per check and a summary line.
pub fn report(checks: &[Check]) -> String {
    let mut out = String::new();
    for c in checks {
        if c.pass {
            out.push_str(&format!("PASS {}  {}\n", c.name, c.detail));
        } else {
            out.push_str(&format!(
                "FAIL {}  expected {} got {}  {}\n",
                c.name, c.expected, c.actual, c.detail
            ));
        }
    }
    let n = checks.iter().filter(|c| c.pass).count();
    out.push_str(&format!("{n}/{} checks passed\n", checks.len()));
    out
}

fn parse_factored(s: &str) -> Rational {
    let product = |t: &str| -> BigInt {
        t.split('*')
            .map(|f| match f.split_once('^') {
                Some((b, e)) => BigInt::from_str(b).expect("base").pow(e.parse::<u32>().expect("exponent")),
                None => BigInt::from_str(f).expect("factor"),
            })
            .product()
    };
    let (n, d) = s.split_once('/').expect("fraction");
    Rational::from_big(product(n), product(d)).expect("nonzero denominator")
}

/// Known values of F_2(k,k), k = 1..9, in factored form.
const DIAGONAL: [&str; 9] = [
    "1/2^4*5",
    "17/2^10*3^3*5*7*11",
    "11593/2^18*3^7*5^2*7^3*11*13*17",
    "103*413129/2^28*3^12*5^5*7^3*11^2*13^2*17*19*23",
    "2616269*322433/2^40*3^17*5^8*7^5*11^4*13^3*17^2*19*23*29",
    "53*5830411*94098709/2^54*3^24*5^13*7^8*11^4*13^4*17^3*19^2*23*29*31",
    "896318952226585228351/2^70*3^32*5^16*7^10*11^6*13^4*17^4*19^3*23^2*29*31*37*41",
    "103*167*64283*71225030041520923/2^88*3^42*5^20*7^13*11^6*13^6*17^5*19^4*23^2*29^2*31*37*41*43*47",
    "109*9335580613*845744949032889042779/2^108*3^52*5^25*7^17*11^9*13^8*17^5*19^5*23^4*29^2*31^2*37*41*43*47*53",
];

/// Tabulated F_2(k,k), for 1 ≤ k ≤ 9.
pub fn known_diagonal(k: usize) -> Option<Rational> {
    DIAGONAL.get(k.checked_sub(1)?).map(|s| parse_factored(s))
}

fn poly(c: &[i64]) -> PolyK {
    PolyK::from_ints(c)
}

/// Closed forms of R_M(k) = F_2(M,k)/barnes_ratio(k) for M = 1..4.
pub fn known_r(m: usize) -> Option<RatFuncK> {
    let lin = |f: &[(i64, i64, u32)]| {
        let mut v = Vec::new();
        for &(a, b, e) in f {
            for _ in 0..e {
                v.push((a, b));
            }
        }
        PolyK::from_linear_factors(&v)
    };
    let (num, scale, den) = match m {
        1 => (poly(&[1]), 16, lin(&[(2, -1, 1), (2, 3, 1)])),
        2 => (
            poly(&[-99, -32, 40, 64, 16]),
            256,
            lin(&[(2, -3, 1), (2, -1, 2), (2, 1, 2), (2, 3, 1), (2, 5, 1), (2, 7, 1)]),
        ),
        3 => (
            poly(&[463545, -225318, -239232, 188608, -66912, -102080, -13824, 14336, 5376, 512]),
            4096,
            lin(&[(2, -5, 1), (2, -3, 2), (2, -1, 3), (2, 1, 3), (2, 3, 2), (2, 5, 1), (2, 7, 1), (2, 9, 1), (2, 11, 1)]),
        ),
        4 => (
            poly(&[
                6148319625,
                -1962813360,
                -800470200,
                2414144,
                -18354704,
                155091456,
                30041856,
                -25065472,
                -8833280,
                233472,
                509952,
                81920,
                4096,
            ]),
            65536,
            lin(&[
                (2, -7, 1),
                (2, -5, 2),
                (2, -3, 2),
                (2, -1, 3),
                (2, 1, 3),
                (2, 3, 2),
                (2, 5, 2),
                (2, 7, 1),
                (2, 9, 1),
                (2, 11, 1),
                (2, 13, 1),
                (2, 15, 1),
            ]),
        ),
        _ => return None,
    };
    RatFuncK::new(num, den.scale(&Rational::from(scale))).ok()
}

/// Both series known through u^{order} and equal there.
fn agree_through(a: &QSeries, b: &QSeries, order: i64) -> Result<bool> {
    if a.trunc() <= order || b.trunc() <= order {
        return Err(Error::TruncationExhausted { needed: order + 1, available: a.trunc().min(b.trunc()) });
    }
    a.agrees_below(b, order + 1)
}

fn first_difference(a: &QSeries, b: &QSeries, order: i64) -> String {
    let lo = a.min_exp().min(b.min_exp());
    for e in lo..=order {
        let (x, y) = (a.coeff(e), b.coeff(e));
        if x != y {
            return format!("u^{e}: {x:?} vs {y:?}");
        }
    }
    "no difference found".into()
}

/// F_2(k,k) against the table, for k = lo..=hi.
pub fn diagonal_table_check(lo: usize, hi: usize) -> Check {
    run_check("f2_diagonal_table", format!("F2(k,k) exact for k = {lo}..{hi}"), || {
        for k in lo..=hi {
            let want = known_diagonal(k).ok_or_else(|| Error::InvalidRange(format!("no table entry for k={k}")))?;
            let got = f2(k, k)?.value;
            if got != want {
                return Ok(Some(Failure::new(want, got, format!("k={k}"))));
            }
        }
        Ok(None)
    })
}

/// F_2(M,k)/barnes_ratio(k) against the closed forms for M = 1..4 and k = M..M+6.
pub fn r_function_check() -> Check {
    run_check("r_functions", "R_1..R_4 exact at k = M..M+6", || {
        for m in 1..=4usize {
            let r = known_r(m).expect("closed form");
            for k in m..=m + 6 {
                let want = r.eval(&Rational::from(k as i64))?;
                let got = f2(m, k)?.r;
                if got != want {
                    return Ok(Some(Failure::new(want, got, format!("M={m} k={k}"))));
                }
            }
        }
        Ok(None)
    })
}

/// f_l from both recursion routes, applied to the Bessel τ_k, against the
/// defining determinant sum, for k ≤ 3 and l ≤ 4.
pub fn oracle_equivalence_check() -> Check {
    run_check("oracle_f_l", "k <= 3, l <= 4, both routes, through u^(k^2+2l+8)", || {
        for k in 1..=3usize {
            for l in 1..=4usize {
                let order = (k * k + 2 * l + 8) as i64;
                let trunc = order + 1 + 4 * l as i64;
                let tau = tau_series(k, &YoungDiagram::empty(), trunc)?;
                let want = f_l_bruteforce(k, l as u32, trunc)?;
                for route in [Route::TwoOne, Route::Expansion] {
                    let got = f_expr_fixed(k, l, route)?.eval(&tau);
                    if !agree_through(&got, &want, order)? {
                        return Ok(Some(Failure::new(
                            "f_l series",
                            first_difference(&got, &want, order),
                            format!("k={k} l={l} {route:?}"),
                        )));
                    }
                }
            }
        }
        Ok(None)
    })
}

fn identity_failure(what: &str, seed: u64, r: Mismatch) -> Option<Failure> {
    r.map(|m| Failure::identity(what, format!("seed {seed}, {m}")))
}

/// Identities between shifted Hankel determinants on `count` random rational
/// sequences, k ≤ 4, l ≤ 6.
pub fn identity_check(seed0: u64, count: u64) -> Check {
    let detail = format!("{count} random sequences from seed {seed0}, k <= 4, l <= 6");
    run_check("generic_identities", detail, || {
        let diagrams = [YoungDiagram::empty(), YoungDiagram::new(&[1]), YoungDiagram::new(&[2, 1])];
        for seed in seed0..seed0 + count {
            let seq = RandomSeq { seed };
            let alpha = (seed % 7) as i64 - 1;
            for k in 1..=4usize {
                for x in &diagrams {
                    let spec = ShiftedHankelSpec { k, alpha, x: x.clone(), y: YoungDiagram::empty() };
                    let Some(betas) = spec.row_betas() else { continue };
                    for h in 1..=6 {
                        for y in &diagrams {
                            if let Some(f) = identity_failure("row translation", seed, translation_by_rows(&seq, &betas, y, h)?) {
                                return Ok(Some(f));
                            }
                        }
                    }
                    for l in 2..=6 {
                        if let Some(f) = identity_failure("hook translation", seed, hook_translation(&seq, &betas, l)?) {
                            return Ok(Some(f));
                        }
                    }
                }
                for l in 1..=6i64 {
                    for y in &diagrams {
                        let r = translation_to_row_hooks(&seq, k, alpha, y, l)?;
                        if let Some(f) = identity_failure("translation to row hooks", seed, r) {
                            return Ok(Some(f));
                        }
                    }
                    let r = weighted_translation(&seq, k, alpha, l)?;
                    if let Some(f) = identity_failure("weighted translation", seed, r) {
                        return Ok(Some(f));
                    }
                }
                for l in 1..=6usize {
                    for x in &diagrams[..2] {
                        if let Some(f) = identity_failure("hook system", seed, hook_system(&seq, k, alpha, x, l)?) {
                            return Ok(Some(f));
                        }
                        let r = hook_system_vanishing(&seq, k, alpha, x, l)?;
                        if let Some(f) = identity_failure("hook system vanishing", seed, r) {
                            return Ok(Some(f));
                        }
                    }
                    let r = row_expansion(&seq, k, alpha, &YoungDiagram::empty(), l)?;
                    if let Some(f) = identity_failure("row expansion", seed, r) {
                        return Ok(Some(f));
                    }
                }
            }
        }
        Ok(None)
    })
}

/// The Taylor recursion against the normalized Bessel τ_k, and the k = 1
/// closed values.
pub fn taylor_check() -> Check {
    run_check("taylor_vs_oracle", "a_0..a_11 for k = 1..3; a_1..a_3 at k = 1", || {
        let n = 12usize;
        for k in 1..=3usize {
            let a = tau_taylor(k, n);
            let base = (k * k) as i64;
            let tau = tau_series(k, &YoungDiagram::empty(), base + 2 * n as i64 + 1)?;
            let lead = tau.coeff(base)?;
            if tau.min_exp() < base || lead.is_zero() {
                return Ok(Some(Failure::new(format!("leading u^{base}"), format!("u^{}", tau.min_exp()), format!("k={k}"))));
            }
            for (j, aj) in a.iter().enumerate() {
                let odd = tau.coeff(base + 2 * j as i64 + 1)?;
                if !odd.is_zero() {
                    return Ok(Some(Failure::new(0, odd, format!("odd power in τ_{k}"))));
                }
                let want = tau.coeff(base + 2 * j as i64)?.checked_div(&lead)?;
                if *aj != want {
                    return Ok(Some(Failure::new(want, aj, format!("k={k} a_{j}"))));
                }
            }
        }
        let a = tau_taylor(1, 4);
        let want = [Rational::frac(1, 2), Rational::frac(1, 12), Rational::frac(1, 144)];
        for (j, w) in want.iter().enumerate() {
            if a[j + 1] != *w {
                return Ok(Some(Failure::new(w, &a[j + 1], format!("k=1 a_{}", j + 1))));
            }
        }
        Ok(None)
    })
}

/// c_2 for k = 1..4, c_3 at k = 1, and a vanishing σ-form residual through
/// s^10 for k = 1..3.
pub fn painleve_check() -> Check {
    run_check("painleve", "c_2 for k = 1..4, c_3 at k = 1, residual to order 10 for k = 1..3", || {
        for k in 1..=4usize {
            let a = tau_taylor(k, 12);
            let c = eta_coeffs(k, 12, &a)?;
            let kk = (k * k) as i64;
            let want = Rational::frac(1, 64 * (4 * kk - 1));
            if c[2] != want {
                return Ok(Some(Failure::new(want, &c[2], format!("c_2 at k={k}"))));
            }
            if k == 1 && c[3] != Rational::frac(-1, 3072) {
                return Ok(Some(Failure::new("-1/3072", &c[3], "c_3 at k=1")));
            }
            if k <= 3 {
                let r = painleve_residual(k, &c, 10)?;
                if !r.is_known_zero() || r.trunc() < 10 {
                    return Ok(Some(Failure::new("0 + O(s^10)", format!("{r:?}"), format!("k={k}"))));
                }
            }
        }
        Ok(None)
    })
}

/// τ_{k,Y_{k+1,k+1}} as a differential polynomial kills τ_k, and for k = 2
/// it is (1/6) x^{−3/2} (x³τ‴ + 4x²τ″ − 2x(2x+1)τ′ − 2(x+2)τ).
pub fn diffeq_check() -> Check {
    run_check("differential_equation", "residual to order 10 for k = 1..3; k = 2 operator exact", || {
        for k in 1..=3usize {
            let r = diffeq_residual(k, 10 + 4 * (k as i64 + 1))?;
            if !r.is_known_zero() || r.trunc() < 10 {
                return Ok(Some(Failure::new("0 + O(u^10)", format!("{r:?}"), format!("k={k}"))));
            }
        }
        let e = tau_hook_exprs(&Rational::from(2), 3)?.pop().expect("three entries");
        let x = |p: i64, c: i64| QSeries::monomial(2 * p, Rational::from(c));
        let op = TauExpr::term(3, x(3, 1))
            .add(&TauExpr::term(2, x(2, 4)))
            .add(&TauExpr::term(1, x(2, -4).add(&x(1, -2))))
            .add(&TauExpr::term(0, x(1, -2).add(&x(0, -4))));
        let want = op.mul_u(-3).scale_q(&Rational::frac(1, 6));
        if e != want {
            return Ok(Some(Failure::new(format!("{want:?}"), format!("{e:?}"), "k=2 operator")));
        }
        Ok(None)
    })
}

/// Coefficient shape of the symbolic f_l, l ≤ 4: only integer x-powers
/// x^{j+m−l} with 0 ≤ j ≤ l−m, k-degree at most 3l − 2(m+j), derivative
/// order at most l.
pub fn structure_check() -> Check {
    run_check("structure", "symbolic f_l for l <= 4, both routes", || {
        for l in 1..=4usize {
            for route in [Route::TwoOne, Route::Expansion] {
                let e = f_expr_symbolic(l, route)?;
                if let Some(f) = structure_failure(l, &e) {
                    return Ok(Some(Failure { detail: format!("l={l} {route:?}: {}", f.detail), ..f }));
                }
            }
        }
        Ok(None)
    })
}

/// First violation of the f_l shape, if any.
pub fn structure_failure(l: usize, e: &TauExpr<PolyK>) -> Option<Failure> {
    let li = l as i64;
    if let Some(m) = e.max_order() {
        if m > l {
            return Some(Failure::new(format!("order <= {l}"), m, "derivative order"));
        }
    }
    for (&m, p) in e.terms() {
        let mi = m as i64;
        for (ex, c) in p.terms() {
            if ex % 2 != 0 {
                return Some(Failure::new("even u-power", ex, format!("τ^({m})")));
            }
            let j = ex / 2 - mi + li;
            if j < 0 || j > li - mi {
                return Some(Failure::new(format!("0 <= j <= {}", li - mi), j, format!("τ^({m}) x^{}", ex / 2)));
            }
            let bound = 3 * li - 2 * (mi + j);
            let deg = c.degree().map_or(-1, |d| d as i64);
            if deg > bound {
                return Some(Failure::new(format!("degree <= {bound}"), deg, format!("τ^({m}), j={j}")));
            }
        }
    }
    None
}

/// A^{(l)} B^{(l)} = I and det A^{(l)} = l! for l = 1..10.
pub fn matrix_check() -> Check {
    run_check("matrix_identities", "l = 1..10", || {
        for l in 1..=10usize {
            let a = rational_matrix(MatrixKind::A, l)?;
            let b = rational_matrix(MatrixKind::B, l)?;
            let p = mat_mul(&a, &b);
            for (i, row) in p.iter().enumerate() {
                for (j, v) in row.iter().enumerate() {
                    let want = if i == j { Rational::one() } else { Rational::zero() };
                    if *v != want {
                        return Ok(Some(Failure::new(want, v, format!("(AB)_{{{},{}}} at l={l}", i + 1, j + 1))));
                    }
                }
            }
            let d = det(&a);
            let want = Rational::factorial(l as u64);
            if d != want {
                return Ok(Some(Failure::new(want, d, format!("det A at l={l}"))));
            }
        }
        Ok(None)
    })
}

/// Series comparison of a TauExpr on τ_k against an oracle quantity.
fn third_order_entry(e: &TauExpr<Rational>, want: &QSeries, tau: &QSeries, order: i64) -> Result<Option<String>> {
    let got = e.eval(tau);
    Ok((!agree_through(&got, want, order)?).then(|| first_difference(&got, want, order)))
}

/// F_3(0,k) = barnes_ratio(k) for k ≤ 3; F(n1,n2) and its hook vectors
/// against multinomial determinant sums for n1+n2 ≤ 2, k ≤ 2; the n2 = 0
/// slice against the second-order recursion, symbolically in k.
pub fn third_order_check() -> Check {
    let detail = "F3(0,k) for k <= 3; F(n1,n2) and hooks vs oracle for n1+n2 <= 2, k <= 2; n2 = 0 slice formal";
    run_check("third_order", detail, || {
        for k in 1..=3usize {
            let v = f3(0, k)?.value;
            if v != barnes_ratio(k) {
                return Ok(Some(Failure::new(barnes_ratio(k), v, format!("F3(0,{k})"))));
            }
        }
        for k in 1..=2usize {
            let mut st = ThirdOrderState::new(Rational::from(k as i64), LastTerm::Derived);
            for n in 0..=2usize {
                for n1 in 0..=n {
                    let n2 = n - n1;
                    let order = (k * k + 2 * n + 10) as i64;
                    let trunc = order + 40;
                    let tau = tau_series(k, &YoungDiagram::empty(), trunc)?;
                    let want = g_partial_bruteforce(k, &YoungDiagram::empty(), n1 as u32, n2 as u32, trunc)?;
                    if let Some(d) = third_order_entry(&st.big_f(n1, n2)?, &want, &tau, order)? {
                        return Ok(Some(Failure::new("oracle", d, format!("F({n1},{n2}) k={k}"))));
                    }
                    for m in 1..=3usize {
                        let v = st.vec(n1, n2, m)?;
                        for (qi, e) in v.iter().enumerate() {
                            let y = hook(m as i64, qi as i64 + 1)?;
                            let want = g_partial_bruteforce(k, &y, n1 as u32, n2 as u32, trunc)?;
                            if let Some(d) = third_order_entry(e, &want, &tau, order)? {
                                let at = format!("f^({n1},{n2})_{{{m},{}}} k={k}", qi + 1);
                                return Ok(Some(Failure::new("oracle", d, at)));
                            }
                        }
                    }
                }
            }
        }
        let l_max = 4usize;
        let mut rec = RecState::new(PolyK::k(), None, false, Route::TwoOne)?;
        rec.run(l_max)?;
        let mut st = ThirdOrderState::new(PolyK::k(), LastTerm::Derived);
        let keys: Vec<(usize, usize)> = rec.entries().map(|(k, _)| *k).collect();
        for (i, l) in keys {
            let got = st.vec(i, 0, l)?;
            if &got != rec.get(i, l)? {
                return Ok(Some(Failure::new("second-order entry", "different", format!("f^({i},0)_{l}"))));
            }
        }
        for l in 0..=l_max {
            if &st.big_f(l, 0)? != rec.f(l)? {
                return Ok(Some(Failure::new("f_l", "different", format!("F({l},0)"))));
            }
        }
        Ok(None)
    })
}

/// Toeplitz expansion against F_2 on small (M,k).
pub fn toeplitz_check() -> Check {
    run_check("toeplitz", "(M,k) in {(0,1),(0,2),(1,1),(1,2)}, standalone N factors set to 1", || {
        for (m, k) in [(0usize, 1usize), (0, 2), (1, 1), (1, 2)] {
            let t = toeplitz_f2_check(m, k)?;
            let v = f2(m, k)?.value;
            if t != v {
                return Ok(Some(Failure::new(v, t, format!("M={m} k={k}; the N-normalization may differ"))));
            }
        }
        Ok(None)
    })
}
