//! Identities between shifted Hankel determinants, checked on concrete
//! sequences. Each check returns `None` when the identity holds and a short
//! description of the first mismatch otherwise.

use std::collections::BTreeMap;

use super::{apply_s, apply_t, det_rows, det_shifted, translate_by_rows, translate_rows, Sequence, ShiftedHankelSpec};
use crate::error::Result;
use crate::exactalg::{Rational, Ring};
use crate::shiftrec::{rational_matrix, solve_hook_system, MatrixKind};
use crate::young::{hook, YoungDiagram};

/// Outcome of one identity check.
pub type Mismatch = Option<String>;

fn signed(acc: Rational, t: &Rational, h: i64) -> Rational {
    if h % 2 == 0 {
        acc.plus(t)
    } else {
        acc.minus(t)
    }
}

/// T_h by the cofactor inner product agrees with the sum of single-row
/// translations.
pub fn translation_by_rows<S: Sequence<Rational>>(seq: &S, betas: &[i64], y: &YoungDiagram, h: i64) -> Result<Mismatch> {
    let a = translate_rows(betas, y, seq, h, false)?;
    let b = translate_by_rows(betas, y, seq, h)?;
    Ok((a != b).then(|| format!("T_{h} on rows {betas:?}, Y={y}: cofactor {a}, rows {b}")))
}

/// Σ_{h<j} (−1)^h T_h D(β;Y_{l−h,j−h}) = Σ_{h<j} (−1)^h D(β;Y_{l,j−h}) − (j−1) D(β;Y_{l,j})
/// for j = 2..l.
pub fn hook_translation<S: Sequence<Rational>>(seq: &S, betas: &[i64], l: i64) -> Result<Mismatch> {
    for j in 2..=l {
        let mut lhs = Rational::zero();
        let mut rhs = Rational::zero();
        for h in 1..j {
            let t = translate_rows(betas, &hook(l - h, j - h)?, seq, h, false)?;
            lhs = signed(lhs, &t, h);
            let d = det_rows(betas, &hook(l, j - h)?, seq)?;
            rhs = signed(rhs, &d, h);
        }
        let d = det_rows(betas, &hook(l, j)?, seq)?;
        rhs = rhs.minus(&d.scaled(&Rational::from(j - 1)));
        if lhs != rhs {
            return Ok(Some(format!("rows {betas:?}, l={l}, j={j}: {lhs} vs {rhs}")));
        }
    }
    Ok(None)
}

/// T_l H_{k,Y} = Σ_j (−1)^{j−1} H_{k,{Y_{l,j};Y}}.
pub fn translation_to_row_hooks<S: Sequence<Rational>>(
    seq: &S,
    k: usize,
    alpha: i64,
    y: &YoungDiagram,
    l: i64,
) -> Result<Mismatch> {
    let spec = ShiftedHankelSpec { k, alpha, x: YoungDiagram::empty(), y: y.clone() };
    let lhs = apply_t(&spec, seq, l)?;
    let mut rhs = Rational::zero();
    for j in 1..=l {
        let s = ShiftedHankelSpec { k, alpha, x: hook(l, j)?, y: y.clone() };
        rhs = signed(rhs, &det_shifted(&s, seq)?, j - 1);
    }
    Ok((lhs != rhs).then(|| format!("k={k}, α={alpha}, Y={y}, l={l}: {lhs} vs {rhs}")))
}

/// S_l H_k = Σ_j (−1)^{j−1} (2k − 2j + l + α) H_{k,Y_{l,j}}.
pub fn weighted_translation<S: Sequence<Rational>>(seq: &S, k: usize, alpha: i64, l: i64) -> Result<Mismatch> {
    let spec = ShiftedHankelSpec { k, alpha, x: YoungDiagram::empty(), y: YoungDiagram::empty() };
    let lhs = apply_s(&spec, seq, l)?;
    let mut rhs = Rational::zero();
    for j in 1..=l {
        let s = ShiftedHankelSpec { k, alpha, x: YoungDiagram::empty(), y: hook(l, j)? };
        let w = Rational::from(2 * k as i64 - 2 * j + l + alpha);
        rhs = signed(rhs, &det_shifted(&s, seq)?.scaled(&w), j - 1);
    }
    Ok((lhs != rhs).then(|| format!("k={k}, α={alpha}, l={l}: {lhs} vs {rhs}")))
}

/// The vector (H_{k,{X;Y_{l,j}}})_j obtained from B^{(l)} and translations of
/// lower hooks.
pub fn hook_system_values<S: Sequence<Rational>>(seq: &S, k: usize, alpha: i64, x: &YoungDiagram, l: usize) -> Result<Vec<Rational>> {
    solve_hook_system(l, |h, y| {
        let spec = ShiftedHankelSpec { k, alpha, x: x.clone(), y: y.clone() };
        apply_t(&spec, seq, h)
    })
}

/// The hook system reproduces every H_{k,{X;Y_{l,j}}}, j = 1..l.
pub fn hook_system<S: Sequence<Rational>>(seq: &S, k: usize, alpha: i64, x: &YoungDiagram, l: usize) -> Result<Mismatch> {
    let vals = hook_system_values(seq, k, alpha, x, l)?;
    for (j, v) in vals.iter().enumerate() {
        let spec = ShiftedHankelSpec { k, alpha, x: x.clone(), y: hook(l as i64, j as i64 + 1)? };
        let direct = det_shifted(&spec, seq)?;
        if *v != direct {
            return Ok(Some(format!("k={k}, α={alpha}, X={x}, l={l}, j={}: {v} vs {direct}", j + 1)));
        }
    }
    Ok(None)
}

/// For l > k the entries j = k+1..l of the hook system vanish.
pub fn hook_system_vanishing<S: Sequence<Rational>>(seq: &S, k: usize, alpha: i64, x: &YoungDiagram, l: usize) -> Result<Mismatch> {
    let vals = hook_system_values(seq, k, alpha, x, l)?;
    for (j, v) in vals.iter().enumerate().skip(k) {
        if !v.is_zero() {
            return Ok(Some(format!("k={k}, α={alpha}, X={x}, l={l}, j={}: {v}", j + 1)));
        }
    }
    Ok(None)
}

/// Linear combination of row-shifted determinants D(β; ∅), keyed by the
/// increasing row vector β.
pub type RowCombination = BTreeMap<Vec<i64>, Rational>;

/// Sorts a row vector, returning the permutation sign, or `None` when two
/// rows coincide.
fn sort_rows(rows: &[i64]) -> Option<(Vec<i64>, bool)> {
    let mut rows = rows.to_vec();
    let mut odd = false;
    for i in 0..rows.len() {
        for j in 0..rows.len() - 1 - i {
            if rows[j] > rows[j + 1] {
                rows.swap(j, j + 1);
                odd = !odd;
            }
        }
    }
    if rows.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    Some((rows, odd))
}

fn add_term(acc: &mut RowCombination, rows: &[i64], c: Rational) {
    let Some((rows, odd)) = sort_rows(rows) else {
        return;
    };
    let c = if odd { c.negated() } else { c };
    let e = acc.entry(rows).or_insert_with(Rational::zero);
    *e = e.plus(&c);
}

fn add_scaled(acc: &mut RowCombination, other: &RowCombination, c: &Rational) {
    for (rows, v) in other {
        add_term(acc, rows, v.times(c));
    }
}

/// Expands D(β; Y_{l,j}) for j = 1..l into row-only determinants by
/// repeatedly solving the hook system, with T_h acting as a sum of row
/// translations.
pub struct RowExpander {
    memo: BTreeMap<(Vec<i64>, usize), Vec<RowCombination>>,
}

impl Default for RowExpander {
    fn default() -> Self {
        Self::new()
    }
}

impl RowExpander {
    pub fn new() -> Self {
        RowExpander { memo: BTreeMap::new() }
    }

    /// Expansion of D(β; Y_{l,j}) for arbitrary (not necessarily sorted) β.
    pub fn hook(&mut self, rows: &[i64], l: usize, j: usize) -> Result<RowCombination> {
        let mut out = RowCombination::new();
        if l == 0 {
            add_term(&mut out, rows, Rational::one());
            return Ok(out);
        }
        let Some((sorted, odd)) = sort_rows(rows) else {
            return Ok(out);
        };
        let sign = if odd { Rational::one().negated() } else { Rational::one() };
        let all = self.all_hooks(&sorted, l)?;
        add_scaled(&mut out, &all[j - 1], &sign);
        Ok(out)
    }

    fn all_hooks(&mut self, rows: &[i64], l: usize) -> Result<Vec<RowCombination>> {
        let key = (rows.to_vec(), l);
        if let Some(v) = self.memo.get(&key) {
            return Ok(v.clone());
        }
        let li = l as i64;
        let mut rhs: Vec<RowCombination> = Vec::with_capacity(l);
        for j in 2..=li {
            let mut acc = RowCombination::new();
            for h in 1..j {
                let sign = Rational::minus_one_pow(h);
                for s in 0..rows.len() {
                    let mut r = rows.to_vec();
                    r[s] += h;
                    let part = self.hook(&r, (li - h) as usize, (j - h) as usize)?;
                    add_scaled(&mut acc, &part, &sign);
                }
            }
            rhs.push(acc);
        }
        let mut last = RowCombination::new();
        for s in 0..rows.len() {
            let mut r = rows.to_vec();
            r[s] += li;
            add_term(&mut last, &r, Rational::one());
        }
        rhs.push(last);
        let b = rational_matrix(MatrixKind::B, l)?;
        let mut res = Vec::with_capacity(l);
        for row in &b {
            let mut acc = RowCombination::new();
            for (c, v) in row.iter().zip(&rhs) {
                if !c.is_zero() {
                    add_scaled(&mut acc, v, c);
                }
            }
            acc.retain(|_, v| !v.is_zero());
            res.push(acc);
        }
        self.memo.insert(key, res.clone());
        Ok(res)
    }
}

/// H_{k,{X;Y_{l,j}}} is a combination of H_{k,X_n} with |X_n| = |X| + l: the
/// expansion evaluates to the direct determinant and every term carries
/// exactly l extra boxes on a valid diagram.
pub fn row_expansion<S: Sequence<Rational>>(seq: &S, k: usize, alpha: i64, x: &YoungDiagram, l: usize) -> Result<Mismatch> {
    let spec = ShiftedHankelSpec { k, alpha, x: x.clone(), y: YoungDiagram::empty() };
    let Some(betas) = spec.row_betas() else {
        return Ok(None);
    };
    let base: i64 = betas.iter().sum();
    let mut ex = RowExpander::new();
    for j in 1..=l {
        let comb = ex.hook(&betas, l, j)?;
        let mut val = Rational::zero();
        for (rows, c) in &comb {
            let extra: i64 = rows.iter().sum::<i64>() - base;
            if extra != l as i64 {
                return Ok(Some(format!("term {rows:?} adds {extra} boxes, expected {l}")));
            }
            if rows.iter().enumerate().any(|(i, r)| r - alpha - (i as i64) < 0) {
                return Ok(Some(format!("term {rows:?} is not a diagram shift")));
            }
            val = val.plus(&det_rows(rows, &YoungDiagram::empty(), seq)?.times(c));
        }
        let direct = det_shifted(&ShiftedHankelSpec { k, alpha, x: x.clone(), y: hook(l as i64, j as i64)? }, seq)?;
        if val != direct {
            return Ok(Some(format!("k={k}, α={alpha}, X={x}, l={l}, j={j}: {val} vs {direct}")));
        }
    }
    Ok(None)
}
