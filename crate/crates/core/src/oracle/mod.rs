//! Brute-force ground truth: shifted Hankel determinants over series rings,
//! the T_h and S_h actions by cofactor inner products, f_l from its defining
//! sum, and t-derivatives of G_{k,Y} by multinomial row expansion.

pub mod det;
pub mod identities;
pub mod seq;

use crate::error::{Error, Result};
use crate::exactalg::{BiPoly, HalfSeries, QSeries, Rational, Ring};
use crate::young::{weak_compositions, YoungDiagram};

pub use det::{cofactor_matrix, det, inner_product, minor};
pub use seq::{bessel_series, BesselSeq, GeneratingSeq, RandomSeq, Sequence};

/// H_{k,{X;Y}}: rows β_i = α + i + x_{k−i}, columns j + t_{k−j}.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ShiftedHankelSpec {
    pub k: usize,
    pub alpha: i64,
    pub x: YoungDiagram,
    pub y: YoungDiagram,
}

impl ShiftedHankelSpec {
    /// τ_{k,Y}: α = 1, no row shift.
    pub fn tau(k: usize, y: YoungDiagram) -> Self {
        ShiftedHankelSpec { k, alpha: 1, x: YoungDiagram::empty(), y }
    }

    /// Row indices β_0..β_{k−1}, or `None` when X has more than k rows.
    pub fn row_betas(&self) -> Option<Vec<i64>> {
        let offs = self.x.column_offsets(self.k).ok()?;
        Some(offs.into_iter().map(|o| o + self.alpha).collect())
    }
}

/// Matrix (a_{β_i + c_j}); with `weighted` each entry is multiplied by its
/// index β_i + c_j.
pub fn hankel_matrix<R: Ring, S: Sequence<R>>(
    betas: &[i64],
    cols: &[i64],
    seq: &S,
    weighted: bool,
) -> Result<Vec<Vec<R>>> {
    betas
        .iter()
        .map(|b| {
            cols.iter()
                .map(|c| {
                    let a = seq.term(b + c)?;
                    Ok(if weighted { a.scaled(&Rational::from(b + c)) } else { a })
                })
                .collect()
        })
        .collect()
}

/// D_k(β; Y), zero when Y has more than k rows.
pub fn det_rows<R: Ring, S: Sequence<R>>(betas: &[i64], y: &YoungDiagram, seq: &S) -> Result<R> {
    let Ok(cols) = y.column_offsets(betas.len()) else {
        return Ok(R::zero());
    };
    Ok(det(&hankel_matrix(betas, &cols, seq, false)?))
}

/// T_h (or S_h when `weighted`) applied to D_k(β; Y) by the cofactor inner
/// product with the matrix whose columns are shifted by h.
pub fn translate_rows<R: Ring, S: Sequence<R>>(
    betas: &[i64],
    y: &YoungDiagram,
    seq: &S,
    h: i64,
    weighted: bool,
) -> Result<R> {
    let Ok(cols) = y.column_offsets(betas.len()) else {
        return Ok(R::zero());
    };
    let base = hankel_matrix(betas, &cols, seq, false)?;
    let shifted: Vec<i64> = cols.iter().map(|c| c + h).collect();
    let m = hankel_matrix(betas, &shifted, seq, weighted)?;
    Ok(inner_product(&m, &cofactor_matrix(&base)))
}

/// T_h D as Σ_i D(β with β_i + h); an independent route used by the checks.
pub fn translate_by_rows<R: Ring, S: Sequence<R>>(
    betas: &[i64],
    y: &YoungDiagram,
    seq: &S,
    h: i64,
) -> Result<R> {
    let mut acc = R::zero();
    for i in 0..betas.len() {
        let mut b = betas.to_vec();
        b[i] += h;
        acc = acc.plus(&det_rows(&b, y, seq)?);
    }
    Ok(acc)
}

/// H_{k,{X;Y}}; zero if X or Y has more than k rows.
pub fn det_shifted<R: Ring, S: Sequence<R>>(spec: &ShiftedHankelSpec, seq: &S) -> Result<R> {
    match spec.row_betas() {
        Some(b) => det_rows(&b, &spec.y, seq),
        None => Ok(R::zero()),
    }
}

/// T_h H_{k,{X;Y}}.
pub fn apply_t<R: Ring, S: Sequence<R>>(spec: &ShiftedHankelSpec, seq: &S, h: i64) -> Result<R> {
    match spec.row_betas() {
        Some(b) => translate_rows(&b, &spec.y, seq, h, false),
        None => Ok(R::zero()),
    }
}

/// S_h H_{k,{X;Y}}.
pub fn apply_s<R: Ring, S: Sequence<R>>(spec: &ShiftedHankelSpec, seq: &S, h: i64) -> Result<R> {
    match spec.row_betas() {
        Some(b) => translate_rows(&b, &spec.y, seq, h, true),
        None => Ok(R::zero()),
    }
}

/// τ_{k,Y}(x) with Bessel inputs known below `trunc`.
pub fn tau_series(k: usize, y: &YoungDiagram, trunc: i64) -> Result<QSeries> {
    det_shifted(&ShiftedHankelSpec::tau(k, y.clone()), &BesselSeq { trunc })
}

fn multinomial(parts: &[u32]) -> Rational {
    let n: u32 = parts.iter().sum();
    let mut r = Rational::factorial(n as u64);
    for &p in parts {
        r = r.checked_div(&Rational::factorial(p as u64)).expect("nonzero");
    }
    r
}

/// f_l = Σ_{l_1+…+l_k=l} multinomial · det(I_{i+j+1+2l_{j+1}}(2√x)).
pub fn f_l_bruteforce(k: usize, l: u32, trunc: i64) -> Result<QSeries> {
    let seq = BesselSeq { trunc };
    let betas: Vec<i64> = (1..=k as i64).collect();
    let mut acc = QSeries::zero();
    for comp in weak_compositions(l, k) {
        let cols: Vec<i64> = (0..k).map(|j| j as i64 + 2 * comp.shifts[j] as i64).collect();
        let d = det(&hankel_matrix(&betas, &cols, &seq, false)?);
        acc = acc.add(&d.scale_q(&multinomial(&comp.shifts)));
    }
    let lead = (k * k) as i64 + 2 * l as i64;
    if acc.min_exp() < lead {
        return Err(Error::Inconsistent(format!(
            "f_{l} for k={k} starts at u^{} below u^{lead}",
            acc.min_exp()
        )));
    }
    Ok(acc)
}

/// ∂^{n1}_{t1} ∂^{n2}_{t2} G_{k,Y} at t = 0, as the multinomial sum of
/// determinants whose row i is shifted by 2h_{1,i} + 3h_{2,i}.
pub fn g_partial_bruteforce(k: usize, y: &YoungDiagram, n1: u32, n2: u32, trunc: i64) -> Result<QSeries> {
    let Ok(cols) = y.column_offsets(k) else {
        return Ok(QSeries::zero());
    };
    let seq = BesselSeq { trunc };
    let mut acc = QSeries::zero();
    for h1 in weak_compositions(n1, k) {
        for h2 in weak_compositions(n2, k) {
            let betas: Vec<i64> =
                (0..k).map(|i| 1 + i as i64 + 2 * h1.shifts[i] as i64 + 3 * h2.shifts[i] as i64).collect();
            let d = det(&hankel_matrix(&betas, &cols, &seq, false)?);
            let w = &multinomial(&h1.shifts) * &multinomial(&h2.shifts);
            acc = acc.add(&d.scale_q(&w));
        }
    }
    Ok(acc)
}

/// Extracts n1! n2! × [t1^{n1} t2^{n2}] from a bivariate series.
pub fn t_coefficient(s: &HalfSeries<BiPoly>, n1: u32, n2: u32) -> QSeries {
    let w = &Rational::factorial(n1 as u64) * &Rational::factorial(n2 as u64);
    s.map_coeffs(|p| &p.coeff(n1, n2) * &w)
}

/// Same quantity as [`g_partial_bruteforce`], computed from the determinant
/// of generating functions over the bivariate series ring.
pub fn g_partial_bivariate(k: usize, y: &YoungDiagram, n1: u32, n2: u32, trunc: i64) -> Result<QSeries> {
    let seq = GeneratingSeq { trunc, d1: n1, d2: n2 };
    let g = det_shifted(&ShiftedHankelSpec::tau(k, y.clone()), &seq)?;
    Ok(t_coefficient(&g, n1, n2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::q;

    #[test]
    fn tau_two_leading_term() {
        let t = tau_series(2, &YoungDiagram::empty(), 12).unwrap();
        assert_eq!(t.min_exp(), 4);
        assert_eq!(t.coeff(4).unwrap(), q(-1, 12));
        assert_eq!(t.coeff(6).unwrap(), q(-1, 24));
    }

    #[test]
    fn one_by_one_is_bessel() {
        let t = tau_series(1, &YoungDiagram::new(&[1]), 12).unwrap();
        assert_eq!(t, bessel_series(2, 12));
    }

    #[test]
    fn too_many_rows_is_zero() {
        let t = tau_series(2, &YoungDiagram::new(&[1, 1, 1]), 12).unwrap();
        assert!(t.is_zero() && t.is_exact());
    }

    #[test]
    fn trace_translation_is_k_times() {
        let spec = ShiftedHankelSpec::tau(2, YoungDiagram::empty());
        let seq = BesselSeq { trunc: 14 };
        let t0 = apply_t(&spec, &seq, 0).unwrap();
        let tau = det_shifted(&spec, &seq).unwrap();
        assert!(t0.agrees_with(&tau.scale_q(&Rational::from(2))));
    }

    #[test]
    fn weighted_one_by_one() {
        let spec = ShiftedHankelSpec { k: 1, alpha: 3, x: YoungDiagram::empty(), y: YoungDiagram::empty() };
        let seq = RandomSeq { seed: 11 };
        let s0: Rational = apply_s(&spec, &seq, 0).unwrap();
        assert_eq!(s0, &Rational::from(3) * &seq.term(3).unwrap());
    }

    #[test]
    fn f_one_for_k_one() {
        let f = f_l_bruteforce(1, 1, 14).unwrap();
        assert_eq!(f.min_exp(), 3);
        assert_eq!(f.coeff(3).unwrap(), q(1, 6));
        assert_eq!(f_l_bruteforce(1, 0, 10).unwrap(), bessel_series(1, 10));
    }
}
