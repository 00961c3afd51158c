use std::collections::BTreeSet;

use super::poly::PolyK;
use super::ratfunc::{ratfunc_reduce, RatFuncK};
use super::rational::Rational;
use crate::error::{Error, Result};

/// Basis of the null space of a dense rational matrix.
pub fn null_space(mut m: Vec<Vec<Rational>>, cols: usize) -> Vec<Vec<Rational>> {
    let rows = m.len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip().expect("nonzero pivot");
        for v in m[r].iter_mut() {
            *v = &*v * &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..cols {
                    let t = &m[r][j] * &f;
                    m[i][j] = &m[i][j] - &t;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    let pivot_set: BTreeSet<usize> = pivots.iter().copied().collect();
    let mut basis = Vec::new();
    for free in (0..cols).filter(|c| !pivot_set.contains(c)) {
        let mut v = vec![Rational::zero(); cols];
        v[free] = Rational::one();
        for (row, &pc) in pivots.iter().enumerate() {
            v[pc] = -&m[row][free];
        }
        basis.push(v);
    }
    basis
}

fn check_distinct(samples: &[(Rational, Rational)]) -> Result<()> {
    let mut seen = BTreeSet::new();
    for (k, _) in samples {
        if !seen.insert(k.clone()) {
            return Err(Error::DuplicateSample(k.to_string()));
        }
    }
    Ok(())
}

fn fits(r: &RatFuncK, samples: &[(Rational, Rational)]) -> bool {
    samples.iter().all(|(k, v)| r.eval(k).is_ok_and(|e| &e == v))
}

/// Rational function with numerator degree ≤ `num_deg` and denominator
/// degree ≤ `den_deg` through all samples. num_deg + den_deg + 1 samples
/// determine it; with exactly that many, every solution of the linear system
/// must give the same function.
pub fn rational_interpolate_degrees(
    samples: &[(Rational, Rational)],
    num_deg: usize,
    den_deg: usize,
) -> Result<RatFuncK> {
    check_distinct(samples)?;
    let need = num_deg + den_deg + 1;
    if samples.len() < need {
        return Err(Error::TooFewSamples { have: samples.len(), need });
    }
    let cols = num_deg + den_deg + 2;
    let rows: Vec<Vec<Rational>> = samples
        .iter()
        .map(|(k, v)| {
            let mut row = Vec::with_capacity(cols);
            let mut p = Rational::one();
            for _ in 0..=num_deg {
                row.push(p.clone());
                p = &p * k;
            }
            let mut p = Rational::one();
            for _ in 0..=den_deg {
                row.push(-&(&p * v));
                p = &p * k;
            }
            row
        })
        .collect();
    let exact_count = samples.len() == need;
    let mut found: Option<RatFuncK> = None;
    for v in null_space(rows, cols) {
        let num = PolyK::new(v[..=num_deg].to_vec());
        let den = PolyK::new(v[num_deg + 1..].to_vec());
        if den.is_zero() {
            if exact_count {
                return Err(Error::NoRationalFunction);
            }
            continue;
        }
        let r = ratfunc_reduce(num, den)?;
        if !fits(&r, samples) {
            if exact_count {
                return Err(Error::NoRationalFunction);
            }
            continue;
        }
        match &found {
            None if !exact_count => return Ok(r),
            None => found = Some(r),
            Some(f) if *f == r => {}
            Some(_) => return Err(Error::NoRationalFunction),
        }
    }
    found.ok_or(Error::NoRationalFunction)
}

/// Lowest-degree rational function with numerator and denominator degree
/// ≤ `max_deg` matching every sample; needs ≥ 2·max_deg + 2 distinct points.
pub fn rational_interpolate(samples: &[(Rational, Rational)], max_deg: usize) -> Result<RatFuncK> {
    check_distinct(samples)?;
    let need = 2 * max_deg + 2;
    if samples.len() < need {
        return Err(Error::TooFewSamples { have: samples.len(), need });
    }
    for total in 0..=2 * max_deg {
        for d in 0..=total.min(max_deg) {
            let n = total - d;
            if n > max_deg {
                continue;
            }
            if let Ok(r) = rational_interpolate_degrees(samples, n, d) {
                return Ok(r);
            }
        }
    }
    Err(Error::NoRationalFunction)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::ring::Ring;

    fn pts(f: impl Fn(i64) -> Rational, ks: std::ops::RangeInclusive<i64>) -> Vec<(Rational, Rational)> {
        ks.map(|k| (Rational::from(k), f(k))).collect()
    }

    #[test]
    fn reciprocal_of_linear() {
        let s = pts(|k| Rational::frac(1, k + 1), 0..=3);
        let r = rational_interpolate(&s, 1).unwrap();
        assert_eq!(r.num(), &PolyK::one());
        assert_eq!(r.den(), &PolyK::from_ints(&[1, 1]));
    }

    #[test]
    fn identity_function() {
        let r = rational_interpolate(&pts(Rational::from, 0..=3), 1).unwrap();
        assert_eq!(r.num(), &PolyK::k());
        assert_eq!(r.den(), &PolyK::one());
    }

    #[test]
    fn errors() {
        let s = vec![(Rational::one(), Rational::one()), (Rational::one(), Rational::zero())];
        assert!(matches!(rational_interpolate(&s, 0), Err(Error::DuplicateSample(_))));
        let s = pts(|k| Rational::from(k * k * k), 0..=3);
        assert_eq!(rational_interpolate(&s, 1), Err(Error::NoRationalFunction));
        assert!(rational_interpolate(&pts(Rational::from, 0..=1), 1).is_err());
    }
}
