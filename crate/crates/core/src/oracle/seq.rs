use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::exactalg::{BiPoly, HalfSeries, QSeries, Rational, Ring};

/// A sequence {a_β} indexed by integers, valued in a ring.
pub trait Sequence<R: Ring> {
    fn term(&self, beta: i64) -> Result<R>;
}

/// I_n(2√x) as a series in u = √x, known below `trunc`. Uses I_{-n} = I_n.
pub fn bessel_series(n: i64, trunc: i64) -> QSeries {
    let n = n.abs();
    let mut terms = Vec::new();
    let mut j = 0;
    while n + 2 * j < trunc {
        let c = Rational::one()
            .checked_div(&(&Rational::factorial((n + j) as u64) * &Rational::factorial(j as u64)))
            .expect("factorials are nonzero");
        terms.push((n + 2 * j, c));
        j += 1;
    }
    HalfSeries::from_terms(terms, trunc)
}

/// a_β = I_β(2√x).
#[derive(Clone, Copy, Debug)]
pub struct BesselSeq {
    pub trunc: i64,
}

impl Sequence<QSeries> for BesselSeq {
    fn term(&self, beta: i64) -> Result<QSeries> {
        Ok(bessel_series(beta, self.trunc))
    }
}

/// g_β(x, t1, t2) = Σ t1^n t2^m / (n! m!) I_{2n+3m+β}(2√x), with t-orders
/// capped at (d1, d2). d2 = 0 gives the one-variable generating function.
#[derive(Clone, Copy, Debug)]
pub struct GeneratingSeq {
    pub trunc: i64,
    pub d1: u32,
    pub d2: u32,
}

impl Sequence<HalfSeries<BiPoly>> for GeneratingSeq {
    fn term(&self, beta: i64) -> Result<HalfSeries<BiPoly>> {
        let bound = (self.d1, self.d2);
        let mut acc: HalfSeries<BiPoly> = HalfSeries::zero_to(self.trunc);
        for n in 0..=self.d1 {
            for m in 0..=self.d2 {
                let w = &Rational::factorial(n as u64) * &Rational::factorial(m as u64);
                let c = BiPoly::monomial(n, m, w.recip()?, bound);
                let b = bessel_series(2 * n as i64 + 3 * m as i64 + beta, self.trunc);
                acc = acc.add(&b.map_coeffs(|r| c.scaled(r)));
            }
        }
        Ok(acc)
    }
}

/// Seeded pseudo-random rationals: numerators in [-20, 20], denominators in
/// [1, 10]. The value at β depends only on (seed, β).
#[derive(Clone, Copy, Debug)]
pub struct RandomSeq {
    pub seed: u64,
}

impl Sequence<Rational> for RandomSeq {
    fn term(&self, beta: i64) -> Result<Rational> {
        let mix = self.seed.wrapping_mul(0x9E37_79B9_7F4A_7C15) ^ (beta as u64).wrapping_mul(0xD1B5_4A32_D192_ED03);
        let mut rng = ChaCha8Rng::seed_from_u64(mix);
        let n: i64 = rng.gen_range(-20..=20);
        let d: i64 = rng.gen_range(1..=10);
        Rational::new(n, d)
    }
}
