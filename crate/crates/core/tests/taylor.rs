//! Taylor data of τ_k.

use cuemom::exactalg::Rational;
use cuemom::oracle::tau_series;
use cuemom::taylor::{a_from_c, eta_coeffs, painleve_residual, tau_taylor, TaylorData};
use cuemom::young::YoungDiagram;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10))]

    #[test]
    fn eta_round_trip_and_residual(k in 1usize..=5, n in 6usize..=12) {
        let a = tau_taylor(k, n);
        prop_assume!(n > 2 * k + 1);
        let c = eta_coeffs(k, n, &a).unwrap();
        prop_assert_eq!(a_from_c(k, &c, n), a);
        let r = painleve_residual(k, &c, n - 2).unwrap();
        prop_assert!(r.is_known_zero());
    }

    #[test]
    fn recursion_matches_determinant(k in 1usize..=3, n in 1usize..=10) {
        let a = tau_taylor(k, n);
        let base = (k * k) as i64;
        let tau = tau_series(k, &YoungDiagram::empty(), base + 2 * n as i64).unwrap();
        let lead = tau.coeff(base).unwrap();
        for (j, aj) in a.iter().enumerate() {
            let want = tau.coeff(base + 2 * j as i64).unwrap().checked_div(&lead).unwrap();
            prop_assert_eq!(aj, &want);
        }
    }
}

#[test]
fn taylor_data_bundles_both_sequences() {
    let t = TaylorData::new(1, 4).unwrap();
    assert_eq!(t.a, vec![Rational::one(), Rational::frac(1, 2), Rational::frac(1, 12), Rational::frac(1, 144)]);
    assert_eq!(t.c[3], Rational::frac(-1, 3072));
}
