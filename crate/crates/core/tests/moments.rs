//! Moment assembly, R_M reconstruction and the third-order recursion.

use cuemom::exactalg::{q, PolyK, RatFuncK, Rational, Ring};
use cuemom::moments::{barnes_ratio, f1, f2, f3, f3_with, r_reconstruct, toeplitz_f2_check, LastTerm, ThirdOrderState};
use cuemom::oracle::{g_partial_bruteforce, tau_series};
use cuemom::suite::known_r;
use cuemom::taylor::tau_taylor;
use cuemom::young::{hook, YoungDiagram};
use proptest::prelude::*;

fn same_function(a: &RatFuncK, b: &RatFuncK) -> bool {
    a.num().times(b.den()) == b.num().times(a.den())
}

/// a_j read off the Bessel determinant directly.
fn oracle_a(k: usize, n: usize) -> Vec<Rational> {
    let base = (k * k) as i64;
    let tau = tau_series(k, &YoungDiagram::empty(), base + 2 * n as i64 + 2).unwrap();
    let lead = tau.coeff(base).unwrap();
    (0..n).map(|j| tau.coeff(base + 2 * j as i64).unwrap().checked_div(&lead).unwrap()).collect()
}

#[test]
fn f1_routes_agree() {
    for (two_m, k) in [(2usize, 1usize), (4, 2), (2, 2), (6, 3)] {
        let a = tau_taylor(k, two_m + 1);
        let b = oracle_a(k, two_m + 1);
        assert_eq!(f1(two_m, k, &a).unwrap(), f1(two_m, k, &b).unwrap(), "2M={two_m} k={k}");
    }
    assert_eq!(f1(2, 1, &tau_taylor(1, 3)).unwrap().value, q(1, 12));
}

#[test]
fn zeroth_moments_are_the_barnes_ratio() {
    for k in 1..=5 {
        let br = barnes_ratio(k);
        assert_eq!(f2(0, k).unwrap().value, br);
        assert_eq!(f1(0, k, &tau_taylor(k, 1)).unwrap().value, br);
        assert_eq!(f2(0, k).unwrap().r, Rational::one());
    }
    assert_eq!(barnes_ratio(3), q(1, 8640));
}

#[test]
fn moment_range_is_checked() {
    assert!(f2(3, 2).is_err());
    assert!(f3(2, 1).is_err());
}

#[test]
fn third_order_small_values() {
    assert_eq!(f3(1, 1).unwrap().value, q(1, 448));
    assert_eq!(f3(1, 2).unwrap().value, q(1, 57600));
    assert_eq!(f3(2, 2).unwrap().value, q(41, 1419264000));
}

#[test]
fn r1_from_six_samples() {
    let ks: Vec<usize> = (1..=6).collect();
    let r = r_reconstruct(2, 1, &ks, None).unwrap();
    assert!(same_function(&r, &known_r(1).unwrap()));
}

#[test]
fn r2_numerator_is_recovered() {
    let ks: Vec<usize> = (2..=14).collect();
    let r = r_reconstruct(2, 2, &ks, Some((4, 8))).unwrap();
    let more: Vec<usize> = (2..=16).collect();
    assert_eq!(r_reconstruct(2, 2, &more, Some((4, 8))).unwrap(), r);
    assert!(r_reconstruct(2, 2, &ks[1..], Some((4, 8))).is_err());
    assert!(same_function(&r, &known_r(2).unwrap()));
    let num = r.num().scale(&r.num().leading().recip().unwrap()).scale(&Rational::from(16));
    assert_eq!(num, PolyK::from_ints(&[-99, -32, 40, 64, 16]));
}

#[test]
fn r_of_zeroth_moment_is_one() {
    let r = r_reconstruct(1, 0, &[1, 2, 3, 4], None).unwrap();
    assert!(same_function(&r, &RatFuncK::from_poly(PolyK::one())));
}

#[test]
fn printed_last_term_disagrees_at_three_rows() {
    let k = 3usize;
    let tau = tau_series(k, &YoungDiagram::empty(), 60).unwrap();
    let want = g_partial_bruteforce(k, &hook(3, 1).unwrap(), 1, 1, 60).unwrap();
    let mut derived = ThirdOrderState::new(Rational::from(3), LastTerm::Derived);
    let mut printed = ThirdOrderState::new(Rational::from(3), LastTerm::Printed);
    let d = derived.vec(1, 1, 3).unwrap()[0].eval(&tau);
    let p = printed.vec(1, 1, 3).unwrap()[0].eval(&tau);
    let t = d.trunc().min(want.trunc()).min(p.trunc());
    assert!(t > 20);
    assert!(d.agrees_below(&want, t).unwrap());
    assert!(!p.agrees_below(&want, t).unwrap());
    // with at most two rows the two forms give the same moments
    assert_eq!(f3_with(1, 2, LastTerm::Printed).unwrap(), f3(1, 2).unwrap());
}

#[test]
fn toeplitz_zeroth_is_barnes_ratio() {
    for k in 1..=3 {
        assert_eq!(toeplitz_f2_check(0, k).unwrap(), barnes_ratio(k));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn moment_splits_into_barnes_ratio_times_r(k in 1usize..=4, m in 0usize..=2) {
        prop_assume!(m <= k);
        let r = f2(m, k).unwrap();
        prop_assert_eq!(&r.barnes_ratio * &r.r, r.value.clone());
        let s = f3(m.min(1), k).unwrap();
        prop_assert_eq!(&s.barnes_ratio * &s.r, s.value);
    }

    #[test]
    fn r_functions_match_closed_forms(m in 1usize..=3, dk in 0usize..=6) {
        let k = m + dk;
        let want = known_r(m).unwrap().eval(&Rational::from(k as i64)).unwrap();
        prop_assert_eq!(f2(m, k).unwrap().r, want);
    }
}
