//! The hook recursion against brute-force determinants, its shape
//! invariants, and the agreement of its variants.

use cuemom::besselrec::{
    check_f_shape, check_level_shape, eval_at_k, f_expr_fixed, f_expr_symbolic, f_expr_truncated, laurent,
    tau_hook_exprs, RecState, Route,
};
use cuemom::exactalg::{PolyK, Rational, Ring, TauExpr};
use cuemom::moments::{LastTerm, ThirdOrderState};
use cuemom::oracle::{f_l_bruteforce, g_partial_bivariate, g_partial_bruteforce, tau_series};
use cuemom::suite::structure_failure;
use cuemom::young::{hook, YoungDiagram};
use proptest::prelude::*;

#[test]
fn f_l_matches_determinant_sum() {
    for k in 1..=3usize {
        for l in 1..=4usize {
            let order = (k * k + 2 * l + 8) as i64;
            let trunc = order + 1 + 4 * l as i64;
            let tau = tau_series(k, &YoungDiagram::empty(), trunc).unwrap();
            let want = f_l_bruteforce(k, l as u32, trunc).unwrap();
            for route in [Route::TwoOne, Route::Expansion] {
                let got = f_expr_fixed(k, l, route).unwrap().eval(&tau);
                assert!(got.trunc() > order && want.trunc() > order);
                assert!(got.agrees_below(&want, order + 1).unwrap(), "k={k} l={l} {route:?}");
            }
            let tr = f_expr_truncated(k, l).unwrap().eval(&tau);
            let t = tr.trunc().min(want.trunc());
            assert!(tr.agrees_below(&want, t).unwrap(), "truncated k={k} l={l}");
        }
    }
}

#[test]
fn routes_are_formally_equal() {
    for l in 1..=5usize {
        assert_eq!(f_expr_symbolic(l, Route::TwoOne).unwrap(), f_expr_symbolic(l, Route::Expansion).unwrap(), "l={l}");
    }
}

#[test]
fn symbolic_shape() {
    for l in 1..=5usize {
        let e = f_expr_symbolic(l, Route::TwoOne).unwrap();
        check_f_shape(l, &e).unwrap();
        assert!(structure_failure(l, &e).is_none(), "l={l}");
    }
}

#[test]
fn level_entries_have_bounded_shape() {
    let mut st = RecState::new(PolyK::k(), None, false, Route::TwoOne).unwrap();
    st.run(4).unwrap();
    let entries: Vec<_> = st.entries().map(|(k, v)| (*k, v.clone())).collect();
    assert!(!entries.is_empty());
    for ((i, l), v) in entries {
        assert_eq!(v.len(), l);
        for e in &v {
            check_level_shape(i, l, e).unwrap();
        }
    }
}

#[test]
fn first_f_closed_form_in_third_order_state() {
    let mut st = ThirdOrderState::new(PolyK::k(), LastTerm::Derived);
    let k = PolyK::k();
    let expect = TauExpr::term(1, laurent(vec![(0, k.scaled(&Rational::from(-2)))]))
        .add(&TauExpr::term(0, laurent(vec![(0, k.clone()), (-2, k.pow(3))])));
    assert_eq!(st.big_f(1, 0).unwrap(), expect);
}

#[test]
fn bivariate_and_multinomial_oracles_agree() {
    for k in 1..=2usize {
        for (n1, n2) in [(0u32, 1u32), (1, 1), (2, 0), (0, 2)] {
            for y in [YoungDiagram::empty(), hook(2, 1).unwrap()] {
                let a = g_partial_bruteforce(k, &y, n1, n2, 30).unwrap();
                let b = g_partial_bivariate(k, &y, n1, n2, 30).unwrap();
                let t = a.trunc().min(b.trunc());
                assert!(t > 10);
                assert!(a.agrees_below(&b, t).unwrap(), "k={k} ({n1},{n2}) Y={y}");
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn symbolic_specializes_to_fixed(k in 1i64..=6, l in 1usize..=4) {
        let s = eval_at_k(&f_expr_symbolic(l, Route::TwoOne).unwrap(), &Rational::from(k));
        prop_assert_eq!(s, f_expr_fixed(k as usize, l, Route::TwoOne).unwrap());
    }

    #[test]
    fn hook_expressions_match_determinants(k in 1usize..=3, l in 1usize..=4) {
        let tau = tau_series(k, &YoungDiagram::empty(), 40).unwrap();
        let exprs = tau_hook_exprs(&Rational::from(k as i64), l).unwrap();
        for (j, e) in exprs.iter().enumerate() {
            let want = tau_series(k, &hook(l as i64, j as i64 + 1).unwrap(), 40).unwrap();
            let got = e.eval(&tau);
            let t = got.trunc().min(want.trunc());
            prop_assert!(t > (k * k) as i64);
            prop_assert!(got.agrees_below(&want, t).unwrap());
        }
    }
}
