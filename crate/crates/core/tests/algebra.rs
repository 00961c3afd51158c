//! Ring laws, truncation bookkeeping, differentiation and diagram
//! normalization.

use cuemom::exactalg::{q, HalfSeries, PolyK, QSeries, Rational, Ring, TauExpr};
use cuemom::oracle::{det, hankel_matrix, RandomSeq};
use cuemom::young::{normalize_shifts, weak_compositions, Normalized, ShiftVector};
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    (-30i64..=30, 1i64..=12).prop_map(|(n, d)| q(n, d))
}

fn poly() -> impl Strategy<Value = PolyK> {
    prop::collection::vec(rational(), 0..5).prop_map(PolyK::new)
}

/// Series with min exponent in [-4, 2] and a known range of at most 8.
fn series() -> impl Strategy<Value = QSeries> {
    (-4i64..=2, prop::collection::vec(rational(), 0..6), prop::option::of(0i64..8)).prop_map(|(m, c, t)| match t {
        Some(t) => HalfSeries::new(m, c, m + t),
        None => HalfSeries::exact(m, c),
    })
}

fn ring_laws<R: Ring + std::fmt::Debug>(a: &R, b: &R, c: &R) -> Result<(), TestCaseError> {
    prop_assert_eq!(a.plus(b), b.plus(a));
    prop_assert_eq!(a.times(b), b.times(a));
    prop_assert_eq!(a.plus(b).plus(c), a.plus(&b.plus(c)));
    prop_assert_eq!(a.times(b).times(c), a.times(&b.times(c)));
    prop_assert_eq!(a.times(&b.plus(c)), a.times(b).plus(&a.times(c)));
    prop_assert_eq!(a.minus(a), R::zero());
    prop_assert_eq!(a.times(&R::one()), a.clone());
    prop_assert_eq!(a.plus(&a.negated()), R::zero());
    Ok(())
}

proptest! {
    #[test]
    fn rational_ring(a in rational(), b in rational(), c in rational()) {
        ring_laws(&a, &b, &c)?;
    }

    #[test]
    fn polynomial_ring(a in poly(), b in poly(), c in poly(), k in rational()) {
        ring_laws(&a, &b, &c)?;
        prop_assert_eq!(a.times(&b).eval(&k), a.eval(&k).times(&b.eval(&k)));
    }

    #[test]
    fn exact_series_ring(a in prop::collection::vec(rational(), 0..5), b in prop::collection::vec(rational(), 0..5), c in prop::collection::vec(rational(), 0..5)) {
        let (a, b, c) = (HalfSeries::exact(-1, a), HalfSeries::exact(0, b), HalfSeries::exact(2, c));
        ring_laws(&a, &b, &c)?;
    }

    #[test]
    fn truncation_propagates(a in series(), b in series()) {
        let s = a.add(&b);
        prop_assert_eq!(s.trunc(), a.trunc().min(b.trunc()));
        let p = a.mul(&b);
        let expect = (a.trunc().saturating_add(b.min_exp())).min(b.trunc().saturating_add(a.min_exp()));
        if !a.is_known_zero() && !b.is_known_zero() {
            prop_assert!(p.trunc() >= expect.min(cuemom::exactalg::UNBOUNDED));
        }
        // every known coefficient of the product is the truncated convolution
        for e in p.min_exp()..p.trunc().min(p.min_exp() + 12) {
            let mut acc = Rational::zero();
            for (i, ci) in a.terms() {
                if let Ok(cj) = b.coeff(e - i) {
                    acc = acc.plus(&ci.times(&cj));
                }
            }
            prop_assert_eq!(p.coeff(e).unwrap(), acc);
        }
    }

    #[test]
    fn leibniz(a in series(), b in series()) {
        let lhs = a.mul(&b).ddx();
        let rhs = a.ddx().mul(&b).add(&a.mul(&b.ddx()));
        prop_assert!(lhs.agrees_with(&rhs));
        let lhs = a.mul(&b).ddu();
        let rhs = a.ddu().mul(&b).add(&a.mul(&b.ddu()));
        prop_assert!(lhs.agrees_with(&rhs));
    }

    #[test]
    fn tau_expression_derivative_commutes_with_evaluation(p0 in prop::collection::vec(rational(), 0..4), p1 in prop::collection::vec(rational(), 0..4), tau in prop::collection::vec(rational(), 1..8)) {
        let e = TauExpr::term(0, HalfSeries::exact(-2, p0)).add(&TauExpr::term(1, HalfSeries::exact(0, p1)));
        let t = HalfSeries::new(0, tau.clone(), 2 * tau.len() as i64);
        let lhs = e.ddx().eval(&t);
        let rhs = e.eval(&t).ddx();
        prop_assert!(lhs.agrees_with(&rhs));
    }

    #[test]
    fn normalization_sign_matches_determinant(seed in any::<u64>(), shifts in prop::collection::vec(0u32..4, 1..5)) {
        let k = shifts.len();
        let sv = ShiftVector { shifts };
        let seq = RandomSeq { seed };
        let rows: Vec<i64> = (0..k as i64).collect();
        let direct = det(&hankel_matrix(&rows, &sv.offsets(), &seq, false).unwrap());
        match normalize_shifts(&sv) {
            Normalized::Zero => prop_assert!(direct.is_zero()),
            Normalized::Diagram(y, sign) => {
                let cols = y.column_offsets(k).unwrap();
                let canon = det(&hankel_matrix(&rows, &cols, &seq, false).unwrap());
                let canon = if sign < 0 { canon.negated() } else { canon };
                prop_assert_eq!(direct, canon);
                prop_assert_eq!(y.length(), sv.shifts.iter().sum::<u32>());
            }
        }
    }
}

#[test]
fn composition_counts() {
    for l in 0..6u32 {
        for k in 1..5usize {
            let n = weak_compositions(l, k).count() as i64;
            let expect = Rational::binomial(l as i64 + k as i64 - 1, k as i64 - 1);
            assert_eq!(Rational::from(n), expect, "l={l} k={k}");
        }
    }
}

#[test]
fn truncated_coefficient_is_an_error() {
    let s: QSeries = HalfSeries::new(0, vec![q(1, 1), q(2, 1)], 2);
    assert!(s.coeff(1).is_ok());
    assert!(s.coeff(2).is_err());
}
