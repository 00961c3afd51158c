//! Determinant identities on seeded random rational sequences.

use cuemom::oracle::identities::{
    hook_system, hook_system_vanishing, hook_translation, row_expansion, translation_by_rows,
    translation_to_row_hooks, weighted_translation,
};
use cuemom::oracle::{RandomSeq, ShiftedHankelSpec};
use cuemom::young::{hook, YoungDiagram};
use proptest::prelude::*;

fn small_diagram() -> impl Strategy<Value = YoungDiagram> {
    prop::collection::vec(0u32..3, 0..3).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        YoungDiagram::new(&v)
    })
}

fn row_vector(k: usize) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-2i64..8, k)
}

#[test]
fn hook_translation_on_twenty_seeds() {
    for seed in 0..20 {
        let seq = RandomSeq { seed };
        for k in 1..=4usize {
            let betas: Vec<i64> = (0..k as i64).map(|i| i + (seed as i64 % 3)).collect();
            for l in 2..=6 {
                let r = hook_translation(&seq, &betas, l).unwrap();
                assert!(r.is_none(), "seed {seed}: {}", r.unwrap());
            }
        }
    }
}

#[test]
fn hook_system_on_twenty_seeds() {
    for seed in 0..20 {
        let seq = RandomSeq { seed };
        for k in 1..=4usize {
            for l in 1..=6usize {
                let r = hook_system(&seq, k, 1, &YoungDiagram::empty(), l).unwrap();
                assert!(r.is_none(), "seed {seed}: {}", r.unwrap());
                let r = hook_system_vanishing(&seq, k, 1, &YoungDiagram::empty(), l).unwrap();
                assert!(r.is_none(), "seed {seed}: {}", r.unwrap());
            }
        }
    }
}

#[test]
fn translation_and_weighted_translation_on_twenty_seeds() {
    for seed in 0..20 {
        let seq = RandomSeq { seed };
        for k in 1..=4usize {
            for l in 1..=6 {
                let r = translation_to_row_hooks(&seq, k, 1, &YoungDiagram::empty(), l).unwrap();
                assert!(r.is_none(), "seed {seed}: {}", r.unwrap());
                let r = weighted_translation(&seq, k, seed as i64 % 5, l).unwrap();
                assert!(r.is_none(), "seed {seed}: {}", r.unwrap());
            }
        }
    }
}

#[test]
fn row_expansion_on_twenty_seeds() {
    for seed in 0..20 {
        let seq = RandomSeq { seed };
        for k in 1..=4usize {
            for l in 1..=6usize {
                let r = row_expansion(&seq, k, 1, &YoungDiagram::empty(), l).unwrap();
                assert!(r.is_none(), "seed {seed}: {}", r.unwrap());
            }
        }
    }
}

#[test]
fn column_diagram_too_tall_gives_zero() {
    let seq = RandomSeq { seed: 3 };
    let spec = ShiftedHankelSpec { k: 2, alpha: 0, x: YoungDiagram::empty(), y: hook(3, 3).unwrap() };
    let v = cuemom::oracle::det_shifted(&spec, &seq).unwrap();
    assert!(v.is_zero());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn translation_routes_agree(seed in any::<u64>(), k in 1usize..=4, h in 1i64..=6, y in small_diagram()) {
        let seq = RandomSeq { seed };
        let spec = ShiftedHankelSpec { k, alpha: 1, x: YoungDiagram::empty(), y: y.clone() };
        if let Some(betas) = spec.row_betas() {
            let r = translation_by_rows(&seq, &betas, &y, h).unwrap();
            prop_assert!(r.is_none(), "{}", r.unwrap());
        }
    }

    #[test]
    fn hook_translation_arbitrary_rows(seed in any::<u64>(), betas in (1usize..=4).prop_flat_map(row_vector), l in 2i64..=6) {
        let r = hook_translation(&RandomSeq { seed }, &betas, l).unwrap();
        prop_assert!(r.is_none(), "{}", r.unwrap());
    }

    #[test]
    fn translation_to_row_hooks_any_column_diagram(seed in any::<u64>(), k in 1usize..=4, alpha in -2i64..5, y in small_diagram(), l in 1i64..=6) {
        let r = translation_to_row_hooks(&RandomSeq { seed }, k, alpha, &y, l).unwrap();
        prop_assert!(r.is_none(), "{}", r.unwrap());
    }

    #[test]
    fn weighted_translation_random_alpha(seed in any::<u64>(), k in 1usize..=4, alpha in -3i64..8, l in 1i64..=6) {
        let r = weighted_translation(&RandomSeq { seed }, k, alpha, l).unwrap();
        prop_assert!(r.is_none(), "{}", r.unwrap());
    }

    #[test]
    fn hook_system_with_row_diagram(seed in any::<u64>(), k in 1usize..=4, alpha in 0i64..4, x in small_diagram(), l in 1usize..=6) {
        let seq = RandomSeq { seed };
        let r = hook_system(&seq, k, alpha, &x, l).unwrap();
        prop_assert!(r.is_none(), "{}", r.unwrap());
        let r = hook_system_vanishing(&seq, k, alpha, &x, l).unwrap();
        prop_assert!(r.is_none(), "{}", r.unwrap());
    }

    #[test]
    fn row_expansion_with_row_diagram(seed in any::<u64>(), k in 1usize..=3, x in small_diagram(), l in 1usize..=4) {
        let r = row_expansion(&RandomSeq { seed }, k, 1, &x, l).unwrap();
        prop_assert!(r.is_none(), "{}", r.unwrap());
    }
}

#[test]
fn weighted_identity_is_sensitive_to_alpha() {
    use cuemom::exactalg::{Rational, Ring};
    use cuemom::oracle::{apply_s, det_shifted};
    let seq = RandomSeq { seed: 11 };
    let (k, alpha, l) = (3usize, 2i64, 2i64);
    let spec = ShiftedHankelSpec { k, alpha, x: YoungDiagram::empty(), y: YoungDiagram::empty() };
    let lhs = apply_s(&spec, &seq, l).unwrap();
    let mut wrong = Rational::zero();
    for j in 1..=l {
        let s = ShiftedHankelSpec { k, alpha, x: YoungDiagram::empty(), y: hook(l, j).unwrap() };
        let w = Rational::from(2 * k as i64 - 2 * j + l + alpha + 1);
        let t = det_shifted(&s, &seq).unwrap().scaled(&w);
        wrong = if j % 2 == 1 { wrong.plus(&t) } else { wrong.minus(&t) };
    }
    assert!(!lhs.is_zero());
    assert_ne!(lhs, wrong);
}
