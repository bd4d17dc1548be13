mod common;

use numsemi::divisors::divisors_union;
use numsemi::feng_rao::{
    alpha_min, bound_lb, bound_u, delta_r, delta_r_with, feng_rao_closed_form, feng_rao_number,
    stable_index,
};
use numsemi::{oracle, NumericalSemigroup, SearchConfig};
use proptest::prelude::*;

/// Minimum over all r-subsets of (m, m + span].
fn brute_delta(s: &NumericalSemigroup, r: usize, m: usize, span: usize) -> usize {
    let mut best = usize::MAX;
    let mut stack = vec![(m + 1, Vec::new())];
    while let Some((from, chosen)) = stack.pop() {
        if chosen.len() == r {
            best = best.min(divisors_union(s, &chosen).len());
            continue;
        }
        for i in from..=m + span {
            let mut next = chosen.clone();
            next.push(i);
            stack.push((i + 1, next));
        }
    }
    best
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn search_matches_wide_brute_force(seed in any::<u64>(), r in 1usize..=3, m in 0usize..8) {
        let s = common::random_semigroup(seed, 5);
        let d = delta_r(&s, r, m).unwrap();
        let span = 2 * s.conductor() as usize + r + 6;
        prop_assert_eq!(d.value, brute_delta(&s, r, m, span));
        prop_assert_eq!(d.witness.len(), r);
        prop_assert!(d.witness[0] > m);
        prop_assert!(d.witness.windows(2).all(|w| w[0] < w[1]));
        prop_assert_eq!(divisors_union(&s, &d.witness).len(), d.value);
    }

    #[test]
    fn delta_is_monotone(seed in any::<u64>(), r in 1usize..=3, m in 0usize..10) {
        let s = common::random_semigroup(seed, 8);
        let here = delta_r(&s, r, m).unwrap().value;
        prop_assert!(here <= delta_r(&s, r, m + 1).unwrap().value);
        prop_assert!(here < delta_r(&s, r + 1, m).unwrap().value);
    }

    #[test]
    fn delta_is_affine_past_the_stable_index(seed in any::<u64>(), r in 2usize..=3) {
        let s = common::random_semigroup(seed, 7);
        let e = feng_rao_number(&s, r).unwrap();
        let g = s.genus() as i64;
        let m0 = stable_index(&s);
        for m in m0..m0 + 3 {
            let d = delta_r(&s, r, m).unwrap().value as i64;
            prop_assert_eq!(d, m as i64 + 2 - g + e);
        }
        // ℕ₀ is the one case below r
        prop_assert!(e >= r as i64 - i64::from(g == 0));
        prop_assert!(e <= s.lambda(r - 1) as i64);
        let first_past_c = s.conductor() as usize - s.genus();
        for m in first_past_c..m0 {
            let d = delta_r(&s, r, m).unwrap().value as i64;
            prop_assert!(d >= m as i64 + 2 - g + e);
        }
        for ell in 2..=5 {
            let lb = bound_lb(&s, r, ell).unwrap();
            prop_assert!(lb.value <= e);
            // no improvement over E_r >= r in these regimes
            if r <= 2 * (ell - 1) || s.n_ell(ell - 1) == 0 {
                prop_assert!(!lb.improves_on(r));
            }
        }
        prop_assert!(bound_u(&s, r).unwrap().value <= e);
        if let Some((closed, _)) = feng_rao_closed_form(&s, r) {
            prop_assert_eq!(closed, e);
        }
    }

    #[test]
    fn worker_count_does_not_change_results(seed in any::<u64>(), r in 2usize..=4) {
        let s = common::random_semigroup(seed, 10);
        let m = stable_index(&s);
        let one = delta_r_with(&s, r, m, &SearchConfig { budget: None, workers: 1 }).unwrap();
        let many = delta_r_with(&s, r, m, &SearchConfig { budget: None, workers: 4 }).unwrap();
        prop_assert_eq!(one, many);
    }
}

#[test]
fn alpha_matches_exhaustive_minimum() {
    for a1 in 0..3i64 {
        for ar in a1..a1 + 13 {
            for ell in 1..=4usize {
                for r in 1..=(ar - a1 + 1) as usize {
                    let brute = oracle::alpha_min(a1, ar, r, ell);
                    let closed = alpha_min(a1, ar, r, ell).ok();
                    if ell >= 2 && r >= ell {
                        assert_eq!(closed, brute, "a1={a1} ar={ar} r={r} ell={ell}");
                    } else {
                        assert_eq!(closed, None);
                    }
                }
            }
        }
    }
}

#[test]
fn tiny_budget_is_reported() {
    let s = NumericalSemigroup::from_generators(&[5, 7, 9]).unwrap();
    let config = SearchConfig {
        budget: Some(3),
        workers: 1,
    };
    let m = stable_index(&s);
    assert!(matches!(
        delta_r_with(&s, 3, m, &config),
        Err(numsemi::Error::BudgetExceeded(3))
    ));
}

#[test]
fn sharpness_matches_prediction_outside_known_exceptions() {
    use numsemi::feng_rao::{sharpness_check, sharpness_predicted};
    let config = SearchConfig::unlimited();
    for s in NumericalSemigroup::all_up_to_genus(8) {
        let g = s.genus();
        // {0, g+1, →}; for g = 1 this is ⟨2,3⟩, which is hyperelliptic
        let ordinary = g > 1 && s.conductor() == s.multiplicity();
        for r in 2..=6 {
            for ell in 2..=4 {
                let sharp = sharpness_check(&s, r, ell, &config).unwrap();
                let predicted = sharpness_predicted(&s, r, ell);
                // sharp but not predicted: ℕ₀, ⟨2,3⟩ at ℓ = 2 past r = 2, and ordinary
                // semigroups at r = ℓ = 2
                let exception =
                    g == 0 || (g == 1 && r >= 3 && ell == 2) || (ordinary && r == 2 && ell == 2);
                if exception {
                    assert!(sharp && !predicted, "{s:?} r={r} ell={ell}");
                } else {
                    assert_eq!(sharp, predicted, "{s:?} r={r} ell={ell}");
                }
            }
        }
    }
}
