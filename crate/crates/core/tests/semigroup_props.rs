mod common;

use numsemi::divisors::{self, DivisorTable};
use numsemi::{oracle, NumericalSemigroup};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn nu_equals_index_minus_gaps_plus_pairs(seed in any::<u64>()) {
        let s = common::random_semigroup(seed, 30);
        let c = s.conductor() as usize;
        let table = DivisorTable::new(&s);
        for i in 0..=3 * c {
            let row = table.row(i);
            let (below, pairs) = oracle::gap_counts(&s, i);
            prop_assert_eq!(row.nu, oracle::nu(&s, i));
            prop_assert_eq!(row.gaps_below, below);
            prop_assert_eq!(row.gap_pairs, pairs);
            prop_assert_eq!(row.nu + below, i + pairs + 1);
        }
    }

    #[test]
    fn gap_runs_match_scan(seed in any::<u64>()) {
        let s = common::random_semigroup(seed, 25);
        let profile = s.gap_interval_profile();
        prop_assert_eq!(profile.total(), s.genus());
        for ell in 1..=profile.max_run() + 1 {
            prop_assert_eq!(s.n_ell(ell), oracle::gamma_count(&s, ell));
            prop_assert!(s.n_ell(ell + 1) <= s.n_ell(ell));
        }
        for run in &profile.runs {
            prop_assert!(s.contains(run.start as i64 - 1));
            prop_assert!(s.contains((run.start + run.len as u64) as i64));
        }
    }

    #[test]
    fn index_and_element_round_trip(seed in any::<u64>()) {
        let s = common::random_semigroup(seed, 25);
        let g = s.genus();
        let c = s.conductor() as usize;
        let mut prev = None;
        for i in 0..2 * c + 5 {
            let x = s.lambda(i);
            prop_assert!(s.contains(x as i64));
            prop_assert_eq!(s.index_of(x as i64).unwrap(), i);
            if let Some(p) = prev {
                prop_assert!(x > p);
                prop_assert!((p + 1..x).all(|y| !s.contains(y as i64)));
            }
            if x >= s.conductor() {
                prop_assert_eq!(x as usize, i + g);
            }
            prev = Some(x);
        }
    }

    #[test]
    fn gaps_and_generators_agree(seed in any::<u64>()) {
        let s = common::random_generated(seed);
        let again = NumericalSemigroup::from_gaps(s.gaps()).unwrap();
        prop_assert_eq!(&again, &s);
        let gens = s.minimal_generators();
        prop_assert_eq!(&NumericalSemigroup::from_generators(&gens).unwrap(), &s);
        prop_assert_eq!(gens[0], s.multiplicity());
        prop_assert_eq!(s.frobenius(), s.conductor() as i64 - 1);
        prop_assert_eq!(s.is_symmetric(), s.frobenius() == 2 * s.genus() as i64 - 1);
    }

    #[test]
    fn union_matches_pointwise(seed in any::<u64>(), a in 0usize..30, b in 0usize..30) {
        let s = common::random_semigroup(seed, 15);
        let union = divisors::divisors_union(&s, &[a, b]);
        for y in 0..=s.lambda(a.max(b)) {
            let expect = divisors::divisors(&s, a).contains(&y) || divisors::divisors(&s, b).contains(&y);
            prop_assert_eq!(union.contains(&y), expect);
        }
    }
}

#[test]
fn children_have_one_more_gap() {
    for s in NumericalSemigroup::all_up_to_genus(7) {
        for child in s.children() {
            assert_eq!(child.genus(), s.genus() + 1);
            assert!(child.frobenius() > s.frobenius());
        }
    }
}
