mod common;

use std::sync::Arc;

use numsemi::ideal::enumerate_attaining_ideals;
use numsemi::{oracle, NumericalSemigroup, SemigroupIdeal};
use proptest::prelude::*;

fn whole_intersection(s: &Arc<NumericalSemigroup>, indices: &[usize]) -> SemigroupIdeal {
    indices.iter().fold(SemigroupIdeal::whole(s), |acc, &i| {
        acc.intersect(&SemigroupIdeal::irreducible(s, i)).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn every_small_ideal_obeys_the_bound(seed in any::<u64>()) {
        let s = Arc::new(common::random_semigroup(seed, 10));
        let attaining: Vec<Vec<u64>> = enumerate_attaining_ideals(&s, 6 + 2 * s.genus())
            .into_iter()
            .map(|(_, i)| i.complement().to_vec())
            .collect();
        for ideal in oracle::enumerate_ideals(&s, 6) {
            let cert = ideal.frobenius_bound();
            prop_assert_eq!(cert.frobenius, oracle::ideal_frobenius(&ideal));
            prop_assert!(cert.holds());
            if ideal.difference() == 0 {
                continue;
            }
            let ch = ideal.characterization().unwrap();
            prop_assert!(ch.all_agree(), "{:?} on {:?}: {:?}", ideal.complement(), s, ch);
            prop_assert_eq!(
                ch.frobenius_attained,
                attaining.iter().any(|t| t.as_slice() == ideal.complement())
            );
        }
    }

    #[test]
    fn decomposition_reconstructs(seed in any::<u64>()) {
        let s = Arc::new(common::random_semigroup(seed, 10));
        for ideal in oracle::enumerate_ideals(&s, 5) {
            let parts = ideal.irreducible_decomposition();
            prop_assert_eq!(&whole_intersection(&s, &parts), &ideal);
            // irredundant: dropping any part gives a strictly larger ideal
            for k in 0..parts.len() {
                let mut rest = parts.clone();
                rest.remove(k);
                prop_assert!(whole_intersection(&s, &rest).difference() < ideal.difference());
            }
        }
    }

    #[test]
    fn intersection_laws(seed in any::<u64>(), a in 0u64..40, b in 0u64..40) {
        let s = Arc::new(common::random_semigroup(seed, 12));
        let (Ok(p), Ok(q)) = (SemigroupIdeal::principal(&s, a), SemigroupIdeal::principal(&s, b)) else {
            return Ok(());
        };
        let pq = p.intersect(&q).unwrap();
        prop_assert_eq!(&pq, &q.intersect(&p).unwrap());
        prop_assert_eq!(&p.intersect(&p).unwrap(), &p);
        prop_assert_eq!(&p.intersect(&SemigroupIdeal::whole(&s)).unwrap(), &p);
        for x in -2..(a + b) as i64 + s.conductor() as i64 + 2 {
            prop_assert_eq!(pq.contains(x), p.contains(x) && q.contains(x));
        }
        prop_assert_eq!(p.difference() as u64, a);
        prop_assert!(p.is_principal());
        prop_assert_eq!(p.min_element(), a);
    }
}

#[test]
fn mismatched_ambients_are_rejected() {
    let a = Arc::new(NumericalSemigroup::from_generators(&[2, 3]).unwrap());
    let b = Arc::new(NumericalSemigroup::from_generators(&[3, 4]).unwrap());
    let err = SemigroupIdeal::whole(&a).intersect(&SemigroupIdeal::whole(&b));
    assert_eq!(err.unwrap_err(), numsemi::Error::AmbientMismatch);
}

#[test]
fn complements_must_be_divisor_closed() {
    let s = Arc::new(NumericalSemigroup::from_generators(&[4, 5]).unwrap());
    assert!(SemigroupIdeal::from_complement(&s, [0, 5]).is_ok());
    assert!(SemigroupIdeal::from_complement(&s, [5]).is_err());
    assert!(SemigroupIdeal::from_complement(&s, [0, 1]).is_err());
}
