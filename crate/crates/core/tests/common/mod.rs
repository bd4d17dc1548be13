#![allow(dead_code)]

use numsemi::NumericalSemigroup;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// A random walk down the semigroup tree to a random genus `≤ max_genus`.
pub fn random_semigroup(seed: u64, max_genus: usize) -> NumericalSemigroup {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let target = rng.gen_range(0..=max_genus);
    walk_to_genus(&mut rng, target)
}

/// Walks are restarted when they hit a leaf early; after many failed
/// attempts the deepest semigroup seen is returned.
pub fn walk_to_genus(rng: &mut ChaCha8Rng, target: usize) -> NumericalSemigroup {
    let mut deepest = NumericalSemigroup::naturals();
    for _ in 0..1000 {
        let mut s = NumericalSemigroup::naturals();
        while s.genus() < target {
            let kids = s.children();
            if kids.is_empty() {
                break;
            }
            s = kids[rng.gen_range(0..kids.len())].clone();
        }
        if s.genus() == target {
            return s;
        }
        if s.genus() > deepest.genus() {
            deepest = s;
        }
    }
    deepest
}

/// A semigroup from 2 to 4 random generators below 20, retried until coprime.
pub fn random_generated(seed: u64) -> NumericalSemigroup {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let k = rng.gen_range(2..=4);
        let gens: Vec<u64> = (0..k).map(|_| rng.gen_range(2..20)).collect();
        if let Ok(s) = NumericalSemigroup::from_generators(&gens) {
            return s;
        }
    }
}
