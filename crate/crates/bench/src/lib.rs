//! Fixtures shared by the criterion benchmarks.

use numsemi::NumericalSemigroup;

/// Semigroups of increasing size used across the benches, with a label.
pub fn fixtures() -> Vec<(&'static str, NumericalSemigroup)> {
    [
        ("hermitian4", &[4u64, 5][..]),
        ("hyperelliptic6", &[2, 13]),
        ("three_gen", &[5, 7, 9]),
        ("example_3_37_38", &[3, 37, 38]),
    ]
    .into_iter()
    .map(|(name, gens)| (name, NumericalSemigroup::from_generators(gens).unwrap()))
    .collect()
}
