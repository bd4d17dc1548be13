//! Brute-force reference computations.
//!
//! Nothing here shares code with the structured algorithms it is used to
//! check; everything is a direct scan or exhaustive enumeration.

use std::sync::Arc;

use crate::ideal::SemigroupIdeal;
use crate::semigroup::NumericalSemigroup;

/// Every ideal of difference at most `max_difference`, by backtracking over
/// divisor-closed subsets of `Λ`. The whole semigroup (difference 0) is
/// included.
///
/// A complement of size `≤ d` only contains `λ_i` with `ν_i ≤ d`, and
/// `ν_i ≥ i + 1 − g`, so candidates stop at index `d − 1 + g`.
pub fn enumerate_ideals(s: &Arc<NumericalSemigroup>, max_difference: usize) -> Vec<SemigroupIdeal> {
    let g = s.genus();
    let count = (max_difference + g).max(1);
    let candidates: Vec<u64> = (0..count).map(|i| s.lambda(i)).collect();
    let proper_divisors: Vec<Vec<usize>> = candidates
        .iter()
        .map(|&x| {
            (0..candidates.len())
                .filter(|&j| candidates[j] < x && s.contains((x - candidates[j]) as i64))
                .collect()
        })
        .collect();

    fn walk(
        k: usize,
        candidates: &[u64],
        proper_divisors: &[Vec<usize>],
        max: usize,
        taken: &mut Vec<bool>,
        chosen: &mut Vec<u64>,
        out: &mut Vec<Vec<u64>>,
    ) {
        if k == candidates.len() {
            out.push(chosen.clone());
            return;
        }
        taken.push(false);
        walk(k + 1, candidates, proper_divisors, max, taken, chosen, out);
        taken.pop();
        if chosen.len() < max && proper_divisors[k].iter().all(|&j| taken[j]) {
            taken.push(true);
            chosen.push(candidates[k]);
            walk(k + 1, candidates, proper_divisors, max, taken, chosen, out);
            chosen.pop();
            taken.pop();
        }
    }

    let mut sets = Vec::new();
    walk(
        0,
        &candidates,
        &proper_divisors,
        max_difference,
        &mut Vec::new(),
        &mut Vec::new(),
        &mut sets,
    );
    sets.into_iter()
        .map(|t| SemigroupIdeal::from_complement(s, t).expect("down-sets are ideals"))
        .collect()
}

/// Largest integer outside the ideal, by scanning.
pub fn ideal_frobenius(ideal: &SemigroupIdeal) -> i64 {
    let s = ideal.semigroup();
    let top = ideal.complement().last().copied().unwrap_or(0) + s.conductor() + 1;
    (-1..=top as i64)
        .rev()
        .find(|&x| x < 0 || !(s.contains(x) && !ideal.complement().contains(&(x as u64))))
        .unwrap()
}

/// `#{λ ∈ Λ : λ+1, …, λ+ℓ ∉ Λ}`.
pub fn gamma_count(s: &NumericalSemigroup, ell: usize) -> usize {
    (0..=s.conductor() as i64)
        .filter(|&x| s.contains(x))
        .filter(|&x| (1..=ell as i64).all(|k| !s.contains(x + k)))
        .count()
}

/// `ν_i` by checking every `y ≤ λ_i`.
pub fn nu(s: &NumericalSemigroup, i: usize) -> usize {
    let x = s.lambda(i) as i64;
    (0..=x)
        .filter(|&y| s.contains(y) && s.contains(x - y))
        .count()
}

/// `g(i) − G(i)` pieces: gaps below `λ_i` and ordered gap pairs summing to
/// `λ_i`, by scanning all integers below `λ_i`.
pub fn gap_counts(s: &NumericalSemigroup, i: usize) -> (usize, usize) {
    let x = s.lambda(i) as i64;
    let below = (0..x).filter(|&h| !s.contains(h)).count();
    let pairs = (0..=x)
        .filter(|&h| !s.contains(h) && !s.contains(x - h))
        .count();
    (below, pairs)
}

/// Minimum of `α(A)` over all `A ⊆ [a₁, a_r]` of size `r` with both
/// endpoints and some `ℓ` consecutive integers, or `None` if no such `A`.
pub fn alpha_min(a1: i64, ar: i64, r: usize, ell: usize) -> Option<i64> {
    if ar < a1 || ell == 0 {
        return None;
    }
    let width = (ar - a1 + 1) as u32;
    if width > 30 {
        return None;
    }
    let full: u64 = (1u64 << width) - 1;
    let ends = 1u64 | (1u64 << (width - 1));
    let mut best: Option<i64> = None;
    for mask in 0..=full {
        if mask & ends != ends || mask.count_ones() as usize != r {
            continue;
        }
        let run_end = (0..width)
            .rev()
            .find(|&p| p + 1 >= ell as u32 && (0..ell as u32).all(|k| mask >> (p - k) & 1 == 1));
        if let Some(p) = run_end {
            let alpha = a1 + p as i64;
            best = Some(best.map_or(alpha, |b| b.min(alpha)));
        }
    }
    best
}
