//! Divisor sets `D(i) = {λ_j ≤ λ_i : λ_i − λ_j ∈ Λ}` and the counts attached
//! to them.

use std::sync::{Arc, RwLock};

use fixedbitset::FixedBitSet;

use crate::semigroup::NumericalSemigroup;

/// Sorted divisors of `λ_i`.
pub fn divisors(s: &NumericalSemigroup, i: usize) -> Vec<u64> {
    let x = s.lambda(i);
    (0..=x).filter(|&y| s.has(y) && s.has(x - y)).collect()
}

/// `ν_i = #D(i)`.
pub fn nu(s: &NumericalSemigroup, i: usize) -> usize {
    let x = s.lambda(i);
    (0..=x).filter(|&y| s.has(y) && s.has(x - y)).count()
}

/// `g(i)`: gaps strictly below `λ_i`.
pub fn gap_count_below(s: &NumericalSemigroup, i: usize) -> usize {
    let x = s.lambda(i);
    s.gaps().partition_point(|&h| h < x)
}

/// `G(i)`: ordered pairs of gaps `(h, λ_i − h)`.
pub fn gap_pair_count(s: &NumericalSemigroup, i: usize) -> usize {
    let x = s.lambda(i);
    s.gaps()
        .iter()
        .take_while(|&&h| h < x)
        .filter(|&&h| !s.has(x - h))
        .count()
}

/// `D(i₁) ∪ … ∪ D(i_r)`, sorted.
pub fn divisors_union(s: &NumericalSemigroup, indices: &[usize]) -> Vec<u64> {
    let Some(&top) = indices.iter().max() else {
        return Vec::new();
    };
    let mut set = FixedBitSet::with_capacity(s.lambda(top) as usize + 1);
    for &i in indices {
        let x = s.lambda(i);
        for y in (0..=x).filter(|&y| s.has(y) && s.has(x - y)) {
            set.insert(y as usize);
        }
    }
    set.ones().map(|y| y as u64).collect()
}

/// One materialized row of a [`DivisorTable`].
#[derive(Clone, Debug)]
pub struct DivisorRow {
    pub index: usize,
    pub element: u64,
    pub divisors: Vec<u64>,
    /// `D(i)` as a bit set over `[0, λ_i]`.
    pub bits: FixedBitSet,
    pub nu: usize,
    pub gaps_below: usize,
    pub gap_pairs: usize,
}

impl DivisorRow {
    fn compute(s: &NumericalSemigroup, i: usize) -> Self {
        let element = s.lambda(i);
        let divisors = divisors(s, i);
        let mut bits = FixedBitSet::with_capacity(element as usize + 1);
        for &d in &divisors {
            bits.insert(d as usize);
        }
        Self {
            index: i,
            element,
            nu: divisors.len(),
            divisors,
            bits,
            gaps_below: gap_count_below(s, i),
            gap_pairs: gap_pair_count(s, i),
        }
    }
}

/// Memoized divisor rows of a semigroup.
///
/// Rows are filled in on demand. Concurrent readers are fine: the memo sits
/// behind a lock and handed-out rows are shared immutably.
pub struct DivisorTable<'a> {
    semigroup: &'a NumericalSemigroup,
    rows: RwLock<Vec<Arc<DivisorRow>>>,
}

impl<'a> DivisorTable<'a> {
    pub fn new(semigroup: &'a NumericalSemigroup) -> Self {
        Self {
            semigroup,
            rows: RwLock::new(Vec::new()),
        }
    }

    /// A table with rows `0..=max_index` already materialized.
    pub fn with_rows(semigroup: &'a NumericalSemigroup, max_index: usize) -> Self {
        let table = Self::new(semigroup);
        table.ensure(max_index);
        table
    }

    pub fn semigroup(&self) -> &'a NumericalSemigroup {
        self.semigroup
    }

    /// Largest materialized index, if any.
    pub fn max_index(&self) -> Option<usize> {
        self.rows.read().unwrap().len().checked_sub(1)
    }

    /// Materializes rows up to and including `max_index`.
    pub fn ensure(&self, max_index: usize) {
        if self.rows.read().unwrap().len() > max_index {
            return;
        }
        let mut rows = self.rows.write().unwrap();
        for i in rows.len()..=max_index {
            rows.push(Arc::new(DivisorRow::compute(self.semigroup, i)));
        }
    }

    pub fn row(&self, i: usize) -> Arc<DivisorRow> {
        self.ensure(i);
        Arc::clone(&self.rows.read().unwrap()[i])
    }

    /// Snapshot of rows `0..=max_index` for lock-free reads in hot loops.
    pub fn snapshot(&self, max_index: usize) -> Vec<Arc<DivisorRow>> {
        self.ensure(max_index);
        self.rows.read().unwrap()[..=max_index].to_vec()
    }
}
