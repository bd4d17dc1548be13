//! Numerical semigroups: cofinite additive submonoids of the nonnegative
//! integers.
//!
//! A semigroup is stored as a membership table over `[0, c]` where `c` is the
//! conductor. Every integer at or beyond `c` is an element, so nothing past the
//! table needs to be materialized.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};

/// Largest membership table the constructors will allocate.
pub const MAX_TABLE: u64 = 50_000_000;

/// An immutable numerical semigroup.
///
/// Elements are `λ_0 = 0 < λ_1 < λ_2 < …`; for `λ_i ≥ c` one has `λ_i = i + g`.
#[derive(Clone)]
pub struct NumericalSemigroup {
    member: Vec<bool>,
    gaps: Vec<u64>,
    /// Elements strictly below the conductor, ascending.
    small: Vec<u64>,
    conductor: u64,
    generators_hint: Option<Vec<u64>>,
}

/// A maximal run of consecutive gaps.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GapRun {
    pub start: u64,
    pub len: usize,
}

/// The maximal runs of consecutive gaps, in increasing order of start.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GapIntervalProfile {
    pub runs: Vec<GapRun>,
}

impl GapIntervalProfile {
    pub fn run_lengths(&self) -> Vec<usize> {
        self.runs.iter().map(|r| r.len).collect()
    }

    /// Number of runs of at least `ell` gaps.
    pub fn n_ell(&self, ell: usize) -> usize {
        self.runs.iter().filter(|r| r.len >= ell).count()
    }

    pub fn max_run(&self) -> usize {
        self.runs.iter().map(|r| r.len).max().unwrap_or(0)
    }

    pub fn total(&self) -> usize {
        self.runs.iter().map(|r| r.len).sum()
    }
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

impl NumericalSemigroup {
    /// The semigroup of all nonnegative integers.
    pub fn naturals() -> Self {
        Self::from_table(vec![true], Some(vec![1]))
    }

    /// Smallest additive monoid containing `gens`.
    pub fn from_generators(gens: &[u64]) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::Empty);
        }
        if gens.contains(&0) {
            return Err(Error::ZeroGenerator);
        }
        let d = gens.iter().fold(0, |acc, &x| gcd(acc, x));
        if d != 1 {
            return Err(Error::NotCoprime(d));
        }
        let lo = *gens.iter().min().unwrap();
        let hi = *gens.iter().max().unwrap();
        // Schur: F <= (lo - 1)(hi - 1) - 1 < lo * hi.
        let bound = lo.checked_mul(hi).ok_or(Error::TooLarge(u64::MAX))?;
        if bound > MAX_TABLE {
            return Err(Error::TooLarge(bound));
        }
        let n = bound as usize + 1;
        let mut reach = vec![false; n];
        reach[0] = true;
        let mut sorted: Vec<usize> = gens.iter().map(|&g| g as usize).collect();
        sorted.sort_unstable();
        sorted.dedup();
        for x in 1..n {
            reach[x] = sorted
                .iter()
                .take_while(|&&g| g <= x)
                .any(|&g| reach[x - g]);
        }
        let conductor = reach.iter().rposition(|&b| !b).map_or(0, |f| f + 1);
        reach.truncate(conductor + 1);
        Ok(Self::from_table(reach, Some(gens.to_vec())))
    }

    /// Semigroup whose gap set is exactly `gaps`.
    pub fn from_gaps(gaps: &[u64]) -> Result<Self> {
        let set: BTreeSet<u64> = gaps.iter().copied().collect();
        if set.contains(&0) {
            return Err(Error::ZeroGap);
        }
        let conductor = set.iter().next_back().map_or(0, |&f| f + 1);
        if conductor > MAX_TABLE {
            return Err(Error::TooLarge(conductor));
        }
        let mut member = vec![true; conductor as usize + 1];
        for &h in &set {
            member[h as usize] = false;
        }
        let elems: Vec<usize> = (1..conductor as usize).filter(|&x| member[x]).collect();
        for (k, &a) in elems.iter().enumerate() {
            for &b in &elems[k..] {
                let s = a + b;
                if s >= conductor as usize {
                    break;
                }
                if !member[s] {
                    return Err(Error::NotASemigroup(a as u64, b as u64, s as u64));
                }
            }
        }
        Ok(Self::from_table(member, None))
    }

    /// Builds from a membership table over `[0, c]` that is already known to
    /// describe a semigroup with conductor `c` (last entry true, entry before
    /// it false unless `c = 0`).
    pub(crate) fn from_table(member: Vec<bool>, generators_hint: Option<Vec<u64>>) -> Self {
        let conductor = member.len() as u64 - 1;
        debug_assert!(member[0] && *member.last().unwrap());
        debug_assert!(conductor == 0 || !member[conductor as usize - 1]);
        let mut gaps = Vec::new();
        let mut small = Vec::new();
        for (x, &m) in member[..conductor as usize].iter().enumerate() {
            if m {
                small.push(x as u64);
            } else {
                gaps.push(x as u64);
            }
        }
        Self {
            member,
            gaps,
            small,
            conductor,
            generators_hint,
        }
    }

    pub fn gaps(&self) -> &[u64] {
        &self.gaps
    }

    pub fn genus(&self) -> usize {
        self.gaps.len()
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    /// Largest gap, or `-1` when there are none.
    pub fn frobenius(&self) -> i64 {
        self.conductor as i64 - 1
    }

    /// Generators the caller supplied, if the semigroup was built from them.
    pub fn generators_hint(&self) -> Option<&[u64]> {
        self.generators_hint.as_deref()
    }

    /// Smallest nonzero element.
    pub fn multiplicity(&self) -> u64 {
        self.lambda(1)
    }

    /// Membership table over `[0, c]`.
    pub fn membership_table(&self) -> &[bool] {
        &self.member
    }

    /// Elements strictly below the conductor.
    pub fn small_elements(&self) -> &[u64] {
        &self.small
    }

    pub fn contains(&self, x: i64) -> bool {
        x >= 0 && self.has(x as u64)
    }

    #[inline]
    pub(crate) fn has(&self, x: u64) -> bool {
        x >= self.conductor || self.member[x as usize]
    }

    /// The `i`-th smallest element.
    pub fn lambda(&self, i: usize) -> u64 {
        match self.small.get(i) {
            Some(&x) => x,
            None => (i + self.genus()) as u64,
        }
    }

    /// Position of `x` in the enumeration of elements.
    pub fn index_of(&self, x: i64) -> Result<usize> {
        if !self.contains(x) {
            return Err(Error::NotAnElement(x));
        }
        let x = x as u64;
        if x >= self.conductor {
            Ok(x as usize - self.genus())
        } else {
            Ok(self
                .small
                .binary_search(&x)
                .expect("element below conductor"))
        }
    }

    /// Number of elements `≤ x` minus one, i.e. the index of the largest
    /// element not exceeding `x`.
    pub fn index_floor(&self, x: u64) -> usize {
        if x >= self.conductor {
            x as usize - self.genus()
        } else {
            self.small.partition_point(|&e| e <= x) - 1
        }
    }

    pub fn gap_interval_profile(&self) -> GapIntervalProfile {
        let mut runs: Vec<GapRun> = Vec::new();
        for &h in &self.gaps {
            match runs.last_mut() {
                Some(run) if run.start + run.len as u64 == h => run.len += 1,
                _ => runs.push(GapRun { start: h, len: 1 }),
            }
        }
        GapIntervalProfile { runs }
    }

    /// Number of maximal gap runs of length at least `ell`.
    pub fn n_ell(&self, ell: usize) -> usize {
        self.gap_interval_profile().n_ell(ell)
    }

    /// `F = 2g - 1`.
    pub fn is_symmetric(&self) -> bool {
        self.frobenius() == 2 * self.genus() as i64 - 1
    }

    /// Contains 2 (with `ℕ₀` counted as hyperelliptic).
    pub fn is_hyperelliptic(&self) -> bool {
        self.has(2)
    }

    /// The minimal system of generators, ascending.
    pub fn minimal_generators(&self) -> Vec<u64> {
        let m = self.multiplicity();
        (1..(self.conductor + m).max(2))
            .filter(|&x| self.has(x))
            .filter(|&x| (1..=x / 2).all(|y| !(self.has(y) && self.has(x - y))))
            .collect()
    }

    /// Semigroups obtained by removing one minimal generator larger than the
    /// Frobenius number. These have genus `g + 1`, and every semigroup of
    /// genus `g + 1` arises from exactly one parent this way.
    pub fn children(&self) -> Vec<NumericalSemigroup> {
        let f = self.frobenius();
        self.minimal_generators()
            .into_iter()
            .filter(|&x| x as i64 > f)
            .map(|x| {
                let mut member = self.member.clone();
                member.resize(x as usize + 2, true);
                member[x as usize] = false;
                NumericalSemigroup::from_table(member, None)
            })
            .collect()
    }

    /// Every numerical semigroup of genus at most `max_genus`, ordered by
    /// genus and then by a breadth-first walk of the semigroup tree.
    pub fn all_up_to_genus(max_genus: usize) -> Vec<NumericalSemigroup> {
        let mut out = Vec::new();
        let mut queue = VecDeque::from([NumericalSemigroup::naturals()]);
        while let Some(s) = queue.pop_front() {
            if s.genus() < max_genus {
                queue.extend(s.children());
            }
            out.push(s);
        }
        out
    }
}

impl PartialEq for NumericalSemigroup {
    fn eq(&self, other: &Self) -> bool {
        self.member == other.member
    }
}

impl Eq for NumericalSemigroup {}

impl std::hash::Hash for NumericalSemigroup {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.member.hash(state);
    }
}

impl fmt::Debug for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NumericalSemigroup({self})")
    }
}

impl fmt::Display for NumericalSemigroup {
    /// `{0,4,5,8,9,10,12,->}`: the elements up to the conductor, then an arrow.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for x in &self.small {
            write!(f, "{x},")?;
        }
        write!(f, "{},->}}", self.conductor)
    }
}
