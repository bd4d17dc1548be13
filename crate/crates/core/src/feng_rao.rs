//! Generalized order bounds `δ_r(m)`, Feng-Rao numbers `E_r`, and the
//! gap-interval lower bounds on `E_r`.
//!
//! `δ_r(m) = min #(D(i₁) ∪ … ∪ D(i_r))` over indices `m < i₁ < … < i_r`.
//! The search below is exhaustive. Completeness rests on the ideal bound:
//! for any tuple, `Λ ∖ D(i₁,…,i_r)` is an ideal of difference
//! `#D(i₁,…,i_r)` that misses `λ_{i_r}`, so
//! `λ_{i_r} ≤ #D(i₁,…,i_r) + 2g − 1`. A tuple can only match or beat the
//! incumbent value `v` if `λ_{i_r} ≤ v + 2g − 1`, which caps the outer loop.
//! In the stable range `λ_m ≥ 2c − 2` this cap is at most
//! `i_r ≤ m + 1 + λ_{r−1}`.

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::sync::Arc;

use fixedbitset::FixedBitSet;
use rayon::prelude::*;

use crate::divisors::{DivisorRow, DivisorTable};
use crate::error::{Error, Result};
use crate::semigroup::NumericalSemigroup;

/// Default cap on union evaluations for one `δ_r` search.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

/// Top indices handed out per round. Rounds only see the incumbent from
/// earlier rounds, which keeps the search identical for any worker count.
const WAVE: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    /// Maximum number of union evaluations; `None` for unlimited.
    pub budget: Option<u64>,
    pub workers: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        Self {
            budget: Some(DEFAULT_BUDGET),
            workers: 1,
        }
    }
}

impl SearchConfig {
    pub fn unlimited() -> Self {
        Self {
            budget: None,
            workers: 1,
        }
    }
}

/// Exact `δ_r(m)` with its lexicographically smallest minimizing tuple.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeltaResult {
    pub value: usize,
    pub witness: Vec<usize>,
    /// Union evaluations performed; independent of the worker count.
    pub evaluations: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Branch {
    First,
    Second,
    Tie,
}

impl Branch {
    pub fn as_str(&self) -> &'static str {
        match self {
            Branch::First => "first",
            Branch::Second => "second",
            Branch::Tie => "tie",
        }
    }
}

/// A bound of the form `min{first, second}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LowerBound {
    pub first: i64,
    pub second: i64,
    pub value: i64,
    pub branch: Branch,
}

impl LowerBound {
    fn min_of(first: i64, second: i64) -> Self {
        let branch = match first.cmp(&second) {
            std::cmp::Ordering::Less => Branch::First,
            std::cmp::Ordering::Greater => Branch::Second,
            std::cmp::Ordering::Equal => Branch::Tie,
        };
        Self {
            first,
            second,
            value: first.min(second),
            branch,
        }
    }

    /// Whether the bound beats the trivial `E_r ≥ r`.
    pub fn improves_on(&self, r: usize) -> bool {
        self.value > r as i64
    }
}

/// How an exact Feng-Rao number was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExactSource {
    /// `E_r = r − 1` on `ℕ₀`.
    GenusZero,
    /// `E_r = λ_{r−1}` once `r ≥ c`.
    PastConductor,
    Search,
}

impl ExactSource {
    pub fn as_str(&self) -> &'static str {
        match self {
            ExactSource::GenusZero => "rule:g=0",
            ExactSource::PastConductor => "rule:r>=c",
            ExactSource::Search => "search",
        }
    }
}

/// Lower bounds on `E_r` for one `(r, ℓ)`, with the exact value when known.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundReport {
    pub r: usize,
    pub ell: usize,
    pub lower_bound_lb: LowerBound,
    pub lower_bound_u: LowerBound,
    pub exact_e_r: Option<i64>,
    pub exact_source: Option<ExactSource>,
    pub witness_indices: Option<Vec<usize>>,
}

fn ceil_div(a: i64, b: i64) -> i64 {
    (a + b - 1).div_euclid(b)
}

fn check_order(r: usize, min: usize) -> Result<()> {
    if r < min {
        Err(Error::InvalidOrder(r))
    } else {
        Ok(())
    }
}

/// `δ_r(m)` by exhaustive search without a budget, on one thread.
pub fn delta_r(s: &NumericalSemigroup, r: usize, m: usize) -> Result<DeltaResult> {
    delta_r_with(s, r, m, &SearchConfig::unlimited())
}

pub fn delta_r_with(
    s: &NumericalSemigroup,
    r: usize,
    m: usize,
    config: &SearchConfig,
) -> Result<DeltaResult> {
    check_order(r, 1)?;
    let g = s.genus() as u64;
    let table = DivisorTable::new(s);
    let top_limit = |value: usize| s.index_floor(value as u64 + 2 * g - 1).max(m + r);

    let first: Vec<usize> = (m + 1..=m + r).collect();
    let mut rows = table.snapshot(m + r);
    let mut best_value = union_size(&rows, &first);
    let mut best_witness = first;
    let mut evaluations = 1u64;
    let mut limit = top_limit(best_value);
    rows = table.snapshot(limit);

    let counter = AtomicU64::new(evaluations);
    let aborted = AtomicBool::new(false);
    let pool = if config.workers > 1 {
        Some(
            rayon::ThreadPoolBuilder::new()
                .num_threads(config.workers)
                .build()
                .expect("thread pool"),
        )
    } else {
        None
    };

    let mut next_top = m + r;
    while next_top <= limit {
        let tops: Vec<usize> = (next_top..=limit.min(next_top + WAVE - 1)).collect();
        let bound = best_value;
        let ctx = SearchContext {
            rows: &rows,
            low: m + 1,
            picks: r - 1,
            budget: config.budget,
            counter: &counter,
            aborted: &aborted,
        };
        let found: Vec<Option<(usize, Vec<usize>)>> = match &pool {
            Some(pool) => {
                pool.install(|| tops.par_iter().map(|&t| ctx.search_top(t, bound)).collect())
            }
            None => tops.iter().map(|&t| ctx.search_top(t, bound)).collect(),
        };
        if aborted.load(Ordering::Relaxed) {
            return Err(Error::BudgetExceeded(config.budget.unwrap_or(u64::MAX)));
        }
        for (value, witness) in found.into_iter().flatten() {
            if (value, &witness) < (best_value, &best_witness) {
                best_value = value;
                best_witness = witness;
            }
        }
        next_top += WAVE;
        limit = limit.min(top_limit(best_value));
    }
    evaluations = counter.load(Ordering::Relaxed);
    Ok(DeltaResult {
        value: best_value,
        witness: best_witness,
        evaluations,
    })
}

fn union_size(rows: &[Arc<DivisorRow>], indices: &[usize]) -> usize {
    let top = *indices.last().unwrap();
    let mut set = rows[top].bits.clone();
    for &i in indices {
        set.union_with(&rows[i].bits);
    }
    set.count_ones(..)
}

struct SearchContext<'a> {
    rows: &'a [Arc<DivisorRow>],
    low: usize,
    picks: usize,
    budget: Option<u64>,
    counter: &'a AtomicU64,
    aborted: &'a AtomicBool,
}

struct Incumbent {
    value: usize,
    witness: Option<Vec<usize>>,
}

impl SearchContext<'_> {
    /// Best tuple with largest index `top` and union size at most `bound`.
    fn search_top(&self, top: usize, bound: usize) -> Option<(usize, Vec<usize>)> {
        if self.aborted.load(Ordering::Relaxed) || !self.tick() {
            return None;
        }
        let start = &self.rows[top].bits;
        if start.count_ones(..) > bound {
            return None;
        }
        let mut best = Incumbent {
            value: bound,
            witness: None,
        };
        let mut chosen = Vec::with_capacity(self.picks + 1);
        self.descend(top, self.low, self.picks, start, &mut chosen, &mut best);
        best.witness.map(|mut w| {
            w.push(top);
            (best.value, w)
        })
    }

    fn tick(&self) -> bool {
        let n = self.counter.fetch_add(1, Ordering::Relaxed) + 1;
        if self.budget.is_some_and(|b| n > b) {
            self.aborted.store(true, Ordering::Relaxed);
            return false;
        }
        true
    }

    fn descend(
        &self,
        top: usize,
        from: usize,
        remaining: usize,
        partial: &FixedBitSet,
        chosen: &mut Vec<usize>,
        best: &mut Incumbent,
    ) {
        if remaining == 0 {
            let value = partial.count_ones(..);
            let better = value < best.value
                || (value == best.value && best.witness.as_ref().is_none_or(|w| &**chosen < w));
            if better {
                best.value = value;
                best.witness = Some(chosen.clone());
            }
            return;
        }
        for i in from..=top - remaining {
            if !self.tick() {
                return;
            }
            let mut next = partial.clone();
            next.union_with(&self.rows[i].bits);
            // unions only grow along a branch
            if next.count_ones(..) > best.value {
                continue;
            }
            chosen.push(i);
            self.descend(top, i + 1, remaining - 1, &next, chosen, best);
            chosen.pop();
            if self.aborted.load(Ordering::Relaxed) {
                return;
            }
        }
    }
}

/// Index `m*` of the first element `≥ 2c − 2`.
pub fn stable_index(s: &NumericalSemigroup) -> usize {
    let c = s.conductor();
    if c == 0 {
        0
    } else {
        (2 * c - 2) as usize - s.genus()
    }
}

/// Exact `E_r = δ_r(m*) − m* − 2 + g` by search at the stable index.
pub fn feng_rao_number(s: &NumericalSemigroup, r: usize) -> Result<i64> {
    feng_rao_number_with(s, r, &SearchConfig::unlimited()).map(|(e, _)| e)
}

pub fn feng_rao_number_with(
    s: &NumericalSemigroup,
    r: usize,
    config: &SearchConfig,
) -> Result<(i64, DeltaResult)> {
    check_order(r, 2)?;
    let m = stable_index(s);
    let delta = delta_r_with(s, r, m, config)?;
    let e = delta.value as i64 - m as i64 - 2 + s.genus() as i64;
    Ok((e, delta))
}

/// `E_r` from the closed rules `E_r = r − 1` for `g = 0` and `E_r = λ_{r−1}`
/// for `r ≥ c`, when one applies.
pub fn feng_rao_closed_form(s: &NumericalSemigroup, r: usize) -> Option<(i64, ExactSource)> {
    if r < 2 {
        None
    } else if s.genus() == 0 {
        Some((r as i64 - 1, ExactSource::GenusZero))
    } else if r as u64 >= s.conductor() {
        Some((s.lambda(r - 1) as i64, ExactSource::PastConductor))
    } else {
        None
    }
}

/// `E_r ≥ min{r − 2 + ⌈r/(ℓ−1)⌉, r − 1 + ⌈(ℓ−1)·n_{ℓ−1}/ℓ⌉}`.
pub fn bound_lb(s: &NumericalSemigroup, r: usize, ell: usize) -> Result<LowerBound> {
    check_order(r, 2)?;
    if ell < 2 {
        return Err(Error::InvalidEll(ell));
    }
    let (r, l) = (r as i64, ell as i64);
    let n = s.n_ell(ell - 1) as i64;
    Ok(LowerBound::min_of(
        r - 2 + ceil_div(r, l - 1),
        r - 1 + ceil_div((l - 1) * n, l),
    ))
}

/// `E_r ≥ min{2(r − 1), r − 1 + ⌈n/2⌉}` with `n` the number of gap runs.
pub fn bound_u(s: &NumericalSemigroup, r: usize) -> Result<LowerBound> {
    check_order(r, 2)?;
    let r = r as i64;
    let n = s.gap_interval_profile().runs.len() as i64;
    Ok(LowerBound::min_of(2 * (r - 1), r - 1 + ceil_div(n, 2)))
}

/// Lower bounds on `δ_r(m)` for `λ_m ≥ c`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DeltaLowerBound {
    /// `m + 2 − g + bound_lb(r, ℓ)`.
    pub general: i64,
    /// `m − g + 2r` if `r ≤ ⌈n/2⌉ + 1`, else `m − g + r + ⌈n/2⌉ + 1`.
    pub two_case: i64,
}

pub fn delta_lower_bound(
    s: &NumericalSemigroup,
    r: usize,
    m: usize,
    ell: usize,
) -> Result<DeltaLowerBound> {
    let lm = s.lambda(m);
    if lm < s.conductor() {
        return Err(Error::ConductorNotReached(lm));
    }
    let lb = bound_lb(s, r, ell)?;
    let (m, g, ri) = (m as i64, s.genus() as i64, r as i64);
    let half = ceil_div(s.gap_interval_profile().runs.len() as i64, 2);
    let two_case = if ri <= half + 1 {
        m - g + 2 * ri
    } else {
        m - g + ri + half + 1
    };
    Ok(DeltaLowerBound {
        general: m + 2 - g + lb.value,
        two_case,
    })
}

/// Smallest possible `α(A) = max{a ∈ A : a − ℓ + 1, …, a ∈ A}` over sets `A`
/// of size `r` with `min A = a₁`, `max A = a_r`, containing `ℓ` consecutive
/// integers: `max{a₁ + ℓ − 1, a₁ + (ℓ − 1)(a₁ − a_r) + ℓ(r − 1)}`.
pub fn alpha_min(a1: i64, ar: i64, r: usize, ell: usize) -> Result<i64> {
    let empty = Error::EmptyFamily { a1, ar, r, ell };
    if ell < 2 || r < ell || ar < a1 {
        return Err(empty);
    }
    let width = ar - a1 + 1;
    let (ri, l) = (r as i64, ell as i64);
    // Either A is the whole interval, or the run and the far endpoint are
    // separate, which needs r > ℓ.
    if width < ri || (width > ri && r == ell) {
        return Err(empty);
    }
    Ok((a1 + l - 1).max(a1 + (l - 1) * (a1 - ar) + l * (ri - 1)))
}

/// Whether `bound_lb(r, ℓ)` equals the exact `E_r`.
pub fn sharpness_check(
    s: &NumericalSemigroup,
    r: usize,
    ell: usize,
    config: &SearchConfig,
) -> Result<bool> {
    let lb = bound_lb(s, r, ell)?;
    let (e, _) = feng_rao_number_with(s, r, config)?;
    Ok(lb.value == e)
}

/// The predicted sharpness condition: hyperelliptic, `ℓ = 2` and
/// `r ≤ 1 + ⌈g/2⌉`.
pub fn sharpness_predicted(s: &NumericalSemigroup, r: usize, ell: usize) -> bool {
    s.is_hyperelliptic() && ell == 2 && r as i64 <= 1 + ceil_div(s.genus() as i64, 2)
}

/// Bounds for `(r, ℓ)`; with `exact` set, also `E_r` (closed rule first,
/// search otherwise).
pub fn bound_report(
    s: &NumericalSemigroup,
    r: usize,
    ell: usize,
    exact: Option<&SearchConfig>,
) -> Result<BoundReport> {
    let lower_bound_lb = bound_lb(s, r, ell)?;
    let lower_bound_u = bound_u(s, r)?;
    let mut report = BoundReport {
        r,
        ell,
        lower_bound_lb,
        lower_bound_u,
        exact_e_r: None,
        exact_source: None,
        witness_indices: None,
    };
    if let Some(config) = exact {
        if let Some((e, source)) = feng_rao_closed_form(s, r) {
            report.exact_e_r = Some(e);
            report.exact_source = Some(source);
        } else {
            let (e, delta) = feng_rao_number_with(s, r, config)?;
            report.exact_e_r = Some(e);
            report.exact_source = Some(ExactSource::Search);
            report.witness_indices = Some(delta.witness);
        }
    }
    Ok(report)
}
