//! Ideals of a numerical semigroup, stored by their finite complement.
//!
//! An ideal `I ⊆ Λ` satisfies `I + Λ ⊆ I`. Its complement `T = Λ ∖ I` is
//! finite and closed under taking divisors, and the ideal is read entirely off
//! `T`: the difference is `#T` and the Frobenius number is the larger of `F`
//! and `max T`.
//!
//! Every ideal has Frobenius number at most `d + 2g − 1`. The ideals reaching
//! it are the irreducible ideals `Λ ∖ D(i)` with `G(i) = 0` and `λ_i ≥ c`.

use std::collections::BTreeSet;
use std::sync::Arc;

use crate::divisors::{self, DivisorTable};
use crate::error::{Error, Result};
use crate::semigroup::NumericalSemigroup;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemigroupIdeal {
    semigroup: Arc<NumericalSemigroup>,
    complement: Vec<u64>,
}

/// Frobenius number of an ideal next to the bound `d + 2g − 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FrobeniusCertificate {
    pub frobenius: i64,
    pub bound: i64,
}

impl FrobeniusCertificate {
    pub fn holds(&self) -> bool {
        self.frobenius <= self.bound
    }
}

/// The five equivalent descriptions of an ideal attaining `d + 2g − 1`,
/// each evaluated on its own.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Characterization {
    /// The Frobenius number equals `d + 2g − 1`.
    pub frobenius_attained: bool,
    /// `I = Λ ∖ D(i)` for an index with `G(i) = 0` and `λ_i ≥ c`.
    pub irreducible_gap_pair_free: bool,
    /// `Λ ∖ I = {λ ∈ Λ : d + 2g − 1 − λ ∈ Λ}`.
    pub complement_reflects: bool,
    /// `I = {λ_i − h : h ∈ ℤ ∖ Λ}` for an index with `G(i) = 0`.
    pub gap_reflection: bool,
    /// `I = (a + Λ) ∪ (a + H)` with `a ∈ Λ`, `a > 0`, `a + H ⊆ Λ`, where `H`
    /// is the set of gaps `h` with `F − h` also a gap.
    pub shifted_principal: bool,
    /// Index used as witness for the irreducible and reflection forms.
    pub witness_index: Option<usize>,
    /// Shift used as witness for the shifted principal form.
    pub witness_shift: Option<u64>,
}

impl Characterization {
    pub fn as_array(&self) -> [bool; 5] {
        [
            self.frobenius_attained,
            self.irreducible_gap_pair_free,
            self.complement_reflects,
            self.gap_reflection,
            self.shifted_principal,
        ]
    }

    pub fn all_agree(&self) -> bool {
        let v = self.as_array();
        v.iter().all(|&b| b == v[0])
    }
}

/// Divisors of `x` inside `s`, ascending.
fn divisors_of(s: &NumericalSemigroup, x: u64) -> impl Iterator<Item = u64> + '_ {
    (0..=x).filter(move |&y| s.has(y) && s.has(x - y))
}

impl SemigroupIdeal {
    /// Ideal whose complement in `Λ` is `complement`. Fails unless every
    /// listed value is an element and the set is closed under divisors.
    pub fn from_complement(
        semigroup: &Arc<NumericalSemigroup>,
        complement: impl IntoIterator<Item = u64>,
    ) -> Result<Self> {
        let set: BTreeSet<u64> = complement.into_iter().collect();
        for &t in &set {
            if !semigroup.has(t) {
                return Err(Error::NotAnElement(t as i64));
            }
            if let Some(y) = divisors_of(semigroup, t).find(|y| !set.contains(y)) {
                return Err(Error::NotAnIdeal {
                    element: t,
                    divisor: y,
                });
            }
        }
        Ok(Self::from_sorted(semigroup, set.into_iter().collect()))
    }

    fn from_sorted(semigroup: &Arc<NumericalSemigroup>, complement: Vec<u64>) -> Self {
        Self {
            semigroup: Arc::clone(semigroup),
            complement,
        }
    }

    /// The whole semigroup as an ideal of itself.
    pub fn whole(semigroup: &Arc<NumericalSemigroup>) -> Self {
        Self::from_sorted(semigroup, Vec::new())
    }

    /// `a + Λ`.
    pub fn principal(semigroup: &Arc<NumericalSemigroup>, a: u64) -> Result<Self> {
        if !semigroup.has(a) {
            return Err(Error::NotAnElement(a as i64));
        }
        let s = semigroup.as_ref();
        let t = (0..a + s.conductor())
            .filter(|&x| s.has(x) && !(x >= a && s.has(x - a)))
            .collect();
        Ok(Self::from_sorted(semigroup, t))
    }

    /// `Λ ∖ D(i)`.
    pub fn irreducible(semigroup: &Arc<NumericalSemigroup>, i: usize) -> Self {
        Self::from_sorted(semigroup, divisors::divisors(semigroup, i))
    }

    pub fn semigroup(&self) -> &NumericalSemigroup {
        &self.semigroup
    }

    pub fn semigroup_arc(&self) -> &Arc<NumericalSemigroup> {
        &self.semigroup
    }

    /// `Λ ∖ I`, ascending.
    pub fn complement(&self) -> &[u64] {
        &self.complement
    }

    pub fn difference(&self) -> usize {
        self.complement.len()
    }

    /// Largest integer not in the ideal (`-1` only for `I = Λ = ℕ₀`).
    pub fn frobenius(&self) -> i64 {
        let top = self.complement.last().map_or(-1, |&t| t as i64);
        top.max(self.semigroup.frobenius())
    }

    pub fn contains(&self, x: i64) -> bool {
        self.semigroup.contains(x) && self.complement.binary_search(&(x as u64)).is_err()
    }

    /// Smallest element of the ideal.
    pub fn min_element(&self) -> u64 {
        (0..)
            .find(|&x| self.contains(x))
            .expect("ideals are cofinite") as u64
    }

    /// Whether `I = a + Λ` for some `a`; necessarily `a = min I`.
    pub fn is_principal(&self) -> bool {
        let a = self.min_element();
        Self::principal(&self.semigroup, a).is_ok_and(|p| p.complement == self.complement)
    }

    pub fn intersect(&self, other: &SemigroupIdeal) -> Result<SemigroupIdeal> {
        if self.semigroup != other.semigroup {
            return Err(Error::AmbientMismatch);
        }
        let union: BTreeSet<u64> = self
            .complement
            .iter()
            .chain(&other.complement)
            .copied()
            .collect();
        Ok(Self::from_sorted(
            &self.semigroup,
            union.into_iter().collect(),
        ))
    }

    /// Indices `i` with `I = ⋂ Λ ∖ D(i)`: the maximal elements of the
    /// complement under `t ⪯ t' ⇔ t' − t ∈ Λ`. The decomposition is
    /// irredundant; the ideal `Λ` itself decomposes as the empty list.
    pub fn irreducible_decomposition(&self) -> Vec<usize> {
        let s = self.semigroup.as_ref();
        self.complement
            .iter()
            .filter(|&&t| !self.complement.iter().any(|&u| u > t && s.has(u - t)))
            .map(|&t| {
                s.index_of(t as i64)
                    .expect("complement lies in the semigroup")
            })
            .collect()
    }

    /// `(Frobenius of I, d + 2g − 1)`.
    pub fn frobenius_bound(&self) -> FrobeniusCertificate {
        FrobeniusCertificate {
            frobenius: self.frobenius(),
            bound: self.difference() as i64 + 2 * self.semigroup.genus() as i64 - 1,
        }
    }

    /// Whether the Frobenius number is exactly `d + 2g − 1`.
    pub fn attains_bound(&self) -> Result<bool> {
        if self.difference() == 0 {
            return Err(Error::ZeroDifference);
        }
        let c = self.frobenius_bound();
        Ok(c.frobenius == c.bound)
    }

    /// Evaluates the five attainment conditions independently.
    pub fn characterization(&self) -> Result<Characterization> {
        if self.difference() == 0 {
            return Err(Error::ZeroDifference);
        }
        let s = self.semigroup.as_ref();
        let g = s.genus();
        let d = self.difference();
        let bound = (d + 2 * g - 1) as u64;
        let frob = self.frobenius();

        let frobenius_attained = frob == bound as i64;

        // Λ ∖ D(i) has max complement element λ_i, which pins the index.
        let top = *self.complement.last().unwrap();
        let top_index = s.index_of(top as i64).unwrap();
        let irreducible_gap_pair_free = self.complement == divisors::divisors(s, top_index)
            && divisors::gap_pair_count(s, top_index) == 0
            && (top_index > 0 || g == 0);

        let reflected: Vec<u64> = (0..=bound)
            .filter(|&x| s.has(x) && s.has(bound - x))
            .collect();
        let complement_reflects = self.complement == reflected;

        // {λ_i − h : h ∉ Λ} has largest non-member λ_i, so λ_i = Frobenius(I).
        let reflection_index = s.index_of(frob).ok();
        let gap_reflection = reflection_index.is_some_and(|i| {
            let li = s.lambda(i) as i64;
            let window = li + s.conductor() as i64 + 1;
            divisors::gap_pair_count(s, i) == 0
                && li >= s.frobenius()
                && (0..=window).all(|x| self.contains(x) == !s.contains(li - x))
        });

        // (a + Λ) ∪ (a + H) has Frobenius number a + F.
        let shift = frob - s.frobenius();
        let witness_shift = (shift > 0 && s.contains(shift)).then_some(shift as u64);
        let shifted_principal = witness_shift.is_some_and(|a| {
            let f = s.frobenius();
            let a = a as i64;
            let in_h = |h: i64| h > 0 && !s.contains(h) && !s.contains(f - h);
            let closes = s
                .gaps()
                .iter()
                .all(|&h| !in_h(h as i64) || s.contains(a + h as i64));
            let window = a + s.conductor() as i64 + 1;
            closes && (0..=window).all(|x| self.contains(x) == (s.contains(x - a) || in_h(x - a)))
        });

        Ok(Characterization {
            frobenius_attained,
            irreducible_gap_pair_free,
            complement_reflects,
            gap_reflection,
            shifted_principal,
            witness_index: reflection_index.or(Some(top_index)),
            witness_shift,
        })
    }
}

/// The irreducible ideals `Λ ∖ D(i)`, `i ≤ max_index`, attaining `d + 2g − 1`:
/// those with `G(i) = 0` and `λ_i ≥ c`.
pub fn enumerate_attaining_ideals(
    semigroup: &Arc<NumericalSemigroup>,
    max_index: usize,
) -> Vec<(usize, SemigroupIdeal)> {
    let table = DivisorTable::new(semigroup);
    (0..=max_index)
        .filter_map(|i| {
            let row = table.row(i);
            (row.gap_pairs == 0 && row.element >= semigroup.conductor()).then(|| {
                (
                    i,
                    SemigroupIdeal::from_sorted(semigroup, row.divisors.clone()),
                )
            })
        })
        .collect()
}

/// On a symmetric semigroup, checks for every `i ≤ max_index` that
/// `Λ ∖ D(i)` attains the bound exactly when it is principal.
pub fn principal_iff_attaining_on_symmetric(
    semigroup: &Arc<NumericalSemigroup>,
    max_index: usize,
) -> Result<bool> {
    if !semigroup.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    for i in 0..=max_index {
        let ideal = SemigroupIdeal::irreducible(semigroup, i);
        if ideal.attains_bound()? != ideal.is_principal() {
            return Ok(false);
        }
    }
    Ok(true)
}
