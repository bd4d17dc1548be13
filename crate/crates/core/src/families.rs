//! Semigroup families with closed forms for `n_ℓ`, the number of gap runs of
//! length at least `ℓ`.
//!
//! Hermitian semigroups `⟨q, q+1⟩`, semigroups generated by an interval
//! `⟨a, …, a+x−1⟩`, the Weierstrass semigroups `Λ_m` of the Garcia-Stichtenoth
//! tower, and inductive semigroups `Λ_m = qΛ_{m−1} ∪ {n ≥ q·b_m}`.
//!
//! Every `log_q` is handled by comparing integer powers.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::semigroup::{NumericalSemigroup, MAX_TABLE};

/// One of the supported families, with its parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    Hermitian {
        q: u64,
    },
    Interval {
        a: u64,
        x: u64,
    },
    GsTower {
        q: u64,
        m: u32,
    },
    /// `b` lists `b_2, …, b_m`; the level is `m = b.len() + 1`.
    Inductive {
        q: u64,
        b: Vec<u64>,
    },
}

impl FamilySpec {
    pub fn semigroup(&self) -> Result<NumericalSemigroup> {
        match self {
            FamilySpec::Hermitian { q } => hermitian_semigroup(*q),
            FamilySpec::Interval { a, x } => interval_semigroup(*a, *x),
            FamilySpec::GsTower { q, m } => gs_tower_semigroup_recursive(*q, *m),
            FamilySpec::Inductive { q, b } => inductive_semigroup(*q, b),
        }
    }

    /// Closed-form `n_ℓ`.
    pub fn n_ell(&self, ell: usize) -> Result<usize> {
        match self {
            FamilySpec::Hermitian { q } => Ok(hermitian_n_ell(*q, ell)),
            FamilySpec::Interval { a, x } => interval_n_ell(*a, *x, ell),
            FamilySpec::GsTower { q, m } => Ok(gs_tower_n_ell(*q, *m, ell)),
            FamilySpec::Inductive { q, b } => inductive_n_ell(*q, b, ell),
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Hermitian { q } => write!(f, "hermitian q={q}"),
            FamilySpec::Interval { a, x } => write!(f, "interval a={a} x={x}"),
            FamilySpec::GsTower { q, m } => write!(f, "gstower q={q} m={m}"),
            FamilySpec::Inductive { q, b } => {
                write!(f, "inductive q={q} b=")?;
                let parts: Vec<String> = b.iter().map(u64::to_string).collect();
                f.write_str(&parts.join(","))
            }
        }
    }
}

/// Error from parsing a [`FamilySpec`].
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("bad family spec `{input}`: {reason}")]
pub struct ParseFamilyError {
    pub input: String,
    pub reason: String,
}

impl FromStr for FamilySpec {
    type Err = ParseFamilyError;

    /// `hermitian q=4`, `interval a=7 x=3`, `gstower q=2 m=4`,
    /// `inductive q=2 b=1,3` (an empty `b=` is level 1).
    fn from_str(input: &str) -> std::result::Result<Self, Self::Err> {
        let fail = |reason: &str| ParseFamilyError {
            input: input.to_string(),
            reason: reason.to_string(),
        };
        let mut words = input.split_whitespace();
        let kind = words.next().ok_or_else(|| fail("empty"))?;
        let mut params: Vec<(&str, &str)> = Vec::new();
        for w in words {
            let (k, v) = w
                .split_once('=')
                .ok_or_else(|| fail("expected key=value"))?;
            if params.iter().any(|(seen, _)| *seen == k) {
                return Err(fail("repeated key"));
            }
            params.push((k, v));
        }
        let take = |key: &str| -> std::result::Result<&str, ParseFamilyError> {
            params
                .iter()
                .find(|(k, _)| *k == key)
                .map(|(_, v)| *v)
                .ok_or_else(|| fail(&format!("missing {key}")))
        };
        let num = |key: &str| -> std::result::Result<u64, ParseFamilyError> {
            take(key)?
                .parse()
                .map_err(|_| fail(&format!("{key} is not a number")))
        };
        let expect_keys = |keys: &[&str]| {
            if params.len() == keys.len() {
                Ok(())
            } else {
                Err(fail("unexpected parameters"))
            }
        };
        let spec = match kind {
            "hermitian" => {
                expect_keys(&["q"])?;
                FamilySpec::Hermitian { q: num("q")? }
            }
            "interval" => {
                expect_keys(&["a", "x"])?;
                FamilySpec::Interval {
                    a: num("a")?,
                    x: num("x")?,
                }
            }
            "gstower" => {
                expect_keys(&["q", "m"])?;
                let m = num("m")?;
                FamilySpec::GsTower {
                    q: num("q")?,
                    m: u32::try_from(m).map_err(|_| fail("m too large"))?,
                }
            }
            "inductive" => {
                expect_keys(&["q", "b"])?;
                let raw = take("b")?;
                let b = if raw.is_empty() {
                    Vec::new()
                } else {
                    raw.split(',')
                        .map(|t| t.parse().map_err(|_| fail("b is not a number list")))
                        .collect::<std::result::Result<_, _>>()?
                };
                FamilySpec::Inductive { q: num("q")?, b }
            }
            _ => return Err(fail("unknown family")),
        };
        Ok(spec)
    }
}

fn checked_pow(q: u64, e: u32) -> Result<u64> {
    q.checked_pow(e)
        .filter(|&v| v <= MAX_TABLE)
        .ok_or(Error::TooLarge(u64::MAX))
}

/// Table-backed builder: `members` lists every element below `conductor`.
fn from_members(members: impl IntoIterator<Item = u64>, conductor: u64) -> NumericalSemigroup {
    let mut table = vec![false; conductor as usize + 1];
    table[conductor as usize] = true;
    for x in members {
        if x < conductor {
            table[x as usize] = true;
        }
    }
    // the true conductor may sit below the threshold
    let c = table.iter().rposition(|&b| !b).map_or(0, |f| f + 1);
    table.truncate(c + 1);
    NumericalSemigroup::from_table(table, None)
}

/// `⟨q, q+1⟩`.
pub fn hermitian_semigroup(q: u64) -> Result<NumericalSemigroup> {
    if q < 2 {
        return Err(Error::BadInterval { a: q, x: 2 });
    }
    NumericalSemigroup::from_generators(&[q, q + 1])
}

/// `max(q − ℓ, 0)`.
pub fn hermitian_n_ell(q: u64, ell: usize) -> usize {
    (q as usize).saturating_sub(ell)
}

/// `⟨a, a+1, …, a+x−1⟩` for `2 ≤ x ≤ a`.
pub fn interval_semigroup(a: u64, x: u64) -> Result<NumericalSemigroup> {
    if x < 2 || x > a {
        return Err(Error::BadInterval { a, x });
    }
    let gens: Vec<u64> = (a..a + x).collect();
    NumericalSemigroup::from_generators(&gens)
}

/// The layers `{ka, …, ka + k(x−1)}` for `k = 0, 1, …` until they overlap.
pub fn interval_layers(a: u64, x: u64) -> Vec<(u64, u64)> {
    let mut out = Vec::new();
    for k in 0.. {
        let lo = k * a;
        let hi = k * a + k * (x - 1);
        out.push((lo, hi));
        if hi + 1 >= (k + 1) * a {
            break;
        }
    }
    out
}

/// `⌊(a − 1 − ℓ)/(x − 1)⌋ + 1` for `ℓ < a`, otherwise 0.
pub fn interval_n_ell(a: u64, x: u64, ell: usize) -> Result<usize> {
    if x < 2 || x > a {
        return Err(Error::BadInterval { a, x });
    }
    let ell = ell as u64;
    if ell + 1 > a {
        return Ok(0);
    }
    Ok(((a - 1 - ell) / (x - 1) + 1) as usize)
}

/// `c_m = q^m − q^⌊(m+1)/2⌋`.
pub fn gs_tower_conductor(q: u64, m: u32) -> Result<u64> {
    Ok(checked_pow(q, m)? - checked_pow(q, m.div_ceil(2))?)
}

/// `g_m = (q^⌊(m+1)/2⌋ − 1)(q^⌈(m−1)/2⌉ − 1)`.
pub fn gs_tower_genus(q: u64, m: u32) -> Result<u64> {
    Ok((checked_pow(q, m.div_ceil(2))? - 1) * (checked_pow(q, (m - 1).div_ceil(2))? - 1))
}

fn check_tower(q: u64, m: u32) -> Result<()> {
    if q < 2 || m < 1 {
        return Err(Error::ConstraintViolated(format!(
            "tower needs q >= 2 and m >= 1, got q={q} m={m}"
        )));
    }
    checked_pow(q, m).map(|_| ())
}

/// `Λ_1 = ℕ₀`, `Λ_m = q·Λ_{m−1} ∪ {i ≥ q^m − q^⌊(m+1)/2⌋}`.
pub fn gs_tower_semigroup_recursive(q: u64, m: u32) -> Result<NumericalSemigroup> {
    check_tower(q, m)?;
    let mut current = NumericalSemigroup::naturals();
    for level in 2..=m {
        let threshold = gs_tower_conductor(q, level)?;
        current = scale_and_fill(&current, q, threshold);
    }
    Ok(current)
}

/// `q·Λ ∪ {n ≥ threshold}`.
fn scale_and_fill(s: &NumericalSemigroup, q: u64, threshold: u64) -> NumericalSemigroup {
    let members = (0..threshold.div_ceil(q))
        .filter(|&y| s.contains(y as i64))
        .map(|y| q * y);
    from_members(members, threshold)
}

/// `A_i = {c_{2i−1} + j : 0 ≤ j < q^{i−1}(q−1)}`.
pub fn gs_tower_block(q: u64, i: u32) -> Result<Vec<u64>> {
    let c = gs_tower_conductor(q, 2 * i - 1)?;
    let len = checked_pow(q, i - 1)? * (q - 1);
    Ok((c..c + len).collect())
}

/// `Λ_m = ⊔_{i=1}^{⌊m/2⌋} q^{m−2i+1}·A_i ⊔ {j ≥ c_m}`.
pub fn gs_tower_semigroup_closed(q: u64, m: u32) -> Result<NumericalSemigroup> {
    check_tower(q, m)?;
    let mut members = Vec::new();
    for i in 1..=m / 2 {
        let scale = checked_pow(q, m - 2 * i + 1)?;
        members.extend(gs_tower_block(q, i)?.into_iter().map(|a| scale * a));
    }
    Ok(from_members(members, gs_tower_conductor(q, m)?))
}

/// Smallest `e ≥ 0` with `q^e ≥ target`.
fn ceil_log(q: u64, target: u64) -> u32 {
    let mut e = 0;
    let mut p = 1u64;
    while p < target {
        p = p.saturating_mul(q);
        e += 1;
    }
    e
}

/// `q^⌊(m+1−log_q(ℓ+1))/2⌋ − 1`, clamped at 0.
///
/// The exponent is the largest `j` with `q^{m+1−2j} ≥ ℓ + 1`.
pub fn gs_tower_n_ell(q: u64, m: u32, ell: usize) -> usize {
    let need = ceil_log(q, ell as u64 + 1) as i64;
    let j = (m as i64 + 1 - need).div_euclid(2);
    if j <= 0 {
        0
    } else {
        (q.pow(j as u32) - 1) as usize
    }
}

fn check_inductive(q: u64, b: &[u64]) -> Result<()> {
    if q < 2 {
        return Err(Error::ConstraintViolated(format!("q = {q} < 2")));
    }
    for w in b.windows(2) {
        if q * w[0] > w[1] {
            return Err(Error::ConstraintViolated(format!(
                "q * {} > {}",
                w[0], w[1]
            )));
        }
    }
    let m = b.len() as u32 + 1;
    let top = b.last().copied().unwrap_or(0);
    if checked_pow(q, m).is_err() || q.saturating_mul(top) > MAX_TABLE {
        return Err(Error::TooLarge(q.saturating_mul(top)));
    }
    Ok(())
}

/// `Λ_1 = ℕ₀`, `Λ_k = qΛ_{k−1} ∪ {n ≥ q·b_k}` for `k = 2, …, m`.
pub fn inductive_semigroup(q: u64, b: &[u64]) -> Result<NumericalSemigroup> {
    check_inductive(q, b)?;
    Ok(b.iter().fold(NumericalSemigroup::naturals(), |s, &bk| {
        scale_and_fill(&s, q, q * bk)
    }))
}

/// `b_{N+1} + Σ_{k=1}^{N} (1 − q) b_k` with `b_1 = 0` and
/// `N = ⌊m − log_q(ℓ+1)⌋`, the largest `N` with `q^{m−N} ≥ ℓ + 1`.
pub fn inductive_n_ell(q: u64, b: &[u64], ell: usize) -> Result<usize> {
    check_inductive(q, b)?;
    let m = b.len() as i64 + 1;
    let n = m - ceil_log(q, ell as u64 + 1) as i64;
    if n <= 0 {
        return Ok(0);
    }
    let n = n as usize;
    // b_k, 1-based, with b_1 = 0
    let bk = |k: usize| if k == 1 { 0 } else { b[k - 2] as i64 };
    let value = bk(n + 1) + (1..=n).map(|k| (1 - q as i64) * bk(k)).sum::<i64>();
    Ok(value.max(0) as usize)
}

/// `b_k = q^{k−1} − q^⌊(k−1)/2⌋` for `k = 2, …, m`: the inductive
/// parameters reproducing the tower semigroup `Λ_m`.
pub fn gs_tower_inductive_params(q: u64, m: u32) -> Vec<u64> {
    (2..=m).map(|k| q.pow(k - 1) - q.pow((k - 1) / 2)).collect()
}

/// Expected run structure of an inductive semigroup: for each `k` with
/// `q^{m−k} > 1`, there are `b_{k+1} − q·b_k` runs of `q^{m−k} − 1` gaps.
pub fn inductive_layer_runs(q: u64, b: &[u64]) -> Vec<(u64, u64)> {
    let m = b.len() as u32 + 1;
    let bk = |k: u32| if k == 1 { 0 } else { b[k as usize - 2] };
    (1..m)
        .map(|k| (bk(k + 1) - q * bk(k), q.pow(m - k) - 1))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hermitian() {
        assert_eq!(
            hermitian_semigroup(4).unwrap(),
            NumericalSemigroup::from_generators(&[4, 5]).unwrap()
        );
        let s = hermitian_semigroup(2).unwrap();
        assert_eq!(s.gaps(), &[1]);
        let s = hermitian_semigroup(3).unwrap();
        assert_eq!(s.gaps(), &[1, 2, 5]);
        assert_eq!(hermitian_n_ell(4, 1), 3);
        assert_eq!(hermitian_n_ell(4, 4), 0);
        assert_eq!(hermitian_n_ell(5, 2), 3);
        assert_eq!(hermitian_semigroup(5).unwrap().n_ell(2), 3);
    }

    #[test]
    fn intervals() {
        assert_eq!(
            interval_semigroup(4, 2).unwrap(),
            hermitian_semigroup(4).unwrap()
        );
        let s = interval_semigroup(5, 5).unwrap();
        assert_eq!(s.gaps(), &[1, 2, 3, 4]);
        let s = interval_semigroup(7, 3).unwrap();
        let elems: Vec<i64> = (0..30).filter(|&x| s.contains(x)).collect();
        let expected: Vec<i64> = [0]
            .into_iter()
            .chain(7..=9)
            .chain(14..=18)
            .chain(21..=29)
            .collect();
        assert_eq!(elems, expected);
        assert_eq!(
            interval_layers(7, 3),
            vec![(0, 0), (7, 9), (14, 18), (21, 27)]
        );
        assert_eq!(interval_n_ell(4, 2, 1).unwrap(), 3);
        assert_eq!(interval_n_ell(6, 4, 6).unwrap(), 0);
        assert_eq!(interval_n_ell(7, 3, 2).unwrap(), 3);
        assert_eq!(s.n_ell(2), 3);
        assert_eq!(
            interval_semigroup(3, 4).unwrap_err(),
            Error::BadInterval { a: 3, x: 4 }
        );
        assert_eq!(
            interval_semigroup(3, 1).unwrap_err(),
            Error::BadInterval { a: 3, x: 1 }
        );
    }

    #[test]
    fn tower_small_levels() {
        let s = gs_tower_semigroup_recursive(2, 3).unwrap();
        assert_eq!(s.to_string(), "{0,4,->}");
        assert_eq!((s.genus(), s.conductor()), (3, 4));
        assert_eq!(
            gs_tower_semigroup_recursive(3, 1).unwrap(),
            NumericalSemigroup::naturals()
        );
        let s = gs_tower_semigroup_recursive(2, 4).unwrap();
        assert_eq!(s.to_string(), "{0,8,10,12,->}");
        assert_eq!(s.gap_interval_profile().run_lengths(), vec![7, 1, 1]);
        assert_eq!(s.genus(), 9);
        assert_eq!(gs_tower_genus(2, 4).unwrap(), 9);
        assert_eq!(gs_tower_conductor(2, 4).unwrap(), 12);
    }

    #[test]
    fn tower_closed_form() {
        assert_eq!(gs_tower_block(2, 1).unwrap(), vec![0]);
        assert_eq!(gs_tower_block(2, 2).unwrap(), vec![4, 5]);
        assert_eq!(
            gs_tower_semigroup_closed(2, 4).unwrap(),
            gs_tower_semigroup_recursive(2, 4).unwrap()
        );
        assert_eq!(
            gs_tower_semigroup_closed(5, 1).unwrap(),
            NumericalSemigroup::naturals()
        );
        assert_eq!(
            gs_tower_semigroup_closed(3, 3).unwrap(),
            gs_tower_semigroup_recursive(3, 3).unwrap()
        );
    }

    #[test]
    fn tower_counts() {
        assert_eq!(gs_tower_n_ell(2, 4, 1), 3);
        assert_eq!(gs_tower_n_ell(2, 4, 2), 1);
        assert_eq!(gs_tower_n_ell(2, 3, 4), 0);
        // exact powers: ℓ + 1 = q^k is where float logs slip
        // runs of q=2, m=5 are [15, 3, 3]
        assert_eq!(gs_tower_n_ell(2, 5, 3), 3);
        assert_eq!(gs_tower_n_ell(2, 5, 4), 1);
        assert_eq!(gs_tower_semigroup_recursive(2, 5).unwrap().n_ell(3), 3);
    }

    #[test]
    fn inductive() {
        let s = inductive_semigroup(2, &[1, 3]).unwrap();
        assert_eq!(s.to_string(), "{0,4,6,->}");
        assert_eq!(s.gap_interval_profile().run_lengths(), vec![3, 1]);
        assert_eq!(
            inductive_semigroup(3, &[]).unwrap(),
            NumericalSemigroup::naturals()
        );
        assert_eq!(inductive_n_ell(2, &[1, 3], 1).unwrap(), 2);
        assert_eq!(inductive_n_ell(2, &[1, 3], 4).unwrap(), 0);
        assert_eq!(inductive_layer_runs(2, &[1, 3]), vec![(1, 3), (1, 1)]);
        assert!(matches!(
            inductive_semigroup(2, &[2, 3]),
            Err(Error::ConstraintViolated(_))
        ));
    }

    #[test]
    fn inductive_reproduces_tower() {
        for q in [2u64, 3] {
            for m in 1..=6 {
                let b = gs_tower_inductive_params(q, m);
                assert_eq!(
                    inductive_semigroup(q, &b).unwrap(),
                    gs_tower_semigroup_recursive(q, m).unwrap()
                );
                for ell in 1..40 {
                    assert_eq!(
                        inductive_n_ell(q, &b, ell).unwrap(),
                        gs_tower_n_ell(q, m, ell)
                    );
                }
            }
        }
    }

    #[test]
    fn spec_text_round_trip() {
        for text in [
            "hermitian q=4",
            "interval a=7 x=3",
            "gstower q=2 m=4",
            "inductive q=2 b=1,3",
            "inductive q=3 b=",
        ] {
            let spec: FamilySpec = text.parse().unwrap();
            assert_eq!(spec.to_string(), text);
        }
        assert!("hermitian".parse::<FamilySpec>().is_err());
        assert!("gstower q=2".parse::<FamilySpec>().is_err());
        assert!("torus q=2".parse::<FamilySpec>().is_err());
        assert!("hermitian q=2 q=3".parse::<FamilySpec>().is_err());
    }
}
