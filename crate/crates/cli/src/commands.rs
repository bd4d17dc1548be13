//! One function per subcommand. Each returns a [`ReportTable`]; printing is
//! left to the caller.

use std::str::FromStr;
use std::sync::Arc;

use numsemi::divisors::DivisorTable;
use numsemi::families;
use numsemi::feng_rao::{self, ExactSource};
use numsemi::ideal::{enumerate_attaining_ideals, principal_iff_attaining_on_symmetric};
use numsemi::{oracle, Error, FamilySpec, LowerBound, NumericalSemigroup, SearchConfig};

use crate::error::CliError;
use crate::report::ReportTable;

const NONE: &str = "-";

fn join<T: ToString>(values: impl IntoIterator<Item = T>) -> String {
    let parts: Vec<String> = values.into_iter().map(|v| v.to_string()).collect();
    if parts.is_empty() {
        NONE.to_string()
    } else {
        parts.join(",")
    }
}

pub fn cmd_info(s: &NumericalSemigroup) -> ReportTable {
    let mut t = ReportTable::new(["field", "value"], 0);
    let profile = s.gap_interval_profile();
    t.push(["generators".to_string(), join(s.minimal_generators())]);
    t.push(["gaps".to_string(), join(s.gaps().iter().copied())]);
    t.push(["genus".to_string(), s.genus().to_string()]);
    t.push(["frobenius".to_string(), s.frobenius().to_string()]);
    t.push(["conductor".to_string(), s.conductor().to_string()]);
    t.push(["multiplicity".to_string(), s.multiplicity().to_string()]);
    t.push(["symmetric".to_string(), s.is_symmetric().to_string()]);
    t.push([
        "hyperelliptic".to_string(),
        s.is_hyperelliptic().to_string(),
    ]);
    t.push(["runs".to_string(), join(profile.run_lengths())]);
    for ell in 1..=profile.max_run() {
        t.push([format!("n_{ell}"), profile.n_ell(ell).to_string()]);
    }
    t
}

/// Irreducible ideals `Λ ∖ D(i)` with `i ≤ max_index` whose Frobenius number
/// is `d + 2g − 1`.
pub fn cmd_attaining(s: &Arc<NumericalSemigroup>, max_index: usize) -> ReportTable {
    let mut t = ReportTable::new(["i", "lambda", "d", "bound", "complement"], 1);
    let g = s.genus();
    for (i, ideal) in enumerate_attaining_ideals(s, max_index) {
        let d = ideal.difference();
        t.push([
            i.to_string(),
            s.lambda(i).to_string(),
            d.to_string(),
            (d + 2 * g - 1).to_string(),
            join(ideal.complement().iter().copied()),
        ]);
    }
    t.sort();
    t
}

fn winner(lb: &LowerBound, u: &LowerBound) -> &'static str {
    match lb.value.cmp(&u.value) {
        std::cmp::Ordering::Greater => "lb",
        std::cmp::Ordering::Less => "u",
        std::cmp::Ordering::Equal => "tie",
    }
}

struct Exact {
    value: Option<i64>,
    source: &'static str,
    witness: Option<Vec<usize>>,
}

impl Exact {
    fn witness_cell(&self) -> String {
        self.witness
            .as_ref()
            .map_or_else(|| NONE.to_string(), |w| join(w.iter()))
    }
}

/// Exact `E_r`: a closed rule when one applies, else a search if `exact` is
/// given. A search over budget yields no value and source `over-budget`.
fn exact_value(
    s: &NumericalSemigroup,
    r: usize,
    exact: Option<&SearchConfig>,
) -> Result<Exact, CliError> {
    let found = |value, source, witness| {
        Ok(Exact {
            value,
            source,
            witness,
        })
    };
    if let Some((e, source)) = feng_rao::feng_rao_closed_form(s, r) {
        return found(Some(e), source.as_str(), None);
    }
    let Some(config) = exact else {
        return found(None, NONE, None);
    };
    match feng_rao::feng_rao_number_with(s, r, config) {
        Ok((e, delta)) => found(Some(e), ExactSource::Search.as_str(), Some(delta.witness)),
        Err(Error::BudgetExceeded(_)) => found(None, "over-budget", None),
        Err(e) => Err(e.into()),
    }
}

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map_or_else(|| NONE.to_string(), |v| v.to_string())
}

/// Both lower bounds on `E_r` for every `(r, ℓ)`, and `E_r` itself when it
/// is cheap or `exact` is set.
pub fn cmd_bounds(
    s: &NumericalSemigroup,
    rs: &[usize],
    ells: &[usize],
    exact: Option<&SearchConfig>,
) -> Result<ReportTable, CliError> {
    let mut t = ReportTable::new(
        [
            "r",
            "ell",
            "lb_first",
            "lb_second",
            "lb",
            "lb_branch",
            "u_first",
            "u_second",
            "u",
            "u_branch",
            "best",
            "e_r",
            "source",
            "witness",
        ],
        2,
    );
    for &r in rs {
        let exact = exact_value(s, r, exact)?;
        let u = feng_rao::bound_u(s, r)?;
        for &ell in ells {
            let lb = feng_rao::bound_lb(s, r, ell)?;
            t.push([
                r.to_string(),
                ell.to_string(),
                lb.first.to_string(),
                lb.second.to_string(),
                lb.value.to_string(),
                lb.branch.as_str().to_string(),
                u.first.to_string(),
                u.second.to_string(),
                u.value.to_string(),
                u.branch.as_str().to_string(),
                winner(&lb, &u).to_string(),
                opt(exact.value),
                exact.source.to_string(),
                exact.witness_cell(),
            ]);
        }
    }
    t.sort();
    Ok(t)
}

/// `δ_r(m)` for each `r`, with the lower bounds valid once `λ_m ≥ c`.
pub fn cmd_delta(
    s: &NumericalSemigroup,
    rs: &[usize],
    m: usize,
    ell: usize,
    config: &SearchConfig,
) -> Result<ReportTable, CliError> {
    let mut t = ReportTable::new(
        [
            "r",
            "m",
            "lambda_m",
            "delta",
            "witness",
            "evaluations",
            "lower_general",
            "lower_two_case",
        ],
        1,
    );
    for &r in rs {
        let d = feng_rao::delta_r_with(s, r, m, config)?;
        let lower = if r >= 2 && s.lambda(m) >= s.conductor() {
            Some(feng_rao::delta_lower_bound(s, r, m, ell)?)
        } else {
            None
        };
        t.push([
            r.to_string(),
            m.to_string(),
            s.lambda(m).to_string(),
            d.value.to_string(),
            join(d.witness.iter()),
            d.evaluations.to_string(),
            opt(lower.map(|l| l.general)),
            opt(lower.map(|l| l.two_case)),
        ]);
    }
    t.sort();
    Ok(t)
}

/// `E_r` for each `r`, by closed rule or by search at `m*`.
pub fn cmd_fengrao(
    s: &NumericalSemigroup,
    rs: &[usize],
    config: &SearchConfig,
) -> Result<ReportTable, CliError> {
    let mut t = ReportTable::new(["r", "e_r", "source", "m_star", "delta", "witness"], 1);
    let m = feng_rao::stable_index(s);
    let g = s.genus() as i64;
    for &r in rs {
        if r < 2 {
            return Err(Error::InvalidOrder(r).into());
        }
        let exact = exact_value(s, r, Some(config))?;
        let e = exact
            .value
            .ok_or(Error::BudgetExceeded(config.budget.unwrap_or(u64::MAX)))?;
        t.push([
            r.to_string(),
            e.to_string(),
            exact.source.to_string(),
            m.to_string(),
            (e + m as i64 + 2 - g).to_string(),
            exact.witness_cell(),
        ]);
    }
    t.sort();
    Ok(t)
}

/// Closed-form `n_ℓ` of a family against a scan of its gaps.
pub fn cmd_families(spec: &FamilySpec, ells: &[usize]) -> Result<ReportTable, CliError> {
    let s = spec.semigroup()?;
    let ells: Vec<usize> = if ells.is_empty() {
        (1..=s.gap_interval_profile().max_run() + 1).collect()
    } else {
        ells.to_vec()
    };
    let mut t = ReportTable::new(["ell", "closed", "scan", "status"], 1);
    for ell in ells {
        let closed = spec.n_ell(ell)?;
        let scan = oracle::gamma_count(&s, ell);
        let status = if closed == scan { "pass" } else { "fail" };
        t.push([
            ell.to_string(),
            closed.to_string(),
            scan.to_string(),
            status.to_string(),
        ]);
    }
    t.sort();
    Ok(t)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    DivisorCount,
    FrobeniusBound,
    Attainment,
    Families,
    FengRao,
    All,
}

impl Suite {
    fn includes(self, other: Suite) -> bool {
        self == Suite::All || self == other
    }
}

impl FromStr for Suite {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "lemma2" => Suite::DivisorCount,
            "theorem3" => Suite::FrobeniusBound,
            "theorem5" => Suite::Attainment,
            "families" => Suite::Families,
            "fengrao" => Suite::FengRao,
            "all" => Suite::All,
            other => return Err(CliError::Usage(format!("unknown suite {other:?}"))),
        })
    }
}

/// Result of [`cmd_verify`]: one row per check, plus the first failure.
#[derive(Clone, Debug)]
pub struct Verification {
    pub table: ReportTable,
    pub first_failure: Option<String>,
}

impl Verification {
    pub fn passed(&self) -> bool {
        self.first_failure.is_none()
    }
}

struct Checks {
    table: ReportTable,
    first_failure: Option<String>,
}

impl Checks {
    /// Records a check over `cases`; each case is `Err(description)` on
    /// failure. Only the first failing case is kept.
    fn run(
        &mut self,
        suite: &str,
        name: &str,
        cases: impl IntoIterator<Item = Result<(), String>>,
    ) {
        let mut count = 0usize;
        let mut failure = None;
        for case in cases {
            count += 1;
            if let Err(why) = case {
                failure.get_or_insert(why);
            }
        }
        let status = if failure.is_some() { "fail" } else { "pass" };
        self.table.push([
            suite.to_string(),
            name.to_string(),
            count.to_string(),
            status.to_string(),
            failure.clone().unwrap_or_else(|| NONE.to_string()),
        ]);
        if self.first_failure.is_none() {
            self.first_failure = failure.map(|f| format!("{suite}/{name}: {f}"));
        }
    }
}

fn expect(ok: bool, why: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(why())
    }
}

/// Largest ideal difference enumerated by the ideal suites.
fn ideal_depth(s: &NumericalSemigroup) -> usize {
    if s.genus() <= 20 {
        6
    } else {
        4
    }
}

/// Runs the oracle cross-checks of `suite` on `s`.
pub fn cmd_verify(
    s: &Arc<NumericalSemigroup>,
    family: Option<&FamilySpec>,
    suite: Suite,
    config: &SearchConfig,
) -> Result<Verification, CliError> {
    let mut checks = Checks {
        table: ReportTable::new(["suite", "check", "cases", "status", "counterexample"], 0),
        first_failure: None,
    };
    let c = s.conductor() as usize;
    let g = s.genus();

    if suite.includes(Suite::DivisorCount) {
        let table = DivisorTable::with_rows(s, 3 * c);
        checks.run(
            "lemma2",
            "nu_identity",
            (0..=3 * c).map(|i| {
                let row = table.row(i);
                let (below, pairs) = oracle::gap_counts(s, i);
                let nu = oracle::nu(s, i);
                expect(row.nu == nu && nu + below == i + pairs + 1, || {
                    format!("i={i} nu={nu} g(i)={below} G(i)={pairs}")
                })
            }),
        );
    }

    let needs_ideals = suite.includes(Suite::FrobeniusBound) || suite.includes(Suite::Attainment);
    let ideals = if needs_ideals {
        oracle::enumerate_ideals(s, ideal_depth(s))
    } else {
        Vec::new()
    };

    if suite.includes(Suite::FrobeniusBound) {
        checks.run(
            "theorem3",
            "frobenius_scan",
            ideals.iter().map(|ideal| {
                let (fast, slow) = (ideal.frobenius(), oracle::ideal_frobenius(ideal));
                expect(fast == slow, || {
                    format!("T={:?} frobenius {fast} vs {slow}", ideal.complement())
                })
            }),
        );
        checks.run(
            "theorem3",
            "frobenius_bound",
            ideals.iter().map(|ideal| {
                let cert = ideal.frobenius_bound();
                expect(cert.holds(), || {
                    format!(
                        "T={:?} frobenius {} > {}",
                        ideal.complement(),
                        cert.frobenius,
                        cert.bound
                    )
                })
            }),
        );
    }

    if suite.includes(Suite::Attainment) {
        let nonzero: Vec<_> = ideals.iter().filter(|i| i.difference() > 0).collect();
        let mut characterized = Vec::with_capacity(nonzero.len());
        for ideal in &nonzero {
            characterized.push(ideal.characterization()?);
        }
        checks.run(
            "theorem5",
            "conditions_agree",
            nonzero.iter().zip(&characterized).map(|(ideal, ch)| {
                expect(ch.all_agree(), || {
                    format!("T={:?} conditions {:?}", ideal.complement(), ch.as_array())
                })
            }),
        );
        let max_index = 3 * c + ideal_depth(s);
        let listed = enumerate_attaining_ideals(s, max_index);
        let mut cases = Vec::new();
        for (i, ideal) in &listed {
            let ok = ideal.attains_bound()?;
            cases.push(expect(ok, || format!("listed i={i} does not attain")));
        }
        for (ideal, ch) in nonzero.iter().zip(&characterized) {
            if ch.frobenius_attained {
                let found = listed.iter().any(|(_, l)| l == *ideal);
                cases.push(expect(found, || {
                    format!("T={:?} attains but is not listed", ideal.complement())
                }));
            }
        }
        checks.run("theorem5", "attaining_list", cases);
        if s.is_symmetric() {
            let ok = principal_iff_attaining_on_symmetric(s, 3 * c)?;
            checks.run(
                "theorem5",
                "symmetric_principal",
                [expect(ok, || {
                    format!("attaining and principal differ for some i <= {}", 3 * c)
                })],
            );
        }
    }

    if suite.includes(Suite::Families) {
        let profile = s.gap_interval_profile();
        let ells = 1..=profile.max_run() + 1;
        checks.run(
            "families",
            "n_ell_scan",
            ells.clone().map(|ell| {
                let (runs, scan) = (profile.n_ell(ell), oracle::gamma_count(s, ell));
                expect(runs == scan, || {
                    format!("ell={ell} runs {runs} vs scan {scan}")
                })
            }),
        );
        if let Some(spec) = family {
            let mut cases = Vec::new();
            for ell in ells {
                let closed = spec.n_ell(ell)?;
                let scan = oracle::gamma_count(s, ell);
                cases.push(expect(closed == scan, || {
                    format!("ell={ell} closed {closed} vs scan {scan}")
                }));
            }
            checks.run("families", "n_ell_closed_form", cases);
            if let FamilySpec::GsTower { q, m } = *spec {
                let closed = families::gs_tower_semigroup_closed(q, m)?;
                let genus = families::gs_tower_genus(q, m)?;
                let conductor = families::gs_tower_conductor(q, m)?;
                let inductive =
                    families::inductive_semigroup(q, &families::gs_tower_inductive_params(q, m))?;
                checks.run(
                    "families",
                    "tower_forms",
                    [
                        expect(closed == **s, || {
                            "recursive and closed forms differ".to_string()
                        }),
                        expect(genus == g as u64, || {
                            format!("genus formula {genus} vs {g}")
                        }),
                        expect(conductor == s.conductor(), || {
                            format!("conductor formula {conductor} vs {}", s.conductor())
                        }),
                        expect(inductive == **s, || {
                            "inductive parameters give another semigroup".to_string()
                        }),
                    ],
                );
            }
        }
    }

    if suite.includes(Suite::FengRao) {
        let mut cases = Vec::new();
        let m = feng_rao::stable_index(s);
        for r in 2..=4usize {
            let (e, delta) = feng_rao::feng_rao_number_with(s, r, config)?;
            if let Some((closed, source)) = feng_rao::feng_rao_closed_form(s, r) {
                cases.push(expect(closed == e, || {
                    format!("r={r} {} gives {closed}, search {e}", source.as_str())
                }));
            }
            let floor = r as i64 - i64::from(g == 0);
            let top = s.lambda(r - 1) as i64;
            cases.push(expect(floor <= e && e <= top, || {
                format!("r={r} E_r={e} outside [{floor}, {top}]")
            }));
            let u = feng_rao::bound_u(s, r)?;
            cases.push(expect(u.value <= e, || {
                format!("r={r} bound_u {} > E_r {e}", u.value)
            }));
            for ell in 2..=4 {
                let lb = feng_rao::bound_lb(s, r, ell)?;
                cases.push(expect(lb.value <= e, || {
                    format!("r={r} ell={ell} bound_lb {} > E_r {e}", lb.value)
                }));
            }
            let next = feng_rao::delta_r_with(s, r, m + 1, config)?;
            cases.push(expect(next.value == delta.value + 1, || {
                format!(
                    "r={r} delta at m*+1 is {}, expected {}",
                    next.value,
                    delta.value + 1
                )
            }));
        }
        checks.run("fengrao", "exact_vs_bounds", cases);
    }

    Ok(Verification {
        table: checks.table,
        first_failure: checks.first_failure,
    })
}
