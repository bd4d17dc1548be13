//! Textual semigroup specifications.
//!
//! Canonical forms are `gen:4,5`, `gaps:1,2,3,6,7,11` and
//! `family:hermitian q=4`. Lists accept inclusive ranges `a..b` and may be
//! wrapped in braces, so `gaps:{1..3,6,7,11}` parses too.

use std::fmt;
use std::str::FromStr;

use numsemi::{FamilySpec, NumericalSemigroup};

use crate::error::CliError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SemigroupSpec {
    Generators(Vec<u64>),
    Gaps(Vec<u64>),
    Family(FamilySpec),
}

impl SemigroupSpec {
    pub fn build(&self) -> Result<NumericalSemigroup, CliError> {
        Ok(match self {
            SemigroupSpec::Generators(g) => NumericalSemigroup::from_generators(g)?,
            SemigroupSpec::Gaps(g) => NumericalSemigroup::from_gaps(g)?,
            SemigroupSpec::Family(f) => f.semigroup()?,
        })
    }

    pub fn family(&self) -> Option<&FamilySpec> {
        match self {
            SemigroupSpec::Family(f) => Some(f),
            _ => None,
        }
    }
}

/// Parses `1,2,5..8` into `[1, 2, 5, 6, 7, 8]`. Empty input is the empty list.
pub fn parse_list(text: &str) -> Result<Vec<u64>, CliError> {
    let text = text.trim();
    let text = text
        .strip_prefix('{')
        .and_then(|t| t.strip_suffix('}'))
        .unwrap_or(text);
    let mut out = Vec::new();
    for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let number = |s: &str| {
            s.trim()
                .parse::<u64>()
                .map_err(|_| CliError::Usage(format!("bad list item {item:?}")))
        };
        match item.split_once("..") {
            Some((lo, hi)) => {
                let (lo, hi) = (number(lo)?, number(hi)?);
                if lo > hi {
                    return Err(CliError::Usage(format!("empty range {item:?}")));
                }
                out.extend(lo..=hi);
            }
            None => out.push(number(item)?),
        }
    }
    Ok(out)
}

fn join(values: &[u64]) -> String {
    values
        .iter()
        .map(u64::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

impl fmt::Display for SemigroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SemigroupSpec::Generators(g) => write!(f, "gen:{}", join(g)),
            SemigroupSpec::Gaps(g) => write!(f, "gaps:{}", join(g)),
            SemigroupSpec::Family(s) => write!(f, "family:{s}"),
        }
    }
}

impl FromStr for SemigroupSpec {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (kind, rest) = s
            .split_once(':')
            .ok_or_else(|| CliError::Usage(format!("expected gen:, gaps: or family: in {s:?}")))?;
        match kind.trim() {
            "gen" => Ok(SemigroupSpec::Generators(parse_list(rest)?)),
            "gaps" => Ok(SemigroupSpec::Gaps(parse_list(rest)?)),
            "family" => Ok(SemigroupSpec::Family(rest.parse()?)),
            other => Err(CliError::Usage(format!("unknown spec kind {other:?}"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lists_and_ranges() {
        assert_eq!(parse_list("4,5").unwrap(), vec![4, 5]);
        assert_eq!(
            parse_list("{1..3,6,7,11}").unwrap(),
            vec![1, 2, 3, 6, 7, 11]
        );
        assert_eq!(parse_list(" 3 , 37..38 ").unwrap(), vec![3, 37, 38]);
        assert_eq!(parse_list("").unwrap(), Vec::<u64>::new());
        assert!(parse_list("4,x").is_err());
        assert!(parse_list("5..3").is_err());
        assert!(parse_list("-1").is_err());
    }

    #[test]
    fn canonical_forms() {
        let s: SemigroupSpec = "gen:4,5".parse().unwrap();
        assert_eq!(s, SemigroupSpec::Generators(vec![4, 5]));
        assert_eq!(s.to_string(), "gen:4,5");
        let s: SemigroupSpec = "gaps:1..3,5".parse().unwrap();
        assert_eq!(s.to_string(), "gaps:1,2,3,5");
        let s: SemigroupSpec = "family:gstower q=2 m=4".parse().unwrap();
        assert_eq!(s.to_string(), "family:gstower q=2 m=4");
        assert_eq!(s.build().unwrap().genus(), 9);
        assert!("ideal:4".parse::<SemigroupSpec>().is_err());
        assert!("4,5".parse::<SemigroupSpec>().is_err());
    }
}
