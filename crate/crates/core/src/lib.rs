//! Numerical semigroups and their ideals.
//!
//! The crate covers the upper bound `d + 2g − 1` on the Frobenius number of a
//! semigroup ideal together with the ideals attaining it, exact generalized
//! order bounds `δ_r(m)` and Feng-Rao numbers `E_r` with their gap-interval
//! lower bounds, and closed forms for the gap-run counts `n_ℓ` of several
//! families (Hermitian, interval-generated, Garcia-Stichtenoth tower,
//! inductive).

pub mod divisors;
pub mod error;
pub mod families;
pub mod feng_rao;
pub mod ideal;
pub mod oracle;
pub mod semigroup;

pub use divisors::{DivisorRow, DivisorTable};
pub use error::{Error, Result};
pub use families::FamilySpec;
pub use feng_rao::{BoundReport, Branch, DeltaResult, LowerBound, SearchConfig};
pub use ideal::{Characterization, SemigroupIdeal};
pub use semigroup::{GapIntervalProfile, GapRun, NumericalSemigroup};
