//! Command-line front end for `numsemi`: spec parsing, the subcommands, and
//! table output.

pub mod commands;
pub mod error;
pub mod report;
pub mod spec;

pub use commands::{
    cmd_attaining, cmd_bounds, cmd_delta, cmd_families, cmd_fengrao, cmd_info, cmd_verify, Suite,
    Verification,
};
pub use error::CliError;
pub use report::{Format, ReportTable};
pub use spec::{parse_list, SemigroupSpec};
