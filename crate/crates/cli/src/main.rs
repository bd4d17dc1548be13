use std::io::{self, Write};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};
use numsemi::feng_rao::DEFAULT_BUDGET;
use numsemi::{FamilySpec, SearchConfig};
use numsemi_cli::{
    cmd_attaining, cmd_bounds, cmd_delta, cmd_families, cmd_fengrao, cmd_info, cmd_verify,
    parse_list, CliError, Format, ReportTable, SemigroupSpec, Suite,
};

#[derive(Parser)]
#[command(
    name = "numsemi",
    version,
    about = "Numerical semigroups, their ideals and Feng-Rao numbers"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    opts: Opts,
}

#[derive(Args)]
struct Opts {
    /// Generators, e.g. `4,5` or `3,37..38`.
    #[arg(long = "gen", global = true, value_name = "LIST")]
    generators: Option<String>,
    /// Gaps, e.g. `1..3,6,7,11`.
    #[arg(long, global = true, value_name = "LIST")]
    gaps: Option<String>,
    /// Family, e.g. `"hermitian q=4"` or `"gstower q=2 m=4"`.
    #[arg(long, global = true, value_name = "SPEC")]
    family: Option<String>,
    /// Largest index for `attaining`; defaults to 3c.
    #[arg(long, global = true)]
    max_i: Option<usize>,
    /// Orders r, comma separated.
    #[arg(long = "r", global = true, value_delimiter = ',')]
    r: Vec<usize>,
    /// Run lengths ℓ, comma separated.
    #[arg(long, global = true, value_delimiter = ',')]
    ell: Vec<usize>,
    /// Index m for `delta`.
    #[arg(long, global = true)]
    m: Option<usize>,
    /// Also compute E_r exactly in `bounds`.
    #[arg(long, global = true)]
    exact: bool,
    /// Union evaluations allowed per search; 0 for no limit.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    #[arg(long, global = true, default_value = "tsv")]
    format: Format,
    /// Threads for the exhaustive searches.
    #[arg(long, global = true, default_value_t = 1)]
    workers: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Gaps, genus, conductor and gap runs.
    Info,
    /// Irreducible ideals attaining the Frobenius bound.
    Attaining,
    /// Lower bounds on E_r, optionally with the exact value.
    Bounds,
    /// Exact δ_r(m).
    Delta,
    /// Exact Feng-Rao numbers E_r.
    Fengrao,
    /// Closed-form gap-run counts of a family against a scan.
    Families,
    /// Oracle cross-checks: lemma2, theorem3, theorem5, families, fengrao, all.
    Verify {
        #[arg(default_value = "all")]
        suite: Suite,
    },
}

impl Opts {
    fn spec(&self) -> Result<SemigroupSpec, CliError> {
        match (&self.generators, &self.gaps, &self.family) {
            (Some(g), None, None) => Ok(SemigroupSpec::Generators(parse_list(g)?)),
            (None, Some(g), None) => Ok(SemigroupSpec::Gaps(parse_list(g)?)),
            (None, None, Some(f)) => Ok(SemigroupSpec::Family(f.parse::<FamilySpec>()?)),
            _ => Err(CliError::Usage(
                "give exactly one of --gen, --gaps, --family".to_string(),
            )),
        }
    }

    fn config(&self) -> SearchConfig {
        SearchConfig {
            budget: (self.budget > 0).then_some(self.budget),
            workers: self.workers.max(1),
        }
    }

    fn rs(&self, default: &[usize]) -> Vec<usize> {
        if self.r.is_empty() {
            default.to_vec()
        } else {
            self.r.clone()
        }
    }

    fn ells(&self) -> Vec<usize> {
        if self.ell.is_empty() {
            vec![2]
        } else {
            self.ell.clone()
        }
    }
}

enum Outcome {
    Table(ReportTable),
    Verified(numsemi_cli::Verification),
}

fn run(cli: &Cli) -> Result<Outcome, CliError> {
    let opts = &cli.opts;
    let spec = opts.spec()?;
    let s = Arc::new(spec.build()?);
    let config = opts.config();
    let table = match &cli.command {
        Command::Info => cmd_info(&s),
        Command::Attaining => {
            let max_i = opts.max_i.unwrap_or(3 * s.conductor() as usize);
            cmd_attaining(&s, max_i)
        }
        Command::Bounds => {
            let exact = opts.exact.then_some(&config);
            cmd_bounds(&s, &opts.rs(&[2, 3, 4]), &opts.ells(), exact)?
        }
        Command::Delta => {
            let m = opts
                .m
                .ok_or_else(|| CliError::Usage("delta needs --m".to_string()))?;
            let ell = opts.ells()[0];
            cmd_delta(&s, &opts.rs(&[1, 2, 3]), m, ell, &config)?
        }
        Command::Fengrao => cmd_fengrao(&s, &opts.rs(&[2, 3, 4]), &config)?,
        Command::Families => {
            let family = spec
                .family()
                .ok_or_else(|| CliError::Usage("families needs --family".to_string()))?;
            cmd_families(family, &opts.ell)?
        }
        Command::Verify { suite } => {
            return Ok(Outcome::Verified(cmd_verify(
                &s,
                spec.family(),
                *suite,
                &config,
            )?));
        }
    };
    Ok(Outcome::Table(table))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let format = cli.opts.format;
    let stdout = io::stdout();
    let result = run(&cli).and_then(|outcome| match outcome {
        Outcome::Table(t) => t.write(stdout.lock(), format).map(|_| 0u8),
        Outcome::Verified(v) => {
            v.table.write(stdout.lock(), format)?;
            if let Some(failure) = &v.first_failure {
                writeln!(io::stderr(), "verification failed: {failure}")?;
                Ok(1)
            } else {
                Ok(0)
            }
        }
    });
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("numsemi: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
