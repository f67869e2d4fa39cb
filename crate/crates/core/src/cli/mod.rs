//! Command-line front end.
//!
//! Every verb renders its whole output to a string first, so a failed run
//! never leaves a half-written `--out` file behind.

mod compare;
mod config;
mod growth;
mod necklace;
mod table;
mod validate;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

pub use config::{Family, RunConfig};
pub use growth::{growth_counts, growth_with_truncation, Truncated};
pub use validate::{CheckResult, ValidationReport};

use crate::budget::Budget;
use crate::Result;

#[derive(Debug, Parser)]
#[command(name = "conjratio", version, about = "Exact growth and conjugacy growth of finitely generated groups")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Ball, sphere and conjugacy counts with both ratio columns.
    Growth(RunArgs),
    /// Cross-check the family's counting routines against brute force.
    Validate(RunArgs),
    /// Conjugacy ratios under two generating sets.
    Compare(RunArgs),
    /// Primitive and rotation-class counts of a language from its a(n) column.
    Necklace(NecklaceArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Args)]
pub struct RunArgs {
    #[arg(long, value_enum)]
    pub family: Family,
    /// Rank of the free group.
    #[arg(long, default_value_t = 2)]
    pub rank: usize,
    /// Dimension of the free abelian group.
    #[arg(long, default_value_t = 2)]
    pub dim: usize,
    /// Defining graph of a right-angled Artin group.
    #[arg(long)]
    pub graph: Option<PathBuf>,
    #[arg(long = "max-n", default_value_t = 10)]
    pub max_n: usize,
    /// Extra radius for brute-force conjugation closure
    /// [default: 2 for free groups, otherwise max-n].
    #[arg(long)]
    pub slack: Option<usize>,
    /// Number of trailing values in windowed estimates.
    #[arg(long, default_value_t = 5)]
    pub window: usize,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct NecklaceArgs {
    /// File holding a(1), a(2), ... as a bare column or as `n,value` rows.
    pub input: PathBuf,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// Rendered output of a verb and whether it succeeded.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub text: String,
    pub success: bool,
}

impl Command {
    pub fn out(&self) -> Option<&PathBuf> {
        match self {
            Command::Growth(a) | Command::Validate(a) | Command::Compare(a) => a.out.as_ref(),
            Command::Necklace(a) => a.out.as_ref(),
        }
    }
}

pub fn run(command: &Command, budget: Budget) -> Result<Outcome> {
    let ok = |text| Outcome { text, success: true };
    match command {
        Command::Growth(args) => {
            let cfg = RunConfig::from_args(args)?;
            let result = growth_with_truncation(&cfg, budget)?;
            Ok(ok(growth::render(&cfg, &result, args.format)))
        }
        Command::Validate(args) => {
            let cfg = RunConfig::from_args(args)?;
            let report = validate::run(&cfg, budget);
            Ok(Outcome { text: report.render(args.format), success: report.passed() })
        }
        Command::Compare(args) => {
            let cfg = RunConfig::from_args(args)?;
            let result = compare::run(&cfg, budget)?;
            Ok(ok(compare::render(&cfg, &result, args.format)))
        }
        Command::Necklace(args) => {
            let text = std::fs::read_to_string(&args.input)
                .map_err(|e| crate::Error::Config(format!("{}: {e}", args.input.display())))?;
            let a = necklace::parse_counts(&text)?;
            Ok(ok(necklace::render(&a, args.format)?))
        }
    }
}
