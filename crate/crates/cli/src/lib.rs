//! Command-line front end for `qpart`: counting queries, series emission,
//! identity verification and count tables.
//!
//! Exit codes: 0 on success, 1 when two computation routes disagree or an
//! identity residual is nonzero, 2 on a usage error.

use std::collections::BTreeMap;

use clap::{Parser, Subcommand, ValueEnum};
use thiserror::Error;

mod commands;
pub mod record;

pub use record::{Check, CrossCheck, Format, MethodValue, OutputRecord, Payload};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Largest `--max-m` accepted by `table`.
pub const TABLE_MAX_M: usize = 10_000;

#[derive(Debug, Parser)]
#[command(
    name = "qpart",
    version,
    about = "Exact partition counts, q-series and symmetric-function identities"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CountMethod {
    Recurrence,
    Series,
    Denumerant,
    Conversion,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SeriesKind {
    /// Partitions into exactly `mu` distinct parts.
    Distinct,
    /// Partitions into exactly `mu` parts.
    Any,
    /// prod (1 - n^k).
    Pentagonal,
    /// Unrestricted partition numbers p(m).
    Partition,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Count partitions of m into exactly mu parts.
    Count {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        mu: usize,
        /// Require the parts to be mutually distinct.
        #[arg(long)]
        distinct: bool,
        #[arg(long, value_enum, default_value_t = CountMethod::All)]
        method: CountMethod,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Emit the coefficients c_0..c_K of a partition series.
    Series {
        #[arg(value_enum)]
        kind: SeriesKind,
        #[arg(long)]
        mu: Option<usize>,
        #[arg(long)]
        order: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run the identity suite and report one line per identity.
    Verify {
        #[arg(long, default_value_t = 12)]
        order: usize,
        #[arg(long, default_value_t = 50)]
        trials: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Emit the full (m, mu) count table.
    Table {
        #[arg(long)]
        max_m: usize,
        #[arg(long)]
        max_mu: usize,
        #[arg(long)]
        distinct: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// List the partitions of m into exactly mu parts (m <= 64).
    List {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        mu: usize,
        #[arg(long)]
        distinct: bool,
        /// Write each partition smallest part first.
        #[arg(long)]
        ascending: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Debug, Error)]
pub enum UsageError {
    #[error("series kind `{0}` requires --mu")]
    MissingMu(&'static str),
    #[error("--mu must be at least 1")]
    ZeroMu,
    #[error("method `{0}` needs --mu >= 1")]
    MethodNeedsParts(&'static str),
    #[error("verify needs --order >= 2")]
    OrderTooSmall,
    #[error("--max-m must be at most {TABLE_MAX_M}")]
    TableTooLarge,
    #[error("--max-mu must not exceed --max-m")]
    TableShape,
    #[error(transparent)]
    Partition(#[from] qpart::PartitionError),
}

/// What to print and how to exit.
#[derive(Debug)]
pub struct Outcome {
    pub record: OutputRecord,
    pub format: Format,
    pub exit_code: i32,
}

impl Outcome {
    pub fn stdout(&self) -> String {
        self.record.render(self.format)
    }
}

pub fn run(cli: Cli) -> Result<Outcome, UsageError> {
    let (record, format) = match cli.command {
        Command::Count {
            m,
            mu,
            distinct,
            method,
            format,
        } => (commands::count(m, mu, distinct, method)?, format),
        Command::Series {
            kind,
            mu,
            order,
            format,
        } => (commands::series(kind, mu, order)?, format),
        Command::Verify {
            order,
            trials,
            seed,
            format,
        } => (commands::verify(order, trials, seed)?, format),
        Command::Table {
            max_m,
            max_mu,
            distinct,
            format,
        } => (commands::table(max_m, max_mu, distinct)?, format),
        Command::List {
            m,
            mu,
            distinct,
            ascending,
            format,
        } => (commands::list(m, mu, distinct, ascending)?, format),
    };
    let exit_code = if record.cross_check.is_failure() {
        EXIT_MISMATCH
    } else {
        EXIT_OK
    };
    Ok(Outcome {
        record,
        format,
        exit_code,
    })
}

pub(crate) fn params<const N: usize>(pairs: [(&str, String); N]) -> BTreeMap<String, String> {
    pairs.into_iter().map(|(k, v)| (k.to_string(), v)).collect()
}
