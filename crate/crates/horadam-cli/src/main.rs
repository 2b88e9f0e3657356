//! `horadam`: exact evaluation, tabulation, verification and benchmarking
//! of second-order linear recurrences R_{n+1} = f·R_n + g·R_{n-1}.
//!
//! Exit status: 0 on success, 1 on identity failure or an evaluation-domain
//! error, 2 on usage errors.

mod commands;
mod source;

use clap::{Args, Parser, Subcommand, ValueEnum};
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "horadam", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate R_n at one index.
    Eval(EvalArgs),
    /// Tabulate R_n over an index range.
    Table(TableArgs),
    /// Run identity-verification suites over seeded random specs.
    Verify(VerifyArgs),
    /// Time evaluation methods against each other on one index.
    Bench(BenchArgs),
    /// List the built-in sequences.
    Catalog(CatalogArgs),
}

/// Where the recurrence comes from: a catalog name, or explicit
/// coefficients. Coefficients accept a rational ("5", "-3/7") or
/// comma-separated polynomial coefficients lowest degree first ("0,2"
/// is 2x); polynomial input requires --at.
#[derive(Args, Clone)]
struct SpecSource {
    /// Catalog sequence name (see `horadam catalog`).
    #[arg(long, conflicts_with_all = ["f", "g", "h", "k"])]
    seq: Option<String>,
    /// Coefficient f (rational or polynomial coefficient list).
    #[arg(long, requires_all = ["g", "h", "k"], allow_hyphen_values = true)]
    f: Option<String>,
    /// Coefficient g.
    #[arg(long, allow_hyphen_values = true)]
    g: Option<String>,
    /// Seed h = R_0.
    #[arg(long, allow_hyphen_values = true)]
    h: Option<String>,
    /// Seed k = R_1.
    #[arg(long, allow_hyphen_values = true)]
    k: Option<String>,
    /// Sample point at which a symbolic spec is evaluated.
    #[arg(long, allow_hyphen_values = true)]
    at: Option<String>,
}

#[derive(Copy, Clone, PartialEq, Eq, Debug, ValueEnum)]
enum Method {
    /// Linear iteration (the oracle).
    Iter,
    /// Companion-matrix power, O(log n).
    Fast,
    /// Binet formula over the formal quadratic extension.
    Binet,
    /// r_fast as value source, every applicable closed form cross-checked.
    Auto,
}

impl Method {
    fn name(self) -> &'static str {
        match self {
            Method::Iter => "iter",
            Method::Fast => "fast",
            Method::Binet => "binet",
            Method::Auto => "auto",
        }
    }
}

#[derive(Copy, Clone, PartialEq, Eq, Debug, ValueEnum)]
enum Format {
    Plain,
    Csv,
    Json,
}

#[derive(Args)]
struct EvalArgs {
    #[command(flatten)]
    source: SpecSource,
    /// Index to evaluate.
    #[arg(short, allow_hyphen_values = true)]
    n: i64,
    #[arg(long, value_enum, default_value_t = Method::Fast)]
    method: Method,
    /// Also run every applicable method and report agreement.
    #[arg(long)]
    check: bool,
    #[arg(long, value_enum, default_value_t = Format::Plain)]
    format: Format,
}

#[derive(Args)]
struct TableArgs {
    #[command(flatten)]
    source: SpecSource,
    /// First index, inclusive.
    #[arg(long, allow_hyphen_values = true)]
    from: i64,
    /// Last index, inclusive.
    #[arg(long, allow_hyphen_values = true)]
    to: i64,
    #[arg(long, value_enum, default_value_t = Method::Fast)]
    method: Method,
    #[arg(long, value_enum, default_value_t = Format::Plain)]
    format: Format,
}

#[derive(Args)]
struct VerifyArgs {
    /// Suite name (matrix, cassini, dispatch, catalog, binet, diag,
    /// sums, addition) or "all".
    #[arg(long, default_value = "all")]
    suite: String,
    /// Number of random specs per suite.
    #[arg(long, default_value_t = 100)]
    trials: u64,
    /// Seed of the deterministic generator.
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Half-width of the index sweep per spec.
    #[arg(long, default_value_t = 15)]
    nmax: i64,
    #[arg(long, value_enum, default_value_t = Format::Plain)]
    format: Format,
}

#[derive(Args)]
struct BenchArgs {
    #[command(flatten)]
    source: SpecSource,
    /// Index to evaluate.
    #[arg(short, allow_hyphen_values = true)]
    n: i64,
    /// Comma-separated methods to time (iter, fast, binet).
    #[arg(long, default_value = "iter,fast")]
    methods: String,
    #[arg(long, value_enum, default_value_t = Format::Plain)]
    format: Format,
}

#[derive(Args)]
struct CatalogArgs {
    #[arg(long, value_enum, default_value_t = Format::Plain)]
    format: Format,
}

/// CLI failures, by exit status.
enum CliError {
    /// Malformed request: exit 2.
    Usage(String),
    /// Valid request that the mathematics refuses (non-unit divisor,
    /// wrong case, ...) or a failed identity check: exit 1.
    Failure(String),
}

impl From<horadam::Error> for CliError {
    fn from(e: horadam::Error) -> Self {
        use horadam::Error::*;
        match e {
            UnknownSequence { .. } | SamplePointRequired { .. } | Parse { .. }
            | ZeroDenominator | ZeroRecurrenceCoefficient { .. } => CliError::Usage(e.to_string()),
            _ => CliError::Failure(e.to_string()),
        }
    }
}

fn main() -> ExitCode {
    // Die quietly when a downstream pipe closes, like any line filter.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Eval(args) => commands::eval(args),
        Command::Table(args) => commands::table(args),
        Command::Verify(args) => commands::verify(args),
        Command::Bench(args) => commands::bench(args),
        Command::Catalog(args) => commands::catalog(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Failure(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("usage error: {msg}");
            ExitCode::from(2)
        }
    }
}
