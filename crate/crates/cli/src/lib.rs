//! `purecone`: command-line front end for the pure-ray obstruction library.
//!
//! Every subcommand prints one JSON report (schema version `"1"`) to standard
//! output or to `--out`. Exit codes: `0` success, `1` a verification check
//! failed, `2` bad input or usage.

pub mod commands;
pub mod error;
pub mod input;
pub mod report;
pub mod search;

use std::ffi::OsString;
use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};

pub use error::CliError;
pub use report::Report;

#[derive(Debug, Parser)]
#[command(name = "purecone", version, about = "Exact obstructions for points on pure Betti rays")]
pub struct Cli {
    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct LieFlags {
    /// Also eliminate dimension vectors no Lie algebra generated in degree 1 can have.
    #[arg(long)]
    pub prune_lie: bool,
    /// Also eliminate cases whose Hilbert numerator has a negative coefficient.
    #[arg(long)]
    pub nonneg_quotient: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Primitive integral point and HK residuals for a degree sequence.
    Hk {
        /// Degree sequence, e.g. 0,6,20,21.
        #[arg(long, value_delimiter = ',', num_args = 1, allow_hyphen_values = true, required = true)]
        d: Vec<i64>,
    },
    /// Per-ring verdicts for a point (default: the primitive point).
    Obstruct {
        #[arg(long, value_delimiter = ',', num_args = 1, allow_hyphen_values = true, required_unless_present = "input")]
        d: Vec<i64>,
        /// Betti numbers; defaults to the primitive point.
        #[arg(long)]
        beta: Option<String>,
        /// Variables of the polynomial ring; defaults to the codimension.
        #[arg(long)]
        n_vars: Option<u32>,
        /// Lie algebra dimension; defaults to the codimension.
        #[arg(long)]
        lie_dim: Option<u32>,
        /// Restrict the Lie check to this dimension vector (repeatable), e.g. 2,1.
        #[arg(long = "h")]
        h: Vec<String>,
        /// JSON point file {"d", "beta", "n_vars", "lie_dim"}.
        #[arg(long, conflicts_with = "d")]
        input: Option<PathBuf>,
        #[command(flatten)]
        lie: LieFlags,
    },
    /// Scan canonical degree sequences for obstructed primitive points.
    Search {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        dmax: i64,
        /// Comma-separated targets such as krull:3,lie:3; defaults to krull:N,lie:N.
        #[arg(long)]
        targets: Option<String>,
        /// Worker threads; overrides PURECONE_THREADS.
        #[arg(long)]
        threads: Option<usize>,
        #[command(flatten)]
        lie: LieFlags,
    },
    /// Reproduce the codimension-3 counterexample over k[x,y,z] and the Heisenberg algebra.
    #[command(name = "verify-bs61")]
    VerifyBs61,
    /// Reproduce the codimension-4 counterexample over all 4-dimensional Lie algebras.
    #[command(name = "verify-bs62")]
    VerifyBs62,
    /// Check ε-basis identities and the syzygy/annihilator correspondence.
    #[command(name = "verify-groupring")]
    VerifyGroupring {
        /// JSON file {"variables", "m", "generators", "degree_bound"}.
        #[arg(long)]
        input: PathBuf,
    },
    /// Check the integer-valued polynomial certificates over D = F2 + t(t+1)T.
    #[command(name = "verify-intd")]
    VerifyIntd {
        #[arg(long, default_value_t = 1)]
        n: u32,
        /// Decomposition file; defaults to the bundled examples.
        #[arg(long)]
        decomp: Option<PathBuf>,
    },
    /// Run `obstruct` on every line of a JSON-lines file ("-" for stdin).
    Batch {
        #[arg(long)]
        input: PathBuf,
        #[command(flatten)]
        lie: LieFlags,
    },
}

/// Parses `argv` (including the program name), runs the command and returns
/// the process exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match execute(&cli) {
        Ok(report) => match emit(&cli, &report) {
            Ok(()) => 0,
            Err(e) => {
                eprintln!("purecone: {e}");
                e.exit_code()
            }
        },
        Err(e) => {
            eprintln!("purecone: {e}");
            e.exit_code()
        }
    }
}

/// Runs a parsed command and returns its report with `elapsed` filled in.
pub fn execute(cli: &Cli) -> Result<Report, CliError> {
    let start = Instant::now();
    let mut report = commands::dispatch(&cli.command)?;
    report.elapsed_ms = start.elapsed().as_millis();
    Ok(report)
}

fn emit(cli: &Cli, report: &Report) -> Result<(), CliError> {
    let text = report.render();
    match &cli.out {
        Some(path) => fs::write(path, text)?,
        None => {
            let mut out = io::stdout().lock();
            out.write_all(text.as_bytes())?;
            out.flush()?;
        }
    }
    Ok(())
}
