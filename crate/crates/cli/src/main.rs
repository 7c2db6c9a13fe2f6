//! `quadwaring`: generate, verify and bound Waring decompositions of powers
//! of the standard quadratic form.
//!
//! Exit status is 0 on success, 1 when a verification or a scorecard criterion fails
//! (or a decomposition cannot be produced), and 2 on usage errors.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

pub const OUT_DIR_ENV: &str = "QUADWARING_OUT_DIR";

#[derive(Parser, Debug)]
#[command(name = "quadwaring", version, about = "Exact Waring decompositions of (x_1^2 + ... + x_n^2)^s")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum FieldArg {
    Rational,
    Gaussian,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Solve for a decomposition of q_n^s and write its certificate.
    Generate {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        n: u32,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        s: u32,
        /// 0 picks the deterministic points (j, 1, ..., 1).
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Keep every signed form even when two differ by a sign.
        #[arg(long)]
        no_merge: bool,
        /// Certificate path; `-` writes to stdout. Defaults to
        /// `$QUADWARING_OUT_DIR/q<n>s<s>-seed<seed>.json`.
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Check a certificate by exact (or high precision) expansion.
    Verify {
        certificate: PathBuf,
        /// Expand in complex floating point instead of exactly.
        #[arg(long)]
        numeric: bool,
        #[arg(long, default_value_t = 1e-25)]
        tolerance: f64,
        /// Working precision in bits for `--numeric`.
        #[arg(long, default_value_t = quadwaring::certify::DEFAULT_PRECISION)]
        precision: usize,
    },
    /// Print the rank bounds for q_n^s.
    Bounds {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        s: u32,
        /// Size of a known decomposition, compared against the generic rank.
        #[arg(long)]
        achieved: Option<u64>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Tabulate bounds over ranges of n and s.
    Table {
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
        n_min: u64,
        #[arg(long)]
        n_max: u64,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
        s_min: u32,
        #[arg(long)]
        s_max: u32,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Print a decomposition valid for every n, with weights polynomial in n.
    ClosedForm {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        s: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Use the point (1, i) for the second pair family (s = 4 only).
        #[arg(long, value_enum, default_value_t = FieldArg::Rational)]
        field: FieldArg,
        /// Largest s accepted; the symbolic solve grows quickly with s.
        #[arg(long, default_value_t = 8)]
        max_s: u32,
    },
    /// Materialize a named formula at n and write its certificate.
    Builtin {
        /// One of s2, s2-real, s3, s4-real, s4-gaussian, s5, q8s2; `list`
        /// prints the names.
        name: String,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        n: Option<u32>,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Run the reproduction scorecard.
    CheckPaper {
        /// Run only these criteria (repeatable).
        #[arg(long = "criterion", value_parser = clap::value_parser!(u32).range(1..=12))]
        criteria: Vec<u32>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
