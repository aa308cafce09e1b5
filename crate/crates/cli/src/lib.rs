//! `gramdet` command-line front end: argument parsing, dispatch and exit codes.

pub mod cache;
mod commands;
pub mod render;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use gramdet_core::Category;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_VERIFY: i32 = 2;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] gramdet_core::Error),
    #[error("{0}")]
    Usage(String),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
    #[error("malformed JSON value: {0}")]
    Decode(String),
    #[error("recomputed value differs from cache entry {}", .0.display())]
    CacheMismatch(PathBuf),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::CacheMismatch(_) => EXIT_VERIFY,
            _ => EXIT_USAGE,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    /// Determinant of the Gram matrix itself.
    Brute,
    /// Product formula.
    Closed,
    /// Product over epi diagram counts (o+, b+, s+ only).
    Epi,
    /// Brute force and product formula, compared.
    Both,
}

fn parse_category(s: &str) -> Result<Category, String> {
    s.parse::<Category>().map_err(|e| e.to_string())
}

#[derive(Debug, Parser)]
#[command(
    name = "gramdet",
    version,
    about = "Exact Gram and Weingarten matrices over partition categories"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    #[arg(
        long,
        env = "GRAMDET_CACHE_DIR",
        default_value = "./.gramdet-cache",
        global = true
    )]
    pub cache_dir: PathBuf,
    /// Recompute cached values and check them against the stored entries.
    #[arg(long, global = true)]
    pub no_cache: bool,
}

#[derive(Debug, Clone, Copy, Args)]
#[group(required = true, multiple = false)]
pub struct Target {
    /// Evaluate at this integer n.
    #[arg(long, allow_negative_numbers = true)]
    pub n: Option<i64>,
    /// Produce the polynomial in n.
    #[arg(long)]
    pub poly: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List the category's partitions of k points in canonical order.
    Enumerate {
        #[arg(value_parser = parse_category)]
        category: Category,
        k: usize,
    },
    /// Gram matrix n^{|p v q|} at an integer n.
    Gram {
        #[arg(value_parser = parse_category)]
        category: Category,
        k: usize,
        #[arg(long, allow_negative_numbers = true)]
        n: i64,
    },
    /// Gram determinant as a polynomial in n or at an integer n.
    Det {
        #[arg(value_parser = parse_category)]
        category: Category,
        k: usize,
        #[command(flatten)]
        target: Target,
        #[arg(long, value_enum, default_value_t = Method::Closed)]
        method: Method,
    },
    /// Inverse of the Gram matrix at an integer n.
    Weingarten {
        #[arg(value_parser = parse_category)]
        category: Category,
        k: usize,
        #[arg(long, allow_negative_numbers = true)]
        n: i64,
    },
    /// Block-count polynomial and partition invariants.
    Trace {
        #[arg(value_parser = parse_category)]
        category: Category,
        k: usize,
    },
    /// Epi diagrams onto k points, grouped by upper point count.
    Epi {
        #[arg(value_parser = parse_category)]
        category: Category,
        k: usize,
    },
    /// Compare brute-force determinants with the product formulas.
    Verify {
        #[arg(value_parser = parse_category)]
        category: Option<Category>,
        /// Largest k checked (default: a per-category bound).
        #[arg(long)]
        max_k: Option<usize>,
    },
    /// Jacobi parameters of the moment sequence (default: h+).
    Orthopoly {
        #[arg(value_parser = parse_category)]
        category: Option<Category>,
        /// Recurrence depth (default 8 for h+, 6 otherwise).
        #[arg(long)]
        depth: Option<usize>,
    },
}

/// Parses `args` (program name first), runs the command and returns the
/// process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{text}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{text}");
                    EXIT_USAGE
                }
            };
        }
    };
    match commands::execute(&cli, out, err) {
        Ok(true) => EXIT_OK,
        Ok(false) => EXIT_VERIFY,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
