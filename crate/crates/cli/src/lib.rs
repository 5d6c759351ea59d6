//! The `stiefel` command line: per-manifold reports, parameter sweeps and the
//! oracle verification gate.
//!
//! Exit codes: 0 on success, 1 for usage or argument errors (including
//! invalid `(n, k)`), 2 when verification finds a disagreement.

use std::io::Write;
use std::ops::RangeInclusive;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use stiefel::{Family, ManifoldId};
use stiefel_oracle::verify::{self, Suite};
use stiefel_oracle::{BruteForce, Oracles, DEFAULT_BASIS_LIMIT, DEFAULT_TRIANGLE_MAX};

pub mod render;
pub mod sweep;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_VERIFY_FAILED: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "stiefel",
    version,
    about = "Mod-2 cohomology, characteristic classes and invariants of Stiefel manifold quotients"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Additive presentation of H*(M; Z2), cutoffs and Betti numbers.
    Presentation(SingleArgs),
    /// Tangent Stiefel-Whitney classes, dual classes and p1 (PV, Y).
    Classes(SingleArgs),
    /// Embedding, immersion and span bounds with ucharrank and parallelizability verdicts.
    Invariants(SingleArgs),
    /// One table row per valid (n, k) in the given ranges.
    Sweep(SweepArgs),
    /// Cross-check the library against brute-force oracles.
    Verify(VerifyArgs),
}

#[derive(Args, Debug)]
pub struct SingleArgs {
    /// V, W, PV, PW or Y.
    pub family: Family,
    pub n: u32,
    pub k: u32,
    #[arg(long, value_enum, default_value_t = Format::Plain)]
    pub format: Format,
}

#[derive(Args, Debug)]
pub struct SweepArgs {
    #[arg(long)]
    pub family: Family,
    /// Inclusive range `A..B` (or a single value).
    #[arg(long = "n", value_parser = parse_range)]
    pub n_range: RangeInclusive<u32>,
    /// Inclusive range `A..B` (or a single value).
    #[arg(long = "k", value_parser = parse_range)]
    pub k_range: RangeInclusive<u32>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    /// Write the table here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(long, default_value_t = 30)]
    pub max_n: u32,
    /// Comma-separated subset of parity, inverse, basis, duality, consistency.
    #[arg(long, value_delimiter = ',')]
    pub suites: Option<Vec<Suite>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Markdown,
    Plain,
}

/// Parses `A..B` (inclusive) or a bare `A`.
pub fn parse_range(s: &str) -> Result<RangeInclusive<u32>, String> {
    let parse = |t: &str| {
        t.trim()
            .parse::<u32>()
            .map_err(|e| format!("invalid bound `{t}`: {e}"))
    };
    let (a, b) = match s.split_once("..") {
        Some((a, b)) => (parse(a)?, parse(b.trim_start_matches('='))?),
        None => {
            let v = parse(s)?;
            (v, v)
        }
    };
    if a > b {
        return Err(format!("empty range {s}"));
    }
    Ok(a..=b)
}

/// Parses `args` (including the program name) and runs the command with the
/// brute-force oracles.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match parse(args, stdout, stderr) {
        Ok(cli) => {
            let triangle_max = match &cli.command {
                Command::Verify(v) => DEFAULT_TRIANGLE_MAX.max(v.max_n.into()),
                _ => 0,
            };
            let oracles = BruteForce::new(triangle_max, DEFAULT_BASIS_LIMIT);
            execute(cli, &oracles, stdout, stderr)
        }
        Err(code) => code,
    }
}

/// Like [`run`], with the oracles supplied by the caller.
pub fn run_with_oracles<I, T>(
    args: I,
    oracles: &dyn Oracles,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match parse(args, stdout, stderr) {
        Ok(cli) => execute(cli, oracles, stdout, stderr),
        Err(code) => code,
    }
}

fn parse<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<Cli, i32>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    Cli::try_parse_from(args).map_err(|e| {
        let rendered = e.render().to_string();
        if e.use_stderr() {
            let _ = write!(stderr, "{rendered}");
            EXIT_USAGE
        } else {
            let _ = write!(stdout, "{rendered}");
            EXIT_OK
        }
    })
}

fn execute(cli: Cli, oracles: &dyn Oracles, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    let result = match cli.command {
        Command::Presentation(a) => single(&a, render::presentation_document, stdout),
        Command::Classes(a) => single(&a, render::classes_document, stdout),
        Command::Invariants(a) => single(&a, render::invariants_document, stdout),
        Command::Sweep(a) => sweep::run(&a, stdout, stderr),
        Command::Verify(a) => {
            let suites = a.suites.unwrap_or_else(|| Suite::ALL.to_vec());
            let report = verify::run(oracles, a.max_n, &suites);
            if write!(stdout, "{report}").is_err() {
                return EXIT_USAGE;
            }
            return if report.passed() {
                EXIT_OK
            } else {
                EXIT_VERIFY_FAILED
            };
        }
    };
    match result {
        Ok(()) => EXIT_OK,
        Err(msg) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_USAGE
        }
    }
}

fn single(
    args: &SingleArgs,
    build: fn(ManifoldId) -> stiefel::Result<render::Document>,
    stdout: &mut dyn Write,
) -> Result<(), String> {
    let id = ManifoldId::new(args.family, args.n, args.k).map_err(|e| e.to_string())?;
    let doc = build(id).map_err(|e| e.to_string())?;
    let text = render::render_document(&doc, args.format).map_err(|e| e.to_string())?;
    stdout.write_all(text.as_bytes()).map_err(|e| e.to_string())
}
