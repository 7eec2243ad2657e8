//! `bichroma`: chromatic polynomials of mixed 2-edge-coloured graphs from
//! the command line.

mod commands;
mod error;
mod svg;

use std::path::PathBuf;
use std::process::ExitCode;

use bichroma_core::enumeration::Universe;
use bichroma_core::verify::DEFAULT_SEED;
use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "bichroma", version, about)]
struct Cli {
    /// Worker threads for parallel sweeps.
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Engine {
    Recursive,
    Partition,
    Interpolate,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the chromatic polynomial of a .meg graph.
    Poly {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "recursive")]
        engine: Engine,
    },
    /// Print the structural census and both coefficient formulas against
    /// the true coefficients.
    Coeffs { file: PathBuf },
    /// Check engines, formulas and invariance tests on every labelled graph
    /// of the given order.
    Audit {
        #[arg(long)]
        n: usize,
        /// Directory for the third-coefficient disagreement report.
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Decide chromatic invariance of a 2-edge-coloured .meg graph.
    Invariant { file: PathBuf },
    /// Find a chromatically invariant colouring of a graph6 graph and write
    /// it as .meg.
    Synth {
        file: PathBuf,
        /// Output path; defaults to the input with a .meg extension.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build a member of a special family, write it as .meg and print its
    /// closed-form polynomial.
    Family {
        /// cor42, gk2, thm45 or hshift.
        kind: String,
        params: Vec<usize>,
        /// Output path; defaults to `<kind>-<params>.meg`.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Find the roots of a .meg graph's polynomial or of explicit
    /// coefficients.
    Roots(RootsArgs),
    /// Roots of every connected graph on n vertices as CSV, optionally
    /// plotted as SVG.
    Cloud {
        #[arg(long)]
        n: usize,
        #[arg(long, value_parser = parse_universe, default_value = "bichromatic")]
        universe: Universe,
        /// One colouring per symmetry class instead of all of them.
        #[arg(long)]
        dedup: bool,
        /// CSV output path; stdout if absent.
        #[arg(long)]
        csv: Option<PathBuf>,
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Run the acceptance suite.
    Verify {
        #[arg(long, env = "BICHROMA_SEED", default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Directory for reports; nothing is written without it.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct RootsArgs {
    file: Option<PathBuf>,
    /// Ascending coefficients separated by `/`, e.g. `0/2/-1/-2/1`.
    #[arg(long, allow_hyphen_values = true)]
    poly: Option<String>,
    #[arg(long, default_value_t = bichroma_core::roots::DEFAULT_TOLERANCE)]
    tol: f64,
}

fn parse_universe(s: &str) -> Result<Universe, String> {
    s.parse()
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(e) = rayon::ThreadPoolBuilder::new()
        .num_threads(cli.jobs.max(1))
        .build_global()
    {
        eprintln!("error: --jobs: {e}");
        return ExitCode::from(1);
    }
    match commands::run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
