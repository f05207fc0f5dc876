mod compute;
mod format;
mod oeis;
mod verify;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

pub const EXIT_FAIL: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "zagier",
    version,
    about = "Exact modified Bernoulli numbers and friends"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print a sequence for n = 1..max-n (v starts at n = 0).
    Compute {
        sequence: compute::Sequence,
        #[command(flatten)]
        bounds: Bounds,
        /// Evaluate bstar-poly at this integer instead of printing polynomials.
        #[arg(long, allow_hyphen_values = true)]
        j: Option<i64>,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Run a verification suite and print its JSON report.
    Verify {
        suite: verify::Suite,
        #[command(flatten)]
        bounds: Bounds,
        /// Series order for the generating-function suites.
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        order: Option<u64>,
        /// Largest even n for the two Laurent-series pipelines.
        #[arg(long)]
        heavy_max: Option<u64>,
    },
    /// Export or compare alpha_2n/4 against OEIS A216912.
    Oeis {
        action: oeis::Action,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        max_n: Option<u64>,
        /// b-file to compare against instead of the bundled snapshot.
        #[arg(long)]
        snapshot: Option<PathBuf>,
        /// Download the b-file from oeis.org, falling back to the snapshot.
        #[arg(long)]
        fetch: bool,
    },
}

#[derive(Args, Debug, Clone, Copy)]
pub struct Bounds {
    /// A single index.
    #[arg(long, conflicts_with = "max_n", value_parser = clap::value_parser!(u64).range(1..))]
    n: Option<u64>,
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    max_n: Option<u64>,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Bfile,
    Csv,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = match cli.command {
        Command::Compute {
            sequence,
            bounds,
            j,
            format,
        } => compute::run(sequence, bounds, j, format),
        Command::Verify {
            suite,
            bounds,
            order,
            heavy_max,
        } => verify::run(suite, bounds, order, heavy_max),
        Command::Oeis {
            action,
            max_n,
            snapshot,
            fetch,
        } => oeis::run(action, max_n, snapshot.as_deref(), fetch),
    };
    match out {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}
