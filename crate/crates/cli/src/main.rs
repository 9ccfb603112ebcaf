use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use sortnet_cli::commands;
use sortnet_cli::mc::resolve_threads;
use sortnet_cli::verify::DEFAULT_SEED;

/// Exact samplers and desk-scale verification for uniform random sorting
/// networks.
#[derive(Parser)]
#[command(name = "sortnet", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Sample one uniform sorting network and write it as JSON.
    Sample {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Enumerate all n-element sorting networks (n ≤ 6), one per line.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Write the CSV statistics bundle for a network file.
    Stats {
        /// Network JSON file.
        network: PathBuf,
        /// Output directory for the CSV files.
        #[arg(long, default_value = ".")]
        out: PathBuf,
        /// Time-grid resolution for trajectories (default: every step).
        #[arg(long)]
        grid: Option<usize>,
    },
    /// Exact distribution of the first swap location.
    FirstSwapDist {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exact probability of the double-flip configuration (even n).
    DoubleFlip {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Tabulate the limit profile L on a grid.
    LimitProfile {
        #[arg(long, default_value_t = 100)]
        grid: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Draw from the Archimedes measure.
    ArchSample {
        #[arg(long, default_value_t = 10_000)]
        samples: usize,
        /// Time parameter in (0,1).
        #[arg(long, default_value_t = 0.5)]
        t: f64,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Octagon/Hölder/swap-process checks for a network file.
    Check {
        /// Network JSON file.
        network: PathBuf,
        #[arg(long, default_value_t = 0.1)]
        eps: f64,
        #[arg(long, default_value_t = 200)]
        grid: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Great-circle geometry of a network file.
    GreatCircle {
        /// Network JSON file.
        network: PathBuf,
        #[arg(long, default_value = ".")]
        out: PathBuf,
    },
    /// Run the verification suite.
    Verify {
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long)]
        threads: Option<usize>,
        /// Comma-separated criterion ids to run (default: all).
        #[arg(long, value_delimiter = ',')]
        criteria: Option<Vec<u32>>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Sample { n, seed, out } => commands::cmd_sample(n, seed, out).map(|_| true),
        Command::Enumerate { n, out } => match commands::cmd_enumerate(n, out) {
            Err(e) if e.downcast_ref::<sortnet_core::counting::CountingError>().is_some() => {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
            other => other.map(|_| true),
        },
        Command::Stats { network, out, grid } => {
            commands::cmd_stats(&network, &out, grid).map(|_| true)
        }
        Command::FirstSwapDist { n, out } => commands::cmd_first_swap_dist(n, out).map(|_| true),
        Command::DoubleFlip { n, out } => match commands::cmd_double_flip(n, out) {
            Err(e) if e.downcast_ref::<sortnet_core::counting::CountingError>().is_some() => {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
            other => other.map(|_| true),
        },
        Command::LimitProfile { grid, out } => commands::cmd_limit_profile(grid, out).map(|_| true),
        Command::ArchSample { samples, t, seed, out } => {
            commands::cmd_arch_sample(samples, t, seed, out).map(|_| true)
        }
        Command::Check { network, eps, grid, out } => commands::cmd_check(&network, eps, grid, out),
        Command::GreatCircle { network, out } => {
            commands::cmd_great_circle(&network, &out).map(|_| true)
        }
        Command::Verify { seed, threads, criteria, out } => {
            commands::cmd_verify(seed, resolve_threads(threads), criteria, out)
        }
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
