//! `nestchroma`: nested chromatic numbers from the command line.
//!
//! Exit codes: 0 success, 1 other failure (including a partition that is not
//! a nested colouring), 2 unparsable input or usage, 3 solver disagrees with
//! the brute-force oracle.

mod enumerate;
mod generate;
mod input;
mod solve;
mod verify;

use std::process::ExitCode;

use clap::{Parser, Subcommand};

use input::ParseFailure;
use solve::OracleMismatch;
use verify::NotNested;

#[derive(Debug, Parser)]
#[command(name = "nestchroma", version, about = "Exact nested chromatic number of finite simple graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Compute χ_N with an optimal nested colouring.
    Solve(solve::SolveArgs),
    /// Build a graph family or apply a graph operation.
    Generate(generate::GenerateArgs),
    /// Generate all small graphs and run an experiment over them.
    Enumerate(enumerate::EnumerateArgs),
    /// Check whether a partition is a nested colouring.
    Verify(verify::VerifyArgs),
}

fn configure_threads() -> anyhow::Result<()> {
    if let Ok(value) = std::env::var("NESTCHROMA_THREADS") {
        let threads: usize = value
            .trim()
            .parse()
            .map_err(|_| anyhow::anyhow!("NESTCHROMA_THREADS must be a positive integer, got {value:?}"))?;
        anyhow::ensure!(threads > 0, "NESTCHROMA_THREADS must be positive");
        rayon::ThreadPoolBuilder::new().num_threads(threads).build_global()?;
    }
    Ok(())
}

fn exit_code(err: &anyhow::Error) -> u8 {
    if err.is::<ParseFailure>() {
        2
    } else if err.is::<OracleMismatch>() {
        3
    } else {
        1
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = configure_threads().and_then(|()| match &cli.command {
        Command::Solve(args) => solve::run(args),
        Command::Generate(args) => generate::run(args),
        Command::Enumerate(args) => enumerate::run(args),
        Command::Verify(args) => verify::run(args),
    });
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            if !err.is::<NotNested>() {
                eprintln!("error: {err:#}");
            }
            ExitCode::from(exit_code(&err))
        }
    }
}
