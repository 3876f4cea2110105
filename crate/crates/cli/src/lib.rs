pub mod cli;
pub mod commands;
pub mod error;
pub mod progress;

use clap::Parser;

use crate::cli::{Cli, Command};
use crate::error::CliError;

/// Thread count: GAUSSGAP_THREADS wins over --threads; 0 means all cores.
fn thread_count(cli_threads: usize) -> usize {
    std::env::var("GAUSSGAP_THREADS")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(cli_threads)
}

pub fn dispatch(cli: Cli) -> Result<(), CliError> {
    let threads = thread_count(cli.threads);
    if threads > 0 {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
            .map_err(CliError::runtime)?;
    }
    match &cli.command {
        Command::Gaps(args) => commands::gaps::run(&commands::gaps::GapsPlan::from_args(args)?),
        Command::Wedge(args) => commands::wedge::run(args),
        Command::Euler(args) => commands::euler::run(args),
        Command::Verify(args) => commands::verify::run(args),
        Command::Figure(args) => commands::figure::run(args),
        Command::Run(args) => commands::run::run(args),
    }
}

pub fn main_impl() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // Help and version requests are not configuration errors.
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
