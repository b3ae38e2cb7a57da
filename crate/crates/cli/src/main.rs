mod args;
mod commands;
mod io;

use std::fs;
use std::process::ExitCode;

use clap::Parser;

use args::Cli;
use commands::{dispatch, CliError};
use equitable::scalars::{quiet_term_bound_panics, set_term_bound};

fn main() -> ExitCode {
    let cli = Cli::parse();
    quiet_term_bound_panics();
    if let Some(bound) = cli.global.term_bound {
        set_term_bound(bound);
    }
    let outcome = match dispatch(&cli) {
        Ok(o) => o,
        Err(e) => {
            if let Some(m) = e.message() {
                eprintln!("error: {m}");
            }
            return ExitCode::from(e.code());
        }
    };
    match &cli.global.out {
        Some(path) => {
            if let Err(e) = fs::write(path, &outcome.text) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(CliError::Usage(String::new()).code());
            }
        }
        None => print!("{}", outcome.text),
    }
    if outcome.ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(CliError::VerifyFailed.code())
    }
}
