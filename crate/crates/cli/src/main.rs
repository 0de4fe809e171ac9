//! `sasaki`: command-line front end for certifying extremal profiles and
//! computing join-manifold invariants.

mod args;
mod commands;
mod output;

use std::process::ExitCode;

use clap::Parser;

use args::Cli;
use output::Outcome;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(Outcome::Certified(body)) => emit(&cli, &body, ExitCode::SUCCESS),
        Ok(Outcome::Failed(body)) => emit(&cli, &body, ExitCode::from(1)),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}

fn emit(cli: &Cli, body: &str, code: ExitCode) -> ExitCode {
    match output::write(cli.out.as_deref(), body) {
        Ok(()) => code,
        Err(err) => {
            eprintln!("error: cannot write output: {err}");
            ExitCode::from(2)
        }
    }
}
