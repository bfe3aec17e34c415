//! `mstd`: exhaustive counts, bounds, forbiddance graphs and verification
//! sweeps for MSTD sets in finite abelian groups.

use std::process::ExitCode;

use clap::Parser;

mod args;
mod commands;
mod output;

use args::{Cli, Command};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Count(a) => commands::count(&cli.common, a).map(|_| true),
        Command::Bound(a) => commands::bound(&cli.common, a).map(|_| true),
        Command::Forbid(a) => commands::forbid(&cli.common, a).map(|_| true),
        Command::Verify(a) => commands::verify(&cli.common, a),
        Command::Table(a) => commands::table(&cli.common, a).map(|_| true),
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
