//! `decolimit` command-line front end.
//!
//! Exit codes: 0 success or feasible, 2 usage, 3 circuit parse error,
//! 4 I/O error, 5 infeasible.

mod args;
mod commands;
mod format;

use std::process::ExitCode;

use clap::Parser;

use crate::args::{Cli, Command};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Nbar(a) => commands::nbar(&a),
        Command::Trace(a) => commands::trace(&a),
        Command::Limit(a) => commands::limit(&a),
        Command::Depth(a) => commands::depth(&a),
        Command::Verdict(a) => commands::verdict(&a),
    };
    match result {
        Ok(code) => code,
        Err(failure) => {
            eprintln!("error: {failure}");
            ExitCode::from(failure.exit_code())
        }
    }
}
