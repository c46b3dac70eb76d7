//! `hurwitz`: compute Hurwitz numbers, print tables, run verification
//! suites and manage the value cache.
//!
//! Exit codes: 0 success, 1 verification mismatch, 2 invalid input or an
//! unreadable cache, 3 base case unavailable.

mod args;
mod commands;
mod output;

use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command};
use commands::Failure;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Compute(a) => commands::compute(a),
        Command::Table(a) => commands::table(a),
        Command::Verify(a) => commands::verify(a),
        Command::CacheExport(a) => commands::cache_export(a),
        Command::CacheImport(a) => commands::cache_import(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            match &f {
                Failure::Mismatch => eprintln!("error: verification mismatch"),
                Failure::Invalid(msg) => eprintln!("error: {msg}"),
                Failure::Unavailable(key) => eprintln!("error: base case unavailable for {key}"),
            }
            ExitCode::from(f.code())
        }
    }
}
