//! `ldpc`: construct, analyze, encode, decode and simulate LDPC codes.
//!
//! Exit codes: 0 success, 2 configuration/parameter error, 3 data or file
//! error.

mod args;
mod commands;

use clap::Parser;
use ldpc_core::Error;
use std::process::ExitCode;

fn main() -> ExitCode {
    let cli = args::Cli::parse();
    match commands::run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {}", err);
            match err {
                Error::Config(_) | Error::Parameter(_) | Error::Dimension(_) => ExitCode::from(2),
                Error::Parse { .. }
                | Error::Format(_)
                | Error::Structure(_)
                | Error::DegenerateCode
                | Error::Io(_) => ExitCode::from(3),
            }
        }
    }
}
