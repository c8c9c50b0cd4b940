//! `gds` — batch front end over the greedy-defining-set library.
//!
//! Exit codes: 0 success (or a true verification), 1 verification false or
//! completion failure, 2 usage/parse errors, 3 size guard exceeded.

mod cmd;

use std::process::ExitCode;

use clap::Parser;

fn main() -> ExitCode {
    let cli = cmd::Cli::parse();
    match cmd::run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                gds_core::Error::Capability { .. } => ExitCode::from(3),
                gds_core::Error::AuditFailed { .. } => ExitCode::from(1),
                _ => ExitCode::from(2),
            }
        }
    }
}
