mod args;
mod commands;

use std::process::ExitCode;

use clap::{CommandFactory, Parser};

use args::{Cli, Command};

/// Exit statuses: 0 success, 1 verification failure, 2 usage or capacity
/// error, 3 file or format error, 4 worker-pool failure.
#[derive(Debug)]
pub enum Failure {
    Verification(String),
    Usage(String),
    Core(chw_core::Error),
}

impl From<chw_core::Error> for Failure {
    fn from(e: chw_core::Error) -> Self {
        Failure::Core(e)
    }
}

fn exit_code(e: &chw_core::Error) -> u8 {
    use chw_core::Error::*;
    match e {
        Argument(_) | Capacity { .. } | Structure(_) | UnsupportedMode => 2,
        Format { .. } | Io { .. } | Serialization(_) => 3,
        Resource(_) => 4,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Transform(a) => commands::transform::run(a),
        Command::Verify(a) => commands::verify::run(a),
        Command::Simulate(a) => commands::simulate::run(a),
        Command::Bench(a) => commands::bench::run(a),
        Command::Generate(a) => commands::generate::run(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => Cli::command()
            .error(clap::error::ErrorKind::ArgumentConflict, msg)
            .exit(),
        Err(Failure::Verification(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Core(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
