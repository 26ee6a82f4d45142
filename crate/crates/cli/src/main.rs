//! `hyperwave`: evaluate pseudospherical functions, write tables and run the
//! relation catalog from the command line.

mod args;
mod commands;
mod output;
mod spec;

use std::fmt;
use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command};

/// A command failure carrying its exit status: 2 for configuration and
/// validation problems, 1 for everything that went wrong while running.
#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    pub fn usage(message: impl Into<String>) -> Self {
        Self { code: 2, message: message.into() }
    }

    pub fn runtime(message: impl Into<String>) -> Self {
        Self { code: 1, message: message.into() }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl From<hyperwave_core::Error> for Failure {
    fn from(e: hyperwave_core::Error) -> Self {
        use hyperwave_core::Error;
        match e {
            Error::Domain(_) | Error::InvalidOptions(_) | Error::UnknownRelation(_) => Self::usage(e.to_string()),
            _ => Self::runtime(e.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Eval(a) => commands::eval(a, cli.max_terms),
        Command::Table(a) => commands::table(a, cli.max_terms),
        Command::Verify(a) => commands::verify(a, cli.max_terms),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("hyperwave: {f}");
            ExitCode::from(f.code)
        }
    }
}
