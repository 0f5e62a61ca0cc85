//! Command-line front end for the `tessarine` toolkit.
//!
//! [`run`] takes the argument list and returns the exit code and both
//! output streams, so the binary, the corpus runner and the tests all go
//! through the same path.
//!
//! Exit codes: 0 success, 1 computational error, 2 usage or input error.

mod args;
mod commands;
mod corpus;
pub mod render;

use clap::error::ErrorKind;
use clap::Parser;
use serde_json::Value;

use args::{Cli, Command, Format};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { code: 0, stdout, stderr: String::new() }
    }
}

#[derive(Debug)]
pub enum CliError {
    /// Malformed input: exit code 2.
    Usage(String),
    /// The computation itself failed: exit code 1.
    Compute(String),
}

impl CliError {
    fn code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Compute(_) => 1,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Compute(m) => m,
        }
    }
}

/// A command result in both output formats.
pub struct Rendered {
    pub json: Value,
    pub text: String,
}

pub fn run<I, S>(args: I) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let argv = std::iter::once(std::ffi::OsString::from("tessarine")).chain(args.into_iter().map(Into::into));
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome::ok(rendered),
                _ => Outcome { code: 2, stdout: String::new(), stderr: rendered },
            };
        }
    };

    let mut format = cli.format;
    let result = match &cli.command {
        Command::Corpus { path } => return corpus::run_corpus(path),
        Command::Surd { op: args::SurdOp::Analyze { json: true, .. } } => {
            format = Format::Json;
            commands::dispatch(&cli.command)
        }
        other => commands::dispatch(other),
    };

    match result {
        Ok(r) => Outcome::ok(match format {
            Format::Json => format!("{}\n", serde_json::to_string_pretty(&r.json).expect("JSON values serialize")),
            Format::Text => {
                let mut t = r.text;
                if !t.ends_with('\n') {
                    t.push('\n');
                }
                t
            }
        }),
        Err(e) => Outcome { code: e.code(), stdout: String::new(), stderr: format!("error: {}\n", e.message()) },
    }
}
