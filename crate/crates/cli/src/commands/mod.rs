mod algebra;
mod bc;
mod biq;
mod mc;
mod poly;
mod surd;

use std::fmt::Display;

use crate::args::Command;
use crate::{CliError, Rendered};

pub fn dispatch(cmd: &Command) -> Result<Rendered, CliError> {
    match cmd {
        Command::Bc { op } => bc::run(op),
        Command::Mc { order, op } => mc::run(*order, op),
        Command::Algebra { op } => algebra::run(op),
        Command::Poly { op } => poly::run(op),
        Command::Biq { op } => biq::run(op),
        Command::Surd { op } => surd::run(op),
        Command::Corpus { .. } => unreachable!("corpus is handled by the caller"),
    }
}

fn usage(context: &str, e: impl Display) -> CliError {
    CliError::Usage(format!("{context}: {e}"))
}

fn compute(e: impl Display) -> CliError {
    CliError::Compute(e.to_string())
}
