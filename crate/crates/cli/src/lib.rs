//! File formats and command implementations behind the `hrnr` binary.

pub mod commands;
pub mod io;
pub mod svg;

use std::fmt;
use std::process::ExitCode;

/// Why a command stopped before finishing its checks. Always exit code 2.
#[derive(Debug)]
pub enum CliError {
    Io(std::io::Error),
    Json(serde_json::Error),
    Core(hrnr_core::Error),
    Usage(String),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Io(e) => write!(f, "i/o error: {e}"),
            CliError::Json(e) => write!(f, "malformed json: {e}"),
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Usage(s) => write!(f, "{s}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Json(e)
    }
}

impl From<hrnr_core::Error> for CliError {
    fn from(e: hrnr_core::Error) -> Self {
        CliError::Core(e)
    }
}

/// Result of a command that ran to completion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Violation,
}

impl Verdict {
    pub fn from_pass(pass: bool) -> Self {
        if pass {
            Verdict::Pass
        } else {
            Verdict::Violation
        }
    }
}

/// 0 = pass, 1 = a property failed, 2 = bad input or usage.
pub fn exit_code(outcome: &Result<Verdict, CliError>) -> ExitCode {
    match outcome {
        Ok(Verdict::Pass) => ExitCode::from(0),
        Ok(Verdict::Violation) => ExitCode::from(1),
        Err(_) => ExitCode::from(2),
    }
}
