use std::io;

use thiserror::Error;

/// Failures surfaced by the command-line tool, mapped onto exit codes.
#[derive(Debug, Error)]
pub enum CliError {
    /// Bad arguments or input files; exit code 2.
    #[error("input error: {0}")]
    Input(String),
    /// A self-check on a known identity failed; exit code 1.
    #[error("verification failed: {0}")]
    Verification(String),
    #[error("i/o error: {0}")]
    Io(#[from] io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Verification(_) => 1,
            CliError::Input(_) | CliError::Io(_) => 2,
        }
    }
}

impl From<purecone_core::Error> for CliError {
    fn from(err: purecone_core::Error) -> Self {
        use purecone_core::Error as E;
        match err {
            E::VerificationFailed(msg) => CliError::Verification(msg),
            E::ContractViolation(msg) => CliError::Verification(msg),
            other => CliError::Input(other.to_string()),
        }
    }
}

impl From<serde_json::Error> for CliError {
    fn from(err: serde_json::Error) -> Self {
        CliError::Input(format!("malformed JSON: {err}"))
    }
}
