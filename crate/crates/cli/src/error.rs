use std::path::PathBuf;

use kaksynth::GateClass;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot access {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("invalid usage: {0}")]
    Usage(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("input is not unitary: {0}")]
    NonUnitary(String),
    #[error("entangler is not entangling (class {0})")]
    NotEntangling(GateClass),
    #[error("verification failed: residual {residual:.16e} exceeds {tol:.16e}")]
    Verification { residual: f64, tol: f64 },
    #[error("synthesis failed: {0}")]
    Synthesis(kaksynth::Error),
}

impl CliError {
    /// Stable process exit status.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Io { .. } => 1,
            CliError::Usage(_) => 2,
            CliError::Parse(_) => 3,
            CliError::NonUnitary(_) => 4,
            CliError::NotEntangling(_) => 5,
            CliError::Verification { .. } => 6,
            CliError::Synthesis(_) => 7,
        }
    }
}

impl From<kaksynth::Error> for CliError {
    fn from(e: kaksynth::Error) -> Self {
        use kaksynth::Error as E;
        match e {
            E::NonUnitary { .. } => CliError::NonUnitary(e.to_string()),
            E::NonFinite | E::MatrixFormat(_) => CliError::Parse(e.to_string()),
            E::NotEntangling { class } => CliError::NotEntangling(class),
            E::Verification { residual, tol } => CliError::Verification { residual, tol },
            E::InvalidTolerance(msg) => CliError::Usage(msg),
            other => CliError::Synthesis(other),
        }
    }
}
