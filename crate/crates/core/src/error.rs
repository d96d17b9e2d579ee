use thiserror::Error;

use crate::kak::GateClass;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("matrix contains a non-finite entry")]
    NonFinite,

    #[error("matrix is not unitary: max |U U^dagger - I| = {deviation:e} exceeds {tol:e}")]
    NonUnitary { deviation: f64, tol: f64 },

    #[error("phase factor has modulus {modulus}, expected 1")]
    NonUnitPhase { modulus: f64 },

    #[error("invalid tolerance configuration: {0}")]
    InvalidTolerance(String),

    #[error("resource gate is not entangling (class {class:?}); local gates and the SWAP class cannot generate SU(4)")]
    NotEntangling { class: GateClass },

    #[error("angle {value} outside the admissible range {range}")]
    AngleOutOfRange { value: f64, range: &'static str },

    #[error("interaction angle pi is locally trivial and cannot be used as a resource")]
    LocallyTrivialAngle,

    #[error("resource angle {gamma:e} would need {needed} repetitions (limit {limit})")]
    ResourceTooWeak {
        gamma: f64,
        needed: f64,
        limit: usize,
    },

    #[error("rotation axis has norm {norm}, expected a unit vector")]
    InvalidAxis { norm: f64 },

    #[error("failed to diagonalize the magic-basis symmetric product")]
    Diagonalization,

    #[error("matrix is not a tensor product of single-qubit gates (residual {residual:e})")]
    NotLocal { residual: f64 },

    #[error("decomposition reconstruction residual {residual:e} exceeds {tol:e}")]
    Reconstruction { residual: f64, tol: f64 },

    #[error("synthesized circuit misses the target: residual {residual:e} exceeds {tol:e}")]
    Verification { residual: f64, tol: f64 },

    #[error("malformed matrix document: {0}")]
    MatrixFormat(String),
}
