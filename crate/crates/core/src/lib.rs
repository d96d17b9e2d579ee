//! Exact two-qubit gate synthesis over an arbitrary fixed entangler.
//!
//! A target in `U(4)` is split by the KAK decomposition into local layers
//! and an interaction `N(c1, c2, c3)`. Each interaction term is rebuilt from
//! a pure ZZ resource extracted from the entangler, giving a circuit of at
//! most `6·n·apps_per_unit` entangler applications.

pub mod batch;
pub mod blocksynth;
pub mod circuit;
pub mod compiler;
pub mod error;
pub mod gates;
pub mod kak;
pub mod matcore;
pub mod matrix_io;
pub mod random;
pub mod zzsynth;

pub use blocksynth::{
    block_params, controlled_u_circuit, controlled_u_gamma, synth_zz_block, u1_u2, AxisAngle,
    BlockParams, ControlledU,
};
pub use circuit::{evaluate, Circuit, CircuitElement};
pub use compiler::{
    efficient_as_cnot, merge_locals, synthesize, upper_bound, BoundReport, SynthesisReport,
};
pub use error::{Error, Result};
pub use kak::{
    canonicalize, classify, kak_decompose, locally_equivalent, CanonicalVector, GateClass,
    KakDecomposition,
};
pub use matcore::{
    phase_distance, project_special, tensor, Complex64, LocalPair, Pauli, ToleranceConfig,
    Unitary2, Unitary4,
};
pub use zzsynth::{amplify, extract_zz, reduce_angle, reflect_angle, ZzCase, ZzResource};
