//! Batch drivers over independent inputs.
//!
//! With the `parallel` feature (on by default) [`Execution::Parallel`] runs
//! on the rayon pool; without it every mode runs sequentially.

use crate::circuit::Circuit;
use crate::compiler::{synthesize, SynthesisReport};
use crate::error::Result;
use crate::kak::{kak_decompose, KakDecomposition};
use crate::matcore::{ToleranceConfig, Unitary4};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Execution {
    Sequential,
    Parallel,
}

impl Default for Execution {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Execution::Parallel
        } else {
            Execution::Sequential
        }
    }
}

/// Applies `f` to every item, preserving order.
pub fn map<T, R, F>(items: &[T], exec: Execution, f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    match exec {
        #[cfg(feature = "parallel")]
        Execution::Parallel => {
            use rayon::prelude::*;
            items.par_iter().map(f).collect()
        }
        _ => items.iter().map(f).collect(),
    }
}

pub fn decompose_all(
    gates: &[Unitary4],
    tol: &ToleranceConfig,
    exec: Execution,
) -> Vec<Result<KakDecomposition>> {
    map(gates, exec, |u| kak_decompose(u, tol))
}

/// Synthesizes each `(target, entangler)` pair.
pub fn synthesize_all(
    jobs: &[(Unitary4, Unitary4)],
    tol: &ToleranceConfig,
    exec: Execution,
) -> Vec<Result<(Circuit, SynthesisReport)>> {
    map(jobs, exec, |(t, e)| synthesize(t, e, tol))
}
