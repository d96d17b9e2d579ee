//! Full synthesis pipeline.
//!
//! A target `U = phase · k1 · N(c1, c2, c3) · k2` is rewritten as
//!
//! ```text
//! phase · (k1 k_x†) Z(c1) (k_x k_y†) Z(c2) (k_y) Z(c3) (k2)
//! ```
//!
//! with `Z(c) = e^{c(i/2)ZZ}`, and each nonzero block is built from two
//! copies of the amplified resource.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4};

use crate::blocksynth::{controlled_u_gamma, synth_zz_block};
use crate::circuit::{Circuit, CircuitElement};
use crate::error::{Error, Result};
use crate::kak::kak_decompose;
use crate::matcore::{phase_distance, LocalPair, ToleranceConfig, Unitary2, Unitary4};
use crate::zzsynth::{amplified_resource, k_x, k_y, ZzResource};

/// Summary of one synthesis run.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SynthesisReport {
    pub gamma: f64,
    pub apps_per_unit: usize,
    pub n: usize,
    pub entangler_count: usize,
    pub local_count: usize,
    pub residual: f64,
    pub bound: usize,
}

/// Entangler-only part of a report.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BoundReport {
    /// Angle of the amplified resource, in `[π/4, π/2]`.
    pub gamma: f64,
    pub apps_per_unit: usize,
    pub n: usize,
    pub bound: usize,
}

impl BoundReport {
    fn from_resource(r: &ZzResource) -> Self {
        Self {
            gamma: r.gamma,
            apps_per_unit: r.apps_per_unit,
            n: r.repetitions,
            bound: 6 * r.repetitions * r.apps_per_unit,
        }
    }
}

/// Entangler applications that suffice for every target.
pub fn upper_bound(entangler: &Unitary4, tol: &ToleranceConfig) -> Result<BoundReport> {
    tol.validate()?;
    Ok(BoundReport::from_resource(&amplified_resource(entangler, tol)?))
}

/// Compiles `target` into local layers and applications of `entangler`.
pub fn synthesize(
    target: &Unitary4,
    entangler: &Unitary4,
    tol: &ToleranceConfig,
) -> Result<(Circuit, SynthesisReport)> {
    tol.validate()?;
    let resource = amplified_resource(entangler, tol)?;
    let kak = kak_decompose(target, tol)?;
    let snapped = kak.c.snapped(tol.snap_tol);
    let kx = k_x();
    let ky = k_y();

    let mut raw = Circuit::local(kak.k2);
    let block = |circ: &mut Circuit, c: f64, keep: bool| -> Result<()> {
        if keep {
            circ.append(&synth_zz_block(c, &resource)?);
        }
        Ok(())
    };
    block(&mut raw, kak.c.c3, snapped.c3 != 0.0)?;
    raw.push_local(ky);
    block(&mut raw, kak.c.c2, snapped.c2 != 0.0)?;
    raw.push_local(kx.compose(&ky.adjoint()));
    block(&mut raw, kak.c.c1, snapped.c1 != 0.0)?;
    raw.push_local(kak.k1.compose(&kx.adjoint()));
    raw.rephase(kak.phase);

    let circuit = merge_locals(&raw);
    let residual = phase_distance(&circuit.evaluate(entangler), target);
    if residual.is_nan() || residual >= tol.verify_tol {
        return Err(Error::Verification {
            residual,
            tol: tol.verify_tol,
        });
    }
    let bound = BoundReport::from_resource(&resource);
    let report = SynthesisReport {
        gamma: bound.gamma,
        apps_per_unit: bound.apps_per_unit,
        n: bound.n,
        entangler_count: circuit.entangler_count(),
        local_count: circuit.local_count(),
        residual,
        bound: bound.bound,
    };
    Ok((circuit, report))
}

/// Whether `diag(I, u)` lies in `[π/4, π/2]`, the range where it is as
/// efficient a resource as CNOT.
pub fn efficient_as_cnot(u: &Unitary2) -> bool {
    efficient_coordinate(controlled_u_gamma(u), &ToleranceConfig::default())
}

/// Interval test on a coordinate, with `snap_tol` slack at both ends.
pub fn efficient_coordinate(gamma: f64, tol: &ToleranceConfig) -> bool {
    gamma >= FRAC_PI_4 - tol.snap_tol && gamma <= FRAC_PI_2 + tol.snap_tol
}

/// Multiplies adjacent local layers together and moves their phases into
/// the circuit phase, leaving every layer in `SU(2) ⊗ SU(2)`.
pub fn merge_locals(circuit: &Circuit) -> Circuit {
    let mut out: Vec<CircuitElement> = Vec::with_capacity(circuit.elements().len());
    let mut pending: Option<LocalPair> = None;
    let mut phase = circuit.phase();
    let mut flush = |out: &mut Vec<CircuitElement>, pending: &mut Option<LocalPair>| {
        if let Some(layer) = pending.take() {
            let (special, p) = layer.to_special();
            phase *= p;
            out.push(CircuitElement::Local(special));
        }
    };
    for el in circuit.elements() {
        match el {
            CircuitElement::Local(l) => {
                pending = Some(match pending {
                    Some(prev) => l.compose(&prev),
                    None => *l,
                });
            }
            CircuitElement::Entangler => {
                flush(&mut out, &mut pending);
                out.push(CircuitElement::Entangler);
            }
        }
    }
    flush(&mut out, &mut pending);
    let phase = phase / phase.norm();
    Circuit::from_parts(out, phase).expect("unit phase")
}
