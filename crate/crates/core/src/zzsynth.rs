//! Extraction of a pure ZZ interaction from an arbitrary entangler.
//!
//! Writing the entangler as `U_g = phase · k_l · A · k_r` with
//! `A = N(γ1, γ2, γ3)` on its chamber point, one or two applications of
//! `U_g` plus local gates give `e^{γ (i/2) σz⊗σz}`:
//!
//! | chamber point                     | circuit                     | γ     |
//! |-----------------------------------|-----------------------------|-------|
//! | `γ2 = γ3 = 0`                     | `k_x A k_x†`                | `γ1`  |
//! | `γ3 = 0`, `γ1 = γ2 = π/2`         | two-application circuit     | `π/2` |
//! | `γ3 = 0`, `γ2 ∈ (0, π/2)`         | `A σx A σx`, axis via `k_x` | `2γ1` |
//! | `γ3 ∈ (0, π/2)`                   | `A σz A σz`                 | `2γ3` |
//!
//! On the `γ1 = π/2` slice of the third family `2γ1 = π` is locally trivial,
//! so the `σy` variant `k_y (A σy A σy) k_y†` with angle `2γ2` is used there.
//! The resulting angle is then brought into `(0, π/2]`.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI, TAU};

use crate::circuit::Circuit;
use crate::error::{Error, Result};
use crate::kak::{classify, kak_decompose, GateClass, KakDecomposition};
use crate::matcore::{
    c, phase_distance, LocalPair, Pauli, ToleranceConfig, Unitary2, Unitary4,
};

/// Slack used when comparing angles against interval endpoints.
pub(crate) const ANGLE_EPS: f64 = 1e-12;

/// Upper limit on the repetition count chosen by [`amplify`].
pub const MAX_REPETITIONS: usize = 1 << 16;

/// Which construction produced a resource.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ZzCase {
    /// `γ2 = γ3 = 0`: one application conjugated by `k_x`.
    PureX,
    /// `γ3 = 0`, `γ1 = γ2 = π/2`.
    DoubleHalf,
    /// `γ3 = 0`, `γ2 ∈ (0, π/2)`. The axis is `X` for the printed
    /// construction and `Y` on the `γ1 = π/2` slice.
    Planar { axis: Pauli },
    /// `γ3 ∈ (0, π/2)`.
    General,
}

/// A circuit over the entangler that evaluates to `e^{γ (i/2) σz⊗σz}`.
#[derive(Clone, Debug, PartialEq)]
pub struct ZzResource {
    pub circuit: Circuit,
    pub gamma: f64,
    /// Entangler applications per unit of the un-amplified resource.
    pub apps_per_unit: usize,
    /// Number of back-to-back units, set by [`amplify`].
    pub repetitions: usize,
    pub case: ZzCase,
}

impl ZzResource {
    pub fn entangler_count(&self) -> usize {
        self.circuit.entangler_count()
    }
}

/// `k_x = e^{iπ/4 σy} ⊗ e^{iπ/4 σy}`, with `k_x σx⊗σx k_x† = σz⊗σz`.
pub fn k_x() -> LocalPair {
    LocalPair::both(Unitary2::rotation(Pauli::Y, FRAC_PI_4))
}

/// `k_y = e^{iπ/4 σx} ⊗ e^{iπ/4 σx}`, with `k_y σy⊗σy k_y† = σz⊗σz`.
pub fn k_y() -> LocalPair {
    LocalPair::both(Unitary2::rotation(Pauli::X, FRAC_PI_4))
}

fn first(axis: Pauli, theta: f64) -> LocalPair {
    LocalPair::on_first(Unitary2::rotation(axis, theta))
}

/// `A = phase* · k1† · U_g · k2†` as a circuit with one entangler slot.
fn interaction_core(kak: &KakDecomposition) -> Circuit {
    let mut circ = Circuit::local(kak.k2.adjoint());
    circ.push_entangler()
        .push_local(kak.k1.adjoint())
        .rephase(kak.phase.conj());
    circ
}

/// `A · e^{iπ/2 σ^1} · A · e^{−iπ/2 σ^1}`, which cancels the two
/// interaction terms that anticommute with `σ ⊗ I`.
fn doubled_core(core: &Circuit, axis: Pauli) -> Circuit {
    let mut circ = Circuit::local(first(axis, -FRAC_PI_2));
    circ.append(core)
        .push_local(first(axis, FRAC_PI_2))
        .append(core);
    circ
}

/// Builds a ZZ resource from an entangler and normalizes its angle into
/// `(0, π/2]`.
pub fn extract_zz(entangler: &Unitary4, tol: &ToleranceConfig) -> Result<ZzResource> {
    let kak = kak_decompose(entangler, tol)?;
    let class = classify(&kak.c, tol);
    if class != GateClass::Entangling {
        return Err(Error::NotEntangling { class });
    }
    let snapped = kak.c.snapped(tol.snap_tol);
    let core = interaction_core(&kak);

    let (circuit, gamma, apps, case) = if snapped.c3 == 0.0 {
        if snapped.c2 == 0.0 {
            let kx = k_x();
            (core.conjugated(kx.adjoint(), kx), kak.c.c1, 1, ZzCase::PureX)
        } else if snapped.c1 == FRAC_PI_2 && snapped.c2 == FRAC_PI_2 {
            let mut circ = Circuit::local(first(Pauli::Y, FRAC_PI_4));
            circ.push_local(LocalPair::new(
                Unitary2::rotation(Pauli::Z, -FRAC_PI_4),
                Unitary2::rotation(Pauli::Z, FRAC_PI_4),
            ))
            .append(&core)
            .push_local(LocalPair::new(
                Unitary2::rotation(Pauli::Z, FRAC_PI_4),
                Unitary2::rotation(Pauli::Z, -FRAC_PI_4),
            ))
            .push_local(LocalPair::on_second(Unitary2::rotation(Pauli::Y, FRAC_PI_4)))
            .append(&core)
            .push_local(first(Pauli::Y, -FRAC_PI_4));
            (circ, FRAC_PI_2, 2, ZzCase::DoubleHalf)
        } else if snapped.c1 == FRAC_PI_2 {
            let ky = k_y();
            let circ = doubled_core(&core, Pauli::Y).conjugated(ky.adjoint(), ky);
            (circ, 2.0 * kak.c.c2, 2, ZzCase::Planar { axis: Pauli::Y })
        } else {
            let kx = k_x();
            let circ = doubled_core(&core, Pauli::X).conjugated(kx.adjoint(), kx);
            (circ, 2.0 * kak.c.c1, 2, ZzCase::Planar { axis: Pauli::X })
        }
    } else {
        let circ = doubled_core(&core, Pauli::Z);
        (circ, 2.0 * kak.c.c3, 2, ZzCase::General)
    };

    let mut res = ZzResource {
        circuit,
        gamma,
        apps_per_unit: apps,
        repetitions: 1,
        case,
    };
    if res.gamma > PI {
        res = reduce_angle(res)?;
    }
    res = reflect_angle(res)?;

    let residual = phase_distance(&res.circuit.evaluate(entangler), &Unitary4::zz(res.gamma));
    if residual.is_nan() || residual >= tol.verify_tol {
        return Err(Error::Verification {
            residual,
            tol: tol.verify_tol,
        });
    }
    Ok(res)
}

/// Maps a resource with `γ ∈ (π, 2π)` to one with `γ − π` via
/// `e^{γ(i/2)ZZ} = i e^{iπ/2 σz^1} e^{(π+γ)(i/2)ZZ} e^{iπ/2 σz^2}`.
pub fn reduce_angle(r: ZzResource) -> Result<ZzResource> {
    if !(r.gamma > 0.0 && r.gamma < TAU) {
        return Err(Error::AngleOutOfRange {
            value: r.gamma,
            range: "(0, 2π)",
        });
    }
    if (r.gamma - PI).abs() <= ANGLE_EPS {
        return Err(Error::LocallyTrivialAngle);
    }
    if r.gamma < PI {
        return Ok(r);
    }
    let before = LocalPair::on_second(Unitary2::rotation(Pauli::Z, FRAC_PI_2));
    let after = LocalPair::on_first(Unitary2::rotation(Pauli::Z, FRAC_PI_2));
    let mut circuit = r.circuit.conjugated(before, after);
    circuit.rephase(c(0.0, 1.0));
    Ok(ZzResource {
        circuit,
        gamma: r.gamma - PI,
        ..r
    })
}

/// Wraps a circuit implementing `e^{γ(i/2)ZZ}` so that it implements
/// `e^{(π−γ)(i/2)ZZ}`.
pub(crate) fn reflection_wrap(circ: &Circuit) -> Circuit {
    let before = LocalPair::new(
        Unitary2::rotation(Pauli::Y, -FRAC_PI_2),
        Unitary2::rotation(Pauli::Z, -FRAC_PI_2),
    );
    let after = LocalPair::on_first(
        Unitary2::rotation(Pauli::Z, -FRAC_PI_2) * Unitary2::rotation(Pauli::Y, FRAC_PI_2),
    );
    let mut out = circ.conjugated(before, after);
    out.rephase(c(0.0, -1.0));
    out
}

/// Maps `γ ∈ (π/2, π)` to `π − γ`; `γ ≤ π/2` is returned unchanged.
pub fn reflect_angle(r: ZzResource) -> Result<ZzResource> {
    if !(r.gamma > 0.0 && r.gamma < PI) {
        return Err(Error::AngleOutOfRange {
            value: r.gamma,
            range: "(0, π)",
        });
    }
    if r.gamma <= FRAC_PI_2 {
        return Ok(r);
    }
    Ok(ZzResource {
        circuit: reflection_wrap(&r.circuit),
        gamma: PI - r.gamma,
        ..r
    })
}

/// Smallest `n ≥ 1` with `n·γ ≥ π/4`.
pub fn repetitions_for(gamma: f64) -> Result<usize> {
    if !(gamma > 0.0 && gamma <= FRAC_PI_2 + ANGLE_EPS) {
        return Err(Error::AngleOutOfRange {
            value: gamma,
            range: "(0, π/2]",
        });
    }
    let needed = (FRAC_PI_4 / gamma).ceil().max(1.0);
    if needed > MAX_REPETITIONS as f64 {
        return Err(Error::ResourceTooWeak {
            gamma,
            needed,
            limit: MAX_REPETITIONS,
        });
    }
    let mut n = needed as usize;
    while n > 1 && (n - 1) as f64 * gamma >= FRAC_PI_4 - ANGLE_EPS {
        n -= 1;
    }
    Ok(n)
}

/// Repeats the resource until its angle lands in `[π/4, π/2]`.
pub fn amplify(r: ZzResource) -> Result<ZzResource> {
    let n = repetitions_for(r.gamma)?;
    if n == 1 {
        return Ok(r);
    }
    Ok(ZzResource {
        circuit: r.circuit.repeated(n),
        gamma: n as f64 * r.gamma,
        repetitions: r.repetitions * n,
        ..r
    })
}

/// Extraction followed by amplification: a resource with `γ ∈ [π/4, π/2]`.
pub fn amplified_resource(entangler: &Unitary4, tol: &ToleranceConfig) -> Result<ZzResource> {
    amplify(extract_zz(entangler, tol)?)
}
