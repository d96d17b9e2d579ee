//! Synthesis of arbitrary ZZ blocks and controlled-U gates from a ZZ
//! resource.
//!
//! Given a resource `e^{γ(i/2)ZZ}` with `γ ∈ [π/4, π/2]`, the block
//! `e^{c(i/2)ZZ}` for `c ∈ (0, π/2]` is
//!
//! ```text
//! (I⊗U1) · R · (I⊗e^{(b+π)(i/2)σy}) · R · (I⊗U2)
//! ```
//!
//! with `cos c = sin²γ cos b + cos²γ`, `p, q = sqrt((1 ± tan(c/2)/tan γ)/2)`,
//! `U1 = [[ip, iq], [−q, p]]` and `U2 = [[ip, −q], [−iq, −p]]`.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};

use crate::circuit::Circuit;
use crate::error::{Error, Result};
use crate::matcore::{
    c, Complex64, LocalPair, Mat2, Pauli, Unitary2, Unitary4,
};
use crate::zzsynth::{reflection_wrap, ZzResource, ANGLE_EPS};

/// Angles and amplitudes of one block construction.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BlockParams {
    pub c: f64,
    pub gamma: f64,
    pub b: f64,
    pub p: f64,
    pub q: f64,
}

/// Parameters for `e^{c(i/2)ZZ}` from a resource of angle `gamma`.
///
/// Requires `c ∈ (0, π/2]`, `gamma ∈ [π/4, π/2]` and `c ≤ 2·gamma`.
pub fn block_params(c: f64, gamma: f64) -> Result<BlockParams> {
    if !(c > 0.0 && c <= FRAC_PI_2 + ANGLE_EPS) {
        return Err(Error::AngleOutOfRange {
            value: c,
            range: "(0, π/2]",
        });
    }
    check_resource_angle(gamma)?;
    if c > 2.0 * gamma + ANGLE_EPS {
        return Err(Error::AngleOutOfRange {
            value: c,
            range: "[0, 2γ]",
        });
    }
    Ok(params_unchecked(c, gamma))
}

fn check_resource_angle(gamma: f64) -> Result<()> {
    if !(FRAC_PI_4 - ANGLE_EPS..=FRAC_PI_2 + ANGLE_EPS).contains(&gamma) {
        return Err(Error::AngleOutOfRange {
            value: gamma,
            range: "[π/4, π/2]",
        });
    }
    Ok(())
}

/// Evaluated in product form so that the boundary
/// `c = 2γ` (where `b = π`, `q = 0`) keeps full precision:
///
/// * `sin²γ − sin²(c/2) = sin(γ − c/2)·sin(γ + c/2)`, giving
///   `b = 2·atan2(sin(c/2), sqrt(sin(γ − c/2)·sin(γ + c/2)))`;
/// * `1 ± tan(c/2)/tan γ = sin(γ ± c/2) / (sin γ · cos(c/2))`.
fn params_unchecked(c: f64, gamma: f64) -> BlockParams {
    let half = c / 2.0;
    let lo = (gamma - half).sin().max(0.0);
    let hi = (gamma + half).sin();
    let b = 2.0 * half.sin().atan2((lo * hi).sqrt());
    let denom = 2.0 * gamma.sin() * half.cos();
    let p = (hi / denom).sqrt();
    let q = (lo / denom).sqrt();
    // renormalize away the last ulp so p² + q² = 1
    let n = p.hypot(q);
    BlockParams {
        c,
        gamma,
        b,
        p: p / n,
        q: q / n,
    }
}

/// The two single-qubit gates of the block construction.
pub fn u1_u2(params: &BlockParams) -> (Unitary2, Unitary2) {
    let (p, q) = (params.p, params.q);
    let u1 = Mat2::new(c(0.0, p), c(0.0, q), c(-q, 0.0), c(p, 0.0));
    let u2 = Mat2::new(c(0.0, p), c(-q, 0.0), c(0.0, -q), c(-p, 0.0));
    (Unitary2::new_unchecked(u1), Unitary2::new_unchecked(u2))
}

fn assemble(params: &BlockParams, resource: &Circuit) -> Circuit {
    let (u1, u2) = u1_u2(params);
    let mut circ = Circuit::local(LocalPair::on_second(u2));
    circ.append(resource)
        .push_second(Unitary2::rotation(Pauli::Y, (params.b + PI) / 2.0))
        .append(resource)
        .push_second(u1);
    circ
}

/// Circuit for `e^{c(i/2)ZZ}`, `c ∈ (0, π]`, using the resource twice.
///
/// Angles above `π/2` are built as `π − c` and reflected.
pub fn synth_zz_block(c: f64, resource: &ZzResource) -> Result<Circuit> {
    check_resource_angle(resource.gamma)?;
    if !(c > 0.0 && c <= PI + ANGLE_EPS) {
        return Err(Error::AngleOutOfRange {
            value: c,
            range: "(0, π]",
        });
    }
    if c > FRAC_PI_2 {
        let inner = params_unchecked((PI - c).max(0.0), resource.gamma);
        Ok(reflection_wrap(&assemble(&inner, &resource.circuit)))
    } else {
        let params = params_unchecked(c, resource.gamma);
        Ok(assemble(&params, &resource.circuit))
    }
}

/// Single-qubit rotation `exp{iγ n̂·σ}`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AxisAngle {
    gamma: f64,
    axis: [f64; 3],
}

impl AxisAngle {
    /// Axis must have unit norm within 1e-12; it is renormalized exactly.
    pub fn new(gamma: f64, axis: [f64; 3]) -> Result<Self> {
        if !(gamma.is_finite() && gamma > 0.0) {
            return Err(Error::AngleOutOfRange {
                value: gamma,
                range: "(0, ∞)",
            });
        }
        let norm = axis.iter().map(|x| x * x).sum::<f64>().sqrt();
        if !norm.is_finite() || (norm - 1.0).abs() > 1e-12 {
            return Err(Error::InvalidAxis { norm });
        }
        Ok(Self {
            gamma,
            axis: axis.map(|x| x / norm),
        })
    }

    pub fn gamma(&self) -> f64 {
        self.gamma
    }

    pub fn axis(&self) -> [f64; 3] {
        self.axis
    }

    pub fn unitary(&self) -> Unitary2 {
        let (s, co) = self.gamma.sin_cos();
        let [nx, ny, nz] = self.axis;
        let n_sigma = Pauli::X.matrix() * c(nx, 0.0)
            + Pauli::Y.matrix() * c(ny, 0.0)
            + Pauli::Z.matrix() * c(nz, 0.0);
        Unitary2::new_unchecked(Mat2::identity() * c(co, 0.0) + n_sigma * c(0.0, s))
    }
}

/// Controlled-U circuit: one slot for the interaction `e^{γ(i/2)ZZ}`.
#[derive(Clone, Debug, PartialEq)]
pub struct ControlledU {
    pub circuit: Circuit,
    /// The gate filling the circuit's entangler slot.
    pub interaction: Unitary4,
}

/// The basis change `U1` with `U1 (−σz) U1† = n̂·σ`.
pub fn controlled_u_basis(axis: [f64; 3]) -> Unitary2 {
    let [nx, ny, nz] = axis;
    if nx == 0.0 && ny == 0.0 {
        return if nz > 0.0 {
            Unitary2::pauli(Pauli::X)
        } else {
            Unitary2::identity()
        };
    }
    // 1 ∓ nz from the in-plane part where subtraction would cancel
    let rho2 = nx * nx + ny * ny;
    let one_minus = if nz > 0.0 { rho2 / (1.0 + nz) } else { 1.0 - nz };
    let one_plus = if nz < 0.0 { rho2 / (1.0 - nz) } else { 1.0 + nz };
    let m = Mat2::new(
        c(0.0, (one_minus / 2.0).sqrt()),
        c((one_plus / 2.0).sqrt(), 0.0),
        Complex64::new(ny, -nx) / (2.0 * one_minus).sqrt(),
        Complex64::new(nx, ny) / (2.0 * one_plus).sqrt(),
    );
    Unitary2::new_unchecked(m)
}

/// `diag(I, exp{iγ n̂·σ}) = (I⊗U1) · e^{γ(i/2)ZZ} · (I⊗e^{−γ(i/2)σz} U1†)`.
pub fn controlled_u_circuit(rot: &AxisAngle) -> ControlledU {
    let u1 = controlled_u_basis(rot.axis);
    let pre = Unitary2::rotation(Pauli::Z, -rot.gamma / 2.0) * u1.adjoint();
    let mut circuit = Circuit::local(LocalPair::on_second(pre));
    circuit.push_entangler().push_second(u1);
    ControlledU {
        circuit,
        interaction: Unitary4::zz(rot.gamma),
    }
}

/// Interval coordinate in `[0, π/2]` of the controlled-`u` gate's class.
///
/// Writing `u ∝ cos θ I + i sin θ n̂·σ`, `diag(I, u)` is locally equivalent
/// to `e^{γ(i/2)ZZ}` with `γ = min(θ, π − θ)`.
pub fn controlled_u_gamma(u: &Unitary2) -> f64 {
    let (s, _) = u.to_special();
    let m = s.matrix();
    let a = m[(0, 0)];
    let b = m[(0, 1)];
    (a.im * a.im + b.norm_sqr()).sqrt().atan2(a.re.abs())
}
