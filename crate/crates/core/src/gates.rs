//! Standard two-qubit gates, built from closed forms.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4};

use crate::matcore::{c, cis, Mat4, Pauli, Unitary2, Unitary4, ONE};

pub fn cnot() -> Unitary4 {
    Unitary4::controlled(&Unitary2::pauli(Pauli::X))
}

pub fn cz() -> Unitary4 {
    Unitary4::diagonal([ONE, ONE, ONE, -ONE])
}

pub fn swap() -> Unitary4 {
    let mut m = Mat4::zeros();
    m[(0, 0)] = ONE;
    m[(1, 2)] = ONE;
    m[(2, 1)] = ONE;
    m[(3, 3)] = ONE;
    Unitary4::new_unchecked(m)
}

/// The square root of SWAP at chamber point `(π/4, π/4, π/4)`, with
/// `(1 − i)/2` on the diagonal of the middle block. Its adjoint, the other
/// root, sits at `(3π/4, π/4, π/4)`.
pub fn sqrt_swap() -> Unitary4 {
    let mut m = Mat4::zeros();
    let (p, n) = (c(0.5, -0.5), c(0.5, 0.5));
    m[(0, 0)] = ONE;
    m[(1, 1)] = p;
    m[(1, 2)] = n;
    m[(2, 1)] = n;
    m[(2, 2)] = p;
    m[(3, 3)] = ONE;
    Unitary4::new_unchecked(m)
}

/// The B gate, `e^{(i/2)(π/2 σx⊗σx + π/4 σy⊗σy)}`.
pub fn b_gate() -> Unitary4 {
    Unitary4::interaction(FRAC_PI_2, FRAC_PI_4, 0.0)
}

/// Controlled-PHASE `diag(1, 1, 1, e^{iφ})`.
pub fn cphase(phi: f64) -> Unitary4 {
    Unitary4::diagonal([ONE, ONE, ONE, cis(phi)])
}

/// `e^{γ (i/2) σz⊗σz}`.
pub fn zz(gamma: f64) -> Unitary4 {
    Unitary4::zz(gamma)
}
