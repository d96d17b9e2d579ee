//! Fixed-size complex matrix primitives.
//!
//! [`Unitary2`] and [`Unitary4`] are validated newtypes over nalgebra's
//! static matrices. Every constructor that accepts outside data checks
//! finiteness and unitarity; internal constructions that are unitary by
//! construction skip the check.
//!
//! Two-qubit matrices use the Kronecker convention `a ⊗ b`, where `a` acts
//! on the first qubit and indexes the 2×2 blocks.

use std::fmt;
use std::ops::Mul;

use nalgebra::{Matrix2, Matrix4};
pub use num_complex::Complex64;

use crate::error::{Error, Result};

pub type Mat2 = Matrix2<Complex64>;
pub type Mat4 = Matrix4<Complex64>;

pub const ZERO: Complex64 = Complex64::new(0.0, 0.0);
pub const ONE: Complex64 = Complex64::new(1.0, 0.0);
pub const I: Complex64 = Complex64::new(0.0, 1.0);

#[inline]
pub fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// Unit complex number `e^{iθ}`.
#[inline]
pub fn cis(theta: f64) -> Complex64 {
    Complex64::from_polar(1.0, theta)
}

/// Numerical tolerances shared by the whole pipeline.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ToleranceConfig {
    /// Maximum elementwise deviation of `U U†` from the identity.
    pub unitarity_tol: f64,
    /// Radius used to snap angles onto landmark values for classification.
    pub snap_tol: f64,
    /// Maximum phase-invariant distance accepted when verifying results.
    pub verify_tol: f64,
}

impl Default for ToleranceConfig {
    fn default() -> Self {
        Self {
            unitarity_tol: 1e-10,
            snap_tol: 1e-9,
            verify_tol: 1e-8,
        }
    }
}

impl ToleranceConfig {
    pub fn new(unitarity_tol: f64, snap_tol: f64, verify_tol: f64) -> Result<Self> {
        let cfg = Self {
            unitarity_tol,
            snap_tol,
            verify_tol,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        for (name, v) in [
            ("unitarity_tol", self.unitarity_tol),
            ("snap_tol", self.snap_tol),
            ("verify_tol", self.verify_tol),
        ] {
            if !(v.is_finite() && v > 0.0) {
                return Err(Error::InvalidTolerance(format!(
                    "{name} must be finite and strictly positive, got {v}"
                )));
            }
        }
        if self.snap_tol < self.unitarity_tol {
            return Err(Error::InvalidTolerance(format!(
                "snap_tol ({}) must be at least unitarity_tol ({})",
                self.snap_tol, self.unitarity_tol
            )));
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Pauli {
    X,
    Y,
    Z,
}

impl Pauli {
    pub const ALL: [Pauli; 3] = [Pauli::X, Pauli::Y, Pauli::Z];

    pub fn matrix(self) -> Mat2 {
        match self {
            Pauli::X => Mat2::new(ZERO, ONE, ONE, ZERO),
            Pauli::Y => Mat2::new(ZERO, -I, I, ZERO),
            Pauli::Z => Mat2::new(ONE, ZERO, ZERO, -ONE),
        }
    }

    /// `σ ⊗ σ` for this axis.
    pub fn doubled(self) -> Mat4 {
        let p = self.matrix();
        p.kronecker(&p)
    }
}

fn is_finite2(m: &Mat2) -> bool {
    m.iter().all(|z| z.re.is_finite() && z.im.is_finite())
}

fn is_finite4(m: &Mat4) -> bool {
    m.iter().all(|z| z.re.is_finite() && z.im.is_finite())
}

fn max_abs_dev2(m: &Mat2) -> f64 {
    let p = m * m.adjoint() - Mat2::identity();
    p.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

fn max_abs_dev4(m: &Mat4) -> f64 {
    let p = m * m.adjoint() - Mat4::identity();
    p.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

/// A single-qubit unitary.
#[derive(Clone, Copy, PartialEq)]
pub struct Unitary2(Mat2);

impl Unitary2 {
    pub fn new(m: Mat2, unitarity_tol: f64) -> Result<Self> {
        if !is_finite2(&m) {
            return Err(Error::NonFinite);
        }
        let deviation = max_abs_dev2(&m);
        if deviation > unitarity_tol {
            return Err(Error::NonUnitary {
                deviation,
                tol: unitarity_tol,
            });
        }
        Ok(Self(m))
    }

    pub fn from_rows(rows: [[Complex64; 2]; 2], unitarity_tol: f64) -> Result<Self> {
        Self::new(
            Mat2::new(rows[0][0], rows[0][1], rows[1][0], rows[1][1]),
            unitarity_tol,
        )
    }

    /// Wraps a matrix that is unitary by construction.
    pub(crate) fn new_unchecked(m: Mat2) -> Self {
        debug_assert!(max_abs_dev2(&m) < 1e-8, "not unitary: {m}");
        Self(m)
    }

    pub fn identity() -> Self {
        Self(Mat2::identity())
    }

    pub fn pauli(p: Pauli) -> Self {
        Self(p.matrix())
    }

    /// `e^{iθσ} = cos θ I + i sin θ σ`.
    pub fn rotation(axis: Pauli, theta: f64) -> Self {
        let (s, co) = theta.sin_cos();
        Self(Mat2::identity() * c(co, 0.0) + axis.matrix() * c(0.0, s))
    }

    /// Diagonal phase gate `diag(1, e^{iφ})`.
    pub fn phase_gate(phi: f64) -> Self {
        Self(Mat2::new(ONE, ZERO, ZERO, cis(phi)))
    }

    pub fn matrix(&self) -> &Mat2 {
        &self.0
    }

    pub fn into_matrix(self) -> Mat2 {
        self.0
    }

    pub fn adjoint(&self) -> Self {
        Self(self.0.adjoint())
    }

    pub fn det(&self) -> Complex64 {
        self.0.determinant()
    }

    /// Multiplies by a unit-modulus scalar.
    pub fn scaled(&self, phase: Complex64) -> Self {
        Self(self.0 * phase)
    }

    pub fn unitarity_error(&self) -> f64 {
        max_abs_dev2(&self.0)
    }

    /// Splits into `phase · s` with `det(s) = 1`.
    pub fn to_special(&self) -> (Self, Complex64) {
        let phase = cis(self.det().arg() / 2.0);
        (Self(self.0 / phase), phase)
    }

    pub fn rows(&self) -> [[Complex64; 2]; 2] {
        [[self.0[(0, 0)], self.0[(0, 1)]], [self.0[(1, 0)], self.0[(1, 1)]]]
    }
}

impl Mul for Unitary2 {
    type Output = Unitary2;
    fn mul(self, rhs: Unitary2) -> Unitary2 {
        Unitary2(self.0 * rhs.0)
    }
}

impl Mul for &Unitary2 {
    type Output = Unitary2;
    fn mul(self, rhs: &Unitary2) -> Unitary2 {
        Unitary2(self.0 * rhs.0)
    }
}

impl fmt::Debug for Unitary2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Unitary2{:?}", self.rows())
    }
}

/// A two-qubit unitary.
#[derive(Clone, Copy, PartialEq)]
pub struct Unitary4(Mat4);

impl Unitary4 {
    pub fn new(m: Mat4, unitarity_tol: f64) -> Result<Self> {
        if !is_finite4(&m) {
            return Err(Error::NonFinite);
        }
        let deviation = max_abs_dev4(&m);
        if deviation > unitarity_tol {
            return Err(Error::NonUnitary {
                deviation,
                tol: unitarity_tol,
            });
        }
        Ok(Self(m))
    }

    pub fn from_rows(rows: [[Complex64; 4]; 4], unitarity_tol: f64) -> Result<Self> {
        Self::new(Mat4::from_fn(|r, col| rows[r][col]), unitarity_tol)
    }

    pub(crate) fn new_unchecked(m: Mat4) -> Self {
        debug_assert!(max_abs_dev4(&m) < 1e-8, "not unitary: {m}");
        Self(m)
    }

    pub fn identity() -> Self {
        Self(Mat4::identity())
    }

    /// Diagonal unitary from four unit-modulus entries.
    pub fn diagonal(d: [Complex64; 4]) -> Self {
        let mut m = Mat4::zeros();
        for k in 0..4 {
            m[(k, k)] = d[k];
        }
        Self::new_unchecked(m)
    }

    /// Block-diagonal `diag(I, u)`: the controlled-`u` gate with the first
    /// qubit as control.
    pub fn controlled(u: &Unitary2) -> Self {
        let mut m = Mat4::identity();
        for r in 0..2 {
            for col in 0..2 {
                m[(2 + r, 2 + col)] = u.0[(r, col)];
            }
        }
        Self::new_unchecked(m)
    }

    /// The interaction `e^{(i/2)(x σx⊗σx + y σy⊗σy + z σz⊗σz)}`.
    ///
    /// The three terms commute, so the exponential is the product of
    /// `cos(t/2) I + i sin(t/2) σ⊗σ` over the axes.
    pub fn interaction(x: f64, y: f64, z: f64) -> Self {
        let mut m = Mat4::identity();
        for (p, t) in Pauli::ALL.into_iter().zip([x, y, z]) {
            let (s, co) = (t / 2.0).sin_cos();
            m *= Mat4::identity() * c(co, 0.0) + p.doubled() * c(0.0, s);
        }
        Self(m)
    }

    /// `e^{γ (i/2) σz⊗σz}`.
    pub fn zz(gamma: f64) -> Self {
        let p = cis(gamma / 2.0);
        let n = p.conj();
        Self::diagonal([p, n, n, p])
    }

    pub fn matrix(&self) -> &Mat4 {
        &self.0
    }

    pub fn into_matrix(self) -> Mat4 {
        self.0
    }

    pub fn adjoint(&self) -> Self {
        Self(self.0.adjoint())
    }

    pub fn det(&self) -> Complex64 {
        self.0.determinant()
    }

    pub fn trace(&self) -> Complex64 {
        self.0.trace()
    }

    pub fn scaled(&self, phase: Complex64) -> Self {
        Self(self.0 * phase)
    }

    pub fn unitarity_error(&self) -> f64 {
        max_abs_dev4(&self.0)
    }

    pub fn rows(&self) -> [[Complex64; 4]; 4] {
        std::array::from_fn(|r| std::array::from_fn(|col| self.0[(r, col)]))
    }

    /// The 2×2 block at block-row `r`, block-column `col`.
    pub fn block(&self, r: usize, col: usize) -> Mat2 {
        self.0.fixed_view::<2, 2>(2 * r, 2 * col).into_owned()
    }

    /// Frobenius norm of `self - other`, phase included.
    pub fn distance(&self, other: &Unitary4) -> f64 {
        (self.0 - other.0).norm()
    }
}

impl Mul for Unitary4 {
    type Output = Unitary4;
    fn mul(self, rhs: Unitary4) -> Unitary4 {
        Unitary4(self.0 * rhs.0)
    }
}

impl Mul for &Unitary4 {
    type Output = Unitary4;
    fn mul(self, rhs: &Unitary4) -> Unitary4 {
        Unitary4(self.0 * rhs.0)
    }
}

impl fmt::Debug for Unitary4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Unitary4{:?}", self.rows())
    }
}

/// A local two-qubit gate `a ⊗ b`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LocalPair {
    pub a: Unitary2,
    pub b: Unitary2,
}

impl LocalPair {
    pub fn new(a: Unitary2, b: Unitary2) -> Self {
        Self { a, b }
    }

    pub fn identity() -> Self {
        Self::new(Unitary2::identity(), Unitary2::identity())
    }

    pub fn on_first(a: Unitary2) -> Self {
        Self::new(a, Unitary2::identity())
    }

    pub fn on_second(b: Unitary2) -> Self {
        Self::new(Unitary2::identity(), b)
    }

    /// The same single-qubit gate on both qubits.
    pub fn both(u: Unitary2) -> Self {
        Self::new(u, u)
    }

    pub fn to_unitary(&self) -> Unitary4 {
        tensor(&self.a, &self.b)
    }

    pub fn adjoint(&self) -> Self {
        Self::new(self.a.adjoint(), self.b.adjoint())
    }

    /// Matrix product `self · rhs` (so `rhs` acts first).
    pub fn compose(&self, rhs: &LocalPair) -> Self {
        Self::new(self.a * rhs.a, self.b * rhs.b)
    }

    /// Splits into `phase · (a' ⊗ b')` with `a', b' ∈ SU(2)`.
    pub fn to_special(&self) -> (Self, Complex64) {
        let (a, pa) = self.a.to_special();
        let (b, pb) = self.b.to_special();
        (Self::new(a, b), pa * pb)
    }

    pub fn scaled(&self, phase: Complex64) -> Self {
        Self::new(self.a.scaled(phase), self.b)
    }
}

impl Mul for LocalPair {
    type Output = LocalPair;
    fn mul(self, rhs: LocalPair) -> LocalPair {
        self.compose(&rhs)
    }
}

/// Kronecker product `a ⊗ b`.
pub fn tensor(a: &Unitary2, b: &Unitary2) -> Unitary4 {
    Unitary4(a.0.kronecker(&b.0))
}

/// `min_φ ‖a − φ b‖_F` over unit scalars `φ`.
///
/// Equal to `sqrt(8 − 2|tr(a†b)|)` for 4×4 unitaries. The minimizing phase is
/// applied and the Frobenius norm is evaluated directly, since the closed
/// form loses about eight digits to cancellation when `a ≈ b`.
pub fn phase_distance(a: &Unitary4, b: &Unitary4) -> f64 {
    let t = (a.0.adjoint() * b.0).trace();
    let phi = if t.norm() > 0.0 { t.conj() / t.norm() } else { ONE };
    (a.0 - b.0 * phi).norm()
}

/// Splits `U = phase · V` with `det V = 1`, taking `phase` as the principal
/// fourth root of `det U`.
pub fn project_special(u: &Unitary4) -> (Unitary4, Complex64) {
    // arg(−1 − 0i) = −π; use the principal branch (−π, π]
    let mut theta = u.det().arg();
    if theta <= -std::f64::consts::PI {
        theta += std::f64::consts::TAU;
    }
    let phase = cis(theta / 4.0);
    (Unitary4(u.0 / phase), phase)
}
