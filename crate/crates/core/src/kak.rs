//! Cartan (KAK) decomposition of two-qubit gates.
//!
//! Any `U ∈ U(4)` factors as
//!
//! ```text
//! U = phase · k1 · e^{(i/2)(c1 σx⊗σx + c2 σy⊗σy + c3 σz⊗σz)} · k2
//! ```
//!
//! with `k1, k2 ∈ SU(2)⊗SU(2)` and `(c1, c2, c3)` in the Weyl chamber
//! `π − c2 ≥ c1 ≥ c2 ≥ c3 ≥ 0`. The chamber point identifies the gate's
//! local-equivalence class.
//!
//! The factorization goes through the magic basis, where local gates become
//! real orthogonal matrices and the interaction becomes diagonal. The
//! symmetric product `M = Vᵀ V` of the magic-basis image is diagonalized by a
//! real orthogonal matrix; its eigenphases give the interaction angles and
//! the orthogonal factors give the local parts.

use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_2, FRAC_PI_4, PI};

use nalgebra::{Matrix4, SymmetricEigen};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::error::{Error, Result};
use crate::matcore::{
    c, project_special, Complex64, LocalPair, Mat2, Mat4, Pauli, ToleranceConfig, Unitary2,
    Unitary4, ONE, ZERO,
};

/// Seed for the random mixing used to break eigenvalue degeneracies.
const MIXING_SEED: u64 = 0x6b61_6b5f_7365_6564;
const MIXING_ATTEMPTS: usize = 64;
/// Off-diagonal residual accepted without further mixing attempts.
const DIAG_EXACT: f64 = 1e-13;
/// Off-diagonal residual accepted as a last resort; reconstruction is
/// verified afterwards regardless.
const DIAG_LOOSE: f64 = 1e-7;
/// Negative `c3` values this close to zero sit on the chamber's base face and
/// keep the `c1 ≤ π/2` representative.
pub(crate) const BOUNDARY_EPS: f64 = 1e-12;

/// Signs of `σ⊗σ` (x, y, z) on the magic basis vectors.
const SIGNS: [[f64; 4]; 3] = [
    [1.0, -1.0, 1.0, -1.0],
    [-1.0, 1.0, 1.0, -1.0],
    [1.0, 1.0, -1.0, -1.0],
];

fn magic_basis() -> Mat4 {
    let s = FRAC_1_SQRT_2;
    let (r, i, z) = (c(s, 0.0), c(0.0, s), ZERO);
    Mat4::new(
        r, i, z, z, //
        z, z, i, r, //
        z, z, i, -r, //
        r, -i, z, z,
    )
}

/// Interaction coefficients `(c1, c2, c3)` of a gate's nonlocal part.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CanonicalVector {
    pub c1: f64,
    pub c2: f64,
    pub c3: f64,
}

impl CanonicalVector {
    pub fn new(c1: f64, c2: f64, c3: f64) -> Self {
        Self { c1, c2, c3 }
    }

    pub fn as_array(&self) -> [f64; 3] {
        [self.c1, self.c2, self.c3]
    }

    /// `e^{(i/2)(c1 σx⊗σx + c2 σy⊗σy + c3 σz⊗σz)}`.
    pub fn interaction(&self) -> Unitary4 {
        Unitary4::interaction(self.c1, self.c2, self.c3)
    }

    /// Whether `π − c2 ≥ c1 ≥ c2 ≥ c3 ≥ 0` holds with the given slack.
    pub fn in_chamber(&self, slack: f64) -> bool {
        let [c1, c2, c3] = self.as_array();
        PI - c2 + slack >= c1 && c1 + slack >= c2 && c2 + slack >= c3 && c3 >= -slack
    }

    /// Snaps each coordinate lying within `snap_tol` of 0, π/4, π/2 or π.
    pub fn snapped(&self, snap_tol: f64) -> Self {
        let snap = |v: f64| {
            [0.0, FRAC_PI_4, FRAC_PI_2, PI]
                .into_iter()
                .find(|l| (v - l).abs() <= snap_tol)
                .unwrap_or(v)
        };
        Self::new(snap(self.c1), snap(self.c2), snap(self.c3))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GateClass {
    Local,
    SwapClass,
    Entangling,
}

impl std::fmt::Display for GateClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            GateClass::Local => "Local",
            GateClass::SwapClass => "SwapClass",
            GateClass::Entangling => "Entangling",
        })
    }
}

/// `U = phase · (k1.a ⊗ k1.b) · N(c) · (k2.a ⊗ k2.b)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct KakDecomposition {
    pub k1: LocalPair,
    pub c: CanonicalVector,
    pub k2: LocalPair,
    pub phase: Complex64,
}

impl KakDecomposition {
    pub fn reconstruct(&self) -> Unitary4 {
        (self.k1.to_unitary() * self.c.interaction() * self.k2.to_unitary()).scaled(self.phase)
    }
}

/// Tracks `N(raw) = left · N(v) · right` while `v` is moved into the chamber.
struct ChamberWalk {
    v: [f64; 3],
    left: LocalPair,
    right: LocalPair,
}

impl ChamberWalk {
    /// `v[axis] -= kπ`, using `N(kπ e_axis) = cos(kπ/2) I + i sin(kπ/2) σ⊗σ`.
    fn shift(&mut self, axis: usize, k: i64) {
        if k == 0 {
            return;
        }
        self.v[axis] -= k as f64 * PI;
        let p = Unitary2::pauli(Pauli::ALL[axis]);
        let q = match k.rem_euclid(4) {
            0 => LocalPair::identity(),
            1 => LocalPair::new(p.scaled(c(0.0, 1.0)), p),
            2 => LocalPair::identity().scaled(-ONE),
            _ => LocalPair::new(p.scaled(c(0.0, -1.0)), p),
        };
        self.right = q * self.right;
    }

    /// Negates `v[i]` and `v[j]` by conjugating with the third Pauli on the
    /// first qubit.
    fn flip(&mut self, i: usize, j: usize) {
        let k = 3 - i - j;
        let p = LocalPair::on_first(Unitary2::pauli(Pauli::ALL[k]));
        self.v[i] = -self.v[i];
        self.v[j] = -self.v[j];
        self.left = self.left * p;
        self.right = p * self.right;
    }

    /// Exchanges `v[i]` and `v[j]` by conjugating with a Clifford `V ⊗ V`
    /// that maps `σi ↔ ±σj`.
    fn swap(&mut self, i: usize, j: usize) {
        let v = match (i.min(j), i.max(j)) {
            (0, 1) => Unitary2::new_unchecked(Mat2::new(ONE, ZERO, ZERO, c(0.0, 1.0))),
            (1, 2) => Unitary2::rotation(Pauli::X, -FRAC_PI_4),
            (0, 2) => Unitary2::rotation(Pauli::Y, -FRAC_PI_4),
            _ => unreachable!("swap of identical axes"),
        };
        let conj = LocalPair::both(v);
        self.v.swap(i, j);
        self.left = self.left * conj;
        self.right = conj.adjoint() * self.right;
    }
}

/// Moves a raw interaction triple into the chamber.
///
/// Returns the representative `c` with local corrections `(pre, post)` such
/// that `N(raw) = pre · N(c) · post` exactly, phases folded into the pairs.
/// On the base face `c3 = 0`, where `(c1, c2, 0)` and `(π − c1, c2, 0)` are
/// equivalent, the representative with `c1 ≤ π/2` is returned.
pub fn canonicalize(raw: (f64, f64, f64)) -> (CanonicalVector, LocalPair, LocalPair) {
    let mut w = ChamberWalk {
        v: [raw.0, raw.1, raw.2],
        left: LocalPair::identity(),
        right: LocalPair::identity(),
    };

    // Each coordinate into (−π/2, π/2].
    for axis in 0..3 {
        let k = ((w.v[axis] - FRAC_PI_2) / PI).ceil() as i64;
        w.shift(axis, k);
    }

    // Pairwise sign flips leave at most one negative coordinate.
    loop {
        let neg: Vec<usize> = (0..3).filter(|&a| w.v[a] < 0.0).collect();
        if neg.len() < 2 {
            break;
        }
        w.flip(neg[0], neg[1]);
    }

    // Sort by magnitude, largest first.
    for _ in 0..2 {
        for a in 0..2 {
            if w.v[a].abs() < w.v[a + 1].abs() {
                w.swap(a, a + 1);
            }
        }
    }

    // Push a remaining sign onto the smallest coordinate.
    if let Some(a) = (0..2).find(|&a| w.v[a] < 0.0) {
        w.flip(a, 2);
    }

    // Now π/2 ≥ v0 ≥ v1 ≥ |v2|. A negative v2 maps to (π − v0, v1, −v2).
    if w.v[2] < -BOUNDARY_EPS {
        w.flip(0, 2);
        w.shift(0, -1);
    }

    let cv = CanonicalVector::new(w.v[0], w.v[1], w.v[2]);
    (cv, w.left, w.right)
}

/// Real orthogonal `P` (det +1) and eigenvalues `d` with `M = P diag(d) Pᵀ`,
/// columns ordered by eigenphase.
fn diagonalize_symmetric_unitary(m: &Mat4) -> Result<(Matrix4<f64>, [Complex64; 4])> {
    let re = m.map(|z| z.re);
    let im = m.map(|z| z.im);
    let mut rng = ChaCha8Rng::seed_from_u64(MIXING_SEED);
    let mut best: Option<(f64, Matrix4<f64>)> = None;

    for _ in 0..MIXING_ATTEMPTS {
        let wa: f64 = rng.sample(StandardNormal);
        let wb: f64 = rng.sample(StandardNormal);
        let mixed = re * wa + im * wb;
        let mixed = (mixed + mixed.transpose()) * 0.5;
        let p = SymmetricEigen::new(mixed).eigenvectors;
        let pc = p.map(|x| c(x, 0.0));
        let d = pc.transpose() * m * pc;
        let mut off = 0.0f64;
        for r in 0..4 {
            for col in 0..4 {
                if r != col {
                    off = off.max(d[(r, col)].norm());
                }
            }
        }
        if best.as_ref().is_none_or(|(b, _)| off < *b) {
            best = Some((off, p));
        }
        if off < DIAG_EXACT {
            break;
        }
    }

    let (off, p) = best.expect("at least one mixing attempt");
    if off > DIAG_LOOSE {
        return Err(Error::Diagonalization);
    }

    let pc = p.map(|x| c(x, 0.0));
    let dm = pc.transpose() * m * pc;
    let mut order = [0usize, 1, 2, 3];
    order.sort_by(|&a, &b| dm[(a, a)].arg().total_cmp(&dm[(b, b)].arg()));
    let mut sorted = Matrix4::<f64>::zeros();
    let mut d = [ZERO; 4];
    for (dst, &src) in order.iter().enumerate() {
        sorted.set_column(dst, &p.column(src));
        d[dst] = dm[(src, src)];
    }
    if sorted.determinant() < 0.0 {
        let last = -sorted.column(3);
        sorted.set_column(3, &last);
    }
    Ok((sorted, d))
}

/// Factors a local gate as `phase · (a ⊗ b)` with `a, b ∈ SU(2)`.
///
/// Returns the residual `‖K − phase·(a⊗b)‖_F` alongside; callers decide
/// whether it is acceptable.
pub fn decompose_local(k: &Unitary4) -> (LocalPair, Complex64, f64) {
    // The largest block fixes b up to a scalar.
    let (mut bi, mut bj, mut bn) = (0, 0, -1.0);
    for i in 0..2 {
        for j in 0..2 {
            let n = k.block(i, j).norm();
            if n > bn {
                (bi, bj, bn) = (i, j, n);
            }
        }
    }
    let blk = k.block(bi, bj);
    let b = blk / blk.determinant().sqrt();
    // a_ij (times the overall scalar) = tr(b† block_ij) / 2
    let bd = b.adjoint();
    let a = Mat2::from_fn(|i, j| (bd * k.block(i, j)).trace() / 2.0);
    let omega = a.determinant().sqrt();
    let a = a / omega;

    // Polish both factors onto SU(2): [[α, β], [−β*, α*]].
    let polish = |m: Mat2| {
        let alpha = (m[(0, 0)] + m[(1, 1)].conj()) / 2.0;
        let beta = (m[(0, 1)] - m[(1, 0)].conj()) / 2.0;
        let n = (alpha.norm_sqr() + beta.norm_sqr()).sqrt();
        let (alpha, beta) = (alpha / n, beta / n);
        Unitary2::new_unchecked(Mat2::new(alpha, beta, -beta.conj(), alpha.conj()))
    };
    let pair = LocalPair::new(polish(a), polish(b));
    let residual = (k.matrix() - pair.to_unitary().matrix() * omega).norm();
    if residual.is_finite() {
        (pair, omega, residual)
    } else {
        (LocalPair::identity(), ONE, f64::INFINITY)
    }
}

/// Cartan decomposition of a two-qubit unitary.
pub fn kak_decompose(u: &Unitary4, tol: &ToleranceConfig) -> Result<KakDecomposition> {
    let deviation = u.unitarity_error();
    if deviation > tol.unitarity_tol {
        return Err(Error::NonUnitary {
            deviation,
            tol: tol.unitarity_tol,
        });
    }

    let (v, det_phase) = project_special(u);
    let b = magic_basis();
    let bd = b.adjoint();
    let up = bd * v.matrix() * b;
    let m = up.transpose() * up;

    let (p, d) = diagonalize_symmetric_unitary(&m)?;

    // Square roots of the eigenvalues with product one.
    let mut lambda: [f64; 4] = std::array::from_fn(|k| d[k].arg() / 2.0);
    let turns = (lambda.iter().sum::<f64>() / PI).round();
    lambda[3] -= turns * PI;

    let pc = p.map(|x| c(x, 0.0));
    let inv_root = Mat4::from_diagonal(&nalgebra::Vector4::from_fn(|k, _| {
        Complex64::from_polar(1.0, -lambda[k])
    }));
    let o1 = up * pc * inv_root;
    let k1 = Unitary4::new_unchecked(b * o1 * bd);
    let k2 = Unitary4::new_unchecked(b * pc.transpose() * bd);

    let raw: [f64; 3] =
        std::array::from_fn(|a| (0..4).map(|k| SIGNS[a][k] * lambda[k]).sum::<f64>() / 2.0);

    let (k1, w1, _) = decompose_local(&k1);
    let (k2, w2, _) = decompose_local(&k2);
    let (cv, pre, post) = canonicalize((raw[0], raw[1], raw[2]));

    let (k1, p1) = (k1 * pre).to_special();
    let (k2, p2) = (post * k2).to_special();
    let phase = det_phase * w1 * w2 * p1 * p2;
    let phase = phase / phase.norm();

    let kak = KakDecomposition {
        k1,
        c: cv,
        k2,
        phase,
    };
    let residual = kak.reconstruct().distance(u);
    if residual.is_nan() || residual >= tol.verify_tol {
        return Err(Error::Reconstruction {
            residual,
            tol: tol.verify_tol,
        });
    }
    Ok(kak)
}

/// Class of a chamber point after snapping.
pub fn classify(cv: &CanonicalVector, tol: &ToleranceConfig) -> GateClass {
    let s = cv.snapped(tol.snap_tol);
    let arr = s.as_array();
    if arr == [0.0, 0.0, 0.0] || arr == [PI, 0.0, 0.0] {
        GateClass::Local
    } else if arr == [FRAC_PI_2, FRAC_PI_2, FRAC_PI_2] {
        GateClass::SwapClass
    } else {
        GateClass::Entangling
    }
}

/// Whether two chamber points name the same class within `snap_tol`.
///
/// Points on the base face are compared under the `c1 ↔ π − c1`
/// identification.
pub fn same_class(a: &CanonicalVector, b: &CanonicalVector, tol: &ToleranceConfig) -> bool {
    let t = tol.snap_tol;
    let close = |x: f64, y: f64| (x - y).abs() <= t;
    if close(a.c2, b.c2) && close(a.c3, b.c3) {
        if close(a.c1, b.c1) {
            return true;
        }
        let on_base = a.c3.abs() <= t && b.c3.abs() <= t;
        if on_base && close(a.c1, PI - b.c1) {
            return true;
        }
    }
    false
}

pub fn locally_equivalent(u: &Unitary4, v: &Unitary4, tol: &ToleranceConfig) -> Result<bool> {
    let a = kak_decompose(u, tol)?;
    let b = kak_decompose(v, tol)?;
    Ok(same_class(&a.c, &b.c, tol))
}
