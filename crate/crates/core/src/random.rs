//! Haar-distributed random unitaries for tests, benches and batch sweeps.

use rand::Rng;
use rand_distr::StandardNormal;

use crate::matcore::{c, Complex64, Mat2, Mat4, Unitary2, Unitary4};

fn gaussian<R: Rng + ?Sized>(rng: &mut R) -> Complex64 {
    let re: f64 = rng.sample(StandardNormal);
    let im: f64 = rng.sample(StandardNormal);
    c(re, im) * std::f64::consts::FRAC_1_SQRT_2
}

/// Haar-random element of U(4).
///
/// Gram-Schmidt on a complex Ginibre matrix; the implied triangular factor has
/// a positive real diagonal, which is what makes the result Haar.
pub fn haar_unitary4<R: Rng + ?Sized>(rng: &mut R) -> Unitary4 {
    let mut m = Mat4::from_fn(|_, _| gaussian(rng));
    for j in 0..4 {
        for k in 0..j {
            let proj = m.column(k).dotc(&m.column(j));
            let qk = m.column(k).into_owned();
            m.column_mut(j).axpy(-proj, &qk, c(1.0, 0.0));
        }
        let n = m.column(j).norm();
        m.column_mut(j).unscale_mut(n);
    }
    Unitary4::new_unchecked(m)
}

/// Haar-random element of U(2).
pub fn haar_unitary2<R: Rng + ?Sized>(rng: &mut R) -> Unitary2 {
    let mut m = Mat2::from_fn(|_, _| gaussian(rng));
    let n0 = m.column(0).norm();
    m.column_mut(0).unscale_mut(n0);
    let proj = m.column(0).dotc(&m.column(1));
    let q0 = m.column(0).into_owned();
    m.column_mut(1).axpy(-proj, &q0, c(1.0, 0.0));
    let n1 = m.column(1).norm();
    m.column_mut(1).unscale_mut(n1);
    Unitary2::new_unchecked(m)
}

/// Uniformly random unit vector in R³.
pub fn unit_vector<R: Rng + ?Sized>(rng: &mut R) -> [f64; 3] {
    loop {
        let v: [f64; 3] = std::array::from_fn(|_| rng.sample(StandardNormal));
        let n = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        if n > 1e-6 {
            return v.map(|x| x / n);
        }
    }
}
