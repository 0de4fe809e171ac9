//! Calabi energy of an admissible profile.
//!
//! The Kähler form `(1 + r z)/r omega_T2 + dz ^ theta` has volume form
//! `(1 + r z)/r dA dz dt`, so integrating over the torus and the fiber angle
//! gives
//!
//! ```text
//! E = (2 pi Area(T^2) / r) * Integral_{-1}^{1} s(z)^2 (1 + r z) dz.
//! ```
//!
//! [`energy`] returns the integral; the prefactor depends on the torus area,
//! which is fixed by the line-bundle degree and is reported separately.

use crate::error::{Error, Result};
use crate::profiles::curvature::exact_scalar_curvature;
use crate::profiles::profile::Profile;
use crate::scalar::ExactField;

pub const ENERGY_MIN_SAMPLES: usize = 16;

/// Gauss-Legendre nodes and weights on `[-1, 1]`.
pub fn gauss_legendre(n: usize) -> Vec<(f64, f64)> {
    let nf = n as f64;
    (0..n)
        .map(|i| {
            let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (nf + 0.5)).cos();
            let mut dp = 0.0;
            for _ in 0..100 {
                let (mut p0, mut p1) = (1.0, x);
                for k in 2..=n {
                    let kf = k as f64;
                    let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
                    p0 = p1;
                    p1 = p2;
                }
                dp = nf * (x * p1 - p0) / (x * x - 1.0);
                let dx = p1 / dp;
                x -= dx;
                if dx.abs() < 1e-16 {
                    break;
                }
            }
            (x, 2.0 / ((1.0 - x * x) * dp * dp))
        })
        .collect()
}

/// `Integral_{-1}^{1} s(z)^2 (1 + r z) dz` by `samples`-point Gauss-Legendre
/// quadrature.
pub fn energy<T: ExactField>(prof: &Profile<T>, samples: usize) -> Result<f64> {
    if samples < ENERGY_MIN_SAMPLES {
        return Err(Error::Precondition(format!(
            "energy needs at least {ENERGY_MIN_SAMPLES} samples, got {samples}"
        )));
    }
    let s = exact_scalar_curvature(prof);
    let num = s.num().map(|c| c.to_f64());
    let den = s.den().map(|c| c.to_f64());
    let r = prof.r().value().to_f64();
    Ok(gauss_legendre(samples)
        .into_iter()
        .map(|(z, w)| {
            let sz = num.eval(&z) / den.eval(&z);
            w * sz * sz * (1.0 + r * z)
        })
        .sum())
}
