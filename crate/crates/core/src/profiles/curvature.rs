//! Numeric scalar curvature of the admissible 4-metric.
//!
//! The oracle never uses a closed form for the curvature: it assembles the
//! metric in local coordinates `(x, y, z, t)` on `M_0`,
//!
//! ```text
//! g = (1 + r z)/r (dx^2 + dy^2) + dz^2/Theta + Theta (dt + x dy)^2
//! ```
//!
//! (flat torus base, connection form `dt + x dy` with curvature
//! `dx ^ dy`), differentiates it by central differences, builds Christoffel
//! symbols, differentiates those again, and contracts the Ricci tensor. The
//! metric depends on `x` and `z` only. Two step sizes are combined by
//! Richardson extrapolation.

use nalgebra::{Matrix4, RealField};
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactalg::poly::Poly;
use crate::exactalg::ratfn::RatFn;
use crate::profiles::profile::Profile;
use crate::scalar::{rat, ExactField, Scalar};
use crate::Rational;

/// Documented absolute accuracy of [`scalar_curvature_oracle`].
pub const ORACLE_TOLERANCE: f64 = 1e-6;

/// Grid points must satisfy `|z| <= 1 - EXCLUSION_ZONE`.
pub const EXCLUSION_ZONE: f64 = 1.0 / 16.0;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OracleSettings {
    /// Central-difference step; the nested stencil reaches `z +- 2 step`.
    pub step: f64,
    /// Combine `step` and `step / 2` as `(4 s(h/2) - s(h)) / 3`.
    pub richardson: bool,
}

impl Default for OracleSettings {
    fn default() -> Self {
        Self {
            step: 1.0 / 1024.0,
            richardson: true,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CurvatureSample {
    pub z: Rational,
    pub s: f64,
}

type Christoffel<F> = [[[F; 4]; 4]; 4];

/// Coordinates the metric actually depends on: `x` (index 0) and `z` (2).
const ACTIVE: [usize; 2] = [0, 2];

struct NumericMetric<F> {
    r: F,
    theta_num: Poly<F>,
    theta_den: Poly<F>,
}

impl<F: Scalar + RealField + Copy> NumericMetric<F> {
    fn new<T: ExactField>(prof: &Profile<T>) -> Self {
        let to_f = |c: &T| F::from_f64(c.to_f64()).expect("representable");
        let theta = prof.theta();
        Self {
            r: to_f(prof.r().value()),
            theta_num: theta.num().map(to_f),
            theta_den: theta.den().map(to_f),
        }
    }

    fn metric(&self, x: F, z: F) -> Matrix4<F> {
        let base = (F::one() + self.r * z) / self.r;
        let th = self.theta_num.eval(&z) / self.theta_den.eval(&z);
        let mut g = Matrix4::zeros();
        g[(0, 0)] = base;
        g[(1, 1)] = base + th * x * x;
        g[(1, 3)] = th * x;
        g[(3, 1)] = th * x;
        g[(3, 3)] = th;
        g[(2, 2)] = F::one() / th;
        g
    }

    fn shifted(x: F, z: F, coord: usize, delta: F) -> (F, F) {
        match coord {
            0 => (x + delta, z),
            _ => (x, z + delta),
        }
    }

    fn christoffel(&self, x: F, z: F, h: F) -> Christoffel<F> {
        let two = F::one() + F::one();
        let ginv = self
            .metric(x, z)
            .try_inverse()
            .expect("metric is nondegenerate on M_0");
        let mut dg = [Matrix4::<F>::zeros(); 4];
        for c in ACTIVE {
            let (xp, zp) = Self::shifted(x, z, c, h);
            let (xm, zm) = Self::shifted(x, z, c, -h);
            dg[c] = (self.metric(xp, zp) - self.metric(xm, zm)) / (two * h);
        }
        let mut gamma = [[[F::zero(); 4]; 4]; 4];
        for (a, gamma_a) in gamma.iter_mut().enumerate() {
            for b in 0..4 {
                for c in 0..4 {
                    let mut acc = F::zero();
                    for d in 0..4 {
                        acc += ginv[(a, d)] * (dg[b][(d, c)] + dg[c][(d, b)] - dg[d][(b, c)]);
                    }
                    gamma_a[b][c] = acc / two;
                }
            }
        }
        gamma
    }

    /// Scalar curvature at `(0, z)` with a single step size.
    #[allow(clippy::needless_range_loop)]
    fn scalar(&self, z: F, h: F) -> F {
        let two = F::one() + F::one();
        let x = F::zero();
        let gamma = self.christoffel(x, z, h);
        let mut dgamma = [[[[F::zero(); 4]; 4]; 4]; 4];
        for e in ACTIVE {
            let (xp, zp) = Self::shifted(x, z, e, h);
            let (xm, zm) = Self::shifted(x, z, e, -h);
            let plus = self.christoffel(xp, zp, h);
            let minus = self.christoffel(xm, zm, h);
            for a in 0..4 {
                for b in 0..4 {
                    for c in 0..4 {
                        dgamma[e][a][b][c] = (plus[a][b][c] - minus[a][b][c]) / (two * h);
                    }
                }
            }
        }
        let ginv = self.metric(x, z).try_inverse().expect("nondegenerate");
        let mut s = F::zero();
        for b in 0..4 {
            for c in 0..4 {
                let mut ric = F::zero();
                for a in 0..4 {
                    ric += dgamma[a][a][b][c] - dgamma[c][a][b][a];
                    for d in 0..4 {
                        ric += gamma[a][a][d] * gamma[d][b][c] - gamma[a][c][d] * gamma[d][b][a];
                    }
                }
                s += ginv[(b, c)] * ric;
            }
        }
        s
    }

    fn scalar_extrapolated(&self, z: F, h: F, richardson: bool) -> F {
        if !richardson {
            return self.scalar(z, h);
        }
        let two = F::one() + F::one();
        let three = two + F::one();
        let four = two + two;
        (four * self.scalar(z, h / two) - self.scalar(z, h)) / three
    }
}

/// Finite-difference scalar curvature with [`OracleSettings::default`].
pub fn scalar_curvature_oracle<T: ExactField>(
    prof: &Profile<T>,
    grid: &[Rational],
) -> Result<Vec<CurvatureSample>> {
    scalar_curvature_oracle_with(prof, grid, OracleSettings::default())
}

pub fn scalar_curvature_oracle_with<T: ExactField>(
    prof: &Profile<T>,
    grid: &[Rational],
    settings: OracleSettings,
) -> Result<Vec<CurvatureSample>> {
    let limit = rat(15, 16);
    for z in grid {
        if z.abs_cmp(&limit) {
            return Err(Error::GridOutOfRange(z.describe()));
        }
        let reach = Scalar::to_f64(z).abs() + 2.0 * settings.step;
        if settings.step.is_nan() || settings.step <= 0.0 || reach >= 1.0 {
            return Err(Error::StencilOutOfRange(format!(
                "z = {} with step {}",
                z.describe(),
                settings.step
            )));
        }
    }
    let metric = NumericMetric::<f64>::new(prof);
    Ok(grid
        .iter()
        .map(|z| CurvatureSample {
            z: z.clone(),
            s: metric.scalar_extrapolated(Scalar::to_f64(z), settings.step, settings.richardson),
        })
        .collect())
}

trait AbsCmp {
    fn abs_cmp(&self, limit: &Self) -> bool;
}

impl AbsCmp for Rational {
    /// `|self| > limit`
    fn abs_cmp(&self, limit: &Self) -> bool {
        self > limit || self < &-limit.clone()
    }
}

/// Scalar curvature of the admissible metric over a flat base as an exact
/// rational function, `s = -F''(z) / (1 + r z)`. Used by the energy
/// functional; validated against the finite-difference oracle in tests.
pub fn exact_scalar_curvature<T: ExactField>(prof: &Profile<T>) -> RatFn<T> {
    let f2 = prof.f().derivative().derivative();
    let neg = RatFn::new(-f2.num(), f2.den().clone()).expect("nonzero denominator");
    neg.div_poly(&prof.r().one_plus_rz())
        .expect("1 + r z is nonzero")
}

/// Least-squares line through curvature samples, with the largest absolute
/// deviation from it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AffineFit {
    pub intercept: f64,
    pub slope: f64,
    pub max_residual: f64,
}

pub fn affine_fit(samples: &[CurvatureSample]) -> AffineFit {
    let n = samples.len() as f64;
    let zs: Vec<f64> = samples.iter().map(|s| Scalar::to_f64(&s.z)).collect();
    let mean_z = zs.iter().sum::<f64>() / n;
    let mean_s = samples.iter().map(|s| s.s).sum::<f64>() / n;
    let sxx: f64 = zs.iter().map(|z| (z - mean_z).powi(2)).sum();
    let sxy: f64 = zs
        .iter()
        .zip(samples)
        .map(|(z, s)| (z - mean_z) * (s.s - mean_s))
        .sum();
    let slope = if sxx.is_zero() { 0.0 } else { sxy / sxx };
    let intercept = mean_s - slope * mean_z;
    let max_residual = zs
        .iter()
        .zip(samples)
        .map(|(z, s)| (s.s - intercept - slope * z).abs())
        .fold(0.0, f64::max);
    AffineFit {
        intercept,
        slope,
        max_residual,
    }
}

/// Best constant (the mean) and the largest deviation from it.
pub fn constant_fit(samples: &[CurvatureSample]) -> AffineFit {
    let mean = samples.iter().map(|s| s.s).sum::<f64>() / samples.len() as f64;
    let max_residual = samples
        .iter()
        .map(|s| (s.s - mean).abs())
        .fold(0.0, f64::max);
    AffineFit {
        intercept: mean,
        slope: 0.0,
        max_residual,
    }
}
