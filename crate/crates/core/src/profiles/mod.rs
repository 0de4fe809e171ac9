//! Admissible momentum profiles on (orbifold) ruled surfaces over a flat
//! torus, their extremality and boundary certificates, the search for
//! constant-scalar-curvature parameters, and numeric curvature/energy oracles.
//!
//! A profile is determined by a function `Theta(z)` of the momentum
//! coordinate `z in (-1, 1)` and a fiber parameter `0 < r < 1`; the metric is
//!
//! ```text
//! g = (1 + r z)/r * g_T2 + dz^2 / Theta(z) + Theta(z) * theta^2
//! ```
//!
//! with `d theta = omega_T2`. The profile is stored through
//! `F(z) = Theta(z) (1 + r z)`.

mod checks;
mod csc;
mod curvature;
mod energy;
mod profile;

pub use checks::{
    check_conditions, check_extremal, ke_obstruction_check, ConditionReport, ExtremalReport,
};
pub use csc::{csc_candidates, csc_profile, csc_quadratic, csc_roots, CscCandidate};
pub use curvature::{
    affine_fit, constant_fit, exact_scalar_curvature, scalar_curvature_oracle,
    scalar_curvature_oracle_with, AffineFit, CurvatureSample, OracleSettings, EXCLUSION_ZONE,
    ORACLE_TOLERANCE,
};
pub use energy::{energy, gauss_legendre, ENERGY_MIN_SAMPLES};
pub use profile::{
    extremal_orbifold_f, h_polynomial, theta_canonical, theta_smooth_extremal, ConeLabels,
    FiberParam, Profile,
};
