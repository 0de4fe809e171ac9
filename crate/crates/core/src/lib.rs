//! Exact construction and certification of extremal admissible Kähler
//! profiles on (orbifold) ruled surfaces of genus one, together with the
//! combinatorial and topological invariants of the join manifolds
//! `M^5_{k1,k2}` (the `T^2 x S^3` family and its relatives).
//!
//! The polynomial layer is generic over the coefficient field. Three scalar
//! types are used in practice:
//!
//! * [`Rational`]: arbitrary-precision rationals, the default for every
//!   certified computation;
//! * [`Algebraic`]: elements of a real quadratic field `Q(r)` where `r` is an
//!   [`AlgebraicRoot`], used at constant-scalar-curvature parameters which are
//!   generally irrational;
//! * `f64` / `f32`: the numeric curvature and energy oracles.

pub mod error;
pub mod exactalg;
pub mod profiles;
pub mod scalar;
pub mod topology;

pub use error::{Error, Result};
pub use exactalg::{
    algebraic::{Algebraic, AlgebraicRoot},
    interval::Interval,
    poly::Poly,
    ratfn::RatFn,
    sturm::{certify_positive, certify_positive_ratfn, isolate_roots, sturm_root_count},
};
pub use scalar::{ExactField, Scalar};

/// Arbitrary-precision rational number.
pub type Rational = num_rational::BigRational;
/// Arbitrary-precision integer.
pub type Integer = num_bigint::BigInt;

/// Polynomial with rational coefficients.
pub type QPoly = Poly<Rational>;
/// Reduced rational function with rational coefficients.
pub type QRatFn = RatFn<Rational>;
/// Polynomial over a real quadratic field.
pub type AlgPoly = Poly<Algebraic>;
/// Polynomial with `f64` coefficients.
pub type FPoly = Poly<f64>;

/// Profile at a rational fiber parameter.
pub type RationalProfile = profiles::Profile<Rational>;
/// Profile at an algebraic (quadratic irrational) fiber parameter.
pub type AlgebraicProfile = profiles::Profile<Algebraic>;
