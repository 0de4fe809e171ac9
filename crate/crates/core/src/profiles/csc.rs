use std::sync::Arc;

use num_traits::{One, Signed, Zero};

use crate::error::Result;
use crate::exactalg::algebraic::{Algebraic, AlgebraicRoot};
use crate::exactalg::interval::Interval;
use crate::exactalg::poly::Poly;
use crate::profiles::profile::{extremal_orbifold_f, ConeLabels, Profile};
use crate::scalar::{rat, Scalar};
use crate::{Integer, Rational};

/// Width bound for the isolating intervals returned by [`csc_roots`].
fn report_width() -> Rational {
    Rational::new(Integer::one(), Integer::one() << 20usize)
}

/// Primitive integer form of `p (3 + 2r - r^2) - q (3 - 2r - r^2)`, the
/// `z^2` coefficient of `h` divided by `r`.
///
/// For `p = q` this degenerates to a multiple of `r`.
pub fn csc_quadratic(labels: ConeLabels) -> Poly<Rational> {
    let p = Poly::<Rational>::from_i64s(&[3, 2, -1]).scale(&Rational::from_i64(labels.p() as i64));
    let q = Poly::<Rational>::from_i64s(&[3, -2, -1]).scale(&Rational::from_i64(labels.q() as i64));
    (&p - &q).primitive()
}

/// A positive root of [`csc_quadratic`], flagged by whether it is an
/// admissible fiber parameter.
#[derive(Debug, Clone, PartialEq)]
pub struct CscCandidate {
    pub root: AlgebraicRoot,
    pub in_unit_interval: bool,
}

/// Positive roots of the CSC quadratic with isolating intervals of width at
/// most `2^-20`, ascending.
pub fn csc_candidates(labels: ConeLabels) -> Result<Vec<CscCandidate>> {
    let quad = csc_quadratic(labels);
    let lead = quad.leading().cloned().unwrap_or_else(Rational::one);
    // Cauchy bound on the roots
    let bound = quad
        .coeffs()
        .iter()
        .map(|c| (c / &lead).abs())
        .fold(Rational::zero(), |m, c| m.max(c))
        + rat(1, 1);
    let search = Interval::open(Rational::zero(), bound)?;
    let width = report_width();
    AlgebraicRoot::roots_of(&quad, &search)?
        .into_iter()
        .map(|root| {
            let root = AlgebraicRoot::new(root.minimal().clone(), root.refined(&width))?;
            let in_unit_interval = root.cmp_rational(&Rational::one()).is_lt();
            Ok(CscCandidate {
                root,
                in_unit_interval,
            })
        })
        .collect()
}

/// All `r in (0, 1)` at which the extremal profile for `labels` has constant
/// scalar curvature, i.e. where `h` is linear. Empty when `p >= q`.
pub fn csc_roots(labels: ConeLabels) -> Vec<AlgebraicRoot> {
    csc_candidates(labels)
        .expect("the CSC quadratic is nonzero")
        .into_iter()
        .filter(|c| c.in_unit_interval)
        .map(|c| c.root)
        .collect()
}

/// Extremal profile at an algebraic fiber parameter.
pub fn csc_profile(labels: ConeLabels, root: &AlgebraicRoot) -> Result<Profile<Algebraic>> {
    extremal_orbifold_f(labels, Algebraic::generator(Arc::new(root.clone())))
}
