use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactalg::interval::Interval;
use crate::exactalg::sturm::{certify_positive, certify_positive_ratfn};
use crate::profiles::profile::Profile;
use crate::scalar::ExactField;

/// Certified positivity and boundary conditions of an orbifold profile.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ConditionReport {
    /// `Theta > 0` on `(-1, 1)`.
    pub positivity: bool,
    /// `Theta(-1) = Theta(1) = 0`.
    pub endpoints: bool,
    /// `Theta'(-1) = 2/p` and `Theta'(1) = -2/q`.
    pub derivatives: bool,
}

impl ConditionReport {
    pub fn all(&self) -> bool {
        self.positivity && self.endpoints && self.derivatives
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ExtremalReport {
    /// `F = Theta (1 + r z)` is a polynomial.
    pub polynomial: bool,
    pub degree_at_most_four: bool,
    /// `F''(-1/r) = 0`.
    pub second_derivative_vanishes: bool,
}

impl ExtremalReport {
    pub fn is_extremal(&self) -> bool {
        self.polynomial && self.degree_at_most_four && self.second_derivative_vanishes
    }
}

pub fn check_conditions<T: ExactField>(prof: &Profile<T>) -> ConditionReport {
    let unit = Interval::unit_open();
    let theta = prof.theta();
    // 1 + r z > 0 on (-1, 1), so Theta > 0 there iff F > 0
    let positivity = match prof.f_poly() {
        Some(f) => certify_positive(f, &unit),
        None => certify_positive_ratfn(&theta, &unit),
    };
    let (minus_one, one) = (-T::one(), T::one());
    let endpoints = [&minus_one, &one]
        .iter()
        .all(|z| theta.eval(z).is_ok_and(|v| v.is_zero()));
    let labels = prof.labels();
    let d = theta.derivative();
    let two = T::from_i64(2);
    let derivatives = d
        .eval(&minus_one)
        .is_ok_and(|v| v == two.clone() / T::from_i64(labels.p() as i64))
        && d.eval(&one)
            .is_ok_and(|v| v == -(two / T::from_i64(labels.q() as i64)));
    ConditionReport {
        positivity,
        endpoints,
        derivatives,
    }
}

pub fn check_extremal<T: ExactField>(prof: &Profile<T>) -> ExtremalReport {
    let pole = prof.r().pole();
    match prof.f_poly() {
        Some(f) => ExtremalReport {
            polynomial: true,
            degree_at_most_four: f.degree().unwrap_or(0) <= 4,
            second_derivative_vanishes: f.nth_derivative(2).eval(&pole).is_zero(),
        },
        None => ExtremalReport {
            polynomial: false,
            degree_at_most_four: false,
            second_derivative_vanishes: prof
                .f()
                .derivative()
                .derivative()
                .eval(&pole)
                .is_ok_and(|v| v.is_zero()),
        },
    }
}

/// True iff `F'` has a double root at `z = -1/r`, the Kähler-Einstein
/// criterion. Requires an extremal profile.
pub fn ke_obstruction_check<T: ExactField>(prof: &Profile<T>) -> Result<bool> {
    let report = check_extremal(prof);
    let f = prof
        .f_poly()
        .filter(|_| report.is_extremal())
        .ok_or_else(|| Error::Precondition("profile is not extremal".into()))?;
    let pole = prof.r().pole();
    let d1 = f.derivative();
    Ok(d1.eval(&pole).is_zero() && d1.derivative().eval(&pole).is_zero())
}
