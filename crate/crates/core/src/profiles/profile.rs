use num_integer::Integer as _;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactalg::poly::Poly;
use crate::exactalg::ratfn::RatFn;
use crate::scalar::ExactField;

/// Ramification indices `(p, q)` along the zero and infinity sections.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ConeLabels {
    p: u64,
    q: u64,
}

impl ConeLabels {
    /// Positive and relatively prime.
    pub fn new(p: u64, q: u64) -> Result<Self> {
        if p == 0 || q == 0 {
            return Err(Error::NonPositiveLabels { p, q });
        }
        if p.gcd(&q) != 1 {
            return Err(Error::NotCoprime(p, q));
        }
        Ok(Self { p, q })
    }

    /// `(1, 1)`: no orbifold singularities.
    pub fn smooth() -> Self {
        Self { p: 1, q: 1 }
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn is_smooth(&self) -> bool {
        self.p == 1 && self.q == 1
    }

    fn as_scalars<T: ExactField>(&self) -> (T, T) {
        (T::from_i64(self.p as i64), T::from_i64(self.q as i64))
    }
}

/// Fiber parameter, validated to lie strictly between 0 and 1.
#[derive(Debug, Clone, PartialEq)]
pub struct FiberParam<T>(T);

impl<T: ExactField> FiberParam<T> {
    pub fn new(r: T) -> Result<Self> {
        if r.is_positive() && (T::one() - r.clone()).is_positive() {
            Ok(Self(r))
        } else {
            Err(Error::FiberParamOutOfRange(r.describe()))
        }
    }

    pub fn value(&self) -> &T {
        &self.0
    }

    /// `1 + r z`
    pub fn one_plus_rz(&self) -> Poly<T> {
        Poly::linear(T::one(), self.0.clone())
    }

    /// `-1/r`, the zero of `1 + r z`.
    pub fn pole(&self) -> T {
        -(T::one() / self.0.clone())
    }
}

/// An admissible profile: labels, fiber parameter and `F = Theta (1 + r z)`.
///
/// `F` is a rational function in general (e.g. for the canonical orbifold
/// profile) and a polynomial for the extremal ones.
#[derive(Debug, Clone, PartialEq)]
pub struct Profile<T> {
    labels: ConeLabels,
    r: FiberParam<T>,
    f: RatFn<T>,
}

impl<T: ExactField> Profile<T> {
    pub fn from_f(labels: ConeLabels, r: FiberParam<T>, f: Poly<T>) -> Self {
        Self {
            labels,
            r,
            f: RatFn::from_poly(f),
        }
    }

    pub fn from_theta(labels: ConeLabels, r: FiberParam<T>, theta: &RatFn<T>) -> Self {
        let f = theta.mul_poly(&r.one_plus_rz());
        Self { labels, r, f }
    }

    pub fn labels(&self) -> ConeLabels {
        self.labels
    }

    pub fn r(&self) -> &FiberParam<T> {
        &self.r
    }

    pub fn f(&self) -> &RatFn<T> {
        &self.f
    }

    /// `F` as a polynomial, when it is one.
    pub fn f_poly(&self) -> Option<&Poly<T>> {
        self.f.as_poly()
    }

    /// `Theta = F / (1 + r z)`.
    pub fn theta(&self) -> RatFn<T> {
        self.f
            .div_poly(&self.r.one_plus_rz())
            .expect("1 + r z is nonzero")
    }

    /// `h = 4 p q (3 - r^2) F / (1 - z^2)`, when `F` is a polynomial
    /// divisible by `1 - z^2`.
    pub fn h(&self) -> Option<Poly<T>> {
        let f = self.f_poly()?;
        let (p, q) = self.labels.as_scalars::<T>();
        let r = self.r.value().clone();
        let scale = T::from_i64(4) * p * q * (T::from_i64(3) - r.clone() * r);
        f.scale(&scale).exact_div(&Poly::from_i64s(&[1, 0, -1]))
    }

    /// Constant scalar curvature holds exactly when `h` is at most linear.
    pub fn is_csc(&self) -> bool {
        self.h().is_some_and(|h| h.degree().unwrap_or(0) <= 1)
    }
}

/// Evaluates the integer polynomial `coeffs` (ascending) at `r`.
fn in_r<T: ExactField>(coeffs: &[i64], r: &T) -> T {
    Poly::from_i64s(coeffs).eval(r)
}

/// The extremal profile of a smooth admissible metric:
///
/// ```text
/// Theta(z) = (1 - z^2)(2 r^2 z^2 + r (6 - 2 r^2) z + (6 - 4 r^2)) / ((1 + r z) 2 (3 - r^2))
/// ```
pub fn theta_smooth_extremal<T: ExactField>(r: T) -> Result<RatFn<T>> {
    let r = FiberParam::new(r)?;
    let rv = r.value();
    let r2 = rv.clone() * rv.clone();
    let quad = Poly::new(vec![
        T::from_i64(6) - T::from_i64(4) * r2.clone(),
        rv.clone() * (T::from_i64(6) - T::from_i64(2) * r2.clone()),
        T::from_i64(2) * r2.clone(),
    ]);
    let num = &Poly::from_i64s(&[1, 0, -1]) * &quad;
    let den = r
        .one_plus_rz()
        .scale(&(T::from_i64(2) * (T::from_i64(3) - r2)));
    RatFn::new(num, den)
}

/// Canonical orbifold profile on the weighted fibers:
///
/// ```text
/// Theta_c(z) = 2 p q (1 + z)(1 - z) / (p^2 q (1 - z) + q^2 p (1 + z))
/// ```
pub fn theta_canonical<T: ExactField>(labels: ConeLabels) -> RatFn<T> {
    let (p, q) = labels.as_scalars::<T>();
    let num = Poly::from_i64s(&[1, 0, -1]).scale(&(T::from_i64(2) * p.clone() * q.clone()));
    let pq = p.clone() * q.clone();
    let den = &Poly::linear(T::one(), -T::one()).scale(&(pq.clone() * p))
        + &Poly::linear(T::one(), T::one()).scale(&(pq * q));
    RatFn::new(num, den).expect("denominator is positive on [-1, 1]")
}

/// The quadratic `h(z)` of the extremal orbifold profile.
pub fn h_polynomial<T: ExactField>(labels: ConeLabels, r: &FiberParam<T>) -> Poly<T> {
    let (p, q) = labels.as_scalars::<T>();
    let r = r.value();
    let three_minus_r2 = in_r(&[3, 0, -1], r);
    let h0 = q.clone() * in_r(&[6, -3, -4, 1], r) + p.clone() * in_r(&[6, 3, -4, -1], r);
    let h1 = T::from_i64(2)
        * three_minus_r2
        * (q.clone() * in_r(&[-1, 1], r) + p.clone() * in_r(&[1, 1], r));
    let h2 = r.clone() * (p * in_r(&[3, 2, -1], r) - q * in_r(&[3, -2, -1], r));
    Poly::new(vec![h0, h1, h2])
}

/// Extremal profile on the orbifold ruled surface with labels `(p, q)`:
/// `F(z) = (1 - z^2) h(z) / (4 p q (3 - r^2))`.
pub fn extremal_orbifold_f<T: ExactField>(labels: ConeLabels, r: T) -> Result<Profile<T>> {
    let r = FiberParam::new(r)?;
    let (p, q) = labels.as_scalars::<T>();
    let rv = r.value().clone();
    let scale = T::from_i64(4) * p * q * (T::from_i64(3) - rv.clone() * rv);
    let f = (&Poly::from_i64s(&[1, 0, -1]) * &h_polynomial(labels, &r)).scale(&(T::one() / scale));
    Ok(Profile::from_f(labels, r, f))
}
