//! Scalar traits for the generic polynomial layer.

use std::cmp::Ordering;
use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, ToPrimitive, Zero};

use crate::Rational;

/// A field the polynomial layer can compute over.
///
/// Division is only ever called with a nonzero divisor.
pub trait Scalar:
    Clone
    + Debug
    + PartialEq
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    fn from_i64(n: i64) -> Self;

    fn from_rational(q: &Rational) -> Self;

    fn to_f64(&self) -> f64;

    /// Short human-readable rendering used in error messages and reports.
    fn describe(&self) -> String;
}

/// An ordered field with exact arithmetic and exact sign determination.
///
/// Everything that certifies something (Sturm counts, gcd reduction,
/// positivity) requires this bound.
pub trait ExactField: Scalar {
    /// Sign of `self` relative to zero.
    fn sign(&self) -> Ordering;

    fn is_positive(&self) -> bool {
        self.sign() == Ordering::Greater
    }

    fn is_negative(&self) -> bool {
        self.sign() == Ordering::Less
    }
}

impl Scalar for Rational {
    fn from_i64(n: i64) -> Self {
        Rational::from_integer(n.into())
    }

    fn from_rational(q: &Rational) -> Self {
        q.clone()
    }

    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }

    fn describe(&self) -> String {
        fmt_rational(self)
    }
}

impl ExactField for Rational {
    fn sign(&self) -> Ordering {
        if self.is_zero() {
            Ordering::Equal
        } else if *self > Rational::zero() {
            Ordering::Greater
        } else {
            Ordering::Less
        }
    }
}

macro_rules! float_scalar {
    ($t:ty) => {
        impl Scalar for $t {
            fn from_i64(n: i64) -> Self {
                n as $t
            }

            fn from_rational(q: &Rational) -> Self {
                Scalar::to_f64(q) as $t
            }

            fn to_f64(&self) -> f64 {
                *self as f64
            }

            fn describe(&self) -> String {
                self.to_string()
            }
        }
    };
}

float_scalar!(f32);
float_scalar!(f64);

/// `n/d` as a [`Rational`]. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

/// Formats a rational as `"num/den"`, including `"/1"` for integers.
pub fn fmt_rational(q: &Rational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

/// Parses an exact rational from `"n"` or `"n/d"`. Decimal and exponent
/// notation are rejected.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    let valid = |part: &str| {
        let digits = part.strip_prefix(['-', '+']).unwrap_or(part);
        !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
    };
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    if !valid(n) || !valid(d) {
        return None;
    }
    let n: crate::Integer = n.parse().ok()?;
    let d: crate::Integer = d.parse().ok()?;
    if d.is_zero() {
        return None;
    }
    Some(Rational::new(n, d))
}
