use std::fmt;
use std::ops::{Add, Mul, Sub};

use crate::error::{Error, Result};
use crate::exactalg::poly::Poly;
use crate::scalar::ExactField;
use crate::Rational;

/// Reduced rational function `num / den`.
///
/// Canonical form: `gcd(num, den) = 1` and `den` is monic, so two equal
/// functions have identical representations and `==` is structural.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFn<T> {
    num: Poly<T>,
    den: Poly<T>,
}

impl<T: ExactField> RatFn<T> {
    pub fn new(num: Poly<T>, den: Poly<T>) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(Self::from_poly(Poly::zero()));
        }
        let g = Poly::gcd(&num, &den);
        let num = num.exact_div(&g).expect("gcd divides numerator");
        let den = den.exact_div(&g).expect("gcd divides denominator");
        let lc = den.leading().cloned().expect("nonzero denominator");
        let inv = T::one() / lc;
        Ok(Self {
            num: num.scale(&inv),
            den: den.scale(&inv),
        })
    }

    pub fn from_poly(p: Poly<T>) -> Self {
        Self {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn num(&self) -> &Poly<T> {
        &self.num
    }

    pub fn den(&self) -> &Poly<T> {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// The polynomial this function equals, if the denominator is constant.
    pub fn as_poly(&self) -> Option<&Poly<T>> {
        self.den.is_constant().then_some(&self.num)
    }

    /// Value at `x`; `Err(Pole)` when the denominator vanishes there.
    pub fn eval(&self, x: &T) -> Result<T> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return Err(Error::Pole(x.describe()));
        }
        Ok(self.num.eval(x) / d)
    }

    pub fn derivative(&self) -> Self {
        let num = &(&self.num.derivative() * &self.den) - &(&self.num * &self.den.derivative());
        Self::new(num, &self.den * &self.den).expect("nonzero denominator")
    }

    pub fn mul_poly(&self, p: &Poly<T>) -> Self {
        Self::new(&self.num * p, self.den.clone()).expect("nonzero denominator")
    }

    pub fn div_poly(&self, p: &Poly<T>) -> Result<Self> {
        if p.is_zero() {
            return Err(Error::ZeroDivisor);
        }
        Self::new(self.num.clone(), &self.den * p)
    }

    pub fn map<U: ExactField>(&self, f: impl Fn(&T) -> U) -> RatFn<U> {
        RatFn::new(self.num.map(&f), self.den.map(&f)).expect("nonzero denominator")
    }
}

impl<T: ExactField> Add for &RatFn<T> {
    type Output = RatFn<T>;
    fn add(self, rhs: &RatFn<T>) -> RatFn<T> {
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        RatFn::new(num, &self.den * &rhs.den).expect("nonzero denominator")
    }
}

impl<T: ExactField> Sub for &RatFn<T> {
    type Output = RatFn<T>;
    fn sub(self, rhs: &RatFn<T>) -> RatFn<T> {
        let num = &(&self.num * &rhs.den) - &(&rhs.num * &self.den);
        RatFn::new(num, &self.den * &rhs.den).expect("nonzero denominator")
    }
}

impl<T: ExactField> Mul for &RatFn<T> {
    type Output = RatFn<T>;
    fn mul(self, rhs: &RatFn<T>) -> RatFn<T> {
        RatFn::new(&self.num * &rhs.num, &self.den * &rhs.den).expect("nonzero denominator")
    }
}

impl<T: fmt::Debug> fmt::Debug for RatFn<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RatFn")
            .field("num", &self.num)
            .field("den", &self.den)
            .finish()
    }
}

impl fmt::Display for RatFn<Rational> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_constant() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}
