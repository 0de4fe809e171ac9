//! Dense univariate polynomials over a generic [`Scalar`] field.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::{ExactField, Scalar};
use crate::Rational;

/// Polynomial with coefficients in ascending degree order.
///
/// Trailing zero coefficients are always stripped, so the zero polynomial has
/// an empty coefficient list and [`Poly::degree`] returns `None` for it.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly<T> {
    coeffs: Vec<T>,
}

impl<T: Scalar> Poly<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(T::one())
    }

    pub fn constant(c: T) -> Self {
        Self::new(vec![c])
    }

    /// The identity polynomial `x`.
    pub fn x() -> Self {
        Self::new(vec![T::zero(), T::one()])
    }

    /// `c0 + c1 x`.
    pub fn linear(c0: T, c1: T) -> Self {
        Self::new(vec![c0, c1])
    }

    /// `c x^k`.
    pub fn monomial(c: T, k: usize) -> Self {
        let mut coeffs = vec![T::zero(); k];
        coeffs.push(c);
        Self::new(coeffs)
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| T::from_i64(c)).collect())
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    /// Coefficient of `x^k`; zero beyond the degree.
    pub fn coeff(&self, k: usize) -> T {
        self.coeffs.get(k).cloned().unwrap_or_else(T::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading(&self) -> Option<&T> {
        self.coeffs.last()
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &T) -> T {
        self.coeffs
            .iter()
            .rev()
            .fold(T::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c.clone() * T::from_i64(k as i64))
                .collect(),
        )
    }

    pub fn nth_derivative(&self, n: usize) -> Self {
        (0..n).fold(self.clone(), |p, _| p.derivative())
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    /// Converts coefficients to another scalar type.
    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Poly<U> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }

    /// `p(x) -> p(-x)`.
    pub fn reflect(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| if k % 2 == 1 { -c.clone() } else { c.clone() })
                .collect(),
        )
    }

    /// Euclidean division, `self = q * divisor + r` with `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let d_deg = divisor.degree().ok_or(Error::ZeroDivisor)?;
        let lead = divisor.coeffs[d_deg].clone();
        let mut rem = self.coeffs.clone();
        let Some(n_deg) = self.degree().filter(|&n| n >= d_deg) else {
            return Ok((Self::zero(), self.clone()));
        };
        let mut quot = vec![T::zero(); n_deg - d_deg + 1];
        for k in (0..quot.len()).rev() {
            let c = rem[k + d_deg].clone() / lead.clone();
            if c.is_zero() {
                continue;
            }
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                rem[k + j] = rem[k + j].clone() - c.clone() * dc.clone();
            }
            quot[k] = c;
        }
        rem.truncate(d_deg);
        Ok((Self::new(quot), Self::new(rem)))
    }

    /// Quotient when `divisor` divides `self` exactly, `None` otherwise.
    pub fn exact_div(&self, divisor: &Self) -> Option<Self> {
        let (q, r) = self.div_rem(divisor).ok()?;
        r.is_zero().then_some(q)
    }

    /// Scales to leading coefficient one. The zero polynomial is returned as is.
    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(lc) => {
                let inv = T::one() / lc.clone();
                self.scale(&inv)
            }
            None => Self::zero(),
        }
    }

    /// Monic greatest common divisor; zero iff both inputs are zero.
    pub fn gcd(a: &Self, b: &Self) -> Self {
        let (mut a, mut b) = (a.clone(), b.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Product of the distinct irreducible factors, made monic.
    pub fn square_free_part(&self) -> Self {
        if self.is_constant() {
            return self.monic();
        }
        let g = Self::gcd(self, &self.derivative());
        self.exact_div(&g).expect("gcd divides").monic()
    }
}

impl<T: ExactField> Poly<T> {
    /// Sign of the leading coefficient; `Equal` for the zero polynomial.
    pub fn leading_sign(&self) -> std::cmp::Ordering {
        self.leading()
            .map_or(std::cmp::Ordering::Equal, ExactField::sign)
    }
}

impl Poly<Rational> {
    /// Primitive integer-coefficient multiple with positive leading
    /// coefficient. Zero maps to zero.
    pub fn primitive(&self) -> Self {
        use num_integer::Integer as _;
        if self.is_zero() {
            return Self::zero();
        }
        let lcm = self
            .coeffs
            .iter()
            .fold(crate::Integer::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<crate::Integer> = self
            .coeffs
            .iter()
            .map(|c| (c * Rational::from_integer(lcm.clone())).to_integer())
            .collect();
        let content = ints
            .iter()
            .fold(crate::Integer::zero(), |acc, c| acc.gcd(c));
        let sign = if self.leading_sign() == std::cmp::Ordering::Less {
            -crate::Integer::one()
        } else {
            crate::Integer::one()
        };
        Self::new(
            ints.into_iter()
                .map(|c| Rational::from_integer(c / &content * &sign))
                .collect(),
        )
    }

    /// Human-readable form in the variable `var`, highest degree first,
    /// e.g. `r^2+6r-3`. Non-integer coefficients are parenthesised.
    pub fn to_string_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let negative = c < &Rational::zero();
            let mag = if negative { -c.clone() } else { c.clone() };
            if negative {
                out.push('-');
            } else if !out.is_empty() {
                out.push('+');
            }
            let coeff = if mag.is_integer() {
                mag.numer().to_string()
            } else {
                format!("({}/{})", mag.numer(), mag.denom())
            };
            match k {
                0 => out.push_str(&coeff),
                _ => {
                    if !mag.is_one() {
                        out.push_str(&coeff);
                    }
                    out.push_str(var);
                    if k > 1 {
                        out.push('^');
                        out.push_str(&k.to_string());
                    }
                }
            }
        }
        out
    }
}

impl<T: fmt::Debug> fmt::Debug for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_tuple("Poly").field(&self.coeffs).finish()
    }
}

impl fmt::Display for Poly<Rational> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_in("z"))
    }
}

fn add_coeffs<T: Scalar>(a: &[T], b: &[T], negate_b: bool) -> Vec<T> {
    let n = a.len().max(b.len());
    (0..n)
        .map(|k| {
            let x = a.get(k).cloned().unwrap_or_else(T::zero);
            let y = b.get(k).cloned().unwrap_or_else(T::zero);
            if negate_b {
                x - y
            } else {
                x + y
            }
        })
        .collect()
}

impl<T: Scalar> Add for &Poly<T> {
    type Output = Poly<T>;
    fn add(self, rhs: &Poly<T>) -> Poly<T> {
        Poly::new(add_coeffs(&self.coeffs, &rhs.coeffs, false))
    }
}

impl<T: Scalar> Sub for &Poly<T> {
    type Output = Poly<T>;
    fn sub(self, rhs: &Poly<T>) -> Poly<T> {
        Poly::new(add_coeffs(&self.coeffs, &rhs.coeffs, true))
    }
}

impl<T: Scalar> Mul for &Poly<T> {
    type Output = Poly<T>;
    fn mul(self, rhs: &Poly<T>) -> Poly<T> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly::new(out)
    }
}

impl<T: Scalar> Neg for &Poly<T> {
    type Output = Poly<T>;
    fn neg(self) -> Poly<T> {
        Poly::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

macro_rules! forward_owned {
    ($($tr:ident $method:ident),*) => {$(
        impl<T: Scalar> $tr for Poly<T> {
            type Output = Poly<T>;
            fn $method(self, rhs: Poly<T>) -> Poly<T> {
                (&self).$method(&rhs)
            }
        }
        impl<T: Scalar> $tr<&Poly<T>> for Poly<T> {
            type Output = Poly<T>;
            fn $method(self, rhs: &Poly<T>) -> Poly<T> {
                (&self).$method(rhs)
            }
        }
        impl<T: Scalar> $tr<Poly<T>> for &Poly<T> {
            type Output = Poly<T>;
            fn $method(self, rhs: Poly<T>) -> Poly<T> {
                self.$method(&rhs)
            }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul);

impl<T: Scalar> Neg for Poly<T> {
    type Output = Poly<T>;
    fn neg(self) -> Poly<T> {
        -&self
    }
}
