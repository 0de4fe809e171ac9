//! Real algebraic numbers of degree at most two and arithmetic in the real
//! quadratic fields they generate.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactalg::interval::Interval;
use crate::exactalg::poly::Poly;
use crate::exactalg::sturm::{isolate_roots, refine_isolating, sturm_root_count};
use crate::scalar::{fmt_rational, rat, ExactField, Scalar};
use crate::Rational;

/// A real root of an irreducible rational polynomial of degree one or two,
/// pinned down by an open isolating interval with rational endpoints.
///
/// The minimal polynomial is stored as a primitive integer polynomial with
/// positive leading coefficient.
#[derive(Clone)]
pub struct AlgebraicRoot {
    minimal: Poly<Rational>,
    isolating: Interval,
}

fn rational_sqrt(q: &Rational) -> Option<Rational> {
    if q < &Rational::zero() {
        return None;
    }
    let n = q.numer().sqrt();
    let d = q.denom().sqrt();
    (&n * &n == *q.numer() && &d * &d == *q.denom()).then(|| Rational::new(n, d))
}

impl AlgebraicRoot {
    /// Validates that `minimal` is irreducible of degree one or two and that
    /// `isolating` is an open interval holding exactly one of its roots, with
    /// non-root endpoints.
    pub fn new(minimal: Poly<Rational>, isolating: Interval) -> Result<Self> {
        let minimal = minimal.primitive();
        let deg = minimal.degree().unwrap_or(0);
        if !(1..=2).contains(&deg) {
            return Err(Error::InvalidAlgebraicRoot(format!(
                "minimal polynomial must have degree 1 or 2, got {}",
                minimal.to_string_in("r")
            )));
        }
        if deg == 2 && rational_sqrt(&discriminant(&minimal)).is_some() {
            return Err(Error::InvalidAlgebraicRoot(format!(
                "{} is reducible over Q",
                minimal.to_string_in("r")
            )));
        }
        if !(isolating.lo_open() && isolating.hi_open()) {
            return Err(Error::InvalidAlgebraicRoot(
                "isolating interval must be open".into(),
            ));
        }
        for end in [isolating.lo(), isolating.hi()] {
            if minimal.eval(end).is_zero() {
                return Err(Error::InvalidAlgebraicRoot(
                    "isolating interval endpoint is a root".into(),
                ));
            }
        }
        if sturm_root_count(&minimal, &isolating)? != 1 {
            return Err(Error::InvalidAlgebraicRoot(format!(
                "{isolating} does not isolate exactly one root of {}",
                minimal.to_string_in("r")
            )));
        }
        Ok(Self { minimal, isolating })
    }

    pub fn from_rational(q: &Rational) -> Self {
        let minimal = Poly::linear(-q.clone(), Rational::one()).primitive();
        let isolating = Interval::open(q - rat(1, 1), q + rat(1, 1)).expect("valid");
        Self { minimal, isolating }
    }

    /// All real roots of a polynomial of degree at most two inside
    /// `interval`, each with its true minimal polynomial (a reducible
    /// quadratic is split into rational roots).
    pub fn roots_of(p: &Poly<Rational>, interval: &Interval) -> Result<Vec<Self>> {
        let deg = p.degree().ok_or(Error::ZeroPolynomial)?;
        if deg > 2 {
            return Err(Error::InvalidAlgebraicRoot(format!(
                "degree {deg} is outside the supported range"
            )));
        }
        let rational_roots: Vec<Rational> = match deg {
            0 => return Ok(vec![]),
            1 => vec![-p.coeff(0) / p.coeff(1)],
            _ => match rational_sqrt(&discriminant(p)) {
                Some(s) => {
                    let two_a = p.coeff(2) * rat(2, 1);
                    vec![(-p.coeff(1) - &s) / &two_a, (-p.coeff(1) + s) / two_a]
                }
                None => vec![],
            },
        };
        if !rational_roots.is_empty() {
            let mut out: Vec<Self> = rational_roots
                .iter()
                .filter(|x| interval.contains(x))
                .map(Self::from_rational)
                .collect();
            out.sort_by(|a, b| a.cmp_root(b));
            out.dedup_by(|a, b| a.cmp_root(b) == Ordering::Equal);
            return Ok(out);
        }
        isolate_roots(p, interval)?
            .into_iter()
            .map(|iv| Self::new(p.clone(), iv))
            .collect()
    }

    pub fn minimal(&self) -> &Poly<Rational> {
        &self.minimal
    }

    pub fn isolating(&self) -> &Interval {
        &self.isolating
    }

    pub fn degree(&self) -> usize {
        self.minimal.degree().expect("nonzero")
    }

    /// The value when the root is rational.
    pub fn rational_value(&self) -> Option<Rational> {
        (self.degree() == 1).then(|| -self.minimal.coeff(0) / self.minimal.coeff(1))
    }

    /// Exact comparison of the root with a rational number.
    pub fn cmp_rational(&self, x: &Rational) -> Ordering {
        if let Some(v) = self.rational_value() {
            return v.cmp(x);
        }
        if x <= self.isolating.lo() {
            return Ordering::Greater;
        }
        if x >= self.isolating.hi() {
            return Ordering::Less;
        }
        // irreducible quadratic: x is not the root, and exactly one root
        // lies in (lo, hi), so a sign change on (lo, x) locates it
        let at_lo = self.minimal.eval(self.isolating.lo()).sign();
        let at_x = self.minimal.eval(x).sign();
        if at_lo == at_x {
            Ordering::Greater
        } else {
            Ordering::Less
        }
    }

    /// Exact comparison of two roots.
    pub fn cmp_root(&self, other: &Self) -> Ordering {
        if let Some(v) = other.rational_value() {
            return self.cmp_rational(&v);
        }
        if let Some(v) = self.rational_value() {
            return other.cmp_rational(&v).reverse();
        }
        if self.minimal == other.minimal {
            let lo = self.isolating.lo().max(other.isolating.lo()).clone();
            let hi = self.isolating.hi().min(other.isolating.hi()).clone();
            if lo < hi {
                let overlap = Interval::open(lo, hi).expect("lo < hi");
                if sturm_root_count(&self.minimal, &overlap) == Ok(1) {
                    return Ordering::Equal;
                }
            }
        }
        // distinct roots: refine until the isolating intervals separate
        let mut a = self.isolating.clone();
        let mut b = other.isolating.clone();
        loop {
            if a.hi() <= b.lo() {
                return Ordering::Less;
            }
            if b.hi() <= a.lo() {
                return Ordering::Greater;
            }
            a = refine_isolating(&self.minimal, &a, &(a.width() / rat(2, 1))).expect("valid");
            b = refine_isolating(&other.minimal, &b, &(b.width() / rat(2, 1))).expect("valid");
        }
    }

    /// Isolating interval of width at most `max_width`.
    pub fn refined(&self, max_width: &Rational) -> Interval {
        match self.rational_value() {
            Some(v) => {
                let eps = max_width / rat(4, 1);
                Interval::open(&v - &eps, &v + &eps).expect("valid")
            }
            None => refine_isolating(&self.minimal, &self.isolating, max_width).expect("valid"),
        }
    }

    pub fn to_f64(&self) -> f64 {
        if let Some(v) = self.rational_value() {
            return Scalar::to_f64(&v);
        }
        let iv = self.refined(&Rational::new(1.into(), crate::Integer::one() << 64usize));
        Scalar::to_f64(&iv.midpoint())
    }

    /// `(m1, m0)` with `r^2 = -m1 r - m0`.
    fn monic_tail(&self) -> (Rational, Rational) {
        let lead = self.minimal.coeff(2);
        (self.minimal.coeff(1) / &lead, self.minimal.coeff(0) / lead)
    }
}

fn discriminant(p: &Poly<Rational>) -> Rational {
    let (a, b, c) = (p.coeff(2), p.coeff(1), p.coeff(0));
    &b * &b - rat(4, 1) * a * c
}

impl PartialEq for AlgebraicRoot {
    fn eq(&self, other: &Self) -> bool {
        self.minimal == other.minimal && self.cmp_root(other) == Ordering::Equal
    }
}

impl fmt::Debug for AlgebraicRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "root of {} in {}",
            self.minimal.to_string_in("r"),
            self.isolating
        )
    }
}

/// Element `c0 + c1 * r` of the field `Q(r)` for a quadratic irrational `r`,
/// i.e. a polynomial in `r` reduced modulo its minimal polynomial.
///
/// Rational elements carry no field (`c1 = 0`), which lets zero and one exist
/// without context. Mixing elements of two different fields panics.
#[derive(Clone)]
pub struct Algebraic {
    c0: Rational,
    c1: Rational,
    field: Option<Arc<AlgebraicRoot>>,
}

impl Algebraic {
    pub fn rational(q: Rational) -> Self {
        Self {
            c0: q,
            c1: Rational::zero(),
            field: None,
        }
    }

    /// The generator `r` itself. A rational root collapses to its value.
    pub fn generator(root: Arc<AlgebraicRoot>) -> Self {
        match root.rational_value() {
            Some(v) => Self::rational(v),
            None => Self {
                c0: Rational::zero(),
                c1: Rational::one(),
                field: Some(root),
            },
        }
    }

    pub fn parts(&self) -> (&Rational, &Rational) {
        (&self.c0, &self.c1)
    }

    pub fn field(&self) -> Option<&Arc<AlgebraicRoot>> {
        self.field.as_ref().filter(|_| !self.c1.is_zero())
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        self.c1.is_zero().then_some(&self.c0)
    }

    fn merge_field(
        a: &Option<Arc<AlgebraicRoot>>,
        b: &Option<Arc<AlgebraicRoot>>,
    ) -> Option<Arc<AlgebraicRoot>> {
        match (a, b) {
            (Some(x), Some(y)) => {
                assert!(
                    Arc::ptr_eq(x, y) || **x == **y,
                    "arithmetic across different number fields: {x:?} vs {y:?}"
                );
                Some(x.clone())
            }
            (Some(x), None) | (None, Some(x)) => Some(x.clone()),
            (None, None) => None,
        }
    }

    fn build(c0: Rational, c1: Rational, field: Option<Arc<AlgebraicRoot>>) -> Self {
        let field = if c1.is_zero() { None } else { field };
        Self { c0, c1, field }
    }

    fn tail(&self, field: &Option<Arc<AlgebraicRoot>>) -> (Rational, Rational) {
        field
            .as_ref()
            .map(|f| f.monic_tail())
            .unwrap_or_else(|| (Rational::zero(), Rational::zero()))
    }
}

impl PartialEq for Algebraic {
    fn eq(&self, other: &Self) -> bool {
        self.c0 == other.c0
            && self.c1 == other.c1
            && (self.c1.is_zero() || Self::merge_field(&self.field, &other.field).is_some())
    }
}

impl fmt::Debug for Algebraic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.describe())
    }
}

impl Add for Algebraic {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let field = Self::merge_field(&self.field, &rhs.field);
        Self::build(self.c0 + rhs.c0, self.c1 + rhs.c1, field)
    }
}

impl Sub for Algebraic {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        let field = Self::merge_field(&self.field, &rhs.field);
        Self::build(self.c0 - rhs.c0, self.c1 - rhs.c1, field)
    }
}

impl Neg for Algebraic {
    type Output = Self;
    fn neg(self) -> Self {
        Self::build(-self.c0, -self.c1, self.field)
    }
}

impl Mul for Algebraic {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let field = Self::merge_field(&self.field, &rhs.field);
        let (m1, m0) = self.tail(&field);
        // (a0 + a1 r)(b0 + b1 r) with r^2 = -m1 r - m0
        let sq = &self.c1 * &rhs.c1;
        let c0 = &self.c0 * &rhs.c0 - &sq * m0;
        let c1 = &self.c0 * &rhs.c1 + &self.c1 * &rhs.c0 - sq * m1;
        Self::build(c0, c1, field)
    }
}

impl Div for Algebraic {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        assert!(!rhs.is_zero(), "division by zero in Q(r)");
        let field = Self::merge_field(&self.field, &rhs.field);
        let (m1, m0) = rhs.tail(&field);
        // conjugate of b0 + b1 r is (b0 - m1 b1) - b1 r
        let norm = &rhs.c0 * &rhs.c0 - &m1 * &rhs.c0 * &rhs.c1 + &m0 * &rhs.c1 * &rhs.c1;
        let inv = Self::build((&rhs.c0 - &m1 * &rhs.c1) / &norm, -(&rhs.c1) / &norm, field);
        self * inv
    }
}

impl Zero for Algebraic {
    fn zero() -> Self {
        Self::rational(Rational::zero())
    }

    fn is_zero(&self) -> bool {
        self.c0.is_zero() && self.c1.is_zero()
    }
}

impl One for Algebraic {
    fn one() -> Self {
        Self::rational(Rational::one())
    }
}

impl Scalar for Algebraic {
    fn from_i64(n: i64) -> Self {
        Self::rational(Rational::from_i64(n))
    }

    fn from_rational(q: &Rational) -> Self {
        Self::rational(q.clone())
    }

    fn to_f64(&self) -> f64 {
        match self.field() {
            None => Scalar::to_f64(&self.c0),
            Some(f) => Scalar::to_f64(&self.c0) + Scalar::to_f64(&self.c1) * f.to_f64(),
        }
    }

    fn describe(&self) -> String {
        match self.field() {
            None => fmt_rational(&self.c0),
            Some(_) if self.c1 < Rational::zero() => format!(
                "{} - {}*r",
                fmt_rational(&self.c0),
                fmt_rational(&-self.c1.clone())
            ),
            Some(_) => format!("{} + {}*r", fmt_rational(&self.c0), fmt_rational(&self.c1)),
        }
    }
}

impl ExactField for Algebraic {
    fn sign(&self) -> Ordering {
        let Some(root) = self.field() else {
            return self.c0.sign();
        };
        // c0 + c1 r vanishes only at r = -c0/c1, which is rational
        let crossing = -(&self.c0) / &self.c1;
        let side = root.cmp_rational(&crossing);
        if self.c1 > Rational::zero() {
            side
        } else {
            side.reverse()
        }
    }
}
