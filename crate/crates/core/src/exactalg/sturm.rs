//! Sturm sequences: exact counts of distinct real roots on intervals.
//!
//! Everything here is generic over [`ExactField`] so the same code certifies
//! polynomials over `Q` and over real quadratic fields. Evaluation points are
//! always rational.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::exactalg::interval::Interval;
use crate::exactalg::poly::Poly;
use crate::exactalg::ratfn::RatFn;
use crate::scalar::{rat, ExactField};
use crate::Rational;

/// Canonical Sturm sequence `p, p', -rem(p, p'), ...`.
pub fn sturm_sequence<T: ExactField>(p: &Poly<T>) -> Vec<Poly<T>> {
    let mut seq = vec![p.clone()];
    let mut next = p.derivative();
    while !next.is_zero() {
        let (_, r) = seq
            .last()
            .expect("nonempty")
            .div_rem(&next)
            .expect("nonzero divisor");
        seq.push(next);
        next = -r;
    }
    seq
}

fn sign_at<T: ExactField>(p: &Poly<T>, x: &Rational) -> Ordering {
    p.eval(&T::from_rational(x)).sign()
}

fn sign_variations<T: ExactField>(seq: &[Poly<T>], x: &Rational) -> usize {
    let signs: Vec<Ordering> = seq
        .iter()
        .map(|p| sign_at(p, x))
        .filter(|s| *s != Ordering::Equal)
        .collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// `p / (x - a)` for a known root `a`.
fn deflate<T: ExactField>(p: &Poly<T>, a: &Rational) -> Poly<T> {
    let factor = Poly::linear(-T::from_rational(a), T::one());
    p.exact_div(&factor).expect("a is a root")
}

/// Square-free part with roots at the interval endpoints removed, plus the
/// number of closed endpoints that are roots.
fn prepare<T: ExactField>(p: &Poly<T>, interval: &Interval) -> (Poly<T>, usize) {
    let mut sf = p.square_free_part();
    let mut endpoint_roots = 0;
    for (x, open) in [
        (interval.lo(), interval.lo_open()),
        (interval.hi(), interval.hi_open()),
    ] {
        if sign_at(&sf, x) == Ordering::Equal {
            sf = deflate(&sf, x);
            if !open {
                endpoint_roots += 1;
            }
        }
    }
    (sf, endpoint_roots)
}

/// Number of distinct real roots of `p` in `interval`, honouring openness at
/// each end.
pub fn sturm_root_count<T: ExactField>(p: &Poly<T>, interval: &Interval) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if interval.lo() == interval.hi() {
        return Ok(usize::from(sign_at(p, interval.lo()) == Ordering::Equal));
    }
    let (sf, endpoint_roots) = prepare(p, interval);
    let seq = sturm_sequence(&sf);
    let interior = sign_variations(&seq, interval.lo()) - sign_variations(&seq, interval.hi());
    Ok(interior + endpoint_roots)
}

/// Certificate of strict positivity on the open interior of `interval`:
/// no root there and a positive value at the midpoint. The zero polynomial
/// is never positive.
pub fn certify_positive<T: ExactField>(p: &Poly<T>, interval: &Interval) -> bool {
    if p.is_zero() {
        return false;
    }
    let mid = interval.midpoint();
    if interval.lo() == interval.hi() {
        return sign_at(p, &mid) == Ordering::Greater;
    }
    let interior = Interval::open(interval.lo().clone(), interval.hi().clone()).expect("lo < hi");
    sturm_root_count(p, &interior) == Ok(0) && sign_at(p, &mid) == Ordering::Greater
}

/// Positivity certificate for a rational function: numerator and
/// denominator both root-free on the open interior, with matching signs at
/// the midpoint.
pub fn certify_positive_ratfn<T: ExactField>(f: &RatFn<T>, interval: &Interval) -> bool {
    if f.is_zero() {
        return false;
    }
    let mid = interval.midpoint();
    let num_sign = sign_at(f.num(), &mid);
    let den_sign = sign_at(f.den(), &mid);
    let oriented = |p: &Poly<T>, s: Ordering| match s {
        Ordering::Greater => p.clone(),
        Ordering::Less => -p,
        Ordering::Equal => Poly::zero(),
    };
    num_sign == den_sign
        && certify_positive(&oriented(f.num(), num_sign), interval)
        && certify_positive(&oriented(f.den(), den_sign), interval)
}

/// Splits `(a, b)` at a rational point that is not a root of `p`.
fn split_point<T: ExactField>(p: &Poly<T>, a: &Rational, b: &Rational) -> Rational {
    // p has finitely many roots, so one of these candidates works
    let width = b - a;
    (2i64..)
        .flat_map(|den| (1..den).map(move |num| rat(num, den)))
        .map(|t| a + &width * t)
        .find(|m| sign_at(p, m) != Ordering::Equal)
        .expect("finitely many roots")
}

/// Isolates the distinct real roots of `p` in `interval`.
///
/// Interior roots come back as open intervals containing exactly one root,
/// with endpoints that are not roots; a root at a closed endpoint comes back
/// as the degenerate interval `[a, a]`. Output is sorted ascending.
pub fn isolate_roots<T: ExactField>(p: &Poly<T>, interval: &Interval) -> Result<Vec<Interval>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if interval.lo() == interval.hi() {
        let at = sturm_root_count(p, interval)?;
        return Ok(if at == 1 {
            vec![interval.clone()]
        } else {
            vec![]
        });
    }
    let mut found = Vec::new();
    for (x, open) in [
        (interval.lo(), interval.lo_open()),
        (interval.hi(), interval.hi_open()),
    ] {
        if !open && sign_at(p, x) == Ordering::Equal {
            found.push(Interval::closed(x.clone(), x.clone())?);
        }
    }
    let (sf, _) = prepare(p, interval);
    let seq = sturm_sequence(&sf);
    let mut stack = vec![(interval.lo().clone(), interval.hi().clone())];
    while let Some((a, b)) = stack.pop() {
        let count = sign_variations(&seq, &a) - sign_variations(&seq, &b);
        match count {
            0 => {}
            1 => found.push(Interval::open(a, b)?),
            _ => {
                let m = split_point(&sf, &a, &b);
                stack.push((m.clone(), b));
                stack.push((a, m));
            }
        }
    }
    found.sort_by(|x, y| x.lo().cmp(y.lo()).then(x.hi().cmp(y.hi())));
    Ok(found)
}

/// Shrinks an open isolating interval of a root of `p` by bisection until its
/// width is at most `max_width`. Endpoints stay non-roots.
pub fn refine_isolating<T: ExactField>(
    p: &Poly<T>,
    interval: &Interval,
    max_width: &Rational,
) -> Result<Interval> {
    let (mut a, mut b) = (interval.lo().clone(), interval.hi().clone());
    let sa = sign_at(p, &a);
    if sa == Ordering::Equal || sign_at(p, &b) == Ordering::Equal {
        return Err(Error::InvalidInterval(
            "isolating interval endpoints must not be roots".into(),
        ));
    }
    let sf = p.square_free_part();
    let sa_sf = sign_at(&sf, &a);
    while &(&b - &a) > max_width {
        let m = (&a + &b) / rat(2, 1);
        match sign_at(&sf, &m) {
            // rational root exactly at the midpoint: collapse around it
            Ordering::Equal => {
                let eps = max_width / rat(4, 1);
                let lo = &m - &eps;
                let hi = &m + &eps;
                return Interval::open(lo.max(a), hi.min(b));
            }
            s if s == sa_sf => a = m,
            _ => b = m,
        }
    }
    Interval::open(a, b)
}
