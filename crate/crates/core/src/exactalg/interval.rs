use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::{fmt_rational, rat};
use crate::Rational;

/// Interval with rational endpoints and explicit openness at each end.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Interval {
    lo: Rational,
    hi: Rational,
    lo_open: bool,
    hi_open: bool,
}

impl Interval {
    pub fn new(lo: Rational, hi: Rational, lo_open: bool, hi_open: bool) -> Result<Self> {
        if lo > hi {
            return Err(Error::InvalidInterval(format!(
                "lo {} > hi {}",
                fmt_rational(&lo),
                fmt_rational(&hi)
            )));
        }
        if lo == hi && (lo_open || hi_open) {
            return Err(Error::InvalidInterval(
                "a degenerate interval must be closed at both ends".into(),
            ));
        }
        Ok(Self {
            lo,
            hi,
            lo_open,
            hi_open,
        })
    }

    pub fn open(lo: Rational, hi: Rational) -> Result<Self> {
        Self::new(lo, hi, true, true)
    }

    pub fn closed(lo: Rational, hi: Rational) -> Result<Self> {
        Self::new(lo, hi, false, false)
    }

    /// The momentum range `(-1, 1)`.
    pub fn unit_open() -> Self {
        Self::open(rat(-1, 1), rat(1, 1)).expect("valid")
    }

    pub fn lo(&self) -> &Rational {
        &self.lo
    }

    pub fn hi(&self) -> &Rational {
        &self.hi
    }

    pub fn lo_open(&self) -> bool {
        self.lo_open
    }

    pub fn hi_open(&self) -> bool {
        self.hi_open
    }

    pub fn midpoint(&self) -> Rational {
        (&self.lo + &self.hi) / rat(2, 1)
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn contains(&self, x: &Rational) -> bool {
        let above = if self.lo_open {
            x > &self.lo
        } else {
            x >= &self.lo
        };
        let below = if self.hi_open {
            x < &self.hi
        } else {
            x <= &self.hi
        };
        above && below
    }

    /// True when `self` lies inside the open interval `(lo, hi)`.
    pub fn within_open(&self, lo: &Rational, hi: &Rational) -> bool {
        &self.lo > lo && &self.hi < hi
    }
}

impl fmt::Debug for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}{}, {}{}",
            if self.lo_open { '(' } else { '[' },
            fmt_rational(&self.lo),
            fmt_rational(&self.hi),
            if self.hi_open { ')' } else { ']' }
        )
    }
}
