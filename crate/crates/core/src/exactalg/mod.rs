//! Exact arithmetic on univariate polynomials and rational functions, with
//! certified root counting on intervals.

pub mod algebraic;
pub mod interval;
pub mod poly;
pub mod ratfn;
pub mod sturm;
