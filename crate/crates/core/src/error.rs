use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("rational function has a pole at {0}")]
    Pole(String),

    #[error("zero denominator")]
    ZeroDenominator,

    #[error("division by the zero polynomial")]
    ZeroDivisor,

    #[error("operation requires a nonzero polynomial")]
    ZeroPolynomial,

    #[error("invalid interval: {0}")]
    InvalidInterval(String),

    #[error("fiber parameter r = {0} is outside (0, 1)")]
    FiberParamOutOfRange(String),

    #[error("labels must be positive integers, got ({p}, {q})")]
    NonPositiveLabels { p: u64, q: u64 },

    #[error("({0}, {1}) are not relatively prime")]
    NotCoprime(u64, u64),

    #[error("grid point {0} is not at least 1/16 away from the special orbits z = +-1")]
    GridOutOfRange(String),

    #[error("finite-difference stencil leaves (-1, 1): {0}")]
    StencilOutOfRange(String),

    #[error("invalid algebraic root: {0}")]
    InvalidAlgebraicRoot(String),

    #[error("ray (a, b) = ({a}, {b}) is not in the Sasaki cone for k2 = {k2}")]
    NotInSasakiCone { a: i64, b: i64, k2: u64 },

    #[error("degree n = {0} must be an even nonnegative integer")]
    InvalidDegree(i64),

    #[error("class is not in the Kähler cone: {0}")]
    NotKahler(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("unknown structure tag `{0}`")]
    InvalidStructure(String),
}
