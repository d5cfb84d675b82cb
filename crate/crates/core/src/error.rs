use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("exponent p = {0} is not supported (need 1 < p < inf)")]
    InvalidExponent(f64),

    #[error("dimension must be at least 1, got {0}")]
    InvalidDimension(usize),

    #[error("dimension mismatch: expected {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("scale factor must be positive, got {0}")]
    NonPositiveScale(f64),

    /// A parameter fell outside the closed interval `[lo, hi]` where the
    /// requested construction or solver is valid.
    #[error("{what} = {value} is outside the valid range [{lo}, {hi}]")]
    OutOfRange {
        what: &'static str,
        value: f64,
        lo: f64,
        hi: f64,
    },

    #[error("dimension d = {d} is too small: at least {min} is required")]
    DimensionTooSmall { d: usize, min: usize },

    #[error("Hadamard exponent n = {n} exceeds the supported maximum {max}")]
    HadamardTooLarge { n: u32, max: u32 },

    #[error("invalid Hadamard order {0}: need an even order k >= 2")]
    HadamardOrder(usize),

    #[error("validation failed: {0}")]
    Validation(String),

    #[error("degenerate point set: points {i} and {j} coincide")]
    Degenerate { i: usize, j: usize },

    #[error("need at least {min} points, got {found}")]
    TooFewPoints { min: usize, found: usize },

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
