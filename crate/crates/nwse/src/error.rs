use thiserror::Error;

/// Errors raised by the exact-arithmetic kernel and the solvers built on it.
#[derive(Error, Debug, Clone, PartialEq)]
pub enum Error {
    #[error("mismatched surd discriminant: {0} vs {1}")]
    MismatchedDiscriminant(u64, u64),

    #[error("discriminant must be a square-free positive integer, got {0}")]
    InvalidDiscriminant(u64),

    #[error("mismatched derivation mode")]
    MismatchedMode,

    #[error("mismatched truncation order: {0} vs {1}")]
    MismatchedOrder(usize, usize),

    #[error("division by zero")]
    DivisionByZero,

    #[error("ring element has a zero denominator")]
    ZeroDenominator,

    #[error("series division requires an invertible constant term")]
    SingularDivision,

    #[error("denominator vanishes at x={x}, t={t}")]
    EvaluationSingularity { x: f64, t: f64 },

    #[error("reference integrator diverged (non-finite value at t={0})")]
    Divergence(f64),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
