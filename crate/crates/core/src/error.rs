use thiserror::Error;

/// Errors raised by exact arithmetic, walk construction and period analysis.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("level mismatch: {left} vs {right} (embed both operands into a common level first)")]
    LevelMismatch { left: u64, right: u64 },

    #[error("level {level} does not divide {target}")]
    NotAMultiple { level: u64, target: u64 },

    #[error("cyclotomic level {level} exceeds the configured cap {cap}")]
    LevelCapExceeded { level: u64, cap: u64 },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("coin is not unitary: {0}")]
    NotUnitary(String),

    #[error(
        "invalid coefficient vector: level {level} needs {expected} coefficients, got {found}"
    )]
    CoefficientCount {
        level: u64,
        expected: usize,
        found: usize,
    },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
