use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("index {index} out of range for dimension {n}")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("matrix has a nonzero diagonal entry at {index}")]
    NonZeroDiagonal { index: usize },

    #[error("operation requires zero thresholds")]
    NonZeroThreshold,

    #[error("network is not canonical: {0}")]
    NotCanonical(&'static str),

    #[error("negative entry {value} at ({row}, {col})")]
    NegativeEntry { row: usize, col: usize, value: f64 },

    #[error("vector has no direction (zero norm)")]
    ZeroVector,

    #[error("eigensolver did not converge in {iterations} iterations (best residual {best_residual:e})")]
    EigenBudget { iterations: usize, best_residual: f64 },

    #[error("enumeration over 2^{n} corners exceeds the budget (n <= {max}); use `solve` for heuristic results")]
    EnumerationBudget { n: usize, max: usize },

    #[error("synthesis rejected: {0}")]
    Synthesis(#[from] SynthesisViolation),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse { line, message: message.into() }
    }
}

/// Which pattern-set invariant a synthesis request broke.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum SynthesisViolation {
    #[error("no patterns given")]
    Empty,
    #[error("pattern {index} has length {found}, expected {expected}")]
    Length { index: usize, expected: usize, found: usize },
    #[error("{count} patterns in dimension {n}; at most {max} allowed")]
    TooMany { count: usize, n: usize, max: usize },
    #[error("two or more orthogonal ±1 patterns need an even dimension, got {n}")]
    OddDimension { n: usize },
    #[error("patterns {i} and {j} are not orthogonal (inner product {inner})")]
    NotOrthogonal { i: usize, j: usize, inner: i64 },
    #[error("eigenvalue magnitude {value} for pattern {index} must be positive")]
    NonPositive { index: usize, value: f64 },
}
