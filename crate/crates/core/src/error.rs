use thiserror::Error;

/// Errors raised by the library.
///
/// [`Error::Internal`] marks a broken invariant (a result that a correct
/// implementation can never produce); every other variant describes bad input.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch in {context}: expected {expected}, found {found}")]
    DimensionMismatch {
        context: &'static str,
        expected: usize,
        found: usize,
    },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("invalid Lie algebra: {0}")]
    InvalidAlgebra(String),

    #[error("not nilpotent: {0}")]
    NotNilpotent(String),

    #[error("invalid filtration: {0}")]
    InvalidFiltration(String),

    #[error("invalid representation: {0}")]
    InvalidRepresentation(String),

    #[error("representation is not faithful: rank {rank} < algebra dimension {dim}")]
    NotFaithful { rank: usize, dim: usize },

    #[error("rank-vector sampling exhausted after {rounds} rounds (last range ±{range})")]
    SamplingExhausted { rounds: usize, range: i64 },

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    /// True for failures that indicate a defect rather than bad input.
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::Internal(_))
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
