use thiserror::Error;

pub type Result<T, E = LieError> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LieError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("arity mismatch: expected {expected}, found {found}")]
    ArityMismatch { expected: usize, found: usize },

    #[error("matrix is singular")]
    SingularMatrix,

    #[error("subspace is not an ideal")]
    NotAnIdeal,

    #[error("subspace is not invariant under the given operator")]
    NotInvariant,

    #[error("algebra is not in {variety}: nonzero value at basis tuple {witness:?}")]
    NotInVariety { variety: String, witness: Vec<usize> },

    #[error("resource cap exceeded: {required} coordinates needed, cap is {cap}")]
    ResourceCap { required: usize, cap: usize },

    #[error("hypothesis failed ({clause}): {detail}")]
    HypothesisFailed { clause: String, detail: String },

    #[error("rejected: {0}")]
    Rejected(String),

    #[error("search exhausted: {0}")]
    SearchExhausted(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("unknown name {0:?}")]
    UnknownName(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),
}

impl LieError {
    pub fn invalid(msg: impl Into<String>) -> Self {
        LieError::InvalidInput(msg.into())
    }

    pub fn hypothesis(clause: impl Into<String>, detail: impl Into<String>) -> Self {
        LieError::HypothesisFailed {
            clause: clause.into(),
            detail: detail.into(),
        }
    }
}
