use thiserror::Error;

/// Errors raised by the combinatorial and oracle routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("incomparable sizes: {0} and {1}")]
    IncomparableSizes(usize, usize),

    #[error("invalid partition `{input}`: bad token `{token}`")]
    ParsePartition { input: String, token: String },

    #[error("invalid tableau `{input}`: {reason}")]
    ParseTableau { input: String, reason: String },

    #[error("shape mismatch: {0} vs {1}")]
    ShapeMismatch(String, String),

    #[error("type undefined: weight {0} is not a partition")]
    TypeUndefined(String),

    #[error("size mismatch: expected {expected}, got {actual}")]
    SizeMismatch { expected: usize, actual: usize },

    #[error("invalid family: {0}")]
    InvalidFamily(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error(
        "oracle budget exceeded: mn = {size} exceeds the cap of {cap} for {what}; \
         use plethysm_coefficient for single targets"
    )]
    BudgetExceeded {
        size: usize,
        cap: usize,
        what: &'static str,
    },

    #[error("oracle inconsistency: {0}")]
    OracleInconsistency(String),

    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;
