use thiserror::Error;

#[derive(Clone, Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("pivot limit exceeded after {0} pivots")]
    PivotLimit(usize),

    #[error("equality oracle not applicable: {0}")]
    OracleNotApplicable(String),

    #[error("audit failed: {0}")]
    Audit(String),

    #[error("internal check failed: {0}")]
    Internal(String),

    #[error("json: {0}")]
    Json(String),
}

pub type Result<T> = std::result::Result<T, Error>;
