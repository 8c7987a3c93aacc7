use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    /// An argument lies outside the documented domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// An iterative scheme failed to converge. Signals a numerical defect
    /// rather than a user error; should not occur for in-domain inputs.
    #[error("convergence failure: {0}")]
    Convergence(String),

    /// Matrix dimensions do not line up.
    #[error("dimension mismatch: {0}")]
    Shape(String),

    /// Malformed input data (CSV and friends).
    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
