use thiserror::Error;

/// Errors raised by the exact kernels, checkers and constructions.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument is outside the operation's domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// A value left the supported scalar field (e.g. an unpaired quadratic root).
    #[error("field error: {0}")]
    Field(String),

    #[error("matrix is singular (rank {rank} of {n})")]
    Singular { rank: usize, n: usize },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    Dimension { expected: usize, found: usize },

    /// Iterative solver gave up; carries the best residual seen.
    #[error("no convergence, best residual {best_residual:e}")]
    Convergence { best_residual: f64, best_parameters: Vec<f64> },

    /// An explicit construction produced an invalid matrix.
    #[error("construction failed: {0}")]
    Construction(String),

    #[error("parse error: {0}")]
    Parse(String),

    /// A theorem-backed identity failed; indicates a bug, never bad input.
    #[error("internal inconsistency: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}
