//! Error types shared across the crate.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, Error)]
pub enum Error {
    /// Chain parameters violate construction invariants (n >= 2, v != 0).
    #[error("invalid chain: {0}")]
    InvalidChain(String),

    /// Argument outside an operation's domain.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// The field sits on a ground-state level crossing; the sector label is
    /// ambiguous there.
    #[error("field b = {field} lies on a ground-state level crossing")]
    LevelCrossing { field: f64 },

    /// Size guard tripped (exact diagonalization, Bessel order/argument).
    #[error("size limit exceeded: {0}")]
    SizeLimit(String),

    /// Composite quadrature failed to reach the requested tolerance.
    #[error("quadrature did not converge: {0}")]
    QuadratureNoConvergence(String),

    /// A root bracket could not be established.
    #[error("root bracketing failed: {0}")]
    BracketFailure(String),

    /// Internal consistency violation (indicates a bug, not bad input).
    #[error("internal consistency error: {0}")]
    Internal(String),
}

impl Error {
    /// Exit code the CLI maps this error to (2 = bad request, 3 = numerical).
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::InvalidChain(_)
            | Error::InvalidArgument(_)
            | Error::SizeLimit(_)
            | Error::LevelCrossing { .. } => 2,
            Error::QuadratureNoConvergence(_)
            | Error::BracketFailure(_)
            | Error::Internal(_) => 3,
        }
    }
}
