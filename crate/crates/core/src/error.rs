use thiserror::Error;

/// Errors raised by the character and pattern computations.
///
/// Verification failures are not errors; they come back as
/// [`VerificationReport`](crate::filtration::VerificationReport)s.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid rank {0}: sl(n+1) needs n >= 1")]
    InvalidRank(usize),

    #[error("rank mismatch: expected rank {expected}, found {found}")]
    RankMismatch { expected: usize, found: usize },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("integrality violation: {0}")]
    Integrality(String),

    #[error("decomposition error: {0}")]
    Decomposition(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
