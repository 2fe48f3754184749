use thiserror::Error;

/// Errors surfaced by the numeric layer. Domain violations carry the exact
/// precondition that failed so callers can echo it verbatim.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("lattice mismatch: classes do not reference the same marking lattice")]
    LatticeMismatch,

    #[error("quotient impossible: computed c2 = {0} < 0 for the requested quotient type")]
    NegativeC2(String),

    #[error("rank-4 reduction unavailable: {0}")]
    ReductionUnavailable(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}
