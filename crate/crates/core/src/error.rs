use thiserror::Error;

/// Failure modes shared by every operation in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An intermediate value left the range of the coefficient type.
    #[error("integer overflow during {0}")]
    Overflow(&'static str),
    /// A precondition on the inputs was violated.
    #[error("{0}")]
    Domain(String),
    /// Two independent derivations of the same quantity disagree. Always a bug.
    #[error("internal consistency failure: {0}")]
    Consistency(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}
