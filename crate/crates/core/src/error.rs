use thiserror::Error;

/// Errors surfaced by the toolkit.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("unsupported size: {0}")]
    UnsupportedSize(String),

    #[error("ordering is not a bicolor-elimination ordering of the graph")]
    InvalidOrdering,

    #[error("graph is not bicolor-eliminable")]
    NotEliminable,

    #[error("rejected: {0}")]
    Rejected(String),

    #[error("malformed input: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidArgument(msg.into())
}
