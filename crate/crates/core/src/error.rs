use thiserror::Error;

/// Errors shared by every operation in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// An argument violated the documented precondition of an operation
    /// (e.g. a non-acyclic orientation handed to `phi`).
    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("budget exceeded: {what} needs {needed} but the limit is {limit}")]
    BudgetExceeded {
        what: &'static str,
        needed: String,
        limit: u64,
    },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidInput(msg.into())
}

pub(crate) fn precondition(msg: impl Into<String>) -> Error {
    Error::Precondition(msg.into())
}
