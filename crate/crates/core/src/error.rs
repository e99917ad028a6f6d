use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A caller-supplied argument violates an operation's precondition.
    #[error("invalid input: {0}")]
    Input(String),

    /// A graph would exceed the fixed vertex capacity of a code path.
    #[error("capacity exceeded: {what} needs {requested} vertices, limit is {limit}")]
    Capacity {
        what: &'static str,
        requested: usize,
        limit: usize,
    },

    /// An exact count did not fit in 128 bits.
    #[error("count overflow while computing {0}")]
    Overflow(&'static str),

    /// Malformed graph6 or pattern text.
    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    /// A structural precondition (such as saturation) does not hold for the given graph.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// A search found nothing to minimize over.
    #[error("empty search domain: {0}")]
    EmptyDomain(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn input<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Input(msg.into()))
}
