use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("graph6: {0}")]
    Graph6(String),

    #[error("graph must be connected")]
    Disconnected,

    #[error("{0}")]
    OutOfRange(String),

    #[error("terminal set too large: {size} > {max}")]
    TerminalSetTooLarge { size: usize, max: usize },

    #[error("graph is not a block graph")]
    NotBlockGraph,

    #[error("factor graph is not modular")]
    NotModular,

    /// A closed form or internal identity failed; always a bug.
    #[error("internal error: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn range(msg: impl Into<String>) -> Self {
        Error::OutOfRange(msg.into())
    }

    pub fn is_parse(&self) -> bool {
        matches!(self, Error::Parse { .. } | Error::Graph6(_))
    }
}
