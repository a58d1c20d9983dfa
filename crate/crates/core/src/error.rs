use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("color {color} outside 1..={max}")]
    ColorOutOfRange { color: u32, max: u16 },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("invalid color mask: {0}")]
    InvalidMask(String),

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("invalid pattern `{name}`: {msg}")]
    InvalidPattern { name: String, msg: String },

    #[error("pattern has {pattern} vertices but host has only {host}")]
    PatternTooLarge { pattern: usize, host: usize },

    #[error("precondition violated: {0}")]
    Precondition(String),

    /// A construction or extraction that is guaranteed to succeed could not
    /// certify its result. Reaching this is a bug.
    #[error("certification failure: {0}")]
    Certification(String),

    #[error("no claim matches `{0}`")]
    UnknownClaim(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn param(msg: impl Into<String>) -> Self {
        Error::InvalidParameter(msg.into())
    }

    pub(crate) fn pre(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }
}
