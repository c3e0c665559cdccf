use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("invalid rational {0:?}")]
    InvalidRational(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("trivial cone: every generator is zero")]
    TrivialCone,

    #[error("not pointed: the cone contains a line")]
    NotPointed,

    /// Malformed input file or argument; `context` names the offending field.
    #[error("{context}: {message}")]
    Parse { context: String, message: String },

    #[error("vertex enumeration would visit {bases} bases (limit {limit}); shrink the instance")]
    LimitExceeded { bases: u128, limit: u128 },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("invalid certificate: {0}")]
    InvalidCertificate(String),

    #[error("unknown fixture {0:?}")]
    UnknownFixture(String),

    /// An internal consistency check that a proven statement guarantees failed.
    #[error("invariant violated: {0}")]
    Invariant(String),
}

impl Error {
    pub(crate) fn dims(msg: impl Into<String>) -> Self {
        Error::DimensionMismatch(msg.into())
    }

    pub(crate) fn parse(context: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Parse {
            context: context.into(),
            message: message.into(),
        }
    }
}
