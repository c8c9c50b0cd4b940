use std::fmt;

/// Errors produced by the library.
///
/// Size guards use [`Error::Capability`] so that callers can distinguish
/// "this input is malformed" from "this input is too large for the exact
/// solver behind this operation".
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// The input violates a documented precondition.
    InvalidInput(String),
    /// A text file does not parse under the declared format.
    Parse(String),
    /// An exact solver was asked to exceed its size guard.
    Capability {
        operation: &'static str,
        limit: usize,
        actual: usize,
    },
    /// A hitting-set family contains an empty member set, so no
    /// transversal exists.
    InfeasibleFamily,
    /// An internal invariant was violated; this signals a bug.
    Internal(String),
    /// An authorized set failed to reconstruct the key during an audit.
    AuditFailed { set_id: String },
}

pub type Result<T> = std::result::Result<T, Error>;

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidInput(msg) => write!(f, "invalid input: {msg}"),
            Error::Parse(msg) => write!(f, "parse error: {msg}"),
            Error::Capability {
                operation,
                limit,
                actual,
            } => write!(
                f,
                "{operation}: input size {actual} exceeds the exact-solver limit {limit}"
            ),
            Error::InfeasibleFamily => {
                write!(f, "set family contains an empty member set; no transversal exists")
            }
            Error::Internal(msg) => write!(f, "internal invariant violated: {msg}"),
            Error::AuditFailed { set_id } => {
                write!(f, "audit failure: authorized set {set_id} does not reconstruct the key")
            }
        }
    }
}

impl std::error::Error for Error {}

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    pub fn parse(msg: impl Into<String>) -> Self {
        Error::Parse(msg.into())
    }

    pub fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }
}
