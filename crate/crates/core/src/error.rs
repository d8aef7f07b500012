use thiserror::Error;

/// Errors raised by construction and by operations whose preconditions fail.
///
/// Mathematical verdicts (a predicate failing, a structure violating an
/// axiom) are never errors; they are reported through `CheckOutcome`.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Objects from different groups, carriers, rings or modules were combined.
    #[error("structural mismatch: {0}")]
    Structural(String),
    /// An operation was called outside its domain.
    #[error("precondition violated: {0}")]
    Precondition(String),
    /// The operation is defined only for finite carriers.
    #[error("unsupported in this mode: {0}")]
    Unsupported(String),
    /// Malformed input text, with a location when one is known.
    #[error("parse error{}: {message}", location.as_ref().map(|l| format!(" at {l}")).unwrap_or_default())]
    Parse { location: Option<String>, message: String },
    /// Well-formed input that describes an invalid structure.
    #[error("validation failed for {field}: {message}")]
    Validation { field: String, message: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn structural(msg: impl Into<String>) -> Error {
    Error::Structural(msg.into())
}

pub(crate) fn precondition(msg: impl Into<String>) -> Error {
    Error::Precondition(msg.into())
}
