use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    /// Syntax error while parsing a ring spec, element, or descriptor.
    /// `pos` is the byte offset into the offending string.
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    /// A structural requirement on the input data was violated.
    #[error("invalid input: {0}")]
    Invalid(String),

    /// An enumeration was requested on a ring larger than the configured bound.
    #[error("ring of size {size} exceeds the bound {bound} for this operation")]
    SizeBound { size: usize, bound: usize },

    /// A build-time consistency check failed. For unit-orbit theories this
    /// signals a construction bug, so it is an error rather than a report.
    #[error("axiom check failed: {0}")]
    AxiomViolation(String),

    /// Two exact evaluation routes disagreed. Never silently accepted.
    #[error("formula mismatch: {0}")]
    FormulaMismatch(String),

    /// The supplied eigenvalue vector is not the spectrum of any admissible
    /// connection set.
    #[error("not a reconstructible spectrum: {0}")]
    NotASpectrum(String),

    #[error("unknown verification suite `{0}`")]
    UnknownSuite(String),

    #[error("config error: {0}")]
    Config(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::Invalid(msg.into())
    }

    pub fn syntax(pos: usize, msg: impl Into<String>) -> Self {
        Error::Syntax { pos, msg: msg.into() }
    }
}
