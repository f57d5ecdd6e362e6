use std::fmt;

/// Which input assumption a graph violated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
pub enum ValidationKind {
    NotConnected,
    NonConsecutiveIds,
    SelfLoop,
    DuplicateEdge,
    Empty,
}

impl fmt::Display for ValidationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            ValidationKind::NotConnected => "NotConnected",
            ValidationKind::NonConsecutiveIds => "NonConsecutiveIds",
            ValidationKind::SelfLoop => "SelfLoop",
            ValidationKind::DuplicateEdge => "DuplicateEdge",
            ValidationKind::Empty => "Empty",
        };
        f.write_str(name)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{kind}: {detail}")]
pub struct ValidationError {
    pub kind: ValidationKind,
    pub detail: String,
}

impl ValidationError {
    pub fn new(kind: ValidationKind, detail: impl Into<String>) -> Self {
        ValidationError {
            kind,
            detail: detail.into(),
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid input graph: {0}")]
    Validation(#[from] ValidationError),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid argument: {0}")]
    Argument(String),

    #[error("{method} sampling stopped by {guard}: {detail}")]
    Sampling {
        method: String,
        guard: &'static str,
        detail: String,
    },

    #[error("graph generation failed: {0}")]
    Generation(String),

    #[error("degenerate statistic: {0}")]
    DegenerateStatistic(String),

    #[error("estimation failed: {0}")]
    Harness(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub fn argument(msg: impl Into<String>) -> Self {
        Error::Argument(msg.into())
    }

    /// The validation kind, if this is a validation failure.
    pub fn validation_kind(&self) -> Option<ValidationKind> {
        match self {
            Error::Validation(v) => Some(v.kind),
            _ => None,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
