use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Every failure the library can report.
///
/// Construction errors mirror the ways a relation can fail to be a strict
/// partial order; the rest cover malformed arrangements, illegal moves and
/// resource caps.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("element label must be nonempty")]
    EmptyLabel,
    #[error("duplicate element {0:?}")]
    DuplicateElement(String),
    #[error("unknown element {0:?}")]
    UnknownElement(String),
    #[error("reflexive pair ({0:?}, {0:?}) in a strict order")]
    ReflexivePair(String),
    #[error("relation contains a cycle: {}", .0.join(" -> "))]
    CycleDetected(Vec<String>),

    #[error("arrangement mismatch: {0}")]
    ArrangementMismatch(String),
    #[error("swap at index {0} is not permissible")]
    NotPermissible(usize),
    #[error("swap index {index} out of range for {len} elements")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("{x:?} does not precede {y:?} in the arrangement")]
    OrderViolation { x: String, y: String },
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),

    #[error("exploration exceeded the node limit of {0}")]
    LimitExceeded(usize),
    #[error("labeled poset enumeration supports n <= 4, got {0}")]
    UnsupportedSize(usize),
    #[error("invalid generator spec: {0}")]
    InvalidSpec(String),

    #[error("schema error at {location}: {message}")]
    Schema { location: String, message: String },
    #[error("at {location}: {source}")]
    InDocument {
        location: String,
        #[source]
        source: Box<Error>,
    },
}

impl Error {
    /// The innermost error, with document locations peeled off.
    pub fn root(&self) -> &Error {
        match self {
            Error::InDocument { source, .. } => source.root(),
            other => other,
        }
    }
}
