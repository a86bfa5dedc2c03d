use thiserror::Error;

/// Which tree-decomposition property failed validation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DecompositionFault {
    NotATree,
    VertexUncovered(String),
    EdgeUncovered(String, String),
    Disconnected(String),
    UnknownBagVertex(String),
    NotNice(String),
    Malformed(String),
}

impl std::fmt::Display for DecompositionFault {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            DecompositionFault::NotATree => write!(f, "decomposition tree is not a tree"),
            DecompositionFault::VertexUncovered(v) => write!(f, "vertex {v} is in no bag"),
            DecompositionFault::EdgeUncovered(u, v) => write!(f, "edge {u}-{v} is in no bag"),
            DecompositionFault::Disconnected(v) => {
                write!(f, "bags containing {v} do not form a subtree")
            }
            DecompositionFault::UnknownBagVertex(v) => write!(f, "bag mentions unknown vertex {v}"),
            DecompositionFault::NotNice(msg) => write!(f, "not a nice decomposition: {msg}"),
            DecompositionFault::Malformed(msg) => write!(f, "malformed decomposition file: {msg}"),
        }
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: malformed line {content:?}")]
    MalformedLine { line: usize, content: String },
    #[error("duplicate edge {u}-{v}")]
    DuplicateEdge { u: String, v: String },
    #[error("self-loop at {0}")]
    SelfLoop(String),
    #[error("unknown vertex {0}")]
    UnknownVertex(String),
    #[error("vertex set is empty")]
    EmptySet,
    #[error("maximum degree {0} exceeds 3")]
    DegreeTooHigh(usize),
    #[error("underlying graph is not complete")]
    NotComplete,
    #[error("graph is not weakly balanced")]
    NotClusterable,
    #[error("graph has no negative edges")]
    NoNegativeEdges,
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("internal verification failed: {0}")]
    InternalVerificationFailed(String),
    #[error("invalid decomposition: {0}")]
    InvalidDecomposition(DecompositionFault),
    #[error("malformed formula: {0}")]
    MalformedFormula(String),
    #[error("assignment leaves clause {0} all-equal")]
    NotAnNaeAssignment(usize),
    #[error("a single part yields no negative edges")]
    SinglePartAllPositive,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
