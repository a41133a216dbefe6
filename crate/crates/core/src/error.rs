use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Every failure the library can report. [`Error::code`] gives a stable,
/// machine-readable name for each variant.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("edge `{edge}` references unknown vertex `{vertex}`")]
    DanglingEndpoint { edge: String, vertex: String },
    #[error("duplicate {kind} id `{id}`")]
    DuplicateId { kind: &'static str, id: String },
    #[error("edge `{0}` is a self-loop and cannot be contracted")]
    SelfLoopContraction(String),
    #[error("graph is not connected")]
    Disconnected,
    #[error("unknown edge `{0}`")]
    UnknownEdge(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("malformed sector: {0}")]
    MalformedSector(String),
    #[error("{edges} edges exceed the enumeration guard of {guard}")]
    EnumerationGuardExceeded { edges: usize, guard: usize },
    #[error("edge set is not a spanning tree: {0}")]
    NotASpanningTree(String),
    #[error("invalid partition: {0}")]
    BadPartition(String),
    #[error("vertex `{0}` appears in more than one block")]
    DuplicateVertex(String),
    #[error("vertex `{0}` is missing from the partition")]
    MissingVertex(String),
    #[error("partition contains an empty block")]
    EmptyBlock,
    #[error("partition is trivial (a single block)")]
    TrivialPartition,
    #[error("edge `{0}` is not trans-block for the current partition")]
    NotTransBlock(String),
    #[error("ordering is not admissible: edge at step {step} is not trans-block")]
    NotAdmissible { step: usize },
    #[error("expected {expected} interpolation parameters, got {got}")]
    BadDimension { expected: usize, got: usize },
    #[error("interpolation parameter {index} = {value} lies outside [0, 1]")]
    OutOfRange { index: usize, value: f64 },
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    pub fn code(&self) -> &'static str {
        match self {
            Error::DanglingEndpoint { .. } => "DanglingEndpoint",
            Error::DuplicateId { .. } => "DuplicateId",
            Error::SelfLoopContraction(_) => "SelfLoopContraction",
            Error::Disconnected => "Disconnected",
            Error::UnknownEdge(_) => "UnknownEdge",
            Error::UnknownVertex(_) => "UnknownVertex",
            Error::MalformedSector(_) => "MalformedSector",
            Error::EnumerationGuardExceeded { .. } => "EnumerationGuardExceeded",
            Error::NotASpanningTree(_) => "NotASpanningTree",
            Error::BadPartition(_) => "BadPartition",
            Error::DuplicateVertex(_) => "DuplicateVertex",
            Error::MissingVertex(_) => "MissingVertex",
            Error::EmptyBlock => "EmptyBlock",
            Error::TrivialPartition => "TrivialPartition",
            Error::NotTransBlock(_) => "NotTransBlock",
            Error::NotAdmissible { .. } => "NotAdmissible",
            Error::BadDimension { .. } => "BadDimension",
            Error::OutOfRange { .. } => "OutOfRange",
            Error::NotSymmetric => "NotSymmetric",
            Error::Parse(_) => "ParseError",
            Error::Io(_) => "IoError",
        }
    }
}
