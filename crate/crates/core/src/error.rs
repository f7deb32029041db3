use thiserror::Error;

/// Errors produced while parsing, generating, or validating graphs and
/// while running the isomorphism pipeline.
#[derive(Debug, Error)]
pub enum Error {
    #[error("malformed line {line}: {reason}")]
    MalformedLine { line: usize, reason: String },

    #[error("loop edge ({0}, {0}) is not allowed")]
    LoopEdge(usize),

    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),

    #[error("vertex index {index} out of range for n = {n}")]
    VertexOutOfRange { index: usize, n: usize },

    #[error("invalid graph6 data: {0}")]
    Graph6(String),

    #[error("graph is disconnected; the method is defined only for connected graphs")]
    Disconnected,

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("infeasible generator parameters: {0}")]
    InfeasibleGenerator(String),

    #[error("unknown named graph: {0}")]
    UnknownName(String),

    #[error("graph size {n} exceeds the brute-force oracle limit {limit}")]
    OracleLimitExceeded { n: usize, limit: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
