use thiserror::Error;

/// Errors raised by graph construction, analysis and the cohesion solvers.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CohesionError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("line {line}: self-loop on node `{token}`")]
    SelfLoop { line: usize, token: String },

    #[error("node {node} out of range for a graph with {n} nodes")]
    NodeOutOfRange { node: usize, n: usize },

    #[error("self-loop on node {0}")]
    SelfLoopEdge(usize),

    #[error("graph is not connected")]
    Disconnected,

    #[error("complete graph has no vertex cut")]
    CompleteGraph,

    #[error("graph has no edges")]
    Edgeless,

    #[error("{what} requires at most {limit} nodes, got {n}")]
    TooLarge {
        what: &'static str,
        n: usize,
        limit: usize,
    },

    #[error("exact search refused: {n} nodes exceeds the exact cap of {cap}")]
    ExactCapExceeded { n: usize, cap: usize },

    #[error("invalid group structure: {0}")]
    InvalidStructure(String),

    #[error("graph is not in NDU2 (needs universal and non-universal nodes)")]
    NotNdu2,

    #[error("degenerate reduction instance: universal part would have {size} nodes")]
    DegenerateInstance { size: i64 },

    #[error("unsupported size {n}: expected {min}..={max}")]
    UnsupportedSize { n: usize, min: usize, max: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, CohesionError>;
