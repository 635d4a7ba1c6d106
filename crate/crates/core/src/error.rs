use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("edge {index}: self-loop on node {node}")]
    SelfLoop { index: usize, node: usize },

    #[error("edge {index}: duplicate of edge {first} between nodes {u} and {v}")]
    DuplicateEdge {
        index: usize,
        first: usize,
        u: usize,
        v: usize,
    },

    #[error("edge {index}: node {node} out of range for {node_count} nodes")]
    NodeOutOfRange {
        index: usize,
        node: usize,
        node_count: usize,
    },

    #[error("edge {index}: weight {weight} must be positive and finite")]
    InvalidWeight { index: usize, weight: f64 },

    #[error("graph must have at least one node")]
    NoNodes,

    #[error("empty graph: {0}")]
    EmptyGraph(&'static str),

    #[error("length mismatch: expected {expected}, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },

    #[error("dimension mismatch: {0}x{0} vs {1}x{1}")]
    DimensionMismatch(usize, usize),

    #[error("not a density matrix: {0}")]
    NotDensity(String),

    #[error("edge selection entry {index} = {value} outside [0, 1]")]
    InvalidSelection { index: usize, value: f64 },

    #[error("gradient requires strictly interior weights, entry {index} = {value}")]
    BoundarySelection { index: usize, value: f64 },

    #[error("symmetric eigensolver did not converge for a {0}x{0} matrix")]
    EigenSolver(usize),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("graph is disconnected: {0}")]
    Disconnected(String),

    #[error("optimization diverged at iteration {iteration}: {detail}")]
    NonFinite { iteration: usize, detail: String },

    #[error("{path}:{line}: {message}")]
    Parse {
        path: String,
        line: usize,
        message: String,
    },

    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
