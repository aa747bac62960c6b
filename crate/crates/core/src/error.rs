use thiserror::Error;

use crate::graph::{EdgeId, Vertex};

/// Errors raised across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("loop edge at vertex {0}")]
    LoopEdge(Vertex),
    #[error("endpoint {vertex} out of range for a graph of order {n}")]
    VertexOutOfRange { vertex: Vertex, n: usize },
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("random regular generation failed after {0} attempts")]
    GenerationFailed(usize),
    #[error("graph is not regular")]
    NotRegular,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("vertex {0} has odd degree")]
    OddDegree(Vertex),
    #[error("component is not connected")]
    Disconnected,
    #[error("factor degree {h} out of range 0..={max}")]
    DegreeOutOfRange { h: usize, max: usize },
    #[error("modulus must be positive")]
    ZeroModulus,
    #[error("edge {0} carries a zero label")]
    ZeroLabel(EdgeId),
    #[error("edge {0} has no label")]
    MissingLabel(EdgeId),
    #[error("label {label} on edge {edge} is outside 1..{k}")]
    LabelOutOfRange { edge: EdgeId, label: i64, k: u64 },
    #[error("labeling covers {found} edges but the graph has {expected}")]
    LabelCountMismatch { expected: usize, found: usize },
    #[error("labeling is not magic")]
    NotMagic,
    #[error("edge {0} folds to an odd pair sum")]
    OddPairSum(EdgeId),
    #[error("magic sum mismatch: expected {expected}, found {found}")]
    SumMismatch { expected: i64, found: i64 },
    #[error("solver budget exceeded after {nodes} nodes")]
    BudgetExceeded { nodes: u64 },
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("json error: {0}")]
    Json(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}
