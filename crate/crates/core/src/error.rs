use thiserror::Error;

use crate::embedding::GenusResult;
use crate::graph::Edge;

/// Errors produced anywhere in the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("self-loop on vertex {0}")]
    InvalidEdge(usize),
    #[error("vertex index {index} out of range for a graph on {n} vertices")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("size limit exceeded: {0}")]
    SizeLimit(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid family parameters: {0}")]
    InvalidFamily(String),
    #[error("edge {0} not present in graph")]
    EdgeNotFound(Edge),
    #[error("graph has no edges")]
    NoEdges,
    #[error("invalid rotation system: {0}")]
    InvalidRotation(String),
    #[error("operation requires a connected graph")]
    RequiresConnected,
    #[error("trace budget of {budget} exhausted (best genus so far: {})", .best.as_ref().map_or("none".to_string(), |b| b.genus.to_string()))]
    BudgetExceeded {
        budget: u64,
        best: Option<Box<GenusResult>>,
    },
    #[error("no edge set of size <= {cap} raises the domination number")]
    CapTooSmall { cap: usize },
    #[error("embedding lies on {actual}, expected {expected}")]
    SurfaceMismatch { expected: String, actual: String },
    #[error("minimum-degree threshold must be at least 3, got {0}")]
    InvalidThreshold(u64),
    #[error("genus {genus} is outside the regime of {what}")]
    OutOfRegime { what: &'static str, genus: u64 },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
