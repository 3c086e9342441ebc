use num_bigint::BigUint;
use thiserror::Error;

use crate::graph::{EdgeId, VertexId};

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// A rejected line of the edge-list input format. `line` is 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("{0}")]
    Malformed(String),
    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {vertex} out of range for n = {n}")]
    VertexRange { vertex: usize, n: usize },
    #[error("weight {0} outside [-2^31, 2^31]")]
    WeightRange(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("edge {edge} is a self-loop")]
    SelfLoop { edge: EdgeId },
    #[error("edge {edge} references vertex {vertex}, but the graph has {n} vertices")]
    VertexRange {
        edge: EdgeId,
        vertex: VertexId,
        n: usize,
    },
    #[error("graph must have at least one vertex")]
    Empty,
    #[error("graph is not connected")]
    Disconnected,
    #[error("not a spanning tree: {0}")]
    NotSpanningTree(String),
    #[error("edge {0} is a branch of the tree, not a chord")]
    ChordInTree(EdgeId),
    #[error("invalid exchange: {0}")]
    InvalidExchange(String),
    #[error("graph has {count} spanning trees, above the oracle limit of {limit}")]
    TooManyTrees { count: BigUint, limit: u64 },
}
