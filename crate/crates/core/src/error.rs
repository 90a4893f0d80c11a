use thiserror::Error;

use crate::search::SearchKind;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} is outside the vertex universe of size {n}")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("vertex universes differ: graph has {graph} vertices, tree has {tree}")]
    UniverseMismatch { graph: usize, tree: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),

    #[error("graph is not connected")]
    Disconnected,

    #[error("edge set is not a spanning tree of the graph")]
    NotSpanningTree,

    #[error("vertex set must be non-empty")]
    EmptyVertexSet,

    #[error("ordering is not a permutation of the vertex set")]
    NotPermutation,

    #[error("ordering is not a connected search order: vertex {0} has no earlier neighbor")]
    InvalidOrder(usize),

    #[error("all vertices are already visited")]
    Exhausted,

    #[error("graph is not a split graph")]
    NotSplit,

    #[error("search kind {0} is not supported here")]
    UnsupportedKind(SearchKind),

    #[error("malformed clause {index}: {reason}")]
    MalformedClause { index: usize, reason: String },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
