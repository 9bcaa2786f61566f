use thiserror::Error;

use crate::graph6::Graph6Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph has {0} vertices; at most {max} are supported", max = crate::graph::MAX_VERTICES)]
    TooManyVertices(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error(transparent)]
    Graph6(#[from] Graph6Error),
    #[error("degree sequence is not graphic (failed at step {step})")]
    NonGraphic { step: usize },
    #[error("invalid degree sequence: {0}")]
    DegreeSequenceParse(String),
    #[error("{what} limited to {limit} vertices, got {n}")]
    LimitExceeded { what: &'static str, limit: usize, n: usize },
    #[error("operation requires a non-empty graph")]
    EmptyGraph,
    #[error("no vertex with the Havel-Hakimi property at step {step}")]
    NoHHVertex { step: usize },
    #[error("vertex {0} does not have MDI conditions")]
    NotMdi(usize),
    #[error("graph does not have a unique maximum independent set")]
    NoUniqueMis,
    #[error("invalid family member: {0}")]
    InvalidMember(String),
    #[error("inconsistent anchor: {0}")]
    InconsistentAnchor(String),
    #[error("cycle needs at least 3 vertices, got {0}")]
    CycleTooShort(usize),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("unknown check id `{0}`")]
    UnknownCheck(String),
    #[error("cannot read corpus {path}: {message}")]
    Corpus { path: String, message: String },
}
