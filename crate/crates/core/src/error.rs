use thiserror::Error;

use crate::graph::Edge;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph order {order} exceeds the vertex cap of {cap}")]
    VertexCap { order: usize, cap: usize },

    #[error("invalid edge ({0}, {1})")]
    InvalidEdge(usize, usize),

    #[error("edge ({}, {}) is not present", .0.0, .0.1)]
    MissingEdge(Edge),

    #[error("edge ({}, {}) is already present", .0.0, .0.1)]
    DuplicateEdge(Edge),

    #[error("invalid graph spec `{input}`: {reason}")]
    Spec { input: String, reason: String },

    #[error("malformed graph6 string: {0}")]
    Graph6(String),

    #[error("graph has no vertices")]
    EmptyGraph,

    #[error("graph is acyclic; the density parameter requires a cycle")]
    Acyclic,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("invalid search bounds: {0}")]
    Bounds(String),

    #[error("invalid experiment configuration: {0}")]
    Config(String),

    #[error("self-consistency failure: {0}")]
    SelfConsistency(String),
}
