use thiserror::Error;

use crate::graph::VertexId;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("line {line}: loop edge at vertex {vertex}")]
    LoopEdge { line: usize, vertex: VertexId },

    #[error("line {line}: expected a vertex id, found `{token}`")]
    Parse { line: usize, token: String },

    #[error("graph has no vertices or no edges")]
    EmptyGraph,

    /// `a` and `b` lie in different components.
    #[error("graph is disconnected: no path between vertex {a} and vertex {b}")]
    Disconnected { a: VertexId, b: VertexId },

    #[error("vertex {vertex} out of range for a graph with {n} vertices")]
    VertexOutOfRange { vertex: VertexId, n: usize },

    #[error("edge id {edge} out of range for a graph with {m} edges")]
    EdgeOutOfRange { edge: usize, m: usize },

    #[error("expected {expected} labels, got {got}")]
    LabelCount { expected: usize, got: usize },

    #[error("invalid family: {0}")]
    InvalidFamily(String),

    #[error("no connected sample after {attempts} attempts")]
    RetryBudgetExhausted { attempts: usize },

    #[error("invalid graph expression `{expr}`: {reason}")]
    Expr { expr: String, reason: String },

    #[error("root {root} is not a vertex of a graph with {n} vertices")]
    InvalidRoot { root: VertexId, n: usize },

    #[error("{what}: graph has {n} vertices, cap is {cap}")]
    CapExceeded { what: &'static str, n: usize, cap: usize },

    #[error("more than {cap} minimum solutions")]
    EnumerationCapExceeded { cap: usize },

    #[error("no registered prediction for `{0}`")]
    NotInRegistry(String),
}
