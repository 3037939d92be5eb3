use thiserror::Error;

/// Errors raised by construction, parsing, and precondition checks.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("digraph must have at least one vertex")]
    Empty,
    #[error("loop at vertex {0}: edge ({0},{0})")]
    Loop(usize),
    #[error("duplicate edge ({0},{1})")]
    DuplicateEdge(usize, usize),
    #[error("edge ({u},{v}) out of range for n={n}")]
    OutOfRange { u: usize, v: usize, n: usize },
    #[error("not strongly connected: no path from {0} to {1}")]
    NotStronglyConnected(usize, usize),
    #[error("not regular: vertex {vertex} has out-degree {out_degree} and in-degree {in_degree}")]
    NotRegular {
        vertex: usize,
        out_degree: usize,
        in_degree: usize,
    },
    #[error("girth is undefined for a single vertex")]
    GirthUndefined,
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("consistency check failed: {0}")]
    Consistency(String),
    #[error("integer overflow while counting walks of length {0}")]
    Overflow(usize),
    #[error("no vertex cut exists: digraph is complete")]
    Complete,
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
}

pub type Result<T> = std::result::Result<T, GraphError>;
