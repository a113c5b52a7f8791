use thiserror::Error;

use crate::hypergraph::Vertex;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid hypergraph: {0}")]
    InvalidHypergraph(String),

    #[error("vertex {0} is not in the hypergraph")]
    UnknownVertex(Vertex),

    #[error("operation requires {expected}, got d = {actual}")]
    Uniformity { expected: &'static str, actual: usize },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("search guard exceeded: {0}")]
    TooLarge(String),

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("internal inconsistency: {0}")]
    Internal(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
