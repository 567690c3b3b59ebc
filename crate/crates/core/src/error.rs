use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    /// A graph or edge-list document could not be parsed.
    #[error("{msg}, line {line}")]
    Parse { line: usize, msg: String },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// Vertex `a` (0-indexed) has no usable edge, so no semi-matching covers it.
    #[error("A vertex {0} has no neighbor")]
    IsolatedVertex(usize),

    #[error("invalid degree-minimizing path: {0}")]
    InvalidPath(String),

    #[error("size guard exceeded: {what} is {actual}, limit {limit}")]
    GuardExceeded {
        what: &'static str,
        actual: u128,
        limit: u128,
    },

    #[error("no candidate instance produced a complete semi-matching")]
    NoCompleteCandidate,

    #[error("stream is not in vertex-arrival order: edges of A vertex {0} are not contiguous")]
    StreamNotVertexArrival(usize),

    #[error("invalid edge partition: {0}")]
    InvalidPartition(String),

    #[error("receiver cannot match A vertex {0} with the skeleton and its own edges")]
    ReceiverInfeasible(usize),

    #[error("{path}: {msg}")]
    Spec { path: String, msg: String },

    #[error("cannot access {}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }

    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}
