use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} is out of range 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("invalid edge {{{0}, {1}}}")]
    InvalidEdge(usize, usize),

    #[error("duplicate vertex {0}")]
    DuplicateVertex(usize),

    #[error("graph is disconnected")]
    Disconnected,

    #[error("{what} is limited to {limit}, got {actual}")]
    CapExceeded {
        what: &'static str,
        limit: usize,
        actual: usize,
    },

    #[error("invalid chain: {0}")]
    InvalidChain(String),

    #[error("invalid family parameters: {0}")]
    InvalidFamily(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("{0} is not a prime below 2^31")]
    NotPrime(u64),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("internal consistency failure: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn cap(what: &'static str, limit: usize, actual: usize) -> Self {
        Error::CapExceeded {
            what,
            limit,
            actual,
        }
    }
}
