use thiserror::Error;

/// Errors raised by graph construction, coloring operations and the solvers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {0} out of range")]
    UnknownVertex(usize),
    #[error("negative loop at vertex {0}")]
    NegativeLoop(usize),
    #[error("parallel edge {0}-{1}")]
    ParallelEdge(usize, usize),
    #[error("no edge {0}-{1}")]
    NoSuchEdge(usize, usize),
    #[error("edge {0}-{1} is not positive")]
    EdgeNotPositive(usize, usize),
    #[error("contracting {0}-{1} would create a negative digon")]
    NegativeDigon(usize, usize),
    #[error("underlying graphs differ")]
    UnderlyingMismatch,
    #[error("invalid parameter: {0}")]
    InvalidParam(String),
    #[error("invalid color set: {0}")]
    InvalidColorSet(String),
    #[error("demand {demand} at vertex {vertex} exceeds the {available} available colors")]
    DemandExceeded {
        vertex: usize,
        demand: usize,
        available: usize,
    },
    #[error("invalid coloring: {0}")]
    InvalidColoring(String),
    #[error("graph is not subcubic (vertex {0} has degree {1})")]
    NotSubcubic(usize, usize),
    #[error("bad block: {0}")]
    BadBlock(String),
    #[error("vertex cap exceeded: {n} > {cap}")]
    CapExceeded { n: usize, cap: usize },
    #[error("certificate does not match the graph: {0}")]
    BadCertificate(String),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}
