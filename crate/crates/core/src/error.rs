use thiserror::Error;

/// Errors raised by the library outside of text parsing.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("invalid metric: {0}")]
    InvalidMetric(String),
    #[error("vertex {0} is not in the graph")]
    UnknownVertex(usize),
    #[error("edge {0} is not in the graph")]
    UnknownEdge(usize),
    #[error("invalid cutset: {0}")]
    InvalidCutset(String),
    #[error("not a cutset: removing it leaves the graph connected")]
    NotACutset,
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("graph is not cubic (connected, bipartite and trivalent): {0}")]
    NotCubic(String),
    #[error("point {0} lies in the cutset")]
    PointInCutset(String),
    #[error("group elements were not enumerated (order exceeds the budget)")]
    NotEnumerated,
    #[error("family member {index} is not a *-separated cutset: {reason}")]
    NotStarCutset { index: usize, reason: String },
    #[error("invalid search task: {0}")]
    InvalidTask(String),
    #[error("invalid gluing structure: {0}")]
    InvalidStructure(String),
    #[error("missing weight for pair {0}")]
    MissingWeight(String),
    #[error("invalid complex: {0}")]
    InvalidComplex(String),
    #[error("invalid seed: {0}")]
    InvalidSeed(String),
    #[error("point {0} lies on the hypergraph")]
    PointOnHypergraph(String),
    #[error("{0}")]
    Io(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// A text-format error tied to a 1-based line number.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    #[error("malformed line: {0}")]
    Malformed(String),
    #[error("self-loop at vertex {0}")]
    SelfLoop(u64),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(u64, u64),
    #[error("vertex {0} outside 1..={1}")]
    VertexOutOfRange(u64, usize),
    #[error("bad length: {0}")]
    BadLength(String),
    #[error("header declares {declared} edges but {found} were listed")]
    EdgeCount { declared: usize, found: usize },
}

impl ParseError {
    pub(crate) fn new(line: usize, kind: ParseErrorKind) -> Self {
        ParseError { line, kind }
    }
}
