use thiserror::Error;

/// Errors surfaced by every module of the crate.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("graph6: {message} at byte {offset}")]
    Graph6 { offset: usize, message: String },

    #[error("graph must have at least one vertex")]
    EmptyGraph,

    #[error("vertex {vertex} out of range for a graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("loop at vertex {0}: simple graphs only")]
    Loop(usize),

    #[error("graph of order {order} exceeds the search limit of {limit} vertices")]
    OrderTooLarge { order: usize, limit: usize },

    #[error("invalid family parameters: {0}")]
    InvalidFamily(String),

    #[error("partition size {n} outside the supported range 1..={limit}")]
    PartitionSize { n: usize, limit: usize },

    #[error("partition does not cover the {0} vertices of the pattern")]
    PartitionMismatch(usize),

    #[error("trace exponent {k} outside 0..={max}")]
    ExponentOutOfRange { k: usize, max: usize },

    #[error("integer overflow while computing {0}")]
    Overflow(&'static str),

    #[error("graph is not {d}-regular")]
    NotRegular { d: u32 },

    #[error("pattern is disconnected")]
    Disconnected,

    #[error("pattern is a tree")]
    Tree,

    #[error("pattern has {0} independent cycles, expected at most one")]
    Multicyclic(usize),

    #[error("pattern is bipartite: no odd cycle to anchor a non-bipartite bound")]
    NoOddCycle,

    #[error("pattern is not bipartite")]
    NotBipartite,

    #[error("polynomial has an odd λ-exponent {0}, even transform requires even exponents")]
    OddExponent(u32),

    #[error("degree must be at least 2, got {0}")]
    DegreeTooSmall(u32),

    #[error("polynomial is identically zero")]
    ZeroPolynomial,

    #[error("empty interval [{lo}, {hi}]")]
    EmptyInterval { lo: String, hi: String },

    #[error("walk length {0} must be odd")]
    EvenWalkLength(usize),

    #[error("{0}")]
    Invalid(String),

    #[error("certificate rejected: negative gap {gap} at {graph6}")]
    CertificateRejected { graph6: String, gap: String },

    #[error("json: {0}")]
    Json(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}
