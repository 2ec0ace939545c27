use thiserror::Error;

/// Errors produced by the graph, polynomial and domination engines.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {order} vertices")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("graph order {0} exceeds the 64-vertex limit")]
    OrderOverflow(usize),
    #[error("graph6: {0}")]
    Graph6(String),
    #[error("edge list: {0}")]
    EdgeList(String),
    #[error("invalid family parameters: {0}")]
    InvalidFamily(String),
    #[error("operation requires a nonempty graph")]
    EmptyGraph,
    #[error("zero polynomial has no shape")]
    ZeroPolynomial,
    #[error("graph order {order} exceeds enumeration cap {cap}")]
    CapExceeded { order: usize, cap: usize },
    #[error("recurrence needs at least three base polynomials, got {0}")]
    RecurrenceBase(usize),
    #[error("({0}, {1}, {2}) is not a simple 3-path")]
    NotSimple3Path(usize, usize, usize),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("index {k} is below n/2 for n = {n}")]
    IndexBelowHalf { k: usize, n: usize },
    #[error("graph has no universal vertex")]
    NoUniversalVertex,
    #[error("need at least {need} entries, got {got}")]
    TooFewEntries { need: usize, got: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("proven property violated: {0}")]
    InvariantViolation(String),
}

pub type Result<T> = std::result::Result<T, Error>;
