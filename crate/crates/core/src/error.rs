use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("edge {edge:?} has {found} vertices, expected {expected}")]
    Arity { edge: Vec<usize>, expected: usize, found: usize },
    #[error("vertex {vertex} is out of range for a hypergraph on {n} vertices")]
    VertexRange { vertex: usize, n: usize },
    #[error("edge {edge:?} repeats a vertex")]
    DuplicateVertexInEdge { edge: Vec<usize> },
    #[error("at most {max} vertices are supported, got {n}", max = crate::MAX_VERTICES)]
    TooManyVertices { n: usize },
    #[error("uniformity must be between 1 and {max}, got {r}", max = crate::MAX_VERTICES)]
    BadUniformity { r: usize },
    #[error("operation needs uniformity at least 2, got {r}")]
    UniformityTooLow { r: usize },
    #[error("target uniformity {target} must satisfy 1 <= target < {r}")]
    BadTarget { target: usize, r: usize },
    #[error("vertex set of size {size} is not smaller than the uniformity {r}")]
    SetTooLarge { size: usize, r: usize },
    #[error("canonical form limited to {bound} vertices, got {n}")]
    TooLarge { n: usize, bound: usize },
    #[error("uniformity mismatch: host is {host}-uniform, pattern is {pattern}-uniform")]
    UniformityMismatch { host: usize, pattern: usize },
    #[error("a graph needs uniformity 2, got {r}")]
    NotAGraph { r: usize },
    #[error("{colors} colours requested but the chromatic number is {chromatic}")]
    TooFewColors { colors: usize, chromatic: usize },
    #[error("graph has no edges")]
    NoEdges,
    #[error("number of parts {k} is smaller than the uniformity {r}")]
    KTooSmall { k: usize, r: usize },
    #[error("distinguished part size {m} infeasible for n = {n}, k = {k}")]
    BadM { m: usize, n: usize, k: usize },
    #[error("invalid parameters: {0}")]
    BadParameters(String),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("forbidden pattern has no edges")]
    EmptyPattern,
    #[error("seed hypergraph contains a forbidden pattern")]
    SeedNotFree,
    #[error("search budget exhausted before completion (best so far {best})")]
    BudgetExceeded { best: u64 },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}
