use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range for order {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("conflicting gains for pair ({0}, {1})")]
    ConflictingGains(usize, usize),
    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("matrix is not Hermitian at ({0}, {1})")]
    NotHermitian(usize, usize),
    #[error("characteristic polynomial coefficient {index} is not a rational integer: {value}")]
    NonIntegerCoefficient { index: usize, value: String },
    #[error("the zero polynomial has no root census")]
    ZeroPolynomial,
    #[error("consecutive cycle vertices {0} and {1} are not adjacent")]
    NotAdjacent(usize, usize),
    #[error("invalid cycle: {0}")]
    InvalidCycle(String),
    #[error("edge set is not a spanning forest: {0}")]
    NotSpanningForest(String),
    #[error("order {n} exceeds the limit {limit} for {what}")]
    SizeLimit { what: &'static str, n: usize, limit: usize },
    #[error("invalid parameters for {name}: {reason}")]
    InvalidParameters { name: String, reason: String },
    #[error("unknown constructor '{0}'")]
    UnknownConstructor(String),
    #[error("parse error on line {line}: {reason}")]
    Parse { line: usize, reason: String },
    #[error("disconnected input")]
    Disconnected,
    #[error("wrong underlying shape: {0}")]
    WrongShape(String),
    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
    #[error("scope exceeded: {0}")]
    Scope(String),
}

pub type Result<T> = std::result::Result<T, Error>;
