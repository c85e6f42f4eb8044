use num_bigint::BigInt;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("unknown Cartan label component `{0}`")]
    UnknownLabel(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("not a root of the system: {0:?}")]
    NotARoot(Vec<i64>),

    #[error("node {node} is out of range for a rank {rank} root system")]
    NodeOutOfRange { node: usize, rank: usize },

    #[error("Cartan matrix is not of finite type: {0}")]
    NotFiniteType(String),

    #[error("{0} is not a minimal coset representative for the parabolic")]
    NotMinimal(String),

    #[error("codimensions add up to {got}, expected dim G/P = {expected}")]
    CodimensionMismatch { expected: usize, got: usize },

    #[error("simple root index {0} belongs to the Levi of the parabolic")]
    IndexInLevi(usize),

    #[error("({j}, {v}) is not a cover of w_{j} by a simple root")]
    NotSimpleCover { j: usize, v: String },

    #[error("({j}, {v}) is a simple cover; use the basic divisor class instead")]
    SimpleCover { j: usize, v: String },

    #[error("({j}, {v}) is not a codimension one cover of w_{j}")]
    NotACover { j: usize, v: String },

    #[error("entry {j} is not of degree 0: its value at x_{k} is {value}")]
    NotDegreeZero { j: usize, k: usize, value: String },

    #[error("point does not lie on the face: {0}")]
    NotOnFace(String),

    #[error("face data invalid: {0}")]
    InvalidFace(String),

    #[error("tuple has {got} entries, expected {expected}")]
    ArityMismatch { expected: usize, got: usize },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("cone is not pointed; lineality direction {0:?}")]
    NotPointed(Vec<BigInt>),

    #[error("vector violates constraint {row}")]
    ViolatesConstraint { row: usize },

    #[error("internal inconsistency: {0}")]
    Inconsistent(String),

    #[error("resource bound exceeded: {0}")]
    ResourceLimit(String),

    #[error("integer overflow in {0}")]
    Overflow(&'static str),

    #[error("cache: {0}")]
    Cache(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Errors caused by malformed input text rather than by mathematics.
    pub fn is_parse(&self) -> bool {
        matches!(
            self,
            Error::UnknownLabel(_) | Error::Parse(_) | Error::Json(_) | Error::NodeOutOfRange { .. }
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
