use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("second subspace is not contained in the first")]
    NotASubspace,
    #[error("malformed structure tensor: {0}")]
    Shape(String),
    #[error("unknown catalog algebra `{name}`; known: {known}")]
    UnknownAlgebra { name: String, known: String },
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("unsupported cochain degree {0}")]
    UnsupportedDegree(usize),
    #[error("expected a degree-{expected} cochain, got degree {got}")]
    Degree { expected: usize, got: usize },
    #[error("no value given for parameter `{0}`")]
    MissingParameter(String),
    #[error("ideal generator `{0}` is not a monomial")]
    NonMonomialGenerator(String),
    #[error("algebra is not a Lie algebra: {0}")]
    NotLie(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
