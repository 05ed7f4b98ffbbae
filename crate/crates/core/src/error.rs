use std::path::PathBuf;

use thiserror::Error;

/// Errors raised by constructions, parsers and checked operations.
#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("field order {0} exceeds the supported maximum of 65536")]
    FieldTooLarge(u64),
    #[error("dimension {dim} out of range for PG({n},q)")]
    DimensionOutOfRange { n: usize, dim: usize },
    #[error("subspaces live in different ambient spaces")]
    AmbientMismatch,
    #[error("invalid Cayley table: {0}")]
    InvalidCayleyTable(String),
    #[error("unknown group element `{0}`")]
    UnknownElement(String),
    #[error("invalid specification: {0}")]
    InvalidSpec(String),
    #[error("malformed graph6 input: {0}")]
    MalformedGraph6(String),
    #[error("invalid configuration: {0}")]
    InvalidConfiguration(String),
    #[error("line graph parameters {line:?} differ from point graph parameters {point:?}")]
    TheoremViolation {
        point: (u64, u64, u64, u64),
        line: Option<(u64, u64, u64, u64)>,
    },
    #[error("parameters violate the strongly regular identity")]
    IdentityViolated,
    #[error("eigenvalue multiplicities are not integral")]
    NonIntegralMultiplicity,
    #[error("partial geometry point count is not integral")]
    NonIntegralPointCount,
    #[error("points {0}, {1}, {2} are collinear")]
    CollinearTriple(usize, usize, usize),
    #[error("plane order {0} is too small (need at least 5)")]
    OrderTooSmall(usize),
    #[error("not a projective plane: {0}")]
    NotProjectivePlane(String),
    #[error("graph is not a Moore graph of diameter two with k >= 3")]
    NotMooreGraph,
    #[error("set is not a deficient difference set")]
    NotDeficient,
    #[error("inconsistent parameters: {0}")]
    InconsistentParameters(String),
    #[error("file not found: {}", .0.display())]
    FileNotFound(PathBuf),
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
