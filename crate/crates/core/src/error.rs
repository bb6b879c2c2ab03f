use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("matrix is singular")]
    Singular,

    #[error("grading mismatch: expected {expected}, found {found}")]
    Grading { expected: i64, found: i64 },

    #[error("sublattice is not contained in the superlattice: {0}")]
    Containment(String),

    #[error("point outside the translated lattice: {0}")]
    SaturationDomain(String),

    #[error("point set is empty")]
    EmptyPointSet,

    /// The input roots contain a cycle of K_n, listed as 1-based oriented edges.
    #[error("roots are linearly dependent (cycle {cycle:?})")]
    Independence { cycle: Vec<(usize, usize)> },

    #[error("first {k} columns do not have full rank; no bases")]
    NoBases { k: usize },

    #[error("invalid input: {0}")]
    Invalid(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
