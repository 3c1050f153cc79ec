use thiserror::Error;

use crate::qsym::Basis;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed composition {0:?}: expected comma-separated positive integers")]
    ParseComposition(String),

    #[error("composition parts must be positive")]
    ZeroPart,

    #[error("invalid descent set {members:?} for n = {n}")]
    InvalidSubset { n: usize, members: Vec<usize> },

    #[error("invalid tableau: {0}")]
    InvalidTableau(String),

    #[error("generator index {i} out of range 1..={max} for n = {n}", max = n.saturating_sub(1))]
    GeneratorOutOfRange { i: usize, n: usize },

    #[error("tableau is not standard extended")]
    NotStandardExtended,

    #[error("tableau shapes differ: {left} vs {right}")]
    ShapeMismatch { left: String, right: String },

    #[error("expected an element in the {expected} basis, found {found}")]
    BasisMismatch { expected: Basis, found: Basis },

    #[error("composition {composition} has weight {found}, expected degree {expected}")]
    DegreeMismatch {
        composition: String,
        expected: usize,
        found: usize,
    },

    #[error("{0} is not a partition")]
    NotAPartition(String),

    #[error("degree must be at least 1, got {0}")]
    InvalidDegree(usize),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
