//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("malformed scalar token `{0}`")]
    ScalarParse(String),

    #[error("elements are bound to different algebras")]
    AlgebraMismatch,

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("basis-change matrix is singular")]
    SingularMap,

    #[error("unknown catalog algebra `{0}`")]
    UnknownAlgebra(String),

    #[error("invalid sector split r = {r} for dimension {dim}")]
    InvalidSplit { r: usize, dim: usize },

    #[error("algebra is not contractible with this split: {0} first-sector bracket(s) land in the second sector")]
    NotContractible(ViolatingTriples),

    #[error("generator subset does not span an ideal")]
    NotAnIdeal,

    #[error("generator index {0} out of range")]
    GeneratorIndex(usize),

    #[error("bilinear form is not a cocycle")]
    NotACocycle,

    #[error("linear system is inconsistent")]
    Inconsistent,

    #[error("invalid algebra definition: {0}")]
    InvalidAlgebra(String),
}

/// Index triples (i, j, k) with a first-sector pair (i, j) whose bracket has a
/// nonzero component on the second-sector generator k.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ViolatingTriples(pub Vec<(usize, usize, usize)>);

impl std::fmt::Display for ViolatingTriples {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0.len())
    }
}
