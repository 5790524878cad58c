use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("bracket index out of range: ({i}, {j}) for an algebra of dimension {dim}")]
    IndexOutOfRange { i: usize, j: usize, dim: usize },

    #[error("Jacobi identity fails on basis triple ({i}, {j}, {k})")]
    JacobiViolation { i: usize, j: usize, k: usize },

    #[error("lower central series does not reach zero")]
    NotNilpotent,

    #[error("subspace is not an ideal: [e_{i}, b_{j}] leaves it")]
    NotAnIdeal { i: usize, j: usize },

    #[error("subspace is not closed under the bracket: [b_{i}, b_{j}] leaves it")]
    NotClosed { i: usize, j: usize },

    #[error("invalid size parameter {value}: must be at least {min}")]
    InvalidSize { value: usize, min: usize },

    #[error("functionals live on different algebras (dimensions {left} and {right})")]
    AlgebraMismatch { left: usize, right: usize },

    #[error("not a complete flag: {0}")]
    NotAFlag(String),

    #[error("flag member {0} is not an ideal")]
    NotIdeals(usize),

    #[error("Levi direction {k} is not a derivation on basis pair ({i}, {j})")]
    NotADerivation { k: usize, i: usize, j: usize },

    #[error("Levi action is not a representation on directions ({a}, {b})")]
    NotARepresentation { a: usize, b: usize },

    #[error("Levi element does not act nilpotently, so its exponential is not exact")]
    NotExactlyExponentiable,

    #[error("torus element has a zero coordinate")]
    SingularTorusElement,

    #[error("functional has depth {found}, expected {expected}")]
    WrongDepth { expected: usize, found: usize },

    #[error("the zero functional is excluded here")]
    TrivialFunctional,

    #[error("pair is not a horizontal degeneration")]
    NotHorizontal,

    #[error("operation requires torus weight data on the Levi action")]
    MissingTorusWeights,

    #[error("unknown label {0:?}")]
    UnknownLabel(String),

    #[error("unknown catalog entry {0:?}")]
    UnknownCatalog(String),

    #[error("parse error: {0}")]
    Parse(String),
}
