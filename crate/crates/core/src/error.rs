use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("subspaces live in different ambient spaces ({left} vs {right})")]
    AmbientMismatch { left: usize, right: usize },
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("invalid size: {0}")]
    InvalidSize(String),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("element does not lie in the algebra")]
    NotInAlgebra,
    #[error("elements belong to different algebras")]
    MixedAlgebra,
    #[error("invalid involution: {0}")]
    InvalidInvolution(String),
    #[error("invalid decomposition: {0}")]
    InvalidDecomposition(String),
    #[error("element is not homogeneous for the grading")]
    NotHomogeneous,
    #[error("unsupported catalog entry: {0}")]
    Unsupported(String),
    #[error("random search exhausted its budget: {0}")]
    BudgetExhausted(String),
    #[error("operator spectrum is not rational: {0}")]
    IrrationalSpectrum(String),
    #[error("hypothesis violated: {0}")]
    Hypothesis(String),
    #[error("invalid Jordan algebra: {0}")]
    InvalidJordan(String),
    #[error("short grading check failed: {0}")]
    ShortGrading(String),
}

pub type Result<T> = std::result::Result<T, Error>;
