use thiserror::Error;

/// Errors raised anywhere in the library.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("integration diverged at t = {t}")]
    Diverged { t: f64 },
    #[error("invalid resolution: {0}")]
    InvalidResolution(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("singular configuration: {0}")]
    Singular(String),
    #[error("degenerate eigenvalues: |q1 - q2| = {gap:e}")]
    DegenerateEigenvalues { gap: f64 },
    #[error("point violates constraints by {violation:e}")]
    InvalidPoint { violation: f64 },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("grid mismatch: {0}")]
    GridMismatch(String),
    #[error("stability bound violated: dt = {dt:e} exceeds {limit:e}")]
    Unstable { dt: f64, limit: f64 },
    #[error("alphabet mismatch")]
    AlphabetMismatch,
    #[error("rewrite budget of {0} steps exhausted")]
    NonTermination(usize),
    #[error("rule {0} does not decrease the termination order")]
    NonDecreasingRule(usize),
    #[error("expression is not a commutator: nonzero constant coefficient")]
    NotACommutator,
    #[error("matrix is not Hermitian (deviation {0:e})")]
    NotHermitian(f64),
    #[error("not a density matrix: {0}")]
    InvalidDensity(String),
    #[error("zero state vector")]
    ZeroVector,
}

pub type Result<T> = std::result::Result<T, Error>;
