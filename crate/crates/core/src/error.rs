use thiserror::Error;

/// Errors produced by the engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parameter out of range: {0}")]
    ParameterOutOfRange(String),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("cannot reflect in the zero vector")]
    ZeroRoot,

    #[error("degenerate basis: root {0} vanishes on every basis vector")]
    DegenerateBasis(String),

    #[error("singular linear system")]
    SingularSystem,

    #[error("generator index {index} out of range (have {available} generators)")]
    BadGeneratorIndex { index: usize, available: usize },

    #[error("orbit exceeded the configured limit of {0} points")]
    OrbitLimitExceeded(usize),

    #[error("invalid parabolic subset: {0}")]
    InvalidParabolicSubset(String),

    #[error("point {0} does not lie in the real Cartan subspace")]
    ConstraintViolation(String),

    #[error("no closed form available for {0}")]
    NoClosedForm(String),

    #[error("malformed Hodge diamond: {0}")]
    Schema(String),
}

pub type Result<T> = std::result::Result<T, Error>;
