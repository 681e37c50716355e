use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero input rejected: {0}")]
    ZeroInput(&'static str),

    #[error("degree {degree} out of bounds (computed through {max})")]
    DegreeOutOfBounds { degree: usize, max: usize },

    #[error("degree {0} is odd; generators live in degree 2")]
    OddDegree(usize),

    #[error("matrix is singular")]
    SingularMatrix,

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("torus action is not free")]
    NonFreeAction,

    #[error("parse error: {0}")]
    Parse(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("degenerate input: {0}")]
    Degenerate(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
