use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix dimension must be at least 1")]
    ZeroDimension,

    #[error("index {index} out of range 1..={n}")]
    IndexOutOfRange { index: i64, n: usize },

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("{identity}: infinite support at {params}")]
    InfiniteSupport {
        identity: &'static str,
        params: String,
    },

    #[error("{identity}: precondition violated: {reason}")]
    Precondition {
        identity: &'static str,
        reason: String,
    },

    #[error(
        "entry ({i}, {j}) of the power is not an exact integer multiple of (1 + a^2)^{exponent}"
    )]
    NotDivisible { i: usize, j: usize, exponent: usize },

    #[error("matrix is not unimodular (determinant {det})")]
    NotUnimodular { det: String },

    #[error("x must be an integer here, got symbolic")]
    SymbolicNotAllowed,

    #[error("parse error: {0}")]
    Parse(String),
}
