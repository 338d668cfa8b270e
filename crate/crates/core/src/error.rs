use thiserror::Error;

/// Errors raised across the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),

    #[error("invalid dimension {0}: {1}")]
    InvalidDimension(usize, &'static str),

    #[error("matrix is not Hermitian (deviation {0:e})")]
    NotHermitian(f64),

    #[error("operator is not positive semidefinite (min eigenvalue {0:e})")]
    NotPositive(f64),

    #[error("trace is {got}, expected {expected}")]
    InvalidTrace { got: f64, expected: f64 },

    #[error("eigensolver did not converge after {0} sweeps")]
    NoConvergence(usize),

    #[error("unsupported input: {0}")]
    Unsupported(String),

    #[error("parameter {name} = {value} is infeasible; maximal feasible value is {max}")]
    OutOfRange { name: &'static str, value: f64, max: f64 },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("channel is not trace-preserving (deviation {0:e})")]
    NotTracePreserving(f64),

    #[error("channel is not bistochastic")]
    NotBistochastic,

    #[error("bases are not mutually unbiased (deviation {0:e})")]
    NotUnbiased(f64),

    #[error("malformed input: {0}")]
    Parse(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
