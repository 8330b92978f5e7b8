use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("empty input: {0}")]
    EmptyInput(&'static str),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("{what} out of range: {value}")]
    OutOfRange { what: &'static str, value: f64 },

    #[error("ball intersection is empty (circumradius {circumradius} exceeds r = {r})")]
    Infeasible { circumradius: f64, r: f64 },

    #[error("{what} did not converge after {iterations} iterations (residual {residual:e})")]
    NotConverged {
        what: &'static str,
        iterations: usize,
        residual: f64,
    },

    #[error("degenerate input: {0}")]
    Degenerate(String),

    #[error("unsupported intrinsic volume index k = {k} in dimension {dim}")]
    UnsupportedIndex { k: usize, dim: usize },

    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),

    #[error("generation failed after {attempts} attempts: {what}")]
    GenerationFailed { what: &'static str, attempts: usize },

    #[error("unknown suite `{0}`")]
    UnknownSuite(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
