use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("degenerate input: {0}")]
    DegenerateInput(String),
    #[error("conic is singular")]
    SingularConic,
    #[error("the curve contains the conic")]
    CurveContainsConic,
    #[error("points are collinear")]
    CollinearInput,
    #[error("tangency data has a solution space of dimension {kernel_dim}, expected 1")]
    InconsistentTangencyData { kernel_dim: usize },
    #[error("graph is not connected")]
    NotConnected,
    #[error("graph is not strongly regular: {0}")]
    NotSrg(String),
    #[error("graph is not T(7): failed at {stage}")]
    NotT7 { stage: String },
    #[error("unsupported format: {0}")]
    UnsupportedFormat(String),
    #[error("type classification failed: {0}")]
    TypeClassificationFailure(String),
    #[error("structural check failed: {0}")]
    Falsified(String),
    #[error("configuration error: {0}")]
    Config(String),
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    pub fn falsified(msg: impl Into<String>) -> Self {
        Error::Falsified(msg.into())
    }
}
