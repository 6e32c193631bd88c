use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum FockError {
    #[error("dimension error: {0}")]
    Dimension(String),
    #[error("truncation error: trace deficit {deficit:e} exceeds tolerance {tolerance:e}; try dims {suggested:?}")]
    Truncation {
        deficit: f64,
        tolerance: f64,
        suggested: (usize, usize),
    },
    #[error("validation error: {0}")]
    Validation(String),
    #[error("domain error: {0}")]
    Domain(String),
}

pub type Result<T> = std::result::Result<T, FockError>;
