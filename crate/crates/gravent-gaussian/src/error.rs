use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GaussianError {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("numerical consistency error: {0}")]
    Numerical(String),
}

pub type Result<T> = std::result::Result<T, GaussianError>;
