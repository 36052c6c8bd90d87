//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum AstkError {
    #[error("ring mismatch: {0}")]
    RingMismatch(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("group file invariant violated: {0}")]
    GroupLoad(String),
    #[error("integrity check failed: {0}")]
    Integrity(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, AstkError>;
