use thiserror::Error;

pub type Result<T> = std::result::Result<T, WalkError>;

#[derive(Debug, Error)]
pub enum WalkError {
    #[error("invalid size for {family}: n = {n}")]
    Size { family: &'static str, n: usize },

    #[error("format error at line {line}: {msg}")]
    Format { line: usize, msg: String },

    #[error("value error at line {line}: {msg}")]
    Value { line: usize, msg: String },

    #[error("validation error: {0}")]
    Validation(String),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    Dimension { expected: usize, got: usize },

    #[error("index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },

    #[error("degenerate input: {0}")]
    Degenerate(String),

    #[error("singular input: {0}")]
    Singular(String),

    #[error("configuration error: {0}")]
    Config(String),
}
