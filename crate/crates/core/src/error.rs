use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    /// Invalid construction or configuration input.
    #[error("configuration error: {0}")]
    Config(String),

    /// Shape disagreement between two inputs.
    #[error("dimension mismatch in {what}: expected {expected}, got {got}")]
    Dimension {
        what: &'static str,
        expected: usize,
        got: usize,
    },

    /// Argument outside the domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A simulation or solve produced a non-finite value.
    #[error("numerical failure in {what} at path {path}, step {step}")]
    NonFinite {
        what: &'static str,
        path: usize,
        step: usize,
    },

    /// A matrix that must be invertible is singular.
    #[error("singular matrix in {what}: {detail}")]
    Singular { what: &'static str, detail: String },

    /// A bounded search gave up.
    #[error("search exhausted in {what}: {detail}")]
    SearchExhausted { what: &'static str, detail: String },

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
