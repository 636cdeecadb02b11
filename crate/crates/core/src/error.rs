use thiserror::Error;

/// Errors raised by the kernel. Arithmetic itself is total; these come from
/// input validation, evaluation and parsing.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("generator and indeterminate indices are 1-based; got 0")]
    ZeroIndex,
    #[error("generator index x{index} exceeds the generator count {n}")]
    IndexOutOfRange { index: u32, n: u32 },
    #[error("no assignment for indeterminate y{0}")]
    MissingAssignment(u32),
    #[error("nil index is undefined for the zero element")]
    ZeroElement,
    #[error("cap must be at least 1")]
    InvalidCap,
    #[error("trial count must be at least 1")]
    InvalidTrials,
    #[error("generator count must be at least 1")]
    InvalidGeneratorCount,
    #[error("syntax error at offset {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("namespace error: {0}")]
    Namespace(String),
}

pub type Result<T> = std::result::Result<T, Error>;
