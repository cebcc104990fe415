use thiserror::Error;

/// Errors raised outside of an ordinary accept/reject verdict.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("not a border array: {reason} at position {position}")]
    InvalidBorderArray {
        position: usize,
        reason: &'static str,
    },

    #[error("not a strict border array: {reason} at position {position}")]
    InvalidStrictBorderArray {
        position: usize,
        reason: &'static str,
    },

    #[error("length {len} exceeds the supported maximum of {cap}")]
    LengthTooLarge { len: usize, cap: usize },

    #[error("push after the stream was rejected at position {position}")]
    PushAfterFailure { position: usize },

    #[error("validator state is invalid (rejected at position {position})")]
    StateInvalid { position: usize },

    #[error("stream length exceeds the declared maximum {n_max}")]
    CapacityExceeded { n_max: usize },

    #[error(
        "window capacity violated: class {class}, window {window} needs more than {cap} blocks"
    )]
    WindowCapacity {
        class: usize,
        window: usize,
        cap: usize,
    },

    #[error("lazy copy for class {class} missed its deadline at position {position}")]
    CopyDeadline { class: usize, position: usize },

    #[error("position out of range: {0}")]
    OutOfRange(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("{0}")]
    Usage(String),
}

pub type Result<T> = std::result::Result<T, Error>;
