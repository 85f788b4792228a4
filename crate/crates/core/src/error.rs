use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{what} exceeds cap: {value} > {cap}")]
    CapExceeded {
        what: &'static str,
        value: usize,
        cap: usize,
    },

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// A finite-difference sum was not divisible by `k!`. This indicates a bug.
    #[error("sum {sum} is not divisible by {k}!")]
    NonDivisible { sum: String, k: usize },

    #[error("recurrence produced a negative entry T({n},{k}) = {value}")]
    NegativeEntry { n: usize, k: usize, value: String },

    #[error("recurrence produced a non-integral entry T({n},{k}) = {value}")]
    NonIntegralEntry { n: usize, k: usize, value: String },

    #[error("sequence entry {index} is negative")]
    NegativeInput { index: usize },

    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }
}
