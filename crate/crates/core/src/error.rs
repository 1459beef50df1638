use thiserror::Error;

/// Everything that can go wrong in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid composition: {0}")]
    InvalidComposition(String),

    #[error("arithmetic overflow: {0}")]
    Overflow(String),

    #[error("invalid seaweed: compositions sum to {left} and {right}")]
    SumMismatch { left: u64, right: u64 },

    #[error("cannot parse composition {input:?}: {reason}")]
    Parse { input: String, reason: String },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("{what} is {got}, above the limit of {limit}")]
    TooLarge {
        what: &'static str,
        got: u64,
        limit: u64,
    },

    #[error("unknown check {0:?}")]
    UnknownCheck(String),

    /// Two engines that must agree produced different answers.
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
