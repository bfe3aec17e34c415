use thiserror::Error;

/// Errors reported by the library.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid group spec `{input}`: {reason}")]
    GroupParse { input: String, reason: String },

    #[error("group order {order} exceeds the supported maximum of {max}")]
    GroupTooLarge { order: usize, max: usize },

    #[error("invalid subset literal `{input}`: {reason}")]
    SubsetParse { input: String, reason: String },

    #[error("element index {index} is outside a group of order {order}")]
    ElementOutOfRange { index: usize, order: usize },

    #[error(
        "refusing to scan 2^{order} subsets (cap is |G| <= {cap}); estimated cost ~{estimated_secs:.0} s"
    )]
    CapExceeded { order: usize, cap: usize, estimated_secs: f64 },

    #[error("D_d is undefined for d = 0")]
    ZeroDifference,

    #[error("base m = {base} is too small for an injective lift; need m >= {min}")]
    BaseTooSmall { base: u64, min: u64 },

    #[error("lift multiplier k must be at least 1")]
    ZeroMultiplier,

    #[error("generic component with {size} vertices exceeds the exact-count cap of {cap}")]
    ComponentTooLarge { size: usize, cap: usize },

    #[error("graph is not regular: {0}")]
    NotRegular(String),

    #[error("graph has loops and is not simple")]
    HasLoops,

    #[error("operation needs a group of {expected} order, got |G| = {order}")]
    WrongParity { expected: &'static str, order: usize },

    #[error("operation needs |G| >= {min}, got |G| = {order}")]
    GroupTooSmall { min: usize, order: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("thread pool: {0}")]
    ThreadPool(String),
}

pub type Result<T> = std::result::Result<T, Error>;
