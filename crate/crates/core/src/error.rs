use thiserror::Error;

/// Errors raised by the engine.
#[derive(Debug, Error)]
pub enum Error {
    #[error("unsupported root system {letter}{rank}: {reason}")]
    UnsupportedType {
        letter: char,
        rank: usize,
        reason: String,
    },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("weight {0} is not dominant")]
    NotDominant(String),

    /// A mathematical invariant failed at runtime (d^2 != 0, a singular vector
    /// that is not unique, an unsolvable sign system). Always a bug.
    #[error("internal consistency failure: {0}")]
    Consistency(String),

    #[error("no diamond available for levi {levi:?}; compute it first")]
    MissingDiamond { levi: Vec<usize> },

    #[error("cache error: {0}")]
    Cache(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

macro_rules! ensure_consistent {
    ($cond:expr, $($arg:tt)*) => {
        if !$cond {
            return Err($crate::error::Error::Consistency(format!($($arg)*)));
        }
    };
}
pub(crate) use ensure_consistent;
