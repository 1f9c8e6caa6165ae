use thiserror::Error;

/// Errors produced anywhere in the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// Evaluation requested at (or too close to) a pole of a rational function.
    #[error("pole: {0}")]
    Pole(String),

    /// A cross-check between two independent computation paths disagreed.
    #[error("internal consistency: {0}")]
    InternalConsistency(String),

    /// A guard protecting an exact-arithmetic assumption tripped; excluded by
    /// theory, so hitting this indicates a precision problem.
    #[error("precision guard: {0}")]
    PrecisionGuard(String),

    #[error("numerical failure: {0}")]
    Numerical(String),
}

impl Error {
    /// Process exit code for the CLI: 2 invalid arguments, 3 internal
    /// consistency, 4 precision guard.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::InvalidArgument(_) | Error::Pole(_) => 2,
            Error::InternalConsistency(_) | Error::Numerical(_) => 3,
            Error::PrecisionGuard(_) => 4,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
