use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid quantum numbers: {0}")]
    InvalidQuantumNumbers(String),

    #[error("dimension d={d} is not supported by {operation}")]
    UnsupportedDimension { d: u32, operation: &'static str },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("unsupported argument: {0}")]
    Unsupported(String),

    /// Contributions to one matrix element do not share a common radical.
    #[error("incompatible radicals in matrix element: {0}")]
    IncompatibleRadical(String),

    #[error("quadrature did not converge: {0}")]
    NonConvergence(String),

    #[error("cannot parse {what}: {input:?}")]
    Parse { what: &'static str, input: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
