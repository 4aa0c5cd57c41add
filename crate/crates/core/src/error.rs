use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// A desk-scale limit was exceeded. `what` names the limit.
    #[error("{what} exceeds cap: {actual} > {limit}")]
    CapExceeded {
        what: &'static str,
        limit: usize,
        actual: usize,
    },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// Column `0` (zero-based) of a matrix has no ones.
    #[error("matrix column {} is all zeros", .0 + 1)]
    ZeroColumn(usize),

    #[error("matrix row {} is all zeros", .0 + 1)]
    ZeroRow(usize),

    #[error("node subset is empty")]
    EmptySubset,

    #[error("node {label} out of range 1..={n}")]
    NodeOutOfRange { label: usize, n: usize },

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_cap(what: &'static str, limit: usize, actual: usize) -> Result<()> {
    if actual > limit {
        Err(Error::CapExceeded {
            what,
            limit,
            actual,
        })
    } else {
        Ok(())
    }
}
