use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{op}: dimension mismatch (expected {expected}, found {found})")]
    DimensionMismatch {
        op: &'static str,
        expected: usize,
        found: usize,
    },

    #[error("polynomial is identically zero")]
    IdenticallyZero,

    /// An interval refinement loop hit its safety cap. Never expected on
    /// well-formed inputs; surfaced as an INDETERMINATE outcome.
    #[error("internal refinement cap of {0} bisections exceeded")]
    RefinementCap(usize),

    #[error("invalid number {text:?}: {reason}")]
    ParseNumber { text: String, reason: String },

    #[error("{0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_dim(op: &'static str, expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch {
            op,
            expected,
            found,
        })
    }
}
