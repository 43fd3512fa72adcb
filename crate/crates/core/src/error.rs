use thiserror::Error;

use crate::field::FieldError;
use crate::twisted::PolyError;

/// A computed value contradicts a proven structural fact (for example the
/// norm vanishing off the identity). Never an ordinary input error.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("invariant violated: {what} (witness {witness})")]
pub struct InvariantViolation {
    pub what: String,
    pub witness: String,
}

impl InvariantViolation {
    pub fn new(what: impl Into<String>, witness: impl Into<String>) -> Self {
        InvariantViolation {
            what: what.into(),
            witness: witness.into(),
        }
    }
}

#[derive(Debug, Error)]
pub enum ReeError {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Invariant(#[from] InvariantViolation),
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
