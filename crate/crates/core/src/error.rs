use thiserror::Error;

/// A function applied outside the cases its defining equations cover.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{op}: {reason}")]
pub struct Unspecified {
    pub op: &'static str,
    pub reason: String,
}

impl Unspecified {
    pub fn new(op: &'static str, reason: impl Into<String>) -> Self {
        Self {
            op,
            reason: reason.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Unspecified>;
