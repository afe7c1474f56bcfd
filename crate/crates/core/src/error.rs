use thiserror::Error;

/// Failures raised by the analysis operations once an algebra is valid.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoreError {
    /// The caller broke an operation's stated precondition.
    #[error("precondition violated: {0}")]
    Precondition(String),
    /// Two independent computations of the same object disagreed, or a
    /// property that must hold of every residuated lattice failed. Either the
    /// input is not what it claims to be or there is a bug.
    #[error("internal consistency failure in {check}: {detail}")]
    Internal { check: &'static str, detail: String },
}

impl CoreError {
    pub(crate) fn internal(check: &'static str, detail: impl Into<String>) -> Self {
        CoreError::Internal {
            check,
            detail: detail.into(),
        }
    }
}

pub type Result<T, E = CoreError> = std::result::Result<T, E>;
