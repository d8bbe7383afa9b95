use thiserror::Error;

/// Errors raised anywhere in the crate.
///
/// The variants line up with the CLI exit codes: domain and configuration
/// problems exit with 2, oversize systems with 3, analytic/dense mismatches
/// with 4.
#[derive(Debug, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("unsupported configuration: {0}")]
    Unsupported(String),

    #[error("invariant violated: {0}")]
    InvariantViolation(String),

    #[error("no closed-form formula: {0}")]
    NoFormula(String),

    #[error("resource limit: {0}")]
    Resource(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("degenerate input: {0}")]
    DegenerateInput(String),

    #[error("non-monotone scan: {0}")]
    NonMonotone(String),

    #[error("validation mismatch: {0}")]
    ValidationMismatch(String),

    #[error("config error: {0}")]
    Config(String),

    #[error("eigensolver failed to converge")]
    Eigen,

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Process exit code used by the CLI.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Domain(_)
            | Error::Unsupported(_)
            | Error::NoFormula(_)
            | Error::Precondition(_)
            | Error::DegenerateInput(_)
            | Error::NonMonotone(_)
            | Error::InvariantViolation(_)
            | Error::Config(_)
            | Error::Json(_) => 2,
            Error::Resource(_) => 3,
            Error::ValidationMismatch(_) => 4,
            Error::Eigen | Error::Io(_) | Error::Csv(_) => 1,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}
