use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("syntax error at byte {pos}: {message}")]
    Syntax { pos: usize, message: String },

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("coefficient `{0}` is not in the ring")]
    CoefficientNotInRing(String),

    #[error("invalid ring: {0}")]
    InvalidRing(String),

    #[error("invalid monomial ordering: {0}")]
    InvalidOrdering(String),

    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,

    #[error("unsupported configuration: {0}")]
    Unsupported(String),

    #[error("coefficients must lie in QQ or GF(p), got {0}")]
    NonFieldCoefficients(String),

    #[error("ring mismatch: {0}")]
    RingMismatch(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("resource limit exceeded: {what} ({count} > {limit})")]
    ResourceExceeded { what: String, count: u128, limit: u128 },

    #[error("internal inconsistency: {0}")]
    Internal(String),

    #[error("invalid input: {0}")]
    Invalid(String),
}

impl Error {
    pub(crate) fn syntax(pos: usize, message: impl Into<String>) -> Self {
        Error::Syntax { pos, message: message.into() }
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Invalid(format!("json: {e}"))
    }
}
