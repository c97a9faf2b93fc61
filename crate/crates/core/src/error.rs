use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("kappa must be nonzero")]
    ZeroKappa,

    #[error("unknown variable {0:?}")]
    UnknownVariable(String),

    #[error("dimension mismatch: ({left_n},{left_m}) vs ({right_n},{right_m})")]
    DimensionMismatch {
        left_n: usize,
        left_m: usize,
        right_n: usize,
        right_m: usize,
    },

    #[error("reduction did not reach a minimal pair within {max_steps} steps")]
    StepLimitExceeded { max_steps: usize },

    #[error("internal verification failed: {0}")]
    InternalVerificationFailed(String),

    #[error("kappa {kappa} is not negative special for (n,m) = ({n},{m})")]
    NotNegativeSpecial { kappa: String, n: usize, m: usize },

    #[error("kappa {kappa} is not positive special for (n,m) = ({n},{m})")]
    NotPositiveSpecial { kappa: String, n: usize, m: usize },

    #[error(
        "consecutive infinite-orbit witnesses {l} and {next} not connected within {budget} moves"
    )]
    ConnectivityUnverified { l: i64, next: i64, budget: usize },

    #[error("no generic separation pair found after {attempts} attempts")]
    GenericityExhausted { attempts: usize },

    #[error("no finite generator family is available for kappa {0}")]
    UnsupportedKappa(String),

    #[error("degenerate denominator: t^r = 1")]
    DegenerateDenominator,

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Short machine-readable tag, used in CLI and FFI error objects.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::DivisionByZero => "DivisionByZero",
            Error::ZeroKappa => "ZeroKappa",
            Error::UnknownVariable(_) => "UnknownVariable",
            Error::DimensionMismatch { .. } => "DimensionMismatch",
            Error::StepLimitExceeded { .. } => "StepLimitExceeded",
            Error::InternalVerificationFailed(_) => "InternalVerificationFailed",
            Error::NotNegativeSpecial { .. } => "NotNegativeSpecial",
            Error::NotPositiveSpecial { .. } => "NotPositiveSpecial",
            Error::ConnectivityUnverified { .. } => "ConnectivityUnverified",
            Error::GenericityExhausted { .. } => "GenericityExhausted",
            Error::UnsupportedKappa(_) => "UnsupportedKappa",
            Error::DegenerateDenominator => "DegenerateDenominator",
            Error::Parse(_) => "ParseError",
        }
    }
}
