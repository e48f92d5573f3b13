use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("series is not a unit (constant term is zero)")]
    NotAUnit,
    #[error("truncation order exhausted: need {needed} coefficients, have {available}")]
    OrderExhausted { needed: usize, available: usize },
    #[error("denominator has zero constant term")]
    DenominatorNotUnit,
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("inseparable factor: T-derivative vanishes in characteristic {0}")]
    InseparableFactor(u64),
    #[error("scalar polynomial is not monic")]
    NotMonic,
    #[error("seed is not a prefix of a root of the annihilator")]
    SeedNotRoot,
    #[error("singular root: derivative of the annihilator is not invertible at the seed")]
    SingularRoot,
    #[error("no squarefree factor of the annihilator vanishes on the expansion")]
    NoBranchMatches,
    #[error("telescoping degenerates: reduced denominator sums to zero")]
    TelescopeDegenerate,
    #[error("insufficient order: need {needed} coefficients, have {available}")]
    InsufficientOrder { needed: usize, available: usize },
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("evaluation error: {0}")]
    Eval(String),
    #[error("io error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl Error {
    /// Stable machine-readable tag used in JSON error objects.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::NotAUnit => "NotAUnit",
            Error::OrderExhausted { .. } => "OrderExhausted",
            Error::DenominatorNotUnit => "DenominatorNotUnit",
            Error::ZeroPolynomial => "ZeroPolynomial",
            Error::InseparableFactor(_) => "InseparableFactor",
            Error::NotMonic => "NotMonic",
            Error::SeedNotRoot => "SeedNotRoot",
            Error::SingularRoot => "SingularRoot",
            Error::NoBranchMatches => "NoBranchMatches",
            Error::TelescopeDegenerate => "TelescopeDegenerate",
            Error::InsufficientOrder { .. } => "InsufficientOrder",
            Error::InvalidField(_) => "InvalidField",
            Error::Syntax { .. } => "SyntaxError",
            Error::Eval(_) => "EvalError",
            Error::Io(_) => "IoError",
        }
    }
}
