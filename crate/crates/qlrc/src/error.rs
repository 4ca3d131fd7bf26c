use thiserror::Error;

/// Crate-wide result type.
pub type Result<T> = std::result::Result<T, Error>;

/// Errors reported by the library.
///
/// Verdicts about code families (`Nonexistent`, `Open`) are first-class
/// answers of the classification, not failures of the machinery; they are
/// carried as errors only so that constructors have a single return type.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("matrix has no nonzero entries")]
    ZeroMatrix,

    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("exact distance enumeration refused: dimension {dim} exceeds cap {cap}")]
    DistanceCap { dim: usize, cap: usize },

    #[error("zero-dimensional code has no nonzero codewords")]
    EmptyCode,

    #[error("repair-group search refused: {candidates} candidate supports exceed budget {budget}")]
    DiscoveryBudget { candidates: u64, budget: u64 },

    #[error("parameters infeasible: {0}")]
    Infeasible(String),

    #[error("family `{family}`: {constraint}")]
    Domain { family: String, constraint: String },

    #[error("family `{family}` has no Singleton-optimal code: {reason}")]
    Nonexistent { family: String, reason: String },

    #[error("family `{family}` is an open case: {reason}")]
    Open { family: String, reason: String },

    #[error("tensor-product precondition failed: {which} must define a [{n},{k}] MDS code")]
    MdsPrecondition { which: String, n: usize, k: usize },

    #[error("chain too short: residue construction needs {need} subcodes, chain has {found}")]
    ChainTooShort { need: usize, found: usize },

    #[error("parse error at line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },

    #[error("unknown family id `{0}`")]
    UnknownFamily(String),

    #[error("{0}")]
    Invalid(String),
}

impl Error {
    pub(crate) fn shape(msg: impl Into<String>) -> Self {
        Error::Shape(msg.into())
    }

    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::Invalid(msg.into())
    }
}
