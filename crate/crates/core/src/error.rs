use alloc::string::String;

/// Every failure the library reports.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("polynomials live in different variable namespaces")]
    NamespaceMismatch,
    #[error("variable `{0}` has no value or assignment")]
    UnassignedVariable(String),
    #[error("unknown symbol `{0}`")]
    UnknownSymbol(String),
    #[error("substitution image for `{0}` is not linear")]
    NonLinearImage(String),
    #[error("polynomial is not homogeneous of weight {0}")]
    NotHomogeneous(u32),
    #[error("polynomial is not in the subring generated by the given generators: {0}")]
    NotInSubring(String),
    #[error("generator expression is ambiguous in its linear part")]
    AmbiguousExpression,
    #[error("invalid rank {rank} for family {family}")]
    InvalidRank { family: String, rank: u32 },
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("invalid category {category} for {ty}")]
    InvalidCategory { ty: String, category: u8 },
    #[error("unlisted restriction case: {0}")]
    UnlistedCase(String),
    #[error("rank mismatch: expected {expected}, found {found}")]
    RankMismatch { expected: usize, found: usize },
    #[error("not a generalised symmetric space: {0}")]
    NotGeneralisedSymmetric(String),
    #[error("parameter out of range: {0}")]
    ParameterOutOfRange(String),
    #[error("invalid descriptor: {0}")]
    InvalidDescriptor(String),
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("parse error at {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

pub type Result<T> = core::result::Result<T, Error>;
