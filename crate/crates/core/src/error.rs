use thiserror::Error;

/// Errors surfaced by the computation engine.
///
/// `Parse` covers malformed descriptors; everything else is a domain error.
/// `InternalConsistency` signals a bug in the engine itself (a verified
/// invariant failed), never bad input.
#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("group order {order} exceeds cap {cap}")]
    OrderCapExceeded { order: usize, cap: usize },

    #[error("not a subgroup: {0}")]
    NotASubgroup(String),

    #[error("coefficient systems live over different categories")]
    CategoryMismatch,

    #[error("morphisms are not composable: target of first must equal source of second")]
    NotComposable,

    #[error("hypothesis violated: {0}")]
    HypothesisViolation(String),

    #[error("unsupported input: {0}")]
    Unsupported(String),

    #[error("internal consistency failure: {0}")]
    InternalConsistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;
