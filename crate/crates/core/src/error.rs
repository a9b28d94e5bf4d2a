use thiserror::Error;

/// Errors raised by the exact semimodule operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero has no multiplicative inverse")]
    ZeroInverse,
    #[error("invalid scalar literal {literal:?}: {reason}")]
    ParseScalar { literal: String, reason: &'static str },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("exact procedure limited to dimension {cap}, got {found}")]
    DimensionCap { cap: usize, found: usize },
    #[error("empty input: {0}")]
    EmptyInput(&'static str),
    #[error("vector has no nonnegative coordinates in the given basis")]
    NotRepresentable,
    #[error("coordinates are not unique: two distinct nonnegative families represent the vector")]
    NonUnique {
        first: Vec<crate::NonnegScalar>,
        second: Vec<crate::NonnegScalar>,
    },
    #[error("not a semi-basis: {0}")]
    NotABasis(String),
    #[error("eigenvectors must be nonzero")]
    ZeroVector,
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("unsupported case: {0}")]
    UnsupportedCase(&'static str),
    #[error("power iteration did not converge after {0} iterations")]
    NoConvergence(usize),
    #[error("matrix is not primitive: no power up to the Wielandt bound is entrywise positive")]
    NotPrimitive,
    #[error("basis image T(b_{index}) has no nonnegative coordinates in the basis")]
    CoordsFailure { index: usize },
    #[error("l^p distance needs finitely supported sequences (tail must be zero)")]
    UnsupportedTail,
    #[error("functions are defined on different intervals")]
    IntervalMismatch,
    #[error("objects live on different carriers: {left} vs {right}")]
    CarrierMismatch { left: usize, right: usize },
    #[error("invalid object: {0}")]
    InvalidObject(String),
    #[error("candidate function is defined on [0, {domain_max}] but the metrics reach {needed}")]
    DomainTooSmall { domain_max: String, needed: String },
    #[error("maps do not form a composable chain: {0}")]
    NonComposableChain(String),
    #[error("semi-algebra orders differ: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },
    #[error("element has no inverse among nonnegative matrices")]
    NotInvertible,
    #[error("not a bijection of 1..={0}")]
    NotABijection(usize),
    #[error("invalid tolerance or parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
