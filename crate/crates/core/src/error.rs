use thiserror::Error;

use crate::field::Field;

/// Errors raised across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("not a group: {0}")]
    NotAGroup(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("field mismatch: {left} vs {right}")]
    FieldMismatch { left: Field, right: Field },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("factor sets are defined over different groups")]
    GroupMismatch,
    #[error("group order {order} exceeds the enumeration cap {cap}")]
    CapExceeded { order: usize, cap: usize },
    #[error("subset does not contain the identity")]
    IdentityMissing,
    #[error("subset {0} is not a point of the spectrum")]
    NotInOmega(String),
    #[error("the zero element has no inverse")]
    ZeroHasNoInverse,
    #[error("expected a nonzero element")]
    ZeroElement,
    #[error("element index {index} out of range for a group of order {order}")]
    ElementOutOfRange { index: usize, order: usize },
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("invalid generator: {0}")]
    InvalidGenerator(String),
    #[error("factor set is not idempotent")]
    NotIdempotent,
    #[error("index set must contain 0")]
    MissingZero,
    #[error("not a fixed point: {0}")]
    NotAFixedPoint(String),
    #[error("invariant violated: {0}")]
    InvariantViolated(String),
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error("schema error: {0}")]
    Schema(String),
}

pub type Result<T> = std::result::Result<T, Error>;
