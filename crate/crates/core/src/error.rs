use thiserror::Error;

/// Errors surfaced by the engine. Variants that signal an internal
/// soundness failure (certified identities that stopped holding) are
/// marked as such in their messages; they indicate a bug, not bad input.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("ring mismatch: {0}")]
    RingMismatch(String),
    #[error("not divisible: nonzero remainder {0}")]
    NotDivisible(String),
    #[error("element is not in the ideal: normal form {0}")]
    NotInIdeal(String),
    #[error("not homogeneous: {0}")]
    NotHomogeneous(String),
    #[error("not a regular sequence: {0}")]
    NotRegularSequence(String),
    #[error("degree cap {cap} exceeded at degree {degree}")]
    DegreeCapExceeded { cap: i64, degree: i64 },
    #[error("homological index {index} outside window [0, {max}]")]
    IndexOutOfWindow { index: usize, max: usize },
    #[error("internal error: operator fails to commute with the differential at position {0}")]
    CommutationFailure(usize),
    #[error("internal error: cone fails resolution checks: {0}")]
    NotAResolution(String),
    #[error("internal error: long exact sequence not exact at {0}")]
    LesExactnessFailure(String),
    #[error("section is not homogeneous: {0}")]
    InhomogeneousSection(String),
    #[error("not a section of the ideal: {0}")]
    NotASection(String),
    #[error("parse error at {line}:{col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("field of order {0} too large to enumerate")]
    FieldTooLarge(u64),
    #[error("unsupported: {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;
