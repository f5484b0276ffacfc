use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degenerate input: {0}")]
    DegenerateInput(&'static str),
    #[error("division by zero")]
    DivisionByZero,
    #[error("elements belong to different number fields")]
    FieldMismatch,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("guard vector is zero")]
    DegenerateGuard,
    #[error("modulus is not irreducible over Q")]
    ReducibleModulus,
    #[error("eigenvalue passes the membership test; no witness exists for it")]
    NotAFailure,
    #[error("{line}:{column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{line}:{column}: undeclared variable `{name}`")]
    UndeclaredVariable {
        name: String,
        line: usize,
        column: usize,
    },
    #[error("{line}:{column}: variable `{name}` assigned more than once")]
    DuplicateAssignment {
        name: String,
        line: usize,
        column: usize,
    },
    #[error("loop body has no assignments")]
    DegenerateBody,
    #[error("expected exactly one guard inequality, found {0}")]
    UnsupportedGuardCount(usize),
    #[error("non-strict guard comparator `>=` is not supported")]
    UnsupportedComparator,
    #[error("invalid matrix document: {0}")]
    MatrixDocument(String),
    #[error("invalid certificate: {0}")]
    Certificate(String),
}
