//! Error types shared across the crate.

use thiserror::Error;

/// Errors raised by exact arithmetic and the operations built on it.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("inverse of zero")]
    ZeroInverse,
    #[error("polynomial is not squarefree")]
    NotSquarefree,
    #[error("polynomial must be nonconstant")]
    ConstantPolynomial,
    #[error("exponent {k} is not coprime to the level {n}")]
    NotCoprime { k: i64, n: u64 },
    #[error("element is not fixed by the conjugation automorphism")]
    NotRealAbelian,
    #[error("element is not a root of unity")]
    NotRootOfUnity,
    #[error("root index {index} out of range: the polynomial has {count} roots")]
    RootIndexOutOfRange { index: usize, count: usize },
    #[error("numeric root isolation failed to converge")]
    RootIsolationFailed,
    #[error("invalid rational literal: {0}")]
    BadRational(String),
    #[error("argument must be nonzero")]
    ZeroArgument,
    #[error("level must be a positive integer, got {0}")]
    InvalidLevel(u64),
    #[error("level {target} is not a usable multiple of level {level}")]
    IncompatibleLevel { level: u64, target: u64 },
}
