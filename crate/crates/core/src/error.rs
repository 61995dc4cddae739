use thiserror::Error;

/// Failures of exact gross-number arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("result is not representable as a finite gross-number")]
    NotRepresentable,
    #[error("zero raised to a negative power")]
    ZeroToNegativePower,
    #[error("substitution requires integer exponents")]
    NonIntegerExponent,
    #[error("substitution point must be positive")]
    NonPositivePoint,
}

/// Syntax error with a 1-based character position.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at position {position}: {message}")]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

/// Precondition failures of the infinite-prime constructions.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TheoryError {
    #[error("lambda is not certified to be a square")]
    LambdaNotSquare,
    #[error("{0} is not a prime")]
    NotPrimeParameter(u64),
    #[error("m must be nonnegative, got {0}")]
    NegativeM(i64),
    #[error("count must be positive")]
    ZeroCount,
    #[error("constructed member {0} did not classify as prime")]
    MemberNotPrime(String),
}

/// Precondition failures of the finite-analogue checks.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("prime {p} exceeds bound {bound}")]
    PrimeExceedsBound { p: u64, bound: u64 },
    #[error("{0} is not a prime")]
    NotPrimeParameter(u64),
    #[error("bound must be at least 1")]
    ZeroBound,
}

/// Any failure surfaced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Arith(#[from] ArithError),
    #[error(transparent)]
    Theory(#[from] TheoryError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
}
