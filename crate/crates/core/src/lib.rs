//! Exact arithmetic for grossone-based numerals and certificate-producing
//! classification of infinite primes and infinite twin primes.
//!
//! - [`number`]: canonical gross-numbers, arithmetic, order, decomposition.
//! - [`parser`]: surface syntax, evaluation and pretty-printing.
//! - [`prime`]: λ-forms, squareness, primality verdicts, twin constructions.
//! - [`oracle`]: finite number theory used as ground truth.
//! - [`cli`]: the command-line front end.

pub mod cli;
pub mod error;
pub mod machine;
pub mod number;
pub mod oracle;
pub mod parser;
pub mod prime;

pub use error::{ArithError, Error, OracleError, ParseError, TheoryError};
pub use number::{
    divides, normalize, Decomposition, Exponent, GrossNumber, GrossTerm, Rational, ShapeClass,
    Trilean,
};
pub use parser::{eval_ast, eval_str, format, parse, Ast, Style};
pub use prime::{
    classify_prime, enumerate_a, enumerate_b, lambda_certify, make_twins, set_count, squareness,
    LambdaCert, PrimalityVerdict, PrimeRule, SetId, SquarenessVerdict, TwinPair,
};
