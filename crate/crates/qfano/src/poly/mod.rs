//! Exact multivariate polynomials over Q or F_p with named variables and integer gradings.

mod matrix;
mod mono;
mod parse;
#[allow(clippy::module_inception)]
mod poly;
mod ring;
mod scalar;
pub mod univariate;

pub use matrix::PolyMatrix;
pub use mono::Mono;
pub use parse::parse_poly;
pub use poly::{poly_arith, ArithOp, Poly};
pub use ring::Ring;
pub use scalar::{is_prime, Field, Scalar};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("duplicate variable name `{0}`")]
    DuplicateName(String),
    #[error("grading row {row} has {got} entries, expected {expected}")]
    GradingLength { row: usize, got: usize, expected: usize },
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("empty variable list")]
    NoVariables,
    #[error("invalid identifier `{0}`")]
    BadIdentifier(String),
    #[error("unknown identifier `{name}` at position {pos}")]
    UnknownIdentifier { name: String, pos: usize },
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("polynomials live in different rings")]
    RingMismatch,
    #[error("variable `{0}` is missing in the target ring")]
    MissingVariable(String),
    #[error("no value assigned to `{0}`")]
    MissingAssignment(String),
    #[error("selection is not square ({0}x{1})")]
    NonSquare(usize, usize),
    #[error("index out of bounds")]
    OutOfBounds,
    #[error("zero polynomial")]
    ZeroInput,
    #[error("coefficient field mismatch")]
    FieldMismatch,
    #[error("value is not invertible in the coefficient field")]
    NonInvertible,
    #[error("no such grading row {0}")]
    NoGrading(usize),
}
