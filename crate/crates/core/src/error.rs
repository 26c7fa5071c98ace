use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("exact division failed: {dividend} is not divisible by {divisor}")]
    NotDivisible { dividend: String, divisor: String },

    #[error("matrix is not invertible: determinant {det} is not a unit")]
    NotInvertible { det: String },

    #[error("matrix is not unimodular: determinant {det}")]
    NotUnimodular { det: String },

    #[error("zero denominator")]
    ZeroDenominator,

    #[error("expected a positive rational, got {0}")]
    NonPositive(String),

    #[error("fraction {0} is outside (0, 1]")]
    OutOfRange(String),

    #[error("fixed point undefined: lower-left entry of the matrix is zero")]
    DegenerateMatrix,

    #[error("no exponent in {lo}..={hi} makes the identity exact")]
    NoExponentFound { lo: i64, hi: i64 },

    #[error("index {index} out of range for tuple of length {len}")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("castling move produced a zero entry")]
    ZeroEntry,

    #[error("invalid word {0:?}: letters must be 'a' or 'b'")]
    InvalidWord(String),

    #[error("{0:?} is not a Christoffel word of the triple tree")]
    NotChristoffel(String),

    #[error("invalid word triple: middle {middle} is not {left}{right}")]
    InvalidTriple {
        left: String,
        middle: String,
        right: String,
    },

    #[error("invalid continued fraction: {0}")]
    InvalidContinuedFraction(String),

    #[error("({0}, {1}, {2}) is not a Markov triple")]
    NotMarkov(String, String, String),

    #[error("term {0} is too large for a q-integer")]
    TermTooLarge(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
