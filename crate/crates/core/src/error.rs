use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands live in different fields")]
    FieldMismatch,
    #[error("field of order {0} is not a quadratic extension")]
    NotQuadraticExtension(u32),
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("gcd of two zero polynomials is undefined")]
    BothZero,
    #[error("lambda must be nonzero")]
    ZeroLambda,
    #[error("polynomial has zero constant term")]
    ZeroConstantTerm,
    #[error("generator does not divide x^{n} - lambda")]
    NotADivisor { n: usize },
    #[error("codes use different lambda values")]
    LambdaMismatch,
    #[error("codes use the same lambda value")]
    SameLambda,
    #[error("length mismatch: {0} vs {1}")]
    LengthMismatch(usize, usize),
    #[error("ambient dimension mismatch: {0} vs {1}")]
    AmbientMismatch(usize, usize),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("symplectic form needs an even length, got {0}")]
    OddLength(usize),
    #[error("too large for exhaustive treatment: {0}")]
    TooLarge(String),
    #[error("too many divisor pairs: {0}")]
    TooManyPairs(usize),
    #[error("statement only holds in characteristic 2")]
    OddCharacteristicRestriction,
    #[error("space is not closed under the cyclic shift")]
    NotCyclic,
    #[error("row space is not closed under the conjucyclic shift")]
    NotConjucyclic,
    #[error("invalid alpha: {0}")]
    InvalidAlpha(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
