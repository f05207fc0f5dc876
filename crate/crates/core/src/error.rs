use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("not 2-integral: denominator {0} is even")]
    NotTwoIntegral(String),
    #[error("modulus exponent {0} out of range (1..=63)")]
    ModulusOutOfRange(u32),
    #[error("B*_0 undefined")]
    ZeroIndex,
    #[error("index {0} must be even")]
    OddIndex(u64),
    #[error("{what}: {detail}")]
    Precondition { what: &'static str, detail: String },
    #[error("gcd({a}, {n}) = {g} is not 1")]
    NotCoprime { a: u64, n: u64, g: u64 },
    #[error("series constant term {0} is not invertible")]
    NotInvertible(String),
    #[error("log1p needs a series with zero constant term, got {0}")]
    NonzeroConstant(String),
    #[error("expected {expected} Bell arguments, got {got}")]
    BellArity { expected: usize, got: usize },
    #[error("coefficient of z^{exponent} is {value}, expected 0")]
    NegativePowerResidue { exponent: i64, value: String },
    #[error("constant term unavailable: series known only through z^{0}")]
    TruncatedTooEarly(i64),
    #[error("methods disagree at n = {n}: {detail}")]
    Disagreement { n: u64, detail: String },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn precondition(what: &'static str, detail: impl Into<String>) -> Error {
    Error::Precondition {
        what,
        detail: detail.into(),
    }
}
