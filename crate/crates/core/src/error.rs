use thiserror::Error;

/// Errors raised by the exact and truncated-series kernels.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by the zero element")]
    DivisionByZero,
    #[error("denominator vanishes at q = 1")]
    PoleAtOne,
    #[error("q^lambda occurs in an expression whose q -> 1 limit was requested")]
    LambdaPresent,
    #[error("denominator evaluates to (nearly) zero")]
    NumericPole,
    #[error("series orders differ: {0} vs {1}")]
    OrderMismatch(usize, usize),
    #[error("series has a nonzero constant term")]
    NonzeroConstantTerm,
    #[error("series constant term is not 1")]
    ConstantTermNotOne,
    #[error("series constant term is not invertible")]
    NonInvertibleConstant,
    #[error("index {index} exceeds truncation order {order}")]
    OrderExceeded { index: usize, order: usize },
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("q-base must differ from 1")]
    InvalidBase,
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
