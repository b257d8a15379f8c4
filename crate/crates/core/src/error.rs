use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by a series whose constant term is not a unit")]
    DivisionByNonUnit,
    #[error("inner series of a composition must have zero constant term")]
    NonzeroConstantInner,
    #[error("series is not reversible: need f(0) = 0 and a nonzero rational coefficient of x")]
    NotReversible,
    #[error("square root needs a constant term of exactly 1")]
    BadConstantTerm,
    #[error("exponential needs a zero constant term")]
    NonzeroExpArgument,
    #[error("g(0) must be nonzero")]
    InvalidG,
    #[error("f must have f(0) = 0 and a nonzero coefficient of x")]
    InvalidF,
    #[error("need series order {needed}, only {available} available")]
    InsufficientOrder { needed: usize, available: usize },
    #[error("bivariate series has zero constant term")]
    ZeroConstant,
    #[error("generating function is not that of a Riordan array (checked to order {0})")]
    NotRiordan(usize),
    #[error("expected a {expected} continued fraction")]
    WrongKind { expected: &'static str },
    #[error("operation does not support polynomial coefficient tails")]
    UnsupportedTail,
    #[error("path enumeration is limited to n <= {max}, got {n}")]
    TooLarge { n: usize, max: usize },
    #[error("diagonal entry in row {0} is not invertible")]
    SingularDiagonal(usize),
    #[error("nonzero entry at ({row}, {col}) outside the tridiagonal band")]
    NotTridiagonal { row: usize, col: usize },
    #[error("superdiagonal entry in row {0} is not 1")]
    BadSuperdiagonal(usize),
    #[error("unknown triangle name `{0}`")]
    UnknownName(String),
    #[error("unsupported parameters: {0}")]
    UnsupportedParameters(String),
    #[error("row {0} has entries beyond the diagonal")]
    NotLowerTriangular(usize),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
}
