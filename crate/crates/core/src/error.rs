use thiserror::Error;

/// Errors raised by the exact-arithmetic layer and the identity evaluators.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parameter `{0}` must be nonzero")]
    ZeroParameter(&'static str),

    #[error("operands belong to different quadratic fields")]
    ContextMismatch,

    #[error("division by zero")]
    DivisionByZero,

    #[error("element has zero norm and is not invertible")]
    NormZero,

    #[error("discriminant a^2 b^2 + 4ab is zero; Binet forms are undefined")]
    DegenerateDiscriminant,

    #[error("surd part did not cancel in coordinate {coordinate}: {value}")]
    InternalSurdResidue { coordinate: usize, value: String },

    #[error("nonzero principal part on e{coordinate} at degree {degree}")]
    PrincipalPartResidue { coordinate: usize, degree: i64 },

    #[error(
        "series is not a unit: constant term must be invertible and no negative degrees allowed"
    )]
    NotAUnit,

    #[error("invalid rational `{0}`: expected `p` or `p/q` with q > 0")]
    ParseRational(String),

    #[error("invalid octonion `{0}`: expected 8 comma-separated rationals")]
    ParseOctonion(String),

    #[error("{0}")]
    InvalidArgument(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
