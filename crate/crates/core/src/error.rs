use thiserror::Error;

pub type Result<T> = std::result::Result<T, AlgebraError>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("arity mismatch: {left} vs {right}")]
    ArityMismatch { left: usize, right: usize },

    #[error("monomial order mismatch")]
    OrderMismatch,

    #[error("the zero polynomial has no leading term")]
    ZeroPolynomial,

    #[error("{divisor} does not divide {dividend}")]
    NotDivisible { divisor: String, dividend: String },

    #[error("divisor #{0} is the zero polynomial")]
    ZeroDivisor(usize),

    #[error("generators span the zero ideal")]
    ZeroIdeal,

    #[error("parse error at offset {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("element {element} is outside 1..={max}")]
    OutOfRange { element: usize, max: usize },

    #[error("staircase is not artinian: no pure power of x{0}")]
    NonArtinian(usize),

    #[error("pair {0} is not in the carrier")]
    NotInCarrier(String),
}

impl AlgebraError {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        AlgebraError::InvalidParameter(msg.into())
    }
}
