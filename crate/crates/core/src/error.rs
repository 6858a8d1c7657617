use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("form order {k} is out of range for dimension {n}")]
    FormOrder { n: usize, k: usize },

    #[error("shape mismatch: ({n1}, {k1}) vs ({n2}, {k2})")]
    ShapeMismatch { n1: usize, k1: usize, n2: usize, k2: usize },

    #[error("linear degree of the zero form is undefined")]
    ZeroLinearDegree,

    #[error("{0} has no basis construction (dimension only)")]
    NoBasisRoute(String),

    #[error("no closed-form dimension for {0}")]
    NoDimFormula(String),

    #[error("no vector proxy for n = {n}, k = {k}")]
    UnsupportedProxy { n: usize, k: usize },

    #[error("closed forms are tabulated for n = 2 and n = 3 only, got n = {0}")]
    UnsupportedDimension(usize),

    #[error("expected a {expected}-form, got a {got}-form")]
    OrderMismatch { expected: usize, got: usize },

    #[error("invalid argument: {0}")]
    Invalid(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
