use thiserror::Error;

/// Everything that can go wrong inside the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unbound variable y{}", .0 + 1)]
    UnboundVariable(usize),

    #[error("unbound generator g{}", .0 + 1)]
    UnboundGenerator(usize),

    #[error("generator g{} out of range for {n} generic elements", .index + 1)]
    GeneratorOutOfRange { index: usize, n: usize },

    #[error("derivative order {order} exceeds the cap {cap}")]
    OrderCapExceeded { order: u32, cap: u32 },

    #[error("Lie degree {degree} exceeds the cap {cap}")]
    DegreeCapExceeded { degree: usize, cap: usize },

    #[error("element does not belong to {0}")]
    Mismatch(String),

    #[error("arity mismatch: expected {expected} components, got {got}")]
    Arity { expected: usize, got: usize },

    #[error("zero element")]
    ZeroElement,

    #[error("zero polynomial has no nonvanishing point")]
    ZeroPolynomial,

    #[error("polynomial is not multilinear: multilinearize first")]
    NotMultilinear,

    #[error("polynomial is not linear homogeneous in a single variable")]
    NotLinear,

    #[error("polynomial does not depend on y{}", .0 + 1)]
    ConstantInVariable(usize),

    #[error("Jacobi identity fails on basis triple ({0}, {1}, {2})")]
    JacobiViolation(String, String, String),

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("malformed structure constants: {0}")]
    Malformed(String),

    #[error("invalid rational {0:?}")]
    InvalidRational(String),

    #[error("{0}")]
    Usage(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
