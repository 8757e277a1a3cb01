use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Everything that can go wrong inside the engine.
///
/// `Soundness` is special: it is raised when an identity the engine checks at
/// runtime (group order against field degree, rationality of orbit
/// polynomials, ...) fails. It always indicates a bug, never bad input.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("operands live over different coefficient fields")]
    FieldMismatch,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("inversion of zero")]
    ZeroInverse,
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("operation requires a polynomial of degree at least 1")]
    ConstantPolynomial,
    #[error("{0} is not prime")]
    CompositeModulus(u64),
    #[error("polynomial is reducible over the base field")]
    Reducible,
    #[error("field degree {required} exceeds the configured cap {cap} ({context})")]
    DegreeCapExceeded {
        required: usize,
        cap: usize,
        context: String,
    },
    #[error("group order bound {bound} exceeded")]
    OrderBoundExceeded { bound: usize },
    #[error("no primitive element g1 + c2*g2 + ... found with |c| <= {bound}")]
    PrimitiveSearchExhausted { bound: i64 },
    #[error("the given elements do not form a subgroup")]
    NotASubgroup,
    #[error("intermediate field is not normal over Q: {0}")]
    NotNormal(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("parse error at column {column}: {message}")]
    Parse {
        column: usize,
        message: String,
        expected: Vec<String>,
    },
    #[error("internal soundness check failed: {0}")]
    Soundness(String),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    pub(crate) fn soundness(msg: impl Into<String>) -> Self {
        Error::Soundness(msg.into())
    }
}

/// Turns a runtime identity check into an error instead of a panic.
macro_rules! ensure_sound {
    ($cond:expr, $($arg:tt)*) => {
        if !$cond {
            return Err($crate::Error::Soundness(format!($($arg)*)));
        }
    };
}
pub(crate) use ensure_sound;
