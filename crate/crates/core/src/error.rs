use alloc::string::String;
use core::fmt;

use num_bigint::BigUint;

pub type Result<T> = core::result::Result<T, Error>;

/// Every failure the library reports.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    Domain(String),
    /// Operand dimensions do not fit together.
    DimensionMismatch {
        left: (usize, usize),
        right: (usize, usize),
    },
    /// Operands live over different rings.
    RingMismatch,
    /// A matrix (or circulant) that must be invertible is not.
    Singular,
    /// An exhaustive scan would visit more candidates than allowed.
    BudgetExceeded { required: BigUint, budget: u64 },
    /// A result that must hold by construction failed to hold.
    Inconsistency(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Domain(msg) => write!(f, "domain error: {msg}"),
            Error::DimensionMismatch { left, right } => write!(
                f,
                "dimension mismatch: {}x{} vs {}x{}",
                left.0, left.1, right.0, right.1
            ),
            Error::RingMismatch => write!(f, "operands belong to different rings"),
            Error::Singular => write!(f, "matrix is singular"),
            Error::BudgetExceeded { required, budget } => write!(
                f,
                "enumeration needs a budget of {required} candidates, budget is {budget}"
            ),
            Error::Inconsistency(msg) => write!(f, "internal inconsistency: {msg}"),
        }
    }
}

impl core::error::Error for Error {}

macro_rules! domain {
    ($($arg:tt)*) => {
        $crate::Error::Domain(::alloc::format!($($arg)*))
    };
}
pub(crate) use domain;
