//! Error type for the arithmetic kernel.

use std::fmt;

/// Failures of kernel operations. Ring operations (add, sub, neg, mul,
/// pow_nat) cannot fail; errors arise only where new grosspower nesting is
/// introduced or where division is undefined.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GrossError {
    /// A grosspower would nest deeper than the configured cap.
    DepthExceeded { depth: usize, max: usize },
    /// Division by the zero gross number.
    DivisionByZero,
}

impl fmt::Display for GrossError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GrossError::DepthExceeded { depth, max } => {
                write!(f, "grosspower nesting depth {depth} exceeds the cap {max}")
            }
            GrossError::DivisionByZero => write!(f, "division by zero"),
        }
    }
}

impl std::error::Error for GrossError {}
