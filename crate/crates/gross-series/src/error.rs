//! Error type for the summation and counting operations.

use std::error::Error;
use std::fmt;

/// Everything that can go wrong while summing series or counting points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SeriesError {
    /// The requested item count is zero or negative.
    NonPositiveCount,
    /// The requested item count has a fractional finite part and so cannot
    /// be a whole number of items.
    NotIntegerCount,
    /// The common ratio has no closed form in this system (a multi-term
    /// gross ratio, or a gross monomial ratio with infinitely many items).
    UnsupportedRatio,
    /// A comparison across exponential terms with different bases.
    MixedBase,
    /// A positional count needs a radix of at least 2.
    BadRadix,
    /// The value has no finite decimal expansion.
    NotDecimal,
    /// A power with no defined value (zero or a negative base raised to a
    /// general gross exponent).
    UndefinedPower,
}

impl SeriesError {
    /// Stable identifier used by the command-line front end.
    pub fn name(&self) -> &'static str {
        match self {
            SeriesError::NonPositiveCount => "NonPositiveCount",
            SeriesError::NotIntegerCount => "NotIntegerCount",
            SeriesError::UnsupportedRatio => "UnsupportedRatio",
            SeriesError::MixedBase => "MixedBase",
            SeriesError::BadRadix => "BadRadix",
            SeriesError::NotDecimal => "NotDecimal",
            SeriesError::UndefinedPower => "UndefinedPower",
        }
    }
}

impl fmt::Display for SeriesError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SeriesError::NonPositiveCount => {
                write!(f, "the number of items must be positive")
            }
            SeriesError::NotIntegerCount => {
                write!(f, "the number of items must be integer-valued")
            }
            SeriesError::UnsupportedRatio => {
                write!(f, "this ratio cannot be summed in closed form")
            }
            SeriesError::MixedBase => {
                write!(f, "exponential terms with different bases cannot be compared")
            }
            SeriesError::BadRadix => {
                write!(f, "positional counts need a radix of at least 2")
            }
            SeriesError::NotDecimal => {
                write!(f, "the value has no finite decimal expansion")
            }
            SeriesError::UndefinedPower => {
                write!(f, "this power has no defined value")
            }
        }
    }
}

impl Error for SeriesError {}
