//! Error type for parsing, formatting, and evaluation.

use std::fmt;

use gross_core::{GrossError, GrossNumber};

use crate::format::format_number;

/// Failures of the textual layer and of expression evaluation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExprError {
    /// The input text does not match the grammar.
    Syntax { position: usize, message: String },
    /// Division by an exact zero during evaluation.
    DivisionByZero,
    /// Division did not terminate within the term budget; the truncated
    /// quotient is carried so callers can still report it.
    TruncatedDivision { quotient: GrossNumber },
    /// A grosspower would nest deeper than the configured cap.
    DepthExceeded { depth: usize, max: usize },
    /// A rational form's denominator is identically zero.
    ZeroDenominator,
    /// The expression contains nodes (min/max) with no rational form.
    NotRationalForm,
}

impl ExprError {
    /// Stable error name used in rendered output.
    pub fn name(&self) -> &'static str {
        match self {
            ExprError::Syntax { .. } => "SyntaxError",
            ExprError::DivisionByZero => "DivisionByZero",
            ExprError::TruncatedDivision { .. } => "TruncatedDivision",
            ExprError::DepthExceeded { .. } => "DepthExceeded",
            ExprError::ZeroDenominator => "ZeroDenominator",
            ExprError::NotRationalForm => "NotRationalForm",
        }
    }

    /// True for grammar-level failures (as opposed to domain failures).
    pub fn is_syntax(&self) -> bool {
        matches!(self, ExprError::Syntax { .. })
    }
}

impl fmt::Display for ExprError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExprError::Syntax { position, message } => {
                write!(f, "{message} at position {position}")
            }
            ExprError::DivisionByZero => write!(f, "division by zero"),
            ExprError::TruncatedDivision { quotient } => write!(
                f,
                "inexact division, quotient truncated to {} terms: {}",
                quotient.terms().len(),
                format_number(quotient)
            ),
            ExprError::DepthExceeded { depth, max } => {
                write!(f, "grosspower nesting depth {depth} exceeds the cap {max}")
            }
            ExprError::ZeroDenominator => write!(f, "denominator is identically zero"),
            ExprError::NotRationalForm => {
                write!(f, "expression has no rational form (contains min/max)")
            }
        }
    }
}

impl std::error::Error for ExprError {}

impl From<GrossError> for ExprError {
    fn from(e: GrossError) -> Self {
        match e {
            GrossError::DepthExceeded { depth, max } => ExprError::DepthExceeded { depth, max },
            GrossError::DivisionByZero => ExprError::DivisionByZero,
        }
    }
}
