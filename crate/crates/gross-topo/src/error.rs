//! Error type for grids, unit conversion, and continuity checks.

use std::error::Error;
use std::fmt;

use gross_expr::ExprError;

/// Everything that can go wrong while building grids, converting units, or
/// classifying continuity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TopoError {
    /// The endpoints and step do not describe a grid; the payload says why.
    BadGrid(String),
    /// A unit of measure must have a positive factor.
    BadUnit,
    /// The point is not one of the grid's numerals.
    OffGrid,
    /// The value cannot be expressed exactly in the target unit.
    InexactConversion,
    /// A function-continuity check needs a grid that is itself continuous in
    /// the chosen unit.
    GridNotContinuous,
    /// The grid has more points than the enumeration budget and no
    /// monotonicity hint was given.
    BudgetExceeded,
    /// Function evaluation failed at a grid point.
    Eval(ExprError),
}

impl TopoError {
    /// Stable identifier used by the command-line front end.
    pub fn name(&self) -> &'static str {
        match self {
            TopoError::BadGrid(_) => "BadGrid",
            TopoError::BadUnit => "BadUnit",
            TopoError::OffGrid => "OffGrid",
            TopoError::InexactConversion => "InexactConversion",
            TopoError::GridNotContinuous => "GridNotContinuous",
            TopoError::BudgetExceeded => "BudgetExceeded",
            TopoError::Eval(inner) => inner.name(),
        }
    }
}

impl fmt::Display for TopoError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TopoError::BadGrid(reason) => write!(f, "not a valid grid: {reason}"),
            TopoError::BadUnit => {
                write!(f, "a unit of measure must be a positive factor")
            }
            TopoError::OffGrid => write!(f, "the point does not lie on the grid"),
            TopoError::InexactConversion => {
                write!(f, "the value has no exact representation in the target unit")
            }
            TopoError::GridNotContinuous => {
                write!(f, "the grid is not continuous in the chosen unit")
            }
            TopoError::BudgetExceeded => write!(
                f,
                "too many grid points to enumerate; pass a monotonicity hint"
            ),
            TopoError::Eval(inner) => inner.fmt(f),
        }
    }
}

impl Error for TopoError {
    fn source(&self) -> Option<&(dyn Error + 'static)> {
        match self {
            TopoError::Eval(inner) => Some(inner),
            _ => None,
        }
    }
}

impl From<ExprError> for TopoError {
    fn from(e: ExprError) -> Self {
        TopoError::Eval(e)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_are_stable() {
        assert_eq!(TopoError::BadGrid("x".into()).name(), "BadGrid");
        assert_eq!(TopoError::BadUnit.name(), "BadUnit");
        assert_eq!(TopoError::OffGrid.name(), "OffGrid");
        assert_eq!(TopoError::InexactConversion.name(), "InexactConversion");
        assert_eq!(TopoError::GridNotContinuous.name(), "GridNotContinuous");
        assert_eq!(TopoError::BudgetExceeded.name(), "BudgetExceeded");
    }

    #[test]
    fn evaluation_failures_keep_their_inner_name() {
        let e = TopoError::from(ExprError::DivisionByZero);
        assert_eq!(e.name(), "DivisionByZero");
        assert!(std::error::Error::source(&e).is_some());
    }
}
