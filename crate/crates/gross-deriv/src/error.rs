//! Error type for the differentiation operations.

use std::error::Error;
use std::fmt;

use gross_expr::ExprError;
use gross_topo::TopoError;

/// Everything that can go wrong while differentiating.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DerivError {
    /// The function difference is not divisible by the step symbol, so no
    /// relative difference exists.
    NotFactorable,
    /// The relative difference has a pole at step zero, so the one-sided
    /// derivative is undefined.
    UndefinedAtZero,
    /// The function does not have continuous formulae at the point (nor, in
    /// relaxed mode, agreeing side formulae).
    FormulaeDiscontinuous,
    /// The infinitesimal-step differentiator only accepts polynomials.
    NotPolynomial,
    /// A formula could not be evaluated; `formula` says which one.
    Eval {
        formula: &'static str,
        inner: ExprError,
    },
    /// A grid-level failure from the domain layer.
    Grid(TopoError),
}

impl DerivError {
    /// Stable identifier used by the command-line front end.
    pub fn name(&self) -> &'static str {
        match self {
            DerivError::NotFactorable => "NotFactorable",
            DerivError::UndefinedAtZero => "UndefinedAtZero",
            DerivError::FormulaeDiscontinuous => "FormulaeDiscontinuous",
            DerivError::NotPolynomial => "NotPolynomial",
            DerivError::Eval { inner, .. } => inner.name(),
            DerivError::Grid(inner) => inner.name(),
        }
    }
}

impl fmt::Display for DerivError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DerivError::NotFactorable => {
                write!(f, "the difference does not factor through the step")
            }
            DerivError::UndefinedAtZero => {
                write!(f, "the relative difference has a pole at step zero")
            }
            DerivError::FormulaeDiscontinuous => {
                write!(f, "the function does not have continuous formulae at the point")
            }
            DerivError::NotPolynomial => {
                write!(f, "only polynomials can be differentiated by infinitesimal step")
            }
            DerivError::Eval { formula, inner } => write!(f, "formula {formula}: {inner}"),
            DerivError::Grid(inner) => inner.fmt(f),
        }
    }
}

impl Error for DerivError {
    fn source(&self) -> Option<&(dyn Error + 'static)> {
        match self {
            DerivError::Eval { inner, .. } => Some(inner),
            DerivError::Grid(inner) => Some(inner),
            _ => None,
        }
    }
}

impl From<TopoError> for DerivError {
    fn from(e: TopoError) -> Self {
        DerivError::Grid(e)
    }
}
