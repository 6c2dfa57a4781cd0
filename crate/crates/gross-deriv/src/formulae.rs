//! Continuity of formulae at a point.
//!
//! A piecewise definition has continuous formulae at x when the formula used
//! below x, the one used at x, and the one used above x all return the same
//! value there. The check is pure arithmetic: evaluate all three formulae at
//! the point (after rational-form cancellation, so removable quotients like
//! (x²−1)/(x−1) pose no problem) and compare exactly.

use gross_core::GrossNumber;
use gross_expr::{evaluate, to_rational_form, EvalOptions, Expr, ExprError, PiecewiseFunc};

use crate::error::DerivError;

/// How the three formulae relate at the point.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FormulaeStatus {
    /// f1(x) = f2(x) = f3(x).
    Continuous,
    /// Neither side formula matches the value at the point.
    Discontinuous,
    /// Only f1(x) = f2(x).
    LeftOnly,
    /// Only f3(x) = f2(x).
    RightOnly,
}

impl std::fmt::Display for FormulaeStatus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let word = match self {
            FormulaeStatus::Continuous => "continuous",
            FormulaeStatus::Discontinuous => "discontinuous",
            FormulaeStatus::LeftOnly => "left-only",
            FormulaeStatus::RightOnly => "right-only",
        };
        f.write_str(word)
    }
}

/// The status together with the three formula values (sides may be missing
/// when their formula has no value at the point, e.g. at a pole).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormulaeCheck {
    pub status: FormulaeStatus,
    pub left: Option<GrossNumber>,
    pub at: GrossNumber,
    pub right: Option<GrossNumber>,
}

/// The formulae that govern just below, at, and just above `x`. Away from
/// the breakpoint a single formula covers a whole neighborhood, so all three
/// slots hold it.
pub(crate) fn effective_triple<'a>(
    f: &'a PiecewiseFunc,
    x: &GrossNumber,
) -> (&'a Expr, &'a Expr, &'a Expr) {
    if f.single {
        return (&f.at, &f.at, &f.at);
    }
    match x.cmp(&f.breakpoint) {
        std::cmp::Ordering::Less => (&f.left, &f.left, &f.left),
        std::cmp::Ordering::Equal => (&f.left, &f.at, &f.right),
        std::cmp::Ordering::Greater => (&f.right, &f.right, &f.right),
    }
}

/// Evaluate a formula at a point through its cancelled rational form, so that
/// removable factors do not spoil the value; min/max formulae fall back to
/// direct evaluation.
fn eval_formula(e: &Expr, x: &GrossNumber, opts: &EvalOptions) -> Result<GrossNumber, ExprError> {
    match to_rational_form(e) {
        Ok(form) => form.eval(x, &GrossNumber::zero()),
        Err(ExprError::NotRationalForm) => evaluate(e, x, opts),
        Err(other) => Err(other),
    }
}

/// Classify the formulae of `f` at the point `x`. A side formula without a
/// value at `x` (a genuine pole) makes that side discontinuous; when both
/// sides fail, the failure is reported instead.
pub fn formulae_continuity_at(
    f: &PiecewiseFunc,
    x: &GrossNumber,
    opts: &EvalOptions,
) -> Result<FormulaeCheck, DerivError> {
    let (e1, e2, e3) = effective_triple(f, x);
    let at = eval_formula(e2, x, opts).map_err(|inner| DerivError::Eval {
        formula: "f2",
        inner,
    })?;
    let left = eval_formula(e1, x, opts);
    let right = eval_formula(e3, x, opts);
    let (left, right) = match (left, right) {
        (Err(inner), Err(_)) => {
            return Err(DerivError::Eval {
                formula: "f1",
                inner,
            })
        }
        (l, r) => (l.ok(), r.ok()),
    };
    let left_matches = left.as_ref() == Some(&at);
    let right_matches = right.as_ref() == Some(&at);
    let status = match (left_matches, right_matches) {
        (true, true) => FormulaeStatus::Continuous,
        (true, false) => FormulaeStatus::LeftOnly,
        (false, true) => FormulaeStatus::RightOnly,
        (false, false) => FormulaeStatus::Discontinuous,
    };
    Ok(FormulaeCheck {
        status,
        left,
        at,
        right,
    })
}
