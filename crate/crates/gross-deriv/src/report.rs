//! Exact derivatives of piecewise functions.
//!
//! Both one-sided derivatives are computed as exact relative differences
//! with the step substituted by zero — no limits are taken anywhere. When
//! the two sides agree (as forms, or at least as values at the point) the
//! derivative is unique; otherwise the function has a corner there and the
//! report carries the closed interval spanned by the two side values.

use gross_core::GrossNumber;
use gross_expr::{EvalOptions, Expr, PiecewiseFunc, RationalForm};

use crate::error::DerivError;
use crate::formulae::{effective_triple, formulae_continuity_at, FormulaeStatus};
use crate::reldiff::{form_to_expr, relative_difference_of, side_form, Side};

/// What the two one-sided derivatives amount to at the point.
#[derive(Clone, Debug, PartialEq)]
pub enum DerivOutcome {
    /// Both sides agree: `form` differentiates the function near the point
    /// and `value` is the derivative there.
    Unique { form: Expr, value: GrossNumber },
    /// The sides disagree; every slope between the two side values is
    /// attained, so the derivative is the closed interval [lo, hi].
    Interval { lo: GrossNumber, hi: GrossNumber },
}

/// The outcome plus the per-side diagnostics that produced it.
#[derive(Clone, Debug)]
pub struct DerivReport {
    pub outcome: DerivOutcome,
    pub status: FormulaeStatus,
    pub left_form: RationalForm,
    pub right_form: RationalForm,
    pub left_value: GrossNumber,
    pub right_value: GrossNumber,
}

/// Differentiate `f` at `x`. The formulae must be continuous at the point:
/// strictly (all three formulae agree there) by default, or — with `relaxed`
/// — just the two side formulae agreeing with each other, which tolerates a
/// misassigned point value. A side formula with a pole at the point has no
/// slope there, so the check failing on one side is already fatal.
pub fn derivative_report(
    f: &PiecewiseFunc,
    x: &GrossNumber,
    relaxed: bool,
    opts: &EvalOptions,
) -> Result<DerivReport, DerivError> {
    let check = formulae_continuity_at(f, x, opts)?;
    let admissible = if relaxed {
        match (&check.left, &check.right) {
            (Some(l), Some(r)) => l == r,
            _ => false,
        }
    } else {
        check.status == FormulaeStatus::Continuous
    };
    if !admissible {
        return Err(DerivError::FormulaeDiscontinuous);
    }

    let (e1, _, e3) = effective_triple(f, x);
    let left = relative_difference_of(e1, Side::Left)?;
    let right = relative_difference_of(e3, Side::Right)?;
    let left_form = side_form(&left)?;
    let right_form = side_form(&right)?;
    let zero = GrossNumber::zero();
    let left_value = left_form
        .eval(x, &zero)
        .map_err(|inner| DerivError::Eval {
            formula: "f1",
            inner,
        })?;
    let right_value = right_form
        .eval(x, &zero)
        .map_err(|inner| DerivError::Eval {
            formula: "f3",
            inner,
        })?;

    let outcome = if left_form.equivalent(&right_form) || left_value == right_value {
        DerivOutcome::Unique {
            form: form_to_expr(&left_form),
            value: left_value.clone(),
        }
    } else {
        let (lo, hi) = if left_value <= right_value {
            (left_value.clone(), right_value.clone())
        } else {
            (right_value.clone(), left_value.clone())
        };
        DerivOutcome::Interval { lo, hi }
    };

    Ok(DerivReport {
        outcome,
        status: check.status,
        left_form,
        right_form,
        left_value,
        right_value,
    })
}
