//! Relative differences and one-sided derivatives.
//!
//! The left and right relative differences of a formula f are the exact
//! factorizations
//!
//! ```text
//! f(x) − f(x−l) = l·f⁻(x,l)        f(x+r) − f(x) = r·f⁺(x,r)
//! ```
//!
//! valid for every step, not only small ones. Setting the step to zero in the
//! factored form — an ordinary substitution, not a limit — yields the
//! one-sided derivatives f⁻(x) and f⁺(x).

use gross_core::{GrossNumber, Rational};
use gross_expr::{
    evaluate, rational_form_with, to_rational_form, EvalOptions, Expr, ExprError, PiecewiseFunc,
    Poly2, RationalForm,
};

use crate::error::DerivError;

/// Which side of the point the step lies on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

impl Side {
    /// The formula label used in diagnostics.
    pub(crate) fn formula(&self) -> &'static str {
        match self {
            Side::Left => "f1",
            Side::Right => "f3",
        }
    }

    /// The conventional symbol for this side's step.
    pub fn step_symbol(&self) -> &'static str {
        match self {
            Side::Left => "l",
            Side::Right => "r",
        }
    }
}

/// A factored relative difference: `form` is f⁻(x,l) or f⁺(x,r) as a rational
/// function of the point and the step.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelDiff {
    pub side: Side,
    pub form: RationalForm,
}

/// The relative difference of the side formula of `f` around its breakpoint:
/// the left one uses the formula below the breakpoint, the right one the
/// formula above it.
pub fn relative_difference(f: &PiecewiseFunc, side: Side) -> Result<RelDiff, DerivError> {
    let formula = match side {
        Side::Left => &f.left,
        Side::Right => &f.right,
    };
    relative_difference_of(formula, side)
}

/// The relative difference of one bare formula.
pub(crate) fn relative_difference_of(e: &Expr, side: Side) -> Result<RelDiff, DerivError> {
    let wrap = |inner: ExprError| DerivError::Eval {
        formula: side.formula(),
        inner,
    };
    let at_x = to_rational_form(e).map_err(wrap)?;
    let shifted_target = match side {
        Side::Left => RationalForm::var_minus_h(),
        Side::Right => RationalForm::var_plus_h(),
    };
    let shifted = rational_form_with(e, &shifted_target).map_err(wrap)?;
    let delta = match side {
        Side::Left => at_x.sub(&shifted).map_err(wrap)?,
        Side::Right => shifted.sub(&at_x).map_err(wrap)?,
    };
    let form = delta
        .factor_h_from_numerator()
        .ok_or(DerivError::NotFactorable)?;
    verify_factorization(e, side, &form)?;
    Ok(RelDiff { side, form })
}

/// Re-check the factorization identity f(x±h) − f(x) = ±h·form(x,h) at 20
/// sample points. Points where the function or the form has a pole are
/// skipped; a clean evaluation that disagrees is a factorization failure.
fn verify_factorization(e: &Expr, side: Side, form: &RationalForm) -> Result<(), DerivError> {
    let opts = EvalOptions::default();
    let mut state: u64 = 0x853c_49e6_748f_ea9b;
    let mut draw = |span: u64| {
        state = state
            .wrapping_mul(6_364_136_223_846_793_005)
            .wrapping_add(1_442_695_040_888_963_407);
        (state >> 33) % span
    };
    let mut checked = 0;
    for _ in 0..400 {
        if checked >= 20 {
            break;
        }
        let x0 = Rational::new(
            (draw(49) as i64 - 24).into(),
            (draw(5) as i64 + 1).into(),
        );
        let h0 = Rational::new(
            (draw(9) as i64 + 1).into(),
            (draw(7) as i64 + 1).into(),
        );
        let x = GrossNumber::from_rational(x0);
        let h = GrossNumber::from_rational(h0);
        let other = match side {
            Side::Left => &x - &h,
            Side::Right => &x + &h,
        };
        let (fx, fo) = match (evaluate(e, &x, &opts), evaluate(e, &other, &opts)) {
            (Ok(a), Ok(b)) => (a, b),
            _ => continue,
        };
        let lhs = match side {
            Side::Left => &fx - &fo,
            Side::Right => &fo - &fx,
        };
        let rhs = match form.eval(&x, &h) {
            Ok(v) => v * &h,
            Err(_) => continue,
        };
        if lhs != rhs {
            return Err(DerivError::NotFactorable);
        }
        checked += 1;
    }
    Ok(())
}

/// The form with the step set to zero, i.e. the one-sided derivative as a
/// rational function of x alone.
pub(crate) fn side_form(rd: &RelDiff) -> Result<RationalForm, DerivError> {
    rd.form
        .at_h_zero()
        .map_err(|_| DerivError::UndefinedAtZero)
}

/// The one-sided derivative f⁻(x) or f⁺(x) as an expression in x.
pub fn side_derivative(rd: &RelDiff) -> Result<Expr, DerivError> {
    Ok(form_to_expr(&side_form(rd)?))
}

/// The slope discrepancy: the relative difference minus the derivative
/// expression, still a function of the point and the step. For f = x² on the
/// right this is exactly r; for any linear formula it is zero.
pub fn tilde(rd: &RelDiff, d: &Expr) -> Result<RationalForm, DerivError> {
    let wrap = |inner: ExprError| DerivError::Eval {
        formula: rd.side.formula(),
        inner,
    };
    let d_form = to_rational_form(d).map_err(wrap)?;
    rd.form.sub(&d_form).map_err(wrap)
}

/// An `h`-free polynomial as an expression, highest powers first (matching
/// the rendered text).
fn poly_to_expr(p: &Poly2) -> Expr {
    let mut acc: Option<Expr> = None;
    for ((deg_x, deg_h), coeff) in p.monomials().collect::<Vec<_>>().into_iter().rev() {
        debug_assert_eq!(*deg_h, 0, "only step-free forms become expressions");
        let power = match deg_x {
            0 => None,
            1 => Some(Expr::Var),
            d => Some(Expr::Pow(Box::new(Expr::Var), *d as i32)),
        };
        let term = match power {
            None => Expr::Const(coeff.clone()),
            Some(p) if coeff == &GrossNumber::one() => p,
            Some(p) => Expr::Mul(Box::new(Expr::Const(coeff.clone())), Box::new(p)),
        };
        acc = Some(match acc {
            None => term,
            Some(sum) => Expr::Add(Box::new(sum), Box::new(term)),
        });
    }
    acc.unwrap_or(Expr::Const(GrossNumber::zero()))
}

/// A step-free rational form as an expression in x.
pub(crate) fn form_to_expr(f: &RationalForm) -> Expr {
    let numer = poly_to_expr(f.numer());
    if f.denom() == &Poly2::one() {
        numer
    } else {
        Expr::Div(Box::new(numer), Box::new(poly_to_expr(f.denom())))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use gross_expr::{parse_expr, parse_number};

    fn diff(text: &str, side: Side) -> RelDiff {
        relative_difference_of(&parse_expr(text).unwrap(), side).unwrap()
    }

    #[test]
    fn squares_factor_to_their_textbook_forms() {
        let right = diff("x^2", Side::Right);
        assert_eq!(right.form.render("x", "r"), "2*x + r");
        let left = diff("x^2", Side::Left);
        assert_eq!(left.form.render("x", "l"), "2*x - l");
    }

    #[test]
    fn reciprocal_scalings_factor_through_their_poles() {
        let right = diff("25*x^-1", Side::Right);
        assert_eq!(right.form.render("x", "r"), "-25/(x^2 + x*r)");
    }

    #[test]
    fn side_derivatives_substitute_step_zero() {
        let d = side_derivative(&diff("x^2", Side::Right)).unwrap();
        assert_eq!(d.to_string(), "2*x");
        let d = side_derivative(&diff("x^2", Side::Left)).unwrap();
        assert_eq!(d.to_string(), "2*x");
        let d = side_derivative(&diff("25*x^-1", Side::Right)).unwrap();
        assert_eq!(d.to_string(), "(-25)/(x^2)");
        let opts = EvalOptions::default();
        let at = evaluate(&d, &parse_number("5").unwrap(), &opts).unwrap();
        assert_eq!(at, parse_number("-1").unwrap());
    }

    #[test]
    fn constant_relative_differences_come_from_linear_formulae() {
        let left = diff("-x", Side::Left);
        assert_eq!(left.form.render("x", "l"), "-1");
        let right = diff("x + 7", Side::Right);
        assert_eq!(right.form.render("x", "r"), "1");
    }

    #[test]
    fn gross_coefficients_ride_along() {
        let g1 = diff("G^-1*x^2", Side::Right);
        assert_eq!(side_derivative(&g1).unwrap().to_string(), "2G^-1*x");
        let g2 = diff("G*x^2", Side::Left);
        assert_eq!(side_derivative(&g2).unwrap().to_string(), "2G*x");
    }

    #[test]
    fn discrepancy_terms_vanish_exactly_for_lines() {
        let rd = diff("3*x - 4", Side::Right);
        let d = side_derivative(&rd).unwrap();
        let t = tilde(&rd, &d).unwrap();
        assert!(t.is_zero());
    }

    #[test]
    fn square_discrepancy_is_the_step_itself() {
        let rd = diff("x^2", Side::Right);
        let d = side_derivative(&rd).unwrap();
        let t = tilde(&rd, &d).unwrap();
        assert_eq!(t.render("x", "r"), "r");
    }

    #[test]
    fn cube_discrepancy_matches_the_binomial_tail() {
        let rd = diff("x^3", Side::Right);
        let d = side_derivative(&rd).unwrap();
        let t = tilde(&rd, &d).unwrap();
        // 3x² + 3xr + r² minus 3x² leaves the binomial tail.
        assert_eq!(t.render("x", "r"), "3*x*r + r^2");
    }

    #[test]
    fn min_formulae_have_no_rational_difference() {
        let err =
            relative_difference_of(&parse_expr("min(x, 0 - x)").unwrap(), Side::Left).unwrap_err();
        assert_eq!(err.name(), "NotRationalForm");
    }

    #[test]
    fn piecewise_sides_pick_their_own_formula() {
        let f = gross_expr::parse_function("piece x < 0: -x; at 0: 0; x > 0: x").unwrap();
        let left = relative_difference(&f, Side::Left).unwrap();
        let right = relative_difference(&f, Side::Right).unwrap();
        assert_eq!(left.form.render("x", "l"), "-1");
        assert_eq!(right.form.render("x", "r"), "1");
    }
}
