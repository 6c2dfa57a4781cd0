//! Piecewise function definitions: three formulae around a breakpoint.

use gross_core::GrossNumber;

use crate::error::ExprError;
use crate::expr::{evaluate, EvalOptions, Expr};

/// A function given by a left formula (below the breakpoint), a point formula
/// (at it), and a right formula (above it) — or by a single formula used on
/// all three regions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PiecewiseFunc {
    pub left: Expr,
    pub at: Expr,
    pub right: Expr,
    pub breakpoint: GrossNumber,
    /// True when built from the bare-expression shorthand (f1 = f2 = f3).
    pub single: bool,
}

impl PiecewiseFunc {
    /// Single-formula definition: the same expression everywhere.
    pub fn single(e: Expr) -> Self {
        PiecewiseFunc {
            left: e.clone(),
            at: e.clone(),
            right: e,
            breakpoint: GrossNumber::zero(),
            single: true,
        }
    }

    /// Three-formula definition around `breakpoint`.
    pub fn pieces(left: Expr, breakpoint: GrossNumber, at: Expr, right: Expr) -> Self {
        PiecewiseFunc {
            left,
            at,
            right,
            breakpoint,
            single: false,
        }
    }

    /// The formula governing the region containing `x`.
    pub fn formula_at(&self, x: &GrossNumber) -> &Expr {
        if self.single {
            return &self.at;
        }
        match x.cmp(&self.breakpoint) {
            std::cmp::Ordering::Less => &self.left,
            std::cmp::Ordering::Equal => &self.at,
            std::cmp::Ordering::Greater => &self.right,
        }
    }

    /// Evaluate the function at `x` using the region's formula.
    pub fn evaluate(&self, x: &GrossNumber, opts: &EvalOptions) -> Result<GrossNumber, ExprError> {
        evaluate(self.formula_at(x), x, opts)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_function;
    use gross_core::rational::rat;

    #[test]
    fn evaluation_selects_the_region_formula() {
        let f = parse_function("piece x<0: -x; at 0: 0; x>0: x").unwrap();
        let opts = EvalOptions::default();
        let minus_two = GrossNumber::from_int(-2);
        assert_eq!(f.evaluate(&minus_two, &opts).unwrap(), GrossNumber::from_int(2));
        assert_eq!(f.evaluate(&GrossNumber::zero(), &opts).unwrap(), GrossNumber::zero());
        assert_eq!(
            f.evaluate(&GrossNumber::from_int(3), &opts).unwrap(),
            GrossNumber::from_int(3)
        );
    }

    #[test]
    fn infinitesimal_points_fall_on_the_correct_side() {
        let f = parse_function("piece x<0: -x; at 0: 0; x>0: x").unwrap();
        let opts = EvalOptions::default();
        let dust = GrossNumber::monomial(rat(1), GrossNumber::from_int(-1)).unwrap();
        assert_eq!(f.evaluate(&dust, &opts).unwrap(), dust);
        assert_eq!(f.evaluate(&-&dust, &opts).unwrap(), dust);
    }
}
