//! Continuity and discreteness classification for grids and for functions
//! sampled on grids.
//!
//! Whether a set of points "looks continuous" depends on the unit of measure
//! an observer uses: gaps of ①⁻¹ are invisible in the ambient unit but huge
//! when distances are expressed in the unit ①⁻³. Both the set-level and the
//! function-level verdicts therefore take the unit as an explicit argument
//! and classify exact converted differences instead of taking limits.

use gross_core::{GrossNumber, NumberClass};
use gross_expr::{EvalOptions, PiecewiseFunc};
use num_traits::ToPrimitive;

use crate::error::TopoError;
use crate::grid::{convert_unit, Grid, Unit};

/// Default cap on the number of grid points `func_continuity_over` will
/// enumerate when no monotonicity hint is given.
pub const DEFAULT_BUDGET: usize = 10_000;

/// Set-level classification of a grid in a unit of measure.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SetKind {
    /// Every gap is infinitesimal in the chosen unit.
    Continuous,
    /// No gap is infinitesimal in the chosen unit.
    Discrete,
    /// Some gaps are infinitesimal and some are not.
    Mixed,
}

impl std::fmt::Display for SetKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let word = match self {
            SetKind::Continuous => "continuous",
            SetKind::Discrete => "discrete",
            SetKind::Mixed => "mixed",
        };
        f.write_str(word)
    }
}

/// The verdict for a set: its kind and, when continuous, the order — the
/// leading grosspower of the largest converted gap (e.g. −1 for gaps of ①⁻¹).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContinuityVerdict {
    pub kind: SetKind,
    pub order: Option<GrossNumber>,
}

/// Classify a list of positive converted gaps. Grids are uniform so callers
/// pass a single gap, but the rule is stated gap-by-gap.
pub(crate) fn classify_gaps(gaps: &[GrossNumber]) -> ContinuityVerdict {
    let infinitesimal = |g: &GrossNumber| g.classify() == NumberClass::Infinitesimal;
    let kind = if gaps.iter().all(infinitesimal) {
        SetKind::Continuous
    } else if !gaps.iter().any(infinitesimal) {
        SetKind::Discrete
    } else {
        SetKind::Mixed
    };
    let order = match kind {
        SetKind::Continuous => {
            let largest = gaps.iter().max().expect("at least one gap");
            Some(largest.leading().expect("gaps are positive").power.clone())
        }
        _ => None,
    };
    ContinuityVerdict { kind, order }
}

/// Classify the grid in the unit `u`: continuous when its step, expressed in
/// `u`, is infinitesimal; discrete when it is not.
pub fn set_continuity(g: &Grid, u: &Unit) -> Result<ContinuityVerdict, TopoError> {
    let gap = convert_unit(g.step(), &Unit::ambient(), u)?;
    Ok(classify_gaps(&[gap]))
}

/// One side of a point check: the neighbor used, the function difference
/// expressed in the output unit, and whether that difference is negligible.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SideCheck {
    pub neighbor: GrossNumber,
    pub difference: GrossNumber,
    pub continuous: bool,
}

/// Function continuity at one grid point, side by side. Endpoints carry only
/// their inward side.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointVerdict {
    pub x: GrossNumber,
    pub left: Option<SideCheck>,
    pub right: Option<SideCheck>,
    pub continuous: bool,
}

fn negligible(n: &GrossNumber) -> bool {
    matches!(
        n.classify(),
        NumberClass::Zero | NumberClass::Infinitesimal
    )
}

/// Check whether `f` is continuous at the grid point `x`: the differences
/// f(x) − f(x⁻) and f(x) − f(x⁺), expressed in `y_unit` (default: `u`), must
/// be negligible. The grid itself must be continuous in `u` for the question
/// to make sense.
pub fn func_continuity_at(
    f: &PiecewiseFunc,
    g: &Grid,
    x: &GrossNumber,
    u: &Unit,
    y_unit: Option<&Unit>,
    opts: &EvalOptions,
) -> Result<PointVerdict, TopoError> {
    if set_continuity(g, u)?.kind != SetKind::Continuous {
        return Err(TopoError::GridNotContinuous);
    }
    let (minus, plus) = g.neighbors(x)?;
    let out = y_unit.unwrap_or(u);
    let ambient = Unit::ambient();
    let fx = f.evaluate(x, opts)?;
    let check = |neighbor: GrossNumber| -> Result<SideCheck, TopoError> {
        let fn_ = f.evaluate(&neighbor, opts)?;
        let difference = convert_unit(&(&fx - &fn_), &ambient, out)?;
        let continuous = negligible(&difference);
        Ok(SideCheck {
            neighbor,
            difference,
            continuous,
        })
    };
    let left = match minus {
        Some(nb) => Some(check(nb)?),
        None => None,
    };
    let right = match plus {
        Some(nb) => Some(check(nb)?),
        None => None,
    };
    let continuous = left.as_ref().map_or(true, |s| s.continuous)
        && right.as_ref().map_or(true, |s| s.continuous);
    Ok(PointVerdict {
        x: x.clone(),
        left,
        right,
        continuous,
    })
}

/// Whole-grid verdict with the first failing point, if any.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OverallVerdict {
    pub continuous: bool,
    pub witness: Option<GrossNumber>,
}

/// Check `f` over the whole grid. With `monotone` set, the extreme
/// differences are taken to sit at the endpoints and only those are checked
/// (the right one first, where an increasing function grows fastest).
/// Without the hint every consecutive difference is checked, provided the
/// grid has at most `budget` points.
pub fn func_continuity_over(
    f: &PiecewiseFunc,
    g: &Grid,
    u: &Unit,
    y_unit: Option<&Unit>,
    monotone: bool,
    budget: usize,
    opts: &EvalOptions,
) -> Result<OverallVerdict, TopoError> {
    if monotone {
        for x in [g.b(), g.a()] {
            let verdict = func_continuity_at(f, g, x, u, y_unit, opts)?;
            if !verdict.continuous {
                return Ok(OverallVerdict {
                    continuous: false,
                    witness: Some(x.clone()),
                });
            }
        }
        return Ok(OverallVerdict {
            continuous: true,
            witness: None,
        });
    }
    if set_continuity(g, u)?.kind != SetKind::Continuous {
        return Err(TopoError::GridNotContinuous);
    }
    let gaps = g
        .last_index()
        .as_rational()
        .and_then(|r| r.to_integer().to_usize())
        .filter(|&n| n < budget)
        .ok_or(TopoError::BudgetExceeded)?;
    let out = y_unit.unwrap_or(u);
    let ambient = Unit::ambient();
    let mut prev_x = g.a().clone();
    let mut prev_f = f.evaluate(&prev_x, opts)?;
    for _ in 0..gaps {
        let next_x = &prev_x + g.step();
        let next_f = f.evaluate(&next_x, opts)?;
        let difference = convert_unit(&(&next_f - &prev_f), &ambient, out)?;
        if !negligible(&difference) {
            // The left end of the first oversized gap is the first point at
            // which a side check fails.
            return Ok(OverallVerdict {
                continuous: false,
                witness: Some(prev_x),
            });
        }
        prev_x = next_x;
        prev_f = next_f;
    }
    Ok(OverallVerdict {
        continuous: true,
        witness: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use gross_expr::{parse_expr, parse_function, parse_number};

    fn num(text: &str) -> GrossNumber {
        parse_number(text).unwrap()
    }

    fn grid(a: &str, b: &str, step: &str) -> Grid {
        Grid::new(num(a), num(b), num(step)).unwrap()
    }

    fn unit(text: &str) -> Unit {
        Unit::new(num(text)).unwrap()
    }

    fn square() -> PiecewiseFunc {
        PiecewiseFunc::single(parse_expr("x^2").unwrap())
    }

    #[test]
    fn infinitesimal_steps_make_continuous_sets() {
        let verdict = set_continuity(&grid("0", "1", "G^-1"), &Unit::ambient()).unwrap();
        assert_eq!(verdict.kind, SetKind::Continuous);
        assert_eq!(verdict.order, Some(num("-1")));
    }

    #[test]
    fn the_same_set_is_discrete_in_a_finer_unit() {
        let nu = unit("G^-3");
        let verdict = set_continuity(&grid("0", "1", "G^-1"), &nu).unwrap();
        assert_eq!(verdict.kind, SetKind::Discrete);
        assert_eq!(verdict.order, None);
    }

    #[test]
    fn finite_steps_make_discrete_sets() {
        let verdict = set_continuity(&grid("0", "10", "1"), &Unit::ambient()).unwrap();
        assert_eq!(verdict.kind, SetKind::Discrete);
    }

    #[test]
    fn gap_lists_with_both_kinds_are_mixed() {
        let mixed = classify_gaps(&[num("G^-1"), num("1")]);
        assert_eq!(mixed.kind, SetKind::Mixed);
        assert_eq!(mixed.order, None);

        let fine = classify_gaps(&[num("G^-2"), num("G^-1")]);
        assert_eq!(fine.kind, SetKind::Continuous);
        assert_eq!(fine.order, Some(num("-1")));
    }

    #[test]
    fn squares_are_continuous_at_the_end_of_the_unit_interval() {
        let g = grid("0", "1", "G^-1");
        let verdict = func_continuity_at(
            &square(),
            &g,
            &num("1"),
            &Unit::ambient(),
            None,
            &EvalOptions::default(),
        )
        .unwrap();
        assert!(verdict.continuous);
        let left = verdict.left.unwrap();
        assert_eq!(left.difference, num("2G^-1 - G^-2"));
        assert_eq!(left.neighbor, num("1 - G^-1"));
        assert!(verdict.right.is_none());
    }

    #[test]
    fn squares_jump_at_the_top_of_a_coarse_infinite_grid() {
        let g = grid("G - 1", "G", "G^-1");
        let verdict = func_continuity_at(
            &square(),
            &g,
            &num("G"),
            &Unit::ambient(),
            None,
            &EvalOptions::default(),
        )
        .unwrap();
        assert!(!verdict.continuous);
        assert_eq!(verdict.left.unwrap().difference, num("2 - G^-2"));
    }

    #[test]
    fn refining_the_step_restores_continuity_at_the_top() {
        let g = grid("G - 1", "G", "G^-2");
        let verdict = func_continuity_at(
            &square(),
            &g,
            &num("G"),
            &Unit::ambient(),
            None,
            &EvalOptions::default(),
        )
        .unwrap();
        assert!(verdict.continuous);
        assert_eq!(verdict.left.unwrap().difference, num("2G^-1 - G^-4"));
    }

    #[test]
    fn a_finer_output_unit_flips_the_point_verdict() {
        let g = grid("0", "1", "G^-1");
        let nu = unit("G^-3");
        let verdict = func_continuity_at(
            &square(),
            &g,
            &num("1"),
            &Unit::ambient(),
            Some(&nu),
            &EvalOptions::default(),
        )
        .unwrap();
        assert!(!verdict.continuous);
        assert_eq!(verdict.left.unwrap().difference, num("2G^2 - G"));
    }

    #[test]
    fn function_checks_need_a_continuous_grid() {
        let coarse = grid("0", "10", "1");
        let err = func_continuity_at(
            &square(),
            &coarse,
            &num("1"),
            &Unit::ambient(),
            None,
            &EvalOptions::default(),
        )
        .unwrap_err();
        assert_eq!(err, TopoError::GridNotContinuous);

        let nu = unit("G^-3");
        let err = func_continuity_at(
            &square(),
            &grid("0", "1", "G^-1"),
            &num("1"),
            &nu,
            None,
            &EvalOptions::default(),
        )
        .unwrap_err();
        assert_eq!(err, TopoError::GridNotContinuous);
    }

    #[test]
    fn evaluation_failures_carry_their_own_name() {
        let reciprocal = PiecewiseFunc::single(parse_expr("x^-1").unwrap());
        let err = func_continuity_at(
            &reciprocal,
            &grid("0", "1", "G^-1"),
            &num("0"),
            &Unit::ambient(),
            None,
            &EvalOptions::default(),
        )
        .unwrap_err();
        assert_eq!(err.name(), "DivisionByZero");
    }

    #[test]
    fn monotone_hints_check_the_endpoints() {
        let over = func_continuity_over(
            &square(),
            &grid("0", "1", "G^-1"),
            &Unit::ambient(),
            None,
            true,
            DEFAULT_BUDGET,
            &EvalOptions::default(),
        )
        .unwrap();
        assert!(over.continuous);
        assert_eq!(over.witness, None);

        let over = func_continuity_over(
            &square(),
            &grid("G - 1", "G", "G^-1"),
            &Unit::ambient(),
            None,
            true,
            DEFAULT_BUDGET,
            &EvalOptions::default(),
        )
        .unwrap();
        assert!(!over.continuous);
        assert_eq!(over.witness, Some(num("G")));
    }

    #[test]
    fn small_grids_are_enumerated_in_full() {
        let constant = PiecewiseFunc::single(parse_expr("5").unwrap());
        let over = func_continuity_over(
            &constant,
            &grid("0", "3G^-1", "G^-1"),
            &Unit::ambient(),
            None,
            false,
            DEFAULT_BUDGET,
            &EvalOptions::default(),
        )
        .unwrap();
        assert!(over.continuous);

        let jump = parse_function("piece x < 2G^-1: 0; at 2G^-1: 1; x > 2G^-1: 1").unwrap();
        let over = func_continuity_over(
            &jump,
            &grid("0", "4G^-1", "G^-1"),
            &Unit::ambient(),
            None,
            false,
            DEFAULT_BUDGET,
            &EvalOptions::default(),
        )
        .unwrap();
        assert!(!over.continuous);
        assert_eq!(over.witness, Some(num("G^-1")));
    }

    #[test]
    fn unenumerable_grids_need_the_hint() {
        let err = func_continuity_over(
            &square(),
            &grid("0", "1", "G^-1"),
            &Unit::ambient(),
            None,
            false,
            DEFAULT_BUDGET,
            &EvalOptions::default(),
        )
        .unwrap_err();
        assert_eq!(err, TopoError::BudgetExceeded);

        let err = func_continuity_over(
            &square(),
            &grid("0", "20001G^-1", "G^-1"),
            &Unit::ambient(),
            None,
            false,
            DEFAULT_BUDGET,
            &EvalOptions::default(),
        )
        .unwrap_err();
        assert_eq!(err, TopoError::BudgetExceeded);
    }
}
