//! Uniform discrete domains and units of measure.
//!
//! A grid is the set of numerals a + i·step for integer-valued i from 0 to
//! (b − a)/step. Steps may be infinitesimal, so a grid over a finite span can
//! hold infinitely many points — the point count is itself an exact number.

use std::cmp::Ordering;

use gross_core::{GrossNumber, DEFAULT_MAX_TERMS};

use crate::error::TopoError;

/// True when every grosspower of `n` is nonnegative and the finite digit is a
/// whole number. Digits on strictly positive grosspowers are accepted as-is:
/// the infinite unit is divisible by every finite natural, so e.g. half of it
/// is still integer-valued.
pub(crate) fn integer_valued(n: &GrossNumber) -> bool {
    let zero = GrossNumber::zero();
    n.terms().iter().all(|t| match t.power.cmp(&zero) {
        Ordering::Less => false,
        Ordering::Equal => t.digit.is_integer(),
        Ordering::Greater => true,
    })
}

/// The uniform grid {a + i·step | 0 ≤ i ≤ (b − a)/step}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Grid {
    a: GrossNumber,
    b: GrossNumber,
    step: GrossNumber,
    /// (b − a)/step, the index of the last point.
    last_index: GrossNumber,
}

impl Grid {
    /// Build a grid after checking that a < b, the step is positive, and the
    /// span is a whole (possibly infinite) number of steps.
    pub fn new(a: GrossNumber, b: GrossNumber, step: GrossNumber) -> Result<Grid, TopoError> {
        if a >= b {
            return Err(TopoError::BadGrid(
                "the left endpoint must lie below the right one".into(),
            ));
        }
        if step <= GrossNumber::zero() {
            return Err(TopoError::BadGrid("the step must be positive".into()));
        }
        let span = &b - &a;
        let d = span
            .divide(&step, DEFAULT_MAX_TERMS)
            .map_err(|e| TopoError::BadGrid(e.to_string()))?;
        if !d.exact || !integer_valued(&d.quotient) {
            return Err(TopoError::BadGrid(
                "the span must be a whole number of steps".into(),
            ));
        }
        Ok(Grid {
            a,
            b,
            step,
            last_index: d.quotient,
        })
    }

    /// Left endpoint.
    pub fn a(&self) -> &GrossNumber {
        &self.a
    }

    /// Right endpoint.
    pub fn b(&self) -> &GrossNumber {
        &self.b
    }

    /// Distance between consecutive points.
    pub fn step(&self) -> &GrossNumber {
        &self.step
    }

    /// Index of the last point, i.e. the number of gaps (b − a)/step.
    pub fn last_index(&self) -> &GrossNumber {
        &self.last_index
    }

    /// The grid index of `x`, or `OffGrid` when `x` is not one of the grid's
    /// numerals.
    pub fn index_of(&self, x: &GrossNumber) -> Result<GrossNumber, TopoError> {
        let offset = x - &self.a;
        let d = offset
            .divide(&self.step, DEFAULT_MAX_TERMS)
            .map_err(|_| TopoError::OffGrid)?;
        let i = d.quotient;
        let on_grid = d.exact
            && integer_valued(&i)
            && i >= GrossNumber::zero()
            && i <= self.last_index;
        if on_grid {
            Ok(i)
        } else {
            Err(TopoError::OffGrid)
        }
    }

    /// Closest left and right neighbors of a grid point; an endpoint has only
    /// its inward neighbor.
    pub fn neighbors(
        &self,
        x: &GrossNumber,
    ) -> Result<(Option<GrossNumber>, Option<GrossNumber>), TopoError> {
        let i = self.index_of(x)?;
        let minus = (i > GrossNumber::zero()).then(|| x - &self.step);
        let plus = (i < self.last_index).then(|| x + &self.step);
        Ok((minus, plus))
    }
}

/// A unit of measure, stored as its positive factor relative to the ambient
/// unit (the unit whose factor is 1).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Unit {
    factor: GrossNumber,
}

impl Unit {
    /// A unit from its factor; the factor must be positive.
    pub fn new(factor: GrossNumber) -> Result<Unit, TopoError> {
        if factor <= GrossNumber::zero() {
            return Err(TopoError::BadUnit);
        }
        Ok(Unit { factor })
    }

    /// The ambient unit itself (factor 1).
    pub fn ambient() -> Unit {
        Unit {
            factor: GrossNumber::one(),
        }
    }

    /// The factor relative to the ambient unit.
    pub fn factor(&self) -> &GrossNumber {
        &self.factor
    }
}

/// Express `v`, currently measured in `from`, in the unit `to`. The change of
/// scale must be exact.
pub fn convert_unit(v: &GrossNumber, from: &Unit, to: &Unit) -> Result<GrossNumber, TopoError> {
    let scaled = v * &from.factor;
    let d = scaled
        .divide(&to.factor, DEFAULT_MAX_TERMS)
        .map_err(|_| TopoError::InexactConversion)?;
    if !d.exact {
        return Err(TopoError::InexactConversion);
    }
    Ok(d.quotient)
}

#[cfg(test)]
mod tests {
    use super::*;
    use gross_expr::parse_number;

    fn num(text: &str) -> GrossNumber {
        parse_number(text).unwrap()
    }

    fn grid(a: &str, b: &str, step: &str) -> Grid {
        Grid::new(num(a), num(b), num(step)).unwrap()
    }

    #[test]
    fn spans_must_be_whole_numbers_of_steps() {
        assert!(matches!(
            Grid::new(num("0"), num("1"), num("2/3")).unwrap_err(),
            TopoError::BadGrid(_)
        ));
        assert!(matches!(
            Grid::new(num("1"), num("0"), num("1/2")).unwrap_err(),
            TopoError::BadGrid(_)
        ));
        assert!(matches!(
            Grid::new(num("0"), num("1"), num("0")).unwrap_err(),
            TopoError::BadGrid(_)
        ));
        assert_eq!(grid("0", "1", "G^-1").last_index(), &num("G"));
        assert_eq!(grid("G - 1", "G", "G^-2").last_index(), &num("G^2"));
    }

    #[test]
    fn interior_points_have_two_neighbors() {
        let g = grid("0", "1", "1/2");
        let (minus, plus) = g.neighbors(&num("1/2")).unwrap();
        assert_eq!(minus, Some(num("0")));
        assert_eq!(plus, Some(num("1")));
    }

    #[test]
    fn endpoints_have_one_neighbor() {
        let g = grid("0", "1", "G^-1");
        let (minus, plus) = g.neighbors(&num("1")).unwrap();
        assert_eq!(minus, Some(num("1 - G^-1")));
        assert_eq!(plus, None);

        let fine = grid("G - 1", "G", "G^-2");
        let (minus, plus) = fine.neighbors(&num("G")).unwrap();
        assert_eq!(minus, Some(num("G - G^-2")));
        assert_eq!(plus, None);

        let (minus, plus) = fine.neighbors(&num("G - 1")).unwrap();
        assert_eq!(minus, None);
        assert_eq!(plus, Some(num("G - 1 + G^-2")));
    }

    #[test]
    fn points_off_the_grid_are_rejected() {
        let g = grid("0", "1", "1/2");
        assert_eq!(g.neighbors(&num("1/4")).unwrap_err(), TopoError::OffGrid);
        assert_eq!(g.neighbors(&num("2")).unwrap_err(), TopoError::OffGrid);
        assert_eq!(g.neighbors(&num("-1/2")).unwrap_err(), TopoError::OffGrid);
        assert_eq!(g.index_of(&num("G^-1")).unwrap_err(), TopoError::OffGrid);
    }

    #[test]
    fn conversion_rescales_by_the_factor_ratio() {
        let mu = Unit::ambient();
        let nu = Unit::new(num("G^-3")).unwrap();
        assert_eq!(convert_unit(&num("G^-1"), &mu, &nu).unwrap(), num("G^2"));
        assert_eq!(convert_unit(&num("G"), &nu, &mu).unwrap(), num("G^-2"));
        let v = num("3G + 1/2");
        assert_eq!(convert_unit(&v, &mu, &mu).unwrap(), v);
    }

    #[test]
    fn conversions_that_do_not_terminate_are_inexact() {
        let mu = Unit::ambient();
        let awkward = Unit::new(num("G + 1")).unwrap();
        assert_eq!(
            convert_unit(&num("1"), &mu, &awkward).unwrap_err(),
            TopoError::InexactConversion
        );
    }

    #[test]
    fn units_must_be_positive() {
        assert_eq!(Unit::new(num("0")).unwrap_err(), TopoError::BadUnit);
        assert_eq!(Unit::new(num("-G^-3")).unwrap_err(), TopoError::BadUnit);
    }

    #[test]
    fn integer_valued_accepts_divisible_infinite_parts() {
        assert!(integer_valued(&num("G")));
        assert!(integer_valued(&num("0.5G + 3")));
        assert!(integer_valued(&num("0")));
        assert!(!integer_valued(&num("1/2")));
        assert!(!integer_valued(&num("G + G^-1")));
    }
}
