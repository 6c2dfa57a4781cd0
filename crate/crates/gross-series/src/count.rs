//! Exact point counts for intervals, rays, and lines under a chosen family
//! of coordinate numerals. Counting is an observation: the answer depends on
//! which numerals may name a point, not on the point set alone.

use gross_core::{GrossNumber, Rational};

use crate::error::SeriesError;
use crate::expsum::ExpSum;

/// The families of coordinate numerals whose point counts have closed forms.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PointKind {
    /// Fractions i/① in [0, 1): ① points.
    UnitIntervalGrossone,
    /// The ray x ≥ 0 split into unit intervals of ① such points each: ①².
    RayGrossone,
    /// Both rays: 2①² points.
    LineGrossone,
    /// Both rays plus a separate numeral for zero: 2①² + 1 points.
    LineGrossoneClosed,
    /// Radix-b fractional strings of up to ① digits in [0, 1): b^① points.
    UnitIntervalPositional,
    /// 2① unit intervals of b^① points each: 2①·b^① points.
    LinePositionalUnits,
    /// Radix-b strings with ① integer and ① fractional digits: b^(2①).
    RealsPositional,
}

impl PointKind {
    /// Parse the command-line spelling of a kind.
    pub fn parse(text: &str) -> Option<PointKind> {
        match text {
            "unit_interval_grossone" => Some(PointKind::UnitIntervalGrossone),
            "ray_grossone" => Some(PointKind::RayGrossone),
            "line_grossone" => Some(PointKind::LineGrossone),
            "line_grossone_closed" => Some(PointKind::LineGrossoneClosed),
            "unit_interval_positional" => Some(PointKind::UnitIntervalPositional),
            "line_positional_units" => Some(PointKind::LinePositionalUnits),
            "reals_positional" => Some(PointKind::RealsPositional),
            _ => None,
        }
    }

    /// True when the count depends on a positional radix.
    pub fn needs_radix(&self) -> bool {
        matches!(
            self,
            PointKind::UnitIntervalPositional
                | PointKind::LinePositionalUnits
                | PointKind::RealsPositional
        )
    }
}

/// The number of expressible points for the given numeral family; positional
/// kinds need a radix of at least 2.
pub fn count_points(kind: PointKind, radix: Option<u32>) -> Result<ExpSum, SeriesError> {
    let g = GrossNumber::grossone;
    let base = || -> Result<Rational, SeriesError> {
        match radix {
            Some(b) if b >= 2 => Ok(Rational::from_integer(b.into())),
            _ => Err(SeriesError::BadRadix),
        }
    };
    match kind {
        PointKind::UnitIntervalGrossone => Ok(ExpSum::from_number(g())),
        PointKind::RayGrossone => Ok(ExpSum::from_number(g().pow_nat(2))),
        PointKind::LineGrossone => Ok(ExpSum::from_number(
            g().pow_nat(2).scale(&Rational::from_integer(2.into())),
        )),
        PointKind::LineGrossoneClosed => Ok(ExpSum::from_number(
            g().pow_nat(2).scale(&Rational::from_integer(2.into())) + GrossNumber::one(),
        )),
        PointKind::UnitIntervalPositional => {
            Ok(ExpSum::term(GrossNumber::one(), base()?, g()))
        }
        PointKind::LinePositionalUnits => Ok(ExpSum::term(
            g().scale(&Rational::from_integer(2.into())),
            base()?,
            g(),
        )),
        PointKind::RealsPositional => Ok(ExpSum::term(
            GrossNumber::one(),
            base()?,
            g().scale(&Rational::from_integer(2.into())),
        )),
    }
}
