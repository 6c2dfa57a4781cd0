//! How far a step-by-step counting process can reach.

use gross_core::GrossNumber;

/// The farthest numeral a complete counting process can name when it starts
/// at `start` and names one numeral per step. A complete process runs for ①
/// steps, so starting at 1 it reaches exactly ①, and starting later shifts
/// the endpoint by the same amount: start + ① − 1. `start` is expected to be
/// integer-valued.
pub fn sequence_reach(start: &GrossNumber) -> GrossNumber {
    start + &(GrossNumber::grossone() - GrossNumber::one())
}

#[cfg(test)]
mod tests {
    use super::*;
    use gross_expr::parse_number;

    fn num(text: &str) -> GrossNumber {
        parse_number(text).unwrap()
    }

    #[test]
    fn counting_from_one_reaches_the_unit_itself() {
        assert_eq!(sequence_reach(&num("1")), num("G"));
    }

    #[test]
    fn later_starts_shift_the_endpoint() {
        assert_eq!(sequence_reach(&num("3")), num("G + 2"));
        assert_eq!(sequence_reach(&num("0.5G + 1")), num("1.5G"));
    }
}
