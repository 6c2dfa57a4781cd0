//! The scalar layer: arbitrary-precision rationals used as grossdigits.

use num_bigint::BigInt;

/// Exact rational scalar. Always stored reduced, with a positive denominator
/// and canonical zero `0/1` (guaranteed by the backing implementation).
pub type Rational = num_rational::BigRational;

/// Rational from a machine integer.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Rational from a numerator/denominator pair. Panics on a zero denominator.
pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}
