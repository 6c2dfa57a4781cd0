//! Closed forms for arithmetic, geometric, and repeated sums with finite or
//! infinite item counts, plus exact repeating-decimal differences.

use gross_core::{GrossNumber, Rational};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::SeriesError;
use crate::expsum::{integer_exponent, rational_pow, ExpSum};

/// A usable item count: positive, with an integer finite part and no
/// infinitesimal part. Digits of positive grosspowers are accepted as-is,
/// since the infinite unit is divisible by every finite natural.
fn require_integral(n: &GrossNumber) -> Result<(), SeriesError> {
    let zero = GrossNumber::zero();
    for t in n.terms() {
        match t.power.cmp(&zero) {
            std::cmp::Ordering::Less => return Err(SeriesError::NotIntegerCount),
            std::cmp::Ordering::Equal => {
                if !t.digit.is_integer() {
                    return Err(SeriesError::NotIntegerCount);
                }
            }
            std::cmp::Ordering::Greater => {}
        }
    }
    Ok(())
}

fn require_count(n: &GrossNumber) -> Result<(), SeriesError> {
    if *n <= GrossNumber::zero() {
        return Err(SeriesError::NonPositiveCount);
    }
    require_integral(n)
}

/// Σ_{i=1}^{n} (a1 + (i−1)·d) = (n/2)(2·a1 + (n−1)·d), valid for finite and
/// infinite integer-valued n.
pub fn arithmetic_sum(
    a1: &GrossNumber,
    d: &GrossNumber,
    n: &GrossNumber,
) -> Result<GrossNumber, SeriesError> {
    require_count(n)?;
    let twice_mean_sum = a1.scale(&Rational::from_integer(2.into()))
        + d * (n - GrossNumber::one());
    Ok((n * twice_mean_sum).scale(&Rational::new(1.into(), 2.into())))
}

/// `item` added to itself `count` times, i.e. item · count.
pub fn repeated_sum(item: &GrossNumber, count: &GrossNumber) -> Result<GrossNumber, SeriesError> {
    require_count(count)?;
    Ok(item * count)
}

/// Σ_{i=i0}^{n} q^i for a rational or single-term gross ratio q and a
/// finite or infinite integer-valued n ≥ i0. For q ≠ 1 this is
/// (q^i0 − q^(n+1))/(1 − q); for q = 1 it is the item count n + 1 − i0.
pub fn geometric_sum(
    q: &GrossNumber,
    n: &GrossNumber,
    i0: u32,
) -> Result<ExpSum, SeriesError> {
    require_integral(n)?;
    let start = GrossNumber::from_int(i0 as i64);
    if *n < start {
        return Err(SeriesError::NonPositiveCount);
    }
    match q.terms() {
        [] => {
            // 0^0 counts as 1; every other item is 0
            let v = if i0 == 0 {
                GrossNumber::one()
            } else {
                GrossNumber::zero()
            };
            Ok(ExpSum::from_number(v))
        }
        [t] if t.power.is_zero() => {
            let c = t.digit.clone();
            if c.is_one() {
                return Ok(ExpSum::from_number(n + GrossNumber::one() - start));
            }
            rational_ratio(&c, n, i0)
        }
        [_] => {
            if !n.is_rational() {
                return Err(SeriesError::UnsupportedRatio);
            }
            monomial_ratio(q, n, i0)
        }
        _ => Err(SeriesError::UnsupportedRatio),
    }
}

/// The rational-ratio branch of [`geometric_sum`], q ∉ {0, 1}.
fn rational_ratio(c: &Rational, n: &GrossNumber, i0: u32) -> Result<ExpSum, SeriesError> {
    let one_minus = Rational::one() - c;
    if let Some(k) = integer_exponent(n) {
        // finite count: collapse to an exact rational when the powers are
        // small enough to expand
        if let (Some(lo), Some(hi)) = (rational_pow(c, i0 as i64), rational_pow(c, k + 1)) {
            let v = (lo - hi) / one_minus;
            return Ok(ExpSum::from_number(GrossNumber::from_rational(v)));
        }
    }
    let head = rational_pow(c, i0 as i64).ok_or(SeriesError::UnsupportedRatio)? / &one_minus;
    let exponent = n + GrossNumber::one();
    let (base, sign) = if c.is_negative() {
        // the sign of c^e for integer-valued e follows the parity of the
        // finite digit: every infinite-part term is even
        let finite = exponent.finite_digit().to_integer();
        let sign = if finite.is_even() { 1 } else { -1 };
        (-c, sign)
    } else {
        (c.clone(), 1)
    };
    let coeff = Rational::from_integer((-sign).into()) / one_minus;
    let term = ExpSum::term(GrossNumber::from_rational(coeff), base, exponent);
    Ok(ExpSum::from_number(GrossNumber::from_rational(head)).add(&term))
}

/// The single-gross-term-ratio branch of [`geometric_sum`]: finite n only;
/// the sum expands to finitely many positional terms via exact division by
/// 1 − q.
fn monomial_ratio(q: &GrossNumber, n: &GrossNumber, i0: u32) -> Result<ExpSum, SeriesError> {
    let k = integer_exponent(n).ok_or(SeriesError::UnsupportedRatio)?;
    let items = (k + 1 - i0 as i64) as usize;
    let hi = u32::try_from(k + 1).map_err(|_| SeriesError::UnsupportedRatio)?;
    if items > 4096 {
        return Err(SeriesError::UnsupportedRatio);
    }
    let numer = q.pow_nat(i0) - q.pow_nat(hi);
    let denom = GrossNumber::one() - q;
    let d = numer
        .divide(&denom, items + 2)
        .map_err(|_| SeriesError::UnsupportedRatio)?;
    debug_assert!(d.exact);
    Ok(ExpSum::from_number(d.quotient))
}

/// base^exponent as an exponential sum: 1^e = 1 and 0^e = 0 for positive e
/// hold exactly at every gross exponent; other nonnegative rational bases
/// stay symbolic unless the exponent is a plain integer.
pub fn rational_power(base: &Rational, exponent: &GrossNumber) -> Result<ExpSum, SeriesError> {
    if base.is_zero() {
        return match exponent.cmp(&GrossNumber::zero()) {
            std::cmp::Ordering::Greater => Ok(ExpSum::from_number(GrossNumber::zero())),
            std::cmp::Ordering::Equal => Ok(ExpSum::from_number(GrossNumber::one())),
            std::cmp::Ordering::Less => Err(SeriesError::UndefinedPower),
        };
    }
    if base.is_negative() {
        return Err(SeriesError::UndefinedPower);
    }
    Ok(ExpSum::term(
        GrossNumber::one(),
        base.clone(),
        exponent.clone(),
    ))
}

/// Fractional digit count and scaled integer value of a rational with a
/// finite decimal expansion.
fn decimal_digits(v: &Rational) -> Result<(u32, BigInt), SeriesError> {
    let mut den = v.denom().clone();
    let mut twos = 0u32;
    let two = BigInt::from(2);
    let five = BigInt::from(5);
    while (&den % &two).is_zero() {
        den /= &two;
        twos += 1;
    }
    let mut fives = 0u32;
    while (&den % &five).is_zero() {
        den /= &five;
        fives += 1;
    }
    if !den.is_one() {
        return Err(SeriesError::NotDecimal);
    }
    let k = twos.max(fives);
    let scaled = v.numer() * BigInt::from(10).pow(k) / v.denom();
    Ok((k, scaled))
}

/// The exact value of `v` written out to `places` decimal positions with its
/// last fractional digit repeating: 2.9 over ① places means 2.999…9 with ①
/// digits, which is 3 − 10^(−①).
fn repeating_extension(v: &Rational, places: &GrossNumber) -> Result<ExpSum, SeriesError> {
    if v.is_negative() {
        return Ok(repeating_extension(&-v, places)?.neg());
    }
    if places < &GrossNumber::zero() {
        return Err(SeriesError::NonPositiveCount);
    }
    require_integral(places)?;
    let (k, scaled) = decimal_digits(v)?;
    let exact = ExpSum::from_number(GrossNumber::from_rational(v.clone()));
    if k == 0 {
        return Ok(exact);
    }
    match places.cmp(&GrossNumber::from_int(k as i64)) {
        std::cmp::Ordering::Less => Err(SeriesError::NonPositiveCount),
        std::cmp::Ordering::Equal => Ok(exact),
        std::cmp::Ordering::Greater => {
            let digit = (&scaled).mod_floor(&BigInt::from(10));
            if digit.is_zero() {
                return Ok(exact);
            }
            let tenth = GrossNumber::from_rational(Rational::new(1.into(), 10.into()));
            let run = geometric_sum(&tenth, places, k + 1)?;
            Ok(exact.add(&run.scale(&Rational::from_integer(digit))))
        }
    }
}

/// Exact difference of two repeating-decimal records over a common number
/// of decimal positions.
pub fn decimal_difference(
    minuend: &Rational,
    subtrahend: &Rational,
    places: &GrossNumber,
) -> Result<ExpSum, SeriesError> {
    let a = repeating_extension(minuend, places)?;
    let b = repeating_extension(subtrahend, places)?;
    Ok(a.sub(&b))
}
