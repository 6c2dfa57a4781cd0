//! Canonical text form for gross numbers.
//!
//! The infinite unit prints as `G`. Terms appear in decreasing-power order,
//! joined with ` + ` / ` - `. A grossdigit prints as an exact decimal whenever
//! its reduced denominator divides a power of ten, otherwise as `p/q`. A
//! grosspower prints bare after `^` when it is such a decimal; any other
//! power is braced: `G^{24.5G - 7.1}`.

use num_bigint::BigInt;
use num_traits::{One, Pow, Signed, Zero};

use gross_core::{GrossNumber, Rational};

/// Exact decimal rendering, when one exists (denominator of the form
/// 2^a · 5^b). `1/2` → `0.5`, `-23/100` → `-0.23`, `7` → `7`; `1/3` → `None`.
pub fn decimal_string(r: &Rational) -> Option<String> {
    let denom = r.denom();
    let two = BigInt::from(2);
    let five = BigInt::from(5);
    let mut rest = denom.clone();
    let mut twos = 0u32;
    let mut fives = 0u32;
    while (&rest % &two).is_zero() {
        rest /= &two;
        twos += 1;
    }
    while (&rest % &five).is_zero() {
        rest /= &five;
        fives += 1;
    }
    if !rest.is_one() {
        return None;
    }
    let scale = twos.max(fives);
    let sign = if r.numer().is_negative() { "-" } else { "" };
    let scaled = (r.numer().abs() * BigInt::from(10).pow(scale)) / denom;
    let digits = scaled.to_string();
    if scale == 0 {
        return Some(format!("{sign}{digits}"));
    }
    let scale = scale as usize;
    let padded = if digits.len() <= scale {
        format!("{}{}", "0".repeat(scale + 1 - digits.len()), digits)
    } else {
        digits
    };
    let (int_part, frac_part) = padded.split_at(padded.len() - scale);
    Some(format!("{sign}{int_part}.{frac_part}"))
}

/// Decimal when possible, `p/q` otherwise.
pub fn format_rational(r: &Rational) -> String {
    decimal_string(r).unwrap_or_else(|| format!("{}/{}", r.numer(), r.denom()))
}

/// Canonical text of a gross number. Inverse of number parsing:
/// `parse_number(format_number(a)) = a`.
pub fn format_number(n: &GrossNumber) -> String {
    if n.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, t) in n.terms().iter().enumerate() {
        let negative = t.digit.is_negative();
        if i == 0 {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        out.push_str(&term_body(&t.digit.abs(), &t.power));
    }
    out
}

fn term_body(magnitude: &Rational, power: &GrossNumber) -> String {
    if power.is_zero() {
        return format_rational(magnitude);
    }
    let coeff = if magnitude.is_one() {
        String::new()
    } else {
        format_rational(magnitude)
    };
    if power == &GrossNumber::one() {
        format!("{coeff}G")
    } else {
        format!("{coeff}G^{}", power_text(power))
    }
}

fn power_text(power: &GrossNumber) -> String {
    if let Some(r) = power.as_rational() {
        if let Some(plain) = decimal_string(&r) {
            return plain;
        }
    }
    format!("{{{}}}", format_number(power))
}
