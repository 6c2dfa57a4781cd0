//! Sums of exponential terms `coeff · base^exponent` plus a gross-number
//! tail. Values like 2^① fall outside the positional numeral form, so they
//! get their own small scalar tower with exactly the operations the sum and
//! counting formulas need: add, subtract, scale, single-term multiply, and
//! same-base comparison.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use gross_core::{GrossNumber, Rational};
use gross_expr::{format_number, format_rational};
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::SeriesError;

/// Folding powers of the base in and out of coefficients and exponents is
/// capped so a pathological input cannot demand astronomically large exact
/// integers; terms past the cap simply stay in their unfolded form.
const FOLD_LIMIT: i64 = 4096;

/// One exponential term. After normalization the base is a rational
/// strictly greater than 1 (smaller bases are flipped via b^e = (1/b)^(-e)),
/// the coefficient is nonzero, and the exponent is not a plain integer
/// (those collapse into the tail).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpTerm {
    pub coeff: GrossNumber,
    pub base: Rational,
    pub exponent: GrossNumber,
}

/// A normalized sum of exponential terms and a gross-number tail.
///
/// Terms are kept in display order: positive exponents first (largest
/// leading), then — conceptually — the tail, then negative exponents. No two
/// terms share a base and exponent, and same-base terms whose exponents
/// differ by a small integer are folded together (`0.5·3^(e+1) − 0.5·3^e`
/// becomes `3^e`), which is what makes telescoping differences collapse to
/// a single term.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ExpSum {
    exp_terms: Vec<ExpTerm>,
    tail: GrossNumber,
}

impl ExpSum {
    pub fn zero() -> Self {
        ExpSum::default()
    }

    /// A sum with no exponential part.
    pub fn from_number(n: GrossNumber) -> Self {
        ExpSum {
            exp_terms: Vec::new(),
            tail: n,
        }
    }

    /// The single term `coeff · base^exponent`, normalized.
    ///
    /// # Panics
    /// The base must be positive; other base values have no reading here.
    pub fn term(coeff: GrossNumber, base: Rational, exponent: GrossNumber) -> Self {
        assert!(
            base > Rational::zero(),
            "exponential base must be positive"
        );
        normalize(vec![(coeff, base, exponent)], GrossNumber::zero())
    }

    pub fn exp_terms(&self) -> &[ExpTerm] {
        &self.exp_terms
    }

    pub fn tail(&self) -> &GrossNumber {
        &self.tail
    }

    pub fn is_zero(&self) -> bool {
        self.exp_terms.is_empty() && self.tail.is_zero()
    }

    /// The plain gross-number value, when no exponential term remains.
    pub fn as_number(&self) -> Option<GrossNumber> {
        if self.exp_terms.is_empty() {
            Some(self.tail.clone())
        } else {
            None
        }
    }

    fn raw_terms(&self) -> Vec<(GrossNumber, Rational, GrossNumber)> {
        self.exp_terms
            .iter()
            .map(|t| (t.coeff.clone(), t.base.clone(), t.exponent.clone()))
            .collect()
    }

    pub fn add(&self, other: &ExpSum) -> ExpSum {
        let mut raw = self.raw_terms();
        raw.extend(other.raw_terms());
        normalize(raw, &self.tail + &other.tail)
    }

    pub fn sub(&self, other: &ExpSum) -> ExpSum {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> ExpSum {
        ExpSum {
            exp_terms: self
                .exp_terms
                .iter()
                .map(|t| ExpTerm {
                    coeff: -&t.coeff,
                    base: t.base.clone(),
                    exponent: t.exponent.clone(),
                })
                .collect(),
            tail: -&self.tail,
        }
    }

    pub fn scale(&self, c: &Rational) -> ExpSum {
        let raw = self
            .exp_terms
            .iter()
            .map(|t| (t.coeff.scale(c), t.base.clone(), t.exponent.clone()))
            .collect();
        normalize(raw, self.tail.scale(c))
    }

    /// Multiply by the single term `coeff · base^exponent`. Every
    /// exponential term already present must share that base (a base of 1
    /// degenerates to plain scaling); otherwise the product leaves the
    /// representable class.
    pub fn mul_term(
        &self,
        coeff: &GrossNumber,
        base: &Rational,
        exponent: &GrossNumber,
    ) -> Result<ExpSum, SeriesError> {
        assert!(
            base > &Rational::zero(),
            "exponential base must be positive"
        );
        let (base, exponent) = if base < &Rational::one() {
            (base.recip(), -exponent)
        } else {
            (base.clone(), exponent.clone())
        };
        if base.is_one() {
            let raw = self
                .exp_terms
                .iter()
                .map(|t| (&t.coeff * coeff, t.base.clone(), t.exponent.clone()))
                .collect();
            return Ok(normalize(raw, &self.tail * coeff));
        }
        let mut raw = Vec::with_capacity(self.exp_terms.len() + 1);
        for t in &self.exp_terms {
            if t.base != base {
                return Err(SeriesError::MixedBase);
            }
            raw.push((&t.coeff * coeff, base.clone(), &t.exponent + &exponent));
        }
        if !self.tail.is_zero() {
            raw.push((&self.tail * coeff, base.clone(), exponent));
        }
        Ok(normalize(raw, GrossNumber::zero()))
    }

    fn split(&self) -> (&[ExpTerm], &[ExpTerm]) {
        let cut = self
            .exp_terms
            .partition_point(|t| t.exponent > GrossNumber::zero());
        self.exp_terms.split_at(cut)
    }

    /// Total order for sums sharing one exponential base: the largest
    /// exponent dominates, then its coefficient, and terms with positive
    /// exponents dominate the tails, which in turn dominate terms with
    /// negative exponents.
    pub fn compare_same_base(&self, other: &ExpSum) -> Result<Ordering, SeriesError> {
        let mut bases: Vec<&Rational> = self
            .exp_terms
            .iter()
            .chain(other.exp_terms.iter())
            .map(|t| &t.base)
            .collect();
        bases.dedup();
        bases.sort();
        bases.dedup();
        if bases.len() > 1 {
            return Err(SeriesError::MixedBase);
        }
        let (big_a, small_a) = self.split();
        let (big_b, small_b) = other.split();
        Ok(walk(big_a, big_b)
            .then_with(|| self.tail.cmp(&other.tail))
            .then_with(|| walk(small_a, small_b)))
    }
}

/// Lexicographic comparison of two same-base term runs sorted by decreasing
/// exponent: the first exponent mismatch is decided by the sign of the
/// higher term's coefficient, equal exponents compare coefficients.
fn walk(a: &[ExpTerm], b: &[ExpTerm]) -> Ordering {
    let zero = GrossNumber::zero();
    let mut i = 0;
    let mut j = 0;
    loop {
        match (a.get(i), b.get(j)) {
            (None, None) => return Ordering::Equal,
            (Some(ta), None) => return ta.coeff.cmp(&zero),
            (None, Some(tb)) => return tb.coeff.cmp(&zero).reverse(),
            (Some(ta), Some(tb)) => match ta.exponent.cmp(&tb.exponent) {
                Ordering::Greater => return ta.coeff.cmp(&zero),
                Ordering::Less => return tb.coeff.cmp(&zero).reverse(),
                Ordering::Equal => {
                    let c = ta.coeff.cmp(&tb.coeff);
                    if c != Ordering::Equal {
                        return c;
                    }
                    i += 1;
                    j += 1;
                }
            },
        }
    }
}

/// `base^k` for a signed machine-integer exponent, refusing exponents past
/// the folding cap. The base must be nonzero.
pub(crate) fn rational_pow(base: &Rational, k: i64) -> Option<Rational> {
    if k.unsigned_abs() > FOLD_LIMIT as u64 {
        return None;
    }
    let mut acc = Rational::one();
    for _ in 0..k.unsigned_abs() {
        acc *= base;
    }
    if k < 0 {
        acc = acc.recip();
    }
    Some(acc)
}

/// The exponent as a plain machine integer, when it is one.
pub(crate) fn integer_exponent(e: &GrossNumber) -> Option<i64> {
    let r = e.as_rational()?;
    if !r.is_integer() {
        return None;
    }
    r.to_integer().to_i64()
}

/// `k` with `|coeff| = base^k`, when the coefficient is an exact signed
/// power of the base (base > 1).
fn power_of_base(coeff: &Rational, base: &Rational) -> Option<i64> {
    let mut v = coeff.abs();
    if v.is_zero() {
        return None;
    }
    let one = Rational::one();
    let mut k = 0i64;
    while v > one && k < FOLD_LIMIT {
        v /= base;
        k += 1;
    }
    while v < one && k > -FOLD_LIMIT {
        v *= base;
        k -= 1;
    }
    if v == one {
        Some(k)
    } else {
        None
    }
}

/// Full normalization: flip bases below 1, collapse integer exponents into
/// the tail, fold same-base terms whose exponents differ by an integer down
/// onto the lowest exponent, pull exact base-powers out of rational
/// coefficients, and sort for display.
fn normalize(raw: Vec<(GrossNumber, Rational, GrossNumber)>, tail: GrossNumber) -> ExpSum {
    let mut tail = tail;
    let mut by_base: BTreeMap<Rational, Vec<(GrossNumber, GrossNumber)>> = BTreeMap::new();
    for (coeff, base, exponent) in raw {
        if coeff.is_zero() {
            continue;
        }
        debug_assert!(base.is_positive());
        if base.is_one() {
            tail = tail + coeff;
            continue;
        }
        let (base, exponent) = if base < Rational::one() {
            (base.recip(), -exponent)
        } else {
            (base, exponent)
        };
        if let Some(k) = integer_exponent(&exponent) {
            if let Some(v) = rational_pow(&base, k) {
                tail = tail + coeff.scale(&v);
                continue;
            }
        }
        by_base.entry(base).or_default().push((exponent, coeff));
    }

    let mut terms: Vec<ExpTerm> = Vec::new();
    for (base, mut group) in by_base {
        group.sort_by(|x, y| x.0.cmp(&y.0));
        // Clusters are anchored at their lowest exponent; anything an
        // integer step above folds down by multiplying the base in.
        let mut clusters: Vec<(GrossNumber, GrossNumber)> = Vec::new();
        'place: for (exponent, coeff) in group {
            for (anchor, acc) in clusters.iter_mut() {
                if let Some(k) = integer_exponent(&(&exponent - &*anchor)) {
                    if let Some(v) = rational_pow(&base, k) {
                        *acc = &*acc + coeff.scale(&v);
                        continue 'place;
                    }
                }
            }
            clusters.push((exponent, coeff));
        }
        for (mut exponent, coeff) in clusters {
            if coeff.is_zero() {
                continue;
            }
            let mut coeff = coeff;
            if let Some(c) = coeff.as_rational() {
                if let Some(k) = power_of_base(&c, &base) {
                    if let Some(shift) = rational_pow(&base, -k) {
                        exponent = exponent + GrossNumber::from_int(k);
                        coeff = coeff.scale(&shift);
                    }
                }
            }
            terms.push(ExpTerm {
                coeff,
                base: base.clone(),
                exponent,
            });
        }
    }

    let zero = GrossNumber::zero();
    terms.sort_by(|x, y| {
        let gx = x.exponent > zero;
        let gy = y.exponent > zero;
        gy.cmp(&gx)
            .then_with(|| y.exponent.cmp(&x.exponent))
            .then_with(|| y.base.cmp(&x.base))
    });
    ExpSum {
        exp_terms: terms,
        tail,
    }
}

fn term_text(t: &ExpTerm) -> String {
    let coeff = format_number(&t.coeff);
    let coeff = if t.coeff.terms().len() > 1 {
        format!("({coeff})")
    } else {
        coeff
    };
    format!(
        "{}*{}^({})",
        coeff,
        format_rational(&t.base),
        format_number(&t.exponent)
    )
}

impl fmt::Display for ExpSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (big, small) = self.split();
        let mut pieces: Vec<String> = Vec::new();
        pieces.extend(big.iter().map(term_text));
        if !self.tail.is_zero() {
            pieces.push(format_number(&self.tail));
        }
        pieces.extend(small.iter().map(term_text));
        if pieces.is_empty() {
            return f.write_str("0");
        }
        f.write_str(&pieces.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use gross_expr::parse_number;

    fn num(text: &str) -> GrossNumber {
        parse_number(text).unwrap()
    }

    fn rational(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn integer_exponents_collapse_into_the_tail() {
        let s = ExpSum::term(num("5"), rational(2, 1), num("3"));
        assert_eq!(s.as_number().unwrap(), num("40"));
    }

    #[test]
    fn bases_below_one_flip() {
        let a = ExpSum::term(num("1"), rational(1, 2), GrossNumber::grossone());
        let b = ExpSum::term(num("1"), rational(2, 1), -GrossNumber::grossone());
        assert_eq!(a, b);
        assert_eq!(a.to_string(), "1*2^(-G)");
    }

    #[test]
    fn coefficients_fold_into_exponents() {
        // -2·2^(-G - 1) is the same number as -1·2^(-G)
        let s = ExpSum::term(num("-2"), rational(2, 1), num("-G - 1"));
        assert_eq!(s.to_string(), "-1*2^(-G)");
    }

    #[test]
    fn integer_gaps_fold_onto_the_lower_exponent() {
        let hi = ExpSum::term(num("0.5"), rational(3, 1), num("G^2 + 2"));
        let lo = ExpSum::term(num("0.5"), rational(3, 1), num("G^2 + 1"));
        let diff = hi.sub(&lo);
        assert_eq!(diff.to_string(), "1*3^(G^2 + 1)");
    }

    #[test]
    fn tails_print_between_large_and_small_terms() {
        let s = ExpSum::from_number(num("1"))
            .sub(&ExpSum::term(num("1"), rational(2, 1), GrossNumber::grossone()).neg())
            .sub(&ExpSum::term(num("1"), rational(2, 1), -GrossNumber::grossone()));
        assert_eq!(s.to_string(), "1*2^(G) + 1 + -1*2^(-G)");
    }

    #[test]
    fn multi_term_coefficients_are_parenthesized() {
        let s = ExpSum::term(num("G + 1"), rational(2, 1), GrossNumber::grossone());
        assert_eq!(s.to_string(), "(G + 1)*2^(G)");
    }

    #[test]
    fn subtraction_of_self_is_zero() {
        let s = ExpSum::term(num("0.5"), rational(3, 1), num("G^2 + 1"))
            .add(&ExpSum::from_number(num("-0.5")));
        assert!(s.sub(&s).is_zero());
        assert_eq!(s.sub(&s).to_string(), "0");
    }

    #[test]
    fn single_term_multiplication_shifts_exponents() {
        // (1 - 2^(-G)) · 2^G = 2^G - 1
        let s = ExpSum::from_number(num("1"))
            .sub(&ExpSum::term(num("1"), rational(2, 1), -GrossNumber::grossone()));
        let shifted = s
            .mul_term(&num("1"), &rational(2, 1), &GrossNumber::grossone())
            .unwrap();
        assert_eq!(shifted.to_string(), "1*2^(G) + -1");
    }

    #[test]
    fn mixed_bases_cannot_multiply_or_compare() {
        let a = ExpSum::term(num("1"), rational(2, 1), GrossNumber::grossone());
        let b = ExpSum::term(num("1"), rational(3, 1), GrossNumber::grossone());
        assert_eq!(
            a.mul_term(&num("1"), &rational(3, 1), &GrossNumber::grossone())
                .unwrap_err(),
            SeriesError::MixedBase
        );
        assert_eq!(
            a.compare_same_base(&b).unwrap_err(),
            SeriesError::MixedBase
        );
    }

    #[test]
    fn comparison_orders_by_exponent_then_coefficient_then_tail() {
        let one = ExpSum::from_number(num("1"));
        let below_one = one.sub(&ExpSum::term(num("1"), rational(2, 1), -GrossNumber::grossone()));
        assert_eq!(below_one.compare_same_base(&one).unwrap(), Ordering::Less);

        let big = ExpSum::term(num("1"), rational(2, 1), num("G^2"));
        let bigger = ExpSum::term(num("1"), rational(2, 1), num("G^2 + 0.5"));
        assert_eq!(big.compare_same_base(&bigger).unwrap(), Ordering::Less);
        assert_eq!(
            big.compare_same_base(&ExpSum::from_number(num("G^9"))).unwrap(),
            Ordering::Greater
        );
        assert_eq!(big.compare_same_base(&big).unwrap(), Ordering::Equal);
    }

    #[test]
    fn scaling_distributes_over_terms_and_tail() {
        let s = ExpSum::term(num("0.5"), rational(3, 1), num("G^2 + 1"))
            .add(&ExpSum::from_number(num("-0.5")));
        let doubled = s.scale(&rational(2, 1));
        assert_eq!(doubled.to_string(), "1*3^(G^2 + 1) + -1");
        assert!(s.scale(&rational(0, 1)).is_zero());
    }
}
