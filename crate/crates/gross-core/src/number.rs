//! Gross numbers: normalized positional records over the infinite unit G.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use num_traits::{Signed, Zero};

use crate::config::max_depth;
use crate::error::GrossError;
use crate::rational::{rat, Rational};

/// One addend `digit * G^power` of a gross number.
///
/// In a normalized number the digit is never zero and the power is itself a
/// normalized gross number of strictly lower nesting depth.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GrossTerm {
    pub digit: Rational,
    pub power: GrossNumber,
}

/// A gross number: a finite sum of terms `digit * G^power` with nonzero
/// rational digits and pairwise distinct powers, kept sorted by strictly
/// decreasing power. The empty sum is exactly zero.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct GrossNumber {
    terms: Vec<GrossTerm>,
}

/// Sign class of a gross number, keyed on the leading grosspower.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NumberClass {
    Zero,
    Infinitesimal,
    Finite,
    Infinite,
}

impl std::fmt::Display for NumberClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let word = match self {
            NumberClass::Zero => "zero",
            NumberClass::Infinitesimal => "infinitesimal",
            NumberClass::Finite => "finite",
            NumberClass::Infinite => "infinite",
        };
        f.write_str(word)
    }
}

/// Outcome of `divide`: quotient plus the exact remainder that was left over.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Division {
    pub quotient: GrossNumber,
    pub remainder: GrossNumber,
    pub exact: bool,
}

impl GrossNumber {
    /// The number zero (empty term list).
    pub fn zero() -> Self {
        GrossNumber { terms: Vec::new() }
    }

    /// The number one, `1 * G^0`.
    pub fn one() -> Self {
        Self::from_rational(rat(1))
    }

    /// The infinite unit `G` itself, `1 * G^1`.
    pub fn grossone() -> Self {
        GrossNumber {
            terms: vec![GrossTerm {
                digit: rat(1),
                power: Self::from_rational(rat(1)),
            }],
        }
    }

    /// Embed a rational as a gross number (a single term with power 0).
    pub fn from_rational(r: Rational) -> Self {
        if r.is_zero() {
            Self::zero()
        } else {
            GrossNumber {
                terms: vec![GrossTerm {
                    digit: r,
                    power: Self::zero(),
                }],
            }
        }
    }

    /// Embed a machine integer.
    pub fn from_int(n: i64) -> Self {
        Self::from_rational(rat(n))
    }

    /// Build a normalized number from raw (digit, power) pairs: digits at
    /// equal powers merge, zero digits drop, terms sort by decreasing power.
    /// The result of re-normalizing a normalized number is itself.
    pub fn normalize(
        raw: impl IntoIterator<Item = (Rational, GrossNumber)>,
    ) -> Result<Self, GrossError> {
        let cap = max_depth();
        let mut acc: BTreeMap<GrossNumber, Rational> = BTreeMap::new();
        for (digit, power) in raw {
            if !power.is_rational() {
                let depth = power.depth() + 1;
                if depth > cap {
                    return Err(GrossError::DepthExceeded { depth, max: cap });
                }
            }
            match acc.entry(power) {
                std::collections::btree_map::Entry::Occupied(mut e) => {
                    *e.get_mut() += digit;
                }
                std::collections::btree_map::Entry::Vacant(e) => {
                    e.insert(digit);
                }
            }
        }
        let mut terms: Vec<GrossTerm> = acc
            .into_iter()
            .filter(|(_, digit)| !digit.is_zero())
            .map(|(power, digit)| GrossTerm { digit, power })
            .collect();
        terms.reverse();
        Ok(GrossNumber { terms })
    }

    /// A single-term number `digit * G^power` (normalized, depth-checked).
    pub fn monomial(digit: Rational, power: GrossNumber) -> Result<Self, GrossError> {
        Self::normalize(std::iter::once((digit, power)))
    }

    /// `G^power` for an arbitrary gross power.
    pub fn mono_pow(power: &GrossNumber) -> Result<Self, GrossError> {
        Self::monomial(rat(1), power.clone())
    }

    /// Terms in decreasing-power order.
    pub fn terms(&self) -> &[GrossTerm] {
        &self.terms
    }

    /// Leading term (largest power), if the number is nonzero.
    pub fn leading(&self) -> Option<&GrossTerm> {
        self.terms.first()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// True when the number is a plain rational: zero or a single term with
    /// power 0.
    pub fn is_rational(&self) -> bool {
        match self.terms.as_slice() {
            [] => true,
            [t] => t.power.is_zero(),
            _ => false,
        }
    }

    /// The rational value, when `is_rational` holds.
    pub fn as_rational(&self) -> Option<Rational> {
        match self.terms.as_slice() {
            [] => Some(Rational::zero()),
            [t] if t.power.is_zero() => Some(t.digit.clone()),
            _ => None,
        }
    }

    /// The digit at grosspower 0 (zero when that term is absent).
    pub fn finite_digit(&self) -> Rational {
        self.terms
            .iter()
            .find(|t| t.power.is_zero())
            .map(|t| t.digit.clone())
            .unwrap_or_else(Rational::zero)
    }

    /// Grosspower nesting depth: 0 when every power is a plain rational,
    /// otherwise one more than the deepest power.
    pub fn depth(&self) -> usize {
        self.terms
            .iter()
            .map(|t| {
                if t.power.is_rational() {
                    0
                } else {
                    t.power.depth() + 1
                }
            })
            .max()
            .unwrap_or(0)
    }

    /// Multiply by a rational scalar.
    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        GrossNumber {
            terms: self
                .terms
                .iter()
                .map(|t| GrossTerm {
                    digit: &t.digit * c,
                    power: t.power.clone(),
                })
                .collect(),
        }
    }

    /// Raise to a finite natural power by repeated multiplication.
    /// `pow_nat(a, 0)` is 1 for every `a` (empty product).
    pub fn pow_nat(&self, k: u32) -> Self {
        let mut result = Self::one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Long division with a term budget. The divisor is first rescaled by its
    /// leading monomial (making it 1 plus strictly smaller terms), then the
    /// quotient is grown one leading term at a time. When the budget runs out
    /// the exact remainder is returned alongside the truncated quotient, and
    /// its leading power sits strictly below the quotient's last power plus
    /// the divisor's leading power.
    pub fn divide(&self, divisor: &Self, max_terms: usize) -> Result<Division, GrossError> {
        let lead = divisor.leading().ok_or(GrossError::DivisionByZero)?;
        let lead_digit = lead.digit.clone();
        let lead_power = lead.power.clone();
        let inv = lead_digit.recip();
        let down = |n: &Self| -> Self {
            GrossNumber {
                terms: n
                    .terms
                    .iter()
                    .map(|t| GrossTerm {
                        digit: &t.digit * &inv,
                        power: &t.power - &lead_power,
                    })
                    .collect(),
            }
        };
        let scaled_divisor = down(divisor);
        let mut rem = down(self);
        let mut quotient_terms: Vec<GrossTerm> = Vec::new();
        while !rem.is_zero() && quotient_terms.len() < max_terms {
            let t = rem.terms[0].clone();
            rem = &rem - &mono_mul(&t, &scaled_divisor);
            quotient_terms.push(t);
        }
        let exact = rem.is_zero();
        let remainder = GrossNumber {
            terms: rem
                .terms
                .iter()
                .map(|t| GrossTerm {
                    digit: &t.digit * &lead_digit,
                    power: &t.power + &lead_power,
                })
                .collect(),
        };
        Ok(Division {
            quotient: GrossNumber {
                terms: quotient_terms,
            },
            remainder,
            exact,
        })
    }

    /// Sign class by the leading grosspower: positive leading power means
    /// infinite, zero finite, negative infinitesimal.
    pub fn classify(&self) -> NumberClass {
        match self.leading() {
            None => NumberClass::Zero,
            Some(t) => match t.power.cmp(&Self::zero()) {
                Ordering::Greater => NumberClass::Infinite,
                Ordering::Equal => NumberClass::Finite,
                Ordering::Less => NumberClass::Infinitesimal,
            },
        }
    }

    /// Split into (infinite part, finite part, infinitesimal part): terms
    /// with positive, zero, and negative grosspowers. The parts sum back to
    /// the original number.
    pub fn split(&self) -> (Self, Self, Self) {
        let zero = Self::zero();
        let mut infinite = Vec::new();
        let mut finite = Vec::new();
        let mut infinitesimal = Vec::new();
        for t in &self.terms {
            match t.power.cmp(&zero) {
                Ordering::Greater => infinite.push(t.clone()),
                Ordering::Equal => finite.push(t.clone()),
                Ordering::Less => infinitesimal.push(t.clone()),
            }
        }
        (
            GrossNumber { terms: infinite },
            GrossNumber { terms: finite },
            GrossNumber { terms: infinitesimal },
        )
    }
}

/// Multiply a number by a single term (keeps the term order intact).
fn mono_mul(t: &GrossTerm, n: &GrossNumber) -> GrossNumber {
    GrossNumber {
        terms: n
            .terms
            .iter()
            .map(|u| GrossTerm {
                digit: &u.digit * &t.digit,
                power: &u.power + &t.power,
            })
            .collect(),
    }
}

fn add_impl(a: &GrossNumber, b: &GrossNumber) -> GrossNumber {
    let mut out: Vec<GrossTerm> = Vec::with_capacity(a.terms.len() + b.terms.len());
    let (mut i, mut j) = (0, 0);
    while i < a.terms.len() && j < b.terms.len() {
        let (t, u) = (&a.terms[i], &b.terms[j]);
        match t.power.cmp(&u.power) {
            Ordering::Greater => {
                out.push(t.clone());
                i += 1;
            }
            Ordering::Less => {
                out.push(u.clone());
                j += 1;
            }
            Ordering::Equal => {
                let digit = &t.digit + &u.digit;
                if !digit.is_zero() {
                    out.push(GrossTerm {
                        digit,
                        power: t.power.clone(),
                    });
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a.terms[i..]);
    out.extend_from_slice(&b.terms[j..]);
    GrossNumber { terms: out }
}

fn neg_impl(a: &GrossNumber) -> GrossNumber {
    GrossNumber {
        terms: a
            .terms
            .iter()
            .map(|t| GrossTerm {
                digit: -&t.digit,
                power: t.power.clone(),
            })
            .collect(),
    }
}

fn sub_impl(a: &GrossNumber, b: &GrossNumber) -> GrossNumber {
    add_impl(a, &neg_impl(b))
}

fn mul_impl(a: &GrossNumber, b: &GrossNumber) -> GrossNumber {
    let mut acc: BTreeMap<GrossNumber, Rational> = BTreeMap::new();
    for t in &a.terms {
        for u in &b.terms {
            let power = add_impl(&t.power, &u.power);
            let digit = &t.digit * &u.digit;
            match acc.entry(power) {
                std::collections::btree_map::Entry::Occupied(mut e) => {
                    *e.get_mut() += digit;
                }
                std::collections::btree_map::Entry::Vacant(e) => {
                    e.insert(digit);
                }
            }
        }
    }
    let mut terms: Vec<GrossTerm> = acc
        .into_iter()
        .filter(|(_, digit)| !digit.is_zero())
        .map(|(power, digit)| GrossTerm { digit, power })
        .collect();
    terms.reverse();
    GrossNumber { terms }
}

fn sign_of(d: &Rational) -> Ordering {
    if d.is_positive() {
        Ordering::Greater
    } else {
        Ordering::Less
    }
}

impl Ord for GrossNumber {
    /// Total numeric order: the sign of `self - other`, found by walking both
    /// term lists and letting the first discrepancy decide. Power comparison
    /// recurses and bottoms out at rational comparison.
    fn cmp(&self, other: &Self) -> Ordering {
        let (mut i, mut j) = (0, 0);
        loop {
            match (self.terms.get(i), other.terms.get(j)) {
                (None, None) => return Ordering::Equal,
                (Some(t), None) => return sign_of(&t.digit),
                (None, Some(u)) => return sign_of(&u.digit).reverse(),
                (Some(t), Some(u)) => match t.power.cmp(&u.power) {
                    Ordering::Greater => return sign_of(&t.digit),
                    Ordering::Less => return sign_of(&u.digit).reverse(),
                    Ordering::Equal => match t.digit.cmp(&u.digit) {
                        Ordering::Equal => {
                            i += 1;
                            j += 1;
                        }
                        ord => return ord,
                    },
                },
            }
        }
    }
}

impl PartialOrd for GrossNumber {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $func:ident) => {
        impl std::ops::$trait<&GrossNumber> for &GrossNumber {
            type Output = GrossNumber;
            fn $method(self, rhs: &GrossNumber) -> GrossNumber {
                $func(self, rhs)
            }
        }
        impl std::ops::$trait<GrossNumber> for GrossNumber {
            type Output = GrossNumber;
            fn $method(self, rhs: GrossNumber) -> GrossNumber {
                $func(&self, &rhs)
            }
        }
        impl std::ops::$trait<&GrossNumber> for GrossNumber {
            type Output = GrossNumber;
            fn $method(self, rhs: &GrossNumber) -> GrossNumber {
                $func(&self, rhs)
            }
        }
        impl std::ops::$trait<GrossNumber> for &GrossNumber {
            type Output = GrossNumber;
            fn $method(self, rhs: GrossNumber) -> GrossNumber {
                $func(self, &rhs)
            }
        }
    };
}

forward_binop!(Add, add, add_impl);
forward_binop!(Sub, sub, sub_impl);
forward_binop!(Mul, mul, mul_impl);

impl std::ops::Neg for &GrossNumber {
    type Output = GrossNumber;
    fn neg(self) -> GrossNumber {
        neg_impl(self)
    }
}

impl std::ops::Neg for GrossNumber {
    type Output = GrossNumber;
    fn neg(self) -> GrossNumber {
        neg_impl(&self)
    }
}

impl From<Rational> for GrossNumber {
    fn from(r: Rational) -> Self {
        Self::from_rational(r)
    }
}

impl From<i64> for GrossNumber {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;
    use num_bigint::BigInt;
    use num_traits::Pow;

    fn g() -> GrossNumber {
        GrossNumber::grossone()
    }

    fn gp(power: i64) -> GrossNumber {
        GrossNumber::monomial(rat(1), GrossNumber::from_int(power)).unwrap()
    }

    fn term(digit: i64, power: i64) -> (Rational, GrossNumber) {
        (rat(digit), GrossNumber::from_int(power))
    }

    #[test]
    fn normalize_merges_equal_powers() {
        let n = GrossNumber::normalize(vec![term(2, 1), term(3, 1)]).unwrap();
        assert_eq!(n, GrossNumber::from_int(5) * g());
    }

    #[test]
    fn normalize_cancels_to_zero() {
        let n = GrossNumber::normalize(vec![term(1, 0), term(-1, 0)]).unwrap();
        assert!(n.is_zero());
        assert_eq!(n, GrossNumber::zero());
    }

    #[test]
    fn normalize_keeps_decreasing_power_order() {
        // digits 7.6, 34, 70 at powers 24.5G - 7.1, 3.2, 0
        let big_power =
            GrossNumber::normalize(vec![(frac(49, 2), GrossNumber::from_int(1)), (frac(-71, 10), GrossNumber::zero())])
                .unwrap();
        let n = GrossNumber::normalize(vec![
            (frac(38, 5), big_power.clone()),
            (frac(34, 1), GrossNumber::from_rational(frac(16, 5))),
            (frac(70, 1), GrossNumber::zero()),
        ])
        .unwrap();
        let powers: Vec<GrossNumber> = n.terms().iter().map(|t| t.power.clone()).collect();
        assert_eq!(
            powers,
            vec![big_power, GrossNumber::from_rational(frac(16, 5)), GrossNumber::zero()]
        );
        assert_eq!(n.depth(), 1);
    }

    #[test]
    fn normalize_is_idempotent() {
        let n = GrossNumber::normalize(vec![term(2, 3), term(-2, 3), term(5, 0), term(1, -2)]).unwrap();
        let again =
            GrossNumber::normalize(n.terms().iter().map(|t| (t.digit.clone(), t.power.clone())))
                .unwrap();
        assert_eq!(n, again);
    }

    #[test]
    fn grossone_minus_grossone_is_zero() {
        assert!((g() - g()).is_zero());
    }

    #[test]
    fn disjoint_powers_concatenate() {
        let a = GrossNumber::normalize(vec![term(3, 2), term(1, 0)]).unwrap();
        let b = GrossNumber::normalize(vec![term(9, 1), term(1, 0)]).unwrap();
        let sum = GrossNumber::normalize(vec![term(3, 2), term(9, 1), term(2, 0)]).unwrap();
        assert_eq!(a + b, sum);
    }

    #[test]
    fn subtracting_the_infinite_part_leaves_the_finite_part() {
        let a = GrossNumber::normalize(vec![term(21, 1), term(6, 0)]).unwrap();
        let b = GrossNumber::normalize(vec![term(21, 1)]).unwrap();
        assert_eq!(a - b, GrossNumber::from_int(6));
    }

    #[test]
    fn reciprocal_unit_times_unit_is_one() {
        assert_eq!(gp(-1) * g(), GrossNumber::one());
    }

    #[test]
    fn difference_of_squares() {
        let plus = g() + GrossNumber::one();
        let minus = g() - GrossNumber::one();
        let expect = GrossNumber::normalize(vec![term(1, 2), term(-1, 0)]).unwrap();
        assert_eq!(plus * minus, expect);
    }

    #[test]
    fn infinite_times_infinitesimal_can_be_finite() {
        let a = g().scale(&frac(1, 2));
        let b = gp(-1).scale(&rat(4));
        assert_eq!(a * b, GrossNumber::from_int(2));
    }

    #[test]
    fn grossone_over_grossone_is_one() {
        let d = g().divide(&g(), 32).unwrap();
        assert!(d.exact);
        assert_eq!(d.quotient, GrossNumber::one());
        assert!(d.remainder.is_zero());
    }

    #[test]
    fn exact_division_round_trips() {
        // (3G^2 + 9G + 6) / (G + 1) = 3G + 6
        let numer = GrossNumber::normalize(vec![term(3, 2), term(9, 1), term(6, 0)]).unwrap();
        let denom = g() + GrossNumber::one();
        let d = numer.divide(&denom, 32).unwrap();
        assert!(d.exact);
        assert_eq!(d.quotient, GrossNumber::normalize(vec![term(3, 1), term(6, 0)]).unwrap());
        assert_eq!(d.quotient * denom, numer);
    }

    #[test]
    fn truncated_division_reports_remainder() {
        // 1 / (1 - G^-1) stops after 4 terms with remainder G^-4
        let one = GrossNumber::one();
        let denom = GrossNumber::normalize(vec![term(1, 0), term(-1, -1)]).unwrap();
        let d = one.divide(&denom, 4).unwrap();
        assert!(!d.exact);
        let quotient =
            GrossNumber::normalize(vec![term(1, 0), term(1, -1), term(1, -2), term(1, -3)])
                .unwrap();
        assert_eq!(d.quotient, quotient);
        assert_eq!(d.remainder, gp(-4));
        // multiply-back identity: a = q*b + r
        assert_eq!(&d.quotient * &denom + &d.remainder, one);
    }

    #[test]
    fn truncated_division_bound_with_infinite_divisor() {
        // 1 / (G - 1): quotient G^-1 + G^-2 + G^-3, remainder G^-3;
        // remainder lead (-3) < quotient last (-3) + divisor lead (1)
        let denom = g() - GrossNumber::one();
        let d = GrossNumber::one().divide(&denom, 3).unwrap();
        assert!(!d.exact);
        assert_eq!(
            d.quotient,
            GrossNumber::normalize(vec![term(1, -1), term(1, -2), term(1, -3)]).unwrap()
        );
        assert_eq!(d.remainder, gp(-3));
        assert_eq!(&d.quotient * &denom + &d.remainder, GrossNumber::one());
        let rem_lead = d.remainder.leading().unwrap().power.clone();
        let q_last = d.quotient.terms().last().unwrap().power.clone();
        let b_lead = denom.leading().unwrap().power.clone();
        assert!(rem_lead < q_last + b_lead);
    }

    #[test]
    fn division_by_zero_is_an_error() {
        let err = GrossNumber::one().divide(&GrossNumber::zero(), 32).unwrap_err();
        assert_eq!(err, GrossError::DivisionByZero);
    }

    #[test]
    fn zeroth_power_is_one() {
        assert_eq!(g().pow_nat(0), GrossNumber::one());
        assert_eq!(GrossNumber::zero().pow_nat(0), GrossNumber::one());
    }

    #[test]
    fn square_of_a_two_term_number() {
        let base = g() - gp(-1);
        let expect = GrossNumber::normalize(vec![term(1, 2), term(-2, 0), term(1, -2)]).unwrap();
        assert_eq!(base.pow_nat(2), expect);
    }

    #[test]
    fn mono_pow_builds_nested_powers() {
        let n = GrossNumber::mono_pow(&gp(-1)).unwrap();
        assert_eq!(n.depth(), 1);
        assert_eq!(n.leading().unwrap().power, gp(-1));
    }

    #[test]
    fn mono_pow_rejects_excess_nesting() {
        let d1 = GrossNumber::mono_pow(&g()).unwrap();
        let d2 = GrossNumber::mono_pow(&d1).unwrap();
        let d3 = GrossNumber::mono_pow(&d2).unwrap();
        assert_eq!(d3.depth(), 3);
        let err = GrossNumber::mono_pow(&d3).unwrap_err();
        assert_eq!(err, GrossError::DepthExceeded { depth: 4, max: 3 });
    }

    #[test]
    fn grossone_exceeds_any_finite_number() {
        let huge = GrossNumber::from_rational(Rational::from_integer(BigInt::from(10).pow(100u32)));
        assert!(g() > huge);
    }

    #[test]
    fn negative_infinite_number_is_below_zero() {
        let n = g().scale(&rat(3)) - g().scale(&rat(35));
        assert!(n < GrossNumber::zero());
    }

    #[test]
    fn positive_infinitesimal_is_above_zero() {
        assert!(gp(-1) > GrossNumber::zero());
    }

    #[test]
    fn order_is_consistent_with_equality() {
        let a = GrossNumber::normalize(vec![term(1, 1), term(-1, 0)]).unwrap();
        let b = GrossNumber::normalize(vec![term(1, 1), term(-1, 0)]).unwrap();
        assert_eq!(a.cmp(&b), Ordering::Equal);
        assert_eq!(a, b);
    }

    #[test]
    fn classification_follows_the_leading_power() {
        let finite_with_dust = GrossNumber::from_int(6) + gp(-1);
        assert_eq!(finite_with_dust.classify(), NumberClass::Finite);
        assert_eq!(GrossNumber::zero().classify(), NumberClass::Zero);
        let nearly_two = GrossNumber::from_int(2) - gp(-2);
        assert_eq!(nearly_two.classify(), NumberClass::Finite);
        assert_eq!(g().classify(), NumberClass::Infinite);
        assert_eq!(gp(-3).classify(), NumberClass::Infinitesimal);
    }

    #[test]
    fn split_partitions_by_power_sign() {
        let n = GrossNumber::from_int(6) + gp(-1);
        let (inf, fin, dust) = n.split();
        assert!(inf.is_zero());
        assert_eq!(fin, GrossNumber::from_int(6));
        assert_eq!(dust, gp(-1));
        assert_eq!(inf + fin + dust, n);
    }

    #[test]
    fn depth_of_flat_numbers_is_zero() {
        assert_eq!(GrossNumber::zero().depth(), 0);
        assert_eq!(GrossNumber::from_int(7).depth(), 0);
        assert_eq!(g().depth(), 0);
        let n = GrossNumber::normalize(vec![term(3, 2), term(9, 1), term(2, 0)]).unwrap();
        assert_eq!(n.depth(), 0);
    }
}
