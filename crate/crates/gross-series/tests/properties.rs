//! Property tests for the closed-form sums, checked against brute-force
//! accumulation for finite counts and against structural identities (first
//! item peeled off, additivity, antisymmetry) for infinite ones.

use gross_core::{GrossNumber, Rational};
use gross_series::{
    arithmetic_sum, decimal_difference, geometric_sum, rational_power, repeated_sum, ExpSum,
};
use gross_testkit::{oracles, strategies};
use proptest::prelude::*;

/// Counts that the summation routines must accept: small finite naturals and
/// small multiples of the infinite unit.
fn item_count() -> impl Strategy<Value = GrossNumber> {
    prop_oneof![
        (1i64..=40).prop_map(GrossNumber::from_int),
        (1i64..=6).prop_map(|k| {
            GrossNumber::grossone().scale(&Rational::from_integer(k.into()))
        }),
    ]
}

/// A rational with at most three decimal digits, the last of them nonzero.
fn three_digit_decimal() -> impl Strategy<Value = Rational> {
    (0i64..=99, 1i64..=9, any::<bool>()).prop_map(|(head, last, negative)| {
        let m = head * 10 + last;
        Rational::new((if negative { -m } else { m }).into(), 1000.into())
    })
}

proptest! {
    #[test]
    fn finite_arithmetic_sums_match_term_accumulation(
        a1 in strategies::rational(),
        d in strategies::rational(),
        n in 1u64..=12,
    ) {
        let sum = arithmetic_sum(
            &GrossNumber::from_rational(a1.clone()),
            &GrossNumber::from_rational(d.clone()),
            &GrossNumber::from_int(n as i64),
        )
        .unwrap();
        let expected = oracles::arithmetic_sum_brute(&a1, &d, n);
        prop_assert_eq!(sum.as_rational(), Some(expected));
    }

    #[test]
    fn finite_geometric_sums_match_term_accumulation(
        q in strategies::rational(),
        i0 in 0u32..=6,
        extra in 0u64..=6,
    ) {
        let n = i0 as u64 + extra;
        let sum = geometric_sum(
            &GrossNumber::from_rational(q.clone()),
            &GrossNumber::from_int(n as i64),
            i0,
        )
        .unwrap();
        let expected = oracles::geometric_sum_brute(&q, i0 as u64, n);
        let value = sum.as_number().expect("finite rational ratios collapse");
        prop_assert_eq!(value.as_rational(), Some(expected));
    }

    // Dropping the first item from an infinite geometric sum must leave
    // exactly that item behind, even when both sums stay symbolic.
    #[test]
    fn infinite_geometric_sums_peel_their_first_item(
        numer in 1i64..=12,
        denom in 1i64..=6,
        i0 in 0u32..=8,
    ) {
        let q = Rational::new(numer.into(), denom.into());
        prop_assume!(q != Rational::from_integer(1.into()));
        let ratio = GrossNumber::from_rational(q.clone());
        let from_i0 = geometric_sum(&ratio, &GrossNumber::grossone(), i0).unwrap();
        let from_next = geometric_sum(&ratio, &GrossNumber::grossone(), i0 + 1).unwrap();
        let first_item = rational_power(&q, &GrossNumber::from_int(i0 as i64)).unwrap();
        prop_assert_eq!(from_i0.sub(&from_next), first_item);
    }

    #[test]
    fn monomial_ratio_sums_match_term_accumulation(
        c in strategies::nonzero_rational(),
        p in prop_oneof![Just(-2i64), Just(-1), Just(1), Just(2)],
        i0 in 0u32..=3,
        extra in 0u64..=4,
    ) {
        let n = i0 as u64 + extra;
        let q = GrossNumber::monomial(c, GrossNumber::from_int(p)).unwrap();
        let sum = geometric_sum(&q, &GrossNumber::from_int(n as i64), i0).unwrap();
        let mut acc = GrossNumber::zero();
        for i in i0 as u64..=n {
            let mut power = GrossNumber::one();
            for _ in 0..i {
                power = &power * &q;
            }
            acc = acc + power;
        }
        prop_assert_eq!(sum, ExpSum::from_number(acc));
    }

    #[test]
    fn repeated_sums_add_over_counts(
        item in strategies::gross_number(1),
        a in item_count(),
        b in item_count(),
    ) {
        let separately = repeated_sum(&item, &a).unwrap() + repeated_sum(&item, &b).unwrap();
        let together = repeated_sum(&item, &(&a + &b)).unwrap();
        prop_assert_eq!(separately, together);
    }

    #[test]
    fn decimal_self_difference_is_zero(
        v in three_digit_decimal(),
        places in prop_oneof![
            Just(GrossNumber::grossone()),
            (3i64..=8).prop_map(GrossNumber::from_int),
        ],
    ) {
        let difference = decimal_difference(&v, &v, &places).unwrap();
        prop_assert!(difference.is_zero());
    }

    #[test]
    fn decimal_differences_are_antisymmetric(
        a in three_digit_decimal(),
        b in three_digit_decimal(),
        places in prop_oneof![
            Just(GrossNumber::grossone()),
            (3i64..=8).prop_map(GrossNumber::from_int),
        ],
    ) {
        let forward = decimal_difference(&a, &b, &places).unwrap();
        let backward = decimal_difference(&b, &a, &places).unwrap();
        prop_assert_eq!(forward, backward.neg());
    }

    // With as many places as digits, no digit repeats and the difference is
    // the plain rational one.
    #[test]
    fn exact_place_counts_give_plain_differences(
        a in three_digit_decimal(),
        b in three_digit_decimal(),
    ) {
        let difference = decimal_difference(&a, &b, &GrossNumber::from_int(3)).unwrap();
        let expected = ExpSum::from_number(GrossNumber::from_rational(a - b));
        prop_assert_eq!(difference, expected);
    }
}
