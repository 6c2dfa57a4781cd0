//! Test-only companions for the gross-number crates: proptest strategies
//! producing well-distributed gross numbers, and slow-but-obviously-correct
//! oracles (brute-force sums, Horner evaluation, termwise differentiation)
//! against which the production algorithms are checked.
//!
//! This crate is a dev-dependency everywhere; nothing in it ships.

pub mod strategies {
    //! Random generators for rationals, gross numbers, and expression trees.

    use gross_core::{GrossNumber, Rational};
    use num_traits::Zero;
    use proptest::prelude::*;

    /// Small exact rationals: numerators in `-12..=12`, denominators in
    /// `1..=6`. Zero is included on purpose so cancellation paths run.
    pub fn rational() -> impl Strategy<Value = Rational> {
        (-12i64..=12, 1i64..=6).prop_map(|(n, d)| Rational::new(n.into(), d.into()))
    }

    /// Like [`rational`], filtered away from zero (for divisors).
    pub fn nonzero_rational() -> impl Strategy<Value = Rational> {
        rational().prop_filter("divisor must be nonzero", |r| !r.is_zero())
    }

    /// Purely finite gross numbers (zero or a single power-0 term).
    pub fn rational_number() -> impl Strategy<Value = GrossNumber> {
        rational().prop_map(GrossNumber::from_rational)
    }

    /// Gross numbers whose grosspower nesting stays at or below `depth`
    /// (0 means purely rational grosspowers). Up to four terms before
    /// normalization, so same-power collisions and zero digits occur.
    pub fn gross_number(depth: u32) -> BoxedStrategy<GrossNumber> {
        let power: BoxedStrategy<GrossNumber> = if depth == 0 {
            rational_number().boxed()
        } else {
            prop_oneof![
                2 => rational_number(),
                3 => gross_number(depth - 1),
            ]
            .boxed()
        };
        proptest::collection::vec((rational(), power), 0..=4)
            .prop_map(|terms| {
                GrossNumber::normalize(terms)
                    .expect("generated nesting stays under the depth cap")
            })
            .boxed()
    }

    /// Unnormalized term lists: duplicated powers and zero digits are
    /// common, which is the point — they feed normalization tests.
    pub fn raw_terms() -> impl Strategy<Value = Vec<(Rational, GrossNumber)>> {
        let power = prop_oneof![
            3 => (-3i64..=3).prop_map(GrossNumber::from_int),
            1 => gross_number(1),
        ];
        proptest::collection::vec((rational(), power), 0..=6)
    }

    /// Dense polynomial coefficient lists `c0..=c_deg`, degree at most 5.
    pub fn polynomial() -> impl Strategy<Value = Vec<Rational>> {
        proptest::collection::vec(rational(), 1..=6)
    }

    /// Expression trees over one variable built from +, -, unary minus, *,
    /// small non-negative powers, min, and max. Division is left out so
    /// every tree evaluates exactly at every point.
    pub fn simple_expr() -> BoxedStrategy<gross_expr::Expr> {
        use gross_expr::Expr;
        let leaf = prop_oneof![
            3 => rational_number().prop_map(Expr::constant),
            2 => Just(Expr::var()),
        ];
        leaf.prop_recursive(3, 24, 2, |inner| {
            prop_oneof![
                (inner.clone(), inner.clone()).prop_map(|(a, b)| a.add(b)),
                (inner.clone(), inner.clone()).prop_map(|(a, b)| a.sub(b)),
                inner.clone().prop_map(|a| a.neg()),
                (inner.clone(), inner.clone()).prop_map(|(a, b)| a.mul(b)),
                (inner.clone(), 0i32..=3).prop_map(|(a, k)| a.pow(k)),
                (inner.clone(), inner.clone()).prop_map(|(a, b)| a.min(b)),
                (inner.clone(), inner).prop_map(|(a, b)| a.max(b)),
            ]
        })
        .boxed()
    }
}

pub mod oracles {
    //! Slow reference implementations, written as directly as possible.

    use gross_core::{GrossNumber, Rational};
    use gross_expr::Expr;
    use num_traits::Zero;

    /// Σ `coeffs[i] · x^i` by Horner's scheme.
    pub fn poly_eval(coeffs: &[Rational], x: &GrossNumber) -> GrossNumber {
        let mut acc = GrossNumber::zero();
        for c in coeffs.iter().rev() {
            acc = acc * x + GrossNumber::from_rational(c.clone());
        }
        acc
    }

    /// Coefficients of the formal derivative of Σ `coeffs[i] · x^i`.
    pub fn poly_derivative(coeffs: &[Rational]) -> Vec<Rational> {
        coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * Rational::from_integer(i.into()))
            .collect()
    }

    /// The expression `c0 + c1*x + c2*x^2 + ...` built literally.
    pub fn poly_expr(coeffs: &[Rational]) -> Expr {
        let mut acc = Expr::constant(GrossNumber::zero());
        for (i, c) in coeffs.iter().enumerate() {
            let term = Expr::constant(GrossNumber::from_rational(c.clone()))
                .mul(Expr::var().pow(i as i32));
            acc = acc.add(term);
        }
        acc
    }

    /// Σ_{i=1}^{n} (a1 + (i-1)·d) by literal accumulation.
    pub fn arithmetic_sum_brute(a1: &Rational, d: &Rational, n: u64) -> Rational {
        let mut acc = Rational::zero();
        let mut term = a1.clone();
        for _ in 0..n {
            acc += &term;
            term += d;
        }
        acc
    }

    /// Σ_{i=i0}^{n} q^i by literal accumulation (0^0 counts as 1).
    pub fn geometric_sum_brute(q: &Rational, i0: u64, n: u64) -> Rational {
        let mut acc = Rational::zero();
        for i in i0..=n {
            acc += pow_rational(q, i);
        }
        acc
    }

    fn pow_rational(q: &Rational, k: u64) -> Rational {
        let mut acc = Rational::from_integer(1.into());
        for _ in 0..k {
            acc *= q;
        }
        acc
    }
}
