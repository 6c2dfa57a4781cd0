//! Derivative estimates that use only arithmetic: difference quotients over
//! grid neighbors, and the one-step infinitesimal quotient for polynomials.

use gross_core::{GrossNumber, Rational};
use gross_expr::{divide_exactly, EvalOptions, Expr, PiecewiseFunc};
use gross_topo::{Grid, TopoError};
use num_traits::One;

use crate::error::DerivError;

/// The closed interval spanned by the two difference quotients of `f` at a
/// grid point: (f(x) − f(x⁻))/(x − x⁻) toward the left neighbor and
/// (f(x⁺) − f(x))/(x⁺ − x) toward the right one. Both neighbors must exist,
/// so endpoints are rejected the same way as points off the grid.
pub fn numerical_deriv_interval(
    f: &PiecewiseFunc,
    g: &Grid,
    x: &GrossNumber,
    opts: &EvalOptions,
) -> Result<(GrossNumber, GrossNumber), DerivError> {
    let (minus, plus) = match g.neighbors(x)? {
        (Some(m), Some(p)) => (m, p),
        _ => return Err(DerivError::Grid(TopoError::OffGrid)),
    };
    let feval = |p: &GrossNumber| {
        f.evaluate(p, opts)
            .map_err(|inner| DerivError::Eval { formula: "f", inner })
    };
    let fx = feval(x)?;
    let fm = feval(&minus)?;
    let fp = feval(&plus)?;
    let wrap = |inner| DerivError::Eval { formula: "f", inner };
    let lq = divide_exactly(&(&fx - &fm), &(x - &minus), opts).map_err(wrap)?;
    let rq = divide_exactly(&(&fp - &fx), &(&plus - x), opts).map_err(wrap)?;
    if lq <= rq {
        Ok((lq, rq))
    } else {
        Ok((rq, lq))
    }
}

/// Dense coefficient list (constant term first) of a polynomial expression.
/// Division, negative powers, and min/max disqualify the expression.
fn poly_coeffs(e: &Expr) -> Result<Vec<GrossNumber>, DerivError> {
    match e {
        Expr::Const(n) => Ok(vec![n.clone()]),
        Expr::Var => Ok(vec![GrossNumber::zero(), GrossNumber::one()]),
        Expr::Add(a, b) => Ok(poly_add(&poly_coeffs(a)?, &poly_coeffs(b)?, false)),
        Expr::Sub(a, b) => Ok(poly_add(&poly_coeffs(a)?, &poly_coeffs(b)?, true)),
        Expr::Neg(a) => Ok(poly_coeffs(a)?.iter().map(|c| -c).collect()),
        Expr::Mul(a, b) => Ok(poly_mul(&poly_coeffs(a)?, &poly_coeffs(b)?)),
        Expr::Pow(a, k) => {
            if *k < 0 {
                return Err(DerivError::NotPolynomial);
            }
            let base = poly_coeffs(a)?;
            let mut acc = vec![GrossNumber::one()];
            for _ in 0..*k {
                acc = poly_mul(&acc, &base);
            }
            Ok(acc)
        }
        Expr::Div(..) | Expr::Min(..) | Expr::Max(..) => Err(DerivError::NotPolynomial),
    }
}

fn poly_add(a: &[GrossNumber], b: &[GrossNumber], subtract: bool) -> Vec<GrossNumber> {
    let zero = GrossNumber::zero();
    (0..a.len().max(b.len()))
        .map(|i| {
            let ai = a.get(i).unwrap_or(&zero);
            let bi = b.get(i).unwrap_or(&zero);
            if subtract {
                ai - bi
            } else {
                ai + bi
            }
        })
        .collect()
}

fn poly_mul(a: &[GrossNumber], b: &[GrossNumber]) -> Vec<GrossNumber> {
    let mut out = vec![GrossNumber::zero(); a.len() + b.len() - 1];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            out[i + j] = &out[i + j] + &(ai * bj);
        }
    }
    out
}

fn poly_eval(coeffs: &[GrossNumber], x: &GrossNumber) -> GrossNumber {
    let mut acc = GrossNumber::zero();
    for c in coeffs.iter().rev() {
        acc = &(&acc * x) + c;
    }
    acc
}

/// Differentiate a polynomial at a point by pure arithmetic: take one
/// infinitesimal step h, form the exact quotient (f(x+h) − f(x))/h, and keep
/// the part at the derivative's own scale. The step is ①⁻¹ when the data is
/// finite; when coefficients or the point mix scales, the step shrinks just
/// enough that the quotient's tail sits strictly below every term of the
/// derivative, so the truncation is exact rather than approximate.
pub fn derivative_via_infinitesimal(
    f: &Expr,
    x: &GrossNumber,
) -> Result<GrossNumber, DerivError> {
    let coeffs = poly_coeffs(f)?;
    let deriv: Vec<GrossNumber> = coeffs
        .iter()
        .enumerate()
        .skip(1)
        .map(|(k, c)| c.scale(&Rational::from_integer((k as i64).into())))
        .collect();
    let dvalue = poly_eval(&deriv, x);
    if dvalue.is_zero() {
        return Ok(GrossNumber::zero());
    }
    let wrap = |inner: gross_core::GrossError| DerivError::Eval {
        formula: "f",
        inner: inner.into(),
    };

    // Scale bound on the quotient's tail Σ_{k≥2} c_k Σ_{j=2}^{k} C(k,j)
    // x^(k−j) h^(j−1): each term carries at least one factor of h, so its
    // grosspower is at most max lead(c_k·x^(k−j)) minus the step order.
    let floor = dvalue.terms().last().expect("nonzero number").power.clone();
    let mut ceiling: Option<GrossNumber> = None;
    for (k, c) in coeffs.iter().enumerate().skip(2) {
        if c.is_zero() {
            continue;
        }
        for j in 2..=k {
            let t = c * &x.pow_nat((k - j) as u32);
            if let Some(lead) = t.leading() {
                if ceiling.as_ref().map_or(true, |m| lead.power > *m) {
                    ceiling = Some(lead.power.clone());
                }
            }
        }
    }
    let one = GrossNumber::one();
    let order = match ceiling {
        Some(c) if c >= floor => &(&c - &floor) + &one,
        _ => one,
    };
    let h = GrossNumber::monomial(Rational::one(), -&order).map_err(wrap)?;

    let numerator = &poly_eval(&coeffs, &(x + &h)) - &poly_eval(&coeffs, x);
    let budget = numerator.terms().len().max(1);
    let d = numerator.divide(&h, budget).map_err(wrap)?;
    debug_assert!(d.exact, "monomial division is always exact");
    let kept = d
        .quotient
        .terms()
        .iter()
        .filter(|t| t.power >= floor)
        .map(|t| (t.digit.clone(), t.power.clone()));
    GrossNumber::normalize(kept).map_err(wrap)
}
