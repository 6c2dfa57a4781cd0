//! Polynomial fractions in up to two symbols (`x` and a step symbol `h`)
//! with gross-number coefficients: the normal form behind symbolic
//! factorization of difference quotients.

use std::collections::BTreeMap;

use gross_core::{GrossNumber, DEFAULT_MAX_TERMS};

use crate::error::ExprError;
use crate::expr::Expr;
use crate::format::format_number;

/// A polynomial in `x` and `h`: monomial `(i, j)` maps to the coefficient of
/// `x^i * h^j`. Zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Poly2 {
    coeffs: BTreeMap<(u32, u32), GrossNumber>,
}

impl Poly2 {
    pub fn zero() -> Self {
        Poly2::default()
    }

    pub fn constant(n: GrossNumber) -> Self {
        let mut p = Poly2::default();
        p.insert_add((0, 0), n);
        p
    }

    pub fn one() -> Self {
        Self::constant(GrossNumber::one())
    }

    pub fn x() -> Self {
        let mut p = Poly2::default();
        p.insert_add((1, 0), GrossNumber::one());
        p
    }

    pub fn h() -> Self {
        let mut p = Poly2::default();
        p.insert_add((0, 1), GrossNumber::one());
        p
    }

    fn insert_add(&mut self, key: (u32, u32), value: GrossNumber) {
        if value.is_zero() {
            return;
        }
        match self.coeffs.entry(key) {
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + &value;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(value);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn monomials(&self) -> impl Iterator<Item = (&(u32, u32), &GrossNumber)> {
        self.coeffs.iter()
    }

    pub fn add(&self, other: &Poly2) -> Poly2 {
        let mut out = self.clone();
        for (k, v) in &other.coeffs {
            out.insert_add(*k, v.clone());
        }
        out
    }

    pub fn neg(&self) -> Poly2 {
        Poly2 {
            coeffs: self
                .coeffs
                .iter()
                .map(|(k, v)| (*k, -v))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Poly2) -> Poly2 {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Poly2) -> Poly2 {
        let mut out = Poly2::default();
        for ((i1, j1), c1) in &self.coeffs {
            for ((i2, j2), c2) in &other.coeffs {
                out.insert_add((i1 + i2, j1 + j2), c1 * c2);
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Poly2 {
        let mut out = Poly2::one();
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    /// Exact value at the pair `(x, h)`.
    pub fn eval(&self, x: &GrossNumber, h: &GrossNumber) -> GrossNumber {
        let mut acc = GrossNumber::zero();
        for ((i, j), c) in &self.coeffs {
            acc = acc + c * x.pow_nat(*i) * h.pow_nat(*j);
        }
        acc
    }

    /// Drop every monomial carrying `h`: the polynomial at `h = 0`.
    pub fn at_h_zero(&self) -> Poly2 {
        Poly2 {
            coeffs: self
                .coeffs
                .iter()
                .filter(|((_, j), _)| *j == 0)
                .map(|(k, v)| (*k, v.clone()))
                .collect(),
        }
    }

    /// Smallest `h`-degree over all monomials (`None` when zero).
    pub fn min_h_degree(&self) -> Option<u32> {
        self.coeffs.keys().map(|(_, j)| *j).min()
    }

    fn min_x_degree(&self) -> Option<u32> {
        self.coeffs.keys().map(|(i, _)| *i).min()
    }

    fn shift_down(&self, dx: u32, dh: u32) -> Poly2 {
        Poly2 {
            coeffs: self
                .coeffs
                .iter()
                .map(|((i, j), v)| ((i - dx, j - dh), v.clone()))
                .collect(),
        }
    }

    /// All monomials free of `h`?
    pub fn is_univariate_in_x(&self) -> bool {
        self.coeffs.keys().all(|(_, j)| *j == 0)
    }

    /// Human-readable text with the given symbol names, highest powers first.
    pub fn render(&self, x_name: &str, h_name: &str) -> String {
        if self.coeffs.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        let zero = GrossNumber::zero();
        for (idx, ((i, j), coeff)) in self.coeffs.iter().rev().enumerate() {
            let negative = coeff < &zero;
            if idx == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let magnitude = if negative { -coeff } else { coeff.clone() };
            out.push_str(&monomial_body(&magnitude, *i, *j, x_name, h_name));
        }
        out
    }
}

fn monomial_body(magnitude: &GrossNumber, i: u32, j: u32, x_name: &str, h_name: &str) -> String {
    let mut vars: Vec<String> = Vec::new();
    if i == 1 {
        vars.push(x_name.to_string());
    } else if i > 1 {
        vars.push(format!("{x_name}^{i}"));
    }
    if j == 1 {
        vars.push(h_name.to_string());
    } else if j > 1 {
        vars.push(format!("{h_name}^{j}"));
    }
    let vars = vars.join("*");
    if vars.is_empty() {
        return format_number(magnitude);
    }
    if magnitude == &GrossNumber::one() {
        return vars;
    }
    let coeff = format_number(magnitude);
    let coeff = if magnitude.terms().len() > 1 {
        format!("({coeff})")
    } else {
        coeff
    };
    format!("{coeff}*{vars}")
}

/// A quotient of two [`Poly2`]s with a nonzero denominator, kept reduced:
/// common monomial content is cancelled, a full polynomial gcd is cancelled
/// in the one-symbol case, and the denominator is scaled monic when that is
/// exact.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalForm {
    numer: Poly2,
    denom: Poly2,
}

impl RationalForm {
    pub fn new(numer: Poly2, denom: Poly2) -> Result<Self, ExprError> {
        if denom.is_zero() {
            return Err(ExprError::ZeroDenominator);
        }
        if numer.is_zero() {
            return Ok(RationalForm {
                numer: Poly2::zero(),
                denom: Poly2::one(),
            });
        }
        let (mut numer, mut denom) = cancel_monomial_content(numer, denom);
        if numer.is_univariate_in_x() && denom.is_univariate_in_x() {
            if let Some((n, d)) = cancel_univariate_gcd(&numer, &denom) {
                numer = n;
                denom = d;
            }
        }
        let (numer, denom) = scale_denominator_monic(numer, denom);
        Ok(RationalForm { numer, denom })
    }

    pub fn from_poly(p: Poly2) -> Self {
        RationalForm {
            numer: p,
            denom: Poly2::one(),
        }
    }

    pub fn constant(n: GrossNumber) -> Self {
        Self::from_poly(Poly2::constant(n))
    }

    /// The substitution target `x`.
    pub fn var_only() -> Self {
        Self::from_poly(Poly2::x())
    }

    /// The substitution target `x + h`.
    pub fn var_plus_h() -> Self {
        Self::from_poly(Poly2::x().add(&Poly2::h()))
    }

    /// The substitution target `x - h`.
    pub fn var_minus_h() -> Self {
        Self::from_poly(Poly2::x().sub(&Poly2::h()))
    }

    pub fn numer(&self) -> &Poly2 {
        &self.numer
    }

    pub fn denom(&self) -> &Poly2 {
        &self.denom
    }

    pub fn is_zero(&self) -> bool {
        self.numer.is_zero()
    }

    pub fn add(&self, other: &Self) -> Result<Self, ExprError> {
        Self::new(
            self.numer
                .mul(&other.denom)
                .add(&other.numer.mul(&self.denom)),
            self.denom.mul(&other.denom),
        )
    }

    pub fn sub(&self, other: &Self) -> Result<Self, ExprError> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        RationalForm {
            numer: self.numer.neg(),
            denom: self.denom.clone(),
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self, ExprError> {
        Self::new(
            self.numer.mul(&other.numer),
            self.denom.mul(&other.denom),
        )
    }

    pub fn div(&self, other: &Self) -> Result<Self, ExprError> {
        if other.numer.is_zero() {
            return Err(ExprError::ZeroDenominator);
        }
        Self::new(
            self.numer.mul(&other.denom),
            self.denom.mul(&other.numer),
        )
    }

    pub fn pow(&self, k: i32) -> Result<Self, ExprError> {
        if k >= 0 {
            Self::new(self.numer.pow(k as u32), self.denom.pow(k as u32))
        } else {
            if self.numer.is_zero() {
                return Err(ExprError::ZeroDenominator);
            }
            let k = k.unsigned_abs();
            Self::new(self.denom.pow(k), self.numer.pow(k))
        }
    }

    /// Exact value at `(x, h)`; the denominator must be nonzero there and the
    /// division must come out exact.
    pub fn eval(&self, x: &GrossNumber, h: &GrossNumber) -> Result<GrossNumber, ExprError> {
        let denom = self.denom.eval(x, h);
        if denom.is_zero() {
            return Err(ExprError::DivisionByZero);
        }
        let numer = self.numer.eval(x, h);
        // A one-term divisor divides term by term, so the quotient needs
        // exactly as many terms as the dividend; only multi-term divisors
        // can expand indefinitely and need the budget.
        let budget = if denom.terms().len() == 1 {
            numer.terms().len().max(1)
        } else {
            DEFAULT_MAX_TERMS
        };
        let d = numer.divide(&denom, budget)?;
        if d.exact {
            Ok(d.quotient)
        } else {
            Err(ExprError::TruncatedDivision {
                quotient: d.quotient,
            })
        }
    }

    /// The form with `h` set to zero; fails when the denominator vanishes
    /// identically there.
    pub fn at_h_zero(&self) -> Result<Self, ExprError> {
        let denom = self.denom.at_h_zero();
        if denom.is_zero() {
            return Err(ExprError::ZeroDenominator);
        }
        Self::new(self.numer.at_h_zero(), denom)
    }

    /// Divide the numerator by one power of `h`, when it is so divisible
    /// (every numerator monomial carries `h`). Zero stays zero.
    pub fn factor_h_from_numerator(&self) -> Option<Self> {
        if self.numer.is_zero() {
            return Some(self.clone());
        }
        if self.numer.min_h_degree()? < 1 {
            return None;
        }
        Some(RationalForm {
            numer: self.numer.shift_down(0, 1),
            denom: self.denom.clone(),
        })
    }

    /// Mathematical equality by cross-multiplication (independent of any
    /// normal-form choices).
    pub fn equivalent(&self, other: &Self) -> bool {
        self.numer.mul(&other.denom) == other.numer.mul(&self.denom)
    }

    /// Text form with the given symbol names.
    pub fn render(&self, x_name: &str, h_name: &str) -> String {
        let numer = self.numer.render(x_name, h_name);
        if self.denom == Poly2::one() {
            return numer;
        }
        let numer = if self.numer.monomials().count() > 1 {
            format!("({numer})")
        } else {
            numer
        };
        format!("{numer}/({})", self.denom.render(x_name, h_name))
    }
}

/// Strip the common `x^a * h^b` content of the pair.
fn cancel_monomial_content(numer: Poly2, denom: Poly2) -> (Poly2, Poly2) {
    let dx = numer
        .min_x_degree()
        .unwrap_or(0)
        .min(denom.min_x_degree().unwrap_or(0));
    let dh = numer
        .min_h_degree()
        .unwrap_or(0)
        .min(denom.min_h_degree().unwrap_or(0));
    if dx == 0 && dh == 0 {
        (numer, denom)
    } else {
        (numer.shift_down(dx, dh), denom.shift_down(dx, dh))
    }
}

/// Make the denominator's leading coefficient 1 when every coefficient
/// divides exactly by it; otherwise leave the pair untouched.
fn scale_denominator_monic(numer: Poly2, denom: Poly2) -> (Poly2, Poly2) {
    let lead = match denom.coeffs.iter().next_back() {
        Some((_, c)) => c.clone(),
        None => return (numer, denom),
    };
    if lead == GrossNumber::one() {
        return (numer, denom);
    }
    let divide_all = |p: &Poly2| -> Option<Poly2> {
        let mut out = Poly2::default();
        for (k, v) in &p.coeffs {
            let d = v.divide(&lead, DEFAULT_MAX_TERMS).ok()?;
            if !d.exact {
                return None;
            }
            out.insert_add(*k, d.quotient);
        }
        Some(out)
    };
    match (divide_all(&numer), divide_all(&denom)) {
        (Some(n), Some(d)) => (n, d),
        _ => (numer, denom),
    }
}

// ----- univariate gcd with bail-out on inexact coefficient division -----

fn to_vec(p: &Poly2) -> Vec<GrossNumber> {
    let deg = p.coeffs.keys().map(|(i, _)| *i).max().unwrap_or(0) as usize;
    let mut v = vec![GrossNumber::zero(); deg + 1];
    for ((i, _), c) in &p.coeffs {
        v[*i as usize] = c.clone();
    }
    v
}

fn from_vec(v: &[GrossNumber]) -> Poly2 {
    let mut p = Poly2::default();
    for (i, c) in v.iter().enumerate() {
        p.insert_add((i as u32, 0), c.clone());
    }
    p
}

fn trim(mut v: Vec<GrossNumber>) -> Vec<GrossNumber> {
    while matches!(v.last(), Some(c) if c.is_zero()) {
        v.pop();
    }
    v
}

fn exact_quotient(a: &GrossNumber, b: &GrossNumber) -> Option<GrossNumber> {
    let d = a.divide(b, DEFAULT_MAX_TERMS).ok()?;
    if d.exact {
        Some(d.quotient)
    } else {
        None
    }
}

/// Long division of coefficient vectors; `None` when a coefficient division
/// is inexact (the gcd attempt is then abandoned).
fn vec_divmod(a: &[GrossNumber], b: &[GrossNumber]) -> Option<(Vec<GrossNumber>, Vec<GrossNumber>)> {
    let b = trim(b.to_vec());
    if b.is_empty() {
        return None;
    }
    let mut rem = trim(a.to_vec());
    let db = b.len() - 1;
    let lead = &b[db];
    let mut q = vec![GrossNumber::zero(); rem.len().saturating_sub(db)];
    while rem.len() > db {
        let dr = rem.len() - 1;
        let c = exact_quotient(&rem[dr], lead)?;
        let k = dr - db;
        for (i, bc) in b.iter().enumerate() {
            rem[k + i] = &rem[k + i] - &(bc * &c);
        }
        q[k] = c;
        rem = trim(rem);
    }
    Some((trim(q), rem))
}

fn vec_gcd(a: &[GrossNumber], b: &[GrossNumber]) -> Option<Vec<GrossNumber>> {
    let mut a = trim(a.to_vec());
    let mut b = trim(b.to_vec());
    while !b.is_empty() {
        let (_, r) = vec_divmod(&a, &b)?;
        a = b;
        b = r;
    }
    // normalize monic
    let lead = a.last()?.clone();
    let mut monic = Vec::with_capacity(a.len());
    for c in &a {
        monic.push(exact_quotient(c, &lead)?);
    }
    Some(monic)
}

fn cancel_univariate_gcd(numer: &Poly2, denom: &Poly2) -> Option<(Poly2, Poly2)> {
    let nv = to_vec(numer);
    let dv = to_vec(denom);
    let g = vec_gcd(&nv, &dv)?;
    if g.len() < 2 {
        return None; // constant gcd: nothing to cancel
    }
    let (nq, nr) = vec_divmod(&nv, &g)?;
    let (dq, dr) = vec_divmod(&dv, &g)?;
    if !nr.is_empty() || !dr.is_empty() {
        return None;
    }
    Some((from_vec(&nq), from_vec(&dq)))
}

/// Interpret the expression as a quotient of polynomials, substituting
/// `target` for the variable. Min/max nodes have no rational form.
pub fn rational_form_with(e: &Expr, target: &RationalForm) -> Result<RationalForm, ExprError> {
    match e {
        Expr::Const(n) => Ok(RationalForm::constant(n.clone())),
        Expr::Var => Ok(target.clone()),
        Expr::Add(a, b) => rational_form_with(a, target)?.add(&rational_form_with(b, target)?),
        Expr::Sub(a, b) => rational_form_with(a, target)?.sub(&rational_form_with(b, target)?),
        Expr::Neg(a) => Ok(rational_form_with(a, target)?.neg()),
        Expr::Mul(a, b) => rational_form_with(a, target)?.mul(&rational_form_with(b, target)?),
        Expr::Div(a, b) => rational_form_with(a, target)?.div(&rational_form_with(b, target)?),
        Expr::Pow(a, k) => rational_form_with(a, target)?.pow(*k),
        Expr::Min(..) | Expr::Max(..) => Err(ExprError::NotRationalForm),
    }
}

/// The expression as a reduced fraction of polynomials in `x`.
pub fn to_rational_form(e: &Expr) -> Result<RationalForm, ExprError> {
    rational_form_with(e, &RationalForm::var_only())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_expr;

    fn form_of(text: &str) -> RationalForm {
        to_rational_form(&parse_expr(text).unwrap()).unwrap()
    }

    #[test]
    fn plain_polynomials_have_unit_denominators() {
        let f = form_of("x^2");
        assert_eq!(f.denom(), &Poly2::one());
        assert_eq!(f.render("x", "h"), "x^2");
    }

    #[test]
    fn removable_singularities_cancel() {
        let f = form_of("(x^2 - 1)/(x - 1)");
        assert_eq!(f.denom(), &Poly2::one());
        assert_eq!(f.render("x", "h"), "x + 1");
        // evaluable at the removed point
        assert_eq!(
            f.eval(&GrossNumber::one(), &GrossNumber::zero()).unwrap(),
            GrossNumber::from_int(2)
        );
    }

    #[test]
    fn negative_powers_move_to_the_denominator() {
        let f = form_of("25*x^-1");
        assert_eq!(f.render("x", "h"), "25/(x)");
        assert_eq!(
            f.eval(&GrossNumber::from_int(5), &GrossNumber::zero()).unwrap(),
            GrossNumber::from_int(5)
        );
    }

    #[test]
    fn equivalence_ignores_representation() {
        let a = form_of("(x^2 - 1)/(x - 1)");
        let b = form_of("x + 1");
        assert!(a.equivalent(&b));
        assert!(!a.equivalent(&form_of("x")));
    }

    #[test]
    fn division_by_the_zero_polynomial_is_rejected() {
        let e = parse_expr("x/(x - x)").unwrap();
        assert_eq!(to_rational_form(&e).unwrap_err(), ExprError::ZeroDenominator);
    }

    #[test]
    fn factor_h_requires_h_content() {
        // f(x) = x^2 substituted at x+h, minus at x: (x+h)^2 - x^2 = 2xh + h^2
        let e = parse_expr("x^2").unwrap();
        let shifted = rational_form_with(&e, &RationalForm::var_plus_h()).unwrap();
        let base = rational_form_with(&e, &RationalForm::var_only()).unwrap();
        let delta = shifted.sub(&base).unwrap();
        let factored = delta.factor_h_from_numerator().unwrap();
        assert_eq!(factored.render("x", "r"), "2*x + r");
        assert!(base.factor_h_from_numerator().is_none());
    }

    #[test]
    fn min_max_have_no_rational_form() {
        let e = parse_expr("max(x, 2)").unwrap();
        assert_eq!(to_rational_form(&e).unwrap_err(), ExprError::NotRationalForm);
    }

    #[test]
    fn gross_coefficients_survive_normalization() {
        let f = form_of("G^-1*x^2 + 2");
        let x = GrossNumber::grossone();
        let v = f.eval(&x, &GrossNumber::zero()).unwrap();
        assert_eq!(v, GrossNumber::grossone() + GrossNumber::from_int(2));
    }
}
