//! Expression trees in one variable and their exact evaluation.

use std::fmt;

use gross_core::{GrossNumber, Rational, DEFAULT_MAX_TERMS};

use crate::error::ExprError;
use crate::format::format_number;

/// An arithmetic expression in the single variable `x` with gross-number
/// constants. Powers take literal integer exponents (possibly negative).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Const(GrossNumber),
    Var,
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Neg(Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, i32),
    Min(Box<Expr>, Box<Expr>),
    Max(Box<Expr>, Box<Expr>),
}

impl Expr {
    pub fn constant(n: GrossNumber) -> Expr {
        Expr::Const(n)
    }

    pub fn var() -> Expr {
        Expr::Var
    }

    pub fn add(self, rhs: Expr) -> Expr {
        Expr::Add(Box::new(self), Box::new(rhs))
    }

    pub fn sub(self, rhs: Expr) -> Expr {
        Expr::Sub(Box::new(self), Box::new(rhs))
    }

    pub fn neg(self) -> Expr {
        Expr::Neg(Box::new(self))
    }

    pub fn mul(self, rhs: Expr) -> Expr {
        Expr::Mul(Box::new(self), Box::new(rhs))
    }

    pub fn div(self, rhs: Expr) -> Expr {
        Expr::Div(Box::new(self), Box::new(rhs))
    }

    pub fn pow(self, k: i32) -> Expr {
        Expr::Pow(Box::new(self), k)
    }

    pub fn min(self, rhs: Expr) -> Expr {
        Expr::Min(Box::new(self), Box::new(rhs))
    }

    pub fn max(self, rhs: Expr) -> Expr {
        Expr::Max(Box::new(self), Box::new(rhs))
    }

    /// True when the tree mentions the variable.
    pub fn uses_var(&self) -> bool {
        match self {
            Expr::Const(_) => false,
            Expr::Var => true,
            Expr::Add(a, b)
            | Expr::Sub(a, b)
            | Expr::Mul(a, b)
            | Expr::Div(a, b)
            | Expr::Min(a, b)
            | Expr::Max(a, b) => a.uses_var() || b.uses_var(),
            Expr::Neg(a) => a.uses_var(),
            Expr::Pow(a, _) => a.uses_var(),
        }
    }
}

/// Knobs for evaluation; `max_terms` is the division budget before a quotient
/// is declared truncated.
#[derive(Clone, Copy, Debug)]
pub struct EvalOptions {
    pub max_terms: usize,
}

impl Default for EvalOptions {
    fn default() -> Self {
        EvalOptions {
            max_terms: DEFAULT_MAX_TERMS,
        }
    }
}

/// Evaluate the tree at `x`, exactly. Division must terminate within the
/// budget or the truncated quotient is reported as an error.
pub fn evaluate(e: &Expr, x: &GrossNumber, opts: &EvalOptions) -> Result<GrossNumber, ExprError> {
    match e {
        Expr::Const(n) => Ok(n.clone()),
        Expr::Var => Ok(x.clone()),
        Expr::Add(a, b) => Ok(evaluate(a, x, opts)? + evaluate(b, x, opts)?),
        Expr::Sub(a, b) => Ok(evaluate(a, x, opts)? - evaluate(b, x, opts)?),
        Expr::Neg(a) => Ok(-evaluate(a, x, opts)?),
        Expr::Mul(a, b) => Ok(evaluate(a, x, opts)? * evaluate(b, x, opts)?),
        Expr::Div(a, b) => {
            let numer = evaluate(a, x, opts)?;
            let denom = evaluate(b, x, opts)?;
            divide_exactly(&numer, &denom, opts)
        }
        Expr::Pow(a, k) => {
            let base = evaluate(a, x, opts)?;
            if *k >= 0 {
                Ok(base.pow_nat(*k as u32))
            } else {
                divide_exactly(&GrossNumber::one(), &base.pow_nat(k.unsigned_abs()), opts)
            }
        }
        Expr::Min(a, b) => Ok(evaluate(a, x, opts)?.min(evaluate(b, x, opts)?)),
        Expr::Max(a, b) => Ok(evaluate(a, x, opts)?.max(evaluate(b, x, opts)?)),
    }
}

/// Division that insists on exactness within the term budget.
pub fn divide_exactly(
    a: &GrossNumber,
    b: &GrossNumber,
    opts: &EvalOptions,
) -> Result<GrossNumber, ExprError> {
    let d = a.divide(b, opts.max_terms)?;
    if d.exact {
        Ok(d.quotient)
    } else {
        Err(ExprError::TruncatedDivision {
            quotient: d.quotient,
        })
    }
}

const PREC_SUM: u8 = 0;
const PREC_FACTOR: u8 = 1;
const PREC_UNARY: u8 = 2;
const PREC_ATOM: u8 = 3;

fn write_wrapped(
    f: &mut fmt::Formatter<'_>,
    wrap: bool,
    inner: impl FnOnce(&mut fmt::Formatter<'_>) -> fmt::Result,
) -> fmt::Result {
    if wrap {
        f.write_str("(")?;
        inner(f)?;
        f.write_str(")")
    } else {
        inner(f)
    }
}

/// A `/` at brace depth 0 would read back as division, not as a fraction
/// digit; such texts cannot be embedded in expression syntax directly.
fn fraction_free(s: &str) -> bool {
    let mut depth = 0usize;
    for c in s.chars() {
        match c {
            '{' => depth += 1,
            '}' => depth = depth.saturating_sub(1),
            '/' if depth == 0 => return false,
            _ => {}
        }
    }
    true
}

fn common_denominator(n: &GrossNumber) -> num_bigint::BigInt {
    use num_integer::Integer;
    n.terms()
        .iter()
        .fold(num_bigint::BigInt::from(1), |acc, t| {
            acc.lcm(t.digit.denom())
        })
}

fn render(e: &Expr, f: &mut fmt::Formatter<'_>, parent: u8) -> fmt::Result {
    match e {
        Expr::Const(n) => {
            let s = format_number(n);
            if fraction_free(&s) {
                let needs = parent > PREC_SUM && (n.terms().len() > 1 || s.starts_with('-'));
                write_wrapped(f, needs, |f| f.write_str(&s))
            } else {
                // Print as an explicit division with integer digits so the
                // expression grammar reassembles the same value.
                let d = common_denominator(n);
                let scaled = n.scale(&Rational::from_integer(d.clone()));
                let ns = format_number(&scaled);
                write_wrapped(f, parent > PREC_FACTOR, |f| {
                    let inner = scaled.terms().len() > 1 || ns.starts_with('-');
                    write_wrapped(f, inner, |f| f.write_str(&ns))?;
                    write!(f, "/{d}")
                })
            }
        }
        Expr::Var => f.write_str("x"),
        Expr::Add(a, b) => write_wrapped(f, parent > PREC_SUM, |f| {
            render(a, f, PREC_SUM)?;
            f.write_str(" + ")?;
            render(b, f, PREC_SUM + 1)?;
            Ok(())
        }),
        Expr::Sub(a, b) => write_wrapped(f, parent > PREC_SUM, |f| {
            render(a, f, PREC_SUM)?;
            f.write_str(" - ")?;
            render(b, f, PREC_SUM + 1)?;
            Ok(())
        }),
        Expr::Neg(a) => write_wrapped(f, parent > PREC_FACTOR, |f| {
            f.write_str("-")?;
            render(a, f, PREC_UNARY)
        }),
        Expr::Mul(a, b) => write_wrapped(f, parent > PREC_FACTOR, |f| {
            render(a, f, PREC_FACTOR)?;
            f.write_str("*")?;
            render(b, f, PREC_FACTOR + 1)?;
            Ok(())
        }),
        Expr::Div(a, b) => write_wrapped(f, parent > PREC_FACTOR, |f| {
            render(a, f, PREC_FACTOR)?;
            f.write_str("/")?;
            render(b, f, PREC_UNARY + 1)?;
            Ok(())
        }),
        Expr::Pow(a, k) => write_wrapped(f, parent > PREC_UNARY, |f| {
            render(a, f, PREC_ATOM)?;
            write!(f, "^{k}")
        }),
        Expr::Min(a, b) => {
            f.write_str("min(")?;
            render(a, f, PREC_SUM)?;
            f.write_str(", ")?;
            render(b, f, PREC_SUM)?;
            f.write_str(")")
        }
        Expr::Max(a, b) => {
            f.write_str("max(")?;
            render(a, f, PREC_SUM)?;
            f.write_str(", ")?;
            render(b, f, PREC_SUM)?;
            f.write_str(")")
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        render(self, f, PREC_SUM)
    }
}
