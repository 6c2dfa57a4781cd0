//! Text syntax, expression trees, and symbolic fraction forms over
//! gross numbers.
//!
//! Three layers live here:
//!
//! * a parser and formatter for the positional numeral syntax itself
//!   (`7.6G^{24.5G - 7.1} + 34G^3.2 - ...`), round-tripping with
//!   [`format_number`];
//! * one-variable expression trees ([`Expr`]) with exact evaluation, plus
//!   piecewise-defined functions ([`PiecewiseFunc`]) read from `.gfn` text;
//! * reduced polynomial fractions ([`RationalForm`]) in the variable and an
//!   auxiliary step symbol, used to factor difference quotients symbolically.
//!
//! Everything is exact: division either comes out with a finite positional
//! representation or reports the truncated quotient in the error.

mod error;
mod expr;
mod format;
mod func;
mod parse;
mod rational_form;

pub use error::ExprError;
pub use expr::{divide_exactly, evaluate, EvalOptions, Expr};
pub use format::{decimal_string, format_number, format_rational};
pub use func::PiecewiseFunc;
pub use parse::{parse_expr, parse_function, parse_number};
pub use rational_form::{rational_form_with, to_rational_form, Poly2, RationalForm};
