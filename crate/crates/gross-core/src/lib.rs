//! Exact arithmetic for gross numbers — finite sums of rational multiples of
//! powers of the infinite unit `G` (grossone), covering finite, infinite, and
//! infinitesimal values in one numeral system.
//!
//! A value is a normalized term list `c_1*G^{p_1} + ... + c_k*G^{p_k}`: the
//! grossdigits `c_i` are nonzero exact rationals, the grosspowers `p_i` are
//! themselves gross numbers of lower nesting depth, and terms are kept sorted
//! by strictly decreasing power. The empty list is exactly zero. All
//! operations are exact; nothing here rounds.
//!
//! Ring operations (`+`, `-`, `*`, `pow_nat`) are total: they only merge or
//! add existing grosspowers, so they can never deepen nesting. Fallible entry
//! points are the ones that introduce structure — [`GrossNumber::normalize`]
//! and [`GrossNumber::mono_pow`] (nesting cap) and [`GrossNumber::divide`]
//! (zero divisor).
//!
//! Textual parsing and formatting live in the companion expression crate;
//! this crate is the pure value layer.

mod config;
mod error;
mod number;
pub mod rational;

pub use config::{max_depth, set_max_depth, DEFAULT_MAX_DEPTH, DEFAULT_MAX_TERMS};
pub use error::GrossError;
pub use number::{Division, GrossNumber, GrossTerm, NumberClass};
pub use rational::Rational;
