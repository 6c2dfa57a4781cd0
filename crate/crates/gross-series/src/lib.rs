//! Closed-form summation with an exact infinite unit.
//!
//! Divergent-looking sums become ordinary arithmetic once the number of items
//! is a first-class number: an arithmetic progression summed over ① items, a
//! geometric series carried out to an infinite index, or a decimal expansion
//! extended digit by digit past every finite position. This crate provides
//! those closed forms plus the exponential-sum numbers (`b^①` and friends)
//! needed to state them, and the point-counting results that fall out of
//! treating interval lengths as exact counts.
//!
//! Everything is exact: no limits, no rounding, no convergence tests. A sum
//! either has a closed form in this arithmetic or the call reports why not.

mod count;
mod error;
mod expsum;
mod sums;

pub use count::{count_points, PointKind};
pub use error::SeriesError;
pub use expsum::{ExpSum, ExpTerm};
pub use sums::{
    arithmetic_sum, decimal_difference, geometric_sum, rational_power, repeated_sum,
};
