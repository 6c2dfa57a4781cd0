//! Discrete domains with exact infinitesimal resolution.
//!
//! A grid over [a, b] with step ①⁻¹ has infinitely many points, yet every
//! point, every neighbor, and every gap is an exact number. On top of that
//! footing this crate classifies continuity the observable way: a set is
//! continuous in a unit of measure when its gaps are invisible (infinitesimal)
//! in that unit, and a function is continuous at a point when stepping to the
//! neighboring numerals moves its value by a negligible amount. The verdicts
//! are decidable — no limits, no epsilons — and they honestly depend on the
//! unit, which is an argument rather than an assumption.

mod continuity;
mod error;
mod grid;
mod sequences;

pub use continuity::{
    func_continuity_at, func_continuity_over, set_continuity, ContinuityVerdict, OverallVerdict,
    PointVerdict, SetKind, SideCheck, DEFAULT_BUDGET,
};
pub use error::TopoError;
pub use grid::{convert_unit, Grid, Unit};
pub use sequences::sequence_reach;
