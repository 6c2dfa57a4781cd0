//! Exact derivatives without limits.
//!
//! The derivative machinery here never shrinks anything toward zero. A
//! one-sided difference f(x) − f(x − l) is factored symbolically into
//! l·φ(x, l), an identity that holds for every step l, finite or
//! infinitesimal; the one-sided derivative is φ with the step substituted by
//! zero — plain evaluation, not a limit. When the left and right results
//! agree the derivative is unique; when they differ the function has a corner
//! and the honest answer is the closed interval between the two side slopes.
//! Alongside the symbolic route there are two arithmetic ones: difference
//! quotients over the neighbors of a grid point, and a single infinitesimal
//! step ①⁻¹ whose quotient carries the derivative as its leading part.

mod error;
mod formulae;
mod numeric;
mod reldiff;
mod report;

pub use error::DerivError;
pub use formulae::{formulae_continuity_at, FormulaeCheck, FormulaeStatus};
pub use numeric::{derivative_via_infinitesimal, numerical_deriv_interval};
pub use reldiff::{relative_difference, side_derivative, tilde, RelDiff, Side};
pub use report::{derivative_report, DerivOutcome, DerivReport};
