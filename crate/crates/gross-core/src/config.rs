//! Process-wide tunables.

use std::sync::atomic::{AtomicUsize, Ordering};

/// Default cap on grosspower nesting depth.
pub const DEFAULT_MAX_DEPTH: usize = 3;

/// Default term budget for long division before it reports inexactness.
pub const DEFAULT_MAX_TERMS: usize = 32;

static MAX_DEPTH: AtomicUsize = AtomicUsize::new(DEFAULT_MAX_DEPTH);

/// Current cap on grosspower nesting depth.
pub fn max_depth() -> usize {
    MAX_DEPTH.load(Ordering::Relaxed)
}

/// Replace the nesting-depth cap for the whole process.
///
/// Existing values are untouched; the cap is enforced where new nesting can
/// appear (term normalization and `mono_pow`).
pub fn set_max_depth(depth: usize) {
    MAX_DEPTH.store(depth, Ordering::Relaxed);
}
