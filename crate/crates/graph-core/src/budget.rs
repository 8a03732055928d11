//! Process-wide vertex-budget override.
//!
//! Exhaustive-search operations cap their input size with a documented
//! default budget. The command-line front end can raise those caps for
//! experimentation; libraries read the effective value through
//! [`effective_vertex_budget`]. Raised budgets are unsupported territory:
//! the algorithms stay exact but runtimes grow combinatorially.

use std::sync::atomic::{AtomicUsize, Ordering};

use crate::MAX_VERTICES;

// 0 encodes "no override"; a budget of zero vertices is never meaningful.
static OVERRIDE: AtomicUsize = AtomicUsize::new(0);

/// Installs or clears the global budget override.
pub fn set_vertex_budget_override(limit: Option<usize>) {
    OVERRIDE.store(limit.unwrap_or(0), Ordering::Relaxed);
}

/// The budget an operation with the given default should enforce: the
/// default, raised to the override when one is set, never above the
/// representation capacity.
pub fn effective_vertex_budget(default_limit: usize) -> usize {
    let o = OVERRIDE.load(Ordering::Relaxed);
    default_limit.max(o).min(MAX_VERTICES)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn override_raises_but_never_lowers_or_exceeds_capacity() {
        set_vertex_budget_override(None);
        assert_eq!(effective_vertex_budget(12), 12);
        set_vertex_budget_override(Some(9));
        assert_eq!(effective_vertex_budget(12), 12);
        set_vertex_budget_override(Some(14));
        assert_eq!(effective_vertex_budget(12), 14);
        set_vertex_budget_override(Some(99));
        assert_eq!(effective_vertex_budget(12), MAX_VERTICES);
        set_vertex_budget_override(None);
        assert_eq!(effective_vertex_budget(12), 12);
    }
}
