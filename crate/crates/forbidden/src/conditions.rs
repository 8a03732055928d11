//! Condition checkers for minimal forbidden graphs.
//!
//! A graph is a minimal forbidden induced subgraph of the gap-`k` class
//! exactly when three conditions hold at once: it has a unique
//! dominating vertex `v`; deleting any vertex lowers neither the bound
//! side nor leaves slack, captured per parameter by a condition on
//! `g - v`; and its maximum degree exceeds the parameter by exactly
//! `k`. The checker reports the three conditions separately so callers
//! can see which one failed.

use graph_core::Graph;
use invariants::{
    clique_intersection_exactly, forced_multicolor_classes, has_clique_of_size, is_q_colorable,
    max_degree,
};

use crate::{ForbiddenError, Parameter};

/// Outcome of the three-condition minimality test.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConditionReport {
    /// Exactly one vertex is adjacent to all others.
    pub unique_dominating: bool,
    /// That vertex, when [`ConditionReport::unique_dominating`] holds.
    pub dominating_vertex: Option<usize>,
    /// With the dominating vertex removed: every color class in every
    /// optimal coloring has at least two vertices (chromatic side), or
    /// the maximum cliques of the whole graph intersect in exactly the
    /// dominating vertex (clique side).
    pub coloring_or_clique_condition: bool,
    /// Maximum degree exceeds the parameter by exactly the gap.
    pub gap_condition: bool,
}

impl ConditionReport {
    /// True exactly when all three conditions hold.
    pub fn verdict(&self) -> bool {
        self.unique_dominating && self.coloring_or_clique_condition && self.gap_condition
    }
}

/// Tests whether `g` is a minimal forbidden induced subgraph of the
/// gap-`k` class for `p`, by direct evaluation of the three
/// characterizing conditions.
///
/// # Errors
/// `TooSmall` for graphs on fewer than two vertices: such graphs lie in
/// every class, so minimal forbidden status is never at issue.
pub fn is_minimal_forbidden(
    g: &Graph,
    p: Parameter,
    k: usize,
) -> Result<ConditionReport, ForbiddenError> {
    let n = g.n();
    if n < 2 {
        return Err(ForbiddenError::TooSmall { n });
    }
    let dominating = g
        .dominating_vertices()
        .expect("two or more vertices present");
    let unique_dominating = dominating.len() == 1;
    let dominating_vertex = if unique_dominating {
        dominating.first()
    } else {
        None
    };
    let coloring_or_clique_condition = match (dominating_vertex, p) {
        (Some(v), Parameter::Chi) => forced_multicolor_classes(&g.delete_vertex(v))?,
        (Some(v), Parameter::Omega) => clique_intersection_exactly(g, v)?,
        (None, _) => false,
    };
    let gap_condition = max_degree(g)? == p.value(g)? + k;
    Ok(ConditionReport {
        unique_dominating,
        dominating_vertex,
        coloring_or_clique_condition,
        gap_condition,
    })
}

/// Second minimality condition evaluated on the hub-free side: with a
/// dominating hub added to `h`, deleting any single vertex of `h` must
/// not lower the parameter below `target`. On the chromatic side that
/// is exactly "no vertex deletion makes `h` colorable with one color
/// fewer"; on the clique side "no vertex lies in every maximum clique
/// of `h`", that is the maximum cliques of `h` have empty intersection.
pub(crate) fn second_condition(p: Parameter, h: &Graph, target: usize) -> bool {
    match p {
        Parameter::Chi => (0..h.n()).all(|x| !is_q_colorable(&h.delete_vertex(x), target - 1)),
        Parameter::Omega => (0..h.n()).all(|x| has_clique_of_size(&h.delete_vertex(x), target)),
    }
}

/// Full membership test for a candidate hub-free side `h` on `m`
/// vertices: adding a dominating hub to `h` yields a minimal forbidden
/// graph of the gap-`k` class exactly when `h` itself has no dominating
/// vertex, its parameter equals `m - k - 1`, and the second condition
/// holds. Callers guarantee `m >= k + 2`.
pub(crate) fn hub_free_member(p: Parameter, k: usize, h: &Graph) -> bool {
    let target = h.n() - k - 1;
    if h.has_dominating_vertex() {
        return false;
    }
    // Either parameter forces this many edges: a chromatic number of
    // `target` needs an edge between every two color classes, a clique
    // number of `target` supplies them directly.
    if h.edge_count() < target * (target - 1) / 2 {
        return false;
    }
    let exact = match p {
        Parameter::Chi => is_q_colorable(h, target) && !is_q_colorable(h, target - 1),
        Parameter::Omega => has_clique_of_size(h, target) && !has_clique_of_size(h, target + 1),
    };
    exact && second_condition(p, h, target)
}
