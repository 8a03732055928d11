//! Perfection testing by exhaustive odd-hole search.
//!
//! A graph is perfect exactly when neither it nor its complement contains
//! an induced cycle of odd length at least five. The search grows
//! chordless paths anchored at the smallest cycle vertex, keeping bitmasks
//! of which vertices would create a chord, and reports the first closing
//! vertex it meets. Budgets keep the exponential search on graphs small
//! enough to finish instantly.

use graph_core::{budget, Graph, VertexSet};

use crate::InvariantError;

const PERFECTION_BUDGET: usize = 16;
const NEIGHBORHOOD_BUDGET: usize = 17;

/// Whether a certificate lives in the graph or in its complement.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HoleKind {
    Hole,
    AntiHole,
}

/// Outcome of a perfection test. A failing graph carries the vertex set
/// of an induced odd cycle, in the graph itself or in its complement.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PerfectnessVerdict {
    pub is_perfect: bool,
    pub certificate: Option<(VertexSet, HoleKind)>,
}

/// Outcome of a neighborhood-perfection test. A failing graph carries the
/// first vertex whose neighborhood is not perfect.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NeighborhoodPerfectnessVerdict {
    pub is_neighborhood_perfect: bool,
    pub offending_vertex: Option<usize>,
}

/// Tests perfection, with a certificate on failure.
pub fn is_perfect(g: &Graph) -> Result<PerfectnessVerdict, InvariantError> {
    let cap = budget::effective_vertex_budget(PERFECTION_BUDGET);
    if g.n() > cap {
        return Err(InvariantError::BudgetExceeded { n: g.n(), budget: cap });
    }
    Ok(perfectness(g))
}

/// Tests whether every vertex neighborhood induces a perfect graph.
pub fn is_neighborhood_perfect(g: &Graph) -> Result<NeighborhoodPerfectnessVerdict, InvariantError> {
    let cap = budget::effective_vertex_budget(NEIGHBORHOOD_BUDGET);
    if g.n() > cap {
        return Err(InvariantError::BudgetExceeded { n: g.n(), budget: cap });
    }
    for v in 0..g.n() {
        if !perfectness(&g.induced_subgraph_unchecked(g.neighbors(v))).is_perfect {
            return Ok(NeighborhoodPerfectnessVerdict {
                is_neighborhood_perfect: false,
                offending_vertex: Some(v),
            });
        }
    }
    Ok(NeighborhoodPerfectnessVerdict {
        is_neighborhood_perfect: true,
        offending_vertex: None,
    })
}

fn perfectness(g: &Graph) -> PerfectnessVerdict {
    if let Some(hole) = find_odd_hole(g) {
        return PerfectnessVerdict {
            is_perfect: false,
            certificate: Some((hole, HoleKind::Hole)),
        };
    }
    if let Some(hole) = find_odd_hole(&g.complement()) {
        return PerfectnessVerdict {
            is_perfect: false,
            certificate: Some((hole, HoleKind::AntiHole)),
        };
    }
    PerfectnessVerdict {
        is_perfect: true,
        certificate: None,
    }
}

/// First induced odd cycle of length at least five found by depth-first
/// search, anchored at the smallest cycle vertex.
fn find_odd_hole(g: &Graph) -> Option<VertexSet> {
    let mut path = Vec::with_capacity(g.n());
    for a in 0..g.n() {
        let above = match a + 1 {
            shift if shift >= 32 => 0,
            shift => (!0u32 << shift) & g.vertices().bits(),
        };
        path.clear();
        path.push(a);
        if let Some(bits) = grow_path(g, &mut path, 1 << a, 0, 0, above) {
            return Some(VertexSet::from_bits(bits));
        }
    }
    None
}

/// `on_path` holds the path vertices; `seen_all` the neighborhoods of all
/// path vertices but the last; `seen_mid` those of all but the first and
/// last. A vertex extends the path if it sees only the last vertex, and
/// closes an odd cycle if it sees exactly the two ends.
fn grow_path(
    g: &Graph,
    path: &mut Vec<usize>,
    on_path: u32,
    seen_all: u32,
    seen_mid: u32,
    above: u32,
) -> Option<u32> {
    let last = *path.last().unwrap();
    let t = path.len() - 1;
    if t >= 3 && t % 2 == 1 {
        let close = g.row(last) & g.row(path[0]) & !seen_mid & !on_path & above;
        if close != 0 {
            return Some(on_path | (close & close.wrapping_neg()));
        }
    }
    let grown_all = seen_all | g.row(last);
    let grown_mid = if t == 0 { 0 } else { seen_mid | g.row(last) };
    let mut ext = g.row(last) & !seen_all & !on_path & above;
    while ext != 0 {
        let w = ext.trailing_zeros() as usize;
        ext &= ext - 1;
        path.push(w);
        let found = grow_path(g, path, on_path | 1 << w, grown_all, grown_mid, above);
        path.pop();
        if found.is_some() {
            return found;
        }
    }
    None
}
