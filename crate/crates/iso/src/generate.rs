//! Exhaustive generation of pairwise non-isomorphic graphs by canonical
//! augmentation.
//!
//! Level t holds one representative per isomorphism class on t vertices.
//! Children arise by attaching a new vertex to a parent along every
//! subset of the parent's vertices. A child is kept exactly when some
//! ordering attaining its canonical form places the new vertex last;
//! the orderings attaining the form differ by automorphisms, so the
//! vertices placeable last form a single orbit, and every class on t+1
//! vertices survives from exactly one parent class. Distinct
//! neighborhoods at the same parent can still produce isomorphic
//! children, so accepted children are deduplicated per parent.

use graph_core::{Graph, VertexSet};
use rayon::prelude::*;

use crate::minimize::accept_child;
use crate::IsoError;

pub const MAX_GENERATION_ORDER: usize = 11;

/// Parents processed per batch: bounds peak memory while letting the
/// batch spread across workers.
const PARENT_BATCH: usize = 512;

/// Streams one representative per isomorphism class of every order from
/// 1 to `max_order`. `extend` decides whether a representative may be
/// grown further; descendants of rejected representatives are never
/// visited, so `extend` must be monotone for the stream to stay
/// exhaustive over the graphs of interest. `visit` runs on every
/// representative that survives its ancestors' `extend` checks, in a
/// deterministic order independent of worker count.
pub fn stream_nonisomorphic(
    max_order: usize,
    extend: &(dyn Fn(&Graph) -> bool + Sync),
    visit: &mut dyn FnMut(&Graph),
) -> Result<(), IsoError> {
    if !(1..=MAX_GENERATION_ORDER).contains(&max_order) {
        return Err(IsoError::OrderOutOfRange { m: max_order });
    }
    let seed = Graph::edgeless(1).expect("one vertex is within capacity");
    visit(&seed);
    let mut frontier = if extend(&seed) { vec![seed] } else { Vec::new() };
    for level in 2..=max_order {
        let mut next = Vec::new();
        for batch in frontier.chunks(PARENT_BATCH) {
            let broods: Vec<Vec<Graph>> =
                batch.par_iter().map(accepted_children).collect();
            for child in broods.into_iter().flatten() {
                visit(&child);
                if level < max_order && extend(&child) {
                    next.push(child);
                }
            }
        }
        frontier = next;
    }
    Ok(())
}

/// Delivers one representative per isomorphism class on exactly `m`
/// vertices and returns how many there are.
pub fn enumerate_nonisomorphic(
    m: usize,
    sink: &mut dyn FnMut(&Graph),
) -> Result<u64, IsoError> {
    let mut count = 0;
    stream_nonisomorphic(m, &|_| true, &mut |g| {
        if g.n() == m {
            count += 1;
            sink(g);
        }
    })?;
    Ok(count)
}

fn accepted_children(parent: &Graph) -> Vec<Graph> {
    let mut children = Vec::new();
    let mut forms = Vec::new();
    for mask in 0u32..1 << parent.n() {
        let child = parent
            .add_vertex(VertexSet::from_bits(mask))
            .expect("generation stays within vertex capacity");
        if let Some(form) = accept_child(&child) {
            if !forms.contains(&form) {
                forms.push(form);
                children.push(child);
            }
        }
    }
    children
}
