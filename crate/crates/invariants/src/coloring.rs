//! Exact chromatic number via iterative deepening on a colorability test.

use graph_core::Graph;

use crate::{cliques, InvariantError};

/// True iff the graph has a proper coloring with at most `q` colors.
///
/// Backtracks over vertices in descending-degree order, keeping one vertex
/// bitmask per color class. A vertex may reuse any class already in play
/// or open exactly the next fresh one, which discards permutations of the
/// classes.
pub fn is_q_colorable(g: &Graph, q: usize) -> bool {
    let n = g.n();
    if n <= q {
        return true;
    }
    if q == 0 {
        // n > 0 here
        return false;
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    let mut class_masks = vec![0u32; q];
    assign(g, &order, &mut class_masks, 0, 0)
}

fn assign(g: &Graph, order: &[usize], class_masks: &mut [u32], i: usize, used: usize) -> bool {
    if i == order.len() {
        return true;
    }
    let v = order[i];
    let row = g.row(v);
    for c in 0..(used + 1).min(class_masks.len()) {
        if row & class_masks[c] == 0 {
            class_masks[c] |= 1 << v;
            if assign(g, order, class_masks, i + 1, used.max(c + 1)) {
                return true;
            }
            class_masks[c] &= !(1 << v);
        }
    }
    false
}

/// Exact chromatic number.
pub fn chromatic_number(g: &Graph) -> Result<usize, InvariantError> {
    // The clique number is a lower bound, and q = Δ+1 always succeeds,
    // so the loop terminates.
    let mut q = cliques::clique_number(g)?;
    while !is_q_colorable(g, q) {
        q += 1;
    }
    Ok(q)
}

/// True iff every optimal coloring puts at least two vertices in every
/// color class.
///
/// Checked one vertex at a time: some optimal coloring has {x} as a class
/// exactly when deleting x drops the chromatic number.
pub fn forced_multicolor_classes(g: &Graph) -> Result<bool, InvariantError> {
    let chi = chromatic_number(g)?;
    for x in 0..g.n() {
        if is_q_colorable(&g.delete_vertex(x), chi - 1) {
            return Ok(false);
        }
    }
    Ok(true)
}
