//! Canonical labeling by pruned search over vertex orderings.
//!
//! The canonical form of a graph is the lexicographically smallest
//! upper-triangle bit string of its adjacency matrix over all vertex
//! orderings, columns read in the order x(0,1), x(0,2), x(1,2), x(0,3)
//! and so on, the same order the graph6 body uses. The search places one
//! vertex per position. Every bit of column j precedes every bit of
//! column j+1, so only candidates whose column value is minimal at a
//! node can reach the overall minimum; the search branches on those
//! alone, skips candidates whose swap with an already-tried one is an
//! automorphism, and prunes against the best complete string seen.

use graph_core::{budget, Graph};

use crate::IsoError;

const CANONICAL_DEFAULT_BUDGET: usize = 12;
/// The bit string must fit in a u128, which caps the order at 16.
const CANONICAL_HARD_CAP: usize = 16;

/// The lexicographically minimal adjacency bit string of an isomorphism
/// class. Ordering compares the vertex count first, then the string.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    n: u8,
    bits: u128,
}

impl CanonicalForm {
    pub fn order(&self) -> usize {
        self.n as usize
    }

    pub fn bits(&self) -> u128 {
        self.bits
    }

    /// The representative graph: the one whose identity labeling attains
    /// the minimal bit string.
    pub fn to_graph(&self) -> Graph {
        let n = self.n as usize;
        let total = (n * n.saturating_sub(1) / 2) as u32;
        let mut edges = Vec::new();
        let mut c = 0;
        for j in 1..n {
            for i in 0..j {
                if self.bits >> (total - 1 - c) & 1 == 1 {
                    edges.push((i, j));
                }
                c += 1;
            }
        }
        Graph::new(n, &edges).expect("a canonical form stores a legal graph")
    }
}

fn effective_cap() -> usize {
    budget::effective_vertex_budget(CANONICAL_DEFAULT_BUDGET).min(CANONICAL_HARD_CAP)
}

/// Canonical form of `g`.
pub fn canonical_form(g: &Graph) -> Result<CanonicalForm, IsoError> {
    let cap = effective_cap();
    if g.n() > cap {
        return Err(IsoError::BudgetExceeded { n: g.n(), budget: cap });
    }
    Ok(minimum_form(g))
}

/// Isomorphism via canonical forms, after cheap invariant screens.
pub fn are_isomorphic(g: &Graph, h: &Graph) -> Result<bool, IsoError> {
    let cap = effective_cap();
    for side in [g, h] {
        if side.n() > cap {
            return Err(IsoError::BudgetExceeded { n: side.n(), budget: cap });
        }
    }
    if g.n() != h.n() || g.edge_count() != h.edge_count() {
        return Ok(false);
    }
    let degrees = |x: &Graph| {
        let mut d: Vec<usize> = (0..x.n()).map(|v| x.degree(v)).collect();
        d.sort_unstable();
        d
    };
    if degrees(g) != degrees(h) {
        return Ok(false);
    }
    Ok(minimum_form(g) == minimum_form(h))
}

/// Acceptance test for a graph grown by appending its last vertex: the
/// canonical form when some minimizing labeling places that vertex last,
/// `None` otherwise. Accepting only such children makes every
/// isomorphism class reachable through exactly one accepted extension
/// step, so independent growers deliver disjoint classes.
pub fn extension_form(child: &Graph) -> Result<Option<CanonicalForm>, IsoError> {
    let cap = effective_cap();
    if child.n() > cap {
        return Err(IsoError::BudgetExceeded {
            n: child.n(),
            budget: cap,
        });
    }
    if child.n() == 0 {
        return Ok(None);
    }
    Ok(accept_child(child))
}

/// Unchecked canonical form for callers that guarantee the order bound.
pub(crate) fn minimum_form(g: &Graph) -> CanonicalForm {
    let n = g.n();
    if n <= 1 {
        return CanonicalForm { n: n as u8, bits: 0 };
    }
    let identity: Vec<usize> = (0..n).collect();
    let mut search = Minimizer::new(g, string_for_order(g, &identity), None, false);
    search.run();
    CanonicalForm {
        n: n as u8,
        bits: search.best,
    }
}

/// Accepts a child of the generation tree whose newest vertex is the
/// last one, returning its canonical form exactly when some ordering
/// attaining the canonical form places that vertex last.
pub(crate) fn accept_child(child: &Graph) -> Option<CanonicalForm> {
    let z = child.n() - 1;
    let pinned: Vec<usize> = (0..z).chain([z]).collect();
    let mut constrained = Minimizer::new(child, string_for_order(child, &pinned), Some(z), false);
    constrained.run();
    let mut witness = Minimizer::new(child, constrained.best, None, true);
    witness.run();
    if witness.improved {
        None
    } else {
        Some(CanonicalForm {
            n: child.n() as u8,
            bits: constrained.best,
        })
    }
}

/// Bit string of the labeling that places `order[p]` at position p.
fn string_for_order(g: &Graph, order: &[usize]) -> u128 {
    let mut acc = 0u128;
    for j in 1..order.len() {
        for i in 0..j {
            acc = acc << 1 | u128::from(g.has_edge(order[i], order[j]));
        }
    }
    acc
}

/// Smallest element of each class under the relation "swapping the two
/// vertices is an automorphism", which holds exactly when their rows
/// agree away from the pair. Transpositions compose, so the relation is
/// transitive and the classes are well defined.
fn twin_representatives(g: &Graph) -> [usize; CANONICAL_HARD_CAP] {
    let mut rep = [0usize; CANONICAL_HARD_CAP];
    for u in 0..g.n() {
        rep[u] = u;
        for w in 0..u {
            let off = !(1u32 << u | 1u32 << w);
            if g.row(u) & off == g.row(w) & off {
                rep[u] = rep[w];
                break;
            }
        }
    }
    rep
}

struct Minimizer<'a> {
    g: &'a Graph,
    n: usize,
    total: u32,
    twin_rep: [usize; CANONICAL_HARD_CAP],
    placed: [usize; CANONICAL_HARD_CAP],
    /// Best complete string seen; seeded with an attainable one.
    best: u128,
    /// Set when some string strictly below the seed exists.
    improved: bool,
    /// Stop at the first evidence of strict improvement.
    abort_on_improvement: bool,
    aborted: bool,
    forced_last: Option<usize>,
}

impl<'a> Minimizer<'a> {
    fn new(g: &'a Graph, seed: u128, forced_last: Option<usize>, abort_on_improvement: bool) -> Self {
        let n = g.n();
        Minimizer {
            g,
            n,
            total: (n * (n - 1) / 2) as u32,
            twin_rep: twin_representatives(g),
            placed: [0; CANONICAL_HARD_CAP],
            best: seed,
            improved: false,
            abort_on_improvement,
            aborted: false,
            forced_last,
        }
    }

    fn run(&mut self) {
        self.place(0, 0, 0, 0);
    }

    fn place(&mut self, depth: usize, used: u32, prefix: u128, prefix_len: u32) {
        if depth == self.n {
            if prefix < self.best {
                self.best = prefix;
                self.improved = true;
                self.aborted = self.abort_on_improvement;
            }
            return;
        }
        let unused = self.g.vertices().bits() & !used;
        let avail = match self.forced_last {
            Some(z) if depth + 1 < self.n => unused & !(1u32 << z),
            _ => unused,
        };
        let mut min_col = u32::MAX;
        let mut argmin = 0u32;
        let mut a = avail;
        while a != 0 {
            let u = a.trailing_zeros() as usize;
            a &= a - 1;
            let col = self.column(u, depth);
            if col < min_col {
                min_col = col;
                argmin = 1 << u;
            } else if col == min_col {
                argmin |= 1 << u;
            }
        }
        let new_len = prefix_len + depth as u32;
        let new_prefix = prefix << depth | u128::from(min_col);
        let best_region = self.best >> (self.total - new_len);
        if new_prefix > best_region {
            return;
        }
        if new_prefix < best_region && self.abort_on_improvement {
            self.improved = true;
            self.aborted = true;
            return;
        }
        let mut reps_seen = 0u32;
        let mut c = argmin;
        while c != 0 {
            let u = c.trailing_zeros() as usize;
            c &= c - 1;
            let r = self.twin_rep[u];
            if reps_seen >> r & 1 == 1 {
                continue;
            }
            reps_seen |= 1 << r;
            self.placed[depth] = u;
            self.place(depth + 1, used | 1 << u, new_prefix, new_len);
            if self.aborted {
                return;
            }
        }
    }

    /// Adjacency of `u` to the placed vertices, earliest position most
    /// significant.
    fn column(&self, u: usize, depth: usize) -> u32 {
        let mut col = 0u32;
        for i in 0..depth {
            col = col << 1 | (self.g.row(self.placed[i]) >> u & 1);
        }
        col
    }
}
