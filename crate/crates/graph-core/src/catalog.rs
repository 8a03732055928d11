//! Named-graph catalog.
//!
//! Construction helpers for the specific graphs the rest of the workspace
//! talks about: complete graphs, paths, cycles, wheels, and the handful of
//! special graphs that show up as minimal forbidden subgraphs or as
//! counterexamples. Each constructor documents its labeling, so tests can
//! rely on exact vertex indices.

use std::error::Error;
use std::fmt;

use crate::{Graph, GraphError, MAX_VERTICES};

/// Tags for the catalog entries, with their integer parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NamedGraph {
    /// Complete graph on `n` vertices.
    K(usize),
    /// Edgeless graph on `n` vertices.
    Kbar(usize),
    /// Complete bipartite graph with parts of size `m` and `n`.
    Kmn(usize, usize),
    /// Path on `n` vertices.
    P(usize),
    /// Cycle on `n` vertices.
    C(usize),
    /// Wheel: cycle on `r` vertices plus a dominating vertex.
    W(usize),
    /// Complement of a cycle on `m` vertices, plus a dominating vertex.
    B(usize),
    /// Clique on `p + 1` vertices and a star with `p` leaves, joined by a
    /// single edge between one leaf and one clique vertex.
    J(usize),
    /// Star with three leaves.
    Claw,
    /// Path on four vertices plus a dominating vertex.
    Gem,
    /// Two triangles sharing one vertex.
    Butterfly,
    /// Triangle with a pendant independent vertex on each pair of
    /// consecutive corners (the 3-sun).
    S3,
    /// Five-cycle plus a vertex adjacent to three consecutive cycle vertices.
    C5E3,
    /// Five-cycle plus a vertex adjacent to four consecutive cycle vertices.
    C5E4,
    /// Complete graph on six vertices minus a perfect matching.
    K6MinusMatching,
    /// Disjoint complete graph on four vertices and five-cycle, plus a
    /// dominating vertex.
    K4C5Hub,
}

/// Error raised when a catalog parameter lies outside its documented range.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CatalogError {
    ParameterOutOfRange {
        tag: &'static str,
        detail: String,
    },
}

impl fmt::Display for CatalogError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CatalogError::ParameterOutOfRange { tag, detail } => {
                write!(f, "parameter out of range for {tag}: {detail}")
            }
        }
    }
}

impl Error for CatalogError {}

fn out_of_range(tag: &'static str, detail: String) -> CatalogError {
    CatalogError::ParameterOutOfRange { tag, detail }
}

fn capacity(tag: &'static str, n: usize) -> CatalogError {
    out_of_range(tag, format!("{n} vertices exceed the capacity of {MAX_VERTICES}"))
}

// Construction below never violates Graph preconditions once the parameter
// checks passed, so these unwraps cannot fire.
fn built(g: Result<Graph, GraphError>) -> Graph {
    g.expect("catalog construction stays within representation limits")
}

/// Builds the graph for a catalog tag.
pub fn named(tag: NamedGraph) -> Result<Graph, CatalogError> {
    match tag {
        NamedGraph::K(n) => complete(n),
        NamedGraph::Kbar(n) => edgeless(n),
        NamedGraph::Kmn(m, n) => complete_bipartite(m, n),
        NamedGraph::P(n) => path(n),
        NamedGraph::C(n) => cycle(n),
        NamedGraph::W(r) => wheel(r),
        NamedGraph::B(m) => anti_wheel(m),
        NamedGraph::J(p) => j_graph(p),
        NamedGraph::Claw => claw(),
        NamedGraph::Gem => gem(),
        NamedGraph::Butterfly => butterfly(),
        NamedGraph::S3 => three_sun(),
        NamedGraph::C5E3 => c5_ext(3),
        NamedGraph::C5E4 => c5_ext(4),
        NamedGraph::K6MinusMatching => k6_minus_matching(),
        NamedGraph::K4C5Hub => k4_c5_hub(),
    }
}

/// Complete graph on `n` vertices, `1 <= n <= 32`.
pub fn complete(n: usize) -> Result<Graph, CatalogError> {
    if n < 1 {
        return Err(out_of_range("K", "at least 1 vertex required".into()));
    }
    if n > MAX_VERTICES {
        return Err(capacity("K", n));
    }
    let mut edges = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            edges.push((i, j));
        }
    }
    Ok(built(Graph::new(n, &edges)))
}

/// Edgeless graph on `n` vertices, `1 <= n <= 32`.
pub fn edgeless(n: usize) -> Result<Graph, CatalogError> {
    if n < 1 {
        return Err(out_of_range("Kbar", "at least 1 vertex required".into()));
    }
    if n > MAX_VERTICES {
        return Err(capacity("Kbar", n));
    }
    Ok(built(Graph::edgeless(n)))
}

/// Complete bipartite graph; the first part is labeled `0..m`, the second
/// `m..m+n`.
pub fn complete_bipartite(m: usize, n: usize) -> Result<Graph, CatalogError> {
    if m < 1 || n < 1 {
        return Err(out_of_range("Kmn", "both parts need at least 1 vertex".into()));
    }
    if m + n > MAX_VERTICES {
        return Err(capacity("Kmn", m + n));
    }
    let mut edges = Vec::new();
    for i in 0..m {
        for j in 0..n {
            edges.push((i, m + j));
        }
    }
    Ok(built(Graph::new(m + n, &edges)))
}

/// Path `0 - 1 - .. - (n-1)`, `1 <= n <= 32`.
pub fn path(n: usize) -> Result<Graph, CatalogError> {
    if n < 1 {
        return Err(out_of_range("P", "at least 1 vertex required".into()));
    }
    if n > MAX_VERTICES {
        return Err(capacity("P", n));
    }
    let edges: Vec<_> = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
    Ok(built(Graph::new(n, &edges)))
}

/// Cycle `0 - 1 - .. - (n-1) - 0`, `3 <= n <= 32`.
pub fn cycle(n: usize) -> Result<Graph, CatalogError> {
    if n < 3 {
        return Err(out_of_range("C", format!("cycle needs at least 3 vertices, got {n}")));
    }
    if n > MAX_VERTICES {
        return Err(capacity("C", n));
    }
    let mut edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
    edges.push((n - 1, 0));
    Ok(built(Graph::new(n, &edges)))
}

/// Wheel: the cycle on `r` vertices plus a dominating vertex labeled `r`.
/// Requires `3 <= r <= 31`.
pub fn wheel(r: usize) -> Result<Graph, CatalogError> {
    if r < 3 {
        return Err(out_of_range("W", format!("rim needs at least 3 vertices, got {r}")));
    }
    if r + 1 > MAX_VERTICES {
        return Err(capacity("W", r + 1));
    }
    Ok(built(cycle(r)?.add_dominating_vertex()))
}

/// Complement of the cycle on `m` vertices plus a dominating vertex labeled
/// `m`. Requires `4 <= m <= 31`.
pub fn anti_wheel(m: usize) -> Result<Graph, CatalogError> {
    if m < 4 {
        return Err(out_of_range(
            "B",
            format!("cycle complement needs at least 4 vertices, got {m}"),
        ));
    }
    if m + 1 > MAX_VERTICES {
        return Err(capacity("B", m + 1));
    }
    Ok(built(cycle(m)?.complement().add_dominating_vertex()))
}

/// Clique on `p + 1` vertices (labels `0..=p`), a star with center `p + 1`
/// and leaves `p+2 ..= 2p+1`, plus the bridging edge between the first leaf
/// `p + 2` and the clique vertex `0`. Requires `1 <= p <= 15`.
///
/// The maximum degree and the chromatic number of the result both equal
/// `p + 1`, while the induced star pushes their difference to `p - 2`.
pub fn j_graph(p: usize) -> Result<Graph, CatalogError> {
    if p < 1 {
        return Err(out_of_range("J", "at least 1 leaf required".into()));
    }
    if 2 * p + 2 > MAX_VERTICES {
        return Err(capacity("J", 2 * p + 2));
    }
    let center = p + 1;
    let mut edges = Vec::new();
    for i in 0..=p {
        for j in (i + 1)..=p {
            edges.push((i, j));
        }
    }
    for leaf in (p + 2)..=(2 * p + 1) {
        edges.push((center, leaf));
    }
    edges.push((p + 2, 0));
    Ok(built(Graph::new(2 * p + 2, &edges)))
}

/// The star with three leaves: center `3`, leaves `0, 1, 2`.
pub fn claw() -> Result<Graph, CatalogError> {
    Ok(built(Graph::edgeless(3).and_then(|g| g.add_dominating_vertex())))
}

/// Path `0 - 1 - 2 - 3` plus the dominating vertex `4`.
pub fn gem() -> Result<Graph, CatalogError> {
    Ok(built(path(4)?.add_dominating_vertex()))
}

/// Two triangles `{0, 1, 4}` and `{2, 3, 4}` sharing the center `4`.
pub fn butterfly() -> Result<Graph, CatalogError> {
    Ok(built(Graph::new(
        5,
        &[(0, 1), (0, 4), (1, 4), (2, 3), (2, 4), (3, 4)],
    )))
}

/// The 3-sun: triangle `{0, 1, 2}` and independent vertices `3, 4, 5`,
/// where `3` is adjacent to `0, 1`, `4` to `1, 2`, and `5` to `2, 0`.
pub fn three_sun() -> Result<Graph, CatalogError> {
    Ok(built(Graph::new(
        6,
        &[
            (0, 1),
            (1, 2),
            (2, 0),
            (3, 0),
            (3, 1),
            (4, 1),
            (4, 2),
            (5, 2),
            (5, 0),
        ],
    )))
}

/// Five-cycle `0 - 1 - 2 - 3 - 4 - 0` plus a vertex `5` adjacent to the
/// `t` consecutive cycle vertices `0 .. t`. Requires `t` in `{3, 4}`.
pub fn c5_ext(t: usize) -> Result<Graph, CatalogError> {
    if t != 3 && t != 4 {
        return Err(out_of_range(
            "C5E",
            format!("extension degree must be 3 or 4, got {t}"),
        ));
    }
    let mut edges = vec![(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)];
    for v in 0..t {
        edges.push((5, v));
    }
    Ok(built(Graph::new(6, &edges)))
}

/// Complete graph on six vertices minus the perfect matching
/// `{0,1}, {2,3}, {4,5}`.
pub fn k6_minus_matching() -> Result<Graph, CatalogError> {
    let mut edges = Vec::new();
    for i in 0..6 {
        for j in (i + 1)..6 {
            let matched = j == i + 1 && i % 2 == 0;
            if !matched {
                edges.push((i, j));
            }
        }
    }
    Ok(built(Graph::new(6, &edges)))
}

/// Disjoint union of the complete graph `{0, 1, 2, 3}` and the five-cycle
/// `4 - 5 - 6 - 7 - 8 - 4`, plus the dominating vertex `9`.
pub fn k4_c5_hub() -> Result<Graph, CatalogError> {
    let mut edges = Vec::new();
    for i in 0..4 {
        for j in (i + 1)..4 {
            edges.push((i, j));
        }
    }
    edges.extend([(4, 5), (5, 6), (6, 7), (7, 8), (8, 4)]);
    let body = built(Graph::new(9, &edges));
    Ok(built(body.add_dominating_vertex()))
}
