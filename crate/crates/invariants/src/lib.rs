//! Exact invariants of small graphs.
//!
//! Everything in this crate is computed exactly by search, never by
//! heuristic: maximum degree, clique number, chromatic number, two
//! predicates about how those invariants respond to vertex deletion, and
//! perfection tests. All operations are pure functions on immutable
//! graphs, so they can be driven from many worker threads at once.

pub mod cliques;
pub mod coloring;
pub mod perfection;

use std::error::Error;
use std::fmt;

use graph_core::Graph;

pub use cliques::{
    clique_intersection_exactly, clique_number, empty_clique_intersection, has_clique_of_size,
};
pub use coloring::{chromatic_number, forced_multicolor_classes, is_q_colorable};
pub use perfection::{
    is_neighborhood_perfect, is_perfect, HoleKind, NeighborhoodPerfectnessVerdict,
    PerfectnessVerdict,
};

/// Errors raised by invariant computations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InvariantError {
    /// The graph has no vertices, so the requested value is undefined.
    EmptyGraph,
    /// A vertex argument does not name a vertex of the graph.
    VertexOutOfRange { n: usize, vertex: usize },
    /// The graph exceeds the search budget of the requested operation.
    BudgetExceeded { n: usize, budget: usize },
}

impl fmt::Display for InvariantError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InvariantError::EmptyGraph => {
                write!(f, "invariant undefined on the graph with no vertices")
            }
            InvariantError::VertexOutOfRange { n, vertex } => {
                write!(f, "vertex {vertex} out of range for a graph on {n} vertices")
            }
            InvariantError::BudgetExceeded { n, budget } => {
                write!(f, "graph on {n} vertices exceeds the budget of {budget}")
            }
        }
    }
}

impl Error for InvariantError {}

/// The three core invariants of one graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct InvariantRecord {
    pub n: usize,
    pub max_degree: usize,
    pub clique_number: usize,
    pub chromatic_number: usize,
}

/// Largest vertex degree.
pub fn max_degree(g: &Graph) -> Result<usize, InvariantError> {
    g.vertices()
        .iter()
        .map(|v| g.degree(v))
        .max()
        .ok_or(InvariantError::EmptyGraph)
}

/// Computes maximum degree, clique number and chromatic number together.
pub fn record(g: &Graph) -> Result<InvariantRecord, InvariantError> {
    let max_degree = max_degree(g)?;
    let clique_number = cliques::clique_number(g)?;
    let chromatic_number = coloring::chromatic_number(g)?;
    debug_assert!(clique_number <= chromatic_number);
    debug_assert!(chromatic_number <= max_degree + 1);
    Ok(InvariantRecord {
        n: g.n(),
        max_degree,
        clique_number,
        chromatic_number,
    })
}
