//! Immutable simple graphs on at most 32 vertices.
//!
//! A [`Graph`] stores one machine-word bitset per vertex, so neighborhood
//! intersection, degree computation and induced-subgraph extraction are a
//! handful of word operations. All operations are pure: they take the graph
//! by reference and return a new value, which makes every type in this crate
//! safe to share between worker threads without synchronization.
//!
//! The companion modules provide the named-graph [`catalog`], the [`graph6`]
//! interchange codec, a plain-text [`edgelist`] format for hand-written
//! fixtures, and the process-wide vertex [`budget`] switch.

use std::error::Error;
use std::fmt;

pub mod budget;
pub mod catalog;
pub mod edgelist;
pub mod graph6;

/// Hard capacity of the representation: one `u32` bitset row per vertex.
pub const MAX_VERTICES: usize = 32;

/// A set of vertex indices of some host graph, stored as a 32-bit mask.
///
/// The host is implicit; operations that combine a `VertexSet` with a
/// [`Graph`] check that the set fits inside the host's vertex range.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct VertexSet {
    bits: u32,
}

impl VertexSet {
    /// The empty set.
    #[inline]
    pub const fn empty() -> Self {
        VertexSet { bits: 0 }
    }

    /// The full vertex set `{0, .., n-1}`.
    #[inline]
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        if n == MAX_VERTICES {
            VertexSet { bits: u32::MAX }
        } else {
            VertexSet {
                bits: (1u32 << n) - 1,
            }
        }
    }

    /// The set containing exactly `v`.
    #[inline]
    pub fn singleton(v: usize) -> Self {
        debug_assert!(v < MAX_VERTICES);
        VertexSet { bits: 1u32 << v }
    }

    /// Builds a set from a raw bitmask.
    #[inline]
    pub const fn from_bits(bits: u32) -> Self {
        VertexSet { bits }
    }

    /// The raw bitmask.
    #[inline]
    pub const fn bits(self) -> u32 {
        self.bits
    }

    #[inline]
    pub fn contains(self, v: usize) -> bool {
        debug_assert!(v < MAX_VERTICES);
        self.bits & (1u32 << v) != 0
    }

    /// This set with `v` added.
    #[inline]
    pub fn with(self, v: usize) -> Self {
        debug_assert!(v < MAX_VERTICES);
        VertexSet {
            bits: self.bits | (1u32 << v),
        }
    }

    /// This set with `v` removed.
    #[inline]
    pub fn without(self, v: usize) -> Self {
        debug_assert!(v < MAX_VERTICES);
        VertexSet {
            bits: self.bits & !(1u32 << v),
        }
    }

    #[inline]
    pub const fn union(self, other: Self) -> Self {
        VertexSet {
            bits: self.bits | other.bits,
        }
    }

    #[inline]
    pub const fn intersection(self, other: Self) -> Self {
        VertexSet {
            bits: self.bits & other.bits,
        }
    }

    #[inline]
    pub const fn minus(self, other: Self) -> Self {
        VertexSet {
            bits: self.bits & !other.bits,
        }
    }

    #[inline]
    pub const fn is_subset_of(self, other: Self) -> bool {
        self.bits & !other.bits == 0
    }

    /// Number of vertices in the set.
    #[inline]
    pub const fn len(self) -> usize {
        self.bits.count_ones() as usize
    }

    #[inline]
    pub const fn is_empty(self) -> bool {
        self.bits == 0
    }

    /// The smallest vertex in the set, if any.
    #[inline]
    pub fn first(self) -> Option<usize> {
        if self.bits == 0 {
            None
        } else {
            Some(self.bits.trailing_zeros() as usize)
        }
    }

    /// Iterates over the members in ascending order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.bits;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(v)
            }
        })
    }

    /// The members as a sorted vector, convenient for reports.
    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        let mut s = VertexSet::empty();
        for v in iter {
            s = s.with(v);
        }
        s
    }
}

/// Errors raised by graph construction and elementary transformations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphError {
    /// Requested vertex count exceeds [`MAX_VERTICES`].
    TooManyVertices { n: usize },
    /// An edge endpoint does not lie in `0..n`.
    EndpointOutOfRange { n: usize, endpoint: usize },
    /// An edge connects a vertex to itself.
    LoopEdge { vertex: usize },
    /// Adding a vertex would exceed [`MAX_VERTICES`].
    CapacityExceeded,
    /// The operation is undefined on the graph with no vertices.
    EmptyGraph,
    /// A vertex set refers to vertices outside the host graph.
    NotASubset,
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::TooManyVertices { n } => {
                write!(f, "{n} vertices requested, at most {MAX_VERTICES} supported")
            }
            GraphError::EndpointOutOfRange { n, endpoint } => {
                write!(f, "edge endpoint {endpoint} out of range for {n} vertices")
            }
            GraphError::LoopEdge { vertex } => write!(f, "loop edge at vertex {vertex}"),
            GraphError::CapacityExceeded => {
                write!(f, "cannot add a vertex beyond {MAX_VERTICES}")
            }
            GraphError::EmptyGraph => write!(f, "operation undefined on the empty graph"),
            GraphError::NotASubset => write!(f, "vertex set is not a subset of the host graph"),
        }
    }
}

impl Error for GraphError {}

/// An immutable simple graph with adjacency stored as per-vertex bitsets.
///
/// Invariants, maintained by every constructor:
/// * symmetry: bit `j` of row `i` equals bit `i` of row `j`,
/// * no loops: bit `i` of row `i` is zero,
/// * rows and bits at positions `>= n` are zero.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Graph {
    n: u8,
    adj: [u32; MAX_VERTICES],
}

impl Graph {
    /// Builds a graph from an explicit edge list.
    ///
    /// Duplicate pairs and swapped endpoint orders are tolerated; the result
    /// has exactly the given edges.
    ///
    /// # Errors
    /// Rejects `n > 32`, endpoints `>= n`, and loop pairs `(i, i)`.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices { n });
        }
        let mut adj = [0u32; MAX_VERTICES];
        for &(u, v) in edges {
            if u >= n {
                return Err(GraphError::EndpointOutOfRange { n, endpoint: u });
            }
            if v >= n {
                return Err(GraphError::EndpointOutOfRange { n, endpoint: v });
            }
            if u == v {
                return Err(GraphError::LoopEdge { vertex: u });
            }
            adj[u] |= 1u32 << v;
            adj[v] |= 1u32 << u;
        }
        let g = Graph { n: n as u8, adj };
        debug_assert!(g.invariants_hold());
        Ok(g)
    }

    /// The graph on `n` vertices with no edges.
    pub fn edgeless(n: usize) -> Result<Self, GraphError> {
        Graph::new(n, &[])
    }

    /// Number of vertices.
    #[inline]
    pub fn n(&self) -> usize {
        self.n as usize
    }

    /// The full vertex set `{0, .., n-1}`.
    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        debug_assert!(u < self.n() && v < self.n());
        self.adj[u] & (1u32 << v) != 0
    }

    /// The open neighborhood of `v`.
    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        debug_assert!(v < self.n());
        VertexSet::from_bits(self.adj[v])
    }

    /// The raw adjacency row of `v`.
    #[inline]
    pub fn row(&self, v: usize) -> u32 {
        debug_assert!(v < self.n());
        self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        debug_assert!(v < self.n());
        self.adj[v].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        let total: u32 = self.adj[..self.n()].iter().map(|r| r.count_ones()).sum();
        (total / 2) as usize
    }

    /// Iterates over edges as pairs `(i, j)` with `i < j`, in ascending order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.n();
        (0..n).flat_map(move |i| {
            VertexSet::from_bits(self.adj[i])
                .iter()
                .filter(move |&j| j > i)
                .map(move |j| (i, j))
        })
    }

    /// The complement graph: edge present exactly when absent here.
    ///
    /// An involution: `g.complement().complement() == g`.
    pub fn complement(&self) -> Graph {
        let n = self.n();
        let full = VertexSet::full(n).bits();
        let mut adj = [0u32; MAX_VERTICES];
        for (v, row) in adj.iter_mut().enumerate().take(n) {
            *row = !self.adj[v] & full & !(1u32 << v);
        }
        let g = Graph { n: self.n, adj };
        debug_assert!(g.invariants_hold());
        g
    }

    /// The subgraph induced by `s`, relabeled to `0..|s|` preserving the
    /// ascending order of the original indices.
    ///
    /// # Errors
    /// Rejects sets containing vertices `>= n`.
    pub fn induced_subgraph(&self, s: VertexSet) -> Result<Graph, GraphError> {
        if !s.is_subset_of(self.vertices()) {
            return Err(GraphError::NotASubset);
        }
        Ok(self.induced_subgraph_unchecked(s))
    }

    /// Like [`Graph::induced_subgraph`] but assumes `s` is in range.
    /// Hot-path variant used by invariant computations.
    pub fn induced_subgraph_unchecked(&self, s: VertexSet) -> Graph {
        debug_assert!(s.is_subset_of(self.vertices()));
        let mask = s.bits();
        let mut adj = [0u32; MAX_VERTICES];
        let mut new_index = 0usize;
        let mut bits = mask;
        while bits != 0 {
            let old = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            // Compress the masked row: bit k of the old row survives as bit
            // rank(k) where rank counts members of s below k.
            let mut row = self.adj[old] & mask;
            let mut packed = 0u32;
            while row != 0 {
                let k = row.trailing_zeros() as usize;
                row &= row - 1;
                let rank = (mask & ((1u32 << k) - 1)).count_ones() as usize;
                packed |= 1u32 << rank;
            }
            adj[new_index] = packed;
            new_index += 1;
        }
        let g = Graph {
            n: new_index as u8,
            adj,
        };
        debug_assert!(g.invariants_hold());
        g
    }

    /// The graph with vertex `v` removed and the remaining vertices
    /// relabeled in ascending order.
    pub fn delete_vertex(&self, v: usize) -> Graph {
        assert!(v < self.n(), "vertex {v} out of range");
        self.induced_subgraph_unchecked(self.vertices().without(v))
    }

    /// Appends a vertex with the given neighborhood as index `n`.
    ///
    /// # Errors
    /// Rejects graphs already at capacity and neighborhoods that mention
    /// vertices `>= n`.
    pub fn add_vertex(&self, neighborhood: VertexSet) -> Result<Graph, GraphError> {
        let n = self.n();
        if n >= MAX_VERTICES {
            return Err(GraphError::CapacityExceeded);
        }
        if !neighborhood.is_subset_of(self.vertices()) {
            return Err(GraphError::NotASubset);
        }
        let mut adj = self.adj;
        adj[n] = neighborhood.bits();
        for v in neighborhood.iter() {
            adj[v] |= 1u32 << n;
        }
        let g = Graph {
            n: self.n + 1,
            adj,
        };
        debug_assert!(g.invariants_hold());
        Ok(g)
    }

    /// Appends a vertex adjacent to all others.
    ///
    /// Removing the new vertex from the result gives back this graph.
    pub fn add_dominating_vertex(&self) -> Result<Graph, GraphError> {
        self.add_vertex(self.vertices())
    }

    /// All vertices adjacent to every other vertex, that is the vertices of
    /// degree `n - 1`.
    ///
    /// # Errors
    /// Undefined on the empty graph.
    pub fn dominating_vertices(&self) -> Result<VertexSet, GraphError> {
        let n = self.n();
        if n == 0 {
            return Err(GraphError::EmptyGraph);
        }
        let mut out = VertexSet::empty();
        for v in 0..n {
            if self.degree(v) == n - 1 {
                out = out.with(v);
            }
        }
        Ok(out)
    }

    /// True when some vertex is adjacent to all others.
    pub fn has_dominating_vertex(&self) -> bool {
        let n = self.n();
        (0..n).any(|v| self.degree(v) == n - 1)
    }

    /// Packs the upper adjacency triangle into a word, pair `(i, j)` with
    /// `i < j` at bit `j (j - 1) / 2 + i`. Requires `n <= 11` so the
    /// triangle fits into 64 bits.
    pub fn to_upper_bits(&self) -> u64 {
        let n = self.n();
        assert!(n <= 11, "upper-triangle packing supports at most 11 vertices");
        let mut bits = 0u64;
        let mut c = 0usize;
        for j in 1..n {
            for i in 0..j {
                if self.has_edge(i, j) {
                    bits |= 1u64 << c;
                }
                c += 1;
            }
        }
        bits
    }

    /// Inverse of [`Graph::to_upper_bits`].
    pub fn from_upper_bits(n: usize, bits: u64) -> Graph {
        assert!(n <= 11, "upper-triangle packing supports at most 11 vertices");
        let mut adj = [0u32; MAX_VERTICES];
        let mut c = 0usize;
        for j in 1..n {
            for i in 0..j {
                if bits & (1u64 << c) != 0 {
                    adj[i] |= 1u32 << j;
                    adj[j] |= 1u32 << i;
                }
                c += 1;
            }
        }
        debug_assert!(bits >> c == 0, "stray bits beyond the triangle");
        Graph { n: n as u8, adj }
    }

    /// Checks the representation invariants. Meant for debug assertions
    /// and tests; constructors always produce conforming graphs.
    pub fn invariants_hold(&self) -> bool {
        let n = self.n();
        if n > MAX_VERTICES {
            return false;
        }
        let full = VertexSet::full(n).bits();
        for v in 0..n {
            if self.adj[v] & !full != 0 {
                return false;
            }
            if self.adj[v] & (1u32 << v) != 0 {
                return false;
            }
        }
        for u in 0..n {
            for v in 0..n {
                if (self.adj[u] >> v) & 1 != (self.adj[v] >> u) & 1 {
                    return false;
                }
            }
        }
        self.adj[n..].iter().all(|&r| r == 0)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "])")
    }
}

// ----------------------------------------------------------------------------
// Tests
// ----------------------------------------------------------------------------
