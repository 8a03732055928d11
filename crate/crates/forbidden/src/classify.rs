//! Classification of arbitrary graphs against the hereditary classes.
//!
//! The least gap admitting a graph equals the largest value of
//! `max degree - parameter + 1` over its nonempty induced subgraphs.
//! Only connected subgraphs need scanning: a component attaining the
//! maximum degree has parameter no larger than the whole subgraph, so
//! it attains at least the same value.

use graph_core::{budget, Graph, VertexSet};
use invariants::max_degree;
use iso::Embedding;

use crate::family::ForbiddenFamily;
use crate::{ForbiddenError, Parameter};

const INDEX_BUDGET: usize = 14;
const EQUIVALENCE_BUDGET: usize = 10;

/// The least gap whose class contains a graph, with a witness subgraph
/// attaining it when the gap is positive.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClassIndex {
    pub parameter: Parameter,
    /// Least `k` with the graph in the gap-`k` class.
    pub value: usize,
    /// Vertices inducing a connected subgraph whose maximum degree
    /// exceeds its parameter by `value - 1`; absent when `value` is 0.
    pub witness: Option<VertexSet>,
}

/// Computes the class index by exhaustive scan over connected induced
/// subgraphs. The witness is the first maximizer in ascending vertex-set
/// order.
pub fn class_index(g: &Graph, p: Parameter) -> Result<ClassIndex, ForbiddenError> {
    let cap = budget::effective_vertex_budget(INDEX_BUDGET);
    if g.n() > cap {
        return Err(ForbiddenError::BudgetExceeded {
            n: g.n(),
            budget: cap,
        });
    }
    let mut value = 0;
    let mut witness = None;
    for bits in 1..(1u64 << g.n()) as u32 {
        let s = VertexSet::from_bits(bits);
        if !connected_within(g, bits) {
            continue;
        }
        let margin = degree_margin(&g.induced_subgraph_unchecked(s), p)?;
        if margin > value {
            value = margin;
            witness = Some(s);
        }
    }
    Ok(ClassIndex {
        parameter: p,
        value,
        witness,
    })
}

/// `max degree - parameter + 1`, never negative since the parameter is
/// at most the maximum degree plus one.
fn degree_margin(h: &Graph, p: Parameter) -> Result<usize, ForbiddenError> {
    let degree = max_degree(h)?;
    let value = p.value(h)?;
    debug_assert!(value <= degree + 1);
    Ok(degree + 1 - value)
}

/// Whether the vertices of `bits` induce a connected subgraph.
fn connected_within(g: &Graph, bits: u32) -> bool {
    let mut reached = bits & bits.wrapping_neg();
    loop {
        let mut grown = reached;
        let mut frontier = reached;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            grown |= g.row(v) & bits;
        }
        if grown == reached {
            return reached == bits;
        }
        reached = grown;
    }
}

/// A family member found inside a graph.
#[derive(Debug, Clone)]
pub struct FamilyWitness {
    pub member: Graph,
    pub embedding: Embedding,
}

/// Verdict of the family-based membership test.
#[derive(Debug, Clone)]
pub struct MembershipVerdict {
    /// True when no family member embeds, so the graph lies in the
    /// class the family describes.
    pub is_member: bool,
    pub witness: Option<FamilyWitness>,
}

/// Tests class membership by searching for an induced copy of any
/// family member, returning the first one found in canonical order.
pub fn is_member_via_family(g: &Graph, fam: &ForbiddenFamily) -> MembershipVerdict {
    for member in fam.members() {
        if let Some(embedding) = iso::contains_induced(g, member) {
            return MembershipVerdict {
                is_member: false,
                witness: Some(FamilyWitness {
                    member: *member,
                    embedding,
                }),
            };
        }
    }
    MembershipVerdict {
        is_member: true,
        witness: None,
    }
}

/// Whether every induced subgraph has equal class indices for both
/// parameters.
///
/// Rather than calling [`class_index`] per subgraph, the scan computes
/// the degree margin once per connected vertex set and folds maxima
/// over the subset lattice: every connected subset of `S` is either `S`
/// itself or a subset of `S` with one vertex removed.
pub fn neighborhood_perfect_equivalence(g: &Graph) -> Result<bool, ForbiddenError> {
    let cap = budget::effective_vertex_budget(EQUIVALENCE_BUDGET);
    if g.n() > cap {
        return Err(ForbiddenError::BudgetExceeded {
            n: g.n(),
            budget: cap,
        });
    }
    let size = 1usize << g.n();
    let mut chi = vec![0usize; size];
    let mut omega = vec![0usize; size];
    for bits in 1..size as u32 {
        if !connected_within(g, bits) {
            continue;
        }
        let h = g.induced_subgraph_unchecked(VertexSet::from_bits(bits));
        chi[bits as usize] = degree_margin(&h, Parameter::Chi)?;
        omega[bits as usize] = degree_margin(&h, Parameter::Omega)?;
    }
    for table in [&mut chi, &mut omega] {
        for bits in 1..size {
            let mut best = table[bits];
            let mut rest = bits;
            while rest != 0 {
                let v = rest.trailing_zeros();
                rest &= rest - 1;
                best = best.max(table[bits & !(1usize << v)]);
            }
            table[bits] = best;
        }
    }
    Ok((1..size).all(|bits| chi[bits] == omega[bits]))
}
