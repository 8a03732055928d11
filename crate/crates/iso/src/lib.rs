//! Isomorphism machinery for small graphs.
//!
//! Two graphs are treated as identical when they are isomorphic. The
//! crate realizes that convention with a canonical form per isomorphism
//! class, an isomorphism test built on it, an induced-subgraph embedding
//! search, and an exhaustive generator that delivers exactly one
//! representative per class within a vertex budget.

mod embed;
mod generate;
mod minimize;

use std::error::Error;
use std::fmt;

pub use embed::{contains_induced, Embedding};
pub use generate::{enumerate_nonisomorphic, stream_nonisomorphic, MAX_GENERATION_ORDER};
pub use minimize::{are_isomorphic, canonical_form, extension_form, CanonicalForm};

/// Errors raised by canonicalization and generation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IsoError {
    /// The graph exceeds the canonicalization search budget.
    BudgetExceeded { n: usize, budget: usize },
    /// The requested generation order lies outside the supported range.
    OrderOutOfRange { m: usize },
}

impl fmt::Display for IsoError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IsoError::BudgetExceeded { n, budget } => {
                write!(f, "graph on {n} vertices exceeds the budget of {budget}")
            }
            IsoError::OrderOutOfRange { m } => write!(
                f,
                "generation supports orders 1..={MAX_GENERATION_ORDER}, requested {m}"
            ),
        }
    }
}

impl Error for IsoError {}
