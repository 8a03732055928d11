//! Minimal forbidden induced subgraphs of two hereditary graph classes.
//!
//! For a gap `k`, one class collects the graphs whose every induced
//! subgraph keeps its maximum degree below its chromatic number plus
//! `k`, the other does the same with the clique number in place of the
//! chromatic number. Both classes are hereditary, so each is described
//! exactly by its minimal forbidden induced subgraphs: the graphs
//! outside the class all of whose proper induced subgraphs lie inside.
//!
//! The crate enumerates those families exhaustively, tests membership
//! in them, assigns every graph its least admitting gap together with a
//! witness subgraph, and re-verifies enumerated families against the
//! structural laws the members must obey.

mod classify;
mod conditions;
mod enumerate;
mod family;
mod files;

use std::error::Error;
use std::fmt;
use std::io;

use graph_core::Graph;
use invariants::InvariantError;
use iso::IsoError;

pub use classify::{
    class_index, is_member_via_family, neighborhood_perfect_equivalence, ClassIndex,
    FamilyWitness, MembershipVerdict,
};
pub use conditions::{is_minimal_forbidden, ConditionReport};
pub use enumerate::{enumerate_family, enumerate_family_resumable, MAX_GAP};
pub use family::{verify_family, FamilyReport, ForbiddenFamily};
pub use files::{read_family, write_family};

/// The invariant a hereditary class bounds the maximum degree with.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Parameter {
    /// Chromatic number.
    Chi,
    /// Clique number.
    Omega,
}

impl Parameter {
    /// The invariant value on `g`.
    pub fn value(self, g: &Graph) -> Result<usize, InvariantError> {
        match self {
            Parameter::Chi => invariants::chromatic_number(g),
            Parameter::Omega => invariants::clique_number(g),
        }
    }

    /// Lowercase name used in files and on the command line.
    pub fn name(self) -> &'static str {
        match self {
            Parameter::Chi => "chi",
            Parameter::Omega => "omega",
        }
    }

    /// The other parameter.
    pub fn opposite(self) -> Parameter {
        match self {
            Parameter::Chi => Parameter::Omega,
            Parameter::Omega => Parameter::Chi,
        }
    }

    /// Inverse of [`Parameter::name`].
    pub fn from_name(name: &str) -> Option<Parameter> {
        match name {
            "chi" => Some(Parameter::Chi),
            "omega" => Some(Parameter::Omega),
            _ => None,
        }
    }
}

impl fmt::Display for Parameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Errors raised by enumeration, classification and family storage.
#[derive(Debug)]
pub enum ForbiddenError {
    /// Minimality is undefined on graphs with fewer than two vertices.
    TooSmall { n: usize },
    /// The requested gap exceeds the supported enumeration range.
    UnsupportedGap { k: usize, max: usize },
    /// The graph exceeds the search budget of the requested operation.
    BudgetExceeded { n: usize, budget: usize },
    /// A malformed family or checkpoint file.
    FileFormat { line: usize, message: String },
    /// A checkpoint directory that disagrees with the requested run.
    Checkpoint { message: String },
    Invariant(InvariantError),
    Iso(IsoError),
    Io(io::Error),
}

impl fmt::Display for ForbiddenError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ForbiddenError::TooSmall { n } => {
                write!(f, "minimality is undefined on a graph with {n} vertices")
            }
            ForbiddenError::UnsupportedGap { k, max } => {
                write!(f, "enumeration supports gaps 0..={max}, requested {k}")
            }
            ForbiddenError::BudgetExceeded { n, budget } => {
                write!(f, "graph on {n} vertices exceeds the budget of {budget}")
            }
            ForbiddenError::FileFormat { line, message } => {
                write!(f, "line {line}: {message}")
            }
            ForbiddenError::Checkpoint { message } => {
                write!(f, "checkpoint mismatch: {message}")
            }
            ForbiddenError::Invariant(e) => e.fmt(f),
            ForbiddenError::Iso(e) => e.fmt(f),
            ForbiddenError::Io(e) => e.fmt(f),
        }
    }
}

impl Error for ForbiddenError {
    fn source(&self) -> Option<&(dyn Error + 'static)> {
        match self {
            ForbiddenError::Invariant(e) => Some(e),
            ForbiddenError::Iso(e) => Some(e),
            ForbiddenError::Io(e) => Some(e),
            _ => None,
        }
    }
}

impl From<InvariantError> for ForbiddenError {
    fn from(e: InvariantError) -> Self {
        ForbiddenError::Invariant(e)
    }
}

impl From<IsoError> for ForbiddenError {
    fn from(e: IsoError) -> Self {
        ForbiddenError::Iso(e)
    }
}

impl From<io::Error> for ForbiddenError {
    fn from(e: io::Error) -> Self {
        ForbiddenError::Io(e)
    }
}
