//! Exact combinatorics of connected Nakayama algebras.
//!
//! An algebra is given by its Kupisch series (the lengths of the
//! indecomposable projectives); every indecomposable module is serial and is
//! identified by its socle vertex and its length.  On top of that module
//! arithmetic the crate computes syzygies, projective/injective dimensions,
//! the ψ/γ calculus, finitistic dimension and delooping levels, Hom/Ext
//! dimensions with an independent linear-algebra oracle, the homological
//! permutation with its ties, Dyck-path coding of linear algebras, and the
//! Δ-filtration/ε-algebra machinery — together with checkers that verify the
//! expected identities over enumerable families and report any violation as a
//! first-class counterexample.

pub mod algebra;
pub mod serial;
pub mod homdim;
pub mod homext;
pub mod perm;
pub mod epsilon;
pub mod cli;

use std::fmt;

/// A natural number or infinity; the value of pd/id/gldim.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Dim {
    Fin(usize),
    Inf,
}

impl Dim {
    pub fn is_finite(self) -> bool {
        matches!(self, Dim::Fin(_))
    }
    /// Finite and odd.
    pub fn is_odd(self) -> bool {
        matches!(self, Dim::Fin(k) if k % 2 == 1)
    }
    /// Finite and even (0 counts as even).
    pub fn is_even(self) -> bool {
        matches!(self, Dim::Fin(k) if k % 2 == 0)
    }
    pub fn finite(self) -> Option<usize> {
        match self {
            Dim::Fin(k) => Some(k),
            Dim::Inf => None,
        }
    }
}

impl fmt::Display for Dim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Dim::Fin(k) => write!(f, "{k}"),
            Dim::Inf => write!(f, "inf"),
        }
    }
}

impl serde::Serialize for Dim {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Dim::Fin(k) => s.serialize_u64(*k as u64),
            Dim::Inf => s.serialize_str("inf"),
        }
    }
}

/// A verified identity failed: the witness is recorded so the case can be
/// re-run in isolation.  Never expected on admissible input; any occurrence
/// is a discovery, not a crash.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct Contradiction {
    /// Name of the failed check, e.g. "finpro=fininj=del=des".
    pub check: String,
    /// Serialized algebra the failure occurred on.
    pub algebra: String,
    /// Human-readable witness data.
    pub detail: String,
}

impl fmt::Display for Contradiction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "contradiction in {}: {} [{}]", self.check, self.detail, self.algebra)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("empty Kupisch series")]
    EmptySeries,
    #[error("inadmissible Kupisch series at index {index}: {reason}")]
    Admissibility { index: usize, reason: String },
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("no module with socle {socle} and length {length}")]
    NonexistentModule { socle: usize, length: usize },
    #[error("tau undefined: {0}")]
    TauUndefined(String),
    #[error("malformed Dyck path at position {pos}: {msg}")]
    MalformedPath { pos: usize, msg: String },
    #[error("permutation not realizable by a linear algebra: {0}")]
    NotRealizable(String),
    #[error("Delta-filtration failed: {0}")]
    Filtration(String),
    #[error("witness failure: {0}")]
    WitnessFailure(String),
    #[error("oracle cap exceeded")]
    OracleCapExceeded,
    #[error("{0}")]
    Contradiction(Contradiction),
}

pub type Result<T> = std::result::Result<T, Error>;
