//! Functional relations among A₃ lattice zeta-functions: the twelve-term
//! left-hand sides, the J₀–J₃ right-hand sides, numeric verification and the
//! closed-form evaluations they imply.

mod derive;
mod lhs;
mod rhs;
mod verify;

use std::fmt;
use std::str::FromStr;

use a3z_algebra::AlgebraError;
use a3z_lattice::{LatticeLabel, TwistLabel};
use a3z_series::SeriesError;
use serde::{Deserialize, Serialize};

pub use derive::{derive_evaluation, lattice_uniform_value, uniform_evaluation, witten_value, Derivation, Part};
pub use lhs::{lhs_terms, merge_terms, pair_conjugates, stuffle_collapse, Exponent, SignedTuple, Slot, Term, STUFFLE_TRIPLES};
pub use rhs::{rhs_part, theorem_rhs, JPart};
pub use verify::{verify_relation, Verdict, VerificationReport};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum RelationError {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("collapse error: {0}")]
    Collapse(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Series(#[from] SeriesError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TheoremId {
    A3,
    #[serde(rename = "SU4_lam2")]
    SU4Lam2,
    SO6,
    #[serde(rename = "SU4_lam1")]
    SU4Lam1,
    #[serde(rename = "SU4_lam3")]
    SU4Lam3,
    PU4,
}

impl TheoremId {
    pub const ALL: [TheoremId; 6] =
        [TheoremId::A3, TheoremId::SU4Lam2, TheoremId::SO6, TheoremId::SU4Lam1, TheoremId::SU4Lam3, TheoremId::PU4];

    pub fn as_str(self) -> &'static str {
        match self {
            TheoremId::A3 => "A3",
            TheoremId::SU4Lam2 => "SU4_lam2",
            TheoremId::SO6 => "SO6",
            TheoremId::SU4Lam1 => "SU4_lam1",
            TheoremId::SU4Lam3 => "SU4_lam3",
            TheoremId::PU4 => "PU4",
        }
    }

    /// Twist and lattice of every left-hand-side series.
    pub fn context(self) -> (TwistLabel, LatticeLabel) {
        match self {
            TheoremId::A3 => (TwistLabel::Zero, LatticeLabel::P),
            TheoremId::SU4Lam2 => (TwistLabel::Lam2, LatticeLabel::P),
            TheoremId::SO6 => (TwistLabel::Zero, LatticeLabel::L1),
            TheoremId::SU4Lam1 => (TwistLabel::Lam1, LatticeLabel::P),
            TheoremId::SU4Lam3 => (TwistLabel::Lam3, LatticeLabel::P),
            TheoremId::PU4 => (TwistLabel::Zero, LatticeLabel::Q),
        }
    }

    /// Whether each series equals its mirror image in this context.
    pub fn symmetric(self) -> bool {
        !matches!(self, TheoremId::SU4Lam1 | TheoremId::SU4Lam3)
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TheoremId {
    type Err = RelationError;
    fn from_str(s: &str) -> Result<Self, RelationError> {
        TheoremId::ALL
            .into_iter()
            .find(|t| t.as_str() == s)
            .ok_or_else(|| RelationError::Domain(format!("unknown theorem {s:?}")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RelationParams {
    pub p: u32,
    pub q: u32,
    pub a: u32,
    pub b: u32,
    pub c: u32,
}

impl RelationParams {
    pub fn new(p: u32, q: u32, a: u32, b: u32, c: u32) -> Result<Self, RelationError> {
        if [p, q, a, b, c].contains(&0) {
            return Err(RelationError::Domain(format!("parameters must be >= 1, got ({p},{q},{a},{b},{c})")));
        }
        Ok(RelationParams { p, q, a, b, c })
    }

    pub fn uniform(v: u32) -> Self {
        RelationParams { p: v, q: v, a: v, b: v, c: v }
    }

    pub fn min(&self) -> u32 {
        [self.p, self.q, self.a, self.b, self.c].into_iter().min().unwrap_or(0)
    }
}
