//! Machine-checked verdicts for the extremal results and the analytic claims
//! behind them.
//!
//! Everything here is evidence on finite grids and finite classes, not proof:
//! exhaustive search over the enumerated class, sign checks of analytic
//! expressions on grids, and randomized checks of the relocation inequality.

pub mod analytic;
mod constants;
mod extremal;
mod grid;
mod lemmas;
mod property;
pub mod report;

use thiserror::Error;

pub use constants::{
    check_constant, locate_sign_change, lookup_constant, ConstantReport, ProofConstant, CATALOG,
};
pub use extremal::{
    extremal_search, extremal_search_with, predicted_extremal, ExtremalReport, Verdict,
};
pub use grid::{classify, Grid, Status, STRICT_MARGIN};
pub use lemmas::{check_lemma, default_grids, GridPoint, LemmaId, LemmaReport};
pub use property::{
    applicable_edges, check_relocation, random_connected_graph, verify_transform_monotonicity,
    AlphaSampler, Counterexample, InstanceOutcome, PropertyReport,
};

use crate::enumerate::EnumError;
use crate::families::FamilyError;
use crate::graph::GraphError;
use crate::index::IndexError;
use crate::transforms::TransformError;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum VerifyError {
    #[error("(n={n}, d={d}) is outside the range covered by the extremal theorems: {reason}")]
    OutOfTheoremRange { n: usize, d: usize, reason: String },
    #[error("no unicyclic graph on {n} vertices has diameter {d}")]
    EmptyClass { n: usize, d: usize },
    #[error("bad grid: {0}")]
    BadGrid(String),
    #[error("unknown constant {0:?}")]
    UnknownConstant(String),
    #[error("unknown lemma {0:?}, expected one of L1, L5, L6, L7, gpos, hpos")]
    UnknownLemma(String),
    #[error("tolerance must be finite and non-negative, got {0}")]
    BadTolerance(f64),
    #[error("sample count must be at least 1")]
    NoSamples,
    #[error("second pass maximum {second} disagrees with first pass {first}")]
    SelfCheck { first: f64, second: f64 },
    #[error(transparent)]
    Enum(#[from] EnumError),
    #[error(transparent)]
    Index(#[from] IndexError),
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Transform(#[from] TransformError),
}
