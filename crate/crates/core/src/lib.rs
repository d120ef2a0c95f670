//! Core algorithms for regression on linguistic questionnaire data.
//!
//! The pipeline implemented here turns linguistic survey responses into
//! probability-weighted triangular fuzzy numbers, computes their
//! credibility-theory moments and one-sigma confidence intervals, fits an
//! interval-coefficient linear model with a sign-case heuristic over a dense
//! simplex solver, and evaluates the fit statistically.
//!
//! The crate is `no_std`-compatible (it allocates but performs no I/O); the
//! companion CLI crate carries file formats, plotting, and orchestration.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

mod math;

pub mod evaluation;
pub mod frv;
pub mod linguistic;
pub mod lp;
pub mod regression;
pub mod square;
pub mod tfn;

pub use frv::{DiscreteFuzzyRandomVariable, Interval};
pub use linguistic::{Lexicon, LinguisticItem, SpreadRule, T2FTerm};
pub use lp::{LinearProgram, LpSolution, LpStatus, Relation, VarKind};
pub use regression::{
    FuzzyCoefficient, ModelFit, RegressionProblem, SignCase, VertexCheckMode,
};
pub use square::SquaredProfile;
pub use tfn::{MeasureTriple, TriangularFuzzyNumber};

/// Default absolute tolerance for numeric comparisons across the crate.
pub const DEFAULT_TOLERANCE: f64 = 1e-9;
