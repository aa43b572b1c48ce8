//! Structural classification, per-graph bound checks, proof invariants and
//! exhaustive sweeps over graph6 enumerations.
//!
//! Equality in the bound is always decided structurally (complement
//! signatures); the numeric slack only corroborates it.

mod analysis;
mod classify;
mod invariants;
pub mod report;
mod sweep;
mod theorem;

pub use analysis::{check_bound, check_bound_with_tol, BoundCheck, GraphAnalysis, Verdict};
pub use classify::{classify, is_dvdr, Classification, GraphClass};
pub use invariants::{check_proof_invariants, CheckStatus, InvariantCheck, InvariantReport};
pub use sweep::{
    sweep, sweep_with_rows, AlphaSummary, EqualityMismatch, SweepOptions, SweepReport, SweepRow,
    Violation,
};
pub use theorem::{verify_theorem_family, verify_theorem_file, TheoremCheck, TheoremReport};

use crate::graph::{Graph6Error, GraphError};
use crate::spectra::SpectraError;
use thiserror::Error;

/// Default relative tolerance of the bound checks, applied as
/// `tol * max(1, bound)`.
pub const DEFAULT_TOL: f64 = 1e-9;

/// Gaps within this absolute distance of the minimum are reported as ties.
pub const TIE_TOL: f64 = 1e-12;

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error("graph is disconnected")]
    Disconnected,
    #[error(
        "graph is transmission regular; the gap bound assumes a non-transmission-regular graph"
    )]
    TransmissionRegular,
    #[error("line {line}: {source}")]
    Parse {
        line: usize,
        #[source]
        source: Graph6Error,
    },
    #[error("line {line}: graph of order {found} in a stream of order {expected}")]
    MixedOrders {
        line: usize,
        expected: usize,
        found: usize,
    },
    #[error("tolerance must be a positive finite number, got {0}")]
    BadTolerance(f64),
    #[error(transparent)]
    Graph(GraphError),
    #[error(transparent)]
    Spectra(SpectraError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl From<GraphError> for VerifyError {
    fn from(e: GraphError) -> Self {
        match e {
            GraphError::Disconnected => VerifyError::Disconnected,
            other => VerifyError::Graph(other),
        }
    }
}

impl From<SpectraError> for VerifyError {
    fn from(e: SpectraError) -> Self {
        match e {
            SpectraError::Graph(g) => g.into(),
            other => VerifyError::Spectra(other),
        }
    }
}

/// Absolute tolerance for a bound value.
#[inline]
pub fn tol_abs(tol: f64, bound: f64) -> f64 {
    tol * bound.max(1.0)
}

pub(crate) fn check_tol(tol: f64) -> Result<(), VerifyError> {
    if tol.is_finite() && tol > 0.0 {
        Ok(())
    } else {
        Err(VerifyError::BadTolerance(tol))
    }
}
