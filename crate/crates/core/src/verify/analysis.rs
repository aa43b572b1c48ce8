use super::classify::classify_with;
use super::{check_tol, tol_abs, Classification, GraphClass, VerifyError, DEFAULT_TOL};
use crate::graph::{apsp, DistanceMatrix, Graph};
use crate::spectra::{
    bound_tau, build_d_alpha, spectral_radius, transmissions, Alpha, SpectralResult,
    TransmissionVector,
};
use serde::Serialize;
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Verdict {
    Holds,
    EqualityStructural,
    #[serde(rename = "VIOLATION")]
    Violation,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Holds => "Holds",
            Verdict::EqualityStructural => "EqualityStructural",
            Verdict::Violation => "VIOLATION",
        })
    }
}

/// Outcome of checking `Tr_max - μ_α >= (1-α)τ_n` on one graph.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundCheck {
    pub alpha: f64,
    pub tr_max: u64,
    pub mu: f64,
    pub gap: f64,
    pub bound: f64,
    /// `gap - bound`.
    pub slack: f64,
    pub verdict: Verdict,
    /// `|slack| <= tol * max(1, bound)`.
    pub numeric_equality: bool,
}

impl BoundCheck {
    /// Structural equality must be matched by numeric equality.
    pub fn is_consistent(&self) -> bool {
        self.verdict != Verdict::EqualityStructural || self.numeric_equality
    }
}

/// Distances, transmissions and class of a connected graph, computed once
/// and reused across `α` values.
#[derive(Debug, Clone)]
pub struct GraphAnalysis {
    pub graph: Graph,
    pub distances: DistanceMatrix,
    pub transmissions: TransmissionVector,
    pub classification: Classification,
}

impl GraphAnalysis {
    pub fn new(graph: &Graph) -> Result<Self, VerifyError> {
        let distances = apsp(graph)?;
        let transmissions = transmissions(&distances);
        let classification = classify_with(graph, &transmissions);
        Ok(GraphAnalysis {
            graph: graph.clone(),
            distances,
            transmissions,
            classification,
        })
    }

    pub fn order(&self) -> usize {
        self.graph.order()
    }

    pub fn class(&self) -> &GraphClass {
        &self.classification.class
    }

    pub fn spectrum(&self, alpha: Alpha) -> Result<SpectralResult, VerifyError> {
        let m = build_d_alpha(&self.distances, &self.transmissions, alpha)?;
        Ok(spectral_radius(&m)?)
    }

    pub fn check_bound(&self, alpha: Alpha, tol: f64) -> Result<BoundCheck, VerifyError> {
        check_tol(tol)?;
        if self.transmissions.is_regular() {
            return Err(VerifyError::TransmissionRegular);
        }
        let params = bound_tau(self.order(), alpha)?;
        let mu = self.spectrum(alpha)?.mu;
        let tr_max = self.transmissions.tr_max;
        let gap = tr_max as f64 - mu;
        let slack = gap - params.bound;
        let limit = tol_abs(tol, params.bound);
        let verdict = if slack < -limit {
            Verdict::Violation
        } else if self.class().is_extremal() {
            Verdict::EqualityStructural
        } else {
            Verdict::Holds
        };
        Ok(BoundCheck {
            alpha: alpha.get(),
            tr_max,
            mu,
            gap,
            bound: params.bound,
            slack,
            verdict,
            numeric_equality: slack.abs() <= limit,
        })
    }
}

/// Checks the gap bound on a connected, non-transmission-regular graph with
/// the default tolerance.
pub fn check_bound(g: &Graph, alpha: Alpha) -> Result<BoundCheck, VerifyError> {
    check_bound_with_tol(g, alpha, DEFAULT_TOL)
}

pub fn check_bound_with_tol(g: &Graph, alpha: Alpha, tol: f64) -> Result<BoundCheck, VerifyError> {
    GraphAnalysis::new(g)?.check_bound(alpha, tol)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{
        make_complete, make_complete_multipartite, make_cycle, make_dvdr, make_path,
    };
    use crate::spectra::SpectraError;

    #[test]
    fn k122_attains_bound() {
        let g = make_complete_multipartite(&[1, 2, 2]).unwrap();
        let c = check_bound(&g, Alpha::ZERO).unwrap();
        let expected = 3.0 - 2.0 * 2f64.sqrt();
        assert!((c.gap - expected).abs() < 1e-12);
        assert!((c.bound - expected).abs() < 1e-15);
        assert_eq!(c.verdict, Verdict::EqualityStructural);
        assert!(c.numeric_equality && c.is_consistent());
    }

    #[test]
    fn path_holds_strictly() {
        let c = check_bound(&make_path(4).unwrap(), Alpha::ZERO).unwrap();
        assert_eq!(c.verdict, Verdict::Holds);
        assert!((c.gap - 0.837722).abs() < 1e-6);
        assert!((c.bound - 0.354249).abs() < 1e-6);
        assert!((c.slack - 0.483473).abs() < 1e-6);
        assert!(!c.numeric_equality);
    }

    #[test]
    fn wheel_at_half() {
        let wheel = make_dvdr(&make_cycle(5).unwrap()).unwrap();
        let c = check_bound(&wheel, Alpha::HALF).unwrap();
        let expected = (5.0 - 21f64.sqrt()) / 2.0;
        assert!((c.gap - expected).abs() < 1e-12);
        assert!((c.bound - expected).abs() < 1e-15);
        assert_eq!(c.verdict, Verdict::EqualityStructural);
    }

    #[test]
    fn rejects_outside_hypothesis() {
        assert!(matches!(
            check_bound(&make_cycle(5).unwrap(), Alpha::ZERO),
            Err(VerifyError::TransmissionRegular)
        ));
        assert!(matches!(
            check_bound(&make_complete(4).unwrap(), Alpha::HALF),
            Err(VerifyError::TransmissionRegular)
        ));
        assert!(matches!(
            check_bound(&make_path(4).unwrap(), Alpha::ONE),
            Err(VerifyError::Spectra(SpectraError::AlphaNotBelowOne(_)))
        ));
        let split = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert!(matches!(
            check_bound(&split, Alpha::ZERO),
            Err(VerifyError::Disconnected)
        ));
        assert!(matches!(
            check_bound_with_tol(&make_path(4).unwrap(), Alpha::ZERO, 0.0),
            Err(VerifyError::BadTolerance(_))
        ));
    }
}
