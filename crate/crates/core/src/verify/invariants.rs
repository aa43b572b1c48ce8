//! Numeric checks of the identities that hold on the extremal graphs.

use super::{GraphAnalysis, VerifyError};
use crate::graph::Graph;
use crate::spectra::{bound_tau, Alpha};
use serde::Serialize;

/// Absolute tolerance on the Perron ratio `x_max / x_min`.
pub const PERRON_RATIO_TOL: f64 = 1e-8;
/// Relative slack for the `Tr_min <= μ <= Tr_max` sandwich.
pub const SANDWICH_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckStatus {
    Pass,
    Fail,
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct InvariantCheck {
    pub status: CheckStatus,
    pub measured: Option<f64>,
    pub expected: Option<f64>,
    /// Absolute deviation between `measured` and `expected`.
    pub deviation: Option<f64>,
    pub note: String,
}

impl InvariantCheck {
    fn skipped(note: impl Into<String>) -> Self {
        InvariantCheck {
            status: CheckStatus::Skipped,
            measured: None,
            expected: None,
            deviation: None,
            note: note.into(),
        }
    }

    fn measured(
        measured: f64,
        expected: f64,
        deviation: f64,
        pass: bool,
        note: impl Into<String>,
    ) -> Self {
        InvariantCheck {
            status: if pass {
                CheckStatus::Pass
            } else {
                CheckStatus::Fail
            },
            measured: Some(measured),
            expected: Some(expected),
            deviation: Some(deviation),
            note: note.into(),
        }
    }

    pub fn failed(&self) -> bool {
        self.status == CheckStatus::Fail
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct InvariantReport {
    pub alpha: f64,
    /// `Tr_min <= μ_α <= Tr_max`.
    pub sandwich: InvariantCheck,
    /// `n·Tr_max - 2W = ρ_n`, extremal graphs only.
    pub parity_identity: InvariantCheck,
    /// `x_max / x_min = 1 / (1 - τ_n)`, extremal graphs only.
    pub perron_ratio: InvariantCheck,
    /// `Tr_y = d(y) + 2(n-1-d(y))` when the diameter is at most 2.
    pub diam2_identity: InvariantCheck,
    /// `Tr_min = n-1` and `Tr_max = n-1+ρ_n`, extremal graphs only.
    pub trmax_structure: InvariantCheck,
}

impl InvariantReport {
    pub fn checks(&self) -> [(&'static str, &InvariantCheck); 5] {
        [
            ("sandwich", &self.sandwich),
            ("parity_identity", &self.parity_identity),
            ("perron_ratio", &self.perron_ratio),
            ("diam2_identity", &self.diam2_identity),
            ("trmax_structure", &self.trmax_structure),
        ]
    }

    pub fn all_passed(&self) -> bool {
        self.checks().iter().all(|(_, c)| !c.failed())
    }
}

pub fn check_proof_invariants(g: &Graph, alpha: Alpha) -> Result<InvariantReport, VerifyError> {
    GraphAnalysis::new(g)?.proof_invariants(alpha)
}

impl GraphAnalysis {
    pub fn proof_invariants(&self, alpha: Alpha) -> Result<InvariantReport, VerifyError> {
        let n = self.order();
        let t = &self.transmissions;
        let spectrum = self.spectrum(alpha)?;
        let mu = spectrum.mu;
        let (tr_min, tr_max) = (t.tr_min as f64, t.tr_max as f64);

        let slack = SANDWICH_TOL * mu.abs().max(1.0);
        let below = (tr_min - mu).max(0.0);
        let above = (mu - tr_max).max(0.0);
        let sandwich = InvariantCheck::measured(
            mu,
            if above > 0.0 { tr_max } else { tr_min },
            below.max(above),
            below <= slack && above <= slack,
            format!("Tr_min = {}, Tr_max = {}", t.tr_min, t.tr_max),
        );

        let diam2_identity = if self.distances.diameter() <= 2 {
            let worst = (0..n)
                .map(|y| {
                    let deg = self.graph.degree(y) as i64;
                    let predicted = deg + 2 * (n as i64 - 1 - deg);
                    (t.tr[y] as i64 - predicted).abs()
                })
                .max()
                .unwrap_or(0);
            InvariantCheck::measured(
                worst as f64,
                0.0,
                worst as f64,
                worst == 0,
                "largest |Tr_y - (d(y) + 2(n-1-d(y)))|",
            )
        } else {
            InvariantCheck::skipped(format!("diameter {} > 2", self.distances.diameter()))
        };

        if !self.class().is_extremal() {
            let note = format!("not an extremal graph ({})", self.class());
            return Ok(InvariantReport {
                alpha: alpha.get(),
                sandwich,
                parity_identity: InvariantCheck::skipped(note.clone()),
                perron_ratio: InvariantCheck::skipped(note.clone()),
                diam2_identity,
                trmax_structure: InvariantCheck::skipped(note),
            });
        }

        let params = bound_tau(n, alpha)?;
        let rho = params.rho_n as i64;

        let parity = n as i64 * t.tr_max as i64 - 2 * t.wiener as i64;
        let parity_identity = InvariantCheck::measured(
            parity as f64,
            rho as f64,
            (parity - rho).abs() as f64,
            parity == rho,
            format!("n·Tr_max - 2W with W = {}", t.wiener),
        );

        let expected_ratio = 1.0 / (1.0 - params.tau_n);
        let perron_ratio = match spectrum.perron_extremes() {
            Some((lo, hi)) => {
                let ratio = hi / lo;
                let dev = (ratio - expected_ratio).abs();
                InvariantCheck::measured(
                    ratio,
                    expected_ratio,
                    dev,
                    dev <= PERRON_RATIO_TOL,
                    format!("tau_n = {}", params.tau_n),
                )
            }
            None => InvariantCheck::skipped("Perron vector not unique"),
        };

        let want_min = n as i64 - 1;
        let want_max = want_min + rho;
        let dev = (t.tr_min as i64 - want_min)
            .abs()
            .max((t.tr_max as i64 - want_max).abs());
        let trmax_structure = InvariantCheck::measured(
            t.tr_max as f64,
            want_max as f64,
            dev as f64,
            dev == 0,
            format!(
                "Tr_min = {} (want {want_min}), Tr_max = {} (want {want_max})",
                t.tr_min, t.tr_max
            ),
        );

        Ok(InvariantReport {
            alpha: alpha.get(),
            sandwich,
            parity_identity,
            perron_ratio,
            diam2_identity,
            trmax_structure,
        })
    }
}
