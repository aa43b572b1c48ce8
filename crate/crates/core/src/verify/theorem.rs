//! End-to-end verification of the gap bound at one order: the extremal
//! families in closed form, optionally followed by an exhaustive sweep.

use super::{check_tol, sweep, GraphAnalysis, SweepOptions, SweepReport, Verdict, VerifyError};
use crate::graph::{extremal_family, to_graph6};
use crate::spectra::{bound_tau, quotient_mu_even_dvdr, quotient_mu_odd, Alpha};
use serde::Serialize;
use std::collections::BTreeSet;
use std::io::BufRead;

/// Largest permitted value of the quadratic at `τ_n`.
pub const EQ5_RESIDUAL_TOL: f64 = 1e-12;
/// Agreement between the closed forms and the eigensolver.
pub const CLOSED_FORM_TOL: f64 = 1e-10;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TheoremCheck {
    pub name: String,
    pub passed: bool,
    pub detail: String,
    /// Offending graph, when the check is about one graph.
    pub graph6: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TheoremReport {
    pub n: usize,
    pub alphas: Vec<f64>,
    pub tol: f64,
    pub family: Vec<String>,
    pub checks: Vec<TheoremCheck>,
    pub sweep: Option<SweepReport>,
}

impl TheoremReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &TheoremCheck> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

struct Checks(Vec<TheoremCheck>);

impl Checks {
    fn push(
        &mut self,
        name: impl Into<String>,
        passed: bool,
        detail: impl Into<String>,
        graph6: Option<&str>,
    ) {
        self.0.push(TheoremCheck {
            name: name.into(),
            passed,
            detail: detail.into(),
            graph6: graph6.map(str::to_owned),
        });
    }
}

/// Checks every generated extremal graph of order `n` against the bound,
/// the closed forms and the proof invariants at each `α`.
pub fn verify_theorem_family(
    n: usize,
    alphas: &[Alpha],
    tol: f64,
) -> Result<TheoremReport, VerifyError> {
    check_tol(tol)?;
    for a in alphas {
        a.require_below_one()?;
    }
    let family = extremal_family(n)?;
    let mut checks = Checks(Vec::new());
    let mut names = Vec::with_capacity(family.len());

    for &alpha in alphas {
        let p = bound_tau(n, alpha)?;
        checks.push(
            format!("bound parameters (alpha={alpha})"),
            p.residual.abs() <= EQ5_RESIDUAL_TOL && p.tau_n > 0.0 && p.tau_n < 1.0,
            format!("tau_n = {}, quadratic residual = {:e}", p.tau_n, p.residual),
            None,
        );
    }

    for g in &family {
        let g6 = to_graph6(g).expect("family orders fit short graph6");
        let analysis = GraphAnalysis::new(g)?;
        let class = analysis.class().clone();
        checks.push(
            "extremal classification",
            class.is_extremal(),
            format!("classified as {class}"),
            Some(&g6),
        );
        for &alpha in alphas {
            let check = analysis.check_bound(alpha, tol)?;
            checks.push(
                format!("equality (alpha={alpha})"),
                check.verdict == Verdict::EqualityStructural && check.numeric_equality,
                format!(
                    "gap = {}, bound = {}, slack = {:e}, verdict {}",
                    check.gap, check.bound, check.slack, check.verdict
                ),
                Some(&g6),
            );

            let closed = if n % 2 == 1 {
                quotient_mu_odd(n, alpha)?
            } else {
                quotient_mu_even_dvdr(n, alpha)?
            };
            let dev = (closed - check.mu).abs();
            checks.push(
                format!("closed-form spectral radius (alpha={alpha})"),
                dev <= CLOSED_FORM_TOL,
                format!(
                    "eigensolver {} vs closed form {closed}, deviation {dev:e}",
                    check.mu
                ),
                Some(&g6),
            );

            let inv = analysis.proof_invariants(alpha)?;
            for (name, c) in inv.checks() {
                checks.push(
                    format!("{name} (alpha={alpha})"),
                    !c.failed(),
                    format!(
                        "{:?}: measured {:?}, expected {:?}; {}",
                        c.status, c.measured, c.expected, c.note
                    ),
                    Some(&g6),
                );
            }
        }
        names.push(g6);
    }

    Ok(TheoremReport {
        n,
        alphas: alphas.iter().map(|a| a.get()).collect(),
        tol,
        family: names,
        checks: checks.0,
        sweep: None,
    })
}

/// Family checks plus an exhaustive sweep over a graph6 enumeration of the
/// connected graphs of order `n`. The sweep's equality set must consist of
/// exactly the generated family, compared by structural class.
pub fn verify_theorem_file<R: BufRead>(
    n: usize,
    reader: R,
    alphas: &[Alpha],
    tol: f64,
) -> Result<TheoremReport, VerifyError> {
    let mut report = verify_theorem_family(n, alphas, tol)?;
    let swept = sweep(reader, &SweepOptions::new(alphas.to_vec(), tol))?;
    let mut checks = Checks(Vec::new());

    checks.push(
        "enumeration order",
        swept.order == Some(n),
        format!("stream order {:?}, expected {n}", swept.order),
        None,
    );
    for v in &swept.violations {
        checks.push(
            format!("no violation (alpha={})", v.alpha),
            false,
            format!(
                "gap {} below bound {} (slack {:e})",
                v.gap, v.bound, v.slack
            ),
            Some(&v.graph6),
        );
    }
    for m in &swept.equality_mismatches {
        checks.push(
            "equality agreement",
            false,
            format!("{} ({})", m.reason, m.class),
            Some(&m.graph6),
        );
    }
    checks.push(
        "no violations",
        swept.violations.is_empty(),
        format!(
            "{} eligible graphs checked at {} alpha values",
            swept.graphs_nontransmission_regular,
            alphas.len()
        ),
        None,
    );

    let generated: BTreeSet<String> = extremal_family(n)?
        .iter()
        .map(|g| GraphAnalysis::new(g).map(|a| a.class().to_string()))
        .collect::<Result<_, _>>()?;
    let found: BTreeSet<String> = swept.equality_classes.iter().cloned().collect();
    checks.push(
        "equality set equals extremal family",
        found == generated && swept.equality_set.len() == generated.len(),
        format!(
            "{} graphs attain equality ({:?}); family has {} ({:?})",
            swept.equality_set.len(),
            found,
            generated.len(),
            generated
        ),
        None,
    );
    checks.push(
        "equality set independent of alpha",
        swept.equality_set_alpha_independent(),
        "numeric equality set at each alpha matches the structural set",
        None,
    );
    checks.push(
        "minimisers are extremal",
        swept.argmin_within_equality_set(),
        "every graph of minimum gap lies in the equality set",
        None,
    );

    report.checks.extend(checks.0);
    report.sweep = Some(swept);
    Ok(report)
}
