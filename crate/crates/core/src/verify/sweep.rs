//! Exhaustive bound checks over a graph6 stream.
//!
//! Lines are processed in chunks: each chunk is analysed in parallel and
//! then folded into the accumulator in input order, so the report does not
//! depend on the number of worker threads.

use super::{check_tol, BoundCheck, GraphAnalysis, GraphClass, Verdict, VerifyError, TIE_TOL};
use crate::graph::graph6::{parse_graph6_bytes, HEADER};
use crate::graph::to_graph6;
use crate::spectra::{bound_tau, Alpha};
use rayon::prelude::*;
use serde::Serialize;
use std::collections::BTreeSet;
use std::io::BufRead;

const CHUNK: usize = 1 << 14;

#[derive(Debug, Clone)]
pub struct SweepOptions {
    pub alphas: Vec<Alpha>,
    pub tol: f64,
}

impl SweepOptions {
    pub fn new(alphas: Vec<Alpha>, tol: f64) -> Self {
        SweepOptions { alphas, tol }
    }
}

/// One CSV row: a graph checked at one `α`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepRow {
    pub graph6: String,
    pub alpha: f64,
    pub tr_max: u64,
    pub mu_alpha: f64,
    pub gap: f64,
    pub bound: f64,
    pub slack: f64,
    pub class: String,
    pub verdict: String,
}

impl SweepRow {
    pub fn new(graph6: &str, class: &GraphClass, check: &BoundCheck) -> Self {
        SweepRow {
            graph6: graph6.to_owned(),
            alpha: check.alpha,
            tr_max: check.tr_max,
            mu_alpha: check.mu,
            gap: check.gap,
            bound: check.bound,
            slack: check.slack,
            class: class.to_string(),
            verdict: check.verdict.to_string(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AlphaSummary {
    pub alpha: f64,
    pub bound: Option<f64>,
    pub min_gap: Option<f64>,
    pub min_slack: Option<f64>,
    /// Graphs within `TIE_TOL` of the minimum gap, sorted.
    pub argmin: Vec<String>,
    /// Graphs whose slack is within tolerance of zero at this `α`, sorted.
    pub numeric_equality: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Violation {
    pub graph6: String,
    pub alpha: f64,
    pub gap: f64,
    pub bound: f64,
    pub slack: f64,
}

/// A graph whose numeric and structural equality disagree.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EqualityMismatch {
    pub graph6: String,
    pub class: String,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepReport {
    pub order: Option<usize>,
    pub alphas: Vec<f64>,
    pub tol: f64,
    pub graphs_total: usize,
    pub graphs_connected: usize,
    pub graphs_nontransmission_regular: usize,
    pub min_slack: Option<f64>,
    pub per_alpha: Vec<AlphaSummary>,
    /// Structurally extremal graphs, sorted.
    pub equality_set: Vec<String>,
    /// Class of each entry of `equality_set`.
    pub equality_classes: Vec<String>,
    pub violations: Vec<Violation>,
    pub equality_mismatches: Vec<EqualityMismatch>,
    pub note: Option<String>,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty() && self.equality_mismatches.is_empty()
    }

    /// Every per-`α` numeric equality set equals the structural one.
    pub fn equality_set_alpha_independent(&self) -> bool {
        self.per_alpha
            .iter()
            .all(|s| s.numeric_equality == self.equality_set)
    }

    /// Every minimiser of the gap is structurally extremal.
    pub fn argmin_within_equality_set(&self) -> bool {
        self.per_alpha.iter().all(|s| {
            s.argmin
                .iter()
                .all(|g| self.equality_set.binary_search(g).is_ok())
        })
    }
}

enum Outcome {
    Disconnected,
    TransmissionRegular,
    Checked {
        graph6: String,
        class: GraphClass,
        checks: Vec<BoundCheck>,
    },
}

struct AlphaAcc {
    min_gap: f64,
    min_slack: f64,
    /// (gap, graph6) candidates within TIE_TOL of the running minimum.
    ties: Vec<(f64, String)>,
    numeric_equality: BTreeSet<String>,
}

struct Acc {
    order: Option<usize>,
    total: usize,
    connected: usize,
    eligible: usize,
    per_alpha: Vec<AlphaAcc>,
    equality: BTreeSet<(String, String)>,
    violations: Vec<Violation>,
    mismatches: Vec<EqualityMismatch>,
}

impl Acc {
    fn new(alphas: usize) -> Self {
        Acc {
            order: None,
            total: 0,
            connected: 0,
            eligible: 0,
            per_alpha: (0..alphas)
                .map(|_| AlphaAcc {
                    min_gap: f64::INFINITY,
                    min_slack: f64::INFINITY,
                    ties: Vec::new(),
                    numeric_equality: BTreeSet::new(),
                })
                .collect(),
            equality: BTreeSet::new(),
            violations: Vec::new(),
            mismatches: Vec::new(),
        }
    }

    fn absorb(&mut self, outcome: Outcome) {
        self.total += 1;
        let (graph6, class, checks) = match outcome {
            Outcome::Disconnected => return,
            Outcome::TransmissionRegular => {
                self.connected += 1;
                return;
            }
            Outcome::Checked {
                graph6,
                class,
                checks,
            } => (graph6, class, checks),
        };
        self.connected += 1;
        self.eligible += 1;

        for (acc, check) in self.per_alpha.iter_mut().zip(&checks) {
            acc.min_slack = acc.min_slack.min(check.slack);
            if check.gap <= acc.min_gap + TIE_TOL {
                if check.gap < acc.min_gap {
                    acc.min_gap = check.gap;
                    let cutoff = acc.min_gap + TIE_TOL;
                    acc.ties.retain(|(g, _)| *g <= cutoff);
                }
                acc.ties.push((check.gap, graph6.clone()));
            }
            if check.numeric_equality {
                acc.numeric_equality.insert(graph6.clone());
            }
            if check.verdict == Verdict::Violation {
                self.violations.push(Violation {
                    graph6: graph6.clone(),
                    alpha: check.alpha,
                    gap: check.gap,
                    bound: check.bound,
                    slack: check.slack,
                });
            }
        }

        let all_tight = !checks.is_empty() && checks.iter().all(|c| c.numeric_equality);
        if class.is_extremal() {
            self.equality.insert((graph6.clone(), class.to_string()));
            if let Some(c) = checks.iter().find(|c| !c.numeric_equality) {
                self.mismatches.push(EqualityMismatch {
                    graph6,
                    class: class.to_string(),
                    reason: format!(
                        "structurally extremal but slack {:e} exceeds tolerance at alpha {}",
                        c.slack, c.alpha
                    ),
                });
            }
        } else if all_tight {
            self.mismatches.push(EqualityMismatch {
                graph6,
                class: class.to_string(),
                reason: "gap meets the bound at every alpha but the graph is not extremal".into(),
            });
        }
    }

    fn finish(self, opts: &SweepOptions) -> SweepReport {
        let per_alpha: Vec<AlphaSummary> = self
            .per_alpha
            .into_iter()
            .zip(&opts.alphas)
            .map(|(acc, alpha)| {
                let have = self.eligible > 0;
                let mut argmin: Vec<String> = acc
                    .ties
                    .into_iter()
                    .filter(|(g, _)| *g <= acc.min_gap + TIE_TOL)
                    .map(|(_, s)| s)
                    .collect();
                argmin.sort();
                argmin.dedup();
                AlphaSummary {
                    alpha: alpha.get(),
                    bound: self
                        .order
                        .and_then(|n| bound_tau(n, *alpha).ok())
                        .map(|p| p.bound),
                    min_gap: have.then_some(acc.min_gap),
                    min_slack: have.then_some(acc.min_slack),
                    argmin,
                    numeric_equality: acc.numeric_equality.into_iter().collect(),
                }
            })
            .collect();
        let min_slack = per_alpha
            .iter()
            .filter_map(|s| s.min_slack)
            .reduce(f64::min);
        let (equality_set, equality_classes) = self.equality.into_iter().unzip();
        SweepReport {
            order: self.order,
            alphas: opts.alphas.iter().map(|a| a.get()).collect(),
            tol: opts.tol,
            graphs_total: self.total,
            graphs_connected: self.connected,
            graphs_nontransmission_regular: self.eligible,
            min_slack,
            per_alpha,
            equality_set,
            equality_classes,
            violations: self.violations,
            equality_mismatches: self.mismatches,
            note: (self.eligible == 0).then(|| "no eligible graphs".to_string()),
        }
    }
}

fn analyse(
    line: &[u8],
    lineno: usize,
    opts: &SweepOptions,
) -> Result<(usize, Outcome), VerifyError> {
    let g = parse_graph6_bytes(line).map_err(|source| VerifyError::Parse {
        line: lineno,
        source,
    })?;
    let n = g.order();
    if !g.is_connected() {
        return Ok((n, Outcome::Disconnected));
    }
    let analysis = GraphAnalysis::new(&g)?;
    if analysis.transmissions.is_regular() {
        return Ok((n, Outcome::TransmissionRegular));
    }
    let checks = opts
        .alphas
        .iter()
        .map(|&a| analysis.check_bound(a, opts.tol))
        .collect::<Result<Vec<_>, _>>()?;
    Ok((
        n,
        Outcome::Checked {
            graph6: to_graph6(&g).expect("order already validated"),
            class: analysis.classification.class,
            checks,
        },
    ))
}

/// Runs the bound check on every graph of a graph6 stream.
pub fn sweep<R: BufRead>(reader: R, opts: &SweepOptions) -> Result<SweepReport, VerifyError> {
    sweep_with_rows(reader, opts, |_| {})
}

/// Like [`sweep`], also handing each `(graph, α)` row to `on_row` in input
/// order.
pub fn sweep_with_rows<R, F>(
    reader: R,
    opts: &SweepOptions,
    mut on_row: F,
) -> Result<SweepReport, VerifyError>
where
    R: BufRead,
    F: FnMut(&SweepRow),
{
    check_tol(opts.tol)?;
    for &a in &opts.alphas {
        a.require_below_one()?;
    }
    let mut acc = Acc::new(opts.alphas.len());
    let mut lines = reader.split(b'\n');
    let mut lineno = 0usize;
    loop {
        let mut chunk: Vec<(usize, Vec<u8>)> = Vec::with_capacity(CHUNK);
        for line in lines.by_ref() {
            lineno += 1;
            let mut line = line?;
            while matches!(line.last(), Some(b'\r' | b' ' | b'\t')) {
                line.pop();
            }
            if line.is_empty() || line == HEADER.as_bytes() {
                continue;
            }
            chunk.push((lineno, line));
            if chunk.len() == CHUNK {
                break;
            }
        }
        if chunk.is_empty() {
            break;
        }
        let results: Vec<_> = chunk
            .par_iter()
            .map(|(no, line)| analyse(line, *no, opts))
            .collect();
        for ((no, _), result) in chunk.iter().zip(results) {
            let (n, outcome) = result?;
            match acc.order {
                None => acc.order = Some(n),
                Some(expected) if expected != n => {
                    return Err(VerifyError::MixedOrders {
                        line: *no,
                        expected,
                        found: n,
                    })
                }
                _ => {}
            }
            if let Outcome::Checked {
                graph6,
                class,
                checks,
            } = &outcome
            {
                for c in checks {
                    on_row(&SweepRow::new(graph6, class, c));
                }
            }
            acc.absorb(outcome);
        }
    }
    Ok(acc.finish(opts))
}
