use crate::{fixed6, open_input, AnalyzeArgs, CmdResult, Failure, Format};
use anyhow::Context;
use dalpha::graph::parse_graph6;
use dalpha::spectra::{Alpha, SolverPath};
use dalpha::verify::{report, GraphAnalysis, GraphClass, Verdict};
use serde::Serialize;
use std::io::{self, BufRead, Write};

#[derive(Debug, Serialize)]
struct GraphReport {
    graph6: String,
    n: usize,
    degree_sequence: Vec<usize>,
    diameter: u32,
    transmissions: Vec<u64>,
    tr_max: u64,
    tr_min: u64,
    wiener: u64,
    class: GraphClass,
    class_details: String,
    per_alpha: Vec<AlphaReport>,
}

#[derive(Debug, Serialize)]
struct AlphaReport {
    alpha: f64,
    mu_alpha: f64,
    perron_min: Option<f64>,
    perron_max: Option<f64>,
    solver: SolverPath,
    gap: f64,
    bound: Option<f64>,
    slack: Option<f64>,
    /// `None` when the bound does not apply.
    verdict: Option<Verdict>,
}

#[derive(Debug, Serialize)]
struct CsvRow<'a> {
    graph6: &'a str,
    alpha: f64,
    tr_max: u64,
    mu_alpha: f64,
    perron_min: Option<f64>,
    perron_max: Option<f64>,
    gap: f64,
    bound: Option<f64>,
    slack: Option<f64>,
    class: String,
    verdict: String,
}

fn analyze_one(
    g6: &str,
    alphas: &[Alpha],
    tol: f64,
    spectral_only: bool,
) -> anyhow::Result<GraphReport> {
    let g = parse_graph6(g6).with_context(|| format!("cannot parse {g6:?}"))?;
    let a = GraphAnalysis::new(&g)?;
    let t = &a.transmissions;
    let regular = t.is_regular();
    let mut per_alpha = Vec::with_capacity(alphas.len());
    for &alpha in alphas {
        let s = a.spectrum(alpha)?;
        let extremes = s.perron_extremes();
        let mut r = AlphaReport {
            alpha: alpha.get(),
            mu_alpha: s.mu,
            perron_min: extremes.map(|e| e.0),
            perron_max: extremes.map(|e| e.1),
            solver: s.path,
            gap: t.tr_max as f64 - s.mu,
            bound: None,
            slack: None,
            verdict: None,
        };
        if !spectral_only && !regular {
            let c = a.check_bound(alpha, tol)?;
            r.gap = c.gap;
            r.bound = Some(c.bound);
            r.slack = Some(c.slack);
            r.verdict = Some(c.verdict);
        }
        per_alpha.push(r);
    }
    Ok(GraphReport {
        graph6: g6.to_owned(),
        n: a.order(),
        degree_sequence: a.graph.degree_sequence(),
        diameter: a.distances.diameter(),
        transmissions: t.tr.clone(),
        tr_max: t.tr_max,
        tr_min: t.tr_min,
        wiener: t.wiener,
        class: a.class().clone(),
        class_details: a.classification.details.clone(),
        per_alpha,
    })
}

fn fmt_opt(x: Option<f64>) -> String {
    x.map_or_else(|| "-".to_owned(), fixed6)
}

fn list<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(T::to_string).collect::<Vec<_>>().join(" ")
}

fn write_text(out: &mut impl Write, r: &GraphReport, spectral_only: bool) -> io::Result<()> {
    writeln!(out, "graph6          {}", r.graph6)?;
    writeln!(out, "n               {}", r.n)?;
    writeln!(out, "degrees         {}", list(&r.degree_sequence))?;
    writeln!(out, "diameter        {}", r.diameter)?;
    writeln!(out, "transmissions   {}", list(&r.transmissions))?;
    writeln!(
        out,
        "Tr_max {}  Tr_min {}  W {}",
        r.tr_max, r.tr_min, r.wiener
    )?;
    writeln!(out, "class           {}", r.class)?;
    writeln!(
        out,
        "{:>8} {:>12} {:>10} {:>10} {:>10} {:>10} {:>10}  verdict",
        "alpha", "mu", "x_min", "x_max", "gap", "bound", "slack"
    )?;
    for a in &r.per_alpha {
        let verdict = match a.verdict {
            Some(v) => v.to_string(),
            None if spectral_only => "-".to_owned(),
            None => "skipped (transmission regular)".to_owned(),
        };
        writeln!(
            out,
            "{:>8.6} {:>12.6} {:>10} {:>10} {:>10} {:>10} {:>10}  {verdict}",
            a.alpha,
            a.mu_alpha,
            fmt_opt(a.perron_min),
            fmt_opt(a.perron_max),
            fixed6(a.gap),
            fmt_opt(a.bound),
            fmt_opt(a.slack),
        )?;
    }
    Ok(())
}

pub fn run(args: &AnalyzeArgs) -> CmdResult {
    let common = &args.common;
    let alphas = if args.spectral_only {
        common.spectral_alphas()?
    } else {
        common.bound_alphas()?
    };
    let tol = common.tol()?;

    let inputs: Vec<String> = match (&args.graph6, &args.file) {
        (Some(s), _) => vec![s.trim().to_owned()],
        (None, Some(path)) => open_input(path)?
            .lines()
            .map(|l| l.map(|s| s.trim().to_owned()))
            .filter(|l| !matches!(l, Ok(s) if s.is_empty()))
            .collect::<Result<_, _>>()?,
        (None, None) => unreachable!("clap requires one input"),
    };
    let reports = inputs
        .iter()
        .map(|g6| analyze_one(g6, &alphas, tol, args.spectral_only))
        .collect::<anyhow::Result<Vec<_>>>()?;

    let stdout = io::stdout();
    let mut out = stdout.lock();
    match common.format {
        Format::Text => {
            for (i, r) in reports.iter().enumerate() {
                if i > 0 {
                    writeln!(out)?;
                }
                write_text(&mut out, r, args.spectral_only)?;
            }
        }
        Format::Json => {
            let json = if args.graph6.is_some() {
                report::to_json(&reports[0])?
            } else {
                report::to_json(&reports)?
            };
            writeln!(out, "{json}")?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut out);
            for r in &reports {
                for a in &r.per_alpha {
                    w.serialize(CsvRow {
                        graph6: &r.graph6,
                        alpha: a.alpha,
                        tr_max: r.tr_max,
                        mu_alpha: a.mu_alpha,
                        perron_min: a.perron_min,
                        perron_max: a.perron_max,
                        gap: a.gap,
                        bound: a.bound,
                        slack: a.slack,
                        class: r.class.to_string(),
                        verdict: a.verdict.map(|v| v.to_string()).unwrap_or_default(),
                    })?;
                }
            }
            w.flush()?;
        }
    }

    let violated = reports
        .iter()
        .flat_map(|r| &r.per_alpha)
        .any(|a| a.verdict == Some(Verdict::Violation));
    if violated {
        Err(Failure::Check)
    } else {
        Ok(())
    }
}
