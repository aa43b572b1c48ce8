use crate::{fixed6, open_input, CmdResult, Failure, Format, TheoremArgs};
use anyhow::anyhow;
use dalpha::verify::{report, verify_theorem_family, verify_theorem_file, TheoremReport};
use std::io::{self, Write};

fn write_text(out: &mut impl Write, r: &TheoremReport) -> io::Result<()> {
    writeln!(out, "order {}  alphas {:?}  tol {:e}", r.n, r.alphas, r.tol)?;
    writeln!(
        out,
        "extremal family ({}): {}",
        r.family.len(),
        r.family.join(" ")
    )?;
    if let Some(s) = &r.sweep {
        writeln!(
            out,
            "sweep: {} graphs, {} connected, {} non-transmission-regular",
            s.graphs_total, s.graphs_connected, s.graphs_nontransmission_regular
        )?;
        writeln!(
            out,
            "equality set ({}): {}",
            s.equality_set.len(),
            s.equality_set.join(" ")
        )?;
        if let Some(m) = s.min_slack {
            writeln!(out, "min slack {}", fixed6(m))?;
        }
    }
    for c in r.failures() {
        match &c.graph6 {
            Some(g) => writeln!(out, "FAIL {} [{g}]: {}", c.name, c.detail)?,
            None => writeln!(out, "FAIL {}: {}", c.name, c.detail)?,
        }
    }
    let failed = r.failures().count();
    writeln!(
        out,
        "{} ({} checks, {failed} failed)",
        if failed == 0 { "PASS" } else { "FAIL" },
        r.checks.len()
    )
}

pub fn run(args: &TheoremArgs) -> CmdResult {
    let alphas = args.common.bound_alphas()?;
    let tol = args.common.tol()?;
    let report = match (&args.file, args.family_only) {
        (Some(path), _) => verify_theorem_file(args.n, open_input(path)?, &alphas, tol)?,
        (None, true) => verify_theorem_family(args.n, &alphas, tol)?,
        (None, false) => return Err(anyhow!("either --file or --family-only is required").into()),
    };

    let stdout = io::stdout();
    let mut out = stdout.lock();
    match args.common.format {
        Format::Text => write_text(&mut out, &report)?,
        Format::Json => writeln!(out, "{}", report::to_json(&report)?)?,
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut out);
            w.write_record(["name", "passed", "graph6", "detail"])?;
            for c in &report.checks {
                let passed = c.passed.to_string();
                w.write_record([
                    &c.name,
                    &passed,
                    c.graph6.as_deref().unwrap_or(""),
                    &c.detail,
                ])?;
            }
            w.flush()?;
        }
    }
    if report.passed() {
        Ok(())
    } else {
        Err(Failure::Check)
    }
}
