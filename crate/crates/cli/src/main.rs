mod analyze;
mod generate;
mod theorem;

use anyhow::{anyhow, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use dalpha::spectra::Alpha;
use dalpha::verify::{report, sweep_with_rows, SweepOptions};
use std::fs::File;
use std::io::{self, BufRead, BufReader, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

/// Spectral radius of the generalized distance matrix of connected graphs,
/// and verification of the lower bound on `Tr_max - μ_α`.
#[derive(Debug, Parser)]
#[command(name = "dalpha", version)]
struct Cli {
    /// Worker threads for sweeps (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Analyze one graph, or every graph in a file.
    Analyze(AnalyzeArgs),
    /// Emit graph6 lines for a named family.
    Generate(GenerateArgs),
    /// Check the bound on every graph of a graph6 stream.
    Sweep(SweepArgs),
    /// Check the extremal families, and optionally an exhaustive enumeration.
    VerifyTheorem(TheoremArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Args)]
pub struct Common {
    /// Comma-separated α values.
    #[arg(
        long,
        value_delimiter = ',',
        default_value = "0,0.25,0.5,0.75",
        allow_hyphen_values = true
    )]
    alpha: Vec<f64>,
    /// Relative tolerance for equality and violation decisions.
    #[arg(long, env = "DALPHA_TOL", default_value_t = dalpha::verify::DEFAULT_TOL)]
    tol: f64,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Debug, Args)]
#[command(group = clap::ArgGroup::new("input").required(true).args(["graph6", "file"]))]
pub struct AnalyzeArgs {
    #[arg(long)]
    graph6: Option<String>,
    /// graph6 file, one graph per line; `-` reads stdin.
    #[arg(long)]
    file: Option<PathBuf>,
    /// Report spectra only; allows α = 1.
    #[arg(long)]
    spectral_only: bool,
    #[command(flatten)]
    common: Common,
}

#[derive(Debug, Args)]
pub struct GenerateArgs {
    #[arg(long, value_enum)]
    family: generate::Family,
    #[arg(long)]
    n: Option<usize>,
    /// Part sizes for complete-multipartite.
    #[arg(long, value_delimiter = ',')]
    parts: Vec<usize>,
    /// Regular base graph for dvdr.
    #[arg(long)]
    graph6: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    /// graph6 file, one graph per line; `-` reads stdin.
    #[arg(long)]
    file: PathBuf,
    #[command(flatten)]
    common: Common,
}

#[derive(Debug, Args)]
pub struct TheoremArgs {
    #[arg(long)]
    n: usize,
    /// graph6 enumeration of every connected graph of order n.
    #[arg(long, conflicts_with = "family_only")]
    file: Option<PathBuf>,
    /// Check the generated extremal family only.
    #[arg(long)]
    family_only: bool,
    #[command(flatten)]
    common: Common,
}

/// How a command failed, mapped onto the exit status.
#[derive(Debug)]
pub enum Failure {
    /// Bad arguments or unreadable input.
    Usage(anyhow::Error),
    /// The command ran but a check failed.
    Check,
}

impl<E: Into<anyhow::Error>> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Usage(e.into())
    }
}

pub type CmdResult = Result<(), Failure>;

impl Common {
    /// α values for bound checks, in `[0, 1)`.
    pub fn bound_alphas(&self) -> anyhow::Result<Vec<Alpha>> {
        self.alpha
            .iter()
            .map(|&a| Ok(Alpha::below_one(a)?))
            .collect()
    }

    pub fn spectral_alphas(&self) -> anyhow::Result<Vec<Alpha>> {
        self.alpha.iter().map(|&a| Ok(Alpha::new(a)?)).collect()
    }

    pub fn tol(&self) -> anyhow::Result<f64> {
        if self.tol.is_finite() && self.tol > 0.0 {
            Ok(self.tol)
        } else {
            Err(anyhow!(
                "tolerance must be a positive finite number, got {}",
                self.tol
            ))
        }
    }
}

/// Six decimals, without a sign on values that round to zero.
pub fn fixed6(x: f64) -> String {
    if x.abs() < 5e-7 {
        "0.000000".to_owned()
    } else {
        format!("{x:.6}")
    }
}

pub fn open_input(path: &Path) -> anyhow::Result<Box<dyn BufRead>> {
    if path.as_os_str() == "-" {
        return Ok(Box::new(BufReader::new(io::stdin())));
    }
    let f = File::open(path).with_context(|| format!("cannot open {}", path.display()))?;
    Ok(Box::new(BufReader::new(f)))
}

fn run_sweep(args: &SweepArgs) -> CmdResult {
    let alphas = args.common.bound_alphas()?;
    let opts = SweepOptions::new(alphas, args.common.tol()?);
    let input = open_input(&args.file)?;
    let stdout = io::stdout();
    let mut out = stdout.lock();

    let report = if args.common.format == Format::Csv {
        let mut rows = report::CsvRows::new(&mut out)?;
        let mut err = None;
        let r = sweep_with_rows(input, &opts, |row| {
            if err.is_none() {
                err = rows.write(row).err();
            }
        })?;
        if let Some(e) = err {
            return Err(e.into());
        }
        rows.finish()?;
        r
    } else {
        let r = sweep_with_rows(input, &opts, |_| {})?;
        if args.common.format == Format::Json {
            writeln!(out, "{}", report::to_json(&r)?)?;
        } else {
            print_sweep_text(&mut out, &r)?;
        }
        r
    };
    if report.passed() {
        Ok(())
    } else {
        Err(Failure::Check)
    }
}

fn print_sweep_text(out: &mut impl Write, r: &dalpha::verify::SweepReport) -> io::Result<()> {
    match r.order {
        Some(n) => writeln!(out, "order {n}")?,
        None => writeln!(out, "order -")?,
    }
    writeln!(
        out,
        "graphs {}  connected {}  non-transmission-regular {}",
        r.graphs_total, r.graphs_connected, r.graphs_nontransmission_regular
    )?;
    for s in &r.per_alpha {
        write!(out, "alpha {:.6}", s.alpha)?;
        match (s.bound, s.min_gap) {
            (Some(b), Some(g)) => writeln!(
                out,
                "  bound {b:.6}  min gap {}  argmin {}",
                fixed6(g),
                s.argmin.join(" ")
            )?,
            _ => writeln!(out, "  no eligible graphs")?,
        }
    }
    writeln!(
        out,
        "equality set ({}): {}",
        r.equality_set.len(),
        r.equality_set.join(" ")
    )?;
    for v in &r.violations {
        writeln!(
            out,
            "VIOLATION {} alpha {:.6}: gap {:.6} < bound {:.6}",
            v.graph6, v.alpha, v.gap, v.bound
        )?;
    }
    for m in &r.equality_mismatches {
        writeln!(out, "MISMATCH {} ({}): {}", m.graph6, m.class, m.reason)?;
    }
    if let Some(note) = &r.note {
        writeln!(out, "note: {note}")?;
    }
    writeln!(out, "{}", if r.passed() { "PASS" } else { "FAIL" })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if jobs == 0 {
            eprintln!("error: --jobs must be at least 1");
            return ExitCode::from(2);
        }
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
        {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let result = match &cli.command {
        Command::Analyze(a) => analyze::run(a),
        Command::Generate(a) => generate::run(a),
        Command::Sweep(a) => run_sweep(a),
        Command::VerifyTheorem(a) => theorem::run(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check) => ExitCode::from(1),
        Err(Failure::Usage(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
