use crate::{CmdResult, Format, GenerateArgs};
use anyhow::{anyhow, bail, Context};
use clap::ValueEnum;
use dalpha::graph::{cocktail_party, parse_graph6, to_graph6, FamilyKind, FamilySpec, Graph};
use std::io::{self, Write};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Extremal,
    CompleteMultipartite,
    Path,
    Cycle,
    Complete,
    Star,
    CocktailParty,
    Dvdr,
}

fn build(args: &GenerateArgs) -> anyhow::Result<Vec<Graph>> {
    let need_n = || {
        args.n
            .ok_or_else(|| anyhow!("--n is required for this family"))
    };
    let spec = match args.family {
        Family::Extremal => FamilySpec::new(FamilyKind::Extremal, need_n()?),
        Family::Path => FamilySpec::new(FamilyKind::Path, need_n()?),
        Family::Cycle => FamilySpec::new(FamilyKind::Cycle, need_n()?),
        Family::Complete => FamilySpec::new(FamilyKind::Complete, need_n()?),
        Family::Star => FamilySpec::new(FamilyKind::Star, need_n()?),
        Family::CocktailParty => return Ok(vec![cocktail_party(need_n()?)?]),
        Family::CompleteMultipartite => {
            if args.parts.is_empty() {
                bail!("--parts is required for complete-multipartite");
            }
            let n = args.n.unwrap_or_else(|| args.parts.iter().sum());
            FamilySpec::new(FamilyKind::CompleteMultipartite(args.parts.clone()), n)
        }
        Family::Dvdr => {
            let s = args
                .graph6
                .as_deref()
                .ok_or_else(|| anyhow!("--graph6 (the regular base graph) is required for dvdr"))?;
            let base = parse_graph6(s).with_context(|| format!("cannot parse {s:?}"))?;
            let n = args.n.unwrap_or(base.order() + 1);
            FamilySpec::new(FamilyKind::DvdrFromRegular(base), n)
        }
    };
    Ok(spec.build()?)
}

pub fn run(args: &GenerateArgs) -> CmdResult {
    let graphs = build(args)?;
    let lines = graphs
        .iter()
        .map(to_graph6)
        .collect::<Result<Vec<_>, _>>()?;
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match args.format {
        Format::Text => {
            for l in &lines {
                writeln!(out, "{l}")?;
            }
        }
        Format::Csv => {
            writeln!(out, "graph6")?;
            for l in &lines {
                writeln!(out, "{l}")?;
            }
        }
        Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&lines)?)?,
    }
    Ok(())
}
