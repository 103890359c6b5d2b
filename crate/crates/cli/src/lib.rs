//! Command-line front end for `ramsey-core`.
//!
//! Exit codes: 0 when a verdict was produced (including `unknown`), 1 for
//! usage errors, 2 for internal failures.

pub mod docs;
pub mod input;

use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use ramsey_core::arrow::{SearchOptions, Targets, DEFAULT_NODE_BUDGET};
use ramsey_core::classify::classify_profiles;
use ramsey_core::density::{density_report, parse_rational, Rational};
use ramsey_core::enumerate::{enumerate_ramsey_minimal, SearchBounds};
use ramsey_core::random::{run_experiment, to_csv_string, ExperimentConfig};
use serde::Serialize;

use docs::{
    ArrowDocument, ClassifyDocument, DensityDocument, EnumerateDocument, MinimalDocument,
    ThresholdDocument, ARROW_CITATION, MINIMAL_CITATION,
};
use input::GraphInput;

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Internal(String),
}

impl CliError {
    pub fn usage(msg: impl Into<String>) -> Self {
        CliError::Usage(msg.into())
    }

    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Internal(_) => 2,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "error: {m}"),
            CliError::Internal(m) => write!(f, "internal error: {m}"),
        }
    }
}

impl From<ramsey_core::Error> for CliError {
    fn from(e: ramsey_core::Error) -> Self {
        match e {
            ramsey_core::Error::SelfConsistency(_) => CliError::Internal(e.to_string()),
            other => CliError::Usage(other.to_string()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Parser)]
#[command(
    name = "ramsey",
    version,
    about = "Arrowing, Ramsey-minimal graphs, densities and Ramsey-finiteness"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub global: GlobalOpts,
}

#[derive(Debug, Args)]
pub struct GlobalOpts {
    /// Output format (default: json, or csv for `threshold`).
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Write output to this file instead of stdout.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,
    /// Worker threads for parallel stages (default: all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Search-node budget per arrowing call.
    #[arg(long, global = true, env = "RAMSEY_NODE_BUDGET", default_value_t = DEFAULT_NODE_BUDGET)]
    pub budget: u64,
}

/// Graph arguments accept spec syntax (`K6`, `S5+S2`, `122K2`), graph6
/// (optionally prefixed `g6:`), or `@file`.
#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide F -> (G, H).
    Arrow { f: String, g: String, h: String },
    /// Decide whether F is Ramsey-minimal for (G, H).
    Minimal { f: String, g: String, h: String },
    /// rho, m2 and optionally m2(X, Y).
    Density {
        x: String,
        #[arg(long)]
        pair: Option<String>,
    },
    /// Ramsey-finite / Ramsey-infinite verdict for (G, H).
    Classify { g: String, h: String },
    /// All Ramsey-minimal graphs for (G, H) within the bounds.
    Enumerate {
        g: String,
        h: String,
        #[arg(long = "max-v")]
        max_v: usize,
        #[arg(long = "max-e")]
        max_e: usize,
    },
    /// Estimate P(G(n, p) -> (G, H)) at p = c * n^(-1/m2(G, H)).
    Threshold {
        g: String,
        h: String,
        #[arg(long, value_delimiter = ',', required = true)]
        n: Vec<usize>,
        #[arg(long, value_delimiter = ',', required = true, value_parser = parse_c)]
        c: Vec<Rational>,
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn parse_c(s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

/// Runs the command and returns the text to emit.
pub fn run(cli: &Cli) -> Result<String, CliError> {
    let g = &cli.global;
    if g.budget == 0 {
        return Err(CliError::usage("--budget must be positive"));
    }
    let opts = SearchOptions::with_budget(g.budget);
    match &cli.command {
        Command::Arrow { f, g: gt, h } => {
            let fg = input::graph(f)?;
            let targets = Targets::new(&input::graph(gt)?, &input::graph(h)?)?;
            let verdict = targets.arrows(&fg, &opts);
            let doc = ArrowDocument::new(f, gt, h, &verdict);
            render(g.format, &doc, || {
                let mut s = format!("{f} -> ({gt}, {h}): {:?}\n", doc.verdict);
                if let Some(w) = &doc.witness {
                    for e in w {
                        let _ = writeln!(s, "  {}-{} {:?}", e.edge[0], e.edge[1], e.color);
                    }
                }
                let _ = writeln!(s, "nodes: {}\n{ARROW_CITATION}", doc.nodes);
                s
            })
        }
        Command::Minimal { f, g: gt, h } => {
            let fg = input::graph(f)?;
            let targets = Targets::new(&input::graph(gt)?, &input::graph(h)?)?;
            let report = targets.minimality(&fg, &opts);
            let doc = MinimalDocument::new(f, gt, h, &report);
            render(g.format, &doc, || {
                let mut s = format!(
                    "{f} for ({gt}, {h}): ramsey {}, minimal {}\n",
                    tri(doc.is_ramsey),
                    tri(doc.is_minimal)
                );
                for e in &doc.per_edge {
                    let _ = writeln!(s, "  F - {}{}: {:?}", e.edge[0], e.edge[1], e.verdict);
                }
                let _ = writeln!(s, "{MINIMAL_CITATION}");
                s
            })
        }
        Command::Density { x, pair } => {
            let xg = input::graph(x)?;
            let yg = pair.as_deref().map(input::graph).transpose()?;
            let report = density_report(&xg, yg.as_ref())?;
            let doc = DensityDocument::new(x, pair.as_deref(), &report);
            render(g.format, &doc, || {
                let mut s = format!("{x}\n  rho = {} on {:?}\n", doc.rho.value, doc.rho.witness);
                match &doc.m2 {
                    Some(m) => {
                        let _ = writeln!(s, "  m2 = {} on {:?}", m.value, m.witness);
                    }
                    None => s.push_str("  m2 undefined (forest)\n"),
                }
                if let Some(p) = &doc.m2_pair {
                    let _ = writeln!(s, "  m2({x}, {}) = {}", p.partner, p.value);
                }
                s
            })
        }
        Command::Classify { g: gt, h } => {
            let pg = GraphInput::parse(gt)?.profile()?;
            let ph = GraphInput::parse(h)?.profile()?;
            let c = classify_profiles(&pg, &ph)?;
            let doc = ClassifyDocument::new(gt, h, &c);
            render(g.format, &doc, || {
                let mut s = format!("({gt}, {h}): {} by {}\n", doc.verdict, doc.rule);
                for t in &doc.trail {
                    let _ = writeln!(s, "  {}: {}\n    {}", t.rule, t.reason, t.citation);
                }
                if let Some(c) = &doc.condition {
                    let _ = writeln!(s, "  settled by: {c}");
                }
                s
            })
        }
        Command::Enumerate {
            g: gt,
            h,
            max_v,
            max_e,
        } => {
            let mut bounds = SearchBounds::new(*max_v, *max_e);
            bounds.node_budget = g.budget;
            let cat = enumerate_ramsey_minimal(&input::graph(gt)?, &input::graph(h)?, &bounds)?;
            let doc = EnumerateDocument {
                catalog: cat.document(),
                candidates_checked: cat.candidates_checked,
                citations: vec![MINIMAL_CITATION.into(), ARROW_CITATION.into()],
            };
            render(g.format, &doc, || {
                let mut s = format!(
                    "Ramsey-minimal for ({gt}, {h}) within {max_v} vertices, {max_e} edges: {} ({:?})\n",
                    doc.catalog.members.len(),
                    doc.catalog.completeness
                );
                for m in &doc.catalog.members {
                    let _ = writeln!(s, "  {}  v={} e={}", m.graph6, m.vertices, m.edges);
                }
                for u in &doc.catalog.undecided {
                    let _ = writeln!(s, "  undecided: {u}");
                }
                s
            })
        }
        Command::Threshold {
            g: gt,
            h,
            n,
            c,
            samples,
            seed,
        } => {
            let mut config = ExperimentConfig::new(
                input::graph(gt)?,
                input::graph(h)?,
                n.clone(),
                c.clone(),
                *samples,
                *seed,
            );
            config.node_budget = g.budget;
            let exp = run_experiment(&config)?;
            match g.format.unwrap_or(Format::Csv) {
                Format::Csv => Ok(to_csv_string(&exp)?),
                Format::Json => json(&ThresholdDocument::new(gt, h, &exp)),
                Format::Text => {
                    let doc = ThresholdDocument::new(gt, h, &exp);
                    let mut s = format!("({gt}, {h}), m2 = {}, seed {}\n", doc.m2_pair, doc.seed);
                    for c in &doc.cells {
                        let est = c.estimate.map_or("nan".to_string(), |e| format!("{e:.3}"));
                        let flag = if c.untrusted {
                            "  (budget-limited)"
                        } else {
                            ""
                        };
                        let _ = writeln!(
                            s,
                            "  n={:<3} c={:<6} p={} estimate={est} ({}/{}){flag}",
                            c.n, c.c, c.p, c.hits, c.samples
                        );
                    }
                    Ok(s)
                }
            }
        }
    }
}

fn tri(b: Option<bool>) -> &'static str {
    match b {
        Some(true) => "yes",
        Some(false) => "no",
        None => "unknown",
    }
}

fn json<T: Serialize>(doc: &T) -> Result<String, CliError> {
    let mut s = serde_json::to_string_pretty(doc).map_err(|e| CliError::Internal(e.to_string()))?;
    s.push('\n');
    Ok(s)
}

fn render<T: Serialize>(
    format: Option<Format>,
    doc: &T,
    text: impl FnOnce() -> String,
) -> Result<String, CliError> {
    match format.unwrap_or(Format::Json) {
        Format::Json => json(doc),
        Format::Text => Ok(text()),
        Format::Csv => Err(CliError::usage(
            "csv output is only available for `threshold`",
        )),
    }
}

/// Applies global options, runs, and writes the result.
pub fn execute(cli: &Cli) -> Result<(), CliError> {
    if let Some(t) = cli.global.threads {
        if t == 0 {
            return Err(CliError::usage("--threads must be positive"));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global()
            .map_err(|e| CliError::Internal(e.to_string()))?;
    }
    let out = run(cli)?;
    match &cli.global.output {
        Some(path) => fs::write(path, out)
            .map_err(|e| CliError::Internal(format!("cannot write `{}`: {e}", path.display()))),
        None => {
            use std::io::Write;
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(out.as_bytes())
                .and_then(|_| stdout.flush())
                .map_err(|e| CliError::Internal(format!("cannot write output: {e}")))
        }
    }
}
