//! Coupled Monte Carlo estimates of `P(G(n, p) → (G, H))` along
//! `p = c · n^{-1/m₂(G,H)}`.
//!
//! Every sample `(n, i)` draws one uniform per vertex pair from its own
//! ChaCha stream, and the graph for each `c` keeps the pairs whose uniform
//! falls below `p(c)`. Graphs for larger `c` are therefore supergraphs of
//! those for smaller `c` on the same sample, and since arrowing is monotone
//! the per-sample indicators are non-decreasing in `c`.

use std::io::Write;
use std::time::{Duration, Instant};

use num_traits::{ToPrimitive, Zero};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::arrow::{Arrowing, SearchOptions, Targets, DEFAULT_NODE_BUDGET};
use crate::density::{edge_probability, m2_pair, Rational};
use crate::error::{Error, Result};
use crate::graph::{bit, Graph};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExperimentLimits {
    pub max_n: usize,
    pub max_samples: usize,
}

impl Default for ExperimentLimits {
    fn default() -> Self {
        ExperimentLimits {
            max_n: 24,
            max_samples: 1000,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentConfig {
    pub g: Graph,
    pub h: Graph,
    pub ns: Vec<usize>,
    pub cs: Vec<Rational>,
    pub samples: usize,
    pub seed: u64,
    pub node_budget: u64,
    pub limits: ExperimentLimits,
}

impl ExperimentConfig {
    pub fn new(
        g: Graph,
        h: Graph,
        ns: Vec<usize>,
        cs: Vec<Rational>,
        samples: usize,
        seed: u64,
    ) -> Self {
        ExperimentConfig {
            g,
            h,
            ns,
            cs,
            samples,
            seed,
            node_budget: DEFAULT_NODE_BUDGET,
            limits: ExperimentLimits::default(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::Config(m));
        if !self.g.has_cycle() || !self.h.has_cycle() {
            return Err(Error::Acyclic);
        }
        let min_n = self.g.order().max(self.h.order()).max(3);
        if self.ns.is_empty() || self.cs.is_empty() {
            return bad("at least one n and one c are required".into());
        }
        if let Some(&n) = self.ns.iter().find(|&&n| n < min_n) {
            return bad(format!("n = {n} is below the target order {min_n}"));
        }
        if let Some(&n) = self.ns.iter().find(|&&n| n > self.limits.max_n) {
            return bad(format!("n = {n} exceeds the cap {}", self.limits.max_n));
        }
        if let Some(c) = self.cs.iter().find(|c| **c <= Rational::zero()) {
            return bad(format!("c = {c} must be positive"));
        }
        if self.samples == 0 || self.samples > self.limits.max_samples {
            return bad(format!(
                "samples = {} must lie in 1..={}",
                self.samples, self.limits.max_samples
            ));
        }
        if self.node_budget == 0 {
            return bad("node budget must be positive".into());
        }
        Ok(())
    }
}

/// Random stream for one sample, independent of every other sample.
pub fn sample_stream(seed: u64, n: usize, sample: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(((n as u64) << 32) | sample as u64);
    rng
}

/// One uniform in `[0, 1)` per vertex pair `(u, v)`, `u < v`, in
/// lexicographic order.
pub fn uniform_table(n: usize, rng: &mut impl Rng) -> Vec<f64> {
    (0..n * n.saturating_sub(1) / 2)
        .map(|_| rng.random::<f64>())
        .collect()
}

/// Keeps each pair whose uniform lies below `p`.
pub fn threshold_graph(n: usize, table: &[f64], p: f64) -> Graph {
    let mut adj = vec![0u64; n];
    let mut k = 0;
    for u in 0..n {
        for v in u + 1..n {
            if table[k] < p {
                adj[u] |= bit(v);
                adj[v] |= bit(u);
            }
            k += 1;
        }
    }
    Graph::from_adjacency(adj)
}

/// `G(n, p)`: each pair present independently with probability `p`.
pub fn sample_gnp(n: usize, p: f64, rng: &mut impl Rng) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::Precondition(format!("p = {p} is not a probability")));
    }
    crate::graph::check_order(n, crate::graph::MAX_ORDER)?;
    Ok(threshold_graph(n, &uniform_table(n, rng), p))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SampleOutcome {
    Arrows,
    NotArrows,
    Unknown,
}

/// Outcomes of one coupled sample, one per `c` in ascending order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoupledSample {
    pub n: usize,
    pub index: usize,
    pub outcomes: Vec<SampleOutcome>,
}

impl CoupledSample {
    /// No decided `Arrows` is followed by a decided `NotArrows` as `c` grows.
    pub fn is_monotone(&self) -> bool {
        let decided: Vec<_> = self
            .outcomes
            .iter()
            .filter(|o| **o != SampleOutcome::Unknown)
            .collect();
        decided
            .windows(2)
            .all(|w| !(*w[0] == SampleOutcome::Arrows && *w[1] == SampleOutcome::NotArrows))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CellResult {
    pub n: usize,
    pub c: Rational,
    pub p: f64,
    pub samples: usize,
    pub hits: usize,
    pub misses: usize,
    pub unknowns: usize,
    pub elapsed: Duration,
}

impl CellResult {
    /// `hits / (samples − unknowns)`, `None` when nothing was decided.
    pub fn estimate(&self) -> Option<f64> {
        let decided = self.samples - self.unknowns;
        (decided > 0).then(|| self.hits as f64 / decided as f64)
    }

    /// More than 10% of the samples ran out of budget.
    pub fn untrusted(&self) -> bool {
        self.unknowns * 10 > self.samples
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Experiment {
    pub seed: u64,
    /// Threshold exponent denominator `m₂(G, H)`.
    pub m2_pair: Rational,
    /// Sorted by `(n, c)`.
    pub cells: Vec<CellResult>,
    pub coupled: Vec<CoupledSample>,
}

pub fn run_experiment(config: &ExperimentConfig) -> Result<Experiment> {
    config.validate()?;
    let d = m2_pair(&config.g, &config.h)?.value;
    let targets = Targets::new(&config.g, &config.h)?;
    let opts = SearchOptions::with_budget(config.node_budget);

    let mut ns = config.ns.clone();
    ns.sort_unstable();
    ns.dedup();
    let mut cs = config.cs.clone();
    cs.sort();
    cs.dedup();

    let jobs: Vec<(usize, usize)> = ns
        .iter()
        .flat_map(|&n| (0..config.samples).map(move |i| (n, i)))
        .collect();
    let results: Vec<(CoupledSample, Vec<Duration>)> = jobs
        .par_iter()
        .map(|&(n, index)| {
            let table = uniform_table(n, &mut sample_stream(config.seed, n, index));
            let mut outcomes = Vec::with_capacity(cs.len());
            let mut times = Vec::with_capacity(cs.len());
            let mut previous: Option<(usize, SampleOutcome)> = None;
            for &c in &cs {
                let start = Instant::now();
                let f = threshold_graph(n, &table, edge_probability(n, c, d));
                // Same graph as the previous c: reuse its verdict.
                let outcome = match previous {
                    Some((edges, o)) if edges == f.edge_count() => o,
                    _ => match targets.arrows(&f, &opts).outcome {
                        Arrowing::Arrows => SampleOutcome::Arrows,
                        Arrowing::NotArrows(_) => SampleOutcome::NotArrows,
                        Arrowing::Unknown => SampleOutcome::Unknown,
                    },
                };
                previous = Some((f.edge_count(), outcome));
                outcomes.push(outcome);
                times.push(start.elapsed());
            }
            (CoupledSample { n, index, outcomes }, times)
        })
        .collect();

    let mut cells = Vec::with_capacity(ns.len() * cs.len());
    for &n in &ns {
        for (j, &c) in cs.iter().enumerate() {
            let mut cell = CellResult {
                n,
                c,
                p: edge_probability(n, c, d),
                samples: config.samples,
                hits: 0,
                misses: 0,
                unknowns: 0,
                elapsed: Duration::ZERO,
            };
            for (s, times) in results.iter().filter(|(s, _)| s.n == n) {
                match s.outcomes[j] {
                    SampleOutcome::Arrows => cell.hits += 1,
                    SampleOutcome::NotArrows => cell.misses += 1,
                    SampleOutcome::Unknown => cell.unknowns += 1,
                }
                cell.elapsed += times[j];
            }
            cells.push(cell);
        }
    }
    Ok(Experiment {
        seed: config.seed,
        m2_pair: d,
        cells,
        coupled: results.into_iter().map(|(s, _)| s).collect(),
    })
}

/// Fixed-point rendering with nine significant digits.
pub fn format_sig9(x: f64) -> String {
    if !x.is_finite() {
        return "nan".into();
    }
    if x == 0.0 {
        return "0".into();
    }
    let magnitude = x.abs().log10().floor() as i32;
    let decimals = (8 - magnitude).max(0) as usize;
    let text = format!("{x:.decimals$}");
    // Rounding can carry into a new leading digit (9.999999999 -> 10.0000000).
    let digits = text
        .bytes()
        .filter(u8::is_ascii_digit)
        .skip_while(|&b| b == b'0')
        .count();
    if digits > 9 && decimals > 0 {
        let decimals = decimals - 1;
        format!("{x:.decimals$}")
    } else {
        text
    }
}

pub const CSV_HEADER: [&str; 9] = [
    "n", "c", "p", "samples", "hits", "misses", "unknowns", "estimate", "seed",
];

/// Writes one header row and one row per cell.
pub fn write_csv(experiment: &Experiment, out: impl Write) -> Result<()> {
    let io = |e: csv::Error| Error::Config(format!("csv output failed: {e}"));
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CSV_HEADER).map_err(io)?;
    for cell in &experiment.cells {
        w.write_record([
            cell.n.to_string(),
            format_sig9(cell.c.to_f64().unwrap_or(f64::NAN)),
            format_sig9(cell.p),
            cell.samples.to_string(),
            cell.hits.to_string(),
            cell.misses.to_string(),
            cell.unknowns.to_string(),
            cell.estimate()
                .map_or_else(|| "nan".to_string(), format_sig9),
            experiment.seed.to_string(),
        ])
        .map_err(io)?;
    }
    w.flush()
        .map_err(|e| Error::Config(format!("csv output failed: {e}")))?;
    Ok(())
}

pub fn to_csv_string(experiment: &Experiment) -> Result<String> {
    let mut buf = Vec::new();
    write_csv(experiment, &mut buf)?;
    Ok(String::from_utf8(buf).expect("csv output is UTF-8"))
}
