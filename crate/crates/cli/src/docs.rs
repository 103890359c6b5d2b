//! JSON documents emitted by each subcommand. Field order is the
//! declaration order, and every document deserializes back into its type.

use ramsey_core::arrow::{ArrowVerdict, Arrowing, Color, EdgeColoring, MinimalityReport};
use ramsey_core::classify::{Classification, Orientation, TrailEntry, Verdict};
use ramsey_core::density::{DensityReport, DensityValue, Rational};
use ramsey_core::enumerate::CatalogDocument;
use ramsey_core::graph6::emit_graph6;
use ramsey_core::random::{format_sig9, Experiment};
use serde::{Deserialize, Serialize};

pub const ARROW_CITATION: &str =
    "exhaustive search over red/blue colourings of E(F), pruned on monochromatic copies";
pub const MINIMAL_CITATION: &str =
    "F is Ramsey-minimal iff F arrows (G, H) and F - e does not for every edge e";
pub const RHO_CITATION: &str = "rho(X) = max e(J)/v(J) over subgraphs J of X";
pub const M2_CITATION: &str =
    "Rodl-Rucinski 1995: m2(X) = max (e(J)-1)/(v(J)-2) over J with v(J) >= 3";
pub const M2_PAIR_CITATION: &str =
    "Kohayakawa-Kreuter 1997: m2(G, H) = max e(J)/(v(J) - 2 + 1/m2(H)) over J in G";
pub const THRESHOLD_CITATION: &str = "coupled G(n, p) sampling along p = c * n^(-1/m2(G, H))";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EdgeColor {
    Red,
    Blue,
    Uncolored,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColoredEdge {
    pub edge: [usize; 2],
    pub color: EdgeColor,
}

pub fn colored_edges(c: &EdgeColoring) -> Vec<ColoredEdge> {
    c.assignments()
        .map(|((u, v), col)| ColoredEdge {
            edge: [u, v],
            color: match col {
                Some(Color::Red) => EdgeColor::Red,
                Some(Color::Blue) => EdgeColor::Blue,
                None => EdgeColor::Uncolored,
            },
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ArrowStatus {
    Arrows,
    NotArrows,
    Unknown,
}

fn status(a: &Arrowing) -> ArrowStatus {
    match a {
        Arrowing::Arrows => ArrowStatus::Arrows,
        Arrowing::NotArrows(_) => ArrowStatus::NotArrows,
        Arrowing::Unknown => ArrowStatus::Unknown,
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ArrowDocument {
    pub f: String,
    pub g: String,
    pub h: String,
    pub verdict: ArrowStatus,
    /// `null` when the budget ran out.
    pub arrows: Option<bool>,
    /// A good colouring of `F` when it does not arrow.
    pub witness: Option<Vec<ColoredEdge>>,
    pub nodes: u64,
    pub elapsed_ms: f64,
    pub citations: Vec<String>,
}

impl ArrowDocument {
    pub fn new(f: &str, g: &str, h: &str, v: &ArrowVerdict) -> Self {
        ArrowDocument {
            f: f.into(),
            g: g.into(),
            h: h.into(),
            verdict: status(&v.outcome),
            arrows: v.arrows(),
            witness: v.witness().map(colored_edges),
            nodes: v.stats.nodes,
            elapsed_ms: v.stats.elapsed.as_secs_f64() * 1e3,
            citations: vec![ARROW_CITATION.into()],
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EdgeReport {
    pub edge: [usize; 2],
    /// Verdict for `F - e`.
    pub verdict: ArrowStatus,
    pub witness: Option<Vec<ColoredEdge>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MinimalDocument {
    pub f: String,
    pub g: String,
    pub h: String,
    /// `F` without isolated vertices, in graph6.
    pub graph6: String,
    pub is_ramsey: Option<bool>,
    pub is_minimal: Option<bool>,
    pub per_edge: Vec<EdgeReport>,
    pub nodes: u64,
    pub elapsed_ms: f64,
    pub citations: Vec<String>,
}

impl MinimalDocument {
    pub fn new(f: &str, g: &str, h: &str, r: &MinimalityReport) -> Self {
        MinimalDocument {
            f: f.into(),
            g: g.into(),
            h: h.into(),
            graph6: emit_graph6(&r.graph),
            is_ramsey: r.is_ramsey,
            is_minimal: r.is_minimal(),
            per_edge: r
                .per_edge
                .iter()
                .map(|w| EdgeReport {
                    edge: [w.edge.0, w.edge.1],
                    verdict: status(&w.outcome),
                    witness: w.witness().map(colored_edges),
                })
                .collect(),
            nodes: r.stats.nodes,
            elapsed_ms: r.stats.elapsed.as_secs_f64() * 1e3,
            citations: vec![MINIMAL_CITATION.into(), ARROW_CITATION.into()],
        }
    }
}

/// A density parameter: exact value as `p/q` text plus the attaining
/// vertex set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Value {
    pub value: String,
    pub witness: Vec<usize>,
}

fn value(d: &DensityValue) -> Value {
    Value {
        value: ratio(&d.value),
        witness: d.witness.clone(),
    }
}

fn ratio(r: &Rational) -> String {
    r.to_string()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairValue {
    pub partner: String,
    pub value: String,
    /// Vertex set of the attaining subgraph, in the partner when `swapped`.
    pub witness: Vec<usize>,
    pub swapped: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DensityDocument {
    pub graph: String,
    pub rho: Value,
    /// `null` for forests.
    pub m2: Option<Value>,
    pub m2_pair: Option<PairValue>,
    pub citations: Vec<String>,
}

impl DensityDocument {
    pub fn new(x: &str, pair: Option<&str>, r: &DensityReport) -> Self {
        let mut citations = vec![RHO_CITATION.to_string()];
        if r.m2.is_some() {
            citations.push(M2_CITATION.into());
        }
        if r.m2_pair.is_some() {
            citations.push(M2_PAIR_CITATION.into());
        }
        DensityDocument {
            graph: x.into(),
            rho: value(&r.rho),
            m2: r.m2.as_ref().map(value),
            m2_pair: r.m2_pair.as_ref().zip(pair).map(|(p, partner)| PairValue {
                partner: partner.into(),
                value: ratio(&p.value),
                witness: p.witness.clone(),
                swapped: p.swapped,
            }),
            citations,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassifyDocument {
    pub g: String,
    pub h: String,
    pub verdict: Verdict,
    pub rule: String,
    pub trail: Vec<TrailEntry>,
    pub condition: Option<String>,
    pub orientation: Option<Orientation>,
    pub citations: Vec<String>,
}

impl ClassifyDocument {
    pub fn new(g: &str, h: &str, c: &Classification) -> Self {
        ClassifyDocument {
            g: g.into(),
            h: h.into(),
            verdict: c.verdict,
            rule: c.rule().to_string(),
            trail: c.trail.clone(),
            condition: c.condition.clone(),
            orientation: c.orientation,
            citations: c.citations(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerateDocument {
    #[serde(flatten)]
    pub catalog: CatalogDocument,
    pub candidates_checked: usize,
    pub citations: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ThresholdCell {
    pub n: usize,
    pub c: String,
    pub p: String,
    pub samples: usize,
    pub hits: usize,
    pub misses: usize,
    pub unknowns: usize,
    pub estimate: Option<f64>,
    pub untrusted: bool,
    pub elapsed_ms: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ThresholdDocument {
    pub g: String,
    pub h: String,
    pub seed: u64,
    pub m2_pair: String,
    pub cells: Vec<ThresholdCell>,
    pub monotone: bool,
    pub citations: Vec<String>,
}

impl ThresholdDocument {
    pub fn new(g: &str, h: &str, e: &Experiment) -> Self {
        ThresholdDocument {
            g: g.into(),
            h: h.into(),
            seed: e.seed,
            m2_pair: ratio(&e.m2_pair),
            cells: e
                .cells
                .iter()
                .map(|c| ThresholdCell {
                    n: c.n,
                    c: ratio(&c.c),
                    p: format_sig9(c.p),
                    samples: c.samples,
                    hits: c.hits,
                    misses: c.misses,
                    unknowns: c.unknowns,
                    estimate: c.estimate(),
                    untrusted: c.untrusted(),
                    elapsed_ms: c.elapsed.as_secs_f64() * 1e3,
                })
                .collect(),
            monotone: e.coupled.iter().all(|s| s.is_monotone()),
            citations: vec![THRESHOLD_CITATION.into(), M2_PAIR_CITATION.into()],
        }
    }
}
