//! Deciding `F → (G, H)`: does every red/blue colouring of `E(F)` contain a
//! red `G` or a blue `H`?
//!
//! The decision is a depth-first search for a *good* colouring (no red `G`,
//! no blue `H`). Edges are coloured in a fixed order, red first; a branch is
//! cut as soon as the newly coloured edge completes a monochromatic copy,
//! which only needs an embedding search anchored at that edge. Exhausting the
//! tree proves arrowing; hitting the node budget yields [`Arrowing::Unknown`].

use std::time::{Duration, Instant};

use crate::canon::are_isomorphic;
use crate::embed::{contains_copy, Pattern};
use crate::error::{Error, Result};
use crate::graph::{bit, normalize, Edge, Graph};

pub const DEFAULT_NODE_BUDGET: u64 = 100_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Color {
    Red,
    Blue,
}

impl Color {
    pub fn flip(self) -> Color {
        match self {
            Color::Red => Color::Blue,
            Color::Blue => Color::Red,
        }
    }
}

/// A (possibly partial) red/blue assignment on the edges of a host graph.
/// Slot `i` belongs to `host.edges()[i]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeColoring {
    host: Graph,
    edges: Vec<Edge>,
    colors: Vec<Option<Color>>,
}

impl EdgeColoring {
    pub fn uncolored(host: &Graph) -> Self {
        let edges = host.edges();
        EdgeColoring {
            host: host.clone(),
            colors: vec![None; edges.len()],
            edges,
        }
    }

    /// Builds a total colouring from a colour per edge, in `host.edges()` order.
    pub fn from_colors(host: &Graph, colors: &[Color]) -> Result<Self> {
        if colors.len() != host.edge_count() {
            return Err(Error::Precondition(format!(
                "{} colours supplied for {} edges",
                colors.len(),
                host.edge_count()
            )));
        }
        Ok(EdgeColoring {
            host: host.clone(),
            edges: host.edges(),
            colors: colors.iter().copied().map(Some).collect(),
        })
    }

    pub fn host(&self) -> &Graph {
        &self.host
    }

    fn slot(&self, e: Edge) -> Option<usize> {
        self.edges.binary_search(&normalize(e)).ok()
    }

    pub fn color(&self, e: Edge) -> Option<Color> {
        self.slot(e).and_then(|i| self.colors[i])
    }

    pub fn set(&mut self, e: Edge, c: Option<Color>) -> Result<()> {
        let i = self.slot(e).ok_or(Error::MissingEdge(normalize(e)))?;
        self.colors[i] = c;
        Ok(())
    }

    pub fn is_total(&self) -> bool {
        self.colors.iter().all(Option::is_some)
    }

    /// `(edge, colour)` pairs in edge order.
    pub fn assignments(&self) -> impl Iterator<Item = (Edge, Option<Color>)> + '_ {
        self.edges.iter().copied().zip(self.colors.iter().copied())
    }

    /// The spanning subgraph formed by edges of colour `c`.
    pub fn class(&self, c: Color) -> Graph {
        let mut adj = vec![0u64; self.host.order()];
        for (&(u, v), &col) in self.edges.iter().zip(&self.colors) {
            if col == Some(c) {
                adj[u] |= bit(v);
                adj[v] |= bit(u);
            }
        }
        Graph::from_adjacency(adj)
    }

    /// Total, no red copy of `g` and no blue copy of `h`.
    pub fn is_good_for(&self, g: &Graph, h: &Graph) -> bool {
        self.is_total()
            && contains_copy(&self.class(Color::Red), g).is_none()
            && contains_copy(&self.class(Color::Blue), h).is_none()
    }

    /// Swaps red and blue.
    pub fn swapped(&self) -> Self {
        EdgeColoring {
            host: self.host.clone(),
            edges: self.edges.clone(),
            colors: self.colors.iter().map(|c| c.map(Color::flip)).collect(),
        }
    }

    /// Compact `R`/`B`/`-` string in edge order.
    pub fn code(&self) -> String {
        self.colors
            .iter()
            .map(|c| match c {
                Some(Color::Red) => 'R',
                Some(Color::Blue) => 'B',
                None => '-',
            })
            .collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SymmetryMode {
    /// Fix the first edge red when `G ≅ H`.
    Auto,
    Off,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchOptions {
    pub node_budget: u64,
    pub symmetry: SymmetryMode,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            node_budget: DEFAULT_NODE_BUDGET,
            symmetry: SymmetryMode::Auto,
        }
    }
}

impl SearchOptions {
    pub fn with_budget(node_budget: u64) -> Self {
        SearchOptions {
            node_budget,
            ..Self::default()
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SearchStats {
    pub nodes: u64,
    pub elapsed: Duration,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome {
    Found(EdgeColoring),
    /// The whole tree was pruned: no good colouring exists.
    Exhausted,
    BudgetHit,
}

/// Targets prepared once and reused across many hosts.
#[derive(Debug, Clone)]
pub struct Targets {
    red: Pattern,
    blue: Pattern,
    same: bool,
}

impl Targets {
    pub fn new(g: &Graph, h: &Graph) -> Result<Self> {
        for (name, t) in [("G", g), ("H", h)] {
            if t.edge_count() == 0 {
                return Err(Error::Precondition(format!("target {name} has no edges")));
            }
        }
        let g = g.strip_isolated();
        let h = h.strip_isolated();
        Ok(Targets {
            same: are_isomorphic(&g, &h),
            red: Pattern::new(&g),
            blue: Pattern::new(&h),
        })
    }

    pub fn red(&self) -> &Graph {
        self.red.graph()
    }

    pub fn blue(&self) -> &Graph {
        self.blue.graph()
    }

    pub fn find_good_coloring(
        &self,
        f: &Graph,
        opts: &SearchOptions,
    ) -> (SearchOutcome, SearchStats) {
        let start = Instant::now();
        let host = f.strip_isolated();
        let mut edges = host.edges();
        // Descending endpoint-degree sum; ties keep lexicographic order.
        edges.sort_by_key(|&(u, v)| std::cmp::Reverse(host.degree(u) + host.degree(v)));

        let mut dfs = Dfs {
            targets: self,
            edges: &edges,
            red: vec![0; host.order()],
            blue: vec![0; host.order()],
            colors: Vec::with_capacity(edges.len()),
            nodes: 0,
            budget: opts.node_budget,
        };
        let fix_first = self.same && opts.symmetry == SymmetryMode::Auto;
        let result = dfs.run(fix_first);
        let outcome = match result {
            Step::Found => {
                let mut coloring = EdgeColoring::uncolored(&host);
                for (&e, &c) in edges.iter().zip(&dfs.colors) {
                    coloring.set(e, Some(c)).expect("edge of host");
                }
                SearchOutcome::Found(coloring)
            }
            Step::Exhausted => SearchOutcome::Exhausted,
            Step::Budget => SearchOutcome::BudgetHit,
        };
        let stats = SearchStats {
            nodes: dfs.nodes,
            elapsed: start.elapsed(),
        };
        (outcome, stats)
    }

    pub fn arrows(&self, f: &Graph, opts: &SearchOptions) -> ArrowVerdict {
        let (outcome, stats) = self.find_good_coloring(f, opts);
        let outcome = match outcome {
            SearchOutcome::Found(c) => Arrowing::NotArrows(c),
            SearchOutcome::Exhausted => Arrowing::Arrows,
            SearchOutcome::BudgetHit => Arrowing::Unknown,
        };
        ArrowVerdict { outcome, stats }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Step {
    Found,
    Exhausted,
    Budget,
}

struct Dfs<'a> {
    targets: &'a Targets,
    edges: &'a [Edge],
    red: Vec<u64>,
    blue: Vec<u64>,
    colors: Vec<Color>,
    nodes: u64,
    budget: u64,
}

impl Dfs<'_> {
    fn run(&mut self, fix_first: bool) -> Step {
        if self.edges.is_empty() {
            return Step::Found;
        }
        if fix_first {
            // With G ≅ H a good colouring stays good after swapping colours,
            // so some good colouring (if any) has the first edge red.
            self.try_color(0, Color::Red)
        } else {
            self.branch(0)
        }
    }

    fn branch(&mut self, i: usize) -> Step {
        if i == self.edges.len() {
            return Step::Found;
        }
        match self.try_color(i, Color::Red) {
            Step::Exhausted => self.try_color(i, Color::Blue),
            other => other,
        }
    }

    fn try_color(&mut self, i: usize, c: Color) -> Step {
        if self.nodes >= self.budget {
            return Step::Budget;
        }
        self.nodes += 1;
        let (u, v) = self.edges[i];
        let (class, pattern) = match c {
            Color::Red => (&mut self.red, &self.targets.red),
            Color::Blue => (&mut self.blue, &self.targets.blue),
        };
        class[u] |= bit(v);
        class[v] |= bit(u);
        let step = if pattern.contained_through(class, (u, v)) {
            Step::Exhausted
        } else {
            self.colors.push(c);
            let s = self.branch(i + 1);
            if s != Step::Found {
                self.colors.pop();
            }
            s
        };
        if step != Step::Found {
            let class = match c {
                Color::Red => &mut self.red,
                Color::Blue => &mut self.blue,
            };
            class[u] &= !bit(v);
            class[v] &= !bit(u);
        }
        step
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Arrowing {
    Arrows,
    /// A good colouring of `F` (isolated vertices removed).
    NotArrows(EdgeColoring),
    /// The node budget ran out before the search could decide.
    Unknown,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArrowVerdict {
    pub outcome: Arrowing,
    pub stats: SearchStats,
}

impl ArrowVerdict {
    /// `Some(true)` iff arrowing was proven, `None` when undecided.
    pub fn arrows(&self) -> Option<bool> {
        match self.outcome {
            Arrowing::Arrows => Some(true),
            Arrowing::NotArrows(_) => Some(false),
            Arrowing::Unknown => None,
        }
    }

    pub fn witness(&self) -> Option<&EdgeColoring> {
        match &self.outcome {
            Arrowing::NotArrows(c) => Some(c),
            _ => None,
        }
    }
}

/// Searches for a good colouring of `f` for `(g, h)`.
pub fn find_good_coloring(
    f: &Graph,
    g: &Graph,
    h: &Graph,
    opts: &SearchOptions,
) -> Result<(SearchOutcome, SearchStats)> {
    Ok(Targets::new(g, h)?.find_good_coloring(f, opts))
}

pub fn arrows(f: &Graph, g: &Graph, h: &Graph, opts: &SearchOptions) -> Result<ArrowVerdict> {
    Ok(Targets::new(g, h)?.arrows(f, opts))
}

/// Per-edge outcome for `F − e`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeWitness {
    pub edge: Edge,
    /// `F − e` on the vertex set of `F`; `Arrows` here refutes minimality.
    pub outcome: Arrowing,
}

impl EdgeWitness {
    pub fn witness(&self) -> Option<&EdgeColoring> {
        match &self.outcome {
            Arrowing::NotArrows(c) => Some(c),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinimalityReport {
    /// `F` with isolated vertices removed.
    pub graph: Graph,
    /// `None` when the arrowing search ran out of budget.
    pub is_ramsey: Option<bool>,
    /// One entry per edge of `graph` when `is_ramsey == Some(true)`.
    pub per_edge: Vec<EdgeWitness>,
    pub stats: SearchStats,
}

impl MinimalityReport {
    /// `None` if any sub-verdict is unknown.
    pub fn is_minimal(&self) -> Option<bool> {
        match self.is_ramsey {
            None => None,
            Some(false) => Some(false),
            Some(true) => {
                if self.per_edge.iter().any(|w| w.outcome == Arrowing::Arrows) {
                    Some(false)
                } else if self.per_edge.iter().any(|w| w.outcome == Arrowing::Unknown) {
                    None
                } else {
                    Some(true)
                }
            }
        }
    }
}

impl Targets {
    pub fn minimality(&self, f: &Graph, opts: &SearchOptions) -> MinimalityReport {
        let graph = f.strip_isolated();
        let top = self.arrows(&graph, opts);
        let mut stats = top.stats;
        let is_ramsey = top.arrows();
        let mut per_edge = Vec::new();
        if is_ramsey == Some(true) {
            for e in graph.edges() {
                let reduced = graph.delete_edge(e).expect("edge of graph");
                let verdict = self.arrows(&reduced, opts);
                stats.nodes += verdict.stats.nodes;
                stats.elapsed += verdict.stats.elapsed;
                // Witnesses are reported on F − e with F's vertex labels.
                let outcome = match verdict.outcome {
                    Arrowing::NotArrows(c) => Arrowing::NotArrows(relift(&reduced, &c)),
                    other => other,
                };
                per_edge.push(EdgeWitness { edge: e, outcome });
            }
        }
        MinimalityReport {
            graph,
            is_ramsey,
            per_edge,
            stats,
        }
    }
}

/// Re-expresses a colouring of `host.strip_isolated()` on `host` itself.
fn relift(host: &Graph, coloring: &EdgeColoring) -> EdgeColoring {
    if coloring.host() == host {
        return coloring.clone();
    }
    let keep: Vec<usize> = (0..host.order()).filter(|&v| host.degree(v) > 0).collect();
    let mut out = EdgeColoring::uncolored(host);
    for ((u, v), c) in coloring.assignments() {
        out.set((keep[u], keep[v]), c).expect("edge maps into host");
    }
    out
}

/// Whether `F` is Ramsey-minimal for `(G, H)`, with a good colouring of
/// `F − e` for every edge `e` when it is.
pub fn is_ramsey_minimal(
    f: &Graph,
    g: &Graph,
    h: &Graph,
    opts: &SearchOptions,
) -> Result<MinimalityReport> {
    Ok(Targets::new(g, h)?.minimality(f, opts))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RamseyNumber {
    Found(usize),
    /// No `K_N` with `N ≤ cap` arrows.
    AboveCap,
    /// The search for `K_N` ran out of budget.
    Unknown(usize),
}

/// Smallest `N ≤ cap` with `K_N → (G, H)`.
pub fn ramsey_number_complete(
    g: &Graph,
    h: &Graph,
    cap: usize,
    opts: &SearchOptions,
) -> Result<RamseyNumber> {
    if cap < 2 {
        return Err(Error::Precondition("cap must be at least 2".into()));
    }
    let targets = Targets::new(g, h)?;
    let start = targets.red().order().max(targets.blue().order()).max(2);
    for n in start..=cap {
        match targets.arrows(&Graph::complete(n)?, opts).arrows() {
            Some(true) => return Ok(RamseyNumber::Found(n)),
            Some(false) => {}
            None => return Ok(RamseyNumber::Unknown(n)),
        }
    }
    Ok(RamseyNumber::AboveCap)
}
