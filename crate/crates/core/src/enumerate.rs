//! Isomorph-free graph generation and catalogues of Ramsey-minimal graphs.
//!
//! Graphs on a fixed vertex count are grown one edge at a time. A child
//! `X + e` is kept only when its canonical parent (the child minus the last
//! edge of its canonical form) is isomorphic to `X`; children of one parent
//! are deduplicated locally. Each isomorphism class is therefore reached from
//! exactly one parent class, so no global table is needed.

use std::collections::HashSet;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arrow::{Arrowing, MinimalityReport, SearchOptions, Targets, DEFAULT_NODE_BUDGET};
use crate::canon::canonical_form;
use crate::density::{m2_pair, rho, Rational};
use crate::embed::Pattern;
use crate::error::{Error, Result};
use crate::graph::{bits, low_mask, Graph, MAX_ORDER};
use crate::graph6::emit_graph6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchBounds {
    pub max_vertices: usize,
    pub max_edges: usize,
    /// Node budget for each arrowing call.
    pub node_budget: u64,
}

impl SearchBounds {
    pub fn new(max_vertices: usize, max_edges: usize) -> Self {
        SearchBounds {
            max_vertices,
            max_edges,
            node_budget: DEFAULT_NODE_BUDGET,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.max_vertices > MAX_ORDER {
            return Err(Error::Bounds(format!(
                "max_vertices = {} exceeds the vertex cap {MAX_ORDER}",
                self.max_vertices
            )));
        }
        if self.node_budget == 0 {
            return Err(Error::Bounds("node budget must be positive".into()));
        }
        Ok(())
    }
}

/// Canonical representatives of every isomorphism class with at most
/// `max_vertices` vertices, at most `max_edges` edges, at least one edge and
/// no isolated vertices, each yielded once. Classes appear grouped by vertex
/// count.
pub struct GraphGenerator {
    max_vertices: usize,
    max_edges: usize,
    order: usize,
    stack: Vec<(Graph, Vec<u8>)>,
}

pub fn enumerate_graphs(bounds: &SearchBounds) -> Result<GraphGenerator> {
    bounds.validate()?;
    Ok(GraphGenerator {
        max_vertices: bounds.max_vertices,
        max_edges: bounds.max_edges,
        order: 1,
        stack: Vec::new(),
    })
}

impl GraphGenerator {
    /// Children of `parent` accepted by the canonical-parent test, as
    /// canonical graphs with their certificates.
    fn children(&self, parent: &Graph, parent_cert: &[u8]) -> Vec<(Graph, Vec<u8>)> {
        let n = parent.order();
        let mut seen: HashSet<Vec<u8>> = HashSet::new();
        let mut out = Vec::new();
        for u in 0..n {
            for v in bits(!parent.neighbors(u) & parent.vertex_mask() & !low_mask(u + 1)) {
                let child = parent.with_edge((u, v)).expect("non-edge");
                let form = canonical_form(&child);
                if seen.contains(form.certificate()) {
                    continue;
                }
                let canon = form.apply(&child);
                let last = *canon.edges().last().expect("child has an edge");
                let reduced = canon.delete_edge(last).expect("edge of canon");
                if canonical_form(&reduced).certificate() == parent_cert {
                    let cert = form.into_certificate();
                    seen.insert(cert.clone());
                    out.push((canon, cert));
                }
            }
        }
        out
    }

    /// Descendants only add edges, and each edge covers at most two
    /// isolated vertices.
    fn can_finish(&self, g: &Graph) -> bool {
        g.edge_count() + g.isolated_count().div_ceil(2) <= self.max_edges
    }
}

impl Iterator for GraphGenerator {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        loop {
            let Some((g, cert)) = self.stack.pop() else {
                self.order += 1;
                if self.order > self.max_vertices {
                    return None;
                }
                let empty = Graph::empty(self.order).expect("within cap");
                if self.can_finish(&empty) {
                    let cert = canonical_form(&empty).into_certificate();
                    self.stack.push((empty, cert));
                }
                continue;
            };
            if g.edge_count() < self.max_edges {
                let mut kids = self.children(&g, &cert);
                kids.retain(|(c, _)| self.can_finish(c));
                // Reverse so that children pop in generation order.
                self.stack.extend(kids.into_iter().rev());
            }
            if g.edge_count() > 0 && !g.has_isolated_vertices() {
                return Some(g);
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Completeness {
    CompleteWithinBounds,
    /// Some candidate could not be decided within the node budget.
    BudgetLimited,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogMember {
    /// Canonical representative.
    pub graph: Graph,
    pub report: MinimalityReport,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinimalCatalog {
    pub g: Graph,
    pub h: Graph,
    pub bounds: SearchBounds,
    /// Sorted by order, then edge count, then graph6.
    pub members: Vec<CatalogMember>,
    pub completeness: Completeness,
    /// Candidates left undecided by the budget.
    pub undecided: Vec<Graph>,
    /// Candidates that passed the containment pre-filters.
    pub candidates_checked: usize,
}

impl MinimalCatalog {
    pub fn graphs(&self) -> impl Iterator<Item = &Graph> {
        self.members.iter().map(|m| &m.graph)
    }

    pub fn document(&self) -> CatalogDocument {
        CatalogDocument {
            g: emit_graph6(&self.g),
            h: emit_graph6(&self.h),
            bounds: self.bounds,
            completeness: self.completeness,
            members: self
                .members
                .iter()
                .map(|m| MemberDocument {
                    graph6: emit_graph6(&m.graph),
                    vertices: m.graph.order(),
                    edges: m.graph.edge_count(),
                    edge_witnesses: m
                        .report
                        .per_edge
                        .iter()
                        .map(|w| EdgeWitnessDigest {
                            edge: [w.edge.0, w.edge.1],
                            coloring: w.witness().map(|c| c.code()).unwrap_or_default(),
                        })
                        .collect(),
                })
                .collect(),
            undecided: self.undecided.iter().map(emit_graph6).collect(),
        }
    }
}

/// Serialised catalogue: targets and members in graph6, with the good
/// colouring of every `F − e` as an `R`/`B` string over the edges of `F − e`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogDocument {
    pub g: String,
    pub h: String,
    pub bounds: SearchBounds,
    pub completeness: Completeness,
    pub members: Vec<MemberDocument>,
    pub undecided: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MemberDocument {
    pub graph6: String,
    pub vertices: usize,
    pub edges: usize,
    pub edge_witnesses: Vec<EdgeWitnessDigest>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeWitnessDigest {
    pub edge: [usize; 2],
    pub coloring: String,
}

enum Candidate {
    Member(CatalogMember),
    Undecided(Graph),
    Rejected,
}

/// All Ramsey-minimal graphs for `(G, H)` within `bounds`.
pub fn enumerate_ramsey_minimal(
    g: &Graph,
    h: &Graph,
    bounds: &SearchBounds,
) -> Result<MinimalCatalog> {
    bounds.validate()?;
    for (name, t) in [("G", g), ("H", h)] {
        if t.edge_count() == 0 || t.has_isolated_vertices() {
            return Err(Error::Precondition(format!(
                "target {name} must have an edge and no isolated vertices"
            )));
        }
    }
    let targets = Targets::new(g, h)?;
    let opts = SearchOptions::with_budget(bounds.node_budget);
    let min_edges = g.edge_count().max(h.edge_count());
    let min_order = g.order().max(h.order());

    // Both monochromatic colourings are candidates, so F must contain G and H.
    let candidates: Vec<Graph> = enumerate_graphs(bounds)?
        .filter(|f| f.edge_count() >= min_edges && f.order() >= min_order)
        .collect();
    let contains_g = Pattern::new(g);
    let contains_h = Pattern::new(h);

    let checked: Vec<(bool, Candidate)> = candidates
        .par_iter()
        .map(|f| {
            let adj = f.adjacency();
            if !contains_g.contained_in(adj) || !contains_h.contained_in(adj) {
                return (false, Candidate::Rejected);
            }
            let report = targets.minimality(f, &opts);
            let c = match report.is_minimal() {
                Some(true) => Candidate::Member(CatalogMember {
                    graph: f.clone(),
                    report,
                }),
                Some(false) => Candidate::Rejected,
                None => Candidate::Undecided(f.clone()),
            };
            (true, c)
        })
        .collect();

    let mut members = Vec::new();
    let mut undecided = Vec::new();
    let mut candidates_checked = 0;
    for (passed, c) in checked {
        candidates_checked += usize::from(passed);
        match c {
            Candidate::Member(m) => members.push(m),
            Candidate::Undecided(f) => undecided.push(f),
            Candidate::Rejected => {}
        }
    }
    members.sort_by_cached_key(|m| (m.graph.order(), m.graph.edge_count(), emit_graph6(&m.graph)));
    undecided.sort_by_cached_key(|f| (f.order(), f.edge_count(), emit_graph6(f)));
    Ok(MinimalCatalog {
        g: g.clone(),
        h: h.clone(),
        bounds: *bounds,
        completeness: if undecided.is_empty() {
            Completeness::CompleteWithinBounds
        } else {
            Completeness::BudgetLimited
        },
        members,
        undecided,
        candidates_checked,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AuditOutcome {
    /// `ρ(F) > m₂(G, H)`.
    Pass,
    /// `ρ(F) ≤ m₂(G, H)`: contradicts the density property of Ramsey graphs.
    Violation,
    /// `F` lacks a copy of `G` or of `H`, so it cannot be a Ramsey graph.
    NotRamseyCandidate,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AuditEntry {
    pub graph: Graph,
    pub rho: Option<Rational>,
    pub outcome: AuditOutcome,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DensityAudit {
    pub threshold: Rational,
    pub entries: Vec<AuditEntry>,
}

impl DensityAudit {
    pub fn violations(&self) -> impl Iterator<Item = &AuditEntry> {
        self.entries
            .iter()
            .filter(|e| e.outcome == AuditOutcome::Violation)
    }

    pub fn rejected(&self) -> impl Iterator<Item = &AuditEntry> {
        self.entries
            .iter()
            .filter(|e| e.outcome == AuditOutcome::NotRamseyCandidate)
    }

    pub fn passed(&self) -> bool {
        self.violations().next().is_none()
    }
}

/// Checks `ρ(F) > m₂(G, H)` for every member; `G` and `H` must both
/// contain a cycle.
pub fn catalog_density_audit<'a>(
    members: impl IntoIterator<Item = &'a Graph>,
    g: &Graph,
    h: &Graph,
) -> Result<DensityAudit> {
    let threshold = m2_pair(g, h)?.value;
    let pg = Pattern::new(g);
    let ph = Pattern::new(h);
    let mut entries = Vec::new();
    for f in members {
        let adj = f.adjacency();
        if !pg.contained_in(adj) || !ph.contained_in(adj) {
            entries.push(AuditEntry {
                graph: f.clone(),
                rho: None,
                outcome: AuditOutcome::NotRamseyCandidate,
            });
            continue;
        }
        let r = rho(f)?.value;
        entries.push(AuditEntry {
            graph: f.clone(),
            rho: Some(r),
            outcome: if r > threshold {
                AuditOutcome::Pass
            } else {
                AuditOutcome::Violation
            },
        });
    }
    Ok(DensityAudit { threshold, entries })
}

/// Whether `small` is isomorphic to a subgraph of `big` (non-induced).
pub fn is_subgraph(small: &Graph, big: &Graph) -> bool {
    small.order() <= big.order()
        && small.edge_count() <= big.edge_count()
        && Pattern::new(&small.strip_isolated()).contained_in(big.adjacency())
}

/// Witness colourings of every `F − e` re-verify for the catalogue targets.
pub fn verify_member(member: &CatalogMember, g: &Graph, h: &Graph) -> bool {
    member.report.is_minimal() == Some(true)
        && member.report.per_edge.len() == member.graph.edge_count()
        && member.report.per_edge.iter().all(|w| match &w.outcome {
            Arrowing::NotArrows(c) => {
                member.report.graph.delete_edge(w.edge).as_ref() == Ok(c.host())
                    && c.is_good_for(g, h)
            }
            _ => false,
        })
}
