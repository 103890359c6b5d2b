//! Immutable simple graphs on at most [`MAX_ORDER`] vertices.
//!
//! Each vertex owns one `u64` neighbourhood bitset, so set operations on
//! neighbourhoods are single machine instructions. Every "mutating"
//! operation returns a fresh graph.

use std::fmt;

use crate::error::{Error, Result};

/// Hard upper bound on the number of vertices (one word per neighbourhood).
pub const MAX_ORDER: usize = 64;

/// An unordered vertex pair, normalised so that `.0 < .1`.
pub type Edge = (usize, usize);

#[inline]
pub(crate) fn bit(v: usize) -> u64 {
    1u64 << v
}

/// Mask with the low `n` bits set.
#[inline]
pub(crate) fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Iterates the set bits of a word in increasing order.
pub(crate) fn bits(mut word: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if word == 0 {
            None
        } else {
            let v = word.trailing_zeros() as usize;
            word &= word - 1;
            Some(v)
        }
    })
}

/// Checks `order` against a caller-chosen cap, which itself may not exceed
/// [`MAX_ORDER`].
pub fn check_order(order: usize, cap: usize) -> Result<()> {
    let cap = cap.min(MAX_ORDER);
    if order > cap {
        Err(Error::VertexCap { order, cap })
    } else {
        Ok(())
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<u64>,
    edge_count: usize,
}

impl Graph {
    /// The edgeless graph on `order` vertices.
    pub fn empty(order: usize) -> Result<Self> {
        check_order(order, MAX_ORDER)?;
        Ok(Graph {
            adj: vec![0; order],
            edge_count: 0,
        })
    }

    pub fn from_edges(order: usize, edges: &[Edge]) -> Result<Self> {
        let mut adj = vec![0u64; order];
        check_order(order, MAX_ORDER)?;
        for &(u, v) in edges {
            if u == v || u >= order || v >= order {
                return Err(Error::InvalidEdge(u, v));
            }
            if adj[u] & bit(v) != 0 {
                return Err(Error::DuplicateEdge(normalize((u, v))));
            }
            adj[u] |= bit(v);
            adj[v] |= bit(u);
        }
        Ok(Graph {
            adj,
            edge_count: edges.len(),
        })
    }

    /// Builds a graph from neighbourhood words that are already known to be
    /// symmetric, irreflexive and in range.
    pub(crate) fn from_adjacency(adj: Vec<u64>) -> Self {
        debug_assert!(adj.len() <= MAX_ORDER);
        debug_assert!(adj.iter().enumerate().all(|(v, &w)| w & bit(v) == 0
            && w & !low_mask(adj.len()) == 0
            && bits(w).all(|u| adj[u] & bit(v) != 0)));
        let degree_sum: u32 = adj.iter().map(|w| w.count_ones()).sum();
        Graph {
            adj,
            edge_count: degree_sum as usize / 2,
        }
    }

    pub fn complete(order: usize) -> Result<Self> {
        check_order(order, MAX_ORDER)?;
        let all = low_mask(order);
        Ok(Self::from_adjacency(
            (0..order).map(|v| all & !bit(v)).collect(),
        ))
    }

    /// The path on `order` vertices.
    pub fn path(order: usize) -> Result<Self> {
        let edges: Vec<Edge> = (1..order).map(|v| (v - 1, v)).collect();
        Self::from_edges(order, &edges)
    }

    pub fn cycle(order: usize) -> Result<Self> {
        if order < 3 {
            return Err(Error::Spec {
                input: format!("C{order}"),
                reason: "a cycle needs at least 3 vertices".into(),
            });
        }
        let mut edges: Vec<Edge> = (1..order).map(|v| (v - 1, v)).collect();
        edges.push((0, order - 1));
        Self::from_edges(order, &edges)
    }

    /// The star `K_{1,r}` with centre 0.
    pub fn star(r: usize) -> Result<Self> {
        let edges: Vec<Edge> = (1..=r).map(|v| (0, v)).collect();
        Self::from_edges(r + 1, &edges)
    }

    /// `j` disjoint edges; `j = 0` gives the graph with no vertices.
    pub fn matching(j: usize) -> Result<Self> {
        let edges: Vec<Edge> = (0..j).map(|i| (2 * i, 2 * i + 1)).collect();
        Self::from_edges(2 * j, &edges)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && v < self.order() && self.adj[u] & bit(v) != 0
    }

    /// Neighbourhood of `v` as a bitset.
    #[inline]
    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.order()).map(|v| self.degree(v)).collect()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.order()).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub(crate) fn adjacency(&self) -> &[u64] {
        &self.adj
    }

    /// Mask of all vertex labels.
    #[inline]
    pub fn vertex_mask(&self) -> u64 {
        low_mask(self.order())
    }

    /// Edges in lexicographic order, each with `u < v`.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.edge_count);
        for u in 0..self.order() {
            for v in bits(self.adj[u] & !low_mask(u + 1)) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn with_edge(&self, e: Edge) -> Result<Self> {
        let (u, v) = normalize(e);
        if u == v || v >= self.order() {
            return Err(Error::InvalidEdge(e.0, e.1));
        }
        if self.has_edge(u, v) {
            return Err(Error::DuplicateEdge((u, v)));
        }
        let mut adj = self.adj.clone();
        adj[u] |= bit(v);
        adj[v] |= bit(u);
        Ok(Graph {
            adj,
            edge_count: self.edge_count + 1,
        })
    }

    /// `X − e`: removes one edge and keeps every vertex, including any that
    /// become isolated.
    pub fn delete_edge(&self, e: Edge) -> Result<Self> {
        let (u, v) = normalize(e);
        if !self.has_edge(u, v) {
            return Err(Error::MissingEdge((u, v)));
        }
        let mut adj = self.adj.clone();
        adj[u] &= !bit(v);
        adj[v] &= !bit(u);
        Ok(Graph {
            adj,
            edge_count: self.edge_count - 1,
        })
    }

    /// `X ∪ Y`; the vertices of `other` are shifted past those of `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Self> {
        let shift = self.order();
        check_order(shift + other.order(), MAX_ORDER)?;
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|&w| w << shift));
        Ok(Graph {
            adj,
            edge_count: self.edge_count + other.edge_count,
        })
    }

    /// Relabels vertex `v` as `perm[v]`. `perm` must be a permutation of
    /// `0..order`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.order(), "permutation length mismatch");
        let mut adj = vec![0u64; self.order()];
        for (v, &w) in self.adj.iter().enumerate() {
            adj[perm[v]] = bits(w).fold(0, |acc, u| acc | bit(perm[u]));
        }
        Graph {
            adj,
            edge_count: self.edge_count,
        }
    }

    /// The subgraph induced on `mask`, relabelled to `0..popcount(mask)` in
    /// increasing vertex order.
    pub fn induced(&self, mask: u64) -> Graph {
        let mask = mask & self.vertex_mask();
        let keep: Vec<usize> = bits(mask).collect();
        let mut index = [usize::MAX; MAX_ORDER];
        for (i, &v) in keep.iter().enumerate() {
            index[v] = i;
        }
        let adj = keep
            .iter()
            .map(|&v| bits(self.adj[v] & mask).fold(0, |acc, u| acc | bit(index[u])))
            .collect();
        Graph::from_adjacency(adj)
    }

    /// Edges with both endpoints in `mask`.
    #[inline]
    pub fn induced_edge_count(&self, mask: u64) -> usize {
        let twice: u32 = bits(mask & self.vertex_mask())
            .map(|v| (self.adj[v] & mask).count_ones())
            .sum();
        twice as usize / 2
    }

    pub fn isolated_count(&self) -> usize {
        self.adj.iter().filter(|&&w| w == 0).count()
    }

    pub fn has_isolated_vertices(&self) -> bool {
        self.adj.contains(&0)
    }

    /// Drops isolated vertices, keeping the relative order of the rest.
    pub fn strip_isolated(&self) -> Graph {
        if !self.has_isolated_vertices() {
            return self.clone();
        }
        let mask = self
            .adj
            .iter()
            .enumerate()
            .filter(|(_, &w)| w != 0)
            .fold(0u64, |acc, (v, _)| acc | bit(v));
        self.induced(mask)
    }

    /// Vertex sets of the connected components, ordered by smallest vertex.
    pub fn component_masks(&self) -> Vec<u64> {
        let mut seen = 0u64;
        let mut out = Vec::new();
        for start in 0..self.order() {
            if seen & bit(start) != 0 {
                continue;
            }
            let mut comp = bit(start);
            let mut frontier = bit(start);
            while frontier != 0 {
                let next = bits(frontier).fold(0, |acc, v| acc | self.adj[v]) & !comp;
                comp |= next;
                frontier = next;
            }
            seen |= comp;
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.component_masks().len() <= 1
    }

    /// A simple graph is a forest iff `e = v − c`.
    pub fn is_forest(&self) -> bool {
        self.edge_count + self.component_masks().len() == self.order()
    }

    pub fn has_cycle(&self) -> bool {
        !self.is_forest()
    }

    /// Every edge is its own component (isolated vertices are ignored).
    pub fn is_matching(&self) -> bool {
        self.adj.iter().all(|w| w.count_ones() <= 1)
    }

    pub fn complement(&self) -> Graph {
        let all = self.vertex_mask();
        Graph::from_adjacency(
            self.adj
                .iter()
                .enumerate()
                .map(|(v, &w)| !w & all & !bit(v))
                .collect(),
        )
    }

    /// Whether `self` and `other` are the same labelled graph after the
    /// identity map, i.e. `self ⊆ other` edge-wise on shared labels.
    pub fn is_labeled_subgraph_of(&self, other: &Graph) -> bool {
        self.order() <= other.order() && self.adj.iter().zip(&other.adj).all(|(&a, &b)| a & !b == 0)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.order(), self.edges())
    }
}

#[inline]
pub fn normalize((u, v): Edge) -> Edge {
    if u <= v {
        (u, v)
    } else {
        (v, u)
    }
}

/// Structural kind of a connected component.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ComponentKind {
    Isolated,
    K2,
    /// `S(r)` with `r ≥ 2`.
    Star(usize),
    /// Acyclic with diameter at least 3.
    Tree,
    Cyclic,
}

impl ComponentKind {
    /// Star size, counting `K₂` as `S(1)`.
    pub fn star_size(self) -> Option<usize> {
        match self {
            ComponentKind::K2 => Some(1),
            ComponentKind::Star(r) => Some(r),
            _ => None,
        }
    }

    pub fn is_odd_star(self) -> bool {
        self.star_size().is_some_and(|r| r % 2 == 1)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    /// Vertices of the component in the parent graph.
    pub vertices: u64,
    pub graph: Graph,
    pub kind: ComponentKind,
}

/// Splits `g` into connected components, ordered by their smallest vertex.
pub fn components(g: &Graph) -> Vec<Component> {
    g.component_masks()
        .into_iter()
        .map(|mask| {
            let graph = g.induced(mask);
            let kind = classify_connected(&graph);
            Component {
                vertices: mask,
                graph,
                kind,
            }
        })
        .collect()
}

fn classify_connected(g: &Graph) -> ComponentKind {
    let n = g.order();
    let e = g.edge_count();
    if n == 1 {
        ComponentKind::Isolated
    } else if e >= n {
        ComponentKind::Cyclic
    } else if e == 1 {
        ComponentKind::K2
    } else if g.max_degree() == n - 1 {
        ComponentKind::Star(n - 1)
    } else {
        ComponentKind::Tree
    }
}
