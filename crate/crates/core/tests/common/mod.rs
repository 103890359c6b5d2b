//! Brute-force reference implementations used as oracles by the
//! integration tests. Nothing here calls into the search code under test.

#![allow(dead_code)]

use ramsey_core::Graph;

/// Plain adjacency matrix, decoupled from the library's bitset layout.
pub struct Matrix {
    pub n: usize,
    pub adj: Vec<Vec<bool>>,
}

impl Matrix {
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut adj = vec![vec![false; n]; n];
        for &(u, v) in edges {
            adj[u][v] = true;
            adj[v][u] = true;
        }
        Matrix { n, adj }
    }

    pub fn of(g: &Graph) -> Self {
        Self::from_edges(g.order(), &g.edges())
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n)
            .flat_map(|u| (u + 1..self.n).map(move |v| (u, v)))
            .filter(|&(u, v)| self.adj[u][v])
            .count()
    }
}

/// Textbook backtracking: map pattern vertices 0, 1, 2, … in order to
/// distinct host vertices, checking adjacency against every earlier vertex.
pub fn has_subgraph(host: &Matrix, pattern: &Matrix) -> bool {
    fn go(host: &Matrix, pat: &Matrix, map: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
        let p = map.len();
        if p == pat.n {
            return true;
        }
        for w in 0..host.n {
            if used[w] {
                continue;
            }
            if (0..p).all(|q| !pat.adj[p][q] || host.adj[w][map[q]]) {
                used[w] = true;
                map.push(w);
                if go(host, pat, map, used) {
                    return true;
                }
                map.pop();
                used[w] = false;
            }
        }
        false
    }
    pattern.n <= host.n && go(host, pattern, &mut Vec::new(), &mut vec![false; host.n])
}

/// Tries every red/blue colouring of `E(F)`; returns a good one as a red
/// mask over `f.edges()`, or `None` if `F → (G, H)`.
pub fn naive_good_coloring(f: &Graph, g: &Graph, h: &Graph) -> Option<u64> {
    let edges = f.edges();
    assert!(edges.len() < 25, "naive oracle limited to small edge sets");
    let pg = Matrix::of(g);
    let ph = Matrix::of(h);
    (0u64..1 << edges.len()).find(|&mask| {
        let red: Vec<_> = edges
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        let blue: Vec<_> = edges
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 0)
            .map(|(_, &e)| e)
            .collect();
        !has_subgraph(&Matrix::from_edges(f.order(), &red), &pg)
            && !has_subgraph(&Matrix::from_edges(f.order(), &blue), &ph)
    })
}

pub fn naive_arrows(f: &Graph, g: &Graph, h: &Graph) -> bool {
    naive_good_coloring(f, g, h).is_none()
}

pub fn naive_is_minimal(f: &Graph, g: &Graph, h: &Graph) -> bool {
    naive_arrows(f, g, h)
        && f.edges()
            .into_iter()
            .all(|e| !naive_arrows(&f.delete_edge(e).unwrap(), g, h))
}

/// All permutations of `0..n` (Heap's algorithm).
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut a: Vec<usize> = (0..n).collect();
    let mut c = vec![0usize; n];
    out.push(a.clone());
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                a.swap(0, i);
            } else {
                a.swap(c[i], i);
            }
            out.push(a.clone());
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    out
}

/// Isomorphism by trying every bijection.
pub fn brute_isomorphic(a: &Graph, b: &Graph, perms: &[Vec<usize>]) -> bool {
    if a.order() != b.order() || a.edge_count() != b.edge_count() {
        return false;
    }
    let ea = a.edges();
    perms
        .iter()
        .any(|p| ea.iter().all(|&(u, v)| b.has_edge(p[u], p[v])))
}

/// Every labelled graph on `n` vertices.
pub fn labeled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    (0u64..1 << pairs.len()).map(move |mask| {
        let edges: Vec<_> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        Graph::from_edges(n, &edges).unwrap()
    })
}

/// Isomorphism classes on exactly `n` vertices, by permutation filtering.
pub fn brute_classes(n: usize) -> Vec<Graph> {
    let perms = permutations(n);
    let mut classes: Vec<Graph> = Vec::new();
    for g in labeled_graphs(n) {
        if !classes.iter().any(|c| brute_isomorphic(c, &g, &perms)) {
            classes.push(g);
        }
    }
    classes
}

/// Exact fraction `num/den` kept unreduced for the oracle; compared by
/// cross-multiplication.
#[derive(Debug, Clone, Copy)]
pub struct Frac(pub i64, pub i64);

impl Frac {
    pub fn gt(self, o: Frac) -> bool {
        self.0 * o.1 > o.0 * self.1
    }
    pub fn eq(self, o: Frac) -> bool {
        self.0 * o.1 == o.0 * self.1
    }
}

/// Every subgraph `J = (S, A)` with `A ⊆ E(X[S])`, as `(|S|, |A|)` pairs.
pub fn all_subgraph_sizes(x: &Graph) -> Vec<(i64, i64)> {
    let n = x.order();
    let mut out = Vec::new();
    for s in 1u64..1 << n {
        let verts: Vec<usize> = (0..n).filter(|&v| s >> v & 1 == 1).collect();
        let inside: Vec<(usize, usize)> = x
            .edges()
            .into_iter()
            .filter(|&(u, v)| s >> u & 1 == 1 && s >> v & 1 == 1)
            .collect();
        for a in 0u64..1 << inside.len() {
            out.push((verts.len() as i64, a.count_ones() as i64));
        }
    }
    out
}

/// Maximum of `num(v, e) / den(v, e)` over all subgraphs with `v ≥ min_v`.
pub fn all_subgraph_max(x: &Graph, min_v: i64, f: impl Fn(i64, i64) -> Frac) -> Option<Frac> {
    let mut best: Option<Frac> = None;
    for (v, e) in all_subgraph_sizes(x) {
        if v < min_v {
            continue;
        }
        let val = f(v, e);
        if best.is_none_or(|b| val.gt(b)) {
            best = Some(val);
        }
    }
    best
}
