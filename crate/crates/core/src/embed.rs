//! Backtracking search for (not necessarily induced) copies of a small
//! pattern graph inside a host given as neighbourhood bitsets.

use crate::canon::{automorphism_generators, orbit_representatives};
use crate::graph::{bit, bits, low_mask, Edge, Graph};

/// Maps pattern vertex `p` to host vertex `map[p]`.
pub type Embedding = Vec<usize>;

/// A vertex visiting order with, for each position, the pattern neighbours
/// placed earlier.
#[derive(Debug, Clone)]
struct Plan {
    order: Vec<usize>,
    back: Vec<Vec<usize>>,
}

impl Plan {
    /// Visits the component of `start` breadth-first (after `start` and
    /// optionally `second`), then the remaining components, largest first,
    /// each from a vertex of maximum degree.
    fn new(g: &Graph, start: Option<usize>, second: Option<usize>) -> Plan {
        let mut order = Vec::with_capacity(g.order());
        let mut placed = 0u64;
        let mut comps = g.component_masks();
        comps.sort_by_key(|&m| std::cmp::Reverse(m.count_ones()));
        if let Some(s) = start {
            let i = comps.iter().position(|&m| m & bit(s) != 0).unwrap();
            let m = comps.remove(i);
            comps.insert(0, m);
        }
        for (ci, &mask) in comps.iter().enumerate() {
            let root = match (ci, start) {
                (0, Some(s)) => s,
                _ => bits(mask)
                    .max_by_key(|&v| (g.degree(v), std::cmp::Reverse(v)))
                    .unwrap(),
            };
            let mut queue = vec![root];
            if ci == 0 {
                if let Some(b) = second {
                    queue.push(b);
                }
            }
            let mut head = 0;
            for &v in &queue {
                placed |= bit(v);
            }
            while head < queue.len() {
                let v = queue[head];
                head += 1;
                order.push(v);
                let mut fresh: Vec<usize> = bits(g.neighbors(v) & !placed).collect();
                fresh.sort_by_key(|&u| std::cmp::Reverse(g.degree(u)));
                for u in fresh {
                    placed |= bit(u);
                    queue.push(u);
                }
            }
        }
        let mut seen = 0u64;
        let back = order
            .iter()
            .map(|&v| {
                let earlier = bits(g.neighbors(v) & seen).collect();
                seen |= bit(v);
                earlier
            })
            .collect();
        Plan { order, back }
    }
}

/// A pattern prepared for repeated searches: a free plan plus one anchored
/// plan per orbit of directed edges under the pattern's automorphisms.
#[derive(Debug, Clone)]
pub struct Pattern {
    graph: Graph,
    degrees: Vec<u32>,
    free: Plan,
    anchored: Vec<(Edge, Plan)>,
}

impl Pattern {
    pub fn new(g: &Graph) -> Pattern {
        let n = g.order();
        let generators = automorphism_generators(g);
        let arcs: Vec<Edge> = g
            .edges()
            .into_iter()
            .flat_map(|(u, v)| [(u, v), (v, u)])
            .collect();
        let index = |(u, v): Edge| u * n + v;
        // Orbits of arcs under the generators, on the n*n arc index space.
        let arc_gens: Vec<Vec<usize>> = generators
            .iter()
            .map(|gen| {
                (0..n * n)
                    .map(|a| index((gen[a / n], gen[a % n])))
                    .collect()
            })
            .collect();
        let reps = orbit_representatives(n * n, &arc_gens);
        let anchored = arcs
            .into_iter()
            .filter(|&arc| reps[index(arc)] == index(arc))
            .map(|(a, b)| ((a, b), Plan::new(g, Some(a), Some(b))))
            .collect();
        Pattern {
            graph: g.clone(),
            degrees: (0..n).map(|v| g.neighbors(v).count_ones()).collect(),
            free: Plan::new(g, None, None),
            anchored,
        }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    /// Any copy of the pattern in `host`.
    pub fn find(&self, host: &[u64]) -> Option<Embedding> {
        let n = self.graph.order();
        if n > host.len() {
            return None;
        }
        let mut map = vec![usize::MAX; n];
        let all = low_mask(host.len());
        self.extend(host, &self.free, 0, &mut map, 0, all, None)
            .then_some(map)
    }

    /// A copy of the pattern in `host` that uses the host edge `uv`.
    pub fn find_through(&self, host: &[u64], (u, v): Edge) -> Option<Embedding> {
        let n = self.graph.order();
        if n > host.len() || host[u] & bit(v) == 0 {
            return None;
        }
        let all = low_mask(host.len());
        let mut map = vec![usize::MAX; n];
        for (_, plan) in &self.anchored {
            if self.extend(host, plan, 0, &mut map, 0, all, Some((u, v))) {
                return Some(map);
            }
        }
        None
    }

    pub fn contained_in(&self, host: &[u64]) -> bool {
        self.find(host).is_some()
    }

    pub fn contained_through(&self, host: &[u64], e: Edge) -> bool {
        self.find_through(host, e).is_some()
    }

    #[allow(clippy::too_many_arguments)]
    fn extend(
        &self,
        host: &[u64],
        plan: &Plan,
        depth: usize,
        map: &mut [usize],
        used: u64,
        all: u64,
        anchor: Option<Edge>,
    ) -> bool {
        if depth == plan.order.len() {
            return true;
        }
        let p = plan.order[depth];
        let mut cand = all & !used;
        for &q in &plan.back[depth] {
            cand &= host[map[q]];
        }
        match (anchor, depth) {
            (Some((u, _)), 0) => cand &= bit(u),
            (Some((_, v)), 1) => cand &= bit(v),
            _ => {}
        }
        let need = self.degrees[p];
        while cand != 0 {
            let w = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            if host[w].count_ones() < need {
                continue;
            }
            map[p] = w;
            if self.extend(host, plan, depth + 1, map, used | bit(w), all, anchor) {
                return true;
            }
        }
        map[p] = usize::MAX;
        false
    }
}

/// An injective map carrying every edge of `pattern` onto an edge of `host`,
/// if one exists.
pub fn contains_copy(host: &Graph, pattern: &Graph) -> Option<Embedding> {
    if pattern.order() > host.order() || pattern.edge_count() > host.edge_count() {
        return None;
    }
    Pattern::new(pattern).find(host.adjacency())
}

/// Checks that `map` is an injective edge-preserving map from `pattern`
/// into `host`.
pub fn is_embedding(host: &Graph, pattern: &Graph, map: &[usize]) -> bool {
    if map.len() != pattern.order() || map.iter().any(|&w| w >= host.order()) {
        return false;
    }
    let image = map.iter().fold(0u64, |acc, &w| acc | bit(w));
    image.count_ones() as usize == map.len()
        && pattern
            .edges()
            .iter()
            .all(|&(a, b)| host.has_edge(map[a], map[b]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spec::build;

    #[test]
    fn basic_containment() {
        let k4 = build("K4").unwrap();
        let k3 = build("K3").unwrap();
        let map = contains_copy(&k4, &k3).unwrap();
        assert!(is_embedding(&k4, &k3, &map));
        assert!(contains_copy(&build("C5").unwrap(), &k3).is_none());

        let p5 = build("P5").unwrap();
        let m2 = build("2K2").unwrap();
        let map = contains_copy(&p5, &m2).unwrap();
        assert!(is_embedding(&p5, &m2, &map));
    }

    #[test]
    fn anchored_copies_use_the_edge() {
        // Triangle 0-1-2 plus pendant edge 2-3.
        let host = Graph::from_edges(4, &[(0, 1), (1, 2), (0, 2), (2, 3)]).unwrap();
        let k3 = Pattern::new(&build("K3").unwrap());
        assert!(k3.contained_through(host.adjacency(), (0, 1)));
        assert!(!k3.contained_through(host.adjacency(), (2, 3)));

        let p3 = Pattern::new(&build("P3").unwrap());
        let map = p3.find_through(host.adjacency(), (2, 3)).unwrap();
        assert!(is_embedding(&host, p3.graph(), &map));
        assert!(map.contains(&2) && map.contains(&3));
    }

    #[test]
    fn disconnected_patterns() {
        let host = build("K3+K2").unwrap();
        let pattern = Pattern::new(&build("K3+K2").unwrap());
        let map = pattern.find_through(host.adjacency(), (3, 4)).unwrap();
        assert!(is_embedding(&host, pattern.graph(), &map));
        assert!(contains_copy(&build("K4").unwrap(), &build("3K2").unwrap()).is_none());
        assert!(contains_copy(&build("C6").unwrap(), &build("3K2").unwrap()).is_some());
    }
}
