//! Canonical labelling by partition refinement and individualisation.
//!
//! The search tree is the usual one: refine the ordered vertex partition to
//! an equitable one, pick the first smallest non-singleton cell, and branch on
//! each of its vertices. Every leaf is a discrete partition and therefore a
//! relabelling; the canonical form is the relabelled adjacency matrix that is
//! largest in byte order over all leaves. Branches that are images of an
//! already explored branch under a known automorphism fixing the current
//! prefix are skipped.

use crate::graph::{bit, Graph};

/// Relabelling-invariant certificate together with the labelling producing it.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CanonicalForm {
    certificate: Vec<u8>,
    labeling: Vec<usize>,
}

impl CanonicalForm {
    /// Bytes that are equal for two graphs iff the graphs are isomorphic.
    pub fn certificate(&self) -> &[u8] {
        &self.certificate
    }

    pub fn into_certificate(self) -> Vec<u8> {
        self.certificate
    }

    /// `labeling()[v]` is the canonical label of input vertex `v`.
    pub fn labeling(&self) -> &[usize] {
        &self.labeling
    }

    /// Applies the canonical relabelling to `g`, producing the canonical
    /// representative of its isomorphism class.
    pub fn apply(&self, g: &Graph) -> Graph {
        g.relabel(&self.labeling)
    }
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    let mut search = Search::new(g);
    search.run();
    let (certificate, labeling, _) = search.best.expect("search visits at least one leaf");
    CanonicalForm {
        certificate,
        labeling,
    }
}

/// Canonical representative of the isomorphism class of `g`.
pub fn canonical_graph(g: &Graph) -> Graph {
    canonical_form(g).apply(g)
}

pub fn certificate(g: &Graph) -> Vec<u8> {
    canonical_form(g).into_certificate()
}

pub fn are_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.order() == b.order()
        && a.edge_count() == b.edge_count()
        && {
            let mut da = a.degrees();
            let mut db = b.degrees();
            da.sort_unstable();
            db.sort_unstable();
            da == db
        }
        && certificate(a) == certificate(b)
}

/// A generating set (not necessarily minimal) of the automorphism group.
/// Each generator maps vertex `v` to `gen[v]`.
pub fn automorphism_generators(g: &Graph) -> Vec<Vec<usize>> {
    let mut search = Search::new(g);
    search.run();
    search.automorphisms
}

/// Encodes a labelled graph: the order followed by the upper triangle of the
/// adjacency matrix in column-major order, packed most significant bit first.
fn encode(g: &Graph, labeling: &[usize]) -> Vec<u8> {
    let n = g.order();
    let mut inverse = vec![0usize; n];
    for (v, &l) in labeling.iter().enumerate() {
        inverse[l] = v;
    }
    let mut out = Vec::with_capacity(1 + (n * n.saturating_sub(1) / 2).div_ceil(8));
    out.push(n as u8);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        let row = g.neighbors(inverse[j]);
        for &i in &inverse[..j] {
            acc = (acc << 1) | u8::from(row & bit(i) != 0);
            filled += 1;
            if filled == 8 {
                out.push(acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(acc << (8 - filled));
    }
    out
}

type Partition = Vec<Vec<usize>>;

const MAX_STORED_AUTOMORPHISMS: usize = 128;

/// A leaf of the search tree: certificate, labelling and the path to it.
type Leaf = (Vec<u8>, Vec<usize>, Vec<usize>);

struct Search<'a> {
    g: &'a Graph,
    first: Option<Leaf>,
    best: Option<Leaf>,
    automorphisms: Vec<Vec<usize>>,
    /// Set after a leaf repeats an earlier one: unwind to this depth.
    backjump: Option<usize>,
}

impl<'a> Search<'a> {
    fn new(g: &'a Graph) -> Self {
        Search {
            g,
            first: None,
            best: None,
            automorphisms: Vec::new(),
            backjump: None,
        }
    }

    fn run(&mut self) {
        let n = self.g.order();
        let root = self.refine(vec![(0..n).collect()]);
        let mut prefix = Vec::new();
        self.descend(root, &mut prefix);
    }

    /// Splits cells by neighbour counts into every current cell until stable.
    fn refine(&self, mut partition: Partition) -> Partition {
        loop {
            let masks: Vec<u64> = partition
                .iter()
                .map(|cell| cell.iter().fold(0, |acc, &v| acc | bit(v)))
                .collect();
            let mut changed = false;
            let mut next = Vec::with_capacity(partition.len());
            for cell in partition {
                if cell.len() == 1 {
                    next.push(cell);
                    continue;
                }
                let mut keyed: Vec<(Vec<u32>, usize)> = cell
                    .iter()
                    .map(|&v| {
                        let row = self.g.neighbors(v);
                        (masks.iter().map(|m| (row & m).count_ones()).collect(), v)
                    })
                    .collect();
                keyed.sort_unstable();
                let mut start = 0;
                for i in 1..=keyed.len() {
                    if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                        next.push(keyed[start..i].iter().map(|&(_, v)| v).collect());
                        start = i;
                    }
                }
                changed |= keyed.first().map(|k| &k.0) != keyed.last().map(|k| &k.0);
            }
            partition = next;
            if !changed {
                return partition;
            }
        }
    }

    fn descend(&mut self, partition: Partition, prefix: &mut Vec<usize>) {
        let target = partition
            .iter()
            .enumerate()
            .filter(|(_, c)| c.len() > 1)
            .min_by_key(|(i, c)| (c.len(), *i))
            .map(|(i, _)| i);
        let Some(target) = target else {
            self.leaf(&partition, prefix);
            return;
        };

        let cell = partition[target].clone();
        let mut explored: Vec<usize> = Vec::new();
        for &v in &cell {
            if !explored.is_empty() && self.in_explored_orbit(v, &explored, prefix) {
                continue;
            }
            let mut child = Vec::with_capacity(partition.len() + 1);
            child.extend_from_slice(&partition[..target]);
            child.push(vec![v]);
            child.push(cell.iter().copied().filter(|&u| u != v).collect());
            child.extend_from_slice(&partition[target + 1..]);
            let child = self.refine(child);
            prefix.push(v);
            self.descend(child, prefix);
            prefix.pop();
            explored.push(v);
            match self.backjump {
                Some(depth) if depth < prefix.len() => return,
                Some(_) => self.backjump = None,
                None => {}
            }
        }
    }

    /// Whether `v` lies in the orbit of an explored vertex under the group
    /// generated by the known automorphisms that fix `prefix` pointwise.
    fn in_explored_orbit(&self, v: usize, explored: &[usize], prefix: &[usize]) -> bool {
        let n = self.g.order();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        let mut any = false;
        for gen in &self.automorphisms {
            if prefix.iter().any(|&p| gen[p] != p) {
                continue;
            }
            any = true;
            for (x, &y) in gen.iter().enumerate() {
                let (a, b) = (find(&mut parent, x), find(&mut parent, y));
                if a != b {
                    parent[a] = b;
                }
            }
        }
        if !any {
            return false;
        }
        let root = find(&mut parent, v);
        explored.iter().any(|&u| find(&mut parent, u) == root)
    }

    fn leaf(&mut self, partition: &Partition, path: &[usize]) {
        let n = self.g.order();
        let mut labeling = vec![0usize; n];
        for (label, cell) in partition.iter().enumerate() {
            labeling[cell[0]] = label;
        }
        let cert = encode(self.g, &labeling);

        for reference in [&self.first, &self.best].into_iter().flatten() {
            if reference.0 == cert {
                // Both labelings produce the same matrix, so mapping each vertex
                // to the vertex carrying the same label elsewhere is an automorphism.
                let mut inverse = vec![0usize; n];
                for (v, &l) in reference.1.iter().enumerate() {
                    inverse[l] = v;
                }
                let auto: Vec<usize> = labeling.iter().map(|&l| inverse[l]).collect();
                let identity = auto.iter().enumerate().all(|(v, &w)| v == w);
                if !identity
                    && self.automorphisms.len() < MAX_STORED_AUTOMORPHISMS
                    && !self.automorphisms.contains(&auto)
                {
                    self.automorphisms.push(auto);
                }
                // The automorphism maps the earlier subtree onto this one at
                // the node where the two paths diverge.
                let shared = reference
                    .2
                    .iter()
                    .zip(path)
                    .take_while(|(a, b)| a == b)
                    .count();
                self.backjump = Some(shared);
                break;
            }
        }

        if self.first.is_none() {
            self.first = Some((cert.clone(), labeling.clone(), path.to_vec()));
        }
        match &self.best {
            Some((best, _, _)) if *best >= cert => {}
            _ => self.best = Some((cert, labeling, path.to_vec())),
        }
    }
}

/// Orbits of a permutation group given by generators, as a representative
/// (smallest element) for each point.
pub(crate) fn orbit_representatives(size: usize, generators: &[Vec<usize>]) -> Vec<usize> {
    let mut rep: Vec<usize> = (0..size).collect();
    fn find(rep: &mut [usize], mut x: usize) -> usize {
        while rep[x] != x {
            rep[x] = rep[rep[x]];
            x = rep[x];
        }
        x
    }
    for gen in generators {
        for (x, &y) in gen.iter().enumerate() {
            let (a, b) = (find(&mut rep, x), find(&mut rep, y));
            if a != b {
                rep[a.max(b)] = a.min(b);
            }
        }
    }
    (0..size).map(|x| find(&mut rep, x)).collect()
}
