//! Graph expressions in the notation used on the command line:
//! `S5+S2`, `122K2`, `C5`, `K6`, `P4`, joined with `+` for disjoint union.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphSpec {
    /// `S(r) = K_{1,r}`, `r ≥ 1`.
    Star(usize),
    /// `jK₂`, `j ≥ 0`.
    Matching(usize),
    /// Path on `n ≥ 2` vertices.
    Path(usize),
    /// Cycle on `n ≥ 3` vertices.
    Cycle(usize),
    /// `K_n`, `n ≥ 2`.
    Complete(usize),
    DisjointUnion(Vec<GraphSpec>),
}

impl GraphSpec {
    pub fn validate(&self) -> Result<()> {
        let bad = |reason: &str| {
            Err(Error::Spec {
                input: self.to_string(),
                reason: reason.to_string(),
            })
        };
        match *self {
            GraphSpec::Star(0) => bad("a star needs r >= 1"),
            GraphSpec::Path(n) if n < 2 => bad("a path needs at least 2 vertices"),
            GraphSpec::Cycle(n) if n < 3 => bad("a cycle needs at least 3 vertices"),
            GraphSpec::Complete(n) if n < 2 => bad("a complete graph needs at least 2 vertices"),
            GraphSpec::DisjointUnion(ref parts) => parts.iter().try_for_each(GraphSpec::validate),
            _ => Ok(()),
        }
    }

    pub fn build(&self) -> Result<Graph> {
        self.validate()?;
        match *self {
            GraphSpec::Star(r) => Graph::star(r),
            GraphSpec::Matching(j) => Graph::matching(j),
            GraphSpec::Path(n) => Graph::path(n),
            GraphSpec::Cycle(n) => Graph::cycle(n),
            GraphSpec::Complete(n) => Graph::complete(n),
            GraphSpec::DisjointUnion(ref parts) => parts
                .iter()
                .try_fold(Graph::empty(0)?, |acc, p| acc.disjoint_union(&p.build()?)),
        }
    }

    /// Flattens nested unions and expands matchings into single `K₂` terms.
    pub fn primitives(&self) -> Vec<GraphSpec> {
        match self {
            GraphSpec::DisjointUnion(parts) => {
                parts.iter().flat_map(GraphSpec::primitives).collect()
            }
            GraphSpec::Matching(j) => vec![GraphSpec::Matching(1); *j],
            other => vec![other.clone()],
        }
    }
}

/// Convenience wrapper: parse and build in one step.
pub fn build(spec: &str) -> Result<Graph> {
    spec.parse::<GraphSpec>()?.build()
}

impl fmt::Display for GraphSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphSpec::Star(r) => write!(f, "S{r}"),
            GraphSpec::Matching(1) => write!(f, "K2"),
            GraphSpec::Matching(j) => write!(f, "{j}K2"),
            GraphSpec::Path(n) => write!(f, "P{n}"),
            GraphSpec::Cycle(n) => write!(f, "C{n}"),
            GraphSpec::Complete(n) => write!(f, "K{n}"),
            GraphSpec::DisjointUnion(parts) => {
                for (i, p) in parts.iter().enumerate() {
                    if i > 0 {
                        f.write_str("+")?;
                    }
                    write!(f, "{p}")?;
                }
                Ok(())
            }
        }
    }
}

impl FromStr for GraphSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let err = |reason: &str| Error::Spec {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let mut parts = Vec::new();
        for term in s.split('+') {
            let term = term.trim();
            if term.is_empty() {
                return Err(err("empty term"));
            }
            let letter_at = term
                .find(|c: char| !c.is_ascii_digit())
                .ok_or_else(|| err("missing graph letter"))?;
            let count = match &term[..letter_at] {
                "" => 1,
                digits => digits.parse::<usize>().map_err(|_| err("bad multiplier"))?,
            };
            let mut rest = term[letter_at..].chars();
            let letter = rest.next().ok_or_else(|| err("missing graph letter"))?;
            let size_text = rest.as_str();
            if size_text.is_empty() || !size_text.bytes().all(|b| b.is_ascii_digit()) {
                return Err(err("expected a size after the graph letter"));
            }
            let size: usize = size_text.parse().map_err(|_| err("bad size"))?;
            let primitive = match letter.to_ascii_uppercase() {
                'S' => GraphSpec::Star(size),
                'P' => GraphSpec::Path(size),
                'C' => GraphSpec::Cycle(size),
                'K' if size == 2 => {
                    parts.push(GraphSpec::Matching(count));
                    continue;
                }
                'K' => GraphSpec::Complete(size),
                _ => return Err(err("unknown graph letter (expected S, K, C or P)")),
            };
            primitive.validate()?;
            parts.extend(std::iter::repeat_n(primitive, count));
        }
        let spec = if parts.len() == 1 {
            parts.pop().unwrap()
        } else {
            GraphSpec::DisjointUnion(parts)
        };
        spec.validate()?;
        Ok(spec)
    }
}
