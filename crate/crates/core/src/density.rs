//! Exact density parameters.
//!
//! For each parameter the optimum over all subgraphs is attained by an
//! induced subgraph (adding edges on a fixed vertex set never lowers any of
//! the objectives), so every parameter is a maximum over vertex subsets.
//! Ties are broken by fewer vertices, then by the lexicographically smallest
//! vertex list.

use std::cmp::Ordering;

use num_rational::Ratio;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::graph::{bits, Graph};

pub type Rational = Ratio<i64>;

/// Subset enumeration is exhaustive, so orders are kept small.
pub const MAX_DENSITY_ORDER: usize = 24;

/// A parameter value with the vertex set of a subgraph attaining it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DensityValue {
    pub value: Rational,
    pub witness: Vec<usize>,
}

/// `m₂(G, H)` together with which graph supplied the witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairDensity {
    pub value: Rational,
    /// Vertex set of `J ⊆ G` (or of `J ⊆ H` when `swapped`).
    pub witness: Vec<usize>,
    /// `m₂(G) < m₂(H)`, so the roles were exchanged.
    pub swapped: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DensityReport {
    pub rho: DensityValue,
    /// Absent for forests.
    pub m2: Option<DensityValue>,
    pub m2_pair: Option<PairDensity>,
}

fn check_size(x: &Graph) -> Result<()> {
    if x.order() > MAX_DENSITY_ORDER {
        return Err(Error::VertexCap {
            order: x.order(),
            cap: MAX_DENSITY_ORDER,
        });
    }
    Ok(())
}

/// Largest `score(|S|, e(X[S]))` over vertex subsets `S` with
/// `|S| ≥ min_size`, using the tie-break described in the module docs.
fn best_subset(
    x: &Graph,
    min_size: usize,
    score: impl Fn(i64, i64) -> Rational,
) -> Option<DensityValue> {
    let n = x.order();
    let mut best: Option<(Rational, u64)> = None;
    for mask in 1u64..(1u64 << n) {
        let size = mask.count_ones() as usize;
        if size < min_size {
            continue;
        }
        let value = score(size as i64, x.induced_edge_count(mask) as i64);
        let better = match &best {
            None => true,
            Some((bv, bm)) => match value.cmp(bv) {
                Ordering::Greater => true,
                Ordering::Less => false,
                Ordering::Equal => subset_order(mask, *bm) == Ordering::Less,
            },
        };
        if better {
            best = Some((value, mask));
        }
    }
    best.map(|(value, mask)| DensityValue {
        value,
        witness: bits(mask).collect(),
    })
}

/// Fewer vertices first, then lexicographic order of sorted vertex lists.
fn subset_order(a: u64, b: u64) -> Ordering {
    a.count_ones()
        .cmp(&b.count_ones())
        .then_with(|| bits(a).cmp(bits(b)))
}

/// `ρ(X) = max e(J)/v(J)` over subgraphs with at least one vertex.
pub fn rho(x: &Graph) -> Result<DensityValue> {
    if x.order() == 0 {
        return Err(Error::EmptyGraph);
    }
    check_size(x)?;
    Ok(best_subset(x, 1, |v, e| Rational::new(e, v)).expect("non-empty graph"))
}

/// `m₂(X) = max (e(J)−1)/(v(J)−2)` over subgraphs with at least three
/// vertices; `None` when `X` is a forest.
pub fn m2(x: &Graph) -> Result<Option<DensityValue>> {
    check_size(x)?;
    if x.is_forest() {
        return Ok(None);
    }
    Ok(best_subset(x, 3, |v, e| Rational::new(e - 1, v - 2)))
}

fn m2_required(x: &Graph) -> Result<Rational> {
    m2(x)?.map(|d| d.value).ok_or(Error::Acyclic)
}

/// `m₂(G, H) = max e(J)/(v(J) − 2 + 1/m₂(H))` over `J ⊆ G` with
/// `v(J) ≥ 2`, after ordering the pair so that `m₂(G) ≥ m₂(H)`.
pub fn m2_pair(g: &Graph, h: &Graph) -> Result<PairDensity> {
    let mg = m2_required(g)?;
    let mh = m2_required(h)?;
    let (big, small_m2, swapped) = if mg < mh {
        (h, mg, true)
    } else {
        (g, mh, false)
    };
    let inv = small_m2.recip();
    let best = best_subset(big, 2, |v, e| {
        Rational::from_integer(e) / (Rational::from_integer(v - 2) + inv)
    })
    .expect("cyclic graph has at least three vertices");
    Ok(PairDensity {
        value: best.value,
        witness: best.witness,
        swapped,
    })
}

/// `c · n^{-1/m₂(G,H)}`, clamped to `[0, 1]`.
pub fn threshold_p(g: &Graph, h: &Graph, n: usize, c: Rational) -> Result<f64> {
    if n < 3 {
        return Err(Error::Precondition(format!("n = {n} must be at least 3")));
    }
    if c <= Rational::zero() {
        return Err(Error::Precondition(format!("c = {c} must be positive")));
    }
    let d = m2_pair(g, h)?.value;
    Ok(edge_probability(n, c, d))
}

pub(crate) fn edge_probability(n: usize, c: Rational, d: Rational) -> f64 {
    let c = c.to_f64().expect("finite rational");
    let d = d.to_f64().expect("finite rational");
    (c * (n as f64).powf(-1.0 / d)).clamp(0.0, 1.0)
}

/// All parameters of `x`, plus `m₂(x, pair)` when a partner is given.
pub fn density_report(x: &Graph, pair: Option<&Graph>) -> Result<DensityReport> {
    Ok(DensityReport {
        rho: rho(x)?,
        m2: m2(x)?,
        m2_pair: pair.map(|y| m2_pair(x, y)).transpose()?,
    })
}

/// Parses `3`, `-2`, `0.25`, `5/2` or `1e-3`-free decimal text into an exact
/// rational.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let bad = || Error::Precondition(format!("`{text}` is not a rational number"));
    let t = text.trim();
    if let Some((num, den)) = t.split_once('/') {
        let num: i64 = num.trim().parse().map_err(|_| bad())?;
        let den: i64 = den.trim().parse().map_err(|_| bad())?;
        if den == 0 {
            return Err(bad());
        }
        return Ok(Rational::new(num, den));
    }
    let (neg, digits) = match t.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, t),
    };
    let (int, frac) = digits.split_once('.').unwrap_or((digits, ""));
    if (int.is_empty() && frac.is_empty())
        || !int.bytes().chain(frac.bytes()).all(|b| b.is_ascii_digit())
        || frac.len() > 15
    {
        return Err(bad());
    }
    let scale = 10i64.pow(frac.len() as u32);
    let whole: i64 = if int.is_empty() {
        0
    } else {
        int.parse().map_err(|_| bad())?
    };
    let part: i64 = if frac.is_empty() {
        0
    } else {
        frac.parse().map_err(|_| bad())?
    };
    let value = whole
        .checked_mul(scale)
        .and_then(|w| w.checked_add(part))
        .ok_or_else(bad)?;
    Ok(Rational::new(if neg { -value } else { value }, scale))
}
