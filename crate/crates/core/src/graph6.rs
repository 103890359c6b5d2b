//! The graph6 text format: printable ASCII, 63-offset, with the upper
//! triangle of the adjacency matrix read column by column and packed six
//! bits per character.

use crate::error::{Error, Result};
use crate::graph::{bit, Graph, MAX_ORDER};

const OFFSET: u8 = 63;

pub fn emit_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + OFFSET);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + OFFSET);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        let row = g.neighbors(j);
        for i in 0..j {
            acc = (acc << 1) | u8::from(row & bit(i) != 0);
            filled += 1;
            if filled == 6 {
                out.push(acc + OFFSET);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + OFFSET);
    }
    String::from_utf8(out).expect("graph6 output is ASCII")
}

pub fn parse_graph6(text: &str) -> Result<Graph> {
    let text = text.trim_end_matches(['\n', '\r']);
    let text = text.strip_prefix(">>graph6<<").unwrap_or(text);
    let bytes = text.as_bytes();
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(Error::Graph6(format!(
            "character {:?} out of range",
            b as char
        )));
    }
    let (n, body) = match bytes {
        [] => return Err(Error::Graph6("empty string".into())),
        [126, 126, ..] => return Err(Error::Graph6("order beyond 258047 is not supported".into())),
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(Error::Graph6("truncated order field".into()));
            }
            let n = rest[..3]
                .iter()
                .fold(0usize, |acc, &b| (acc << 6) | usize::from(b - OFFSET));
            (n, &rest[3..])
        }
        [first, rest @ ..] => (usize::from(first - OFFSET), rest),
    };
    if n > MAX_ORDER {
        return Err(Error::VertexCap {
            order: n,
            cap: MAX_ORDER,
        });
    }
    let needed = (n * n.saturating_sub(1) / 2).div_ceil(6);
    if body.len() != needed {
        return Err(Error::Graph6(format!(
            "expected {needed} data characters for {n} vertices, found {}",
            body.len()
        )));
    }
    let mut adj = vec![0u64; n];
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            let word = body[k / 6] - OFFSET;
            if word >> (5 - k % 6) & 1 == 1 {
                adj[i] |= bit(j);
                adj[j] |= bit(i);
            }
            k += 1;
        }
    }
    let pad = needed * 6 - k;
    if pad > 0 && (body[needed - 1] - OFFSET) & ((1 << pad) - 1) != 0 {
        return Err(Error::Graph6("non-zero padding bits".into()));
    }
    Ok(Graph::from_adjacency(adj))
}
