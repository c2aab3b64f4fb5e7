//! Text form of an embedding.
//!
//! ```text
//! # K_4 in the plane
//! 0: 1 3 2
//! 1: 2 3 0
//! 2: 0 3 1
//! 3: 0 1 2
//! signature: -(1,2)
//! ```
//!
//! Each vertex line lists its neighbors in cyclic order. The optional
//! signature line names the negative edges.

use std::collections::BTreeMap;

use super::RotationSystem;
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};

fn num(tok: &str) -> Result<usize> {
    tok.trim()
        .parse()
        .map_err(|_| Error::Parse(format!("expected a vertex index, got {tok:?}")))
}

fn parse_signature(spec: &str) -> Result<Vec<(usize, usize)>> {
    let compact: String = spec.chars().filter(|c| !c.is_whitespace()).collect();
    let mut out = Vec::new();
    let mut rest = compact.as_str();
    while !rest.is_empty() {
        let body = rest
            .strip_prefix("-(")
            .ok_or_else(|| Error::Parse(format!("expected -(a,b) in signature, got {rest:?}")))?;
        let close = body
            .find(')')
            .ok_or_else(|| Error::Parse("unterminated signature entry".into()))?;
        let (a, b) = body[..close]
            .split_once(',')
            .ok_or_else(|| Error::Parse(format!("bad signature entry {:?}", &body[..close])))?;
        out.push((num(a)?, num(b)?));
        rest = &body[close + 1..];
    }
    Ok(out)
}

/// Parses the embedding text format.
pub fn parse_embedding(text: &str) -> Result<RotationSystem> {
    let mut lines: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    let mut signed = Vec::new();
    for raw in text.lines() {
        let line = raw.split('#').next().unwrap().trim();
        if line.is_empty() {
            continue;
        }
        let (head, tail) = line
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("missing ':' in line {line:?}")))?;
        if head.trim() == "signature" {
            signed.extend(parse_signature(tail)?);
            continue;
        }
        let v = num(head)?;
        let nbrs = tail
            .split_whitespace()
            .map(num)
            .collect::<Result<Vec<_>>>()?;
        if lines.insert(v, nbrs).is_some() {
            return Err(Error::Parse(format!("vertex {v} listed twice")));
        }
    }
    let n = lines.len();
    if n == 0 {
        return Err(Error::Parse("no vertex lines".into()));
    }
    if let Some((&v, _)) = lines.iter().find(|(&v, _)| v >= n) {
        return Err(Error::Parse(format!(
            "vertex lines must cover 0..{n} exactly; found vertex {v}"
        )));
    }
    let mut pairs = Vec::new();
    for (&v, nbrs) in &lines {
        for &u in nbrs {
            let Some(back) = lines.get(&u) else {
                return Err(Error::Parse(format!(
                    "unknown vertex {u} in the rotation of {v}"
                )));
            };
            if u == v {
                return Err(Error::Parse(format!("self-loop at vertex {v}")));
            }
            if !back.contains(&v) {
                return Err(Error::Parse(format!(
                    "incomplete rotation: {v} lists {u} but {u} does not list {v}"
                )));
            }
            pairs.push((v, u));
        }
        let mut sorted = nbrs.clone();
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Parse(format!("vertex {v} repeats a neighbor")));
        }
    }
    let graph = Graph::from_edges(n, &pairs)?;
    let mut negative = Vec::with_capacity(signed.len());
    for (a, b) in signed {
        if a == b || !graph.has_edge(a, b) {
            return Err(Error::Parse(format!("signature names non-edge ({a},{b})")));
        }
        negative.push(Edge::new(a, b));
    }
    RotationSystem::new(graph, lines.into_values().collect(), &negative)
}

/// Renders an embedding in the text format accepted by [`parse_embedding`].
pub fn write_embedding(rs: &RotationSystem) -> String {
    let mut out = String::new();
    for v in 0..rs.graph().order() {
        out.push_str(&v.to_string());
        out.push(':');
        for u in rs.rotation(v) {
            out.push(' ');
            out.push_str(&u.to_string());
        }
        out.push('\n');
    }
    let neg = rs.negative_edges();
    if !neg.is_empty() {
        out.push_str("signature:");
        for e in neg {
            out.push_str(&format!(" -{e}"));
        }
        out.push('\n');
    }
    out
}
