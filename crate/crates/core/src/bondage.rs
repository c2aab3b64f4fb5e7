//! Bondage number: the fewest edges whose removal raises γ.
//!
//! The exact search walks edge subsets by increasing size in colex order and
//! stops at the first subset that raises γ. Sizes are capped by the
//! Hartnell–Rall edge bound, which is always attained by some removal set.

use rayon::prelude::*;
use serde::Serialize;

use crate::domination::{domination_number, gamma_oracle, has_dominating_set_of_size};
use crate::error::{Error, Result};
use crate::graph::{bits, Edge, Graph};

/// Minimum over edges `uv` of `d(u) + d(v) - 1 - |N(u) ∩ N(v)|`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct HrBound {
    pub value: usize,
    /// Lexicographically smallest edge attaining the minimum.
    pub edge: Edge,
}

/// b(G) with a removal set that raises γ.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BondageResult {
    pub b: usize,
    pub witness: Vec<Edge>,
    /// γ(G) before removal.
    pub base_gamma: usize,
}

/// The Hartnell–Rall bound for one edge.
pub fn hr_edge_value(g: &Graph, e: Edge) -> usize {
    let common = (g.row(e.u) & g.row(e.v)).count_ones() as usize;
    g.degree(e.u) + g.degree(e.v) - 1 - common
}

pub fn hr_bound(g: &Graph) -> Result<HrBound> {
    g.edges()
        .map(|e| HrBound {
            value: hr_edge_value(g, e),
            edge: e,
        })
        .min_by_key(|h| (h.value, h.edge))
        .ok_or(Error::NoEdges)
}

/// δ(G) + Δ(G) − 1, with δ taken over non-isolated vertices so the bound
/// stays valid for graphs with isolated vertices.
pub fn degree_bound(g: &Graph) -> Result<usize> {
    let min_pos = (0..g.order())
        .map(|v| g.degree(v))
        .filter(|&d| d > 0)
        .min()
        .ok_or(Error::NoEdges)?;
    Ok(min_pos + g.max_degree() - 1)
}

/// Steps a sorted index combination to its colex successor among subsets
/// of `0..m`; false after the last one.
fn next_colex(c: &mut [usize], m: usize) -> bool {
    let k = c.len();
    for i in 0..k {
        let limit = if i + 1 < k { c[i + 1] } else { m };
        if c[i] + 1 < limit {
            c[i] += 1;
            for (j, x) in c[..i].iter_mut().enumerate() {
                *x = j;
            }
            return true;
        }
    }
    false
}

const BATCH: usize = 2048;

/// Smallest removal set of size at most `cap` raising γ of a connected
/// graph, searched by size and then colex rank.
fn search_connected(g: &Graph, cap: usize) -> Option<(Vec<Edge>, usize)> {
    let gamma = domination_number(g).gamma;
    let edges = g.edge_list();
    let m = edges.len();
    let raises = |combo: &Vec<usize>| {
        let mut rows = g.rows().to_vec();
        for &i in combo {
            let e = edges[i];
            rows[e.u] &= !(1 << e.v);
            rows[e.v] &= !(1 << e.u);
        }
        !has_dominating_set_of_size(&Graph::from_rows(rows), gamma)
    };
    for size in 1..=cap.min(m) {
        let mut combo: Vec<usize> = (0..size).collect();
        let mut more = true;
        while more {
            let mut batch = Vec::with_capacity(BATCH);
            while more && batch.len() < BATCH {
                batch.push(combo.clone());
                more = next_colex(&mut combo, m);
            }
            if let Some(i) = batch.par_iter().position_first(raises) {
                let witness = batch[i].iter().map(|&j| edges[j]).collect();
                return Some((witness, gamma));
            }
        }
    }
    None
}

/// Exact b(G).
///
/// `cap` limits the subset sizes tried and defaults to the Hartnell–Rall
/// bound, which always admits a witness. Disconnected graphs take the
/// minimum over components that have edges.
pub fn bondage_number(g: &Graph, cap: Option<usize>) -> Result<BondageResult> {
    let hr = hr_bound(g)?;
    let base_gamma = domination_number(g).gamma;
    let mut best: Option<Vec<Edge>> = None;
    for mask in g.component_masks() {
        if mask.count_ones() < 2 {
            continue;
        }
        let verts: Vec<usize> = bits(mask).collect();
        let h = g.induced(mask);
        let limit = match cap {
            Some(c) => c,
            None => hr_bound(&h)?.value,
        };
        let limit = best.as_ref().map_or(limit, |b| limit.min(b.len()));
        if let Some((w, _)) = search_connected(&h, limit) {
            if best.as_ref().is_none_or(|b| w.len() < b.len()) {
                best = Some(
                    w.iter()
                        .map(|e| Edge::new(verts[e.u], verts[e.v]))
                        .collect(),
                );
            }
        }
    }
    match best {
        Some(witness) => Ok(BondageResult {
            b: witness.len(),
            witness,
            base_gamma,
        }),
        None => Err(Error::CapTooSmall {
            cap: cap.unwrap_or(hr.value),
        }),
    }
}

/// Largest edge count accepted by [`bondage_oracle`].
pub const ORACLE_MAX_EDGES: usize = 20;

/// b(G) by plain enumeration of edge subsets with [`gamma_oracle`]; no
/// caps, components, or pruning. Used to test [`bondage_number`].
pub fn bondage_oracle(g: &Graph) -> Result<usize> {
    let edges = g.edge_list();
    let m = edges.len();
    if m == 0 {
        return Err(Error::NoEdges);
    }
    if m > ORACLE_MAX_EDGES {
        return Err(Error::SizeLimit(format!(
            "oracle handles at most {ORACLE_MAX_EDGES} edges, got {m}"
        )));
    }
    let gamma = gamma_oracle(g)?;
    let all: u64 = (1 << m) - 1;
    for k in 1..=m {
        let mut s: u64 = (1 << k) - 1;
        while s <= all {
            let removed: Vec<Edge> = bits(s).map(|i| edges[i]).collect();
            if gamma_oracle(&g.remove_edges(&removed)?)? > gamma {
                return Ok(k);
            }
            let c = s & s.wrapping_neg();
            let r = s + c;
            s = (((r ^ s) >> 2) / c) | r;
        }
    }
    unreachable!("removing every edge raises γ of a graph with an edge")
}
