//! Exhaustive isomorph-free enumeration of small graphs.
//!
//! Graphs on `n` vertices are grown from those on `n - 1` by adding a vertex
//! with every possible neighborhood and keeping one representative per
//! isomorphism class. Representatives are identified by a canonical code:
//! the largest graph6-order upper-triangle bitstring over all labelings that
//! respect a color-refinement partition. Good up to 10 vertices.

use std::collections::HashSet;

use crate::graph::{bits, Graph};

/// Largest order the enumerator accepts (45 upper-triangle bits fit a u64).
pub const MAX_CORPUS_ORDER: usize = 10;

fn pair_index(i: usize, j: usize) -> usize {
    debug_assert!(i < j);
    j * (j - 1) / 2 + i
}

/// Stable color refinement. Returned colors are canonical: they depend only
/// on the isomorphism class of the (graph, vertex) pair.
fn refine(g: &Graph) -> Vec<usize> {
    let n = g.order();
    let mut colors: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut classes = {
        let mut c = colors.clone();
        c.sort_unstable();
        c.dedup();
        c.len()
    };
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = g.neighbors(v).map(|u| colors[u]).collect();
                nb.sort_unstable();
                (colors[v], nb)
            })
            .collect();
        let mut uniq = sigs.clone();
        uniq.sort();
        uniq.dedup();
        colors = sigs
            .iter()
            .map(|s| uniq.binary_search(s).unwrap())
            .collect();
        if uniq.len() == classes {
            return colors;
        }
        classes = uniq.len();
    }
}

struct Canon<'a> {
    g: &'a Graph,
    total_bits: usize,
    slots: Vec<u64>,
    placed: Vec<usize>,
    used: u64,
    best: Option<u64>,
}

impl Canon<'_> {
    /// Prefix code for positions `0..placed.len()`, aligned to the full width.
    fn extend(&mut self, code: u64) {
        let j = self.placed.len();
        if j == self.slots.len() {
            if self.best.is_none_or(|b| code > b) {
                self.best = Some(code);
            }
            return;
        }
        let class = self.slots[j];
        let candidates = class & !self.used;
        for v in bits(candidates) {
            let mut c = code;
            for (i, &u) in self.placed.iter().enumerate() {
                if self.g.has_edge(u, v) {
                    c |= 1 << (self.total_bits - 1 - pair_index(i, j));
                }
            }
            if let Some(b) = self.best {
                // Bits for columns 0..=j are final; later columns only add lower bits.
                let width = pair_index(0, j + 1);
                let mask = if width == 0 {
                    0
                } else {
                    !0u64 << (self.total_bits - width)
                };
                if c & mask < b & mask {
                    continue;
                }
            }
            self.placed.push(v);
            self.used |= 1 << v;
            self.extend(c);
            self.used &= !(1 << v);
            self.placed.pop();
        }
    }
}

/// Canonical code of `g`; two graphs of the same order are isomorphic iff
/// their codes agree.
pub fn canonical_code(g: &Graph) -> u64 {
    let n = g.order();
    assert!(
        n <= MAX_CORPUS_ORDER,
        "canonical codes support n <= {MAX_CORPUS_ORDER}"
    );
    let colors = refine(g);
    let mut slots = Vec::with_capacity(n);
    let max_color = colors.iter().copied().max().unwrap_or(0);
    for c in 0..=max_color {
        let mask = (0..n)
            .filter(|&v| colors[v] == c)
            .fold(0u64, |m, v| m | 1 << v);
        for _ in 0..mask.count_ones() {
            slots.push(mask);
        }
    }
    let total_bits = n * (n - 1) / 2;
    if total_bits == 0 {
        return 0;
    }
    let mut canon = Canon {
        g,
        total_bits,
        slots,
        placed: Vec::with_capacity(n),
        used: 0,
        best: None,
    };
    canon.extend(0);
    canon.best.unwrap()
}

/// Rebuilds the canonical representative from its code.
pub fn from_code(n: usize, code: u64) -> Graph {
    let total_bits = n * (n - 1) / 2;
    let mut rows = vec![0u64; n];
    for j in 1..n {
        for i in 0..j {
            if code >> (total_bits - 1 - pair_index(i, j)) & 1 == 1 {
                rows[i] |= 1 << j;
                rows[j] |= 1 << i;
            }
        }
    }
    Graph::from_rows(rows)
}

/// One representative of every isomorphism class of graphs on `n`
/// vertices, in canonical labeling, sorted by code.
pub fn all_graphs(n: usize) -> Vec<Graph> {
    assert!((1..=MAX_CORPUS_ORDER).contains(&n));
    let mut level = vec![0u64];
    for k in 2..=n {
        let mut next = HashSet::new();
        for &code in &level {
            let h = from_code(k - 1, code);
            let mut rows = h.rows().to_vec();
            rows.push(0);
            for subset in 0..1u64 << (k - 1) {
                let mut r = rows.clone();
                r[k - 1] = subset;
                for u in bits(subset) {
                    r[u] |= 1 << (k - 1);
                }
                next.insert(canonical_code(&Graph::from_rows(r)));
            }
        }
        level = next.into_iter().collect();
        level.sort_unstable();
    }
    level.sort_unstable();
    level.into_iter().map(|c| from_code(n, c)).collect()
}

/// Connected graphs on exactly `n` vertices, one per isomorphism class.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    all_graphs(n)
        .into_iter()
        .filter(|g| g.is_connected())
        .collect()
}

/// Connected graphs on `1..=max_n` vertices with at most `max_edges` edges,
/// ordered by vertex count and then by canonical code.
pub fn connected_graphs_up_to(max_n: usize, max_edges: usize) -> Vec<Graph> {
    (1..=max_n)
        .flat_map(connected_graphs)
        .filter(|g| g.size() <= max_edges)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{petersen, FamilySpec};

    #[test]
    fn class_counts_match_known_sequences() {
        // Graphs and connected graphs by order (OEIS A000088, A001349).
        let all = [1, 2, 4, 11, 34, 156, 1044];
        let connected = [1, 1, 2, 6, 21, 112, 853];
        for n in 1..=7 {
            let gs = all_graphs(n);
            assert_eq!(gs.len(), all[n - 1], "n = {n}");
            assert_eq!(
                gs.iter().filter(|g| g.is_connected()).count(),
                connected[n - 1]
            );
        }
    }

    #[test]
    fn codes_are_labeling_invariant() {
        let g = petersen();
        let code = canonical_code(&g);
        let perm = [3, 7, 1, 9, 0, 2, 8, 5, 6, 4];
        assert_eq!(canonical_code(&g.permuted(&perm)), code);
        let c10 = FamilySpec::Cycle(10).generate().unwrap();
        assert_ne!(canonical_code(&c10), code);
    }
}
