//! Simple undirected graphs on at most 64 vertices.
//!
//! Each adjacency row is a single `u64`, so neighborhood unions and
//! intersections are one machine instruction. Every solver in the crate
//! works on this representation.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest supported vertex count.
pub const MAX_VERTICES: usize = 64;

/// An undirected edge, stored with `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
}

impl Edge {
    /// Normalizes the endpoint order. Panics on a self-loop.
    pub fn new(a: usize, b: usize) -> Self {
        assert_ne!(a, b, "self-loop");
        if a < b {
            Edge { u: a, v: b }
        } else {
            Edge { u: b, v: a }
        }
    }

    /// The endpoint that is not `x`.
    pub fn other(&self, x: usize) -> usize {
        if x == self.u {
            self.v
        } else {
            self.u
        }
    }

    pub fn contains(&self, x: usize) -> bool {
        self.u == x || self.v == x
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.u, self.v)
    }
}

/// Iterates the set bits of a word in increasing order.
pub fn bits(mut word: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if word == 0 {
            None
        } else {
            let i = word.trailing_zeros() as usize;
            word &= word - 1;
            Some(i)
        }
    })
}

/// A simple graph with vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
    labels: Option<Vec<String>>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (i, e) in self.edges().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}-{}", e.u, e.v)?;
        }
        write!(f, "])")
    }
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::SizeLimit(
                "graph must have at least one vertex".into(),
            ));
        }
        if n > MAX_VERTICES {
            return Err(Error::SizeLimit(format!(
                "{n} vertices exceeds the limit of {MAX_VERTICES}"
            )));
        }
        Ok(Graph {
            n,
            adj: vec![0; n],
            labels: None,
        })
    }

    /// Builds a graph from vertex pairs. Repeated pairs (in either order)
    /// collapse to one edge.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(a, b) in edges {
            g.add_edge(a, b)?;
        }
        Ok(g)
    }

    pub(crate) fn from_rows(adj: Vec<u64>) -> Self {
        debug_assert!(!adj.is_empty() && adj.len() <= MAX_VERTICES);
        Graph {
            n: adj.len(),
            adj,
            labels: None,
        }
    }

    pub(crate) fn add_edge(&mut self, a: usize, b: usize) -> Result<()> {
        self.check_vertex(a)?;
        self.check_vertex(b)?;
        if a == b {
            return Err(Error::InvalidEdge(a));
        }
        self.adj[a] |= 1 << b;
        self.adj[b] |= 1 << a;
        Ok(())
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.n {
            return Err(Error::Parse(format!(
                "{} labels for {} vertices",
                labels.len(),
                self.n
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            Err(Error::IndexOutOfRange {
                index: v,
                n: self.n,
            })
        } else {
            Ok(())
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.adj
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Bitmask of all vertices.
    pub fn vertex_mask(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }

    /// Open neighborhood as a bitmask.
    pub fn row(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn rows(&self) -> &[u64] {
        &self.adj
    }

    /// Closed neighborhood N[v] as a bitmask.
    pub fn closed_row(&self, v: usize) -> u64 {
        self.adj[v] | (1 << v)
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> {
        bits(self.adj[v])
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.n && b < self.n && self.adj[a] >> b & 1 == 1
    }

    /// Edges in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        (0..self.n).flat_map(move |u| {
            bits(self.adj[u] & !((2u64 << u).wrapping_sub(1))).map(move |v| Edge { u, v })
        })
    }

    pub fn edge_list(&self) -> Vec<Edge> {
        self.edges().collect()
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn degree_stats(&self) -> DegreeStats {
        let mut sequence: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        sequence.sort_unstable_by(|a, b| b.cmp(a));
        DegreeStats {
            min: *sequence.last().unwrap(),
            max: sequence[0],
            sequence,
        }
    }

    /// N(u) ∩ N(v) as a bitmask; never contains `u` or `v` since the graph
    /// has no loops.
    pub fn common_neighbors(&self, u: usize, v: usize) -> Result<u64> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        Ok(self.adj[u] & self.adj[v] & !(1 << u) & !(1 << v))
    }

    /// G − B on the same vertex set.
    pub fn remove_edges(&self, removed: &[Edge]) -> Result<Graph> {
        let mut g = self.clone();
        for &e in removed {
            if !g.has_edge(e.u, e.v) {
                return Err(Error::EdgeNotFound(e));
            }
            g.adj[e.u] &= !(1 << e.v);
            g.adj[e.v] &= !(1 << e.u);
        }
        Ok(g)
    }

    /// Vertices reachable from `start`, as a bitmask.
    pub fn reach(&self, start: usize) -> u64 {
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for v in bits(frontier) {
                next |= self.adj[v];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen
    }

    /// Connected components as bitmasks, ordered by smallest member.
    pub fn component_masks(&self) -> Vec<u64> {
        let mut out = Vec::new();
        let mut left = self.vertex_mask();
        while left != 0 {
            let c = self.reach(left.trailing_zeros() as usize);
            out.push(c);
            left &= !c;
        }
        out
    }

    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        self.component_masks()
            .into_iter()
            .map(|m| bits(m).collect())
            .collect()
    }

    pub fn is_connected(&self) -> bool {
        self.reach(0) == self.vertex_mask()
    }

    /// Induced subgraph on the vertices of `mask`, relabeled in increasing
    /// order.
    pub fn induced(&self, mask: u64) -> Graph {
        let verts: Vec<usize> = bits(mask).collect();
        let mut rows = vec![0u64; verts.len()];
        for (i, &a) in verts.iter().enumerate() {
            for (j, &b) in verts.iter().enumerate() {
                if self.has_edge(a, b) {
                    rows[i] |= 1 << j;
                }
            }
        }
        Graph::from_rows(rows)
    }

    /// Graph with vertex `v` renamed to `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        let mut rows = vec![0u64; self.n];
        for e in self.edges() {
            let (a, b) = (perm[e.u], perm[e.v]);
            rows[a] |= 1 << b;
            rows[b] |= 1 << a;
        }
        Graph::from_rows(rows)
    }
}

/// Degree summary of a graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeStats {
    /// δ(G)
    pub min: usize,
    /// Δ(G)
    pub max: usize,
    /// Non-increasing.
    pub sequence: Vec<usize>,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c4() -> Graph {
        Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap()
    }

    #[test]
    fn build_small_graphs() {
        let g = c4();
        assert_eq!(g.size(), 4);
        assert!((0..4).all(|v| g.degree(v) == 2));

        let k1 = Graph::from_edges(1, &[]).unwrap();
        assert_eq!((k1.order(), k1.size()), (1, 0));

        let p3 = Graph::from_edges(3, &[(0, 1), (1, 0), (1, 2)]).unwrap();
        assert_eq!(p3.size(), 2);
        assert_eq!(p3.edge_list(), vec![Edge::new(0, 1), Edge::new(1, 2)]);
    }

    #[test]
    fn build_errors() {
        assert!(matches!(
            Graph::from_edges(3, &[(1, 1)]),
            Err(Error::InvalidEdge(1))
        ));
        assert!(matches!(
            Graph::from_edges(3, &[(0, 3)]),
            Err(Error::IndexOutOfRange { index: 3, n: 3 })
        ));
        assert!(matches!(
            Graph::from_edges(65, &[]),
            Err(Error::SizeLimit(_))
        ));
        assert!(Graph::from_edges(64, &[(0, 63)]).is_ok());
    }

    #[test]
    fn edges_of_vertex_63() {
        let g = Graph::from_edges(64, &[(62, 63), (0, 63)]).unwrap();
        assert_eq!(g.edge_list(), vec![Edge::new(0, 63), Edge::new(62, 63)]);
        assert_eq!(g.vertex_mask(), u64::MAX);
    }

    #[test]
    fn common_neighbor_examples() {
        let k4 = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(
            bits(k4.common_neighbors(0, 1).unwrap()).collect::<Vec<_>>(),
            vec![2, 3]
        );
        assert_eq!(c4().common_neighbors(0, 1).unwrap(), 0);
        let k3 = Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(k3.common_neighbors(0, 1).unwrap(), 0b100);
        assert!(matches!(
            k3.common_neighbors(0, 7),
            Err(Error::IndexOutOfRange { .. })
        ));
    }

    #[test]
    fn remove_and_components() {
        let g = c4();
        let p4 = g.remove_edges(&[Edge::new(0, 1)]).unwrap();
        assert_eq!(p4.size(), 3);
        assert!(p4.is_connected());

        let k3 = Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let h = k3
            .remove_edges(&[Edge::new(0, 1), Edge::new(1, 2)])
            .unwrap();
        assert_eq!(h.connected_components(), vec![vec![0, 2], vec![1]]);

        let two = g.remove_edges(&[Edge::new(0, 1), Edge::new(2, 3)]).unwrap();
        assert_eq!(two.order(), 4);
        assert_eq!(two.connected_components(), vec![vec![0, 3], vec![1, 2]]);

        assert!(matches!(
            two.remove_edges(&[Edge::new(0, 1)]),
            Err(Error::EdgeNotFound(_))
        ));

        let k1 = Graph::empty(1).unwrap();
        assert_eq!(k1.connected_components(), vec![vec![0]]);
    }

    #[test]
    fn degree_stats_of_star() {
        let star = Graph::from_edges(6, &[(0, 1), (0, 2), (0, 3), (0, 4), (0, 5)]).unwrap();
        let s = star.degree_stats();
        assert_eq!((s.min, s.max), (1, 5));
        assert_eq!(s.sequence, vec![5, 1, 1, 1, 1, 1]);
    }
}
