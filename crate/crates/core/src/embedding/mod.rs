//! Combinatorial surface embeddings.
//!
//! An embedding is a rotation system (a cyclic order of the neighbors around
//! every vertex) together with an edge signature. Negative edges reverse the
//! local orientation when a face walk crosses them. A signature that can be
//! switched to all-positive by vertex flips describes an orientable surface;
//! any other signature describes a non-orientable one.

mod faces;
mod format;
mod search;

pub use faces::FaceTrace;
pub use format::{parse_embedding, write_embedding};
pub use search::{for_each_embedding, min_genus, GenusBudget, GenusResult, DEFAULT_TRACE_BUDGET};

use std::collections::VecDeque;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{bits, Edge, Graph};

/// Orientable (`S_h`) or non-orientable (`N_k`) surfaces.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SurfaceClass {
    Orientable,
    NonOrientable,
}

impl fmt::Display for SurfaceClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SurfaceClass::Orientable => "orientable",
            SurfaceClass::NonOrientable => "non-orientable",
        })
    }
}

impl std::str::FromStr for SurfaceClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "orientable" | "o" => Ok(SurfaceClass::Orientable),
            "non-orientable" | "nonorientable" | "n" => Ok(SurfaceClass::NonOrientable),
            _ => Err(Error::Parse(format!("unknown surface class {s:?}"))),
        }
    }
}

/// A rotation system with an edge signature over an owned graph.
///
/// Construction validates that every vertex's rotation is a permutation of
/// exactly its neighbors, so a `RotationSystem` value is always well formed.
#[derive(Clone, PartialEq, Eq)]
pub struct RotationSystem {
    graph: Graph,
    rotation: Vec<Vec<usize>>,
    negative: Vec<u64>,
}

impl fmt::Debug for RotationSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(write_embedding(self).trim_end())
    }
}

impl RotationSystem {
    /// Builds and validates an embedding from per-vertex neighbor cycles.
    pub fn new(graph: Graph, rotation: Vec<Vec<usize>>, negative: &[Edge]) -> Result<Self> {
        let mut neg = vec![0u64; graph.order()];
        for &e in negative {
            if !graph.has_edge(e.u, e.v) {
                return Err(Error::InvalidRotation(format!(
                    "signed edge {e} is not an edge"
                )));
            }
            neg[e.u] |= 1 << e.v;
            neg[e.v] |= 1 << e.u;
        }
        let rs = RotationSystem {
            graph,
            rotation,
            negative: neg,
        };
        rs.validate()?;
        Ok(rs)
    }

    /// Builds an embedding whose rotations list incident edges rather than
    /// neighbors.
    pub fn from_edge_rotations(
        graph: Graph,
        rotation: Vec<Vec<Edge>>,
        negative: &[Edge],
    ) -> Result<Self> {
        if rotation.len() != graph.order() {
            return Err(Error::InvalidRotation(format!(
                "{} rotations for {} vertices",
                rotation.len(),
                graph.order()
            )));
        }
        let mut nbrs = Vec::with_capacity(rotation.len());
        for (v, edges) in rotation.iter().enumerate() {
            let mut row = Vec::with_capacity(edges.len());
            for e in edges {
                if !e.contains(v) {
                    return Err(Error::InvalidRotation(format!(
                        "edge {e} in the rotation of vertex {v} is not incident to it"
                    )));
                }
                row.push(e.other(v));
            }
            nbrs.push(row);
        }
        RotationSystem::new(graph, nbrs, negative)
    }

    /// Neighbors in increasing order around every vertex, all edges positive.
    pub fn sorted(graph: Graph) -> Self {
        let rotation = (0..graph.order())
            .map(|v| graph.neighbors(v).collect())
            .collect();
        let negative = vec![0; graph.order()];
        RotationSystem {
            graph,
            rotation,
            negative,
        }
    }

    pub(crate) fn from_parts_unchecked(
        graph: Graph,
        rotation: Vec<Vec<usize>>,
        negative: Vec<u64>,
    ) -> Self {
        let rs = RotationSystem {
            graph,
            rotation,
            negative,
        };
        debug_assert!(rs.validate().is_ok());
        rs
    }

    /// Checks both structural invariants: each rotation is a permutation of
    /// the vertex's neighbors, and the signature only marks real edges.
    pub fn validate(&self) -> Result<&Self> {
        let g = &self.graph;
        if self.rotation.len() != g.order() {
            return Err(Error::InvalidRotation(format!(
                "{} rotations for {} vertices",
                self.rotation.len(),
                g.order()
            )));
        }
        for (v, rot) in self.rotation.iter().enumerate() {
            let mut seen = 0u64;
            for &u in rot {
                if u >= g.order() || !g.has_edge(v, u) {
                    return Err(Error::InvalidRotation(format!(
                        "vertex {v} lists {u}, which is not a neighbor"
                    )));
                }
                if seen >> u & 1 == 1 {
                    return Err(Error::InvalidRotation(format!(
                        "vertex {v} lists neighbor {u} twice"
                    )));
                }
                seen |= 1 << u;
            }
            if seen != g.row(v) {
                let missing = bits(g.row(v) & !seen).next().unwrap();
                return Err(Error::InvalidRotation(format!(
                    "edge {} missing from the rotation of vertex {v}",
                    Edge::new(v, missing)
                )));
            }
        }
        for v in 0..g.order() {
            if self.negative[v] & !g.row(v) != 0 {
                return Err(Error::InvalidRotation("signature marks a non-edge".into()));
            }
        }
        Ok(self)
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    /// Neighbors of `v` in cyclic order.
    pub fn rotation(&self, v: usize) -> &[usize] {
        &self.rotation[v]
    }

    pub fn rotations(&self) -> &[Vec<usize>] {
        &self.rotation
    }

    pub fn is_negative(&self, u: usize, v: usize) -> bool {
        self.negative[u] >> v & 1 == 1
    }

    /// +1 or -1.
    pub fn sign(&self, e: Edge) -> i8 {
        if self.is_negative(e.u, e.v) {
            -1
        } else {
            1
        }
    }

    pub(crate) fn negative_rows(&self) -> &[u64] {
        &self.negative
    }

    /// Negative edges in lexicographic order.
    pub fn negative_edges(&self) -> Vec<Edge> {
        self.graph
            .edges()
            .filter(|e| self.is_negative(e.u, e.v))
            .collect()
    }

    /// Local flip at `v`: reverse its rotation and negate its edges. The
    /// result describes the same embedding.
    pub fn flip(&self, v: usize) -> RotationSystem {
        let mut out = self.clone();
        out.rotation[v].reverse();
        let row = self.graph.row(v);
        out.negative[v] ^= row;
        for u in bits(row) {
            out.negative[u] ^= 1 << v;
        }
        out
    }

    /// True iff vertex flips can make every edge positive.
    ///
    /// Flips along a BFS tree from vertex 0 make all tree edges positive; the
    /// embedding is orientable iff every remaining edge is then positive.
    pub fn is_orientable(&self) -> Result<bool> {
        let g = &self.graph;
        if !g.is_connected() {
            return Err(Error::RequiresConnected);
        }
        let mut flipped = vec![None; g.order()];
        flipped[0] = Some(false);
        let mut queue = VecDeque::from([0]);
        while let Some(v) = queue.pop_front() {
            let fv = flipped[v].unwrap();
            for u in g.neighbors(v) {
                let want = fv ^ self.is_negative(u, v);
                match flipped[u] {
                    None => {
                        flipped[u] = Some(want);
                        queue.push_back(u);
                    }
                    Some(fu) if fu != want => return Ok(false),
                    Some(_) => {}
                }
            }
        }
        Ok(true)
    }

    /// Face boundary walks of the embedding.
    pub fn trace_faces(&self) -> Result<FaceTrace> {
        if !self.graph.is_connected() {
            return Err(Error::RequiresConnected);
        }
        Ok(FaceTrace::trace(self))
    }

    /// Vertex, edge and face counts plus the surface they imply.
    pub fn summary(&self) -> Result<EmbeddingSummary> {
        let faces = self.trace_faces()?.face_count();
        let orientable = self.is_orientable()?;
        Ok(EmbeddingSummary::new(
            self.graph.order(),
            self.graph.size(),
            faces,
            orientable,
        ))
    }
}

/// Validates an embedding given as neighbor cycles plus negative edges.
pub fn validate_embedding(
    graph: Graph,
    rotation: Vec<Vec<usize>>,
    negative: &[Edge],
) -> Result<RotationSystem> {
    RotationSystem::new(graph, rotation, negative)
}

/// Counts and surface of one embedding.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct EmbeddingSummary {
    pub vertices: usize,
    pub edges: usize,
    pub faces: usize,
    /// 2 − (V − E + F).
    pub euler_genus: usize,
    pub orientable: bool,
    /// h for orientable embeddings, k otherwise.
    pub genus: usize,
}

impl EmbeddingSummary {
    pub(crate) fn new(vertices: usize, edges: usize, faces: usize, orientable: bool) -> Self {
        let chi = vertices as i64 - edges as i64 + faces as i64;
        assert!(chi <= 2, "Euler characteristic above 2");
        let euler_genus = (2 - chi) as usize;
        let genus = if orientable {
            assert!(
                euler_genus.is_multiple_of(2),
                "orientable embedding with odd Euler genus"
            );
            euler_genus / 2
        } else {
            euler_genus
        };
        EmbeddingSummary {
            vertices,
            edges,
            faces,
            euler_genus,
            orientable,
            genus,
        }
    }

    pub fn class(&self) -> SurfaceClass {
        if self.orientable {
            SurfaceClass::Orientable
        } else {
            SurfaceClass::NonOrientable
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::FamilySpec;

    fn k4() -> Graph {
        FamilySpec::Complete(4).generate().unwrap()
    }

    /// A plane drawing of K_4: triangle 0,1,2 with 3 in the middle.
    pub(crate) fn planar_k4() -> RotationSystem {
        RotationSystem::new(
            k4(),
            vec![vec![1, 3, 2], vec![2, 3, 0], vec![0, 3, 1], vec![0, 1, 2]],
            &[],
        )
        .unwrap()
    }

    #[test]
    fn validation() {
        let c4 = FamilySpec::Cycle(4).generate().unwrap();
        assert!(RotationSystem::new(
            c4.clone(),
            vec![vec![1, 3], vec![2, 0], vec![3, 1], vec![0, 2]],
            &[]
        )
        .is_ok());
        assert!(RotationSystem::new(
            c4.clone(),
            vec![vec![3, 1], vec![0, 2], vec![1, 3], vec![2, 0]],
            &[]
        )
        .is_ok());

        let k3 = FamilySpec::Complete(3).generate().unwrap();
        let bad = RotationSystem::from_edge_rotations(
            k3.clone(),
            vec![
                vec![Edge::new(0, 1), Edge::new(1, 2)],
                vec![Edge::new(0, 1), Edge::new(1, 2)],
                vec![Edge::new(0, 2), Edge::new(1, 2)],
            ],
            &[],
        );
        assert!(matches!(bad, Err(Error::InvalidRotation(_))));

        let repeated =
            RotationSystem::new(k3.clone(), vec![vec![1, 1], vec![0, 2], vec![0, 1]], &[]);
        assert!(matches!(repeated, Err(Error::InvalidRotation(_))));
        let missing = RotationSystem::new(k3.clone(), vec![vec![1], vec![0, 2], vec![0, 1]], &[]);
        assert!(matches!(missing, Err(Error::InvalidRotation(_))));
        let foreign = RotationSystem::new(
            c4,
            vec![vec![1, 2], vec![2, 0], vec![3, 1], vec![0, 2]],
            &[],
        );
        assert!(matches!(foreign, Err(Error::InvalidRotation(_))));

        let p3 = FamilySpec::Path(3).generate().unwrap();
        assert!(RotationSystem::new(p3, vec![vec![1], vec![0, 2], vec![1]], &[]).is_ok());
    }

    #[test]
    fn orientability_of_triangles() {
        let k3 = FamilySpec::Complete(3).generate().unwrap();
        let all_pos = RotationSystem::sorted(k3.clone());
        assert!(all_pos.is_orientable().unwrap());

        let one = RotationSystem::new(
            k3.clone(),
            vec![vec![1, 2], vec![0, 2], vec![0, 1]],
            &[Edge::new(0, 1)],
        )
        .unwrap();
        assert!(!one.is_orientable().unwrap());

        let two = RotationSystem::new(
            k3,
            vec![vec![1, 2], vec![0, 2], vec![0, 1]],
            &[Edge::new(0, 1), Edge::new(1, 2)],
        )
        .unwrap();
        assert!(two.is_orientable().unwrap());
        let flipped = two.flip(1);
        assert!(flipped.negative_edges().is_empty());
    }

    #[test]
    fn k4_summaries() {
        let s = planar_k4().summary().unwrap();
        assert_eq!(
            (
                s.vertices,
                s.edges,
                s.faces,
                s.euler_genus,
                s.orientable,
                s.genus
            ),
            (4, 6, 4, 0, true, 0)
        );
        // A crosscap on the non-tree edge (1,2) of the plane drawing merges two faces.
        let rs = RotationSystem::new(k4(), planar_k4().rotations().to_vec(), &[Edge::new(1, 2)])
            .unwrap();
        let s = rs.summary().unwrap();
        assert_eq!(
            (s.faces, s.euler_genus, s.orientable, s.genus),
            (3, 1, false, 1)
        );
    }

    #[test]
    fn disconnected_is_rejected() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        let rs = RotationSystem::sorted(g);
        assert!(matches!(rs.trace_faces(), Err(Error::RequiresConnected)));
        assert!(matches!(rs.is_orientable(), Err(Error::RequiresConnected)));
    }
}
