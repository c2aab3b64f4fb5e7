//! Face tracing.
//!
//! A walk state is a dart `u -> v` together with the local orientation `s`
//! in force when leaving `u`. Crossing the edge multiplies `s` by the edge
//! sign; at `v` the walk continues to the rotation successor of `u` when the
//! orientation is positive and to the predecessor when it is negative. The
//! step map is a permutation of the `4|E|` states whose cycles come in
//! mirror pairs, one pair per face.

use serde::Serialize;

use super::RotationSystem;
use crate::graph::{Edge, Graph};

/// Face boundary walks of an embedding.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FaceTrace {
    /// Each face as a closed sequence of traversed darts `(from, to)`.
    pub faces: Vec<Vec<(usize, usize)>>,
    /// Edges in lexicographic order.
    pub edges: Vec<Edge>,
    /// For edge `i`, the faces on its two sides. For an edge `u < v`, side 0
    /// is the side walked as `u -> v` under positive orientation. Both
    /// entries coincide when the edge lies twice on one face.
    pub edge_sides: Vec<[usize; 2]>,
}

/// Precomputed lookups shared by the full tracer and the face counter.
pub(crate) struct Tables {
    /// Edge index of `(u, v)` for every adjacent pair.
    edge_id: Vec<[u16; 64]>,
    /// Position of neighbor `u` in the rotation of `v`.
    pub(crate) pos: Vec<[u8; 64]>,
}

impl Tables {
    pub(crate) fn new(g: &Graph) -> Self {
        let mut edge_id = vec![[u16::MAX; 64]; g.order()];
        for (i, e) in g.edges().enumerate() {
            edge_id[e.u][e.v] = i as u16;
            edge_id[e.v][e.u] = i as u16;
        }
        Tables {
            edge_id,
            pos: vec![[0; 64]; g.order()],
        }
    }

    pub(crate) fn set_rotation(&mut self, v: usize, rot: &[usize]) {
        for (i, &u) in rot.iter().enumerate() {
            self.pos[v][u] = i as u8;
        }
    }

    /// State index of dart `u -> v` with orientation `negative`.
    #[inline]
    fn state(&self, u: usize, v: usize, negative: bool) -> usize {
        let e = self.edge_id[u][v] as usize;
        (e * 2 + (u > v) as usize) * 2 + negative as usize
    }
}

/// One step of the face walk.
#[inline]
pub(crate) fn step(
    rotation: &[Vec<usize>],
    pos: &[[u8; 64]],
    negative: &[u64],
    u: usize,
    v: usize,
    s_neg: bool,
) -> (usize, usize, bool) {
    let s = s_neg ^ (negative[u] >> v & 1 == 1);
    let rot = &rotation[v];
    let d = rot.len();
    let p = pos[v][u] as usize;
    let w = if s {
        rot[(p + d - 1) % d]
    } else {
        rot[(p + 1) % d]
    };
    (v, w, s)
}

/// Number of faces, reusing caller-owned buffers. `seen` must hold at least
/// `4|E|` entries; it is cleared on return.
pub(crate) fn count_faces(
    g: &Graph,
    tables: &Tables,
    rotation: &[Vec<usize>],
    negative: &[u64],
    all_positive: bool,
    seen: &mut [bool],
) -> usize {
    let m = g.size();
    if m == 0 {
        return 1;
    }
    let mut cycles = 0;
    for u in 0..g.order() {
        for &v in &rotation[u] {
            for s0 in [false, true] {
                // Positive states are closed under the step map when every edge is positive.
                if all_positive && s0 {
                    continue;
                }
                if seen[tables.state(u, v, s0)] {
                    continue;
                }
                cycles += 1;
                let (mut a, mut b, mut s) = (u, v, s0);
                loop {
                    seen[tables.state(a, b, s)] = true;
                    (a, b, s) = step(rotation, &tables.pos, negative, a, b, s);
                    if (a, b, s) == (u, v, s0) {
                        break;
                    }
                }
            }
        }
    }
    seen[..4 * m].iter_mut().for_each(|x| *x = false);
    if all_positive {
        cycles
    } else {
        debug_assert!(cycles % 2 == 0);
        cycles / 2
    }
}

impl FaceTrace {
    pub(crate) fn trace(rs: &RotationSystem) -> FaceTrace {
        let g = rs.graph();
        let edges = g.edge_list();
        let m = edges.len();
        if m == 0 {
            return FaceTrace {
                faces: vec![Vec::new()],
                edges,
                edge_sides: Vec::new(),
            };
        }
        let mut tables = Tables::new(g);
        for v in 0..g.order() {
            tables.set_rotation(v, rs.rotation(v));
        }
        let negative = rs.negative_rows();
        let mut seen = vec![false; 4 * m];
        let mut sides = vec![[usize::MAX; 2]; m];
        let mut faces = Vec::new();
        for u in 0..g.order() {
            for &v in rs.rotation(u) {
                for s0 in [false, true] {
                    if seen[tables.state(u, v, s0)] {
                        continue;
                    }
                    let face = faces.len();
                    let mut walk = Vec::new();
                    let (mut a, mut b, mut s) = (u, v, s0);
                    loop {
                        let crossed = s ^ rs.is_negative(a, b);
                        // The mirror state walks the same side of the edge backwards.
                        seen[tables.state(a, b, s)] = true;
                        seen[tables.state(b, a, !crossed)] = true;
                        let e = tables.edge_id[a][b] as usize;
                        let side = if a < b { s } else { !crossed };
                        debug_assert_eq!(sides[e][side as usize], usize::MAX);
                        sides[e][side as usize] = face;
                        walk.push((a, b));
                        (a, b, s) = step(rs.rotations(), &tables.pos, negative, a, b, s);
                        if (a, b, s) == (u, v, s0) {
                            break;
                        }
                    }
                    faces.push(walk);
                }
            }
        }
        FaceTrace {
            faces,
            edges,
            edge_sides: sides,
        }
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    /// Length of each face walk (edges counted with multiplicity).
    pub fn face_lengths(&self) -> Vec<usize> {
        self.faces.iter().map(Vec::len).collect()
    }

    fn edge_index(&self, e: Edge) -> Option<usize> {
        self.edges.binary_search(&e).ok()
    }

    /// Faces on the two sides of `e`.
    pub fn edge_faces(&self, e: Edge) -> Option<[usize; 2]> {
        self.edge_index(e).map(|i| self.edge_sides[i])
    }

    /// Walk lengths of the faces on the two sides of `e`: the m' and m'' of
    /// the edge.
    pub fn side_lengths(&self, e: Edge) -> Option<(usize, usize)> {
        self.edge_faces(e)
            .map(|[a, b]| (self.faces[a].len(), self.faces[b].len()))
    }
}
