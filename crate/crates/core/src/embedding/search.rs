//! Exhaustive minimum-genus search over rotation systems.
//!
//! Vertex flips act on embeddings without changing the surface. Flipping all
//! vertices at once reverses every rotation and keeps every sign, so one
//! vertex's rotation only needs to be enumerated up to reversal. Flipping
//! along a spanning tree makes every tree edge positive, so signatures only
//! range over the non-tree edges. Every flip class of embeddings is visited
//! exactly once under these two normalizations.

use std::collections::VecDeque;

use serde::Serialize;

use super::faces::{count_faces, Tables};
use super::{RotationSystem, SurfaceClass};
use crate::error::{Error, Result};
use crate::graph::{bits, Edge, Graph};

/// Default cap on face traces per search.
pub const DEFAULT_TRACE_BUDGET: u64 = 100_000_000;

/// Cap on the number of embeddings a genus search may trace.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GenusBudget {
    max_traces: u64,
}

impl GenusBudget {
    pub fn new(max_traces: u64) -> Result<Self> {
        if max_traces == 0 {
            return Err(Error::Parse("trace budget must be at least 1".into()));
        }
        Ok(GenusBudget { max_traces })
    }

    pub fn max_traces(&self) -> u64 {
        self.max_traces
    }
}

impl Default for GenusBudget {
    fn default() -> Self {
        GenusBudget {
            max_traces: DEFAULT_TRACE_BUDGET,
        }
    }
}

/// Minimum genus of one surface class, with a witness embedding.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GenusResult {
    pub class: SurfaceClass,
    pub genus: usize,
    /// `None` only for acyclic graphs in the non-orientable class: every
    /// signature on a forest is switchable to all-positive.
    #[serde(skip)]
    pub witness: Option<RotationSystem>,
    /// Embeddings traced before the search stopped.
    pub traces: u64,
}

/// Steps `items` to its next lexicographic permutation. Returns false, and
/// leaves `items` sorted, after the last one.
fn next_permutation(items: &mut [usize]) -> bool {
    let Some(i) = items.windows(2).rposition(|w| w[0] < w[1]) else {
        items.reverse();
        return false;
    };
    let j = items.iter().rposition(|&x| x > items[i]).unwrap();
    items.swap(i, j);
    items[i + 1..].reverse();
    true
}

/// Advances the cyclic order at one vertex. The first neighbor stays in
/// front; with `up_to_reversal` only one of each mirror pair is produced.
/// Returns false when the orders wrap around to the first one.
fn next_cyclic_order(order: &mut [usize], up_to_reversal: bool) -> bool {
    if order.len() <= 2 {
        return false;
    }
    let rest = &mut order[1..];
    loop {
        if !next_permutation(rest) {
            return false;
        }
        if !up_to_reversal || rest[0] < rest[rest.len() - 1] {
            return true;
        }
    }
}

/// BFS spanning tree from `root`; returns the non-tree edges in
/// lexicographic order.
fn non_tree_edges(g: &Graph, root: usize) -> Vec<Edge> {
    let mut parent = vec![usize::MAX; g.order()];
    parent[root] = root;
    let mut queue = VecDeque::from([root]);
    let mut tree = Vec::new();
    while let Some(v) = queue.pop_front() {
        for u in g.neighbors(v) {
            if parent[u] == usize::MAX {
                parent[u] = v;
                tree.push(Edge::new(u, v));
                queue.push_back(u);
            }
        }
    }
    g.edges().filter(|e| !tree.contains(e)).collect()
}

/// Length of a shortest cycle, or `None` for a forest.
pub(crate) fn girth(g: &Graph) -> Option<usize> {
    let mut best: Option<usize> = None;
    for root in 0..g.order() {
        let mut dist = vec![usize::MAX; g.order()];
        let mut parent = vec![usize::MAX; g.order()];
        dist[root] = 0;
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for u in g.neighbors(v) {
                if dist[u] == usize::MAX {
                    dist[u] = dist[v] + 1;
                    parent[u] = v;
                    queue.push_back(u);
                } else if parent[v] != u {
                    let len = dist[u] + dist[v] + 1;
                    best = Some(best.map_or(len, |b| b.min(len)));
                }
            }
        }
    }
    best
}

/// Minimum orientable or non-orientable genus of a connected graph, by
/// exhaustive search over flip classes of embeddings.
///
/// Stops early once a face count meets the bound `F <= 2|E| / girth`. For a
/// planar graph the non-orientable genus is reported as 1. Exhausting the
/// budget yields [`Error::BudgetExceeded`] carrying the best embedding seen.
pub fn min_genus(g: &Graph, class: SurfaceClass, budget: GenusBudget) -> Result<GenusResult> {
    if !g.is_connected() {
        return Err(Error::RequiresConnected);
    }
    let n = g.order();
    let m = g.size();
    let nonorientable = class == SurfaceClass::NonOrientable;
    let root = (0..n)
        .max_by_key(|&v| (g.degree(v), std::cmp::Reverse(v)))
        .unwrap();
    let chords = non_tree_edges(g, root);
    if nonorientable && chords.is_empty() {
        return Ok(GenusResult {
            class,
            genus: 1,
            witness: None,
            traces: 0,
        });
    }
    if m == 0 {
        return Ok(GenusResult {
            class,
            genus: 0,
            witness: Some(RotationSystem::sorted(g.clone())),
            traces: 0,
        });
    }

    let max_faces = match girth(g) {
        Some(gi) => {
            let f = 2 * m / gi;
            // Orientable Euler genus is even; non-orientable is at least 1.
            let eg = (2 + m).saturating_sub(n + f);
            let eg = if nonorientable {
                eg.max(1)
            } else {
                eg + eg % 2
            };
            2 + m - n - eg
        }
        None => 1,
    };

    if nonorientable && chords.len() >= 64 {
        // 2^64 signature classes; no budget can cover them.
        return Err(Error::BudgetExceeded {
            budget: budget.max_traces(),
            best: None,
        });
    }
    let sign_classes: u64 = if nonorientable {
        (1u64 << chords.len()) - 1
    } else {
        1
    };

    let mut rotation: Vec<Vec<usize>> = (0..n).map(|v| g.neighbors(v).collect()).collect();
    let mut tables = Tables::new(g);
    for (v, rot) in rotation.iter().enumerate() {
        tables.set_rotation(v, rot);
    }
    let mut negative = vec![0u64; n];
    let mut seen = vec![false; 4 * m];
    let mut traces = 0u64;
    let mut best: Option<(usize, Vec<Vec<usize>>, Vec<u64>)> = None;

    let finish = |faces: usize, rotation: Vec<Vec<usize>>, negative: Vec<u64>, traces: u64| {
        let eg = 2 + m - n - faces;
        GenusResult {
            class,
            genus: if nonorientable { eg } else { eg / 2 },
            witness: Some(RotationSystem::from_parts_unchecked(
                g.clone(),
                rotation,
                negative,
            )),
            traces,
        }
    };

    loop {
        for mask in 0..sign_classes {
            let mask = if nonorientable { mask + 1 } else { 0 };
            negative.iter_mut().for_each(|r| *r = 0);
            for i in bits(mask) {
                let e = chords[i];
                negative[e.u] |= 1 << e.v;
                negative[e.v] |= 1 << e.u;
            }
            if traces == budget.max_traces() {
                return Err(Error::BudgetExceeded {
                    budget: budget.max_traces(),
                    best: best.map(|(f, r, s)| Box::new(finish(f, r, s, traces))),
                });
            }
            traces += 1;
            let faces = count_faces(g, &tables, &rotation, &negative, !nonorientable, &mut seen);
            if best.as_ref().is_none_or(|b| faces > b.0) {
                best = Some((faces, rotation.clone(), negative.clone()));
                if faces >= max_faces {
                    let (f, r, s) = best.unwrap();
                    return Ok(finish(f, r, s, traces));
                }
            }
        }
        // Odometer over the per-vertex cyclic orders.
        let mut v = 0;
        loop {
            if v == n {
                let (f, r, s) = best.unwrap();
                return Ok(finish(f, r, s, traces));
            }
            let advanced = next_cyclic_order(&mut rotation[v], v == root);
            tables.set_rotation(v, &rotation[v]);
            if advanced {
                break;
            }
            v += 1;
        }
    }
}

/// Calls `visit` once per flip class of embeddings of a connected graph,
/// orientable classes included. Returns the number of classes visited.
pub fn for_each_embedding(g: &Graph, mut visit: impl FnMut(&RotationSystem)) -> Result<u64> {
    if !g.is_connected() {
        return Err(Error::RequiresConnected);
    }
    let n = g.order();
    let root = (0..n)
        .max_by_key(|&v| (g.degree(v), std::cmp::Reverse(v)))
        .unwrap();
    let chords = non_tree_edges(g, root);
    if chords.len() >= 64 {
        return Err(Error::SizeLimit(format!("{} non-tree edges", chords.len())));
    }
    let mut rotation: Vec<Vec<usize>> = (0..n).map(|v| g.neighbors(v).collect()).collect();
    let mut count = 0;
    loop {
        for mask in 0..1u64 << chords.len() {
            let negative: Vec<Edge> = bits(mask).map(|i| chords[i]).collect();
            let rs = RotationSystem::new(g.clone(), rotation.clone(), &negative)?;
            visit(&rs);
            count += 1;
        }
        let mut v = 0;
        loop {
            if v == n {
                return Ok(count);
            }
            if next_cyclic_order(&mut rotation[v], v == root) {
                break;
            }
            v += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{petersen, FamilySpec};

    #[test]
    fn embedding_class_counts() {
        let k4 = FamilySpec::Complete(4).generate().unwrap();
        // 2^3 rotation choices off the root, 2^3 signatures on the chords.
        let mut orientable = 0;
        let n =
            for_each_embedding(&k4, |rs| orientable += rs.is_orientable().unwrap() as u64).unwrap();
        assert_eq!((n, orientable), (64, 8));
        let tree = FamilySpec::Star(3).generate().unwrap();
        assert_eq!(for_each_embedding(&tree, |_| {}).unwrap(), 1);
    }

    fn genus(g: &Graph, class: SurfaceClass) -> usize {
        min_genus(g, class, GenusBudget::default()).unwrap().genus
    }

    fn count_orders(d: usize, up_to_reversal: bool) -> usize {
        let mut order: Vec<usize> = (0..d).collect();
        let mut count = 1;
        while next_cyclic_order(&mut order, up_to_reversal) {
            count += 1;
        }
        assert_eq!(order, (0..d).collect::<Vec<_>>(), "wraps back to sorted");
        count
    }

    #[test]
    fn cyclic_order_counts() {
        assert_eq!(count_orders(4, false), 6);
        assert_eq!(count_orders(4, true), 3);
        assert_eq!(count_orders(5, true), 12);
        assert_eq!(count_orders(6, false), 120);
        assert_eq!(count_orders(2, true), 1);
        assert_eq!(count_orders(1, false), 1);
    }

    #[test]
    fn girths() {
        assert_eq!(girth(&FamilySpec::Complete(4).generate().unwrap()), Some(3));
        assert_eq!(
            girth(&FamilySpec::CompleteBipartite(3, 3).generate().unwrap()),
            Some(4)
        );
        assert_eq!(girth(&petersen()), Some(5));
        assert_eq!(girth(&FamilySpec::Path(5).generate().unwrap()), None);
    }

    #[test]
    fn small_genera() {
        let k4 = FamilySpec::Complete(4).generate().unwrap();
        let k5 = FamilySpec::Complete(5).generate().unwrap();
        let k33 = FamilySpec::CompleteBipartite(3, 3).generate().unwrap();
        assert_eq!(genus(&k4, SurfaceClass::Orientable), 0);
        assert_eq!(genus(&k5, SurfaceClass::Orientable), 1);
        assert_eq!(genus(&k33, SurfaceClass::Orientable), 1);
        assert_eq!(genus(&k4, SurfaceClass::NonOrientable), 1);
        assert_eq!(genus(&k5, SurfaceClass::NonOrientable), 1);
        assert_eq!(genus(&k33, SurfaceClass::NonOrientable), 1);
    }

    #[test]
    fn wheel_hub_rotation_is_not_fixed() {
        // The plane embedding of a wheel is unique up to mirror image, so a
        // search that pinned the hub to an arbitrary cyclic order would miss it.
        let w = FamilySpec::Wheel(5).generate().unwrap();
        assert_eq!(genus(&w, SurfaceClass::Orientable), 0);
    }

    #[test]
    fn witnesses_realize_the_genus() {
        let k5 = FamilySpec::Complete(5).generate().unwrap();
        for class in [SurfaceClass::Orientable, SurfaceClass::NonOrientable] {
            let r = min_genus(&k5, class, GenusBudget::default()).unwrap();
            let s = r.witness.unwrap().summary().unwrap();
            assert_eq!(s.class(), class);
            assert_eq!(s.genus, r.genus);
        }
    }

    #[test]
    fn trees() {
        let p = FamilySpec::Path(4).generate().unwrap();
        assert_eq!(genus(&p, SurfaceClass::Orientable), 0);
        let r = min_genus(&p, SurfaceClass::NonOrientable, GenusBudget::default()).unwrap();
        assert_eq!((r.genus, r.witness.is_none()), (1, true));
        let k1 = Graph::empty(1).unwrap();
        assert_eq!(genus(&k1, SurfaceClass::Orientable), 0);
    }

    #[test]
    fn budget_exhaustion_is_reported() {
        let k5 = FamilySpec::Complete(5).generate().unwrap();
        let err =
            min_genus(&k5, SurfaceClass::Orientable, GenusBudget::new(3).unwrap()).unwrap_err();
        match err {
            Error::BudgetExceeded { budget, best } => {
                assert_eq!(budget, 3);
                let best = best.unwrap();
                assert!(best.genus >= 1);
                assert_eq!(best.traces, 3);
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(GenusBudget::new(0).is_err());
    }

    #[test]
    fn disconnected_rejected() {
        let g = Graph::from_edges(3, &[(0, 1)]).unwrap();
        assert!(matches!(
            min_genus(&g, SurfaceClass::Orientable, GenusBudget::default()),
            Err(Error::RequiresConnected)
        ));
    }
}
