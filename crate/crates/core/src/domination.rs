//! Exact domination number by branch and bound on closed-neighborhood
//! bitmasks.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{bits, Graph};

/// γ(G) with a minimum dominating set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DominationResult {
    pub gamma: usize,
    /// Sorted vertex indices.
    pub witness: Vec<usize>,
}

/// True iff every vertex outside `set` has a neighbor in `set`.
pub fn is_dominating_set(g: &Graph, set: &[usize]) -> Result<bool> {
    let mut covered = 0u64;
    for &v in set {
        g.check_vertex(v)?;
        covered |= g.closed_row(v);
    }
    Ok(covered == g.vertex_mask())
}

struct Solver<'a> {
    closed: &'a [u64],
    chosen: Vec<usize>,
    best: Option<Vec<usize>>,
    /// Only solutions strictly smaller than this are of interest.
    bound: usize,
    stop_at_first: bool,
}

impl Solver<'_> {
    fn search(&mut self, undominated: u64) {
        if undominated == 0 {
            if self.chosen.len() < self.bound {
                self.bound = self.chosen.len();
                self.best = Some(self.chosen.clone());
            }
            return;
        }
        if self.stop_at_first && self.best.is_some() {
            return;
        }
        // Pick the undominated vertex with the fewest possible dominators.
        let v = bits(undominated)
            .min_by_key(|&v| self.closed[v].count_ones())
            .unwrap();
        let cover = |w: usize| self.closed[w] & undominated;
        let reach = bits(undominated).fold(0u64, |acc, u| acc | self.closed[u]);
        let max_cover = bits(reach).map(|w| cover(w).count_ones()).max().unwrap() as usize;
        let lower = (undominated.count_ones() as usize).div_ceil(max_cover);
        if self.chosen.len() + lower >= self.bound {
            return;
        }
        let options = self.closed[v];
        for w in bits(options) {
            let cw = cover(w);
            // An option whose coverage is contained in another's is never needed.
            let dominated = bits(options).any(|x| {
                let cx = cover(x);
                x != w && cw & !cx == 0 && (cx != cw || x < w)
            });
            if dominated {
                continue;
            }
            self.chosen.push(w);
            self.search(undominated & !cw);
            self.chosen.pop();
            if self.chosen.len() + 1 >= self.bound || (self.stop_at_first && self.best.is_some()) {
                return;
            }
        }
    }
}

/// Greedy maximum-coverage dominating set within `mask`.
fn greedy(closed: &[u64], mask: u64) -> Vec<usize> {
    let mut undominated = mask;
    let mut set = Vec::new();
    while undominated != 0 {
        let w = bits(mask)
            .max_by_key(|&w| ((closed[w] & undominated).count_ones(), std::cmp::Reverse(w)))
            .unwrap();
        set.push(w);
        undominated &= !closed[w];
    }
    set
}

fn closed_rows(g: &Graph) -> Vec<u64> {
    (0..g.order()).map(|v| g.closed_row(v)).collect()
}

fn component_gamma(closed: &[u64], mask: u64) -> Vec<usize> {
    let upper = greedy(closed, mask);
    let mut solver = Solver {
        closed,
        chosen: Vec::new(),
        best: None,
        bound: upper.len(),
        stop_at_first: false,
    };
    solver.search(mask);
    solver.best.unwrap_or(upper)
}

/// Exact γ(G); disconnected graphs are solved per component and summed.
pub fn domination_number(g: &Graph) -> DominationResult {
    let closed = closed_rows(g);
    let mut witness: Vec<usize> = g
        .component_masks()
        .into_iter()
        .flat_map(|c| component_gamma(&closed, c))
        .collect();
    witness.sort_unstable();
    DominationResult {
        gamma: witness.len(),
        witness,
    }
}

/// True iff G has a dominating set with at most `k` vertices.
pub fn has_dominating_set_of_size(g: &Graph, k: usize) -> bool {
    let closed = closed_rows(g);
    let comps = g.component_masks();
    let mut budget = k;
    for (i, &c) in comps.iter().enumerate() {
        let upper = greedy(&closed, c);
        let need = if upper.len() <= 1 {
            upper.len()
        } else {
            let last = i + 1 == comps.len();
            let mut solver = Solver {
                closed: &closed,
                chosen: Vec::new(),
                best: None,
                bound: upper.len().min(budget + 1),
                // Earlier components need their exact minimum so the
                // remaining budget is not understated.
                stop_at_first: last,
            };
            solver.search(c);
            solver.best.map_or(upper.len(), |b| b.len())
        };
        if need > budget {
            return false;
        }
        budget -= need;
    }
    true
}

/// Largest order accepted by [`gamma_oracle`].
pub const ORACLE_MAX_VERTICES: usize = 20;

/// γ(G) by checking vertex subsets in order of increasing size. Independent
/// of the branch-and-bound solver; used to test it.
pub fn gamma_oracle(g: &Graph) -> Result<usize> {
    let n = g.order();
    if n > ORACLE_MAX_VERTICES {
        return Err(Error::SizeLimit(format!(
            "oracle handles at most {ORACLE_MAX_VERTICES} vertices, got {n}"
        )));
    }
    let all = g.vertex_mask();
    for k in 1..=n {
        // Gosper's hack walks the k-subsets of 0..n as bitmasks.
        let mut s: u64 = (1 << k) - 1;
        while s <= all {
            let covered = bits(s).fold(0, |acc, v| acc | g.closed_row(v));
            if covered == all {
                return Ok(k);
            }
            let c = s & s.wrapping_neg();
            let r = s + c;
            s = (((r ^ s) >> 2) / c) | r;
        }
    }
    unreachable!("the full vertex set dominates")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{petersen, FamilySpec};

    fn c(n: usize) -> Graph {
        FamilySpec::Cycle(n).generate().unwrap()
    }

    #[test]
    fn dominating_set_checks() {
        assert!(is_dominating_set(&c(4), &[0, 2]).unwrap());
        assert!(!is_dominating_set(&c(4), &[0]).unwrap());
        let k5 = FamilySpec::Complete(5).generate().unwrap();
        assert!(is_dominating_set(&k5, &[3]).unwrap());
        assert!(matches!(
            is_dominating_set(&k5, &[5]),
            Err(Error::IndexOutOfRange { .. })
        ));
    }

    #[test]
    fn small_domination_numbers() {
        let p3 = FamilySpec::Path(3).generate().unwrap();
        assert_eq!(
            domination_number(&p3),
            DominationResult {
                gamma: 1,
                witness: vec![1]
            }
        );
        assert_eq!(domination_number(&c(7)).gamma, 3);

        let rook = FamilySpec::Rook(3).generate().unwrap();
        let r = domination_number(&rook);
        assert_eq!(r.gamma, 3);
        assert!(is_dominating_set(&rook, &r.witness).unwrap());
    }

    #[test]
    fn oracle_values() {
        assert_eq!(gamma_oracle(&c(4)).unwrap(), 2);
        assert_eq!(gamma_oracle(&Graph::empty(1).unwrap()).unwrap(), 1);
        assert_eq!(gamma_oracle(&petersen()).unwrap(), 3);
        assert!(matches!(
            gamma_oracle(&FamilySpec::Path(21).generate().unwrap()),
            Err(Error::SizeLimit(_))
        ));
    }

    #[test]
    fn disconnected_graphs_sum_components() {
        let g = Graph::from_edges(7, &[(0, 1), (1, 2), (3, 4)]).unwrap();
        let r = domination_number(&g);
        assert_eq!(r.gamma, 4);
        assert_eq!(r.witness, vec![1, 3, 5, 6]);
        assert!(has_dominating_set_of_size(&g, 4));
        assert!(!has_dominating_set_of_size(&g, 3));
    }

    #[test]
    fn decision_version_matches() {
        for n in 3..=20 {
            let g = c(n);
            let gamma = domination_number(&g).gamma;
            assert!(has_dominating_set_of_size(&g, gamma));
            assert!(!has_dominating_set_of_size(&g, gamma - 1));
        }
    }

    #[test]
    fn cycles_follow_ceiling_formula() {
        for n in 3..=30 {
            assert_eq!(domination_number(&c(n)).gamma, n.div_ceil(3), "C_{n}");
        }
    }

    #[test]
    fn witnesses_dominate() {
        let q = FamilySpec::Hypercube(4).generate().unwrap();
        let r = domination_number(&q);
        assert_eq!(r.gamma, 4);
        assert!(is_dominating_set(&q, &r.witness).unwrap());
    }
}
