use bondlab::bondage::{bondage_number, bondage_oracle, degree_bound, hr_bound};
use bondlab::corpus::{all_graphs, connected_graphs, connected_graphs_up_to};
use bondlab::domination::{domination_number, gamma_oracle, is_dominating_set};
use bondlab::embedding::{for_each_embedding, min_genus, GenusBudget, SurfaceClass};
use bondlab::error::Error;
use bondlab::family::FamilySpec;
use bondlab::graph::{bits, Graph};

fn gnp(n: usize, num: u64, seed: u64) -> Graph {
    FamilySpec::Gnp {
        n,
        num,
        den: 10,
        seed,
    }
    .generate()
    .unwrap()
}

#[test]
fn gamma_matches_oracle_on_random_graphs() {
    for seed in 0..500u64 {
        let n = 1 + (seed % 16) as usize;
        let g = gnp(n, 1 + seed % 7, seed);
        let r = domination_number(&g);
        assert_eq!(r.gamma, gamma_oracle(&g).unwrap(), "seed {seed}");
        assert!(is_dominating_set(&g, &r.witness).unwrap());
    }
}

#[test]
fn bondage_matches_oracle_on_random_graphs() {
    let mut checked = 0;
    let mut seed = 0u64;
    while checked < 300 {
        seed += 1;
        let g = gnp(3 + (seed % 6) as usize, 2 + seed % 6, seed);
        if g.size() == 0 || g.size() > 14 {
            continue;
        }
        let r = bondage_number(&g, None).unwrap();
        assert_eq!(r.b, bondage_oracle(&g).unwrap(), "seed {seed}");
        let after = g.remove_edges(&r.witness).unwrap();
        assert!(gamma_oracle(&after).unwrap() > r.base_gamma);
        checked += 1;
    }
}

#[test]
fn default_cap_always_suffices() {
    for n in 2..=7 {
        for g in all_graphs(n).iter().filter(|g| g.size() > 0) {
            match bondage_number(g, None) {
                Ok(r) => assert!(r.b <= hr_bound(g).unwrap().value),
                Err(Error::CapTooSmall { .. }) => panic!("cap too small on {g:?}"),
                Err(e) => panic!("{e}"),
            }
        }
    }
}

#[test]
fn lemma_chain_on_small_graphs() {
    for n in 2..=6 {
        for g in connected_graphs(n) {
            let b = bondage_number(&g, None).unwrap().b;
            let hr = hr_bound(&g).unwrap().value;
            assert!(b <= hr && hr <= degree_bound(&g).unwrap());
        }
    }
}

/// True iff some 3+3 split of the six vertices has all nine cross edges.
fn contains_k33(g: &Graph) -> bool {
    if g.order() != 6 {
        return false;
    }
    (0u64..64)
        .filter(|s| s.count_ones() == 3 && s & 1 == 1)
        .any(|side| {
            let other = 63 & !side;
            bits(side).all(|a| bits(other).all(|b| g.has_edge(a, b)))
        })
}

// With at most six vertices and nine edges a Kuratowski subgraph can only be
// K_{3,3} itself: K_5 and its subdivisions need ten edges.
#[test]
fn planarity_agrees_with_kuratowski() {
    let budget = GenusBudget::default();
    let mut nonplanar = 0;
    for g in connected_graphs_up_to(6, 9) {
        let h = min_genus(&g, SurfaceClass::Orientable, budget)
            .unwrap()
            .genus;
        assert_eq!(h > 0, contains_k33(&g), "{g:?}");
        nonplanar += (h > 0) as usize;
    }
    assert_eq!(nonplanar, 1);
}

#[test]
fn orientable_embeddings_have_even_euler_genus() {
    for n in 1..=5 {
        for g in connected_graphs(n) {
            for_each_embedding(&g, |rs| {
                let s = rs.summary().unwrap();
                if s.orientable {
                    assert_eq!(s.euler_genus % 2, 0);
                }
            })
            .unwrap();
        }
    }
}

#[test]
fn genus_search_matches_full_enumeration() {
    for n in 1..=5 {
        for g in connected_graphs(n) {
            let mut best = [usize::MAX; 2];
            for_each_embedding(&g, |rs| {
                let s = rs.summary().unwrap();
                let slot = &mut best[(!s.orientable) as usize];
                *slot = (*slot).min(s.genus);
            })
            .unwrap();
            let h = min_genus(&g, SurfaceClass::Orientable, GenusBudget::default()).unwrap();
            assert_eq!(h.genus, best[0]);
            let k = min_genus(&g, SurfaceClass::NonOrientable, GenusBudget::default()).unwrap();
            if best[1] != usize::MAX {
                assert_eq!(k.genus, best[1], "{g:?}");
            }
        }
    }
}
