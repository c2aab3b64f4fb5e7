use bondlab::domination::{domination_number, is_dominating_set};
use bondlab::embedding::RotationSystem;
use bondlab::family::FamilySpec;
use bondlab::graph::{Edge, Graph};
use bondlab::io::{parse_graph6, read_graphs, write_edge_list, write_graph6};
use proptest::prelude::*;

fn gnp() -> impl Strategy<Value = Graph> {
    (1usize..=40, 1u64..=9, any::<u64>()).prop_map(|(n, num, seed)| {
        FamilySpec::Gnp {
            n,
            num,
            den: 10,
            seed,
        }
        .generate()
        .unwrap()
    })
}

fn small_graph() -> impl Strategy<Value = Graph> {
    (2usize..=9, any::<u64>()).prop_map(|(n, bits)| {
        let mut edges = Vec::new();
        let mut i = 0;
        for v in 1..n {
            for u in 0..v {
                if bits >> (i % 64) & 1 == 1 {
                    edges.push((u, v));
                }
                i += 1;
            }
        }
        Graph::from_edges(n, &edges).unwrap()
    })
}

fn connected_graph() -> impl Strategy<Value = Graph> {
    small_graph().prop_map(|g| {
        let mut edges: Vec<(usize, usize)> = g.edges().map(|e| (e.u, e.v)).collect();
        edges.extend((1..g.order()).map(|v| (v - 1, v)));
        Graph::from_edges(g.order(), &edges).unwrap()
    })
}

/// A random rotation system: each vertex's neighbors rotated and shuffled
/// by a seed, with a random subset of negative edges.
fn random_embedding(g: &Graph, seed: u64) -> RotationSystem {
    let mut rng = bondlab::family::SplitMix64::new(seed);
    let rotation = (0..g.order())
        .map(|v| {
            let mut nb: Vec<usize> = g.neighbors(v).collect();
            for i in (1..nb.len()).rev() {
                nb.swap(i, (rng.next_u64() % (i as u64 + 1)) as usize);
            }
            nb
        })
        .collect();
    let negative: Vec<Edge> = g
        .edges()
        .filter(|_| rng.next_u64().is_multiple_of(3))
        .collect();
    RotationSystem::new(g.clone(), rotation, &negative).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn graph6_round_trip(g in gnp()) {
        let code = write_graph6(&g);
        prop_assert_eq!(parse_graph6(code.as_bytes()).unwrap(), g.clone());
        prop_assert_eq!(read_graphs(&write_edge_list(&g)).unwrap(), vec![g]);
    }

    #[test]
    fn handshake(g in gnp()) {
        let total: usize = (0..g.order()).map(|v| g.degree(v)).sum();
        prop_assert_eq!(total, 2 * g.size());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn removing_edges(g in small_graph(), pick in any::<u64>()) {
        let edges = g.edge_list();
        let removed: Vec<Edge> = edges.iter().enumerate()
            .filter(|(i, _)| pick >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        let h = g.remove_edges(&removed).unwrap();
        prop_assert_eq!(h.size(), g.size() - removed.len());
        for e in &edges {
            prop_assert_eq!(h.has_edge(e.u, e.v), !removed.contains(e));
        }
    }

    #[test]
    fn gamma_never_drops_when_edges_go(g in small_graph(), pick in any::<u64>()) {
        let before = domination_number(&g);
        prop_assert!(is_dominating_set(&g, &before.witness).unwrap());
        if let Some(e) = g.edge_list().get(pick as usize % g.size().max(1)) {
            let after = domination_number(&g.remove_edges(&[*e]).unwrap());
            prop_assert!(after.gamma >= before.gamma);
        }
    }

    #[test]
    fn flips_keep_the_surface(g in connected_graph(), seed in any::<u64>(), v in 0usize..9) {
        let rs = random_embedding(&g, seed);
        let flipped = rs.flip(v % g.order());
        let (a, b) = (rs.summary().unwrap(), flipped.summary().unwrap());
        prop_assert_eq!(a.faces, b.faces);
        prop_assert_eq!(a.orientable, b.orientable);
        let mut la = rs.trace_faces().unwrap().face_lengths();
        let mut lb = flipped.trace_faces().unwrap().face_lengths();
        la.sort_unstable();
        lb.sort_unstable();
        prop_assert_eq!(la, lb);
    }

    #[test]
    fn face_walks_cover_each_edge_twice(g in connected_graph(), seed in any::<u64>()) {
        let t = random_embedding(&g, seed).trace_faces().unwrap();
        let total: usize = t.face_lengths().iter().sum();
        prop_assert_eq!(total, 2 * g.size());
    }
}
