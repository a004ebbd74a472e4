use homcx::cycles::{bipartite_witness, interchange, odd_cycle_witness, return_number, CycleHom};
use homcx::graph::{chromatic_number, degeneracy, fold_reduce, is_bipartite, k_core, NamedGraph};
use homcx::hom::{enumerate_0cells, enumerate_cells, hom_components};
use homcx::random::{classify_m3, M3Class};
use homcx::topology::cellular_betti;
use homcx::{Budget, Error, Graph};
use proptest::prelude::*;

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect();
        proptest::collection::vec(any::<bool>(), pairs.len()).prop_map(move |keep| {
            let edges = pairs.iter().zip(keep).filter(|(_, k)| *k).map(|(&e, _)| e);
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

fn k(m: usize) -> Graph {
    NamedGraph::Complete(m).build()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn degeneracy_ordering_is_a_witness(g in graph_strategy(12)) {
        let d = degeneracy(&g);
        let mut gone = vec![false; g.vertex_count()];
        for &v in &d.ordering {
            let left = g.neighbors(v).iter().filter(|&&w| !gone[w]).count();
            prop_assert!(left <= d.value);
            gone[v] = true;
        }
        let core = k_core(&g, d.value);
        prop_assert!(!core.is_empty());
        prop_assert!(g.induced_subgraph(&core).min_degree() >= d.value);
        prop_assert!(k_core(&g, d.value + 1).is_empty());
    }

    #[test]
    fn folding_keeps_component_count(g in graph_strategy(7)) {
        let r = fold_reduce(&g);
        prop_assert!(r.vertex_count() <= g.vertex_count());
        prop_assert_eq!(chromatic_number(&r), chromatic_number(&g));
        prop_assert_eq!(hom_components(&g, &k(3)).count, hom_components(&r, &k(3)).count);
    }

    #[test]
    fn euler_characteristic_from_betti(g in graph_strategy(4), m in 2usize..=4) {
        let c = enumerate_cells(&g, &k(m), None, &Budget::default()).unwrap();
        let b = cellular_betti(&c);
        prop_assert_eq!(b.euler_characteristic(), Some(c.euler_characteristic().unwrap()));
        // b~_0 + 1 counts components of a nonempty complex
        if !c.is_empty() {
            prop_assert_eq!(b.get(0).unwrap() + 1, hom_components(&g, &k(m)).count);
        }
    }

    #[test]
    fn classification_matches_components(g in graph_strategy(8)) {
        let want = match hom_components(&g, &k(3)).count {
            0 => M3Class::Empty,
            1 => M3Class::Connected,
            _ => M3Class::Disconnected,
        };
        prop_assert_eq!(classify_m3(&g, &Budget::default()), want);
    }

    #[test]
    fn interchange_is_an_involution_complementing_returns(n in 3usize..=11, seed in any::<u64>()) {
        let cells = enumerate_0cells(&NamedGraph::Cycle(n).build(), &k(3));
        let f = &cells[(seed % cells.len() as u64) as usize];
        let eta = CycleHom::new(3, f.iter().map(|&a| a + 1).collect()).unwrap();
        let swapped = interchange(eta.image(), 1, 3).unwrap();
        prop_assert_eq!(interchange(&swapped, 1, 3).unwrap(), eta.image().to_vec());
        let s = CycleHom::new(3, swapped).unwrap();
        prop_assert_eq!(return_number(&eta) + return_number(&s), n);
    }
}

#[test]
fn witnesses_through_the_public_api() {
    let c7 = NamedGraph::Cycle(7).build();
    assert!(odd_cycle_witness(&c7).unwrap().separates(&c7).unwrap());
    for n in [6, 8, 10] {
        let c = NamedGraph::Cycle(n).build();
        assert!(bipartite_witness(&c).unwrap().separates(&c).unwrap());
    }
    let q3 = NamedGraph::Cube.build();
    assert!(is_bipartite(&q3).is_some());
    assert!(matches!(
        bipartite_witness(&q3),
        Err(Error::Precondition(_))
    ));
}
