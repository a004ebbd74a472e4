use super::{interchange, mod3, tau_pattern, CycleHom};
use crate::error::{Error, Result};
use crate::graph::{
    chromatic_number, contains_pattern, find_odd_cycle, folds_to_edge, is_bipartite, is_connected,
    minimal_long_even_cycle, multi_source_distances, NamedGraph, Pattern,
};
use crate::hom::{find_homomorphism, hom_components, is_homomorphism};
use crate::Graph;
use serde::Serialize;

/// Two proper 3-colorings (labels `1..=3`) related by a color-class
/// interchange, together with the cycle whose return number separates them.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DisconnectionWitness {
    pub eta: Vec<usize>,
    pub eta_swapped: Vec<usize>,
    pub swap: [usize; 2],
    /// Vertices `v_1, ..., v_n` of the cycle, in order.
    pub cycle: Vec<usize>,
    /// Restriction of `eta` to the cycle.
    pub tau: Vec<usize>,
}

impl DisconnectionWitness {
    fn new(eta: Vec<usize>, cycle: Vec<usize>) -> Result<Self> {
        let swap = [1, 2];
        let eta_swapped = interchange(&eta, swap[0], swap[1])?;
        let tau = cycle.iter().map(|&v| eta[v]).collect();
        Ok(DisconnectionWitness {
            eta,
            eta_swapped,
            swap,
            cycle,
            tau,
        })
    }

    pub fn tau(&self) -> Result<CycleHom> {
        CycleHom::new(3, self.tau.clone())
    }

    /// Checks both colorings against `g` and, by exhaustive union-find over
    /// all 3-colorings, that they lie in different components.
    pub fn separates(&self, g: &Graph) -> Result<bool> {
        let k3 = NamedGraph::Complete(3).build();
        let zero = |f: &[usize]| f.iter().map(|&a| a - 1).collect::<Vec<_>>();
        let (a, b) = (zero(&self.eta), zero(&self.eta_swapped));
        if !is_homomorphism(g, &k3, &a)? || !is_homomorphism(g, &k3, &b)? {
            return Ok(false);
        }
        Ok(hom_components(g, &k3).same_component(&a, &b) == Some(false))
    }
}

/// For `chi(g) = 3`: the first 3-coloring and its `{1, 2}` interchange,
/// recorded along an odd cycle.
pub fn odd_cycle_witness(g: &Graph) -> Result<DisconnectionWitness> {
    let chi = chromatic_number(g);
    if chi != 3 {
        return Err(Error::precondition(format!(
            "chromatic number is {chi}, not 3"
        )));
    }
    let k3 = NamedGraph::Complete(3).build();
    let f = find_homomorphism(g, &k3).expect("3-colorable");
    let cycle = find_odd_cycle(g).expect("not bipartite");
    DisconnectionWitness::new(f.iter().map(|&a| a + 1).collect(), cycle)
}

/// The explicit coloring of the circular ladder with six rungs:
/// `v_i -> i mod 3` on one rim and `w_i -> (i + 1) mod 3` on the other.
pub fn ladder_witness() -> DisconnectionWitness {
    let r = 6;
    let mut eta = vec![0; 2 * r];
    for i in 1..=r {
        eta[i - 1] = mod3(i);
        eta[r + i - 1] = mod3(i + 1);
    }
    DisconnectionWitness::new(eta, (0..r).collect()).expect("fixed swap pair")
}

/// For a connected bipartite `g` that does not fold to an edge and contains
/// neither `H1` nor `H2`: a coloring that agrees with the return-number
/// pattern on a shortest cycle of length at least 6 and with the
/// bipartition away from it.
///
/// The result is validated; a failure is reported as an invariant error.
pub fn bipartite_witness(g: &Graph) -> Result<DisconnectionWitness> {
    if !is_connected(g) {
        return Err(Error::precondition("graph is not connected"));
    }
    let Some(sigma) = is_bipartite(g) else {
        return Err(Error::precondition("graph is not bipartite"));
    };
    if g.edge_count() == 0 {
        return Err(Error::precondition("graph has no edges"));
    }
    if folds_to_edge(g)? {
        return Err(Error::precondition("graph folds to an edge"));
    }
    for p in [Pattern::H1, Pattern::H2] {
        if contains_pattern(g, p) {
            return Err(Error::precondition(format!("graph contains {p:?}")));
        }
    }
    let Some(cycle) = minimal_long_even_cycle(g)? else {
        return Err(Error::Invariant(
            "no cycle of length at least 6 in a graph that does not fold to an edge".into(),
        ));
    };
    let eta = construct(g, &cycle, &sigma)?;
    let w = DisconnectionWitness::new(eta, cycle)?;
    validate(g, &w)?;
    Ok(w)
}

fn construct(g: &Graph, cycle: &[usize], sigma: &[u8]) -> Result<Vec<usize>> {
    let n = g.vertex_count();
    let tau = tau_pattern(cycle.len() / 2)?;
    let mut on_cycle = vec![None; n];
    for (i, &v) in cycle.iter().enumerate() {
        on_cycle[v] = Some(tau.image()[i]);
    }
    let sigma = |u: usize| sigma[u] as usize;
    let dist = multi_source_distances(g, cycle.iter().copied());

    let cycle_nbrs = |u: usize| g.neighbors(u).iter().filter(|&&v| on_cycle[v].is_some());
    let in_a: Vec<bool> = (0..n)
        .map(|u| dist[u] == Some(1) && cycle_nbrs(u).any(|&v| on_cycle[v] == Some(sigma(u))))
        .collect();
    // (|N(u) ∩ H|, |N(u) ∩ A|)
    let shape = |u: usize| {
        (
            cycle_nbrs(u).count(),
            g.neighbors(u).iter().filter(|&&w| in_a[w]).count(),
        )
    };
    let in_a_bar: Vec<bool> = (0..n)
        .map(|u| {
            in_a[u]
                && match shape(u) {
                    (2, 0) => {
                        let mut seen: Vec<usize> =
                            cycle_nbrs(u).map(|&v| on_cycle[v].unwrap()).collect();
                        seen.sort_unstable();
                        seen.dedup();
                        let mut want = vec![sigma(u), 3];
                        want.sort_unstable();
                        seen == want
                    }
                    (1, 1) => sigma(u) == 2,
                    _ => false,
                }
        })
        .collect();

    Ok((0..n)
        .map(|u| {
            if let Some(t) = on_cycle[u] {
                return t;
            }
            if in_a_bar[u] {
                return match (shape(u), sigma(u)) {
                    ((1, 1), _) => 1,
                    ((2, 0), 2) => 1,
                    _ => 2,
                };
            }
            if in_a[u] || g.neighbors(u).iter().any(|&w| in_a_bar[w]) {
                return 3;
            }
            sigma(u)
        })
        .collect())
}

fn validate(g: &Graph, w: &DisconnectionWitness) -> Result<()> {
    let k3 = NamedGraph::Complete(3).build();
    let zero: Vec<usize> = w.eta.iter().map(|&a| a - 1).collect();
    if !is_homomorphism(g, &k3, &zero)? {
        let bad = g
            .edges()
            .find(|&(u, v)| w.eta[u] == w.eta[v])
            .expect("some edge is monochromatic");
        return Err(Error::Invariant(format!(
            "constructed coloring is improper on edge {bad:?} (both colored {})",
            w.eta[bad.0]
        )));
    }
    let tau = tau_pattern(w.cycle.len() / 2)?;
    if w.tau != tau.image() {
        return Err(Error::Invariant(
            "constructed coloring does not restrict to the cycle pattern".into(),
        ));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cycles::return_number;
    use crate::graph::generate;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn cycle_with(n: usize, extra: &[(usize, usize)], total: usize) -> Graph {
        let cycle = NamedGraph::Cycle(n).build();
        Graph::from_edges(total, cycle.edges().chain(extra.iter().copied())).unwrap()
    }

    #[test]
    fn bare_six_cycle() {
        let w = bipartite_witness(&NamedGraph::Cycle(6).build()).unwrap();
        assert_eq!(w.eta, vec![1, 2, 3, 1, 2, 3]);
        assert_eq!(w.eta_swapped, vec![2, 1, 3, 2, 1, 3]);
        assert_eq!(w.swap, [1, 2]);
        assert_eq!(return_number(&w.tau().unwrap()), 0);
    }

    #[test]
    fn fixtures_separate() {
        let fixtures = vec![
            NamedGraph::Cycle(6).build(),
            NamedGraph::Cycle(8).build(),
            NamedGraph::Cycle(10).build(),
            // pendant path of length 2
            cycle_with(6, &[(0, 6), (6, 7)], 8),
            // pendant trees
            cycle_with(6, &[(0, 6), (6, 7), (6, 8), (3, 9)], 10),
            cycle_with(8, &[(1, 8), (8, 9), (9, 10), (8, 11), (4, 12)], 13),
            // a vertex attached to two cycle vertices at distance 2
            cycle_with(6, &[(0, 6), (2, 6)], 7),
            cycle_with(8, &[(1, 8), (3, 8)], 9),
            cycle_with(8, &[(1, 8), (3, 8), (8, 9)], 10),
        ];
        for g in &fixtures {
            let w = bipartite_witness(g).unwrap();
            assert!(w.separates(g).unwrap(), "{g:?}");
        }
    }

    #[test]
    fn preconditions() {
        for g in [
            NamedGraph::CircularLadder(6).build(),
            NamedGraph::Cube.build(),
            NamedGraph::Cycle(5).build(),
            NamedGraph::Cycle(4).build(),
            NamedGraph::Path(4).build(),
            NamedGraph::CompleteBipartite(2, 3).build(),
            Graph::new(3),
        ] {
            assert!(
                matches!(bipartite_witness(&g), Err(Error::Precondition(_))),
                "{g:?}"
            );
        }
    }

    #[test]
    fn ladder() {
        let g = NamedGraph::CircularLadder(6).build();
        let w = ladder_witness();
        assert_eq!(return_number(&w.tau().unwrap()), 0);
        assert!(w.separates(&g).unwrap());
    }

    #[test]
    fn odd_cycles() {
        let c5 = NamedGraph::Cycle(5).build();
        let w = odd_cycle_witness(&c5).unwrap();
        let swapped = CycleHom::new(3, interchange(&w.tau, 1, 2).unwrap()).unwrap();
        assert_eq!(
            return_number(&w.tau().unwrap()) + return_number(&swapped),
            5
        );
        assert!(w.separates(&c5).unwrap());

        let k3 = NamedGraph::Complete(3).build();
        assert!(odd_cycle_witness(&k3).unwrap().separates(&k3).unwrap());
        assert!(matches!(
            odd_cycle_witness(&NamedGraph::Complete(4).build()),
            Err(Error::Precondition(_))
        ));
        for g in generate::connected_graphs_up_to(6) {
            if chromatic_number(&g) == 3 {
                assert!(odd_cycle_witness(&g).unwrap().separates(&g).unwrap());
            }
        }
    }

    /// A random connected bipartite graph around a long even cycle.
    fn random_fixture(rng: &mut ChaCha8Rng) -> Graph {
        let len = 2 * rng.random_range(3..=6);
        let extra = rng.random_range(0..=6);
        let total = len + extra;
        let mut g = Graph::new(total);
        for i in 0..len {
            g.add_edge(i, (i + 1) % len).unwrap();
        }
        // parity of each vertex; new vertices hang off earlier ones
        let mut side: Vec<usize> = (0..len).map(|i| i % 2).collect();
        for u in len..total {
            let p = rng.random_range(0..u);
            g.add_edge(u, p).unwrap();
            side.push(1 - side[p]);
            if rng.random_bool(0.4) {
                let q = rng.random_range(0..u);
                if side[q] != side[u] {
                    g.add_edge(u, q).unwrap();
                }
            }
        }
        g
    }

    #[test]
    fn random_fixtures_separate() {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
        let mut checked = 0;
        for _ in 0..400 {
            let g = random_fixture(&mut rng);
            match bipartite_witness(&g) {
                Ok(w) => {
                    assert!(w.separates(&g).unwrap(), "{g:?}");
                    checked += 1;
                }
                Err(Error::Precondition(_)) => {}
                Err(e) => panic!("{e} on {g:?}"),
            }
        }
        assert!(checked >= 50, "only {checked} fixtures met the hypotheses");
    }
}
