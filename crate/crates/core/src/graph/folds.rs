use super::{is_connected, Graph};
use crate::error::{Error, Result};

fn is_subset(small: &[usize], big: &[usize]) -> bool {
    let mut it = big.iter();
    small.iter().all(|x| it.any(|y| y == x))
}

/// A fold `v -> u`: distinct vertices with `N(v) ⊆ N(u)`. Returns the pair
/// with the smallest `v`, then the smallest `u`.
pub fn find_fold(g: &Graph) -> Option<(usize, usize)> {
    let n = g.vertex_count();
    (0..n).find_map(|v| {
        (0..n)
            .find(|&u| u != v && is_subset(g.neighbors(v), g.neighbors(u)))
            .map(|u| (v, u))
    })
}

/// Applies folds until none is left. Also returns the original label of
/// every surviving vertex.
pub(crate) fn fold_reduce_labeled(g: &Graph) -> (Graph, Vec<usize>) {
    let mut current = g.clone();
    let mut labels: Vec<usize> = (0..g.vertex_count()).collect();
    while let Some((v, _)) = find_fold(&current) {
        let (next, kept) = current.without_vertices(&[v]);
        labels = kept.into_iter().map(|i| labels[i]).collect();
        current = next;
    }
    (current, labels)
}

/// Repeatedly removes folded vertices. The terminal graph depends on the
/// deterministic fold order; its hom-complexes are homotopy equivalent to
/// those of `g`.
pub fn fold_reduce(g: &Graph) -> Graph {
    fold_reduce_labeled(g).0
}

/// Does the connected graph `g` fold down to a single edge?
pub fn folds_to_edge(g: &Graph) -> Result<bool> {
    if g.edge_count() == 0 || !is_connected(g) {
        return Err(Error::precondition(
            "folds_to_edge needs a connected graph with at least one edge",
        ));
    }
    // folds preserve connectivity, so two surviving vertices means K_2
    Ok(fold_reduce(g).vertex_count() == 2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::NamedGraph;

    fn all_pairs_fold_free(g: &Graph) -> bool {
        let n = g.vertex_count();
        (0..n).all(|v| {
            (0..n).all(|u| u == v || !g.neighbors(v).iter().all(|w| g.neighbors(u).contains(w)))
        })
    }

    #[test]
    fn fold_examples() {
        let p3 = NamedGraph::Path(3).build();
        assert_eq!(find_fold(&p3), Some((0, 2)));
        assert!(all_pairs_fold_free(&NamedGraph::Cycle(5).build()));
        assert_eq!(find_fold(&NamedGraph::Cycle(5).build()), None);
        let (v, u) = find_fold(&NamedGraph::Cycle(4).build()).unwrap();
        assert_eq!((v + 2) % 4, u);
    }

    #[test]
    fn trees_fold_to_an_edge() {
        let trees = [
            NamedGraph::Path(2).build(),
            NamedGraph::Path(7).build(),
            NamedGraph::CompleteBipartite(1, 5).build(),
            Graph::from_edges(7, [(0, 1), (1, 2), (1, 3), (3, 4), (3, 5), (5, 6)]).unwrap(),
        ];
        for t in &trees {
            let r = fold_reduce(t);
            assert_eq!((r.vertex_count(), r.edge_count()), (2, 1));
            assert!(folds_to_edge(t).unwrap());
        }
    }

    #[test]
    fn unicyclic_folds_to_its_cycle() {
        // C_5 with a pendant path and a pendant star
        let g = Graph::from_edges(
            9,
            [
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 4),
                (4, 0),
                (0, 5),
                (5, 6),
                (2, 7),
                (2, 8),
            ],
        )
        .unwrap();
        let r = fold_reduce(&g);
        assert_eq!((r.vertex_count(), r.edge_count()), (5, 5));
        assert!(r.degrees().iter().all(|&d| d == 2));
        let c4 = fold_reduce(&NamedGraph::Cycle(4).build());
        assert_eq!((c4.vertex_count(), c4.edge_count()), (2, 1));
    }

    #[test]
    fn folds_to_edge_examples() {
        assert!(folds_to_edge(&NamedGraph::CompleteBipartite(3, 3).build()).unwrap());
        assert!(all_pairs_fold_free(&NamedGraph::Cycle(6).build()));
        assert!(!folds_to_edge(&NamedGraph::Cycle(6).build()).unwrap());
        assert!(!folds_to_edge(&NamedGraph::Cube.build()).unwrap());
        assert!(find_fold(&NamedGraph::Cube.build()).is_none());
        assert!(matches!(
            folds_to_edge(&Graph::new(3)),
            Err(Error::Precondition(_))
        ));
        let two_edges = NamedGraph::Path(2)
            .build()
            .disjoint_union(&NamedGraph::Path(2).build());
        assert!(folds_to_edge(&two_edges).is_err());
    }

    #[test]
    fn labels_track_survivors() {
        let g = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let (r, labels) = fold_reduce_labeled(&g);
        assert_eq!(r.vertex_count(), labels.len());
        for (a, b) in r.edges() {
            assert!(g.has_edge(labels[a], labels[b]));
        }
    }
}
