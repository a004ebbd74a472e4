use super::{is_bipartite, Graph};
use crate::error::{Error, Result};
use std::collections::VecDeque;

/// A shortest cycle of length at least 6 in a bipartite graph, as a
/// cyclically ordered vertex list starting at its smallest vertex.
///
/// Lengths are tried in increasing order and start vertices in increasing
/// order, so the first cycle found is deterministic.
pub fn minimal_long_even_cycle(g: &Graph) -> Result<Option<Vec<usize>>> {
    if is_bipartite(g).is_none() {
        return Err(Error::precondition(
            "minimal_long_even_cycle needs a bipartite graph",
        ));
    }
    let n = g.vertex_count();
    for len in (6..=n).step_by(2) {
        for s in 0..n {
            if let Some(c) = cycle_through_min_vertex(g, s, len) {
                return Ok(Some(c));
            }
        }
    }
    Ok(None)
}

/// A simple cycle of exactly `len` vertices whose smallest vertex is `s`.
fn cycle_through_min_vertex(g: &Graph, s: usize, len: usize) -> Option<Vec<usize>> {
    let n = g.vertex_count();
    // distances back to s inside the vertices >= s
    let mut dist = vec![usize::MAX; n];
    dist[s] = 0;
    let mut queue = VecDeque::from([s]);
    while let Some(u) = queue.pop_front() {
        for &w in g.neighbors(u) {
            if w > s && dist[w] == usize::MAX {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    let mut path = vec![s];
    let mut on_path = vec![false; n];
    on_path[s] = true;
    extend(g, s, len, &dist, &mut path, &mut on_path).then_some(path)
}

fn extend(
    g: &Graph,
    s: usize,
    len: usize,
    dist: &[usize],
    path: &mut Vec<usize>,
    on_path: &mut [bool],
) -> bool {
    let last = *path.last().unwrap();
    if path.len() == len {
        return g.has_edge(last, s);
    }
    for &w in g.neighbors(last) {
        if w <= s || on_path[w] || dist[w] == usize::MAX {
            continue;
        }
        // after stepping to w we still need dist[w] edges to close up
        if path.len() + dist[w] > len {
            continue;
        }
        path.push(w);
        on_path[w] = true;
        if extend(g, s, len, dist, path, on_path) {
            return true;
        }
        on_path[w] = false;
        path.pop();
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::NamedGraph;

    /// All simple cycles of length `len`, each reported once as a sorted
    /// vertex set.
    fn brute_cycles(g: &Graph, len: usize) -> Vec<Vec<usize>> {
        fn go(g: &Graph, len: usize, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            let last = *path.last().unwrap();
            if path.len() == len {
                if g.has_edge(last, path[0]) && path[1] < path[len - 1] {
                    out.push(path.clone());
                }
                return;
            }
            for &w in g.neighbors(last) {
                if w > path[0] && !path.contains(&w) {
                    path.push(w);
                    go(g, len, path, out);
                    path.pop();
                }
            }
        }
        let mut out = Vec::new();
        for s in 0..g.vertex_count() {
            go(g, len, &mut vec![s], &mut out);
        }
        out
    }

    #[test]
    fn examples() {
        let c8 = NamedGraph::Cycle(8).build();
        assert_eq!(
            minimal_long_even_cycle(&c8).unwrap(),
            Some((0..8).collect())
        );
        assert_eq!(
            minimal_long_even_cycle(&NamedGraph::Cycle(4).build()).unwrap(),
            None
        );
        assert_eq!(
            minimal_long_even_cycle(&NamedGraph::Path(5).build()).unwrap(),
            None
        );
        assert!(minimal_long_even_cycle(&NamedGraph::Cycle(5).build()).is_err());
    }

    #[test]
    fn ladder_gives_a_rim() {
        let g = NamedGraph::CircularLadder(6).build();
        assert!(brute_cycles(&g, 4).len() == 6);
        let sixes = brute_cycles(&g, 6);
        let c = minimal_long_even_cycle(&g).unwrap().unwrap();
        assert_eq!(c, vec![0, 1, 2, 3, 4, 5]);
        // it is one of the enumerated 6-cycles
        assert!(sixes.iter().any(|s| s == &c));
    }

    #[test]
    fn agrees_with_enumeration_on_small_bipartite_graphs() {
        let graphs = [
            NamedGraph::Cube.build(),
            NamedGraph::CompleteBipartite(3, 3).build(),
            NamedGraph::CompleteBipartite(2, 4).build(),
            NamedGraph::H1.build(),
            NamedGraph::CircularLadder(4).build(),
            NamedGraph::Cycle(10)
                .build()
                .disjoint_union(&NamedGraph::Cycle(4).build()),
        ];
        for g in &graphs {
            let expect = (6..=g.vertex_count())
                .step_by(2)
                .find(|&l| !brute_cycles(g, l).is_empty());
            let got = minimal_long_even_cycle(g).unwrap();
            assert_eq!(got.as_ref().map(Vec::len), expect);
            if let Some(c) = got {
                for i in 0..c.len() {
                    assert!(g.has_edge(c[i], c[(i + 1) % c.len()]));
                }
            }
        }
    }
}
