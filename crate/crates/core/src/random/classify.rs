//! Connectivity class of `Hom(G, K_3)` for sparse graphs, and cycle counts.

use crate::graph::{
    chromatic_number, connected_components, contains_pattern, fold_reduce, k_core, NamedGraph,
    Pattern,
};
use crate::hom::hom_components;
use crate::{Budget, Graph};
use serde::{Serialize, Serializer};

/// Longest cycle length counted by [`cycle_census`].
pub const CENSUS_MAX_LEN: usize = 12;

/// Connectivity of `Hom(G, K_3)`, coded `-1` (disconnected) and `0`
/// (connected).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum M3Class {
    Disconnected,
    Connected,
    /// `G` is not 3-colorable.
    Empty,
    /// Exact component count was over budget.
    Unknown,
}

impl M3Class {
    pub fn code(self) -> Option<i64> {
        match self {
            M3Class::Disconnected => Some(-1),
            M3Class::Connected => Some(0),
            _ => None,
        }
    }
}

impl Serialize for M3Class {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            M3Class::Disconnected => s.serialize_i64(-1),
            M3Class::Connected => s.serialize_i64(0),
            M3Class::Empty => s.serialize_str("empty"),
            M3Class::Unknown => s.serialize_str("unknown"),
        }
    }
}

/// `Hom(G, K_3)` is the product of the complexes of the components, so it
/// is empty if one factor is, and otherwise connected iff every factor is.
///
/// Per component, after removing pendant trees (which are folds):
/// * nothing left: a tree, which folds to an edge;
/// * a single cycle: connected exactly for `C_4`;
/// * otherwise the fold-reduced core is classified by its chromatic number,
///   by the forbidden-pattern criterion for bipartite graphs, or as a last
///   resort by counting components exactly.
pub fn classify_m3(g: &Graph, budget: &Budget) -> M3Class {
    let core = k_core(g, 2);
    let core_graph = g.induced_subgraph(&core);
    let mut result = M3Class::Connected;
    for comp in connected_components(&core_graph) {
        let c = core_graph.induced_subgraph(&comp);
        match classify_core_component(&c, budget) {
            M3Class::Empty => return M3Class::Empty,
            M3Class::Disconnected => result = M3Class::Disconnected,
            M3Class::Unknown if result == M3Class::Connected => result = M3Class::Unknown,
            _ => {}
        }
    }
    result
}

/// `c` is connected with minimum degree at least 2.
fn classify_core_component(c: &Graph, budget: &Budget) -> M3Class {
    if c.max_degree() == 2 {
        return if c.vertex_count() == 4 {
            M3Class::Connected
        } else {
            M3Class::Disconnected
        };
    }
    let r = fold_reduce(c);
    if r.vertex_count() <= 2 {
        return M3Class::Connected;
    }
    match chromatic_number(&r) {
        2 => {}
        3 => return M3Class::Disconnected,
        _ => return M3Class::Empty,
    }
    if !contains_pattern(&r, Pattern::H1) && !contains_pattern(&r, Pattern::H2) {
        return M3Class::Disconnected;
    }
    // a connected graph has at most 3 * 2^(n - 1) proper 3-colorings
    let n = r.vertex_count() as u32;
    if n > 40 || 3u64 << (n - 1) > budget.enumeration {
        return M3Class::Unknown;
    }
    if hom_components(&r, &NamedGraph::Complete(3).build()).count == 1 {
        M3Class::Connected
    } else {
        M3Class::Disconnected
    }
}

/// Number of cycles (as subgraphs) of each length `3..=max_len`; entry
/// `l - 3` counts `C_l`. Only the 2-core is searched.
pub fn cycle_census(g: &Graph, max_len: usize) -> Vec<u64> {
    let mut counts = vec![0u64; max_len.saturating_sub(2)];
    if max_len < 3 {
        return counts;
    }
    let core = k_core(g, 2);
    let h = g.induced_subgraph(&core);
    let n = h.vertex_count();
    let mut on_path = vec![false; n];
    // closed walks from the smallest vertex through larger ones; each cycle
    // is found once per direction
    fn walk(
        h: &Graph,
        start: usize,
        v: usize,
        len: usize,
        max_len: usize,
        on_path: &mut [bool],
        counts: &mut [u64],
    ) {
        for &w in h.neighbors(v) {
            if w == start && len >= 3 {
                counts[len - 3] += 1;
            } else if w > start && !on_path[w] && len < max_len {
                on_path[w] = true;
                walk(h, start, w, len + 1, max_len, on_path, counts);
                on_path[w] = false;
            }
        }
    }
    for s in 0..n {
        on_path[s] = true;
        walk(&h, s, s, 1, max_len, &mut on_path, &mut counts);
        on_path[s] = false;
    }
    counts.iter_mut().for_each(|c| *c /= 2);
    counts
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generate;

    fn classify(g: &Graph) -> M3Class {
        classify_m3(g, &Budget::default())
    }

    /// Straight from the 1-skeleton of `Hom(g, K_3)`.
    fn exact(g: &Graph) -> M3Class {
        let comps = hom_components(g, &NamedGraph::Complete(3).build());
        match comps.count {
            0 => M3Class::Empty,
            1 => M3Class::Connected,
            _ => M3Class::Disconnected,
        }
    }

    #[test]
    fn examples() {
        let forest = Graph::from_edges(7, [(0, 1), (1, 2), (3, 4), (3, 5)]).unwrap();
        assert_eq!(classify(&forest), M3Class::Connected);
        let triangle = Graph::from_edges(6, [(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(classify(&triangle), M3Class::Disconnected);
        let square_with_tail =
            Graph::from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 0), (3, 4), (4, 5)]).unwrap();
        assert_eq!(classify(&square_with_tail), M3Class::Connected);
        assert_eq!(
            classify(&NamedGraph::Cycle(6).build()),
            M3Class::Disconnected
        );
        assert_eq!(classify(&NamedGraph::Cube.build()), M3Class::Connected);
        assert_eq!(classify(&NamedGraph::Complete(4).build()), M3Class::Empty);
        assert_eq!(classify(&Graph::new(0)), M3Class::Connected);
    }

    #[test]
    fn agrees_with_exact_components_up_to_seven_vertices() {
        for n in 1..=7 {
            for g in generate::graphs_up_to_iso(n) {
                assert_eq!(classify(&g), exact(&g), "{g:?}");
            }
        }
    }

    #[test]
    fn serializes_as_codes() {
        assert_eq!(serde_json::to_string(&M3Class::Disconnected).unwrap(), "-1");
        assert_eq!(serde_json::to_string(&M3Class::Connected).unwrap(), "0");
        assert_eq!(
            serde_json::to_string(&M3Class::Unknown).unwrap(),
            "\"unknown\""
        );
    }

    /// Cycles through an explicit search over vertex sequences.
    fn brute_census(g: &Graph, max_len: usize) -> Vec<u64> {
        let n = g.vertex_count();
        let mut counts = vec![0u64; max_len - 2];
        fn go(g: &Graph, path: &mut Vec<usize>, max_len: usize, counts: &mut [u64]) {
            let (s, v) = (path[0], *path.last().unwrap());
            if path.len() >= 3 && g.has_edge(v, s) && path[1] < *path.last().unwrap() {
                counts[path.len() - 3] += 1;
            }
            if path.len() == max_len {
                return;
            }
            for w in 0..g.vertex_count() {
                if w > s && !path.contains(&w) && g.has_edge(v, w) {
                    path.push(w);
                    go(g, path, max_len, counts);
                    path.pop();
                }
            }
        }
        for s in 0..n {
            go(g, &mut vec![s], max_len, &mut counts);
        }
        counts
    }

    #[test]
    fn census() {
        assert_eq!(
            cycle_census(&NamedGraph::Complete(4).build(), 4),
            vec![4, 3]
        );
        assert_eq!(cycle_census(&NamedGraph::Cycle(7).build(), 12)[4], 1);
        let c = cycle_census(&NamedGraph::Cube.build(), 8);
        assert_eq!(c, brute_census(&NamedGraph::Cube.build(), 8));
        assert_eq!(c[1], 6);
        for g in generate::graphs_up_to_iso(6) {
            assert_eq!(cycle_census(&g, 6), brute_census(&g, 6));
        }
        // a bare tree has nothing
        assert!(cycle_census(&NamedGraph::Path(9).build(), 12)
            .iter()
            .all(|&c| c == 0));
    }
}
