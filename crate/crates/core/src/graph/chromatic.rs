use super::{is_bipartite, Graph};

/// A proper coloring with colors `0..k`, if one exists. Exhaustive
/// backtracking, coloring the most constrained vertex first.
pub fn find_coloring(g: &Graph, k: usize) -> Option<Vec<usize>> {
    let n = g.vertex_count();
    if n == 0 {
        return Some(Vec::new());
    }
    if k == 0 {
        return None;
    }
    let mut color = vec![usize::MAX; n];
    backtrack(g, k, &mut color, 0).then_some(color)
}

pub fn is_colorable(g: &Graph, k: usize) -> bool {
    find_coloring(g, k).is_some()
}

fn backtrack(g: &Graph, k: usize, color: &mut [usize], colored: usize) -> bool {
    if colored == color.len() {
        return true;
    }
    // saturation: number of distinct colors among neighbors
    let v = (0..color.len())
        .filter(|&v| color[v] == usize::MAX)
        .max_by_key(|&v| {
            let mut seen = 0u64;
            for &w in g.neighbors(v) {
                if color[w] != usize::MAX {
                    seen |= 1 << (color[w] % 64);
                }
            }
            (
                seen.count_ones(),
                g.neighbors(v).len(),
                std::cmp::Reverse(v),
            )
        })
        .unwrap();
    // symmetry: never open more than one new color
    let fresh = color
        .iter()
        .filter(|&&c| c != usize::MAX)
        .max()
        .map_or(0, |&c| c + 1);
    for c in 0..k.min(fresh + 1) {
        if g.neighbors(v).iter().all(|&w| color[w] != c) {
            color[v] = c;
            if backtrack(g, k, color, colored + 1) {
                return true;
            }
            color[v] = usize::MAX;
        }
    }
    false
}

/// Exact chromatic number; 0 for the null graph. Exponential in the worst
/// case, intended for small graphs.
pub fn chromatic_number(g: &Graph) -> usize {
    if g.vertex_count() == 0 {
        return 0;
    }
    if g.edge_count() == 0 {
        return 1;
    }
    if is_bipartite(g).is_some() {
        return 2;
    }
    (3..).find(|&k| is_colorable(g, k)).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::NamedGraph;
    use proptest::prelude::*;

    fn brute_colorable(g: &Graph, k: usize) -> bool {
        let n = g.vertex_count();
        let total = k.pow(n as u32);
        (0..total).any(|mut code| {
            let mut col = vec![0; n];
            for c in col.iter_mut() {
                *c = code % k;
                code /= k;
            }
            g.edges().all(|(u, v)| col[u] != col[v])
        })
    }

    #[test]
    fn examples() {
        assert_eq!(chromatic_number(&NamedGraph::Cycle(5).build()), 3);
        assert_eq!(chromatic_number(&NamedGraph::Complete(4).build()), 4);
        assert_eq!(chromatic_number(&NamedGraph::Cube.build()), 2);
        assert_eq!(chromatic_number(&Graph::new(3)), 1);
        assert_eq!(chromatic_number(&Graph::new(0)), 0);
        let c = find_coloring(&NamedGraph::Complete(5).build(), 5).unwrap();
        let mut sorted = c.clone();
        sorted.sort();
        assert_eq!(sorted, vec![0, 1, 2, 3, 4]);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(150))]
        #[test]
        fn matches_brute_force(g in crate::graph::cores::tests::arb_graph(7)) {
            let chi = chromatic_number(&g);
            prop_assert!(brute_colorable(&g, chi));
            prop_assert!(chi == 0 || !brute_colorable(&g, chi - 1));
        }
    }
}
