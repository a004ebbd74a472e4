use super::Graph;
use std::collections::VecDeque;

/// BFS distances from `source`; `None` for unreachable vertices.
pub fn bfs_distances(g: &Graph, source: usize) -> Vec<Option<usize>> {
    multi_source_distances(g, std::iter::once(source))
}

/// Distance from each vertex to the nearest vertex of `sources`.
pub(crate) fn multi_source_distances(
    g: &Graph,
    sources: impl IntoIterator<Item = usize>,
) -> Vec<Option<usize>> {
    let mut dist = vec![None; g.vertex_count()];
    let mut queue = VecDeque::new();
    for s in sources {
        if dist[s].is_none() {
            dist[s] = Some(0);
            queue.push_back(s);
        }
    }
    while let Some(u) = queue.pop_front() {
        let d = dist[u].unwrap();
        for &w in g.neighbors(u) {
            if dist[w].is_none() {
                dist[w] = Some(d + 1);
                queue.push_back(w);
            }
        }
    }
    dist
}

/// Connected components as sorted vertex lists, largest first; ties keep
/// the order of their smallest vertex.
pub fn connected_components(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    let mut seen = vec![false; n];
    let mut comps = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut comp = vec![s];
        let mut i = 0;
        while i < comp.len() {
            let u = comp[i];
            i += 1;
            for &w in g.neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    comp.push(w);
                }
            }
        }
        comp.sort_unstable();
        comps.push(comp);
    }
    comps.sort_by_key(|c| std::cmp::Reverse(c.len()));
    comps
}

/// Connected and nonempty.
pub fn is_connected(g: &Graph) -> bool {
    g.vertex_count() > 0 && bfs_distances(g, 0).iter().all(Option::is_some)
}

/// BFS forest rooted at the smallest vertex of each component.
struct Forest {
    parent: Vec<usize>,
    depth: Vec<usize>,
}

fn bfs_forest(g: &Graph) -> Forest {
    let n = g.vertex_count();
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![usize::MAX; n];
    let mut queue = VecDeque::new();
    for s in 0..n {
        if depth[s] != usize::MAX {
            continue;
        }
        depth[s] = 0;
        parent[s] = s;
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            for &w in g.neighbors(u) {
                if depth[w] == usize::MAX {
                    depth[w] = depth[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                }
            }
        }
    }
    Forest { parent, depth }
}

/// Two-coloring with parts labelled 1 and 2, or `None` when an odd cycle
/// exists. The smallest vertex of each component gets color 1.
pub fn is_bipartite(g: &Graph) -> Option<Vec<u8>> {
    let f = bfs_forest(g);
    let color: Vec<u8> = f
        .depth
        .iter()
        .map(|d| if d % 2 == 0 { 1 } else { 2 })
        .collect();
    g.edges()
        .all(|(u, v)| color[u] != color[v])
        .then_some(color)
}

/// Some odd cycle as a cyclically ordered vertex list, or `None` when the
/// graph is bipartite. The cycle need not be induced.
pub fn find_odd_cycle(g: &Graph) -> Option<Vec<usize>> {
    let f = bfs_forest(g);
    let (u, w) = g.edges().find(|&(u, w)| f.depth[u] == f.depth[w])?;
    let (mut a, mut b) = (u, w);
    let mut left = vec![a];
    let mut right = vec![b];
    while a != b {
        a = f.parent[a];
        b = f.parent[b];
        left.push(a);
        right.push(b);
    }
    // lca .. u, then w .. child of lca
    right.pop();
    left.reverse();
    left.extend(right);
    Some(left)
}
