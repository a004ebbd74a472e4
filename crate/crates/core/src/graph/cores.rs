use super::Graph;
use serde::{Deserialize, Serialize};
use std::cmp::Reverse;
use std::collections::BinaryHeap;

/// Vertex set of the k-core: the unique maximal induced subgraph with
/// minimum degree at least `k`. Sorted ascending; possibly empty.
pub fn k_core(g: &Graph, k: usize) -> Vec<usize> {
    let n = g.vertex_count();
    let mut deg = g.degrees();
    let mut removed = vec![false; n];
    let mut stack: Vec<usize> = (0..n).filter(|&v| deg[v] < k).collect();
    for &v in &stack {
        removed[v] = true;
    }
    while let Some(v) = stack.pop() {
        for &w in g.neighbors(v) {
            if !removed[w] {
                deg[w] -= 1;
                if deg[w] < k {
                    removed[w] = true;
                    stack.push(w);
                }
            }
        }
    }
    (0..n).filter(|&v| !removed[v]).collect()
}

/// Degeneracy together with a peeling order that witnesses it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Degeneracy {
    /// Largest minimum degree over induced subgraphs.
    pub value: usize,
    /// Removal order; each vertex has degree at most `value` in the graph
    /// that remains when it is removed.
    pub ordering: Vec<usize>,
}

/// Smallest-last peeling. Ties are broken by the smallest vertex index.
pub fn degeneracy(g: &Graph) -> Degeneracy {
    let n = g.vertex_count();
    let mut deg = g.degrees();
    let mut removed = vec![false; n];
    let mut heap: BinaryHeap<Reverse<(usize, usize)>> =
        (0..n).map(|v| Reverse((deg[v], v))).collect();
    let mut ordering = Vec::with_capacity(n);
    let mut value = 0;
    while let Some(Reverse((d, v))) = heap.pop() {
        if removed[v] || d != deg[v] {
            continue;
        }
        removed[v] = true;
        value = value.max(d);
        ordering.push(v);
        for &w in g.neighbors(v) {
            if !removed[w] {
                deg[w] -= 1;
                heap.push(Reverse((deg[w], w)));
            }
        }
    }
    Degeneracy { value, ordering }
}

/// Core number of every vertex: the largest `k` whose k-core contains it.
pub fn core_numbers(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut deg = g.degrees();
    let mut core = vec![0; n];
    let mut removed = vec![false; n];
    let mut heap: BinaryHeap<Reverse<(usize, usize)>> =
        (0..n).map(|v| Reverse((deg[v], v))).collect();
    let mut level = 0;
    while let Some(Reverse((d, v))) = heap.pop() {
        if removed[v] || d != deg[v] {
            continue;
        }
        removed[v] = true;
        level = level.max(d);
        core[v] = level;
        for &w in g.neighbors(v) {
            if !removed[w] {
                deg[w] -= 1;
                heap.push(Reverse((deg[w], w)));
            }
        }
    }
    core
}
