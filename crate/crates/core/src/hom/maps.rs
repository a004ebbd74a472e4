use super::{bits, TargetMasks};
use crate::error::{Error, Result};
use crate::union_find::UnionFind;
use crate::Graph;
use rayon::prelude::*;
use std::collections::HashMap;

/// Is `f` an edge-preserving map `V(g) -> V(h)`?
pub fn is_homomorphism(g: &Graph, h: &Graph, f: &[usize]) -> Result<bool> {
    if f.len() != g.vertex_count() {
        return Err(Error::argument(format!(
            "map has {} entries for a graph on {} vertices",
            f.len(),
            g.vertex_count()
        )));
    }
    if let Some(&bad) = f.iter().find(|&&x| x >= h.vertex_count()) {
        return Err(Error::argument(format!(
            "image {bad} outside a target on {} vertices",
            h.vertex_count()
        )));
    }
    Ok(g.edges().all(|(u, v)| h.has_edge(f[u], f[v])))
}

/// Colors still available at `v` given the images of its earlier
/// neighbors.
fn allowed(g: &Graph, t: &TargetMasks, f: &[usize], v: usize) -> u64 {
    g.neighbors(v)
        .iter()
        .take_while(|&&w| w < v)
        .fold(t.all(), |acc, &w| acc & t.neighbors(f[w]))
}

fn extend_all(g: &Graph, t: &TargetMasks, f: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    let v = f.len();
    if v == g.vertex_count() {
        out.push(f.clone());
        return;
    }
    for c in bits(allowed(g, t, f, v)) {
        f.push(c);
        extend_all(g, t, f, out);
        f.pop();
    }
}

/// All homomorphisms `g -> h` in lexicographic order.
///
/// Branches on the image of vertex 0 run in parallel; their results are
/// concatenated in branch order, so the output is identical to a sequential
/// search.
pub fn enumerate_0cells(g: &Graph, h: &Graph) -> Vec<Vec<usize>> {
    let t = TargetMasks::new(h);
    if g.vertex_count() == 0 {
        return vec![Vec::new()];
    }
    let firsts: Vec<usize> = bits(t.all()).collect();
    firsts
        .par_iter()
        .map(|&c| {
            let mut out = Vec::new();
            extend_all(g, &t, &mut vec![c], &mut out);
            out
        })
        .collect::<Vec<_>>()
        .concat()
}

fn extend_first(g: &Graph, t: &TargetMasks, f: &mut Vec<usize>) -> bool {
    let v = f.len();
    if v == g.vertex_count() {
        return true;
    }
    for c in bits(allowed(g, t, f, v)) {
        f.push(c);
        if extend_first(g, t, f) {
            return true;
        }
        f.pop();
    }
    false
}

/// The lexicographically first homomorphism `g -> h`, if any.
pub fn find_homomorphism(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    let t = TargetMasks::new(h);
    let mut f = Vec::with_capacity(g.vertex_count());
    extend_first(g, &t, &mut f).then_some(f)
}

/// Connected components of `Hom(g, h)`, computed on its 1-skeleton.
#[derive(Debug, Clone)]
pub struct HomComponents {
    /// All 0-cells, lexicographically sorted.
    pub cells: Vec<Vec<usize>>,
    /// Component id of each 0-cell, numbered by first appearance.
    pub component: Vec<usize>,
    pub count: usize,
}

impl HomComponents {
    pub fn index_of(&self, f: &[usize]) -> Option<usize> {
        self.cells.binary_search_by(|c| c.as_slice().cmp(f)).ok()
    }

    pub fn component_of(&self, f: &[usize]) -> Option<usize> {
        self.index_of(f).map(|i| self.component[i])
    }

    /// Are both maps 0-cells lying in one component?
    pub fn same_component(&self, a: &[usize], b: &[usize]) -> Option<bool> {
        Some(self.component_of(a)? == self.component_of(b)?)
    }

    /// Size of each component, indexed by component id.
    pub fn sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.count];
        for &c in &self.component {
            sizes[c] += 1;
        }
        sizes
    }
}

/// Joins two 0-cells whenever they differ at exactly one vertex `v` and the
/// cell that is their union at `v` satisfies the edge condition.
pub fn hom_components(g: &Graph, h: &Graph) -> HomComponents {
    let cells = enumerate_0cells(g, h);
    let n = g.vertex_count();
    let mut uf = UnionFind::new(cells.len());
    for v in 0..n {
        let mut first: HashMap<Vec<usize>, usize> = HashMap::with_capacity(cells.len());
        for (i, f) in cells.iter().enumerate() {
            let mut key = f.clone();
            key[v] = usize::MAX;
            match first.get(&key) {
                None => {
                    first.insert(key, i);
                }
                Some(&j) => {
                    let (a, b) = (cells[j][v], f[v]);
                    // the union {a, b} at v must still see only edges
                    let edge_ok = g
                        .neighbors(v)
                        .iter()
                        .all(|&w| h.has_edge(a, f[w]) && h.has_edge(b, f[w]));
                    if edge_ok {
                        uf.union(i, j);
                    }
                }
            }
        }
    }
    let count = uf.set_count();
    let component = uf.labels();
    HomComponents {
        cells,
        component,
        count,
    }
}
