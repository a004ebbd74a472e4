//! Undirected simple graphs and the graph-theoretic procedures built on them.

mod chromatic;
mod cores;
mod cycles;
mod folds;
pub mod generate;
pub mod io;
pub mod named;
mod subgraph;
mod traversal;

pub use chromatic::{chromatic_number, find_coloring, is_colorable};
pub use cores::{core_numbers, degeneracy, k_core, Degeneracy};
pub use cycles::minimal_long_even_cycle;
pub use folds::{find_fold, fold_reduce, folds_to_edge};
pub use named::{NamedGraph, Pattern};
pub use subgraph::{contains_pattern, contains_subgraph};
pub(crate) use traversal::multi_source_distances;
pub use traversal::{
    bfs_distances, connected_components, find_odd_cycle, is_bipartite, is_connected,
};

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// Undirected simple graph on vertices `0..vertex_count`.
///
/// Neighbor lists are kept sorted and deduplicated, so membership tests are
/// binary searches and iteration order is deterministic.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        Graph {
            adjacency: vec![Vec::new(); n],
        }
    }

    /// Builds a graph from an edge list. Duplicate and reversed edges are
    /// merged; loops and out-of-range endpoints are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::new(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Inserts the edge `{u, v}`; returns whether it was new.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<bool> {
        let n = self.vertex_count();
        if u >= n || v >= n {
            return Err(Error::argument(format!(
                "edge ({u}, {v}) has an endpoint outside 0..{n}"
            )));
        }
        if u == v {
            return Err(Error::argument(format!("loop at vertex {u}")));
        }
        match self.adjacency[u].binary_search(&v) {
            Ok(_) => Ok(false),
            Err(pos) => {
                self.adjacency[u].insert(pos, v);
                let pos = self.adjacency[v].binary_search(&u).unwrap_err();
                self.adjacency[v].insert(pos, u);
                Ok(true)
            }
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn is_empty(&self) -> bool {
        self.adjacency.is_empty()
    }

    /// Sorted neighbors of `v`. Panics if `v` is out of range.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.vertex_count() && self.adjacency[u].binary_search(&v).is_ok()
    }

    pub fn degree(&self, v: usize) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(self.adjacency[v].len())
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adjacency.iter().map(Vec::len).collect()
    }

    /// Largest degree; 0 for the null graph.
    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Smallest degree; 0 for the null graph.
    pub fn min_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).min().unwrap_or(0)
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.vertex_count() {
            Ok(())
        } else {
            Err(Error::argument(format!(
                "vertex {v} out of range for a graph on {} vertices",
                self.vertex_count()
            )))
        }
    }

    /// Subgraph induced on `vertices`; vertex `i` of the result is
    /// `vertices[i]`. Panics on out-of-range or repeated entries.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Graph {
        let mut index = vec![usize::MAX; self.vertex_count()];
        for (i, &v) in vertices.iter().enumerate() {
            assert!(index[v] == usize::MAX, "vertex {v} listed twice");
            index[v] = i;
        }
        let adjacency = vertices
            .iter()
            .map(|&v| {
                let mut ns: Vec<usize> = self.adjacency[v]
                    .iter()
                    .filter_map(|&w| (index[w] != usize::MAX).then_some(index[w]))
                    .collect();
                ns.sort_unstable();
                ns
            })
            .collect();
        Graph { adjacency }
    }

    /// The graph with the vertices in `removed` deleted, together with the
    /// original label of each surviving vertex.
    pub fn without_vertices(&self, removed: &[usize]) -> (Graph, Vec<usize>) {
        let mut gone = vec![false; self.vertex_count()];
        for &v in removed {
            gone[v] = true;
        }
        let kept: Vec<usize> = (0..self.vertex_count()).filter(|&v| !gone[v]).collect();
        (self.induced_subgraph(&kept), kept)
    }

    /// Vertex-disjoint union; the vertices of `other` are shifted by
    /// `self.vertex_count()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.vertex_count();
        let mut adjacency = self.adjacency.clone();
        adjacency.extend(
            other
                .adjacency
                .iter()
                .map(|ns| ns.iter().map(|&w| w + shift).collect()),
        );
        Graph { adjacency }
    }

    /// Is `independent` an independent set of this graph?
    pub fn is_independent(&self, set: &[usize]) -> bool {
        set.iter()
            .enumerate()
            .all(|(i, &u)| set[i + 1..].iter().all(|&v| u != v && !self.has_edge(u, v)))
    }
}
