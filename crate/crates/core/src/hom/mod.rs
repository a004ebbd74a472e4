//! Cells of `Hom(G, H)`.
//!
//! A cell assigns to every vertex of `G` a nonempty set of vertices of `H`
//! such that adjacent vertices receive sets whose cross pairs are all edges
//! of `H`. Sets are bitmasks over `V(H)`, so targets are limited to 64
//! vertices; every function here panics on a larger target.

mod cells;
mod maps;
mod restrict;

pub use cells::{enumerate_cells, is_multihomomorphism, HomComplex, MultiCell};
pub use maps::{
    enumerate_0cells, find_homomorphism, hom_components, is_homomorphism, HomComponents,
};
pub use restrict::{extends_over, hom_i_subcomplex, verify_skeleton_extension, HomISubcomplex};

use crate::Graph;

/// Bitmask over the vertices of the target graph.
pub type ColorSet = u64;

/// Adjacency of the target as bitmasks.
#[derive(Debug, Clone)]
pub(crate) struct TargetMasks {
    nbrs: Vec<ColorSet>,
    all: ColorSet,
}

impl TargetMasks {
    pub fn new(h: &Graph) -> Self {
        let n = h.vertex_count();
        assert!(n <= 64, "target graphs are limited to 64 vertices, got {n}");
        let nbrs = (0..n)
            .map(|a| h.neighbors(a).iter().fold(0, |m, &b| m | 1 << b))
            .collect();
        let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        TargetMasks { nbrs, all }
    }

    pub fn all(&self) -> ColorSet {
        self.all
    }

    pub fn neighbors(&self, a: usize) -> ColorSet {
        self.nbrs[a]
    }

    /// Vertices adjacent to every member of `set`.
    pub fn common_neighbors(&self, set: ColorSet) -> ColorSet {
        bits(set).fold(self.all, |acc, a| acc & self.nbrs[a])
    }
}

/// Indices of the set bits, ascending.
pub(crate) fn bits(mut set: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if set == 0 {
            None
        } else {
            let i = set.trailing_zeros() as usize;
            set &= set - 1;
            Some(i)
        }
    })
}

/// Nonempty submasks of `mask` in increasing numeric order.
pub(crate) fn submasks(mask: u64) -> impl Iterator<Item = u64> {
    let mut sub = 0u64;
    std::iter::from_fn(move || {
        sub = sub.wrapping_sub(mask) & mask;
        (sub != 0).then_some(sub)
    })
}
