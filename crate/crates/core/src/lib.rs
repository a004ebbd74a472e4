//! Graph homomorphism complexes `Hom(G, K_m)` and the machinery around them.
//!
//! * [`graph`]: simple undirected graphs, k-cores, degeneracy, folds, cycles
//!   and the two forbidden patterns `H1` (the domino) and `H2` (`K_{2,3}`).
//! * [`hom`]: cells of `Hom(G, H)` (multihomomorphisms), 0-cell enumeration,
//!   1-skeleton components and the `Hom_I` subcomplex.
//! * [`topology`]: mod-2 homology, both cellular and through the order
//!   complex of the face poset, and homological connectivity.
//! * [`cycles`]: return numbers, color-class interchanges and constructive
//!   disconnection witnesses for `Hom(G, K_3)`.
//! * [`random`]: `G(n, c/n)` sampling and reproducible Monte-Carlo runs.
//! * [`suites`]: exhaustive verification suites shared by the CLI and tests.

pub mod cycles;
pub mod error;
pub mod graph;
pub mod hom;
pub mod random;
pub mod suites;
pub mod topology;
mod union_find;

pub use error::{Error, Result};
pub use graph::Graph;

/// Resource limits for the exponential-size computations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    /// Maximum number of partial assignments visited while enumerating the
    /// cells of a hom-complex.
    pub enumeration: u64,
    /// Maximum number of simplices in an order complex.
    pub subdivision: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            enumeration: 10_000_000,
            subdivision: 5_000_000,
        }
    }
}
