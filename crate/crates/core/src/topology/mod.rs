//! Mod-2 homology of hom-complexes and the connectivity read off from it.
//!
//! Two routes compute the same Betti numbers:
//!
//! * cellular: the cells of `Hom(G, H)` are products of simplices, so the
//!   complex is regular and every incidence number is 1 mod 2; the boundary
//!   of a cell is the sum of its facets;
//! * simplicial: the order complex of the face poset (the barycentric
//!   subdivision) with the usual simplicial boundary.
//!
//! The cellular route is far smaller and is the default; the simplicial one
//! is kept as an independent check.

mod gf2;
mod simplicial;

pub use gf2::rank as gf2_rank;
pub use simplicial::{betti_mod2, order_complex, order_complex_skeleton, SimplicialComplex};

use crate::error::Result;
use crate::graph::{degeneracy, NamedGraph};
use crate::hom::{enumerate_cells, find_homomorphism, HomComplex};
use crate::{Budget, Graph};
use rayon::prelude::*;
use serde::{Serialize, Serializer};
use serde_json::{json, Value};

/// Reduced mod-2 Betti numbers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiVector {
    /// `b~_0, b~_1, ...`; trailing dimensions past the vector are zero when
    /// `exact`, unknown otherwise.
    reduced: Vec<usize>,
    exact: bool,
    empty: bool,
}

impl BettiVector {
    /// From chain-group sizes `n_d` and ranks `r_d` of `d_d: C_d -> C_{d-1}`
    /// (`ranks[0] = 0`). When `exact` is false the top chain group has an
    /// unknown boundary from above, so the top Betti number is dropped.
    pub(crate) fn from_ranks(sizes: &[usize], ranks: &[usize], exact: bool) -> Self {
        let empty = sizes.first().is_none_or(|&n| n == 0);
        if empty {
            return BettiVector {
                reduced: Vec::new(),
                exact: true,
                empty: true,
            };
        }
        let top = if exact { sizes.len() } else { sizes.len() - 1 };
        let reduced = (0..top)
            .map(|d| {
                let above = ranks.get(d + 1).copied().unwrap_or(0);
                let b = sizes[d] - ranks[d] - above;
                if d == 0 {
                    b - 1
                } else {
                    b
                }
            })
            .collect();
        let mut betti = BettiVector {
            reduced,
            exact,
            empty,
        };
        if exact {
            while betti.reduced.len() > 1 && betti.reduced.last() == Some(&0) {
                betti.reduced.pop();
            }
        }
        betti
    }

    pub fn reduced(&self) -> &[usize] {
        &self.reduced
    }

    /// `b~_i`, or `None` beyond the computed range of a truncated complex.
    pub fn get(&self, i: usize) -> Option<usize> {
        match self.reduced.get(i) {
            Some(&b) => Some(b),
            None if self.exact => Some(0),
            None => None,
        }
    }

    pub fn is_exact(&self) -> bool {
        self.exact
    }

    pub fn is_empty_complex(&self) -> bool {
        self.empty
    }

    /// Alternating sum of unreduced Betti numbers.
    pub fn euler_characteristic(&self) -> Option<i64> {
        if !self.exact {
            return None;
        }
        if self.empty {
            return Some(0);
        }
        let sum: i64 = self
            .reduced
            .iter()
            .enumerate()
            .map(|(i, &b)| if i % 2 == 0 { b as i64 } else { -(b as i64) })
            .sum();
        Some(sum + 1)
    }
}

impl Serialize for BettiVector {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.reduced.serialize(s)
    }
}

/// Boundary ranks `r_0 = 0, r_1, ..., r_top` of a graded complex whose
/// `d`-chains have sizes `sizes[d]` and boundaries `boundary(d, i)`.
pub(crate) fn boundary_ranks<F>(sizes: &[usize], boundary: F) -> Vec<usize>
where
    F: Fn(usize, usize) -> Vec<u32> + Sync,
{
    let mut ranks: Vec<usize> = (1..sizes.len())
        .into_par_iter()
        .map(|d| {
            gf2_rank(
                sizes[d - 1],
                (0..sizes[d]).map(|i| boundary(d, i)).collect(),
            )
        })
        .collect();
    ranks.insert(0, 0);
    ranks
}

/// Cellular mod-2 homology of a hom-complex.
///
/// A truncated complex yields Betti numbers only below its top dimension.
pub fn cellular_betti(c: &HomComplex) -> BettiVector {
    let sizes = c.dims();
    let ranks = boundary_ranks(&sizes, |d, i| {
        let offset = c.range_of_dim(d - 1).start as u32;
        let global = c.range_of_dim(d).start + i;
        c.faces(global).iter().map(|&f| f - offset).collect()
    });
    BettiVector::from_ranks(&sizes, &ranks, !c.is_truncated())
}

/// Homological connectivity: the largest `k` such that the complex is
/// nonempty, path-connected for `k >= 0`, and `b~_i = 0` for `1 <= i <= k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Connectivity {
    Empty,
    Exactly(i64),
    /// Only a skeleton was examined; the value is a lower bound.
    AtLeast(i64),
    /// All reduced Betti numbers vanish.
    Acyclic,
}

impl Connectivity {
    pub fn from_betti(b: &BettiVector) -> Self {
        if b.is_empty_complex() {
            return Connectivity::Empty;
        }
        match b.reduced().iter().position(|&x| x != 0) {
            Some(i) => Connectivity::Exactly(i as i64 - 1),
            None if b.is_exact() => Connectivity::Acyclic,
            None => Connectivity::AtLeast(b.reduced().len() as i64 - 1),
        }
    }

    /// Is the connectivity known to be at least `k`?
    pub fn is_at_least(&self, k: i64) -> bool {
        match *self {
            Connectivity::Empty => k < -1,
            Connectivity::Exactly(x) | Connectivity::AtLeast(x) => x >= k,
            Connectivity::Acyclic => true,
        }
    }

    /// `"empty"`, an integer, `{"at_least": k}` or `"acyclic"`.
    pub fn to_json(&self) -> Value {
        match *self {
            Connectivity::Empty => json!("empty"),
            Connectivity::Exactly(k) => json!(k),
            Connectivity::AtLeast(k) => json!({ "at_least": k }),
            Connectivity::Acyclic => json!("acyclic"),
        }
    }
}

pub fn homological_connectivity(c: &HomComplex) -> Connectivity {
    Connectivity::from_betti(&cellular_betti(c))
}

/// Is `Hom(g, K_m)` homologically `(m - D(g) - 2)`-connected?
///
/// Only the `(bound + 1)`-skeleton is enumerated; that is enough to decide
/// `b~_i` for `i <= bound`.
pub fn verify_degeneracy_connectivity(g: &Graph, m: usize, budget: &Budget) -> Result<bool> {
    let bound = m as i64 - degeneracy(g).value as i64 - 2;
    let km = NamedGraph::Complete(m).build();
    if bound < -1 {
        return Ok(true);
    }
    if bound == -1 {
        return Ok(find_homomorphism(g, &km).is_some());
    }
    let skeleton = enumerate_cells(g, &km, Some(bound as usize + 1), budget)?;
    Ok(homological_connectivity(&skeleton).is_at_least(bound))
}
