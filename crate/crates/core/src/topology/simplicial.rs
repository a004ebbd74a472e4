//! The order complex of a hom-complex's face poset.

use super::{boundary_ranks, BettiVector};
use crate::error::{Error, Result};
use crate::hom::HomComplex;
use crate::Budget;

/// A simplicial complex on vertices `0..vertex_count`, stored as one flat,
/// lexicographically sorted table of increasing tuples per dimension.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertex_count: usize,
    /// `tables[d]` holds the `d`-simplices, `d + 1` ids each.
    tables: Vec<Vec<u32>>,
    /// Simplices above the top stored dimension were omitted.
    truncated: bool,
}

impl SimplicialComplex {
    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    /// Number of simplices in each dimension.
    pub fn counts(&self) -> Vec<usize> {
        self.tables
            .iter()
            .enumerate()
            .map(|(d, t)| t.len() / (d + 1))
            .collect()
    }

    pub fn simplex(&self, d: usize, i: usize) -> &[u32] {
        &self.tables[d][i * (d + 1)..(i + 1) * (d + 1)]
    }

    pub fn simplices(&self, d: usize) -> impl Iterator<Item = &[u32]> {
        self.tables
            .get(d)
            .map_or(&[][..], |t| &t[..])
            .chunks_exact(d + 1)
    }

    pub fn is_truncated(&self) -> bool {
        self.truncated
    }

    fn index_of(&self, d: usize, key: &[u32]) -> Option<usize> {
        let (mut lo, mut hi) = (0, self.tables[d].len() / (d + 1));
        while lo < hi {
            let mid = (lo + hi) / 2;
            match self.simplex(d, mid).cmp(key) {
                std::cmp::Ordering::Less => lo = mid + 1,
                std::cmp::Ordering::Greater => hi = mid,
                std::cmp::Ordering::Equal => return Some(mid),
            }
        }
        None
    }
}

/// Barycentric subdivision: one vertex per cell, one simplex per chain
/// `c_0 < c_1 < ... < c_k` under containment.
pub fn order_complex(c: &HomComplex, budget: &Budget) -> Result<SimplicialComplex> {
    if c.is_truncated() {
        return Err(Error::precondition("order complex of a truncated complex"));
    }
    build(c, None, budget)
}

/// The chains of length at most `max_dim + 1`; Betti numbers of the result
/// are exact below `max_dim`.
pub fn order_complex_skeleton(
    c: &HomComplex,
    max_dim: usize,
    budget: &Budget,
) -> Result<SimplicialComplex> {
    if c.is_truncated() {
        return Err(Error::precondition("order complex of a truncated complex"));
    }
    build(c, Some(max_dim), budget)
}

/// Depth-first chain generation; chains grow downward from their top
/// element and are stored bottom-up.
struct Chains<'a> {
    below: &'a [Vec<u32>],
    chain: Vec<u32>,
    tables: Vec<Vec<u32>>,
    total: u64,
    cap: usize,
    truncated: bool,
    limit: u64,
}

impl Chains<'_> {
    fn grow(&mut self, x: u32) -> Result<()> {
        self.chain.push(x);
        let d = self.chain.len() - 1;
        self.total += 1;
        if self.total > self.limit {
            return Err(Error::Budget {
                what: "order complex simplices",
                limit: self.limit,
            });
        }
        if self.tables.len() <= d {
            self.tables.push(Vec::new());
        }
        self.tables[d].extend(self.chain.iter().rev());
        let below = self.below;
        if !below[x as usize].is_empty() {
            if d < self.cap {
                for &y in &below[x as usize] {
                    self.grow(y)?;
                }
            } else {
                self.truncated = true;
            }
        }
        self.chain.pop();
        Ok(())
    }
}

fn build(c: &HomComplex, max_dim: Option<usize>, budget: &Budget) -> Result<SimplicialComplex> {
    // cells are sorted by dimension, so every proper face has a smaller index
    let mut below: Vec<Vec<u32>> = Vec::with_capacity(c.len());
    for x in 0..c.len() {
        let mut down: Vec<u32> = Vec::new();
        for &f in c.faces(x) {
            down.push(f);
            down.extend_from_slice(&below[f as usize]);
        }
        down.sort_unstable();
        down.dedup();
        below.push(down);
    }

    let mut chains = Chains {
        below: &below,
        chain: Vec::new(),
        tables: Vec::new(),
        total: 0,
        cap: max_dim.unwrap_or(usize::MAX),
        truncated: false,
        limit: budget.subdivision,
    };
    for x in 0..c.len() as u32 {
        chains.grow(x)?;
    }
    let Chains {
        mut tables,
        truncated,
        ..
    } = chains;
    for (d, t) in tables.iter_mut().enumerate() {
        let mut rows: Vec<&[u32]> = t.chunks_exact(d + 1).collect();
        rows.sort_unstable();
        *t = rows.concat();
    }
    Ok(SimplicialComplex {
        vertex_count: c.len(),
        tables,
        truncated,
    })
}

/// Reduced mod-2 Betti numbers from the simplicial boundary.
pub fn betti_mod2(s: &SimplicialComplex) -> BettiVector {
    let sizes = s.counts();
    let ranks = boundary_ranks(&sizes, |d, i| {
        let simplex = s.simplex(d, i);
        let mut rows: Vec<u32> = (0..=d)
            .map(|skip| {
                let face: Vec<u32> = simplex
                    .iter()
                    .enumerate()
                    .filter(|&(j, _)| j != skip)
                    .map(|(_, &v)| v)
                    .collect();
                s.index_of(d - 1, &face)
                    .expect("simplicial complex is downward closed") as u32
            })
            .collect();
        rows.sort_unstable();
        rows
    });
    BettiVector::from_ranks(&sizes, &ranks, !s.truncated)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, Graph, NamedGraph};
    use crate::hom::enumerate_cells;
    use crate::topology::cellular_betti;

    fn k(n: usize) -> Graph {
        NamedGraph::Complete(n).build()
    }

    fn complex(g: &Graph, m: usize) -> HomComplex {
        enumerate_cells(g, &k(m), None, &Budget::default()).unwrap()
    }

    fn subdivide(g: &Graph, m: usize) -> SimplicialComplex {
        order_complex(&complex(g, m), &Budget::default()).unwrap()
    }

    #[test]
    fn subdivision_sizes() {
        let hexagon = subdivide(&k(2), 3);
        assert_eq!(hexagon.vertex_count(), 12);
        assert_eq!(hexagon.counts(), vec![12, 12]);
        assert_eq!(betti_mod2(&hexagon).reduced(), &[0, 1]);

        let simplex = subdivide(&Graph::new(1), 3);
        assert_eq!(simplex.counts(), vec![7, 12, 6]);
        assert_eq!(betti_mod2(&simplex).reduced(), &[0]);

        let points = subdivide(&k(3), 3);
        assert_eq!(points.counts(), vec![6]);
        assert_eq!(betti_mod2(&points).reduced(), &[5]);
    }

    #[test]
    fn two_sphere() {
        assert_eq!(betti_mod2(&subdivide(&k(2), 4)).reduced(), &[0, 0, 1]);
    }

    #[test]
    fn simplices_are_increasing_and_closed() {
        let s = subdivide(&NamedGraph::Path(3).build(), 3);
        for d in 0..s.counts().len() {
            for simplex in s.simplices(d) {
                assert!(simplex.windows(2).all(|w| w[0] < w[1]));
                if d > 0 {
                    for skip in 0..=d {
                        let mut face = simplex.to_vec();
                        face.remove(skip);
                        assert!(s.index_of(d - 1, &face).is_some());
                    }
                }
            }
        }
    }

    #[test]
    fn matches_cellular_route() {
        let mut skipped = 0;
        for g in generate::graphs_up_to(4) {
            for m in 2..=4 {
                let c = complex(&g, m);
                let s = match order_complex(&c, &Budget::default()) {
                    // products of three or more big simplices subdivide too finely
                    Err(Error::Budget { .. }) if c.dims().iter().sum::<usize>() > 1000 => {
                        skipped += 1;
                        continue;
                    }
                    s => s.unwrap(),
                };
                assert_eq!(betti_mod2(&s), cellular_betti(&c), "{g:?} into K_{m}");
            }
        }
        assert!(skipped < 12, "{skipped}");
        let roomy = Budget {
            subdivision: 50_000_000,
            ..Budget::default()
        };
        for (n, want) in [(5, vec![0, 1, 1, 1]), (6, vec![0, 1, 14])] {
            let c = complex(&NamedGraph::Cycle(n).build(), 4);
            let b = betti_mod2(&order_complex(&c, &roomy).unwrap());
            assert_eq!(b, cellular_betti(&c), "C_{n}");
            assert_eq!(b.reduced(), want.as_slice());
        }
    }

    #[test]
    fn skeleton_is_exact_below_cap() {
        let c = complex(&k(2), 5);
        let s = order_complex_skeleton(&c, 2, &Budget::default()).unwrap();
        assert!(s.is_truncated());
        let b = betti_mod2(&s);
        assert_eq!(b.reduced(), &[0, 0]);
        assert_eq!(b.get(2), None);
    }

    #[test]
    fn budget_and_truncation_errors() {
        let tight = Budget {
            subdivision: 10,
            ..Budget::default()
        };
        assert!(matches!(
            order_complex(&complex(&k(2), 4), &tight),
            Err(Error::Budget { .. })
        ));
        let cut = enumerate_cells(&k(2), &k(4), Some(1), &Budget::default()).unwrap();
        assert!(matches!(
            order_complex(&cut, &Budget::default()),
            Err(Error::Precondition(_))
        ));
    }
}
