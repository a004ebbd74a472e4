use super::{bits, submasks, ColorSet, TargetMasks};
use crate::error::{Error, Result};
use crate::{Budget, Graph};
use serde_json::{json, Value};

/// A multihomomorphism: one nonempty color set per source vertex.
///
/// Ordering is lexicographic on the masks, which is the enumeration order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultiCell {
    sets: Box<[ColorSet]>,
}

impl MultiCell {
    /// Wraps raw masks without checking the edge condition.
    pub fn new(sets: impl Into<Box<[ColorSet]>>) -> Self {
        MultiCell { sets: sets.into() }
    }

    /// The 0-cell of a vertex map.
    pub fn from_map(f: &[usize]) -> Self {
        MultiCell::new(f.iter().map(|&a| 1u64 << a).collect::<Vec<_>>())
    }

    pub fn sets(&self) -> &[ColorSet] {
        &self.sets
    }

    /// `sum_v (|eta(v)| - 1)`.
    pub fn dimension(&self) -> usize {
        self.sets.iter().map(|s| s.count_ones() as usize - 1).sum()
    }

    /// Containment in every coordinate.
    pub fn is_face_of(&self, other: &MultiCell) -> bool {
        self.sets.len() == other.sets.len()
            && self
                .sets
                .iter()
                .zip(other.sets.iter())
                .all(|(a, b)| a & !b == 0)
    }

    /// Codimension-1 faces: drop one color at a vertex holding two or more.
    pub fn facets(&self) -> impl Iterator<Item = MultiCell> + '_ {
        self.sets.iter().enumerate().flat_map(move |(v, &s)| {
            let drops = if s.count_ones() >= 2 { s } else { 0 };
            bits(drops).map(move |a| {
                let mut sets = self.sets.clone();
                sets[v] &= !(1u64 << a);
                MultiCell { sets }
            })
        })
    }
}

/// Does `sets` satisfy nonemptiness and the edge condition for `g -> h`?
pub fn is_multihomomorphism(g: &Graph, h: &Graph, sets: &[ColorSet]) -> Result<bool> {
    let t = TargetMasks::new(h);
    if sets.len() != g.vertex_count() {
        return Err(Error::argument(format!(
            "cell has {} sets for a graph on {} vertices",
            sets.len(),
            g.vertex_count()
        )));
    }
    if let Some(s) = sets.iter().find(|&&s| s & !t.all() != 0) {
        return Err(Error::argument(format!(
            "color set {s:#b} outside a target on {} vertices",
            h.vertex_count()
        )));
    }
    Ok(sets.iter().all(|&s| s != 0)
        && g.edges()
            .all(|(x, y)| sets[y] & !t.common_neighbors(sets[x]) == 0))
}

/// Cells of `Hom(G, H)`, grouped by dimension, with codimension-1 faces.
#[derive(Debug, Clone)]
pub struct HomComplex {
    pub source: Graph,
    pub target: Graph,
    /// Sorted by dimension, then lexicographically.
    cells: Vec<MultiCell>,
    /// `cells[dim_start[d]..dim_start[d + 1]]` are the cells of dimension `d`.
    dim_start: Vec<usize>,
    /// Global indices of the facets of each cell, ascending.
    faces: Vec<Vec<u32>>,
    /// Some cell above the dimension cap was left out.
    truncated: bool,
}

impl HomComplex {
    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn cells(&self) -> &[MultiCell] {
        &self.cells
    }

    pub fn cell(&self, i: usize) -> &MultiCell {
        &self.cells[i]
    }

    pub fn faces(&self, i: usize) -> &[u32] {
        &self.faces[i]
    }

    /// Top dimension, `None` for the empty complex.
    pub fn dimension(&self) -> Option<usize> {
        (self.dim_start.len() > 1).then(|| self.dim_start.len() - 2)
    }

    /// Number of cells in each dimension.
    pub fn dims(&self) -> Vec<usize> {
        self.dim_start.windows(2).map(|w| w[1] - w[0]).collect()
    }

    /// Global index range of the cells of dimension `d`.
    pub fn range_of_dim(&self, d: usize) -> std::ops::Range<usize> {
        match (self.dim_start.get(d), self.dim_start.get(d + 1)) {
            (Some(&a), Some(&b)) => a..b,
            _ => self.cells.len()..self.cells.len(),
        }
    }

    pub fn cells_of_dim(&self, d: usize) -> &[MultiCell] {
        &self.cells[self.range_of_dim(d)]
    }

    pub fn index_of(&self, cell: &MultiCell) -> Option<usize> {
        let r = self.range_of_dim(cell.dimension());
        self.cells[r.clone()]
            .binary_search(cell)
            .ok()
            .map(|i| r.start + i)
    }

    pub fn contains(&self, cell: &MultiCell) -> bool {
        self.index_of(cell).is_some()
    }

    /// Were cells above a dimension cap dropped?
    pub fn is_truncated(&self) -> bool {
        self.truncated
    }

    /// `sum (-1)^dim` over all cells.
    pub fn euler_characteristic(&self) -> Result<i64> {
        if self.truncated {
            return Err(Error::precondition(
                "Euler characteristic of a truncated complex",
            ));
        }
        Ok(self
            .dims()
            .iter()
            .enumerate()
            .map(|(d, &c)| if d % 2 == 0 { c as i64 } else { -(c as i64) })
            .sum())
    }

    /// `{dims, cells, faces}` with cells as lists of masks.
    pub fn to_json(&self) -> Value {
        json!({
            "dims": self.dims(),
            "cells": self.cells.iter().map(|c| c.sets().to_vec()).collect::<Vec<_>>(),
            "faces": self.faces,
        })
    }

    /// Builds the face relation from a face-closed list of cells.
    pub(crate) fn from_cells(
        source: Graph,
        target: Graph,
        mut cells: Vec<MultiCell>,
        truncated: bool,
    ) -> Self {
        cells.sort_by(|a, b| a.dimension().cmp(&b.dimension()).then_with(|| a.cmp(b)));
        let mut dim_start = vec![0];
        for (i, c) in cells.iter().enumerate() {
            while dim_start.len() <= c.dimension() {
                dim_start.push(i);
            }
        }
        if !cells.is_empty() {
            dim_start.push(cells.len());
        }
        let mut complex = HomComplex {
            source,
            target,
            cells,
            dim_start,
            faces: Vec::new(),
            truncated,
        };
        complex.faces = complex
            .cells
            .iter()
            .map(|c| {
                let mut f: Vec<u32> = c
                    .facets()
                    .map(|f| complex.index_of(&f).expect("complex is closed under faces") as u32)
                    .collect();
                f.sort_unstable();
                f
            })
            .collect();
        complex
    }
}

struct Search<'a> {
    g: &'a Graph,
    t: TargetMasks,
    max_dim: usize,
    budget: u64,
    visited: u64,
    sets: Vec<ColorSet>,
    out: Vec<MultiCell>,
}

impl Search<'_> {
    /// Colors compatible with the sets already placed on earlier neighbors.
    fn allowed(&self, v: usize) -> ColorSet {
        self.g
            .neighbors(v)
            .iter()
            .take_while(|&&w| w < v)
            .fold(self.t.all(), |acc, &w| {
                acc & self.t.common_neighbors(self.sets[w])
            })
    }

    fn run(&mut self, dim: usize) -> Result<()> {
        self.visited += 1;
        if self.visited > self.budget {
            return Err(Error::Budget {
                what: "hom-complex enumeration",
                limit: self.budget,
            });
        }
        let v = self.sets.len();
        if v == self.g.vertex_count() {
            self.out.push(MultiCell::new(self.sets.clone()));
            return Ok(());
        }
        for s in submasks(self.allowed(v)) {
            let d = dim + s.count_ones() as usize - 1;
            if d > self.max_dim {
                continue;
            }
            self.sets.push(s);
            self.run(d)?;
            self.sets.pop();
        }
        Ok(())
    }
}

/// All cells of `Hom(g, h)`, optionally only those of dimension at most
/// `max_dim`.
///
/// The search visits partial assignments vertex by vertex; more than
/// `budget.enumeration` visits is an error, never a silent truncation.
pub fn enumerate_cells(
    g: &Graph,
    h: &Graph,
    max_dim: Option<usize>,
    budget: &Budget,
) -> Result<HomComplex> {
    let mut search = Search {
        g,
        t: TargetMasks::new(h),
        max_dim: max_dim.unwrap_or(usize::MAX),
        budget: budget.enumeration,
        visited: 0,
        sets: Vec::with_capacity(g.vertex_count()),
        out: Vec::new(),
    };
    search.run(0)?;
    let truncated = max_dim.is_some_and(|d| {
        search
            .out
            .iter()
            .filter(|c| c.dimension() == d)
            .any(|c| has_coface(g, &search.t, c))
    });
    Ok(HomComplex::from_cells(
        g.clone(),
        h.clone(),
        search.out,
        truncated,
    ))
}

/// Can some color be added to `cell` at one vertex?
fn has_coface(g: &Graph, t: &TargetMasks, cell: &MultiCell) -> bool {
    let sets = cell.sets();
    (0..sets.len()).any(|v| {
        let room = g
            .neighbors(v)
            .iter()
            .fold(t.all(), |acc, &w| acc & t.common_neighbors(sets[w]));
        room & !sets[v] != 0
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, NamedGraph};

    fn k(n: usize) -> Graph {
        NamedGraph::Complete(n).build()
    }

    fn cells(g: &Graph, h: &Graph) -> HomComplex {
        enumerate_cells(g, h, None, &Budget::default()).unwrap()
    }

    /// Every tuple of nonempty subsets, filtered by the edge condition.
    fn brute_cells(g: &Graph, h: &Graph) -> Vec<MultiCell> {
        let n = g.vertex_count();
        let full = (1u64 << h.vertex_count()) - 1;
        let mut out = Vec::new();
        let mut sets = vec![1u64; n];
        loop {
            if is_multihomomorphism(g, h, &sets).unwrap() {
                out.push(MultiCell::new(sets.clone()));
            }
            let mut i = n;
            loop {
                if i == 0 {
                    return out;
                }
                i -= 1;
                if sets[i] < full {
                    sets[i] += 1;
                    break;
                }
                sets[i] = 1;
            }
        }
    }

    #[test]
    fn small_complexes() {
        let c = cells(&k(2), &k(3));
        assert_eq!(c.dims(), vec![6, 6]);
        assert_eq!(c.euler_characteristic().unwrap(), 0);

        let point = cells(&Graph::new(1), &k(3));
        assert_eq!(point.len(), 7);
        assert_eq!(point.dims(), vec![3, 3, 1]);

        let c = cells(&k(3), &k(3));
        assert_eq!(c.dims(), vec![6]);
        assert_eq!(c.euler_characteristic().unwrap(), 6);

        assert_eq!(cells(&k(2), &k(4)).euler_characteristic().unwrap(), 2);
        assert!(cells(&k(4), &k(3)).is_empty());
        assert_eq!(cells(&k(4), &k(3)).dimension(), None);
    }

    #[test]
    fn matches_brute_force() {
        for g in generate::graphs_up_to(4) {
            for m in 2..=4 {
                let mut want = brute_cells(&g, &k(m));
                want.sort_by_key(|c| c.dimension());
                assert_eq!(cells(&g, &k(m)).cells(), &want[..]);
            }
        }
    }

    #[test]
    fn hom_k2_km_cell_counts() {
        // an ordered pair of disjoint nonempty subsets of [m]
        for m in 2..=6usize {
            let c = cells(&k(2), &k(m));
            let mut want = vec![0usize; 2 * m];
            for a in 1..m {
                for b in 1..=m - a {
                    let binom =
                        |n: usize, r: usize| (0..r).fold(1, |acc, i| acc * (n - i) / (i + 1));
                    want[a + b - 2] += binom(m, a) * binom(m - a, b);
                }
            }
            want.truncate(m - 1);
            assert_eq!(c.dims(), want, "m = {m}");
        }
    }

    #[test]
    fn faces_are_closed_and_ordered() {
        for (g, m) in [
            (NamedGraph::Cycle(5).build(), 4),
            (NamedGraph::Path(4).build(), 4),
            (k(2), 5),
        ] {
            let c = cells(&g, &k(m));
            for i in 0..c.len() {
                let cell = c.cell(i);
                assert!(is_multihomomorphism(&g, &k(m), cell.sets()).unwrap());
                let faces = c.faces(i);
                assert_eq!(
                    faces.len(),
                    cell.sets()
                        .iter()
                        .map(|s| if s.count_ones() > 1 {
                            s.count_ones() as usize
                        } else {
                            0
                        })
                        .sum::<usize>()
                );
                for &f in faces {
                    let face = c.cell(f as usize);
                    assert!(face.is_face_of(cell));
                    assert_eq!(face.dimension() + 1, cell.dimension());
                }
            }
        }
    }

    #[test]
    fn product_rule_for_disjoint_unions() {
        let small = generate::graphs_up_to(3);
        let mut pairs = Vec::new();
        for a in &small {
            for b in &small {
                pairs.push((a.clone(), b.clone()));
            }
        }
        pairs.push((NamedGraph::Cycle(4).build(), NamedGraph::Path(4).build()));
        pairs.push((
            NamedGraph::Complete(3).build(),
            NamedGraph::Cycle(4).build(),
        ));
        for (a, b) in &pairs {
            for m in [3, 4] {
                // 15^6 cells for six isolated vertices into K_4
                if m == 4 && a.vertex_count() + b.vertex_count() > 5 {
                    continue;
                }
                let (ca, cb) = (cells(a, &k(m)).dims(), cells(b, &k(m)).dims());
                let joint = cells(&a.disjoint_union(b), &k(m)).dims();
                let mut want = vec![0usize; (ca.len() + cb.len()).saturating_sub(1)];
                for (i, x) in ca.iter().enumerate() {
                    for (j, y) in cb.iter().enumerate() {
                        want[i + j] += x * y;
                    }
                }
                assert_eq!(joint, want);
            }
        }
    }

    #[test]
    fn truncation() {
        let budget = Budget::default();
        let c = enumerate_cells(&k(2), &k(4), Some(1), &budget).unwrap();
        assert!(c.is_truncated());
        assert_eq!(c.dims(), vec![12, 24]);
        assert!(c.euler_characteristic().is_err());
        let c = enumerate_cells(&k(2), &k(4), Some(2), &budget).unwrap();
        assert!(!c.is_truncated());
        assert_eq!(c.euler_characteristic().unwrap(), 2);
    }

    #[test]
    fn budget_is_enforced() {
        let tight = Budget {
            enumeration: 100,
            ..Budget::default()
        };
        match enumerate_cells(&NamedGraph::Cycle(6).build(), &k(4), None, &tight) {
            Err(Error::Budget { limit, .. }) => assert_eq!(limit, 100),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn cycle_cell_counts() {
        let want = [60, 674, 2160, 13070, 55440];
        for (n, &w) in (3..=7).zip(&want) {
            assert_eq!(
                cells(&NamedGraph::Cycle(n).build(), &k(4)).len(),
                w,
                "C_{n}"
            );
        }
    }

    #[test]
    fn json_shape() {
        let v = cells(&k(2), &k(3)).to_json();
        assert_eq!(v["dims"], json!([6, 6]));
        assert_eq!(v["cells"].as_array().unwrap().len(), 12);
        assert_eq!(v["faces"][6].as_array().unwrap().len(), 2);
    }
}
