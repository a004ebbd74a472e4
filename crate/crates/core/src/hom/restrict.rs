//! The subcomplex `Hom_I(G, H)` of `Hom(G \ I, H)`: cells that extend over
//! an independent set `I`.

use super::cells::{enumerate_cells, HomComplex, MultiCell};
use super::TargetMasks;
use crate::error::{Error, Result};
use crate::{Budget, Graph};

/// `Hom_I(G, H)` as a complex on `G \ I`.
#[derive(Debug, Clone)]
pub struct HomISubcomplex {
    /// Original label of each vertex of `G \ I`.
    pub kept: Vec<usize>,
    pub complex: HomComplex,
}

fn check_removed(g: &Graph, removed: &[usize]) -> Result<()> {
    for &v in removed {
        g.check_vertex(v)?;
    }
    if !g.is_independent(removed) {
        return Err(Error::precondition(format!(
            "{removed:?} is not an independent set"
        )));
    }
    Ok(())
}

fn is_complete(h: &Graph) -> bool {
    let m = h.vertex_count();
    h.edge_count() == m * m.saturating_sub(1) / 2
}

/// Decides extension of cells of `Hom(G \ I, H)` over `I`.
struct Extender<'a> {
    g: &'a Graph,
    t: TargetMasks,
    removed: Vec<usize>,
    /// Position in `G \ I` of each original vertex.
    position: Vec<usize>,
    complete_target: bool,
    m: usize,
}

impl<'a> Extender<'a> {
    fn new(g: &'a Graph, h: &Graph, removed: &[usize], kept: &[usize]) -> Self {
        let mut position = vec![usize::MAX; g.vertex_count()];
        for (i, &v) in kept.iter().enumerate() {
            position[v] = i;
        }
        Extender {
            g,
            t: TargetMasks::new(h),
            removed: removed.to_vec(),
            position,
            complete_target: is_complete(h),
            m: h.vertex_count(),
        }
    }

    /// `I` is independent, so each of its vertices is extended on its own;
    /// a nonempty set of admissible colors is all that is needed.
    fn extends(&self, cell: &MultiCell) -> bool {
        let sets = cell.sets();
        self.removed.iter().all(|&u| {
            let nbrs = self.g.neighbors(u).iter().map(|&w| sets[self.position[w]]);
            if self.complete_target && self.removed.len() == 1 {
                // into K_m: a free color exists iff the neighbors use at most m - 1
                let used = nbrs.fold(0u64, |acc, s| acc | s);
                (used.count_ones() as usize) < self.m
            } else {
                nbrs.fold(self.t.all(), |acc, s| acc & self.t.common_neighbors(s)) != 0
            }
        })
    }
}

/// Does `cell`, a cell of `Hom(g \ removed, h)` indexed by the surviving
/// vertices in increasing order, extend to a cell of `Hom(g, h)`?
pub fn extends_over(g: &Graph, h: &Graph, removed: &[usize], cell: &MultiCell) -> Result<bool> {
    check_removed(g, removed)?;
    let (rest, kept) = g.without_vertices(removed);
    if !super::is_multihomomorphism(&rest, h, cell.sets())? {
        return Err(Error::argument("not a cell of the restricted complex"));
    }
    Ok(Extender::new(g, h, removed, &kept).extends(cell))
}

/// Cells of `Hom(g \ removed, h)` that extend to cells of `Hom(g, h)`.
pub fn hom_i_subcomplex(
    g: &Graph,
    h: &Graph,
    removed: &[usize],
    budget: &Budget,
) -> Result<HomISubcomplex> {
    check_removed(g, removed)?;
    let (rest, kept) = g.without_vertices(removed);
    let full = enumerate_cells(&rest, h, None, budget)?;
    let ext = Extender::new(g, h, removed, &kept);
    // extension is inherited by faces, so the kept cells are face-closed
    let cells = full
        .cells()
        .iter()
        .filter(|c| ext.extends(c))
        .cloned()
        .collect();
    Ok(HomISubcomplex {
        kept,
        complex: HomComplex::from_cells(rest, h.clone(), cells, false),
    })
}

/// Every cell of `Hom(g \ v, K_m)` of dimension at most `m - deg(v) - 1`
/// extends over `v`.
pub fn verify_skeleton_extension(g: &Graph, v: usize, m: usize, budget: &Budget) -> Result<bool> {
    let deg = g.degree(v)?;
    let Some(top) = m.checked_sub(deg + 1) else {
        return Ok(true);
    };
    let (rest, kept) = g.without_vertices(&[v]);
    let km = crate::graph::NamedGraph::Complete(m).build();
    let skeleton = enumerate_cells(&rest, &km, Some(top), budget)?;
    let ext = Extender::new(g, &km, &[v], &kept);
    Ok(skeleton.cells().iter().all(|c| ext.extends(c)))
}
