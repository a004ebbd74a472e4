//! Fixed graph families that show up throughout the theory.

use super::Graph;
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

/// A named graph constructor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum NamedGraph {
    /// `K_n`.
    Complete(usize),
    /// `C_n`, vertices `0..n` in cyclic order.
    Cycle(usize),
    /// `P_n` on `n` vertices.
    Path(usize),
    /// `K_{i,j}`: parts `0..i` and `i..i+j`.
    CompleteBipartite(usize, usize),
    /// The 3-cube `Q_3`; vertex labels are the 3-bit coordinates.
    Cube,
    /// Two `C_r` rims `v_i = i`, `w_i = r + i` joined by rungs `v_i ~ w_i`.
    CircularLadder(usize),
    /// The domino: two 4-cycles sharing an edge.
    H1,
    /// `K_{2,3}`.
    H2,
}

/// The two forbidden bipartite patterns.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Pattern {
    H1,
    H2,
}

impl Pattern {
    pub fn graph(self) -> Graph {
        match self {
            Pattern::H1 => NamedGraph::H1.build(),
            Pattern::H2 => NamedGraph::H2.build(),
        }
    }
}

impl NamedGraph {
    pub fn build(self) -> Graph {
        let edges: Vec<(usize, usize)> = match self {
            NamedGraph::Complete(n) => (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .collect(),
            NamedGraph::Cycle(n) => {
                if n < 3 {
                    return NamedGraph::Path(n).build();
                }
                (0..n).map(|i| (i, (i + 1) % n)).collect()
            }
            NamedGraph::Path(n) => (1..n).map(|i| (i - 1, i)).collect(),
            NamedGraph::CompleteBipartite(i, j) => (0..i)
                .flat_map(|u| (i..i + j).map(move |v| (u, v)))
                .collect(),
            NamedGraph::Cube => (0..8usize)
                .flat_map(|u| (0..3).map(move |b| (u, u ^ (1 << b))))
                .filter(|(u, v)| u < v)
                .collect(),
            NamedGraph::CircularLadder(r) => {
                let mut e = Vec::with_capacity(3 * r);
                for i in 0..r {
                    e.push((i, (i + 1) % r));
                    e.push((r + i, r + (i + 1) % r));
                    e.push((i, r + i));
                }
                e
            }
            NamedGraph::H1 => vec![(0, 1), (0, 2), (2, 3), (0, 4), (4, 5), (5, 1), (1, 3)],
            NamedGraph::H2 => vec![(0, 1), (0, 2), (2, 3), (1, 3), (2, 4), (1, 4)],
        };
        Graph::from_edges(self.vertex_count(), edges).expect("named graph edges are valid")
    }

    pub fn vertex_count(self) -> usize {
        match self {
            NamedGraph::Complete(n) | NamedGraph::Cycle(n) | NamedGraph::Path(n) => n,
            NamedGraph::CompleteBipartite(i, j) => i + j,
            NamedGraph::Cube => 8,
            NamedGraph::CircularLadder(r) => 2 * r,
            NamedGraph::H1 => 6,
            NamedGraph::H2 => 5,
        }
    }
}

impl fmt::Display for NamedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NamedGraph::Complete(n) => write!(f, "k{n}"),
            NamedGraph::Cycle(n) => write!(f, "c{n}"),
            NamedGraph::Path(n) => write!(f, "p{n}"),
            NamedGraph::CompleteBipartite(i, j) => write!(f, "kij:{i},{j}"),
            NamedGraph::Cube => write!(f, "q3"),
            NamedGraph::CircularLadder(r) => write!(f, "ladder{r}"),
            NamedGraph::H1 => write!(f, "h1"),
            NamedGraph::H2 => write!(f, "h2"),
        }
    }
}

/// Parses keywords such as `k4`, `c6`, `p3`, `q3`, `ladder6`, `h1`, `h2`
/// and `kij:3,5`.
impl FromStr for NamedGraph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().to_ascii_lowercase();
        let bad = || Error::argument(format!("unknown named graph '{s}'"));
        let num = |t: &str| t.parse::<usize>().map_err(|_| bad());
        match s.as_str() {
            "q3" | "cube" => return Ok(NamedGraph::Cube),
            "h1" => return Ok(NamedGraph::H1),
            "h2" => return Ok(NamedGraph::H2),
            _ => {}
        }
        if let Some(rest) = s.strip_prefix("kij:") {
            let (i, j) = rest.split_once(',').ok_or_else(bad)?;
            return Ok(NamedGraph::CompleteBipartite(
                num(i.trim())?,
                num(j.trim())?,
            ));
        }
        if let Some(rest) = s.strip_prefix("ladder") {
            return Ok(NamedGraph::CircularLadder(num(rest)?));
        }
        if let Some(rest) = s.strip_prefix('k') {
            return Ok(NamedGraph::Complete(num(rest)?));
        }
        if let Some(rest) = s.strip_prefix('c') {
            return Ok(NamedGraph::Cycle(num(rest)?));
        }
        if let Some(rest) = s.strip_prefix('p') {
            return Ok(NamedGraph::Path(num(rest)?));
        }
        Err(bad())
    }
}
