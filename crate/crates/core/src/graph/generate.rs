//! Exhaustive generation of small graphs up to isomorphism.
//!
//! Graphs on `n` vertices are produced by attaching a new vertex, in every
//! possible way, to each isomorphism class on `n - 1` vertices and
//! deduplicating by a canonical code (the minimum edge bitmask over all
//! relabelings). Practical up to `n = 7`.

use super::{is_connected, Graph};
use std::collections::BTreeSet;

const MAX_N: usize = 8;

fn pair_index(u: usize, v: usize) -> usize {
    let (a, b) = if u < v { (u, v) } else { (v, u) };
    b * (b - 1) / 2 + a
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(rest: &mut Vec<usize>, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest.is_empty() {
            out.push(cur.clone());
            return;
        }
        for i in 0..rest.len() {
            let x = rest.remove(i);
            cur.push(x);
            go(rest, cur, out);
            cur.pop();
            rest.insert(i, x);
        }
    }
    let mut out = Vec::new();
    go(&mut (0..n).collect(), &mut Vec::new(), &mut out);
    out
}

struct Canonizer {
    n: usize,
    /// For each relabeling, where each pair index goes.
    pair_maps: Vec<Vec<usize>>,
}

impl Canonizer {
    fn new(n: usize) -> Self {
        let pairs = n * n.saturating_sub(1) / 2;
        let pair_maps = permutations(n)
            .into_iter()
            .map(|p| {
                let mut m = vec![0; pairs];
                for v in 1..n {
                    for u in 0..v {
                        m[pair_index(u, v)] = pair_index(p[u], p[v]);
                    }
                }
                m
            })
            .collect();
        Canonizer { n, pair_maps }
    }

    fn canonical(&self, code: u64) -> u64 {
        let bits: Vec<usize> = (0..64).filter(|&i| code >> i & 1 == 1).collect();
        self.pair_maps
            .iter()
            .map(|m| bits.iter().fold(0u64, |acc, &i| acc | 1 << m[i]))
            .min()
            .unwrap_or(0)
    }

    fn decode(&self, code: u64) -> Graph {
        let mut g = Graph::new(self.n);
        for v in 1..self.n {
            for u in 0..v {
                if code >> pair_index(u, v) & 1 == 1 {
                    g.add_edge(u, v).unwrap();
                }
            }
        }
        g
    }
}

/// One representative per isomorphism class of graphs on exactly `n`
/// vertices, in increasing order of canonical code.
pub fn graphs_up_to_iso(n: usize) -> Vec<Graph> {
    assert!(
        n <= MAX_N,
        "exhaustive generation is limited to {MAX_N} vertices"
    );
    let mut codes: BTreeSet<u64> = BTreeSet::from([0]);
    for k in 2..=n {
        let canon = Canonizer::new(k);
        let mut next = BTreeSet::new();
        for &code in &codes {
            // the new vertex is k - 1; pairs (u, k - 1) occupy the top bits
            for nbrs in 0u64..(1 << (k - 1)) {
                let mut c = code;
                for u in 0..k - 1 {
                    if nbrs >> u & 1 == 1 {
                        c |= 1 << pair_index(u, k - 1);
                    }
                }
                next.insert(canon.canonical(c));
            }
        }
        codes = next;
    }
    if n == 0 {
        return vec![Graph::new(0)];
    }
    let canon = Canonizer::new(n);
    codes.into_iter().map(|c| canon.decode(c)).collect()
}

/// Connected representatives on exactly `n` vertices.
pub fn connected_graphs_up_to_iso(n: usize) -> Vec<Graph> {
    graphs_up_to_iso(n)
        .into_iter()
        .filter(is_connected)
        .collect()
}

/// Connected representatives on `1..=max_n` vertices.
pub fn connected_graphs_up_to(max_n: usize) -> Vec<Graph> {
    (1..=max_n).flat_map(connected_graphs_up_to_iso).collect()
}

/// All representatives on `1..=max_n` vertices.
pub fn graphs_up_to(max_n: usize) -> Vec<Graph> {
    (1..=max_n).flat_map(graphs_up_to_iso).collect()
}

/// Every way of adding a vertex `n - 1` to each class on `n - 1` vertices.
///
/// Each isomorphism class on `n` vertices occurs at least once, usually
/// several times; no canonical forms are computed, so this reaches one size
/// further than [`graphs_up_to_iso`].
pub fn one_vertex_extensions(n: usize) -> Vec<Graph> {
    assert!(
        (1..=MAX_N + 1).contains(&n),
        "extensions are limited to {} vertices",
        MAX_N + 1
    );
    let mut out = Vec::new();
    for base in graphs_up_to_iso(n - 1) {
        for nbrs in 0u64..(1 << (n - 1)) {
            let mut g = Graph::new(n);
            for (u, v) in base.edges() {
                g.add_edge(u, v).unwrap();
            }
            for u in (0..n - 1).filter(|&u| nbrs >> u & 1 == 1) {
                g.add_edge(u, n - 1).unwrap();
            }
            out.push(g);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_counts() {
        let all: Vec<usize> = (1..=6).map(|n| graphs_up_to_iso(n).len()).collect();
        assert_eq!(all, vec![1, 2, 4, 11, 34, 156]);
        let conn: Vec<usize> = (1..=6)
            .map(|n| connected_graphs_up_to_iso(n).len())
            .collect();
        assert_eq!(conn, vec![1, 1, 2, 6, 21, 112]);
        assert_eq!(connected_graphs_up_to(5).len(), 31);
    }

    #[test]
    fn extensions_cover_every_class() {
        let canon = Canonizer::new(5);
        let code = |g: &Graph| {
            canon.canonical(
                g.edges()
                    .fold(0u64, |acc, (u, v)| acc | 1 << pair_index(u, v)),
            )
        };
        let mut seen: Vec<u64> = one_vertex_extensions(5).iter().map(code).collect();
        seen.sort_unstable();
        seen.dedup();
        assert_eq!(seen.len(), 34);
        assert_eq!(one_vertex_extensions(5).len(), 11 * 16);
    }
}
