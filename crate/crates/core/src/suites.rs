//! Exhaustive and Monte-Carlo verification suites, shared by the CLI and
//! the acceptance tests. Each suite reports what it checked and every
//! counterexample it found.

use crate::cycles::{
    bipartite_witness, interchange, ladder_witness, odd_cycle_witness, return_number, CycleHom,
};
use crate::error::Result;
use crate::graph::{chromatic_number, degeneracy, generate, k_core, NamedGraph};
use crate::hom::{enumerate_0cells, enumerate_cells, hom_components, verify_skeleton_extension};
use crate::random::{
    classify_m3, limit_probability_m3, run_core_experiment, run_m3_experiment, GnpConfig, M3Class,
};
use crate::topology::{betti_mod2, cellular_betti, order_complex, verify_degeneracy_connectivity};
use crate::{Budget, Error, Graph};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

/// Outcome of one suite.
#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub passed: bool,
    /// Number of individual instances checked.
    pub checked: usize,
    pub counterexamples: Vec<Value>,
    /// Measurements and skipped cases worth recording.
    pub details: Vec<Value>,
}

impl SuiteReport {
    fn new(suite: &str) -> Self {
        SuiteReport {
            suite: suite.to_string(),
            passed: true,
            checked: 0,
            counterexamples: Vec::new(),
            details: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, counterexample: impl FnOnce() -> Value) {
        self.checked += 1;
        if !ok {
            self.passed = false;
            self.counterexamples.push(counterexample());
        }
    }

    fn finish(mut self) -> Self {
        self.passed = self.counterexamples.is_empty();
        self
    }
}

/// Scale knobs; `Default` is the acceptance scale.
#[derive(Debug, Clone)]
pub struct SuiteOptions {
    pub max_vertices: Option<usize>,
    pub max_n: Option<usize>,
    pub m: Option<usize>,
    pub n: Option<usize>,
    pub trials: Option<usize>,
    pub seed: u64,
    pub budget: Budget,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            max_vertices: None,
            max_n: None,
            m: None,
            n: None,
            trials: None,
            seed: 20_240_601,
            budget: Budget::default(),
        }
    }
}

pub const SUITES: [&str; 11] = [
    "thm2_8",
    "thm4_1",
    "thm4_7",
    "lem3_3",
    "lem4_4",
    "lem4_6",
    "thm5_4",
    "cycle_table",
    "q3",
    "core_threshold",
    "oracles",
];

pub fn run_suite(name: &str, opts: &SuiteOptions) -> Result<SuiteReport> {
    match name {
        "thm2_8" => connectivity_bound(opts),
        "thm4_1" => odd_cycles_disconnect(opts),
        "thm4_7" => bipartite_witnesses(opts),
        "lem3_3" => low_skeleton_extends(opts),
        "lem4_4" => return_number_homogeneous(opts),
        "lem4_6" => swap_complements(opts),
        "thm5_4" => sparse_limit(opts),
        "cycle_table" => cycle_table(opts),
        "q3" => cube_controls(opts),
        "core_threshold" => core_threshold(opts),
        "oracles" => oracles(opts),
        other => Err(Error::Argument(format!(
            "unknown suite '{other}', expected one of {}",
            SUITES.join(", ")
        ))),
    }
}

fn graph_json(g: &Graph) -> Value {
    json!({ "n": g.vertex_count(), "edges": g.edges().collect::<Vec<_>>() })
}

fn k(m: usize) -> Graph {
    NamedGraph::Complete(m).build()
}

/// `Hom(G, K_m)` is homologically `(m - D(G) - 2)`-connected for every
/// connected `G` on at most 5 vertices and `m` in `{3, 4}`.
pub fn connectivity_bound(opts: &SuiteOptions) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("thm2_8");
    let graphs = generate::connected_graphs_up_to(opts.max_vertices.unwrap_or(5));
    let ms: Vec<usize> = opts.m.map_or(vec![3, 4], |m| vec![m]);
    let results: Vec<(usize, usize, bool)> = graphs
        .par_iter()
        .enumerate()
        .flat_map_iter(|(i, g)| ms.iter().map(move |&m| (i, m, g)))
        .map(|(i, m, g)| verify_degeneracy_connectivity(g, m, &opts.budget).map(|ok| (i, m, ok)))
        .collect::<Result<_>>()?;
    for (i, m, ok) in results {
        let g = &graphs[i];
        report.check(ok, || {
            json!({
                "graph": graph_json(g),
                "m": m,
                "expected": m as i64 - degeneracy(g).value as i64 - 2,
                "got": "lower connectivity",
            })
        });
    }
    report
        .details
        .push(json!({ "graphs": graphs.len(), "m": ms }));
    Ok(report.finish())
}

/// Every connected graph with chromatic number 3 on at most 6 vertices has
/// a disconnected `Hom(G, K_3)`, and the odd-cycle witness separates.
pub fn odd_cycles_disconnect(opts: &SuiteOptions) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("thm4_1");
    let graphs: Vec<Graph> = generate::connected_graphs_up_to(opts.max_vertices.unwrap_or(6))
        .into_iter()
        .filter(|g| chromatic_number(g) == 3)
        .collect();
    let results: Vec<(usize, bool)> = graphs
        .par_iter()
        .map(|g| {
            let count = hom_components(g, &k(3)).count;
            let separated = odd_cycle_witness(g)?.separates(g)?;
            Ok((count, separated))
        })
        .collect::<Result<_>>()?;
    for (g, (count, separated)) in graphs.iter().zip(results) {
        report.check(count >= 2 && separated, || {
            json!({ "graph": graph_json(g), "m": 3, "expected": ">= 2 components", "got": count })
        });
    }
    Ok(report.finish())
}

fn attach(n: usize, extra: &[(usize, usize)], total: usize) -> Graph {
    let mut g = Graph::new(total);
    for i in 0..n {
        g.add_edge(i, (i + 1) % n).unwrap();
    }
    for &(u, v) in extra {
        g.add_edge(u, v).unwrap();
    }
    g
}

/// Bipartite graphs meeting the forbidden-pattern hypotheses: bare long
/// cycles, cycles with pendant trees, and cycles with a vertex attached to
/// two cycle vertices.
pub fn bipartite_fixtures() -> Vec<(String, Graph)> {
    vec![
        ("C6".into(), NamedGraph::Cycle(6).build()),
        ("C8".into(), NamedGraph::Cycle(8).build()),
        ("C10".into(), NamedGraph::Cycle(10).build()),
        ("C6 + pendant path".into(), attach(6, &[(0, 6), (6, 7)], 8)),
        (
            "C6 + pendant tree".into(),
            attach(6, &[(0, 6), (6, 7), (6, 8), (3, 9)], 10),
        ),
        (
            "C8 + pendant tree".into(),
            attach(8, &[(1, 8), (8, 9), (9, 10), (8, 11), (4, 12)], 13),
        ),
        (
            "C6 + attached vertex".into(),
            attach(6, &[(0, 6), (2, 6)], 7),
        ),
        (
            "C8 + attached vertex".into(),
            attach(8, &[(1, 8), (3, 8)], 9),
        ),
        (
            "C8 + attached vertex + tail".into(),
            attach(8, &[(1, 8), (3, 8), (8, 9)], 10),
        ),
    ]
}

/// The constructive bipartite witnesses and the ladder witness separate
/// components, checked by exhaustive union-find.
pub fn bipartite_witnesses(_opts: &SuiteOptions) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("thm4_7");
    for (name, g) in bipartite_fixtures() {
        let outcome = bipartite_witness(&g).and_then(|w| Ok((w.separates(&g)?, w)));
        match outcome {
            Ok((ok, w)) => report.check(ok, || {
                json!({ "fixture": name, "graph": graph_json(&g), "witness": w, "got": "same component" })
            }),
            Err(e) => report.check(false, || {
                json!({ "fixture": name, "graph": graph_json(&g), "error": e.to_string() })
            }),
        }
    }
    let ladder = NamedGraph::CircularLadder(6).build();
    let w = ladder_witness();
    let rim = return_number(&w.tau()?);
    report.check(
        rim == 0 && w.separates(&ladder)?,
        || json!({ "fixture": "circular ladder", "witness": w, "rim_return_number": rim }),
    );
    Ok(report.finish())
}

/// Cells of `Hom(G \ v, K_m)` of dimension at most `m - deg(v) - 1`
/// extend over `v`, for all graphs on at most 5 vertices.
pub fn low_skeleton_extends(opts: &SuiteOptions) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("lem3_3");
    let m = opts.m.unwrap_or(4);
    let graphs = generate::graphs_up_to(opts.max_vertices.unwrap_or(5));
    let cases: Vec<(usize, usize)> = graphs
        .iter()
        .enumerate()
        .flat_map(|(i, g)| (0..g.vertex_count()).map(move |v| (i, v)))
        .collect();
    let results: Vec<bool> = cases
        .par_iter()
        .map(|&(i, v)| verify_skeleton_extension(&graphs[i], v, m, &opts.budget))
        .collect::<Result<_>>()?;
    for (&(i, v), ok) in cases.iter().zip(results) {
        report.check(
            ok,
            || json!({ "graph": graph_json(&graphs[i]), "v": v, "m": m }),
        );
    }
    Ok(report.finish())
}

/// Return numbers are constant on components of `Hom(C_n, C_3)`.
pub fn return_number_homogeneous(opts: &SuiteOptions) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("lem4_4");
    let m = opts.m.unwrap_or(3);
    for n in 3..=opts.max_n.unwrap_or(10) {
        let comps = hom_components(&NamedGraph::Cycle(n).build(), &NamedGraph::Cycle(m).build());
        let mut seen: Vec<Option<usize>> = vec![None; comps.count];
        let mut ok = true;
        for (f, &c) in comps.cells.iter().zip(&comps.component) {
            let r = return_number(&CycleHom::new(m, f.iter().map(|&a| a + 1).collect())?);
            ok &= *seen[c].get_or_insert(r) == r;
        }
        report.check(
            ok,
            || json!({ "n": n, "m": m, "got": "mixed return numbers" }),
        );
        report
            .details
            .push(json!({ "n": n, "components": comps.count }));
    }
    Ok(report.finish())
}

/// `r(eta) + r(eta_{l,j}) = n` for every proper 3-coloring of `C_n`.
pub fn swap_complements(opts: &SuiteOptions) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("lem4_6");
    for n in 3..=opts.max_n.unwrap_or(12) {
        for f in enumerate_0cells(&NamedGraph::Cycle(n).build(), &k(3)) {
            let eta = CycleHom::new(3, f.iter().map(|&a| a + 1).collect())?;
            for (l, j) in [(1, 2), (1, 3), (2, 3)] {
                let swapped = CycleHom::new(3, interchange(eta.image(), l, j)?)?;
                let sum = return_number(&eta) + return_number(&swapped);
                report.check(sum == n, || {
                    json!({ "n": n, "eta": eta.image(), "swap": [l, j], "expected": n, "got": sum })
                });
            }
        }
    }
    Ok(report.finish())
}

/// Empirical `Pr[Hom(G(n, c/n), K_3) connected]` against its limit.
pub fn sparse_limit(opts: &SuiteOptions) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("thm5_4");
    let tolerance = 0.06;
    for c in [0.3, 0.5, 0.8] {
        let cfg = GnpConfig {
            n: opts.n.unwrap_or(1000),
            c,
            trials: opts.trials.unwrap_or(300),
            master_seed: opts.seed,
        };
        let r = run_m3_experiment(&cfg, &opts.budget)?;
        let theory = limit_probability_m3(c)?;
        let gap = (r.pr_connected - theory).abs();
        report.details.push(json!({
            "c": c,
            "empirical": r.pr_connected,
            "interval": r.pr_connected_interval,
            "theory": theory,
            "unknown": r.unknown,
            "triangle_mean": r.cycle_means[0],
            "triangle_mean_theory": r.cycle_means_theory[0],
        }));
        report.check(
            gap <= tolerance,
            || json!({ "c": c, "expected": theory, "got": r.pr_connected, "tolerance": tolerance }),
        );
    }
    Ok(report.finish())
}

/// `Hom(C_n, K_4)`: odd cycles give connected complexes with `b~_1 != 0`,
/// even cycles of length at least 6 give `b~_1 = 0` and `b~_2 != 0`.
///
/// Betti numbers come from cellular homology; the order complex is used as
/// a second route whenever it fits the subdivision budget.
pub fn cycle_table(opts: &SuiteOptions) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("cycle_table");
    let m = opts.m.unwrap_or(4);
    for n in [3, 5, 7, 6, 8] {
        let c = enumerate_cells(&NamedGraph::Cycle(n).build(), &k(m), None, &opts.budget)?;
        let b = cellular_betti(&c);
        let ok = if n % 2 == 1 {
            b.get(0) == Some(0) && b.get(1).is_some_and(|x| x > 0)
        } else {
            b.get(0) == Some(0) && b.get(1) == Some(0) && b.get(2).is_some_and(|x| x > 0)
        };
        report.check(ok, || json!({ "n": n, "m": m, "got": b.reduced() }));
        // cycles up to C_7 are always cross-checked; C_7 needs about 3.6e7 simplices
        let mut budget = opts.budget;
        if n <= 7 {
            budget.subdivision = budget.subdivision.max(40_000_000);
        }
        let simplicial = match order_complex(&c, &budget) {
            Ok(s) => {
                let agrees = betti_mod2(&s) == b;
                report.check(agrees, || {
                    json!({ "n": n, "m": m, "cellular": b.reduced(), "simplicial": betti_mod2(&s).reduced() })
                });
                json!(agrees)
            }
            Err(Error::Budget { limit, .. }) => {
                json!({ "skipped": "subdivision budget", "limit": limit })
            }
            Err(e) => return Err(e),
        };
        report.details.push(json!({
            "n": n,
            "cells": c.dims(),
            "betti": b.reduced(),
            "order_complex_agrees": simplicial,
        }));
    }
    Ok(report.finish())
}

/// `Hom(Q_3, K_3)` is connected; `Hom(Q_3, K_4)` is disconnected with an
/// isolated 0-cell.
pub fn cube_controls(_opts: &SuiteOptions) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("q3");
    let q3 = NamedGraph::Cube.build();
    let three = hom_components(&q3, &k(3));
    report.check(
        three.count == 1,
        || json!({ "m": 3, "expected": 1, "got": three.count }),
    );
    let four = hom_components(&q3, &k(4));
    let sizes = four.sizes();
    let singletons = sizes.iter().filter(|&&s| s == 1).count();
    report.check(
        four.count > 1 && singletons > 0,
        || json!({ "m": 4, "components": four.count, "singletons": singletons }),
    );
    report
        .details
        .push(json!({ "m4_components": four.count, "m4_singletons": singletons }));
    Ok(report.finish())
}

/// Nonempty 3-core frequency on both sides of `c_3`.
pub fn core_threshold(opts: &SuiteOptions) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("core_threshold");
    for (c, below) in [(3.0, true), (3.7, false)] {
        let cfg = GnpConfig {
            n: opts.n.unwrap_or(20_000),
            c,
            trials: opts.trials.unwrap_or(20),
            master_seed: opts.seed,
        };
        let r = run_core_experiment(&cfg, 3)?;
        let ok = if below {
            r.fraction <= 0.1
        } else {
            r.fraction >= 0.9
        };
        report
            .details
            .push(json!({ "c": c, "fraction": r.fraction, "interval": r.interval }));
        report.check(ok, || {
            json!({ "c": c, "expected": if below { "<= 0.1" } else { ">= 0.9" }, "got": r.fraction })
        });
    }
    Ok(report.finish())
}

/// Largest minimum degree over all induced subgraphs, by bitmask.
fn brute_degeneracy(g: &Graph) -> usize {
    let n = g.vertex_count();
    let adj: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0, |m, &w| m | 1 << w))
        .collect();
    (1u32..1 << n)
        .map(|mask| {
            (0..n)
                .filter(|&v| mask >> v & 1 == 1)
                .map(|v| (adj[v] & mask).count_ones() as usize)
                .min()
                .unwrap()
        })
        .max()
        .unwrap_or(0)
}

fn exact_m3(g: &Graph) -> M3Class {
    match hom_components(g, &k(3)).count {
        0 => M3Class::Empty,
        1 => M3Class::Connected,
        _ => M3Class::Disconnected,
    }
}

/// Degeneracy, cycle 0-cell counts and the sparse classifier against
/// independent exact computations.
pub fn oracles(opts: &SuiteOptions) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("oracles");
    let max_v = opts.max_vertices.unwrap_or(8);
    // every class on max_v vertices occurs among one-vertex extensions
    let mut graphs = generate::graphs_up_to(max_v.min(7));
    if max_v >= 8 {
        graphs.extend(generate::one_vertex_extensions(8));
    }

    let results: Vec<(usize, usize, bool, M3Class, M3Class)> = graphs
        .par_iter()
        .map(|g| {
            let d = degeneracy(g).value;
            let bd = brute_degeneracy(g);
            let core_ok = !k_core(g, d).is_empty() || g.vertex_count() == 0;
            let core_ok = core_ok && k_core(g, d + 1).is_empty();
            (d, bd, core_ok, classify_m3(g, &opts.budget), exact_m3(g))
        })
        .collect();
    let mut degeneracy_ok = true;
    let mut classify_ok = true;
    for (g, (d, bd, core_ok, fast, slow)) in graphs.iter().zip(results) {
        if d != bd || !core_ok {
            degeneracy_ok = false;
            report.counterexamples.push(
                json!({ "oracle": "degeneracy", "graph": graph_json(g), "expected": bd, "got": d }),
            );
        }
        if fast != slow {
            classify_ok = false;
            report.counterexamples.push(json!({ "oracle": "classify_m3", "graph": graph_json(g), "expected": slow, "got": fast }));
        }
        report.checked += 2;
    }

    let mut poly_ok = true;
    for n in 3..=10 {
        for m in 1..=5usize {
            let got = enumerate_0cells(&NamedGraph::Cycle(n).build(), &k(m)).len() as i64;
            let want =
                (m as i64 - 1).pow(n as u32) + if n % 2 == 0 { 1 } else { -1 } * (m as i64 - 1);
            report.checked += 1;
            if got != want {
                poly_ok = false;
                report.counterexamples.push(json!({ "oracle": "chromatic polynomial", "n": n, "m": m, "expected": want, "got": got }));
            }
        }
    }
    report.details.push(json!({
        "graphs": graphs.len(),
        "degeneracy": degeneracy_ok,
        "cycle_zero_cells": poly_ok,
        "classify_m3": classify_ok,
    }));
    Ok(report.finish())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> SuiteOptions {
        SuiteOptions {
            max_vertices: Some(4),
            max_n: Some(7),
            n: Some(300),
            trials: Some(20),
            ..SuiteOptions::default()
        }
    }

    #[test]
    fn small_scale_suites_pass() {
        for name in [
            "thm2_8", "thm4_1", "thm4_7", "lem3_3", "lem4_4", "lem4_6", "q3", "oracles",
        ] {
            let r = run_suite(name, &small()).unwrap();
            assert!(r.passed, "{name}: {:?}", r.counterexamples);
            assert!(r.checked > 0, "{name}");
        }
    }

    #[test]
    fn unknown_suite() {
        assert!(run_suite("nope", &small()).is_err());
    }
}
