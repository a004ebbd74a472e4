use super::{
    classify_m3, cycle_census, limit_probability_m3, sample_gnp, trial_rng, wilson_interval,
    GnpConfig, M3Class, ThresholdTable, CENSUS_MAX_LEN,
};
use crate::error::{Error, Result};
use crate::graph::{degeneracy, k_core};
use crate::Budget;
use rayon::prelude::*;
use serde::Serialize;
use std::collections::BTreeMap;

/// What was measured on one sampled graph.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TrialOutcome {
    pub trial_index: u64,
    pub edges: usize,
    pub degeneracy: usize,
    /// Nonemptiness of the k-core for each requested k.
    pub has_k_core: BTreeMap<usize, bool>,
    /// `None` for runs that do not classify `Hom(G, K_3)`.
    pub m3_class: Option<M3Class>,
    /// `cycle_census[l - 3]` counts `C_l`; empty when not collected.
    pub cycle_census: Vec<u64>,
}

fn run_trials<F>(cfg: &GnpConfig, f: F) -> Vec<TrialOutcome>
where
    F: Fn(u64, &crate::Graph) -> TrialOutcome + Sync,
{
    (0..cfg.trials as u64)
        .into_par_iter()
        .map(|t| {
            let g = sample_gnp(cfg.n, cfg.p(), &mut trial_rng(cfg.master_seed, t));
            f(t, &g)
        })
        .collect()
}

/// Nonempty k-core frequency over a run.
#[derive(Debug, Clone, Serialize)]
pub struct CoreReport {
    pub config: GnpConfig,
    pub k: usize,
    pub fraction: f64,
    pub interval: (f64, f64),
    /// Degeneracy value -> number of trials.
    pub degeneracy_histogram: BTreeMap<usize, usize>,
    /// Known threshold `c_k`, if tabulated or asymptotically estimated.
    pub threshold: Option<f64>,
    pub threshold_tabulated: bool,
    #[serde(skip)]
    pub outcomes: Vec<TrialOutcome>,
}

pub fn run_core_experiment(cfg: &GnpConfig, k: usize) -> Result<CoreReport> {
    cfg.validate()?;
    let outcomes = run_trials(cfg, |t, g| TrialOutcome {
        trial_index: t,
        edges: g.edge_count(),
        degeneracy: degeneracy(g).value,
        has_k_core: BTreeMap::from([(k, !k_core(g, k).is_empty())]),
        m3_class: None,
        cycle_census: Vec::new(),
    });
    let hits = outcomes.iter().filter(|o| o.has_k_core[&k]).count();
    let mut degeneracy_histogram = BTreeMap::new();
    for o in &outcomes {
        *degeneracy_histogram.entry(o.degeneracy).or_insert(0) += 1;
    }
    Ok(CoreReport {
        config: *cfg,
        k,
        fraction: hits as f64 / cfg.trials as f64,
        interval: wilson_interval(hits, cfg.trials),
        degeneracy_histogram,
        threshold: ThresholdTable::core_threshold(k),
        threshold_tabulated: ThresholdTable::is_tabulated(k),
        outcomes,
    })
}

/// Empirical connectivity of `Hom(G(n, c/n), K_3)` next to its limit.
#[derive(Debug, Clone, Serialize)]
pub struct M3Report {
    pub config: GnpConfig,
    pub connected: usize,
    pub disconnected: usize,
    pub empty: usize,
    pub unknown: usize,
    pub pr_connected: f64,
    pub pr_connected_interval: (f64, f64),
    pub pr_disconnected: f64,
    pub pr_disconnected_interval: (f64, f64),
    /// `e^{c'}`.
    pub theory: f64,
    /// Mean count of `C_l` per trial, `l = 3..=12`.
    pub cycle_means: Vec<f64>,
    /// Poisson means `c^l / (2l)` for the same lengths.
    pub cycle_means_theory: Vec<f64>,
    #[serde(skip)]
    pub outcomes: Vec<TrialOutcome>,
}

pub fn run_m3_experiment(cfg: &GnpConfig, budget: &Budget) -> Result<M3Report> {
    cfg.validate()?;
    if cfg.c >= 1.0 {
        return Err(Error::precondition(format!(
            "the limit is only known for c < 1, got c = {}",
            cfg.c
        )));
    }
    let theory = limit_probability_m3(cfg.c)?;
    let outcomes = run_trials(cfg, |t, g| TrialOutcome {
        trial_index: t,
        edges: g.edge_count(),
        degeneracy: degeneracy(g).value,
        has_k_core: BTreeMap::new(),
        m3_class: Some(classify_m3(g, budget)),
        cycle_census: cycle_census(g, CENSUS_MAX_LEN),
    });
    let count = |c: M3Class| outcomes.iter().filter(|o| o.m3_class == Some(c)).count();
    let (connected, disconnected) = (count(M3Class::Connected), count(M3Class::Disconnected));
    let trials = cfg.trials;
    let cycle_means = (0..CENSUS_MAX_LEN - 2)
        .map(|i| outcomes.iter().map(|o| o.cycle_census[i]).sum::<u64>() as f64 / trials as f64)
        .collect();
    let cycle_means_theory = (3..=CENSUS_MAX_LEN)
        .map(|l| cfg.c.powi(l as i32) / (2.0 * l as f64))
        .collect();
    Ok(M3Report {
        config: *cfg,
        connected,
        disconnected,
        empty: count(M3Class::Empty),
        unknown: count(M3Class::Unknown),
        pr_connected: connected as f64 / trials as f64,
        pr_connected_interval: wilson_interval(connected, trials),
        pr_disconnected: disconnected as f64 / trials as f64,
        pr_disconnected_interval: wilson_interval(disconnected, trials),
        theory,
        cycle_means,
        cycle_means_theory,
        outcomes,
    })
}
