//! `homcx`: batch front end. Every command prints one JSON document with
//! sorted keys on stdout; short human summaries go to stderr.
//!
//! Exit codes: 0 success, 1 failed suite or violated invariant, 2 resource
//! budget, 3 usage, parse or I/O error.

use clap::{Args, Parser, Subcommand, ValueEnum};
use homcx::graph::{
    self, chromatic_number, connected_components, contains_pattern, degeneracy, fold_reduce,
    is_bipartite, k_core, NamedGraph, Pattern,
};
use homcx::hom::{enumerate_cells, hom_components};
use homcx::random::{
    run_core_experiment, run_m3_experiment, GnpConfig, ThresholdTable, TrialOutcome,
};
use homcx::suites::{run_suite, SuiteOptions, SUITES};
use homcx::topology::{betti_mod2, cellular_betti, order_complex, Connectivity};
use homcx::{Budget, Error, Graph};
use serde_json::{json, Value};
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "homcx",
    version,
    about = "Graph homomorphism complexes Hom(G, K_m)"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Degrees, degeneracy, cores, coloring and fold data of a graph.
    Graph {
        #[command(flatten)]
        input: GraphInput,
    },
    /// Components, Betti numbers or cell counts of Hom(G, K_m).
    Hom {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long)]
        m: usize,
        #[arg(long, value_enum, default_value_t = HomMode::Components)]
        mode: HomMode,
        /// Enumerate cells only up to this dimension.
        #[arg(long)]
        max_dim: Option<usize>,
        #[command(flatten)]
        budget: BudgetArg,
    },
    /// Reduced mod-2 Betti numbers and homological connectivity.
    Betti {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long)]
        m: usize,
        #[arg(long, value_enum, default_value_t = Route::Cellular)]
        route: Route,
        #[arg(long)]
        max_dim: Option<usize>,
        #[command(flatten)]
        budget: BudgetArg,
    },
    /// Run a verification suite; exit 1 if any instance fails.
    Verify {
        #[arg(value_parser = clap::builder::PossibleValuesParser::new(SUITES))]
        suite: String,
        #[arg(long)]
        max_vertices: Option<usize>,
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        trials: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
        #[command(flatten)]
        budget: BudgetArg,
    },
    /// Monte-Carlo runs over G(n, c/n).
    Random {
        #[arg(value_enum)]
        kind: RandomKind,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        c: f64,
        /// Core order for `core` runs.
        #[arg(long, default_value_t = 3)]
        k: usize,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Per-trial records, one per line.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[command(flatten)]
        budget: BudgetArg,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct GraphInput {
    /// Edge-list file: "n m" then one "u v" per line.
    #[arg(long)]
    input: Option<PathBuf>,
    /// k<n>, c<n>, p<n>, q3, ladder<r>, h1, h2 or kij:<i>,<j>.
    #[arg(long)]
    named: Option<String>,
}

impl GraphInput {
    fn load(&self) -> homcx::Result<Graph> {
        match (&self.input, &self.named) {
            (Some(path), _) => graph::io::read_edge_list(path),
            (_, Some(name)) => Ok(name.parse::<NamedGraph>()?.build()),
            _ => unreachable!("clap requires one input"),
        }
    }
}

#[derive(Args)]
struct BudgetArg {
    /// Limit on enumeration steps and on order-complex simplices.
    #[arg(long)]
    budget: Option<u64>,
}

impl BudgetArg {
    fn get(&self) -> Budget {
        match self.budget {
            Some(b) => Budget {
                enumeration: b,
                subdivision: b,
            },
            None => Budget::default(),
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum HomMode {
    Components,
    Betti,
    Cells,
}

#[derive(Clone, Copy, ValueEnum)]
enum Route {
    Cellular,
    Order,
}

#[derive(Clone, Copy, ValueEnum)]
enum RandomKind {
    Core,
    M3,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

/// Failure with its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Budget { .. } => 2,
            Error::Invariant(_) => 1,
            Error::Argument(_) | Error::Precondition(_) | Error::Parse { .. } | Error::Io(_) => 3,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e).into()
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        Failure {
            code: 3,
            message: e.to_string(),
        }
    }
}

/// What a command produced: the JSON document and whether it passed.
struct Outcome {
    report: Value,
    passed: bool,
}

impl From<Value> for Outcome {
    fn from(report: Value) -> Self {
        Outcome {
            report,
            passed: true,
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // clap uses exit code 2 for usage errors, which is taken by budgets here
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 3 } else { 0 });
        }
    };
    match run(cli.command) {
        Ok(out) => {
            println!("{}", out.report);
            ExitCode::from(if out.passed { 0 } else { 1 })
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(command: Command) -> Result<Outcome, Failure> {
    match command {
        Command::Graph { input } => Ok(graph_report(&input.load()?).into()),
        Command::Hom {
            input,
            m,
            mode,
            max_dim,
            budget,
        } => hom_report(&input.load()?, m, mode, max_dim, &budget.get()).map(Into::into),
        Command::Betti {
            input,
            m,
            route,
            max_dim,
            budget,
        } => betti_report(&input.load()?, m, route, max_dim, &budget.get()).map(Into::into),
        Command::Verify {
            suite,
            max_vertices,
            max_n,
            m,
            n,
            trials,
            seed,
            budget,
        } => {
            let mut opts = SuiteOptions {
                max_vertices,
                max_n,
                m,
                n,
                trials,
                budget: budget.get(),
                ..SuiteOptions::default()
            };
            if let Some(s) = seed {
                opts.seed = s;
            }
            let report = run_suite(&suite, &opts)?;
            eprintln!(
                "{} {}: {} instances, {} counterexamples",
                if report.passed { "PASS" } else { "FAIL" },
                report.suite,
                report.checked,
                report.counterexamples.len()
            );
            Ok(Outcome {
                passed: report.passed,
                report: to_value(&report),
            })
        }
        Command::Random {
            kind,
            n,
            c,
            k,
            trials,
            seed,
            out,
            format,
            budget,
        } => {
            let cfg = GnpConfig {
                n,
                c,
                trials,
                master_seed: seed,
            };
            let (summary, outcomes) = match kind {
                RandomKind::Core => {
                    let r = run_core_experiment(&cfg, k)?;
                    eprintln!(
                        "k = {k}: nonempty core in {:.3} of trials, 95% interval [{:.3}, {:.3}]",
                        r.fraction, r.interval.0, r.interval.1
                    );
                    let mut v = to_value(&r);
                    v["chromatic_window"] = json!(ThresholdTable::chromatic_window(k));
                    (v, r.outcomes)
                }
                RandomKind::M3 => {
                    let r = run_m3_experiment(&cfg, &budget.get())?;
                    eprintln!(
                        "Pr[connected] = {:.4} (theory {:.4}), unknown {}",
                        r.pr_connected, r.theory, r.unknown
                    );
                    (to_value(&r), r.outcomes)
                }
            };
            if let Some(path) = out {
                write_trials(&path, format, &outcomes)?;
            }
            Ok(summary.into())
        }
    }
}

/// Round-trips through `Value`, whose maps keep keys sorted.
fn to_value<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("reports serialize")
}

fn graph_report(g: &Graph) -> Value {
    let d = degeneracy(g);
    let core_sizes: Vec<usize> = (0..=d.value).map(|k| k_core(g, k).len()).collect();
    let folded = fold_reduce(g);
    json!({
        "n": g.vertex_count(),
        "m": g.edge_count(),
        "degrees": g.degrees(),
        "degeneracy": d.value,
        "degeneracy_ordering": d.ordering,
        "k_core_sizes": core_sizes,
        "components": connected_components(g).len(),
        "bipartite": is_bipartite(g).is_some(),
        "chi": chromatic_number(g),
        "fold_reduced": { "n": folded.vertex_count(), "m": folded.edge_count() },
        "contains_h1": contains_pattern(g, Pattern::H1),
        "contains_h2": contains_pattern(g, Pattern::H2),
    })
}

fn hom_report(
    g: &Graph,
    m: usize,
    mode: HomMode,
    max_dim: Option<usize>,
    budget: &Budget,
) -> Result<Value, Failure> {
    let target = NamedGraph::Complete(m).build();
    Ok(match mode {
        HomMode::Components => {
            let comps = hom_components(g, &target);
            let mut sizes = comps.sizes();
            sizes.sort_unstable_by(|a, b| b.cmp(a));
            json!({
                "m": m,
                "zero_cells": comps.cells.len(),
                "components": comps.count,
                "component_sizes": sizes,
            })
        }
        HomMode::Betti => return betti_report(g, m, Route::Cellular, max_dim, budget),
        HomMode::Cells => {
            let c = enumerate_cells(g, &target, max_dim, budget)?;
            json!({
                "m": m,
                "cells_by_dimension": c.dims(),
                "total": c.len(),
                "truncated": c.is_truncated(),
                "euler_characteristic": c.euler_characteristic().ok(),
            })
        }
    })
}

fn betti_report(
    g: &Graph,
    m: usize,
    route: Route,
    max_dim: Option<usize>,
    budget: &Budget,
) -> Result<Value, Failure> {
    let c = enumerate_cells(g, &NamedGraph::Complete(m).build(), max_dim, budget)?;
    let b = match route {
        Route::Cellular => cellular_betti(&c),
        Route::Order => betti_mod2(&order_complex(&c, budget)?),
    };
    eprintln!("reduced Betti numbers {:?}", b.reduced());
    Ok(json!({
        "m": m,
        "reduced_betti": b.reduced(),
        "exact": b.is_exact(),
        "empty": b.is_empty_complex(),
        "connectivity": Connectivity::from_betti(&b).to_json(),
    }))
}

fn write_trials(path: &PathBuf, format: Format, outcomes: &[TrialOutcome]) -> Result<(), Failure> {
    let file = BufWriter::new(File::create(path)?);
    match format {
        Format::Json => {
            let mut w = file;
            for o in outcomes {
                writeln!(w, "{}", to_value(o))?;
            }
            w.flush()?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(file);
            w.write_record([
                "trial_index",
                "edges",
                "degeneracy",
                "has_k_core",
                "m3_class",
                "cycle_census",
            ])?;
            for o in outcomes {
                let cores: Vec<String> = o
                    .has_k_core
                    .iter()
                    .map(|(k, b)| format!("{k}:{b}"))
                    .collect();
                let census: Vec<String> = o.cycle_census.iter().map(u64::to_string).collect();
                w.write_record([
                    o.trial_index.to_string(),
                    o.edges.to_string(),
                    o.degeneracy.to_string(),
                    cores.join(";"),
                    o.m3_class
                        .map(|c| to_value(&c).to_string())
                        .unwrap_or_default(),
                    census.join(";"),
                ])?;
            }
            w.flush()?;
        }
    }
    Ok(())
}
