//! Sparse random graphs `G(n, c/n)` and reproducible Monte-Carlo runs.
//!
//! Trial `i` of a run draws from its own ChaCha8 stream `i` keyed by the
//! master seed, so results do not depend on scheduling.

mod classify;
mod experiment;

pub use classify::{classify_m3, cycle_census, M3Class, CENSUS_MAX_LEN};
pub use experiment::{run_core_experiment, run_m3_experiment, CoreReport, M3Report, TrialOutcome};

use crate::error::{Error, Result};
use crate::Graph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

/// Parameters of a Monte-Carlo run over `G(n, c/n)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GnpConfig {
    pub n: usize,
    pub c: f64,
    pub trials: usize,
    pub master_seed: u64,
}

impl GnpConfig {
    pub fn validate(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::argument("n must be at least 1"));
        }
        if !(self.c > 0.0 && self.c.is_finite()) {
            return Err(Error::argument(format!(
                "c must be positive, got {}",
                self.c
            )));
        }
        if self.trials == 0 {
            return Err(Error::argument("at least one trial is required"));
        }
        Ok(())
    }

    /// Edge probability `min(c / n, 1)`.
    pub fn p(&self) -> f64 {
        (self.c / self.n as f64).min(1.0)
    }
}

/// The generator for trial `stream` of a run seeded with `master_seed`.
pub fn trial_rng(master_seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(master_seed);
    rng.set_stream(stream);
    rng
}

/// Each of the `n (n - 1) / 2` pairs is an edge independently with
/// probability `p`. Below `p = 0.05` the gaps between edges are drawn
/// from the geometric distribution instead of testing every pair.
pub fn sample_gnp<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut g = Graph::new(n);
    if p <= 0.0 || n < 2 {
        return g;
    }
    if p >= 0.05 {
        for v in 1..n {
            for u in 0..v {
                if p >= 1.0 || rng.random::<f64>() < p {
                    g.add_edge(u, v).unwrap();
                }
            }
        }
        return g;
    }
    // walk pairs (w, v), w < v, in row order, skipping geometrically
    let log_q = (-p).ln_1p();
    let (mut v, mut w) = (1usize, -1i64);
    loop {
        let u: f64 = 1.0 - rng.random::<f64>();
        let skip = (u.ln() / log_q).floor();
        if skip >= (n * n) as f64 {
            break;
        }
        w += 1 + skip as i64;
        while v < n && w >= v as i64 {
            w -= v as i64;
            v += 1;
        }
        if v >= n {
            break;
        }
        g.add_edge(w as usize, v).unwrap();
    }
    g
}

/// `G(n, p)` drawn from stream `stream` of `master_seed`.
pub fn sample_gnp_stream(n: usize, p: f64, master_seed: u64, stream: u64) -> Graph {
    sample_gnp(n, p, &mut trial_rng(master_seed, stream))
}

/// Known k-core threshold constants `c_k`: `G(n, c/n)` has a nonempty
/// k-core with probability tending to 1 above `c_k` and to 0 below.
#[derive(Debug, Clone, Copy)]
pub struct ThresholdTable;

impl ThresholdTable {
    pub const TABLE: [(usize, f64); 4] = [(2, 0.0), (3, 3.35), (4, 5.14), (5, 6.81)];

    /// The tabulated constant, or the leading terms `k + sqrt(k log k)` of
    /// the asymptotic form for `k >= 6`. `None` for `k < 2`.
    pub fn core_threshold(k: usize) -> Option<f64> {
        if let Some(&(_, c)) = Self::TABLE.iter().find(|&&(j, _)| j == k) {
            return Some(c);
        }
        (k >= 6).then(|| {
            let k = k as f64;
            k + (k * k.ln()).sqrt()
        })
    }

    /// Is the value tabulated rather than an asymptotic estimate?
    pub fn is_tabulated(k: usize) -> bool {
        Self::TABLE.iter().any(|&(j, _)| j == k)
    }

    /// Bounds `(d_k^-, d_k^+)` on the average degree at which `G(n, d/n)`
    /// stops being k-colorable: `2k log k - log k - 2 log 2` and
    /// `2k log k - log k - 1`.
    pub fn chromatic_window(k: usize) -> (f64, f64) {
        let k = k as f64;
        let base = 2.0 * k * k.ln() - k.ln();
        (base - 2.0 * std::f64::consts::LN_2, base - 1.0)
    }
}

/// `lim Pr[Hom(G(n, c/n), K_3) is connected] = e^{c'}` with
/// `c' = log(1 - c) / 2 + c / 2 + c^2 / 4 + c^4 / 8`, for `0 < c < 1`.
pub fn limit_probability_m3(c: f64) -> Result<f64> {
    if !(c > 0.0 && c < 1.0) {
        return Err(Error::argument(format!("c must lie in (0, 1), got {c}")));
    }
    let c_prime = 0.5 * (-c).ln_1p() + c / 2.0 + c * c / 4.0 + c.powi(4) / 8.0;
    Ok(c_prime.exp())
}

/// 95% Wilson score interval for `successes` out of `trials`.
pub fn wilson_interval(successes: usize, trials: usize) -> (f64, f64) {
    if trials == 0 {
        return (0.0, 1.0);
    }
    let z = 1.959_963_984_540_054_f64;
    let n = trials as f64;
    let phat = successes as f64 / n;
    let denom = 1.0 + z * z / n;
    let center = (phat + z * z / (2.0 * n)) / denom;
    let half = z * (phat * (1.0 - phat) / n + z * z / (4.0 * n * n)).sqrt() / denom;
    ((center - half).max(0.0), (center + half).min(1.0))
}
