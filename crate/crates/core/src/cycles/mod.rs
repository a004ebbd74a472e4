//! Return numbers of cycle homomorphisms, color-class interchanges, and
//! explicit pairs of 3-colorings in distinct components of `Hom(G, K_3)`.
//!
//! Colors here are labels `1..=m`, matching the usual `v_1, ..., v_n`
//! conventions; the `hom` module works with `0..m`.

mod witness;

pub use witness::{bipartite_witness, ladder_witness, odd_cycle_witness, DisconnectionWitness};

use crate::error::{Error, Result};
use serde::Serialize;

/// A homomorphism `C_n -> C_m` given by the labels of `v_1, ..., v_n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CycleHom {
    m: usize,
    image: Vec<usize>,
}

impl CycleHom {
    /// Consecutive labels (cyclically) must differ by `+-1` mod `m`.
    pub fn new(m: usize, image: Vec<usize>) -> Result<Self> {
        let n = image.len();
        if n < 3 || m < 3 {
            return Err(Error::argument(format!("C_{n} -> C_{m} needs n, m >= 3")));
        }
        if let Some(&bad) = image.iter().find(|&&a| a == 0 || a > m) {
            return Err(Error::argument(format!("label {bad} outside 1..={m}")));
        }
        for i in 0..n {
            let step = (image[(i + 1) % n] + m - image[i]) % m;
            if step != 1 && step != m - 1 {
                return Err(Error::argument(format!(
                    "v_{} -> v_{} maps to non-adjacent labels {} and {}",
                    i + 1,
                    (i + 1) % n + 1,
                    image[i],
                    image[(i + 1) % n]
                )));
            }
        }
        Ok(CycleHom { m, image })
    }

    pub fn n(&self) -> usize {
        self.image.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }
}

/// Number of cyclic steps `v_i -> v_{i+1}` whose label drops by 1 mod `m`.
pub fn return_number(h: &CycleHom) -> usize {
    let (n, m) = (h.n(), h.m);
    (0..n)
        .filter(|&i| (h.image[(i + 1) % n] + 1) % m == h.image[i] % m)
        .count()
}

/// Swaps the color classes `l` and `j` of a coloring labeled from 1.
pub fn interchange(coloring: &[usize], l: usize, j: usize) -> Result<Vec<usize>> {
    if l == j || l == 0 || j == 0 {
        return Err(Error::argument(format!(
            "interchange needs two distinct colors from 1, got {l} and {j}"
        )));
    }
    Ok(coloring
        .iter()
        .map(|&a| match a {
            a if a == l => j,
            a if a == j => l,
            a => a,
        })
        .collect())
}

/// `a mod 3` with representatives `1..=3`.
pub(crate) fn mod3(a: usize) -> usize {
    (a + 2) % 3 + 1
}

/// A 3-coloring of `C_{2k}` with return number at most 2: labels `j mod 3`
/// along the cycle, with the last one or two labels adjusted so the cycle
/// closes up.
pub fn tau_pattern(k: usize) -> Result<CycleHom> {
    if k < 3 {
        return Err(Error::argument(format!("pattern needs k >= 3, got {k}")));
    }
    let n = 2 * k;
    let mut image: Vec<usize> = (1..=n).map(mod3).collect();
    match n % 3 {
        1 => image[n - 1] = 2,
        2 => {
            image[n - 2] = 1;
            image[n - 1] = 2;
        }
        _ => {}
    }
    CycleHom::new(3, image)
}
