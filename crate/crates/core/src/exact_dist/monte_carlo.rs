//! Seeded Monte Carlo estimate of the law of `X_H`.
//!
//! The sample budget is cut into blocks of [`MC_BLOCK_SIZE`]. Block `b` draws from
//! `ChaCha8Rng::seed_from_u64(seed)` switched to stream `b`, so the estimate depends only
//! on `(H, samples, seed)` and not on how blocks are scheduled across threads.

use std::fmt::Write as _;

use rand::SeedableRng;
use rayon::prelude::*;
use serde::Serialize;

use super::{sample_orientation, SeededRng};
use crate::error::{Error, Result};
use crate::fmt::sig6;
use crate::hypergraph::Hypergraph;

pub const MC_BLOCK_SIZE: u64 = 8192;

/// Empirical law with per-point standard errors `sqrt(p(1-p)/N)`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct McEstimate {
    pub samples: u64,
    pub seed: u64,
    pub support: Vec<i64>,
    pub counts: Vec<u64>,
    pub freqs: Vec<f64>,
    pub std_errs: Vec<f64>,
}

impl McEstimate {
    pub fn freq(&self, x: i64) -> f64 {
        self.support.iter().position(|&s| s == x).map_or(0.0, |i| self.freqs[i])
    }

    /// Plug-in entropy of the empirical frequencies, in bits.
    pub fn plugin_entropy(&self) -> f64 {
        let mut f = self.freqs.clone();
        f.sort_by(f64::total_cmp);
        f.iter()
            .filter(|&&p| p > 0.0)
            .map(|&p| -p * p.log2())
            .sum::<f64>()
            .max(0.0)
    }

    /// CSV with the pmf columns (count over samples) plus `std_error`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("x,numerator,denominator,probability_float,std_error\n");
        for i in 0..self.support.len() {
            let _ = writeln!(
                out,
                "{},{},{},{},{}",
                self.support[i],
                self.counts[i],
                self.samples,
                sig6(self.freqs[i]),
                sig6(self.std_errs[i])
            );
        }
        out
    }
}

fn run_block(h: &Hypergraph, seed: u64, block: u64, len: u64) -> Vec<u64> {
    let mut rng = SeededRng::seed_from_u64(seed);
    rng.set_stream(block);
    let mut counts = vec![0u64; h.n() + 1];
    let mut indeg = vec![0u32; h.n()];
    for _ in 0..len {
        let o = sample_orientation(h, &mut rng);
        indeg.iter_mut().for_each(|d| *d = 0);
        let mut hit = 0;
        for &v in &o.heads {
            if indeg[v] == 0 {
                hit += 1;
            }
            indeg[v] += 1;
        }
        counts[hit] += 1;
    }
    counts
}

pub fn monte_carlo_pmf(h: &Hypergraph, samples: u64, seed: u64) -> Result<McEstimate> {
    if samples == 0 {
        return Err(Error::InvalidParameter("Monte Carlo needs at least one sample".into()));
    }
    let blocks = samples.div_ceil(MC_BLOCK_SIZE);
    let counts = (0..blocks)
        .into_par_iter()
        .map(|b| {
            let len = MC_BLOCK_SIZE.min(samples - b * MC_BLOCK_SIZE);
            run_block(h, seed, b, len)
        })
        .reduce(
            || vec![0u64; h.n() + 1],
            |mut a, b| {
                a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                a
            },
        );

    let n_f = samples as f64;
    let mut est = McEstimate {
        samples,
        seed,
        support: Vec::new(),
        counts: Vec::new(),
        freqs: Vec::new(),
        std_errs: Vec::new(),
    };
    for (x, c) in counts.into_iter().enumerate().filter(|(_, c)| *c > 0) {
        let p = c as f64 / n_f;
        est.support.push(x as i64);
        est.counts.push(c);
        est.freqs.push(p);
        est.std_errs.push((p * (1.0 - p) / n_f).sqrt());
    }
    Ok(est)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_estimate() {
        let est = monte_carlo_pmf(&Hypergraph::cycle(3).unwrap(), 100_000, 5).unwrap();
        let sigma = (0.75f64 * 0.25 / 1e5).sqrt();
        assert!((est.freq(2) - 0.75).abs() <= 4.0 * sigma, "{}", est.freq(2));
        assert_eq!(est.counts.iter().sum::<u64>(), 100_000);
    }

    #[test]
    fn single_edge_is_certain() {
        let h = Hypergraph::new(2, 2, vec![vec![0, 1]]).unwrap();
        let est = monte_carlo_pmf(&h, 1000, 1).unwrap();
        assert_eq!(est.support, vec![1]);
        assert_eq!(est.freqs, vec![1.0]);
        assert_eq!(est.std_errs, vec![0.0]);
        assert_eq!(est.plugin_entropy(), 0.0);
    }

    #[test]
    fn seed_determinism() {
        let h = Hypergraph::circular(7, 3).unwrap();
        let a = monte_carlo_pmf(&h, 20_000, 99).unwrap();
        let b = monte_carlo_pmf(&h, 20_000, 99).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, monte_carlo_pmf(&h, 20_000, 100).unwrap());
    }

    #[test]
    fn thread_count_does_not_matter() {
        let h = Hypergraph::cycle(9).unwrap();
        let run = |threads| {
            rayon::ThreadPoolBuilder::new()
                .num_threads(threads)
                .build()
                .unwrap()
                .install(|| monte_carlo_pmf(&h, 50_000, 3).unwrap())
        };
        assert_eq!(run(1), run(4));
    }

    #[test]
    fn zero_samples_rejected() {
        assert!(monte_carlo_pmf(&Hypergraph::cycle(3).unwrap(), 0, 0).is_err());
    }
}
