//! The random-orientation process and the law of the number of hit vertices.
//!
//! Every edge is oriented towards one of its `r` vertices uniformly and independently.
//! `X_H` counts vertices with positive in-degree, i.e. colours seen after a roll.
//!
//! Two independent exact engines compute the law of `X_H`:
//! [`exact_pmf_enumeration`] walks all `r^m` orientations, and
//! [`exact_pmf_inclusion_exclusion`] sums over vertex subsets. [`monte_carlo_pmf`]
//! estimates it by simulation.

mod enumeration;
mod inclusion_exclusion;
mod moments;
mod monte_carlo;

pub use enumeration::{exact_pmf_enumeration, exact_pmf_enumeration_with_cap, DEFAULT_ORIENTATION_CAP};
pub use inclusion_exclusion::{exact_pmf_inclusion_exclusion, INCLUSION_EXCLUSION_VERTEX_CAP};
pub use moments::{covariance_pair, exact_moments, hit_probability, MomentReport};
pub use monte_carlo::{monte_carlo_pmf, McEstimate, MC_BLOCK_SIZE};

use rand::Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::pmf::Pmf;

/// The generator behind every randomized operation: ChaCha8 seeded from a `u64`.
pub type SeededRng = rand_chacha::ChaCha8Rng;

/// One dice roll: `heads[i]` is the vertex edge `i` points to.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Orientation {
    pub heads: Vec<usize>,
}

/// In-degree statistics of an orientation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InDegreeProfile {
    pub indeg: Vec<usize>,
    /// Vertices of in-degree 0.
    pub zero_count: usize,
    /// Vertices of even in-degree (0 included).
    pub even_count: usize,
    /// Vertices of in-degree exactly 1.
    pub ones: usize,
    /// Vertices of in-degree exactly 2.
    pub twos: usize,
}

impl InDegreeProfile {
    /// Number of vertices with positive in-degree.
    pub fn hit_count(&self) -> usize {
        self.indeg.len() - self.zero_count
    }
}

/// Draws a head uniformly from each edge, consuming `rng` in stored edge order.
pub fn sample_orientation<R: Rng + ?Sized>(h: &Hypergraph, rng: &mut R) -> Orientation {
    let r = h.r();
    Orientation {
        heads: h.edges().iter().map(|e| e[rng.random_range(0..r)]).collect(),
    }
}

pub fn indegree_profile(h: &Hypergraph, o: &Orientation) -> Result<InDegreeProfile> {
    if o.heads.len() != h.m() {
        return Err(Error::BadOrientation(format!(
            "{} heads for {} edges",
            o.heads.len(),
            h.m()
        )));
    }
    let mut indeg = vec![0usize; h.n()];
    for (i, (e, &head)) in h.edges().iter().zip(&o.heads).enumerate() {
        if !e.contains(&head) {
            return Err(Error::BadOrientation(format!("head {head} is not in edge {i} {e:?}")));
        }
        indeg[head] += 1;
    }
    let count = |f: fn(usize) -> bool| indeg.iter().filter(|&&d| f(d)).count();
    Ok(InDegreeProfile {
        zero_count: count(|d| d == 0),
        even_count: count(|d| d % 2 == 0),
        ones: count(|d| d == 1),
        twos: count(|d| d == 2),
        indeg,
    })
}

/// Number of distinct colours seen: `n - Z`.
pub fn colour_count(h: &Hypergraph, o: &Orientation) -> Result<usize> {
    Ok(indegree_profile(h, o)?.hit_count())
}

/// How the law of `X_H` is obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Engine {
    Enumerate,
    InclusionExclusion,
    MonteCarlo,
}

impl Engine {
    pub fn name(self) -> &'static str {
        match self {
            Engine::Enumerate => "enumerate",
            Engine::InclusionExclusion => "inclexcl",
            Engine::MonteCarlo => "mc",
        }
    }
}

/// Enumeration if `r^m <= 2^20`, else inclusion-exclusion if `n <= 20`, else Monte Carlo.
pub fn auto_engine(h: &Hypergraph) -> Engine {
    if orientation_count_within(h, 1 << 20) {
        Engine::Enumerate
    } else if h.n() <= 20 {
        Engine::InclusionExclusion
    } else {
        Engine::MonteCarlo
    }
}

/// Exact law by whichever engine accepts `h`, preferring the cheaper one.
pub fn exact_pmf(h: &Hypergraph) -> Result<Pmf> {
    if orientation_count_within(h, 1 << 20) {
        exact_pmf_enumeration(h)
    } else if h.n() <= INCLUSION_EXCLUSION_VERTEX_CAP {
        exact_pmf_inclusion_exclusion(h)
    } else {
        exact_pmf_enumeration(h)
    }
}

/// `r^m <= cap`, without overflow.
pub(crate) fn orientation_count_within(h: &Hypergraph, cap: u64) -> bool {
    let mut total: u64 = 1;
    for _ in 0..h.m() {
        total = match total.checked_mul(h.r() as u64) {
            Some(t) if t <= cap => t,
            _ => return false,
        };
    }
    true
}
