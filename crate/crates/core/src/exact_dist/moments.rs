//! Closed-form first and second moments of `X_H = sum_v I_v`, where `I_v` indicates a
//! positive in-degree at `v`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::Result;
use crate::hypergraph::Hypergraph;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MomentReport {
    /// `E[I_v] = 1 - ((r-1)/r)^deg(v)` per vertex.
    pub hit_prob: Vec<BigRational>,
    pub mean: BigRational,
    pub variance: BigRational,
}

impl Serialize for MomentReport {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("MomentReport", 3)?;
        let hits: Vec<String> = self.hit_prob.iter().map(|p| p.to_string()).collect();
        st.serialize_field("hit_prob", &hits)?;
        st.serialize_field("mean", &self.mean.to_string())?;
        st.serialize_field("variance", &self.variance.to_string())?;
        st.end()
    }
}

fn ratio(num: usize, den: usize) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// `((r - 1) / r)^d`: probability that none of `d` edges through a vertex points at it.
fn miss(r: usize, d: usize) -> BigRational {
    Pow::pow(ratio(r - 1, r), d)
}

pub fn hit_probability(h: &Hypergraph, v: usize) -> Result<BigRational> {
    Ok(BigRational::one() - miss(h.r(), h.degree(v)?))
}

/// `Cov(I_v1, I_v2) = ((r-2)/r)^d3 ((r-1)/r)^(d1+d2) - ((r-1)/r)^(d1+d2+2 d3)`.
pub fn covariance_pair(h: &Hypergraph, v1: usize, v2: usize) -> Result<BigRational> {
    let o = h.pair_overlap(v1, v2)?;
    let r = h.r();
    let both_missed: BigRational = Pow::pow(ratio(r - 2, r), o.d3) * miss(r, o.d1 + o.d2);
    Ok(both_missed - miss(r, o.d1 + o.d2 + 2 * o.d3))
}

/// Mean and variance of `X_H`; the variance sums the per-vertex Bernoulli variances and
/// the covariances over ordered vertex pairs.
pub fn exact_moments(h: &Hypergraph) -> MomentReport {
    let n = h.n();
    let hit_prob: Vec<BigRational> = h
        .degrees()
        .into_iter()
        .map(|d| BigRational::one() - miss(h.r(), d))
        .collect();
    let mean: BigRational = hit_prob.iter().sum();
    let mut variance: BigRational = hit_prob.iter().map(|p| p * (BigRational::one() - p)).sum();
    for v1 in 0..n {
        for v2 in v1 + 1..n {
            let c = covariance_pair(h, v1, v2).expect("distinct in-range vertices");
            variance += &c + &c;
        }
    }
    MomentReport {
        hit_prob,
        mean,
        variance,
    }
}
