//! Entropy bounds as evaluable functions, and a report checking them against exact laws.
//!
//! All bounds are in bits and evaluated in `f64`. A bound counts as violated only when the
//! entropy exceeds it (or, for lower bounds, falls short of it) by more than
//! [`VIOLATION_TOLERANCE`].

use std::f64::consts::{E, LN_2, PI};

use num_rational::BigRational;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::closed_form::{binomial_pmf, entropy};
use crate::error::{Error, Result};
use crate::exact_dist::exact_pmf;
use crate::fmt::sig6;
use crate::hypergraph::Hypergraph;
use crate::pmf::ratio_to_f64;

/// `2 pi e = 17.0794684...`
pub const TWO_PI_E: f64 = 2.0 * PI * E;
/// `pi e = 8.5397342...`
pub const PI_E: f64 = PI * E;

pub const VIOLATION_TOLERANCE: f64 = 1e-9;

pub const BOUND_CSV_HEADER: &str = "id,n,m,r,entropy,variance_num,variance_den,massey,theorem2,violations";

/// Differential-entropy bound for an integer-valued variable:
/// `H(X) <= 1/2 log2(2 pi e (Var X + 1/12))`.
pub fn massey_bound(variance: f64) -> Result<f64> {
    if variance.is_nan() || variance < 0.0 {
        return Err(Error::InvalidParameter(format!(
            "variance must be non-negative, got {variance}"
        )));
    }
    Ok(0.5 * (TWO_PI_E * (variance + 1.0 / 12.0)).log2())
}

/// Upper bound for any hypergraph on `n` vertices: `1/2 log2 n + 1/2 log2(pi e)`.
pub fn vertex_count_bound(n: usize) -> Result<f64> {
    if n < 1 {
        return Err(Error::InvalidParameter("vertex count bound needs n >= 1".into()));
    }
    Ok(0.5 * (n as f64).log2() + 0.5 * PI_E.log2())
}

/// Lower bound for the `n`-cycle:
/// `1/2 log2 n + 1/2 log2(pi e) - 3/2 - 1 / (2 ln 2 (n - 1))`.
pub fn cycle_lower_bound(n: usize) -> Result<f64> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!("cycle bound needs n >= 3, got {n}")));
    }
    Ok(vertex_count_bound(n)? - 1.5 - 1.0 / (2.0 * LN_2 * (n as f64 - 1.0)))
}

/// The quoted lower bound `H(Bin(t, 1/2)) >= 1/2 log2 t + 1/2 log2(pi e) - 1/2`, as a
/// function of the trial count `t`. It does not hold for small `t`; see
/// [`check_cited_binomial_bound`].
pub fn binomial_entropy_cited_bound(trials: u32) -> Result<f64> {
    if trials < 1 {
        return Err(Error::InvalidParameter(
            "binomial bound needs at least one trial".into(),
        ));
    }
    Ok(0.5 * (trials as f64).log2() + 0.5 * PI_E.log2() - 0.5)
}

/// Outcome of evaluating the quoted binomial bound against the exact entropy.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BinomialBoundCheck {
    pub trials: u32,
    pub exact_entropy: f64,
    pub bound: f64,
    /// `exact_entropy - bound`; negative means the bound fails.
    pub slack: f64,
    pub holds: bool,
}

/// Report-only evaluation of [`binomial_entropy_cited_bound`].
pub fn check_cited_binomial_bound(trials: u32) -> Result<BinomialBoundCheck> {
    let bound = binomial_entropy_cited_bound(trials)?;
    let exact_entropy = entropy(&binomial_pmf(trials));
    let slack = exact_entropy - bound;
    Ok(BinomialBoundCheck {
        trials,
        exact_entropy,
        bound,
        slack,
        holds: slack >= -VIOLATION_TOLERANCE,
    })
}

/// Exact entropy and variance of `X_H` next to the upper bounds they must respect.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundReport {
    pub n: usize,
    pub m: usize,
    pub r: usize,
    pub entropy: f64,
    pub variance: BigRational,
    pub massey: f64,
    /// The vertex-count bound `1/2 log2 n + 1/2 log2(pi e)`.
    pub theorem2: f64,
    pub slack_massey: f64,
    pub slack_theorem2: f64,
    /// Identifiers (`massey`, `theorem2`) of bounds with slack below `-1e-9`.
    pub violations: Vec<&'static str>,
}

impl BoundReport {
    pub fn csv_row(&self, id: &str) -> String {
        format!(
            "{id},{},{},{},{},{},{},{},{},{}",
            self.n,
            self.m,
            self.r,
            sig6(self.entropy),
            self.variance.numer(),
            self.variance.denom(),
            sig6(self.massey),
            sig6(self.theorem2),
            self.violations.join(";")
        )
    }
}

impl Serialize for BoundReport {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("BoundReport", 10)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("m", &self.m)?;
        st.serialize_field("r", &self.r)?;
        st.serialize_field("entropy", &self.entropy)?;
        st.serialize_field("variance", &self.variance.to_string())?;
        st.serialize_field("massey", &self.massey)?;
        st.serialize_field("theorem2", &self.theorem2)?;
        st.serialize_field("slack_massey", &self.slack_massey)?;
        st.serialize_field("slack_theorem2", &self.slack_theorem2)?;
        st.serialize_field("violations", &self.violations)?;
        st.end()
    }
}

/// Computes the exact law of `X_H` and checks it against both upper bounds.
pub fn verify_bounds(h: &Hypergraph) -> Result<BoundReport> {
    let pmf = exact_pmf(h)?;
    let h_bits = entropy(&pmf);
    let variance = pmf.variance();
    let massey = massey_bound(ratio_to_f64(&variance))?;
    let theorem2 = vertex_count_bound(h.n())?;
    let slack_massey = massey - h_bits;
    let slack_theorem2 = theorem2 - h_bits;
    let mut violations = Vec::new();
    if slack_massey < -VIOLATION_TOLERANCE {
        violations.push("massey");
    }
    if slack_theorem2 < -VIOLATION_TOLERANCE {
        violations.push("theorem2");
    }
    Ok(BoundReport {
        n: h.n(),
        m: h.m(),
        r: h.r(),
        entropy: h_bits,
        variance,
        massey,
        theorem2,
        slack_massey,
        slack_theorem2,
        violations,
    })
}
