//! Exact probability mass functions over integer support.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::fmt::sig6;

/// Column header of the pmf CSV format.
pub const PMF_CSV_HEADER: &str = "x,numerator,denominator,probability_float";

/// A law on the integers with exact rational probabilities.
///
/// Support is strictly ascending, zero-probability points are dropped, and the
/// probabilities sum to exactly one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pmf {
    support: Vec<i64>,
    probs: Vec<BigRational>,
}

impl Pmf {
    /// Builds a pmf from `(x, p)` pairs; repeated points are merged.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (i64, BigRational)>) -> Result<Self> {
        let mut acc: BTreeMap<i64, BigRational> = BTreeMap::new();
        for (x, p) in pairs {
            if p.is_negative() {
                return Err(Error::InvalidParameter(format!("negative probability {p} at {x}")));
            }
            *acc.entry(x).or_insert_with(BigRational::zero) += p;
        }
        let total: BigRational = acc.values().sum();
        if !total.is_one() {
            return Err(Error::InvalidParameter(format!("probabilities sum to {total}, not 1")));
        }
        let (support, probs) = acc.into_iter().filter(|(_, p)| !p.is_zero()).unzip();
        Ok(Pmf { support, probs })
    }

    /// Normalises integer weights by their total.
    pub fn from_weights(weights: impl IntoIterator<Item = (i64, BigUint)>) -> Result<Self> {
        let weights: Vec<(i64, BigUint)> = weights.into_iter().collect();
        let total: BigUint = weights.iter().map(|(_, w)| w).sum();
        if total.is_zero() {
            return Err(Error::InvalidParameter("all weights are zero".into()));
        }
        let total = BigInt::from(total);
        Self::from_pairs(
            weights
                .into_iter()
                .map(|(x, w)| (x, BigRational::new(BigInt::from(w), total.clone()))),
        )
    }

    pub fn point_mass(x: i64) -> Self {
        Pmf {
            support: vec![x],
            probs: vec![BigRational::one()],
        }
    }

    pub fn support(&self) -> &[i64] {
        &self.support
    }

    pub fn probs(&self) -> &[BigRational] {
        &self.probs
    }

    pub fn len(&self) -> usize {
        self.support.len()
    }

    pub fn is_empty(&self) -> bool {
        self.support.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, &BigRational)> {
        self.support.iter().copied().zip(self.probs.iter())
    }

    /// `P(X = x)`; zero off the support.
    pub fn prob(&self, x: i64) -> BigRational {
        match self.support.binary_search(&x) {
            Ok(i) => self.probs[i].clone(),
            Err(_) => BigRational::zero(),
        }
    }

    /// Probabilities rounded to `f64`.
    pub fn float_probs(&self) -> Vec<f64> {
        self.probs.iter().map(ratio_to_f64).collect()
    }

    pub fn mean(&self) -> BigRational {
        self.iter().map(|(x, p)| p * BigRational::from_integer(x.into())).sum()
    }

    pub fn variance(&self) -> BigRational {
        let mean = self.mean();
        self.iter()
            .map(|(x, p)| {
                let d = BigRational::from_integer(x.into()) - &mean;
                p * &d * &d
            })
            .sum()
    }

    /// Shannon entropy in bits.
    pub fn entropy(&self) -> f64 {
        crate::closed_form::entropy(self)
    }

    /// Law of `f(X)`.
    pub fn map_support(&self, f: impl Fn(i64) -> i64) -> Self {
        Self::from_pairs(self.iter().map(|(x, p)| (f(x), p.clone())))
            .expect("pushforward of a valid pmf is a valid pmf")
    }

    /// CSV with columns `x,numerator,denominator,probability_float`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from(PMF_CSV_HEADER);
        out.push('\n');
        for (x, p) in self.iter() {
            let _ = writeln!(out, "{x},{},{},{}", p.numer(), p.denom(), sig6(ratio_to_f64(p)));
        }
        out
    }
}

impl Serialize for Pmf {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Pmf", 3)?;
        st.serialize_field("support", &self.support)?;
        let exact: Vec<String> = self.probs.iter().map(|p| p.to_string()).collect();
        st.serialize_field("probs", &exact)?;
        st.serialize_field("probs_float", &self.float_probs())?;
        st.end()
    }
}

pub(crate) fn ratio_to_f64(p: &BigRational) -> f64 {
    p.to_f64().unwrap_or(f64::NAN)
}
