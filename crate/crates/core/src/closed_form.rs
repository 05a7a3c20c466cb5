//! Closed-form laws for fair-coin binomials and the cycle, and the entropy functional.
//!
//! `Bin(n, e)` denotes `Bin(n, 1/2)` conditioned on an even outcome, with
//! `P(k) = C(n, k) / 2^(n-1)` for even `k`. The number of hit vertices of a randomly
//! oriented `n`-cycle satisfies `n - X ~ Bin(n, e) / 2`.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::pmf::{ratio_to_f64, Pmf};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Conditioning {
    None,
    Even,
}

/// A `Bin(trials, 1/2)` law, optionally conditioned on an even outcome.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BinomialSpec {
    pub trials: u32,
    pub conditioning: Conditioning,
}

impl BinomialSpec {
    pub fn pmf(&self) -> Result<Pmf> {
        match self.conditioning {
            Conditioning::None => Ok(binomial_pmf(self.trials)),
            Conditioning::Even => binomial_even_pmf(self.trials),
        }
    }
}

/// Row `n` of Pascal's triangle, exactly.
pub fn pascal_row(n: u32) -> Vec<BigUint> {
    let mut row = vec![BigUint::one()];
    for _ in 0..n {
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(BigUint::one());
        next.extend(row.windows(2).map(|w| &w[0] + &w[1]));
        next.push(BigUint::one());
        row = next;
    }
    row
}

/// `C(n, k)` with `C(a, b) = 0` whenever `b < 0` or `b > a`.
pub fn binom(n: u32, k: i64) -> BigUint {
    if k < 0 || k > n as i64 {
        return BigUint::zero();
    }
    pascal_row(n).swap_remove(k as usize)
}

fn pow2(e: u32) -> BigInt {
    BigInt::one() << e
}

/// `Bin(n, 1/2)`: `P(k) = C(n, k) / 2^n`.
pub fn binomial_pmf(n: u32) -> Pmf {
    let den = pow2(n);
    Pmf::from_pairs(
        pascal_row(n)
            .into_iter()
            .enumerate()
            .map(|(k, c)| (k as i64, BigRational::new(c.into(), den.clone()))),
    )
    .expect("binomial coefficients sum to 2^n")
}

/// `Bin(n, e)`: `P(k) = C(n, k) / 2^(n-1)` on even `k`.
pub fn binomial_even_pmf(n: u32) -> Result<Pmf> {
    if n == 0 {
        return Err(Error::InvalidParameter(
            "even-conditioned binomial needs at least one trial".into(),
        ));
    }
    let den = pow2(n - 1);
    Pmf::from_pairs(
        pascal_row(n)
            .into_iter()
            .enumerate()
            .filter(|(k, _)| k % 2 == 0)
            .map(|(k, c)| (k as i64, BigRational::new(c.into(), den.clone()))),
    )
}

/// Law of the number of hit vertices of a randomly oriented `n`-cycle:
/// `P(X = n - k) = C(n, 2k) / 2^(n-1)`.
pub fn cycle_colour_pmf(n: u32) -> Result<Pmf> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!("a cycle needs n >= 3, got {n}")));
    }
    let den = pow2(n - 1);
    let row = pascal_row(n);
    Pmf::from_pairs((0..=n / 2).map(|k| {
        let c = row[2 * k as usize].clone();
        ((n - k) as i64, BigRational::new(c.into(), den.clone()))
    }))
}

/// Law of `Y + d(Y)` with `Y ~ Bin(n-1, 1/2)` and `d(Y) = Y mod 2`: odd draws are
/// rounded up to the next even number.
pub fn coupling_pmf(n: u32) -> Result<Pmf> {
    if n == 0 {
        return Err(Error::InvalidParameter("coupling needs n >= 1".into()));
    }
    let base = binomial_pmf(n - 1);
    let even = |k: i64| -> BigRational {
        // P(Y = k) + P(Y = k - 1), the latter being the odd draw that rounds up to k
        base.prob(k) + base.prob(k - 1)
    };
    Pmf::from_pairs((0..=n as i64).filter(|k| k % 2 == 0).map(|k| (k, even(k))))
}

/// Shannon entropy in bits, with `0 log 0 = 0`.
///
/// Terms are summed in ascending order of probability so that laws which differ only by
/// a relabelling of their support get bit-identical entropies.
pub fn entropy(p: &Pmf) -> f64 {
    let mut probs: Vec<f64> = p.probs().iter().map(ratio_to_f64).collect();
    probs.sort_by(f64::total_cmp);
    let h: f64 = probs.iter().filter(|&&q| q > 0.0).map(|&q| -q * q.log2()).sum();
    // a point mass sums to -0.0
    h.max(0.0)
}
