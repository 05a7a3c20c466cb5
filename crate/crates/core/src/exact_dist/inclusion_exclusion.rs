//! Law of the zero-in-degree set by inclusion-exclusion over vertex subsets.
//!
//! For a vertex set `S`, no edge points into `S` with probability
//! `q(S) = prod_E (r - |E ∩ S|) / r`. With `Z` the set of unhit vertices,
//! `P(Z ⊇ S) = q(S)`, and with `s_j = sum_{|S| = j} q(S)`,
//! `P(|Z| = k) = sum_{j >= k} (-1)^(j-k) C(j, k) s_j`. The number of hit vertices is `n - |Z|`.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::closed_form::binom;
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::pmf::Pmf;

/// Largest vertex count accepted (`2^24` subsets).
pub const INCLUSION_EXCLUSION_VERTEX_CAP: usize = 24;

const CHUNK: u64 = 1 << 12;

pub fn exact_pmf_inclusion_exclusion(h: &Hypergraph) -> Result<Pmf> {
    let n = h.n();
    if n > INCLUSION_EXCLUSION_VERTEX_CAP {
        return Err(Error::CapExceeded {
            what: "inclusion-exclusion",
            detail: format!("n = {n}"),
            cap: format!("n <= {INCLUSION_EXCLUSION_VERTEX_CAP}"),
            hint: "; use enumeration or Monte Carlo",
        });
    }
    let masks: Vec<u32> = h
        .edges()
        .iter()
        .map(|e| e.iter().fold(0u32, |acc, &v| acc | (1 << v)))
        .collect();

    // s_j scaled by r^m, so every term is an integer
    let sigma = subset_sums(n, h.r() as u32, &masks);

    let scale = BigInt::from(BigUint::from(h.r()).pow(h.m() as u32));
    let pairs = (0..=n).map(|k| {
        let mut acc = BigInt::zero();
        for (j, s) in sigma.iter().enumerate().skip(k) {
            let term = BigInt::from(binom(j as u32, k as i64)) * BigInt::from(s.clone());
            if (j - k) % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        ((n - k) as i64, BigRational::new(acc, scale.clone()))
    });
    Pmf::from_pairs(pairs)
}

/// `r^m * s_j` for `j = 0..=n`.
fn subset_sums(n: usize, r: u32, masks: &[u32]) -> Vec<BigUint> {
    let m = masks.len() as f64;
    // each product is at most r^m and there are at most 2^n of them
    let fits_u128 = m * (r as f64).log2() + n as f64 <= 126.0;
    let total: u64 = 1 << n;
    let chunks = total.div_ceil(CHUNK);

    if fits_u128 {
        let sums = (0..chunks)
            .into_par_iter()
            .map(|c| {
                let mut acc = vec![0u128; n + 1];
                for s in c * CHUNK..((c + 1) * CHUNK).min(total) {
                    let s = s as u32;
                    let mut prod: u128 = 1;
                    for &e in masks {
                        prod *= (r - (e & s).count_ones()) as u128;
                        if prod == 0 {
                            break;
                        }
                    }
                    acc[s.count_ones() as usize] += prod;
                }
                acc
            })
            .reduce(
                || vec![0u128; n + 1],
                |mut a, b| {
                    a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                    a
                },
            );
        sums.into_iter().map(BigUint::from).collect()
    } else {
        (0..chunks)
            .into_par_iter()
            .map(|c| {
                let mut acc = vec![BigUint::zero(); n + 1];
                for s in c * CHUNK..((c + 1) * CHUNK).min(total) {
                    let s = s as u32;
                    let mut prod = BigUint::one();
                    for &e in masks {
                        prod *= r - (e & s).count_ones();
                        if prod.is_zero() {
                            break;
                        }
                    }
                    acc[s.count_ones() as usize] += prod;
                }
                acc
            })
            .reduce(
                || vec![BigUint::zero(); n + 1],
                |mut a, b| {
                    a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                    a
                },
            )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_dist::exact_pmf_enumeration;
    use crate::hypergraph::SpecialKind;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn triangle_and_single_edge() {
        let c3 = exact_pmf_inclusion_exclusion(&Hypergraph::cycle(3).unwrap()).unwrap();
        assert_eq!(c3, Pmf::from_pairs([(2, q(3, 4)), (3, q(1, 4))]).unwrap());
        let e = Hypergraph::new(3, 3, vec![vec![0, 1, 2]]).unwrap();
        assert_eq!(exact_pmf_inclusion_exclusion(&e).unwrap(), Pmf::point_mass(1));
    }

    #[test]
    fn double_edges_convolve() {
        // two independent components with law {1: 1/2, 2: 1/2}
        let h = Hypergraph::special(4, SpecialKind::DoubleEdges).unwrap();
        let p = exact_pmf_inclusion_exclusion(&h).unwrap();
        assert_eq!(p, Pmf::from_pairs([(2, q(1, 4)), (3, q(1, 2)), (4, q(1, 4))]).unwrap());
    }

    #[test]
    fn big_integer_path_agrees() {
        // 2^140 orientations forces the arbitrary-precision branch
        let edges = (0..140).map(|i| vec![i % 4, 4 + i % 3]).collect();
        let h = Hypergraph::new(7, 2, edges).unwrap();
        let p = exact_pmf_inclusion_exclusion(&h).unwrap();
        assert_eq!(p.probs().iter().cloned().sum::<BigRational>(), q(1, 1));
        assert!(p.support().iter().all(|&x| (2..=7).contains(&x)));
    }

    #[test]
    fn agrees_with_enumeration_on_mixed_graphs() {
        let h = Hypergraph::new(6, 3, vec![vec![0, 1, 2], vec![0, 1, 2], vec![2, 3, 5], vec![1, 4, 5]]).unwrap();
        assert_eq!(
            exact_pmf_inclusion_exclusion(&h).unwrap(),
            exact_pmf_enumeration(&h).unwrap()
        );
    }

    #[test]
    fn vertex_cap() {
        let h = Hypergraph::cycle(25).unwrap();
        assert!(exact_pmf_inclusion_exclusion(&h).unwrap_err().is_cap());
    }
}
