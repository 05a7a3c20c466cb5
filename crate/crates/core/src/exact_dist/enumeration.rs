//! Brute force over all `r^m` equally likely orientations.

use num_bigint::BigUint;
use rayon::prelude::*;

use super::orientation_count_within;
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::pmf::Pmf;

/// Largest orientation count enumerated by default.
pub const DEFAULT_ORIENTATION_CAP: u64 = 1 << 30;

/// Leading edges fixed per parallel task.
const SPLIT_TARGET: u64 = 256;

pub fn exact_pmf_enumeration(h: &Hypergraph) -> Result<Pmf> {
    exact_pmf_enumeration_with_cap(h, DEFAULT_ORIENTATION_CAP)
}

/// Exact law of `X_H`, counting hit vertices over every orientation in mixed-radix order.
pub fn exact_pmf_enumeration_with_cap(h: &Hypergraph, cap: u64) -> Result<Pmf> {
    if !orientation_count_within(h, cap) {
        return Err(Error::CapExceeded {
            what: "orientation enumeration",
            detail: format!("r^m = {}^{}", h.r(), h.m()),
            cap: cap.to_string(),
            hint: "; use inclusion-exclusion (n <= 24) or Monte Carlo",
        });
    }
    let (r, m) = (h.r(), h.m());

    // fix the first `split` edges per task, odometer over the rest
    let mut split = 0;
    let mut tasks: u64 = 1;
    while split < m && tasks < SPLIT_TARGET {
        tasks *= r as u64;
        split += 1;
    }

    let counts = (0..tasks).into_par_iter().map(|t| count_block(h, split, t)).reduce(
        || vec![0u64; h.n() + 1],
        |mut a, b| {
            a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
            a
        },
    );

    Pmf::from_weights(
        counts
            .into_iter()
            .enumerate()
            .map(|(x, c)| (x as i64, BigUint::from(c))),
    )
}

/// Histogram of hit counts over the orientations whose first `split` digits spell `prefix`
/// in base `r` (edge 0 most significant).
fn count_block(h: &Hypergraph, split: usize, prefix: u64) -> Vec<u64> {
    let (n, r, m) = (h.n(), h.r(), h.m());
    let edges = h.edges();
    let mut digits = vec![0usize; m];
    let mut rest = prefix;
    for i in (0..split).rev() {
        digits[i] = (rest % r as u64) as usize;
        rest /= r as u64;
    }

    let mut indeg = vec![0u32; n];
    let mut hit = 0usize;
    for (e, &d) in edges.iter().zip(&digits) {
        let v = e[d];
        if indeg[v] == 0 {
            hit += 1;
        }
        indeg[v] += 1;
    }

    let mut counts = vec![0u64; n + 1];
    loop {
        counts[hit] += 1;

        // odometer step over edges split..m, last edge fastest
        let mut i = m;
        loop {
            if i == split {
                return counts;
            }
            i -= 1;
            let old = edges[i][digits[i]];
            indeg[old] -= 1;
            if indeg[old] == 0 {
                hit -= 1;
            }
            let carry = digits[i] + 1 == r;
            digits[i] = if carry { 0 } else { digits[i] + 1 };
            let new = edges[i][digits[i]];
            if indeg[new] == 0 {
                hit += 1;
            }
            indeg[new] += 1;
            if !carry {
                break;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::SpecialKind;
    use num_rational::BigRational;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn single_edge() {
        let h = Hypergraph::new(2, 2, vec![vec![0, 1]]).unwrap();
        assert_eq!(exact_pmf_enumeration(&h).unwrap(), Pmf::point_mass(1));
    }

    #[test]
    fn triangle_law() {
        let p = exact_pmf_enumeration(&Hypergraph::cycle(3).unwrap()).unwrap();
        assert_eq!(p, Pmf::from_pairs([(2, q(3, 4)), (3, q(1, 4))]).unwrap());
    }

    #[test]
    fn double_edge_law() {
        let h = Hypergraph::new(2, 2, vec![vec![0, 1], vec![0, 1]]).unwrap();
        let p = exact_pmf_enumeration(&h).unwrap();
        assert_eq!(p, Pmf::from_pairs([(1, q(1, 2)), (2, q(1, 2))]).unwrap());
    }

    #[test]
    fn split_depth_does_not_matter() {
        // m larger than the split depth, and m smaller than it
        let big = Hypergraph::special(10, SpecialKind::StarPlusEdge).unwrap();
        let small = Hypergraph::new(5, 3, vec![vec![0, 1, 2], vec![2, 3, 4]]).unwrap();
        for h in [big, small] {
            let p = exact_pmf_enumeration(&h).unwrap();
            assert_eq!(p.probs().iter().cloned().sum::<BigRational>(), q(1, 1));
            assert!(p.support().iter().all(|&x| x >= 1 && x as usize <= h.n().min(h.m())));
        }
    }

    #[test]
    fn cap_refusal() {
        let h = Hypergraph::cycle(31).unwrap();
        let err = exact_pmf_enumeration(&h).unwrap_err();
        assert!(err.is_cap());
        assert!(err.to_string().contains("inclusion-exclusion"));
        assert!(exact_pmf_enumeration_with_cap(&Hypergraph::cycle(5).unwrap(), 16).is_err());
    }
}
