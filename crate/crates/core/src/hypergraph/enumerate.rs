//! Lexicographic enumeration of the class `D(n, m, r)` of all `r`-uniform multi-hypergraphs
//! on `n` vertices with `m` edges.

use std::sync::Arc;

use itertools::Itertools;
use num_bigint::BigUint;
use num_integer::binomial;

use super::canon::{Relabeller, CANON_VERTEX_CAP};
use super::Hypergraph;
use crate::error::{Error, Result};

/// Refusal thresholds for class enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumBudget {
    /// Largest multiset count that will be enumerated.
    pub max_multisets: u64,
    /// Largest `n` for which isomorphism reduction is attempted.
    pub iso_vertex_cap: usize,
}

impl Default for EnumBudget {
    fn default() -> Self {
        EnumBudget {
            max_multisets: 10_000_000,
            iso_vertex_cap: CANON_VERTEX_CAP,
        }
    }
}

/// `C(C(n, r) + m - 1, m)`: the number of edge multisets of size `m`.
pub fn class_size(n: usize, m: usize, r: usize) -> BigUint {
    if r > n {
        return BigUint::from(0u32);
    }
    let edges = binomial(BigUint::from(n), BigUint::from(r));
    if edges == BigUint::from(0u32) {
        return edges;
    }
    binomial(edges + BigUint::from(m) - 1u32, BigUint::from(m))
}

/// Streams `D(n, m, r)` in lexicographic order of sorted edge lists; with `up_to_iso`,
/// only the smallest member of each isomorphism class is yielded.
pub fn enumerate_class(n: usize, m: usize, r: usize, up_to_iso: bool) -> Result<ClassIter> {
    enumerate_class_with_budget(n, m, r, up_to_iso, EnumBudget::default())
}

pub fn enumerate_class_with_budget(
    n: usize,
    m: usize,
    r: usize,
    up_to_iso: bool,
    budget: EnumBudget,
) -> Result<ClassIter> {
    if r < 2 || m < 1 || n < r {
        return Err(Error::InvalidParameter(format!(
            "class D({n},{m},{r}) needs r >= 2, m >= 1 and n >= r"
        )));
    }
    let count = class_size(n, m, r);
    if count > BigUint::from(budget.max_multisets) {
        return Err(Error::BudgetExceeded {
            n,
            m,
            r,
            count: count.to_string(),
            budget: budget.max_multisets,
        });
    }
    let relabeller = if up_to_iso {
        let cap = budget.iso_vertex_cap.min(32);
        if n > cap {
            return Err(Error::CapExceeded {
                what: "isomorphism-reduced enumeration",
                detail: format!("n = {n}"),
                cap: format!("n <= {cap}"),
                hint: "; enumerate without --up-to-iso",
            });
        }
        Some(Arc::new(Relabeller::new(n)))
    } else {
        None
    };
    let all_edges: Vec<Vec<usize>> = (0..n).combinations(r).collect();
    Ok(ClassIter {
        n,
        r,
        all_edges: Arc::new(all_edges),
        idx: Some(vec![0; m]),
        relabeller,
    })
}

/// Iterator over a class; see [`enumerate_class`].
pub struct ClassIter {
    n: usize,
    r: usize,
    all_edges: Arc<Vec<Vec<usize>>>,
    /// Next non-decreasing index tuple into `all_edges`, `None` once exhausted.
    idx: Option<Vec<usize>>,
    relabeller: Option<Arc<Relabeller>>,
}

impl ClassIter {
    fn advance(&mut self) -> Option<Hypergraph> {
        let idx = self.idx.as_mut()?;
        let edges = idx.iter().map(|&i| self.all_edges[i].clone()).collect();
        let h = Hypergraph::from_sorted_unchecked(self.n, self.r, edges);

        let top = self.all_edges.len() - 1;
        match idx.iter().rposition(|&i| i < top) {
            Some(p) => {
                let v = idx[p] + 1;
                idx[p..].iter_mut().for_each(|i| *i = v);
            }
            None => self.idx = None,
        }
        Some(h)
    }
}

impl Iterator for ClassIter {
    type Item = Hypergraph;

    fn next(&mut self) -> Option<Hypergraph> {
        loop {
            let h = self.advance()?;
            match &self.relabeller {
                Some(rel) if !rel.is_canonical(&h) => continue,
                _ => return Some(h),
            }
        }
    }
}
