//! Brute-force canonical forms for small multi-hypergraphs.
//!
//! The canonical form of `H` is the lexicographically smallest sorted edge list over all
//! `n!` relabellings of its vertices. It is itself a member of the isomorphism class, and
//! it is the first member of the class met by the lexicographic class enumeration.

use std::fmt;

use itertools::Itertools;
use serde::{Serialize, Serializer};

use super::Hypergraph;
use crate::error::{Error, Result};

/// Default vertex cap for exhaustive relabelling (`8! = 40320` permutations).
pub const CANON_VERTEX_CAP: usize = 8;

/// Hard limit of the edge encoding below.
const MAX_ENCODABLE: usize = 32;

/// Deterministic serialization of a canonical form: `[n, r, m_hi, m_lo, edge vertices...]`.
///
/// Byte order on keys of the same `(n, m, r)` agrees with lexicographic order on edge lists.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalKey(Vec<u8>);

impl CanonicalKey {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    /// Key of `h` as labelled; equals its canonical key only when `h` is a class representative.
    pub(crate) fn of_representative(h: &Hypergraph) -> Self {
        let m = h.m();
        let mut bytes = Vec::with_capacity(4 + m * h.r());
        bytes.push(h.n() as u8);
        bytes.push(h.r() as u8);
        bytes.push((m >> 8) as u8);
        bytes.push(m as u8);
        for e in h.edges() {
            bytes.extend(e.iter().map(|&v| v as u8));
        }
        CanonicalKey(bytes)
    }

    /// Rebuilds the representative hypergraph this key was taken from.
    pub fn to_hypergraph(&self) -> Hypergraph {
        let (n, r) = (self.0[0] as usize, self.0[1] as usize);
        let edges = self.0[4..]
            .chunks(r)
            .map(|c| c.iter().map(|&v| v as usize).collect())
            .collect();
        Hypergraph::from_sorted_unchecked(n, r, edges)
    }
}

/// Renders as `n4r2:01-01-23-23` (vertices joined by `.` once `n > 10`).
impl fmt::Display for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (n, r) = (self.0[0], self.0[1] as usize);
        write!(f, "n{n}r{r}:")?;
        let sep = if n > 10 { "." } else { "" };
        let edges: Vec<String> = self.0[4..]
            .chunks(r)
            .map(|c| c.iter().map(|v| v.to_string()).join(sep))
            .collect();
        f.write_str(&edges.join("-"))
    }
}

impl Serialize for CanonicalKey {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Edge code whose natural order matches lexicographic order of sorted `r`-sets.
///
/// Vertex `v` maps to bit `31 - v`; among sets of equal size the lexicographically smaller
/// one has the larger mask, so the complement sorts ascending in lexicographic order.
#[inline]
fn edge_code(edge: impl Iterator<Item = u32>) -> u32 {
    !edge.fold(0u32, |acc, bit| acc | bit)
}

/// Per-permutation lookup tables `bit[v] = 1 << (31 - perm[v])`.
pub(crate) struct Relabeller {
    tables: Vec<Vec<u32>>,
}

impl Relabeller {
    pub(crate) fn new(n: usize) -> Self {
        let tables = (0..n)
            .permutations(n)
            .map(|p| p.iter().map(|&t| 1u32 << (31 - t)).collect())
            .collect();
        Relabeller { tables }
    }

    fn identity_codes(h: &Hypergraph) -> Vec<u32> {
        h.edges()
            .iter()
            .map(|e| edge_code(e.iter().map(|&v| 1u32 << (31 - v))))
            .collect()
    }

    fn relabelled(table: &[u32], h: &Hypergraph, buf: &mut Vec<u32>) {
        buf.clear();
        buf.extend(h.edges().iter().map(|e| edge_code(e.iter().map(|&v| table[v]))));
        buf.sort_unstable();
    }

    /// Smallest relabelled code list.
    fn minimum(&self, h: &Hypergraph) -> Vec<u32> {
        let mut best = Self::identity_codes(h);
        let mut buf = Vec::with_capacity(h.m());
        for table in &self.tables {
            Self::relabelled(table, h, &mut buf);
            if buf < best {
                std::mem::swap(&mut best, &mut buf);
            }
        }
        best
    }

    /// Whether `h` (already sorted) is the lexicographically smallest member of its class.
    pub(crate) fn is_canonical(&self, h: &Hypergraph) -> bool {
        let own = Self::identity_codes(h);
        let mut buf = Vec::with_capacity(h.m());
        self.tables.iter().all(|table| {
            Self::relabelled(table, h, &mut buf);
            buf >= own
        })
    }
}

fn decode(n: usize, r: usize, codes: &[u32]) -> Hypergraph {
    let edges = codes
        .iter()
        .map(|&c| {
            let mask = !c;
            (0..n).filter(|&v| mask & (1u32 << (31 - v)) != 0).collect()
        })
        .collect();
    Hypergraph::from_sorted_unchecked(n, r, edges)
}

fn check_cap(h: &Hypergraph, cap: usize) -> Result<()> {
    let cap = cap.min(MAX_ENCODABLE);
    if h.n() > cap {
        return Err(Error::CapExceeded {
            what: "canonical form",
            detail: format!("n = {}", h.n()),
            cap: format!("n <= {cap}"),
            hint: "",
        });
    }
    if h.m() > u16::MAX as usize {
        return Err(Error::CapExceeded {
            what: "canonical form",
            detail: format!("m = {}", h.m()),
            cap: format!("m <= {}", u16::MAX),
            hint: "",
        });
    }
    Ok(())
}

/// The isomorphism-class representative of `h` (smallest relabelled edge list).
pub fn canonical_representative(h: &Hypergraph) -> Result<Hypergraph> {
    check_cap(h, CANON_VERTEX_CAP)?;
    Ok(decode(h.n(), h.r(), &Relabeller::new(h.n()).minimum(h)))
}

/// Canonical key with the default cap `n <= 8`.
pub fn canonical_form(h: &Hypergraph) -> Result<CanonicalKey> {
    canonical_form_with_cap(h, CANON_VERTEX_CAP)
}

/// Canonical key; equal keys iff the multi-hypergraphs are isomorphic.
pub fn canonical_form_with_cap(h: &Hypergraph, cap: usize) -> Result<CanonicalKey> {
    check_cap(h, cap)?;
    let rep = decode(h.n(), h.r(), &Relabeller::new(h.n()).minimum(h));
    Ok(CanonicalKey::of_representative(&rep))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::SpecialKind;

    fn hg(n: usize, r: usize, edges: &[&[usize]]) -> Hypergraph {
        Hypergraph::new(n, r, edges.iter().map(|e| e.to_vec()).collect()).unwrap()
    }

    #[test]
    fn relabelling_invariance() {
        let a = hg(3, 2, &[&[0, 1], &[1, 2]]);
        let b = hg(3, 2, &[&[2, 1], &[1, 0]]);
        assert_eq!(canonical_form(&a).unwrap(), canonical_form(&b).unwrap());
        let c = hg(3, 2, &[&[0, 2], &[2, 1]]);
        assert_eq!(canonical_form(&a).unwrap(), canonical_form(&c).unwrap());
    }

    #[test]
    fn non_isomorphic_distinct() {
        let a = hg(3, 2, &[&[0, 1], &[0, 1]]);
        let b = hg(3, 2, &[&[0, 1], &[1, 2]]);
        assert_ne!(canonical_form(&a).unwrap(), canonical_form(&b).unwrap());
    }

    #[test]
    fn representative_is_fixed_point() {
        let star = Hypergraph::special(5, SpecialKind::StarPlusEdge).unwrap();
        let rep = canonical_representative(&star).unwrap();
        assert_eq!(canonical_representative(&rep).unwrap(), rep);
        assert_eq!(canonical_form(&rep).unwrap(), canonical_form(&star).unwrap());
        assert_eq!(canonical_form(&star).unwrap().to_hypergraph(), rep);
    }

    #[test]
    fn representative_is_lexicographic_minimum() {
        // path 1-0-2 relabels to 0-1-2 whose sorted edges [[0,1],[0,2]] are smallest
        let p = hg(3, 2, &[&[1, 2], &[0, 2]]);
        assert_eq!(canonical_representative(&p).unwrap().edges(), &[vec![0, 1], vec![0, 2]]);
        assert!(Relabeller::new(3).is_canonical(&hg(3, 2, &[&[0, 1], &[0, 2]])));
        assert!(!Relabeller::new(3).is_canonical(&hg(3, 2, &[&[0, 1], &[1, 2]])));
    }

    #[test]
    fn display_and_cap() {
        let key = canonical_form(&Hypergraph::special(4, SpecialKind::DoubleEdges).unwrap()).unwrap();
        assert_eq!(key.to_string(), "n4r2:01-01-23-23");
        let big = Hypergraph::cycle(9).unwrap();
        assert!(canonical_form(&big).unwrap_err().is_cap());
        assert!(canonical_form_with_cap(&big, 9).is_ok());
    }

    #[test]
    fn edge_code_order_is_lexicographic() {
        let edges: Vec<Vec<u32>> = (0..6u32).combinations(3).collect();
        let codes: Vec<u32> = edges
            .iter()
            .map(|e| edge_code(e.iter().map(|&v| 1u32 << (31 - v))))
            .collect();
        assert!(codes.windows(2).all(|w| w[0] < w[1]));
    }
}
