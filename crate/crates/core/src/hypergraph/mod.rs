//! Uniform multi-hypergraphs: the coloured-dice configurations.
//!
//! A configuration of `m` dice with `r` sides, coloured with `n` colours so that no die
//! repeats a colour, is an `r`-uniform multi-hypergraph on `n` vertices with `m` edges.
//! Rolling the dice orients every edge towards one of its vertices.
//!
//! Edges are stored as strictly increasing vertex lists and the edge list is kept sorted,
//! so two hypergraphs with the same edge multiset compare equal. Repeated edges are kept
//! by repetition, which keeps "edge `i` of an orientation" a plain index.

mod canon;
mod enumerate;
mod io;

pub use canon::{canonical_form, canonical_form_with_cap, canonical_representative, CanonicalKey, CANON_VERTEX_CAP};
pub use enumerate::{class_size, enumerate_class, enumerate_class_with_budget, ClassIter, EnumBudget};
pub use io::{parse_hypergraph, read_hypergraph};

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An `r`-uniform multi-hypergraph on the vertex set `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawHypergraph")]
pub struct Hypergraph {
    n: usize,
    r: usize,
    edges: Vec<Vec<usize>>,
}

#[derive(Deserialize)]
struct RawHypergraph {
    n: usize,
    r: usize,
    edges: Vec<Vec<usize>>,
}

impl TryFrom<RawHypergraph> for Hypergraph {
    type Error = Error;

    fn try_from(raw: RawHypergraph) -> Result<Self> {
        Hypergraph::new(raw.n, raw.r, raw.edges)
    }
}

/// Edge counts for an ordered vertex pair `(v1, v2)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairOverlap {
    /// Edges containing `v1` but not `v2`.
    pub d1: usize,
    /// Edges containing `v2` but not `v1`.
    pub d2: usize,
    /// Edges containing both.
    pub d3: usize,
}

/// The two example graphs of `G_n` that sit next to the cycle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SpecialKind {
    /// `n/2` vertex-disjoint edges, each present twice.
    DoubleEdges,
    /// A star centred at vertex 0 plus the edge `{1, 2}`.
    StarPlusEdge,
}

impl Hypergraph {
    /// Validates and normalises a configuration.
    ///
    /// Each edge is sorted, then the edge list is sorted; duplicate edges are preserved.
    pub fn new(n: usize, r: usize, edges: Vec<Vec<usize>>) -> Result<Self> {
        if r < 2 {
            return Err(Error::InvalidParameter(format!(
                "edge size r must be at least 2, got {r}"
            )));
        }
        if edges.is_empty() {
            return Err(Error::NoEdges);
        }
        let mut edges = edges;
        for (i, edge) in edges.iter_mut().enumerate() {
            if edge.len() != r {
                return Err(Error::EdgeSize {
                    edge: i,
                    found: edge.len(),
                    expected: r,
                });
            }
            if let Some(&v) = edge.iter().find(|&&v| v >= n) {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            edge.sort_unstable();
            if let Some(w) = edge.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::ImproperColouring { edge: i, vertex: w[0] });
            }
        }
        edges.sort();
        Ok(Hypergraph { n, r, edges })
    }

    /// Caller guarantees every edge is strictly increasing, in range, of size `r`,
    /// and that the list is sorted and non-empty.
    pub(crate) fn from_sorted_unchecked(n: usize, r: usize, edges: Vec<Vec<usize>>) -> Self {
        debug_assert!(!edges.is_empty());
        debug_assert!(edges.windows(2).all(|w| w[0] <= w[1]));
        debug_assert!(edges
            .iter()
            .all(|e| e.len() == r && e.windows(2).all(|w| w[0] < w[1]) && e[r - 1] < n));
        Hypergraph { n, r, edges }
    }

    /// Number of vertices (colours).
    pub fn n(&self) -> usize {
        self.n
    }

    /// Edge size (sides per die).
    pub fn r(&self) -> usize {
        self.r
    }

    /// Number of edges (dice).
    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    /// Whether `(n, m, r)` lies in the regime `m >= n > r >= 2` of the dice problem.
    pub fn in_dice_regime(&self) -> bool {
        dice_regime(self.n, self.m(), self.r)
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        } else {
            Ok(())
        }
    }

    /// Number of edges containing `v`, counted with multiplicity.
    pub fn degree(&self, v: usize) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(self.edges.iter().filter(|e| e.contains(&v)).count())
    }

    /// All vertex degrees; isolated vertices have degree 0.
    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for e in &self.edges {
            for &v in e {
                deg[v] += 1;
            }
        }
        deg
    }

    /// Maximum minus minimum vertex degree.
    pub fn degree_gap(&self) -> usize {
        let deg = self.degrees();
        let max = deg.iter().copied().max().unwrap_or(0);
        let min = deg.iter().copied().min().unwrap_or(0);
        max - min
    }

    pub fn pair_overlap(&self, v1: usize, v2: usize) -> Result<PairOverlap> {
        self.check_vertex(v1)?;
        self.check_vertex(v2)?;
        if v1 == v2 {
            return Err(Error::SameVertex(v1));
        }
        let mut o = PairOverlap { d1: 0, d2: 0, d3: 0 };
        for e in &self.edges {
            match (e.contains(&v1), e.contains(&v2)) {
                (true, true) => o.d3 += 1,
                (true, false) => o.d1 += 1,
                (false, true) => o.d2 += 1,
                (false, false) => {}
            }
        }
        Ok(o)
    }

    /// The cycle `C_n` as a graph (`r = 2`).
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidParameter(format!("a cycle needs n >= 3, got {n}")));
        }
        Self::circular(n, 2)
    }

    /// The circular hypergraph `Cy(n, r)`: vertex set `Z_n`, one edge per window of `r`
    /// consecutive vertices.
    pub fn circular(n: usize, r: usize) -> Result<Self> {
        if r < 2 || n <= r {
            return Err(Error::InvalidParameter(format!(
                "circular hypergraph needs n > r >= 2, got n = {n}, r = {r}"
            )));
        }
        let edges = (0..n).map(|i| (0..r).map(|j| (i + j) % n).collect()).collect();
        Self::new(n, r, edges)
    }

    pub fn special(n: usize, kind: SpecialKind) -> Result<Self> {
        let edges: Vec<Vec<usize>> = match kind {
            SpecialKind::DoubleEdges => {
                if n < 2 || !n.is_multiple_of(2) {
                    return Err(Error::InvalidParameter(format!(
                        "double edges need an even n >= 2, got {n}"
                    )));
                }
                (0..n / 2)
                    .flat_map(|i| [vec![2 * i, 2 * i + 1], vec![2 * i, 2 * i + 1]])
                    .collect()
            }
            SpecialKind::StarPlusEdge => {
                if n < 3 {
                    return Err(Error::InvalidParameter(format!("star plus edge needs n >= 3, got {n}")));
                }
                (1..n).map(|v| vec![0, v]).chain(std::iter::once(vec![1, 2])).collect()
            }
        };
        Self::new(n, 2, edges)
    }

    /// Applies a vertex relabelling `v -> perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.n {
            return Err(Error::InvalidParameter(format!(
                "permutation has length {}, expected {}",
                perm.len(),
                self.n
            )));
        }
        let edges = self
            .edges
            .iter()
            .map(|e| e.iter().map(|&v| perm[v]).collect())
            .collect();
        Self::new(self.n, self.r, edges)
    }

    /// Text form: header `n=<n> r=<r>`, then one edge per line.
    pub fn to_text(&self) -> String {
        let mut out = format!("n={} r={}\n", self.n, self.r);
        for e in &self.edges {
            let line: Vec<String> = e.iter().map(|v| v.to_string()).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        out
    }
}

/// `m >= n > r >= 2`.
pub fn dice_regime(n: usize, m: usize, r: usize) -> bool {
    m >= n && n > r && r >= 2
}

impl fmt::Display for Hypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} r={} [", self.n, self.r)?;
        for (i, e) in self.edges.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            let vs: Vec<String> = e.iter().map(|v| v.to_string()).collect();
            write!(f, "{{{}}}", vs.join(","))?;
        }
        f.write_str("]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle() {
        let h = Hypergraph::new(3, 2, vec![vec![0, 1], vec![1, 2], vec![0, 2]]).unwrap();
        assert_eq!(h.m(), 3);
        assert_eq!(h.edges(), &[vec![0, 1], vec![0, 2], vec![1, 2]]);
    }

    #[test]
    fn improper_colouring_rejected() {
        let err = Hypergraph::new(2, 2, vec![vec![0, 0]]).unwrap_err();
        assert_eq!(err, Error::ImproperColouring { edge: 0, vertex: 0 });
    }

    #[test]
    fn duplicate_edges_kept_and_normalised() {
        let h = Hypergraph::new(2, 2, vec![vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(h.edges(), &[vec![0, 1], vec![0, 1]]);
        assert_eq!(h.m(), 2);
    }

    #[test]
    fn construction_errors() {
        assert!(matches!(
            Hypergraph::new(3, 2, vec![vec![0, 1, 2]]),
            Err(Error::EdgeSize {
                found: 3,
                expected: 2,
                ..
            })
        ));
        assert!(matches!(
            Hypergraph::new(3, 2, vec![vec![0, 3]]),
            Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
        ));
        assert_eq!(Hypergraph::new(3, 2, vec![]), Err(Error::NoEdges));
        assert!(matches!(
            Hypergraph::new(3, 1, vec![vec![0]]),
            Err(Error::InvalidParameter(_))
        ));
    }

    #[test]
    fn degrees() {
        let c3 = Hypergraph::cycle(3).unwrap();
        for v in 0..3 {
            assert_eq!(c3.degree(v).unwrap(), 2);
        }
        let dbl = Hypergraph::new(2, 2, vec![vec![0, 1], vec![0, 1]]).unwrap();
        assert_eq!(dbl.degree(0).unwrap(), 2);
        let star = Hypergraph::special(4, SpecialKind::StarPlusEdge).unwrap();
        assert_eq!(star.degree(0).unwrap(), 3);
        assert_eq!(star.degree(3).unwrap(), 1);
        assert!(star.degree(4).is_err());
    }

    #[test]
    fn degree_gaps() {
        assert_eq!(Hypergraph::cycle(4).unwrap().degree_gap(), 0);
        let star = Hypergraph::special(4, SpecialKind::StarPlusEdge).unwrap();
        assert_eq!(star.degrees(), vec![3, 2, 2, 1]);
        assert_eq!(star.degree_gap(), 2);
        assert_eq!(
            Hypergraph::special(4, SpecialKind::DoubleEdges).unwrap().degree_gap(),
            0
        );
        // isolated vertex counts with degree 0
        let h = Hypergraph::new(3, 2, vec![vec![0, 1]]).unwrap();
        assert_eq!(h.degree_gap(), 1);
    }

    #[test]
    fn pair_overlaps() {
        let c3 = Hypergraph::cycle(3).unwrap();
        assert_eq!(c3.pair_overlap(0, 1).unwrap(), PairOverlap { d1: 1, d2: 1, d3: 1 });
        let dbl = Hypergraph::new(2, 2, vec![vec![0, 1], vec![0, 1]]).unwrap();
        assert_eq!(dbl.pair_overlap(0, 1).unwrap(), PairOverlap { d1: 0, d2: 0, d3: 2 });
        let c4 = Hypergraph::cycle(4).unwrap();
        assert_eq!(c4.pair_overlap(0, 2).unwrap(), PairOverlap { d1: 2, d2: 2, d3: 0 });
        assert_eq!(c4.pair_overlap(1, 1), Err(Error::SameVertex(1)));
        assert!(c4.pair_overlap(0, 9).is_err());
    }

    #[test]
    fn generators() {
        assert_eq!(
            Hypergraph::cycle(3).unwrap().edges(),
            &[vec![0, 1], vec![0, 2], vec![1, 2]]
        );
        assert!(Hypergraph::cycle(2).is_err());
        let cy = Hypergraph::circular(5, 3).unwrap();
        assert_eq!(
            cy.edges(),
            &[
                vec![0, 1, 2],
                vec![0, 1, 4],
                vec![0, 3, 4],
                vec![1, 2, 3],
                vec![2, 3, 4]
            ]
        );
        assert!(cy.degrees().iter().all(|&d| d == 3));
        assert_eq!(Hypergraph::circular(4, 2).unwrap(), Hypergraph::cycle(4).unwrap());
        assert!(Hypergraph::circular(3, 3).is_err());
        assert_eq!(
            Hypergraph::special(4, SpecialKind::DoubleEdges).unwrap().edges(),
            &[vec![0, 1], vec![0, 1], vec![2, 3], vec![2, 3]]
        );
        assert_eq!(
            Hypergraph::special(4, SpecialKind::StarPlusEdge).unwrap().edges(),
            &[vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 2]]
        );
        assert!(Hypergraph::special(3, SpecialKind::DoubleEdges).is_err());
        assert!(Hypergraph::special(2, SpecialKind::StarPlusEdge).is_err());
    }

    #[test]
    fn circular_matches_cycle_for_graphs() {
        for n in 3..=12 {
            assert_eq!(Hypergraph::circular(n, 2).unwrap(), Hypergraph::cycle(n).unwrap());
        }
    }

    #[test]
    fn regime_flag() {
        assert!(Hypergraph::cycle(3).unwrap().in_dice_regime());
        assert!(!Hypergraph::new(2, 2, vec![vec![0, 1], vec![0, 1]])
            .unwrap()
            .in_dice_regime());
    }

    #[test]
    fn json_goes_through_validation() {
        let h: Hypergraph = serde_json::from_str(r#"{"n":3,"r":2,"edges":[[2,1],[0,1]]}"#).unwrap();
        assert_eq!(h.edges(), &[vec![0, 1], vec![1, 2]]);
        assert!(serde_json::from_str::<Hypergraph>(r#"{"n":3,"r":2,"edges":[[1,1]]}"#).is_err());
    }
}
