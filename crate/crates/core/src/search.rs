//! Exhaustive entropy maximisation over `D(n, m, r)` and checks of the open conjectures.
//!
//! Checkers never decide whether a conjecture is true; they emit verdicts over the
//! enumerated range.
//!
//! Candidates are evaluated in parallel and combined with an associative, commutative fold,
//! so reports are identical for any number of worker threads.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;

use crate::closed_form::{cycle_colour_pmf, entropy};
use crate::error::{Error, Result};
use crate::exact_dist::exact_pmf;
use crate::fmt::sig6;
use crate::hypergraph::{
    canonical_form, class_size, dice_regime, enumerate_class, CanonicalKey, Hypergraph, SpecialKind, CANON_VERTEX_CAP,
};

/// Entropies within this many bits of the maximum count as maximal.
pub const TIE_TOLERANCE: f64 = 1e-9;

pub const RANKING_CSV_HEADER: &str = "rank,canonical_key,entropy,degree_gap,is_maximizer";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Consistent,
    Counterexample,
    NotApplicable,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Consistent => "consistent",
            Verdict::Counterexample => "counterexample",
            Verdict::NotApplicable => "not-applicable",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RankEntry {
    pub canonical_key: CanonicalKey,
    pub entropy: f64,
    pub degree_gap: usize,
    pub is_maximizer: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SearchReport {
    pub n: usize,
    pub m: usize,
    pub r: usize,
    pub up_to_iso: bool,
    /// Whether `m >= n > r >= 2`.
    pub in_dice_regime: bool,
    pub candidates_evaluated: u64,
    pub max_entropy: f64,
    /// Keys of every class attaining the maximum, ascending.
    pub maximizers: Vec<CanonicalKey>,
    pub maximizer_degree_gaps: Vec<usize>,
    pub conjecture1_verdict: Verdict,
    /// Maximizers with degree gap above one, in full.
    pub counterexamples: Vec<Hypergraph>,
    pub ranking: Vec<RankEntry>,
}

impl SearchReport {
    pub fn to_csv(&self) -> String {
        let mut out = String::from(RANKING_CSV_HEADER);
        out.push('\n');
        for (i, e) in self.ranking.iter().enumerate() {
            let _ = writeln!(
                out,
                "{},{},{},{},{}",
                i + 1,
                e.canonical_key,
                sig6(e.entropy),
                e.degree_gap,
                e.is_maximizer
            );
        }
        out
    }
}

#[derive(Debug, Clone)]
struct Scored {
    key: CanonicalKey,
    entropy: f64,
    gap: usize,
}

/// Entropy descending, then key ascending.
fn rank_order(a: &Scored, b: &Scored) -> std::cmp::Ordering {
    b.entropy.total_cmp(&a.entropy).then_with(|| a.key.cmp(&b.key))
}

/// Fold state. `near_max` holds every key within the tie tolerance of the running maximum;
/// anything within tolerance of the final maximum is within tolerance of every partial one,
/// so merging is exact.
#[derive(Debug, Clone)]
struct Acc {
    count: u64,
    max: f64,
    near_max: BTreeMap<CanonicalKey, (f64, usize)>,
    top: Vec<Scored>,
    top_k: usize,
}

impl Acc {
    fn new(top_k: usize) -> Self {
        Acc {
            count: 0,
            max: f64::NEG_INFINITY,
            near_max: BTreeMap::new(),
            top: Vec::new(),
            top_k,
        }
    }

    fn push(mut self, s: Scored) -> Self {
        self.count += 1;
        if s.entropy > self.max {
            self.max = s.entropy;
            let floor = self.max - TIE_TOLERANCE;
            self.near_max.retain(|_, (e, _)| *e >= floor);
        }
        if s.entropy >= self.max - TIE_TOLERANCE {
            self.near_max.insert(s.key.clone(), (s.entropy, s.gap));
        }
        if !self.top.iter().any(|t| t.key == s.key) {
            self.top.push(s);
            self.top.sort_by(rank_order);
            self.top.truncate(self.top_k);
        }
        self
    }

    fn merge(mut self, other: Acc) -> Self {
        self.count += other.count;
        self.max = self.max.max(other.max);
        self.near_max.extend(other.near_max);
        let floor = self.max - TIE_TOLERANCE;
        self.near_max.retain(|_, (e, _)| *e >= floor);
        self.top.extend(other.top);
        self.top.sort_by(rank_order);
        self.top.dedup_by(|a, b| a.key == b.key);
        self.top.truncate(self.top_k);
        self
    }
}

fn score(h: &Hypergraph, up_to_iso: bool) -> Result<Scored> {
    let key = if up_to_iso {
        // iso-reduced enumeration only yields canonical representatives
        CanonicalKey::of_representative(h)
    } else {
        canonical_form(h)?
    };
    Ok(Scored {
        key,
        entropy: entropy(&exact_pmf(h)?),
        gap: h.degree_gap(),
    })
}

/// Exact entropy of every member of `D(n, m, r)` (or one per isomorphism class), with the
/// maximisers and the `top_k` best classes.
pub fn maximize_entropy(n: usize, m: usize, r: usize, up_to_iso: bool, top_k: usize) -> Result<SearchReport> {
    if n > CANON_VERTEX_CAP {
        return Err(Error::CapExceeded {
            what: "entropy search",
            detail: format!("n = {n}"),
            cap: format!("n <= {CANON_VERTEX_CAP}"),
            hint: " (maximisers are reported by canonical key)",
        });
    }
    let class = enumerate_class(n, m, r, up_to_iso)?;
    let acc = class
        .par_bridge()
        .map(|h| score(&h, up_to_iso))
        .try_fold(|| Acc::new(top_k.max(1)), |acc, s| s.map(|s| acc.push(s)))
        .try_reduce(|| Acc::new(top_k.max(1)), |a, b| Ok(a.merge(b)))?;

    let floor = acc.max - TIE_TOLERANCE;
    let maximizers: Vec<CanonicalKey> = acc.near_max.keys().cloned().collect();
    let maximizer_degree_gaps: Vec<usize> = acc.near_max.values().map(|&(_, g)| g).collect();
    let counterexamples: Vec<Hypergraph> = acc
        .near_max
        .iter()
        .filter(|(_, &(_, g))| g > 1)
        .map(|(k, _)| k.to_hypergraph())
        .collect();
    let conjecture1_verdict = if m < n {
        Verdict::NotApplicable
    } else if counterexamples.is_empty() {
        Verdict::Consistent
    } else {
        Verdict::Counterexample
    };
    let ranking = acc
        .top
        .into_iter()
        .take(top_k)
        .map(|s| RankEntry {
            is_maximizer: s.entropy >= floor,
            canonical_key: s.key,
            entropy: s.entropy,
            degree_gap: s.gap,
        })
        .collect();

    Ok(SearchReport {
        n,
        m,
        r,
        up_to_iso,
        in_dice_regime: dice_regime(n, m, r),
        candidates_evaluated: acc.count,
        max_entropy: acc.max,
        maximizers,
        maximizer_degree_gaps,
        conjecture1_verdict,
        counterexamples,
        ranking,
    })
}

/// Do all entropy maximisers of `D(n, m, r)` have degree gap at most one?
pub fn check_conjecture1(n: usize, m: usize, r: usize) -> Result<SearchReport> {
    maximize_entropy(n, m, r, true, 10)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CircularRow {
    pub n: usize,
    pub entropy: Option<f64>,
    /// `1/2 log2(n / r)`.
    pub half_log_n_over_r: f64,
    /// `entropy - 1/2 log2(n / r)`.
    pub residual: Option<f64>,
    /// Why the row has no entropy, if it was skipped.
    pub skipped: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CircularTable {
    pub r: usize,
    pub rows: Vec<CircularRow>,
    pub min_residual: Option<f64>,
}

impl CircularTable {
    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,r,entropy,half_log_n_over_r,residual,skipped\n");
        for row in &self.rows {
            let opt = |x: Option<f64>| x.map(sig6).unwrap_or_default();
            let _ = writeln!(
                out,
                "{},{},{},{},{},{}",
                row.n,
                self.r,
                opt(row.entropy),
                sig6(row.half_log_n_over_r),
                opt(row.residual),
                row.skipped.as_deref().unwrap_or("")
            );
        }
        out
    }
}

/// Residuals `H(X_Cy(n,r)) - 1/2 log2(n/r)` for `n_min..=n_max`.
pub fn check_circular_conjecture(r: usize, n_min: usize, n_max: usize) -> Result<CircularTable> {
    if r < 2 || n_min <= r {
        return Err(Error::InvalidParameter(format!(
            "circular hypergraphs need n > r >= 2, got n_min = {n_min}, r = {r}"
        )));
    }
    let rows: Vec<CircularRow> = (n_min..=n_max)
        .into_par_iter()
        .map(|n| -> Result<CircularRow> {
            let half_log = 0.5 * (n as f64 / r as f64).log2();
            let h = Hypergraph::circular(n, r)?;
            Ok(match exact_pmf(&h) {
                Ok(p) => {
                    let e = entropy(&p);
                    CircularRow {
                        n,
                        entropy: Some(e),
                        half_log_n_over_r: half_log,
                        residual: Some(e - half_log),
                        skipped: None,
                    }
                }
                Err(err) if err.is_cap() => CircularRow {
                    n,
                    entropy: None,
                    half_log_n_over_r: half_log,
                    residual: None,
                    skipped: Some(err.to_string()),
                },
                Err(err) => return Err(err),
            })
        })
        .collect::<Result<_>>()?;
    let min_residual = rows.iter().filter_map(|r| r.residual).reduce(f64::min);
    Ok(CircularTable { r, rows, min_residual })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct NamedEntropy {
    pub name: &'static str,
    pub canonical_key: CanonicalKey,
    pub entropy: f64,
}

/// Cycle against the whole class `G_n = D(n, n, 2)`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CycleComparison {
    pub n: usize,
    pub cycle_entropy: f64,
    pub class_max_entropy: f64,
    /// `class_max_entropy - cycle_entropy`.
    pub gap: f64,
    pub cycle_is_maximizer: bool,
    pub maximizer_keys: Vec<CanonicalKey>,
    /// The double-edge graph (even `n`) and the star plus an edge.
    pub examples: Vec<NamedEntropy>,
    /// `consistent` if the cycle attains the class maximum.
    pub verdict: Verdict,
    pub search: SearchReport,
}

pub fn compare_cycle_vs_all(n: usize) -> Result<CycleComparison> {
    let cycle = Hypergraph::cycle(n)?;
    let cycle_entropy = entropy(&cycle_colour_pmf(n as u32)?);
    let search = maximize_entropy(n, n, 2, n > 5, 10)?;
    let cycle_key = canonical_form(&cycle)?;
    let cycle_is_maximizer = search.maximizers.contains(&cycle_key);

    let mut examples = Vec::new();
    for (name, kind) in [
        ("double-edges", SpecialKind::DoubleEdges),
        ("star-plus-edge", SpecialKind::StarPlusEdge),
    ] {
        if let Ok(g) = Hypergraph::special(n, kind) {
            examples.push(NamedEntropy {
                name,
                canonical_key: canonical_form(&g)?,
                entropy: entropy(&exact_pmf(&g)?),
            });
        }
    }

    Ok(CycleComparison {
        n,
        cycle_entropy,
        class_max_entropy: search.max_entropy,
        gap: search.max_entropy - cycle_entropy,
        cycle_is_maximizer,
        maximizer_keys: search.maximizers.clone(),
        examples,
        verdict: if cycle_is_maximizer {
            Verdict::Consistent
        } else {
            Verdict::Counterexample
        },
        search,
    })
}

/// Multiset count of `D(n, m, r)` as a decimal string, for refusal messages and reports.
pub fn class_size_string(n: usize, m: usize, r: usize) -> String {
    class_size(n, m, r).to_string()
}
