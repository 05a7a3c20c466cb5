//! Acceptance gate: one PASS/FAIL line per criterion, non-zero exit if any fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::Path;
use std::time::Instant;

use dice_entropy::cli::run;
use dice_entropy::closed_form::{binomial_even_pmf, binomial_pmf, coupling_pmf, cycle_colour_pmf, entropy};
use dice_entropy::entropy_bounds::{
    check_cited_binomial_bound, cycle_lower_bound, massey_bound, vertex_count_bound, VIOLATION_TOLERANCE,
};
use dice_entropy::exact_dist::{
    covariance_pair, exact_moments, exact_pmf_enumeration, exact_pmf_inclusion_exclusion, monte_carlo_pmf,
};
use dice_entropy::hypergraph::enumerate_class;
use dice_entropy::pmf::Pmf;
use dice_entropy::search::{check_circular_conjecture, check_conjecture1, compare_cycle_vs_all};
use dice_entropy::Hypergraph;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;

type Outcome = Result<String, String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn f64_of(q: &BigRational) -> f64 {
    q.to_f64().expect("finite")
}

/// Every multi-hypergraph with `r <= n <= 6`, `1 <= m <= 6`, `r` in {2, 3}, up to isomorphism.
fn corpus() -> Vec<Hypergraph> {
    let mut params = Vec::new();
    for r in [2, 3] {
        for n in r..=6 {
            for m in 1..=6 {
                params.push((n, m, r));
            }
        }
    }
    params
        .into_par_iter()
        .flat_map_iter(|(n, m, r)| enumerate_class(n, m, r, true).expect("within budget"))
        .collect()
}

fn oracle_equivalence(corpus: &[Hypergraph]) -> Outcome {
    corpus.par_iter().try_for_each(|h| {
        let a = exact_pmf_enumeration(h).map_err(|e| e.to_string())?;
        let b = exact_pmf_inclusion_exclusion(h).map_err(|e| e.to_string())?;
        ensure(a == b, || format!("engines disagree on {h}"))
    })?;
    Ok(format!("{} hypergraphs, exact rational equality", corpus.len()))
}

fn cycle_law() -> Outcome {
    for n in 3..=12usize {
        let enumerated = exact_pmf_enumeration(&Hypergraph::cycle(n).unwrap()).unwrap();
        ensure(enumerated == cycle_colour_pmf(n as u32).unwrap(), || {
            format!("C_{n} law differs")
        })?;
    }
    let mut worst = 0.0f64;
    for n in 3..=64u32 {
        let cycle = cycle_colour_pmf(n).unwrap();
        let even = binomial_even_pmf(n).unwrap();
        ensure(cycle.map_support(|x| 2 * (n as i64 - x)) == even, || {
            format!("n = {n}: 2(n - X) is not Bin(n, e)")
        })?;
        let diff = (entropy(&cycle) - entropy(&even)).abs();
        worst = worst.max(diff);
        ensure(diff <= 1e-12, || format!("n = {n}: entropy gap {diff:e}"))?;
    }
    Ok(format!(
        "laws equal for n = 3..12, max entropy gap {worst:e} for n = 3..64"
    ))
}

fn coupling() -> Outcome {
    for n in 1..=64 {
        ensure(coupling_pmf(n).unwrap() == binomial_even_pmf(n).unwrap(), || {
            format!("n = {n}")
        })?;
    }
    Ok("coupling law equals Bin(n, e) for n = 1..64".into())
}

fn moments(corpus: &[Hypergraph]) -> Outcome {
    let pairs: usize = corpus
        .par_iter()
        .map(|h| -> Result<usize, String> {
            let pmf = exact_pmf_enumeration(h).map_err(|e| e.to_string())?;
            let m = exact_moments(h);
            ensure(m.variance == pmf.variance(), || format!("variance mismatch on {h}"))?;
            ensure(m.mean == pmf.mean(), || format!("mean mismatch on {h}"))?;
            let cap = BigRational::new((h.n() as i64).into(), 4.into());
            ensure(m.variance <= cap, || format!("variance above n/4 on {h}"))?;
            let mut count = 0;
            for v1 in 0..h.n() {
                for v2 in v1 + 1..h.n() {
                    let c = covariance_pair(h, v1, v2).map_err(|e| e.to_string())?;
                    ensure(c <= BigRational::zero(), || {
                        format!("positive covariance at ({v1}, {v2}) on {h}")
                    })?;
                    count += 1;
                }
            }
            Ok(count)
        })
        .try_reduce(|| 0, |a, b| Ok(a + b))?;
    Ok(format!("{} hypergraphs, {pairs} vertex pairs", corpus.len()))
}

fn bounds(corpus: &[Hypergraph]) -> Outcome {
    let min_slack = corpus
        .par_iter()
        .map(|h| -> Result<f64, String> {
            let pmf = exact_pmf_enumeration(h).map_err(|e| e.to_string())?;
            let bits = entropy(&pmf);
            let massey = massey_bound(f64_of(&pmf.variance())).map_err(|e| e.to_string())?;
            let vertex = vertex_count_bound(h.n()).map_err(|e| e.to_string())?;
            ensure(massey.is_finite(), || format!("non-finite bound on {h}"))?;
            let slack = (massey - bits).min(vertex - bits);
            ensure(slack >= -VIOLATION_TOLERANCE, || format!("slack {slack} on {h}"))?;
            Ok(slack)
        })
        .try_reduce(|| f64::INFINITY, |a, b| Ok(a.min(b)))?;
    Ok(format!("{} hypergraphs, min slack {min_slack:.6} bits", corpus.len()))
}

fn cycle_lower_bounds() -> Outcome {
    for n in 3..=64usize {
        let h = entropy(&cycle_colour_pmf(n as u32).unwrap());
        let b = cycle_lower_bound(n).unwrap();
        ensure(h >= b, || format!("n = {n}: H = {h} < bound {b}"))?;
    }
    let spot = [(3, 0.811278, 0.47887), (4, 1.06128, 0.80668)];
    for (n, h_expected, b_expected) in spot {
        let h = entropy(&cycle_colour_pmf(n as u32).unwrap());
        let b = cycle_lower_bound(n).unwrap();
        ensure((h - h_expected).abs() <= 1e-5, || format!("H(C_{n}) = {h}"))?;
        ensure((b - b_expected).abs() <= 1e-4, || format!("bound({n}) = {b}"))?;
    }
    Ok("bound holds for n = 3..64; C_3 and C_4 spot values match".into())
}

fn sandwich() -> Outcome {
    for n in 2..=64u32 {
        let base = entropy(&binomial_pmf(n - 1));
        let even = entropy(&binomial_even_pmf(n).unwrap());
        ensure(base - 1.0 <= even + 1e-12 && even <= base + 1e-12, || {
            format!("n = {n}: {base} - 1 <= {even} <= {base} fails")
        })?;
    }
    Ok("H(Bin(n-1, 1/2)) - 1 <= H(Bin(n, e)) <= H(Bin(n-1, 1/2)) for n = 2..64".into())
}

fn monte_carlo() -> Outcome {
    const SAMPLES: u64 = 100_000;
    const SEED: u64 = 20240601;
    let mut worst = 0.0f64;
    for h in [Hypergraph::cycle(6).unwrap(), Hypergraph::circular(6, 3).unwrap()] {
        let exact: Pmf = exact_pmf_enumeration(&h).unwrap();
        let est = monte_carlo_pmf(&h, SAMPLES, SEED).unwrap();
        ensure(est.support.iter().all(|x| exact.support().contains(x)), || {
            format!("estimate outside support on {h}")
        })?;
        for (x, p) in exact.iter() {
            let p = f64_of(p);
            let se = (p * (1.0 - p) / SAMPLES as f64).sqrt();
            let z = (est.freq(x) - p).abs() / se;
            worst = worst.max(z);
            ensure(z <= 5.0, || format!("{h}: x = {x} off by {z:.2} standard errors"))?;
        }
        let again = monte_carlo_pmf(&h, SAMPLES, SEED).unwrap();
        ensure(again == est, || format!("same seed, different estimate on {h}"))?;
    }
    Ok(format!(
        "C_6 and Cy(6,3) within {worst:.2} standard errors; reproducible"
    ))
}

fn report_only() -> Outcome {
    let mut notes = Vec::new();
    let failing: Vec<u32> = (1..=4)
        .filter(|&t| !check_cited_binomial_bound(t).unwrap().holds)
        .collect();
    notes.push(format!("cited binomial bound fails at trials {failing:?}"));

    let c = compare_cycle_vs_all(4).map_err(|e| e.to_string())?;
    let double = c.examples.iter().find(|e| e.name == "double-edges").map(|e| e.entropy);
    notes.push(format!(
        "cycle-vs-all(4): cycle {:.5}, double-edges {:.5}, verdict {}",
        c.cycle_entropy,
        double.unwrap_or(f64::NAN),
        c.verdict.as_str()
    ));

    for (n, m, r) in [(3, 3, 2), (4, 4, 2), (5, 5, 2), (4, 4, 3)] {
        let s = check_conjecture1(n, m, r).map_err(|e| e.to_string())?;
        notes.push(format!(
            "degree-gap check ({n},{m},{r}): {}",
            s.conjecture1_verdict.as_str()
        ));
    }

    let t = check_circular_conjecture(3, 4, 8).map_err(|e| e.to_string())?;
    notes.push(format!(
        "circular r=3 n=4..8: {} rows, min residual {:.5}",
        t.rows.len(),
        t.min_residual.unwrap_or(f64::NAN)
    ));
    Ok(notes.join("; "))
}

fn golden() -> Outcome {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    let cases: [(&str, &[&str]); 3] = [
        ("pmf_cycle_3.csv", &["pmf", "--gen", "cycle", "--n", "3"]),
        ("bounds_cycle_4.csv", &["bounds", "--gen", "cycle", "--n", "4"]),
        (
            "search_4_4_2_iso.csv",
            &["search", "--n", "4", "--m", "4", "--r", "2", "--up-to-iso"],
        ),
    ];
    for (file, args) in cases {
        let expected = std::fs::read_to_string(dir.join(file)).map_err(|e| format!("{file}: {e}"))?;
        for threads in ["1", "4", "1", "4"] {
            let argv = std::iter::once("dice-entropy")
                .chain(args.iter().copied())
                .chain(["--threads", threads]);
            let (mut out, mut err) = (Vec::new(), Vec::new());
            let code = run(argv, &mut out, &mut err);
            ensure(code == 0, || format!("{file}: exit {code}"))?;
            ensure(out == expected.as_bytes(), || {
                format!("{file} differs with {threads} threads")
            })?;
        }
    }
    Ok("3 reports byte-identical to golden files across runs and 1/4 threads".into())
}

fn main() {
    let start = Instant::now();
    let corpus = corpus();
    eprintln!("corpus: {} hypergraphs in {:.1?}", corpus.len(), start.elapsed());

    let criteria: Vec<Criterion> = vec![
        ("oracle equivalence", Box::new(|| oracle_equivalence(&corpus))),
        ("cycle law", Box::new(cycle_law)),
        ("coupling", Box::new(coupling)),
        ("moments", Box::new(|| moments(&corpus))),
        ("upper bounds", Box::new(|| bounds(&corpus))),
        ("cycle lower bound", Box::new(cycle_lower_bounds)),
        ("entropy sandwich", Box::new(sandwich)),
        ("monte carlo consistency", Box::new(monte_carlo)),
        ("report-only checks", Box::new(report_only)),
        ("cli golden files", Box::new(golden)),
    ];

    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name}: {detail} ({:.1?})", i + 1, t.elapsed()),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {why} ({:.1?})", i + 1, t.elapsed());
            }
        }
    }
    println!(
        "{} of {} criteria passed in {:.1?}",
        criteria.len() - failed,
        criteria.len(),
        start.elapsed()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
