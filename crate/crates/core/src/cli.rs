//! Command-line front end.
//!
//! Every report starts with `# ` header lines recording the command, the hypergraph and
//! all parameters (seed included), so a report can be regenerated from its own header.
//! CSV is the default output; `--output json` and `--output table` are also available.
//!
//! Exit codes: 0 success, 1 input error, 2 cap or budget refusal, 3 bound violation
//! under `bounds --assert`.

use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::closed_form::{binomial_even_pmf, binomial_pmf, coupling_pmf, cycle_colour_pmf, entropy};
use crate::entropy_bounds::{
    check_cited_binomial_bound, cycle_lower_bound, verify_bounds, BOUND_CSV_HEADER, VIOLATION_TOLERANCE,
};
use crate::error::{Error, Result};
use crate::exact_dist::{
    auto_engine, exact_moments, exact_pmf_enumeration, exact_pmf_inclusion_exclusion, monte_carlo_pmf, Engine,
};
use crate::fmt::sig6;
use crate::hypergraph::{read_hypergraph, Hypergraph, SpecialKind};
use crate::pmf::{ratio_to_f64, Pmf};
use crate::search::{
    check_circular_conjecture, check_conjecture1, compare_cycle_vs_all, maximize_entropy, SearchReport,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_CAP: i32 = 2;
pub const EXIT_VIOLATION: i32 = 3;

const DEFAULT_SAMPLES: u64 = 100_000;

#[derive(Parser, Debug)]
#[command(
    name = "dice-entropy",
    version,
    about = "Entropy of the number of colours seen after rolling properly coloured dice"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format
    #[arg(long, value_enum, default_value_t = OutputFormat::Csv, global = true)]
    output: OutputFormat,

    /// Write the report here instead of standard output
    #[arg(long, global = true)]
    output_path: Option<PathBuf>,

    /// Worker threads (results do not depend on it)
    #[arg(long, global = true)]
    threads: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Csv,
    Json,
    Table,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GenKind {
    Cycle,
    Circular,
    DoubleEdges,
    StarPlusEdge,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum EngineArg {
    Auto,
    Enumerate,
    Inclexcl,
    Mc,
}

#[derive(Args, Debug, Clone)]
struct Source {
    /// Hypergraph file (text `n=<n> r=<r>` plus one edge per line, or JSON)
    #[arg(long = "in", value_name = "FILE", conflicts_with = "gen")]
    input: Option<PathBuf>,

    /// Built-in generator
    #[arg(long, value_enum)]
    gen: Option<GenKind>,

    /// Vertex count for --gen
    #[arg(long)]
    n: Option<usize>,

    /// Edge size for --gen circular
    #[arg(long)]
    r: Option<usize>,
}

#[derive(Args, Debug, Clone)]
struct Sampling {
    #[arg(long, value_enum, default_value_t = EngineArg::Auto)]
    engine: EngineArg,

    /// Monte Carlo sample count
    #[arg(long, default_value_t = DEFAULT_SAMPLES)]
    samples: u64,

    /// Monte Carlo seed
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Law of the number of hit vertices
    Pmf {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        sampling: Sampling,
    },
    /// Shannon entropy of that law, in bits
    Entropy {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        sampling: Sampling,
    },
    /// Exact hit probabilities, mean and variance
    Moments {
        #[command(flatten)]
        source: Source,
    },
    /// Exact entropy and variance against the upper bounds
    Bounds {
        #[command(flatten)]
        source: Source,
        /// Exit with status 3 if a bound is violated
        #[arg(long)]
        assert: bool,
    },
    /// Closed-form cycle law and its entropy lower bound
    Cycle {
        #[arg(long)]
        n: usize,
    },
    /// Even-conditioned binomial and the rounding-up coupling
    BinomEven {
        #[arg(long)]
        n: u32,
    },
    /// Exhaustive entropy maximisation over D(n, m, r)
    Search {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        up_to_iso: bool,
        #[arg(long, default_value_t = 10)]
        top_k: usize,
    },
    /// Degree gaps of the entropy maximisers of D(n, m, r)
    Conjecture1 {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        r: usize,
    },
    /// Residuals of circular hypergraph entropies against 1/2 log2(n/r)
    Conjecture2 {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        n_min: usize,
        #[arg(long)]
        n_max: usize,
    },
    /// The n-cycle against every graph in G_n
    CycleVsAll {
        #[arg(long)]
        n: usize,
    },
    /// Write a generated hypergraph
    Gen {
        #[arg(long, value_enum)]
        kind: GenKind,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: Option<usize>,
        /// Destination file (standard output if omitted)
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// A rendered report: CSV body, structured form and trailing summary lines.
struct Report {
    header: Vec<(String, String)>,
    csv: String,
    summary: Vec<(String, String)>,
    json: Value,
}

impl Report {
    fn new(command: &str) -> Self {
        Report {
            header: vec![("command".into(), command.into())],
            csv: String::new(),
            summary: Vec::new(),
            json: Value::Null,
        }
    }

    fn param(mut self, key: &str, value: impl ToString) -> Self {
        self.header.push((key.into(), value.to_string()));
        self
    }

    fn hypergraph(self, h: &Hypergraph) -> Self {
        let edges = serde_json::to_string(h.edges()).expect("edges serialize");
        self.param("n", h.n())
            .param("r", h.r())
            .param("m", h.m())
            .param("edges", edges)
    }

    fn note(&mut self, key: &str, value: impl ToString) {
        self.summary.push((key.into(), value.to_string()));
    }

    fn render(&self, format: OutputFormat) -> String {
        let comments = |pairs: &[(String, String)]| -> String {
            pairs.iter().fold(String::new(), |mut s, (k, v)| {
                let _ = writeln!(s, "# {k}={v}");
                s
            })
        };
        match format {
            OutputFormat::Csv => format!("{}{}{}", comments(&self.header), self.csv, comments(&self.summary)),
            OutputFormat::Table => {
                format!(
                    "{}{}{}",
                    comments(&self.header),
                    align(&self.csv),
                    comments(&self.summary)
                )
            }
            OutputFormat::Json => {
                let obj = |pairs: &[(String, String)]| -> Value {
                    Value::Object(
                        pairs
                            .iter()
                            .map(|(k, v)| (k.clone(), Value::String(v.clone())))
                            .collect(),
                    )
                };
                let mut out = serde_json::to_string_pretty(&json!({
                    "config": obj(&self.header),
                    "report": self.json,
                    "summary": obj(&self.summary),
                }))
                .expect("report serializes");
                out.push('\n');
                out
            }
        }
    }
}

/// Pads CSV columns to a common width.
fn align(csv: &str) -> String {
    let rows: Vec<Vec<&str>> = csv.lines().map(|l| l.split(',').collect()).collect();
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|c| rows.iter().filter_map(|r| r.get(c)).map(|s| s.len()).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for row in rows {
        let cells: Vec<String> = row
            .iter()
            .enumerate()
            .map(|(i, s)| format!("{s:<w$}", w = widths[i]))
            .collect();
        let _ = writeln!(out, "{}", cells.join("  ").trim_end());
    }
    out
}

fn generate(kind: GenKind, n: Option<usize>, r: Option<usize>) -> Result<Hypergraph> {
    let n = n.ok_or_else(|| Error::InvalidParameter("--gen needs --n".into()))?;
    match kind {
        GenKind::Cycle => Hypergraph::cycle(n),
        GenKind::Circular => {
            let r = r.ok_or_else(|| Error::InvalidParameter("--gen circular needs --r".into()))?;
            Hypergraph::circular(n, r)
        }
        GenKind::DoubleEdges => Hypergraph::special(n, SpecialKind::DoubleEdges),
        GenKind::StarPlusEdge => Hypergraph::special(n, SpecialKind::StarPlusEdge),
    }
}

fn load(source: &Source) -> Result<Hypergraph> {
    match (&source.input, source.gen) {
        (Some(path), _) => read_hypergraph(path),
        (None, Some(kind)) => generate(kind, source.n, source.r),
        (None, None) => Err(Error::InvalidParameter(
            "give a hypergraph with --in FILE or --gen KIND".into(),
        )),
    }
}

fn resolve_engine(arg: EngineArg, h: &Hypergraph) -> Engine {
    match arg {
        EngineArg::Auto => auto_engine(h),
        EngineArg::Enumerate => Engine::Enumerate,
        EngineArg::Inclexcl => Engine::InclusionExclusion,
        EngineArg::Mc => Engine::MonteCarlo,
    }
}

fn warn_fallback(requested: EngineArg, warn: &mut dyn Write) {
    if requested == EngineArg::Auto {
        let _ = writeln!(
            warn,
            "warning: instance too large for exact engines, estimating by Monte Carlo"
        );
    }
}

fn exact_law(engine: Engine, h: &Hypergraph) -> Result<Pmf> {
    match engine {
        Engine::InclusionExclusion => exact_pmf_inclusion_exclusion(h),
        _ => exact_pmf_enumeration(h),
    }
}

fn frac_row(out: &mut String, label: impl std::fmt::Display, q: &num_rational::BigRational) {
    let _ = writeln!(out, "{label},{},{},{}", q.numer(), q.denom(), sig6(ratio_to_f64(q)));
}

fn search_notes(rep: &mut Report, s: &SearchReport) {
    rep.note("candidates_evaluated", s.candidates_evaluated);
    rep.note("max_entropy", sig6(s.max_entropy));
    rep.note(
        "maximizers",
        s.maximizers.iter().map(|k| k.to_string()).collect::<Vec<_>>().join(" "),
    );
    rep.note(
        "maximizer_degree_gaps",
        s.maximizer_degree_gaps
            .iter()
            .map(|g| g.to_string())
            .collect::<Vec<_>>()
            .join(" "),
    );
    rep.note("in_dice_regime", s.in_dice_regime);
    rep.note("conjecture1_verdict", s.conjecture1_verdict.as_str());
}

fn to_json<T: Serialize>(value: &T) -> Value {
    serde_json::to_value(value).expect("report serializes")
}

/// Runs one report-producing command, returning the report and its exit code.
fn execute(command: Command, warn: &mut dyn Write) -> Result<(Report, i32)> {
    let mut code = EXIT_OK;
    let report = match command {
        Command::Pmf { source, sampling } => {
            let h = load(&source)?;
            let engine = resolve_engine(sampling.engine, &h);
            let mut rep = Report::new("pmf").hypergraph(&h).param("engine", engine.name());
            if engine == Engine::MonteCarlo {
                warn_fallback(sampling.engine, warn);
                rep = rep.param("samples", sampling.samples).param("seed", sampling.seed);
                let est = monte_carlo_pmf(&h, sampling.samples, sampling.seed)?;
                rep.csv = est.to_csv();
                rep.note("plugin_entropy", sig6(est.plugin_entropy()));
                rep.json = to_json(&est);
            } else {
                let p = exact_law(engine, &h)?;
                rep.csv = p.to_csv();
                rep.json = to_json(&p);
            }
            rep
        }
        Command::Entropy { source, sampling } => {
            let h = load(&source)?;
            let engine = resolve_engine(sampling.engine, &h);
            let mut rep = Report::new("entropy").hypergraph(&h).param("engine", engine.name());
            let bits = if engine == Engine::MonteCarlo {
                warn_fallback(sampling.engine, warn);
                rep = rep.param("samples", sampling.samples).param("seed", sampling.seed);
                monte_carlo_pmf(&h, sampling.samples, sampling.seed)?.plugin_entropy()
            } else {
                entropy(&exact_law(engine, &h)?)
            };
            rep.csv = format!(
                "n,m,r,engine,entropy\n{},{},{},{},{}\n",
                h.n(),
                h.m(),
                h.r(),
                engine.name(),
                sig6(bits)
            );
            rep.json = json!({ "entropy": bits, "engine": engine.name() });
            rep
        }
        Command::Moments { source } => {
            let h = load(&source)?;
            let mut rep = Report::new("moments").hypergraph(&h);
            let m = exact_moments(&h);
            let mut csv = String::from("quantity,numerator,denominator,float\n");
            for (v, p) in m.hit_prob.iter().enumerate() {
                frac_row(&mut csv, format_args!("hit_prob[{v}]"), p);
            }
            frac_row(&mut csv, "mean", &m.mean);
            frac_row(&mut csv, "variance", &m.variance);
            rep.csv = csv;
            rep.json = to_json(&m);
            rep
        }
        Command::Bounds { source, assert } => {
            let h = load(&source)?;
            let id = match (&source.input, source.gen) {
                (Some(p), _) => p
                    .file_stem()
                    .map(|s| s.to_string_lossy().into_owned())
                    .unwrap_or_default(),
                (None, Some(kind)) => format!("{}-n{}", kind.to_possible_value().expect("named").get_name(), h.n()),
                _ => String::new(),
            };
            let mut rep = Report::new("bounds")
                .hypergraph(&h)
                .param("tolerance", VIOLATION_TOLERANCE);
            let b = verify_bounds(&h)?;
            rep.csv = format!("{BOUND_CSV_HEADER}\n{}\n", b.csv_row(&id));
            rep.note("slack_massey", sig6(b.slack_massey));
            rep.note("slack_theorem2", sig6(b.slack_theorem2));
            if assert && !b.violations.is_empty() {
                code = EXIT_VIOLATION;
            }
            rep.json = to_json(&b);
            rep
        }
        Command::Cycle { n } => {
            let mut rep = Report::new("cycle").param("n", n);
            let p = cycle_colour_pmf(n as u32)?;
            let h = entropy(&p);
            let lower = cycle_lower_bound(n)?;
            rep.csv = p.to_csv();
            rep.note("entropy", sig6(h));
            rep.note("lower_bound", sig6(lower));
            rep.note("slack", sig6(h - lower));
            rep.note("lower_bound_holds", h >= lower - VIOLATION_TOLERANCE);
            rep.json = json!({ "pmf": to_json(&p), "entropy": h, "lower_bound": lower });
            rep
        }
        Command::BinomEven { n } => {
            let mut rep = Report::new("binom-even").param("n", n);
            let even = binomial_even_pmf(n)?;
            let coupled = coupling_pmf(n)?;
            let h_even = entropy(&even);
            rep.csv = even.to_csv();
            rep.note("entropy", sig6(h_even));
            rep.note("coupling_equal", coupled == even);
            let mut json = json!({ "pmf": to_json(&even), "entropy": h_even, "coupling_equal": coupled == even });
            if n >= 2 {
                let h_base = entropy(&binomial_pmf(n - 1));
                rep.note("binomial_entropy_n_minus_1", sig6(h_base));
                rep.note(
                    "sandwich_holds",
                    h_base - 1.0 <= h_even + VIOLATION_TOLERANCE && h_even <= h_base + VIOLATION_TOLERANCE,
                );
                let cited = check_cited_binomial_bound(n - 1)?;
                rep.note("cited_binomial_bound", sig6(cited.bound));
                rep.note("cited_binomial_bound_holds", cited.holds);
                json["cited_binomial_bound"] = to_json(&cited);
            }
            rep.json = json;
            rep
        }
        Command::Search {
            n,
            m,
            r,
            up_to_iso,
            top_k,
        } => {
            let mut rep = Report::new("search")
                .param("n", n)
                .param("m", m)
                .param("r", r)
                .param("up_to_iso", up_to_iso)
                .param("top_k", top_k);
            let s = maximize_entropy(n, m, r, up_to_iso, top_k)?;
            rep.csv = s.to_csv();
            search_notes(&mut rep, &s);
            rep.json = to_json(&s);
            rep
        }
        Command::Conjecture1 { n, m, r } => {
            let mut rep = Report::new("conjecture1").param("n", n).param("m", m).param("r", r);
            let s = check_conjecture1(n, m, r)?;
            rep.csv = s.to_csv();
            search_notes(&mut rep, &s);
            for c in &s.counterexamples {
                rep.note("counterexample", c);
            }
            rep.json = to_json(&s);
            rep
        }
        Command::Conjecture2 { r, n_min, n_max } => {
            let mut rep = Report::new("conjecture2")
                .param("r", r)
                .param("n_min", n_min)
                .param("n_max", n_max);
            let t = check_circular_conjecture(r, n_min, n_max)?;
            rep.csv = t.to_csv();
            rep.note("min_residual", t.min_residual.map(sig6).unwrap_or_default());
            rep.json = to_json(&t);
            rep
        }
        Command::CycleVsAll { n } => {
            let mut rep = Report::new("cycle-vs-all").param("n", n);
            let c = compare_cycle_vs_all(n)?;
            let mut csv = String::from("name,canonical_key,entropy\n");
            let cycle_key = crate::hypergraph::canonical_form(&Hypergraph::cycle(n)?)?;
            let _ = writeln!(csv, "cycle,{cycle_key},{}", sig6(c.cycle_entropy));
            for e in &c.examples {
                let _ = writeln!(csv, "{},{},{}", e.name, e.canonical_key, sig6(e.entropy));
            }
            for k in &c.maximizer_keys {
                let _ = writeln!(csv, "class-maximizer,{k},{}", sig6(c.class_max_entropy));
            }
            rep.csv = csv;
            rep.note("gap", sig6(c.gap));
            rep.note("cycle_is_maximizer", c.cycle_is_maximizer);
            rep.note("verdict", c.verdict.as_str());
            rep.json = to_json(&c);
            rep
        }
        Command::Gen { .. } => unreachable!("handled before execute"),
    };
    Ok((report, code))
}

fn exit_code(e: &Error) -> i32 {
    if e.is_cap() {
        EXIT_CAP
    } else {
        EXIT_INPUT
    }
}

fn emit(text: &str, path: Option<&PathBuf>, out: &mut dyn Write) -> Result<()> {
    match path {
        Some(p) => std::fs::write(p, text).map_err(|e| Error::Io(format!("{}: {e}", p.display()))),
        None => out.write_all(text.as_bytes()).map_err(Error::from),
    }
}

/// Parses `args` (program name first), runs the command, and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if code == EXIT_OK {
                out.write_all(rendered.as_bytes())
            } else {
                err.write_all(rendered.as_bytes())
            };
            return code;
        }
    };

    let Cli {
        command,
        output,
        output_path,
        threads,
    } = cli;
    let work = move |out: &mut dyn Write, err: &mut dyn Write| -> Result<i32> {
        if let Command::Gen { kind, n, r, out: dest } = &command {
            let h = generate(*kind, Some(*n), *r)?;
            let text = match output {
                OutputFormat::Json => serde_json::to_string(&h).expect("hypergraph serializes") + "\n",
                _ => h.to_text(),
            };
            emit(&text, dest.as_ref().or(output_path.as_ref()), out)?;
            return Ok(EXIT_OK);
        }
        let (report, code) = execute(command, err)?;
        emit(&report.render(output), output_path.as_ref(), out)?;
        Ok(code)
    };

    let result = match threads {
        Some(t) => match rayon::ThreadPoolBuilder::new().num_threads(t).build() {
            Ok(pool) => {
                let (mut buf_out, mut buf_err) = (Vec::new(), Vec::new());
                let r = pool.install(|| work(&mut buf_out, &mut buf_err));
                let _ = out.write_all(&buf_out);
                let _ = err.write_all(&buf_err);
                r
            }
            Err(e) => Err(Error::InvalidParameter(format!("thread pool: {e}"))),
        },
        None => work(out, err),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}
