//! `satlab`: construct, count, check, search, simulate and verify.
//!
//! Data goes to standard output (or `-o`), diagnostics to standard error.
//! Exit codes: 0 success, 1 a checked property failed, 2 usage error,
//! 3 I/O, parse or data error.

mod input;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use satlab::bounds::{formula, Formula, FormulaValue};
use satlab::constructions::{make, FamilySpec};
use satlab::count::{
    codegree_sum, count_cliques, count_cycles, count_k4_minus, count_kab, count_stars, BipartitePattern,
};
use satlab::graph6::to_graph6;
use satlab::pattern::Pattern;
use satlab::process::{run_ffree_process, CountStats, ProcessTrace};
use satlab::saturation::{is_h_saturated, is_ks_saturated, SaturationReport};
use satlab::search::{
    brute_force_labeled, min_count_over_saturated, min_count_over_stream, min_count_shard, SatRecord, SearchOptions,
    Shard, ShardResult, DEFAULT_EXTREMAL_CAP,
};
use satlab::verify::{reports_at, sort_reports, Suite};
use satlab::{Error, Graph};
use serde::Serialize;

use crate::input::{read_text, GraphSource};
use crate::output::Sink;

/// An error with its exit code.
#[derive(Debug)]
pub struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    pub fn usage(message: impl Into<String>) -> Failure {
        Failure { code: 2, message: message.into() }
    }

    pub fn io(message: impl Into<String>) -> Failure {
        Failure { code: 3, message: message.into() }
    }

    pub fn data(message: impl Into<String>) -> Failure {
        Failure { code: 3, message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        let code = match e {
            Error::Input(_) | Error::Capacity { .. } | Error::Precondition(_) => 2,
            Error::Parse { .. } | Error::Overflow(_) | Error::EmptyDomain(_) => 3,
        };
        Failure { code, message: e.to_string() }
    }
}

#[derive(Parser, Debug)]
#[command(name = "satlab", version, about = "Saturated graphs: construction, counting, search and bound checks")]
struct Cli {
    /// Worker threads (default: all cores)
    #[arg(long, global = true, env = "SATLAB_THREADS")]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a named graph and print it
    Construct {
        /// ehm, star, cycle, complete, complete_bipartite, empty, petersen, hoffman_singleton
        #[arg(long)]
        family: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        s: Option<usize>,
        #[arg(long)]
        a: Option<usize>,
        #[arg(long)]
        b: Option<usize>,
        /// Add K copies of vertex V, each with V's neighborhood: "V:K"
        #[arg(long)]
        duplicate: Option<String>,
        #[arg(long, value_enum, default_value_t = GraphFormat::Graph6)]
        format: GraphFormat,
        #[arg(short = 'o', long)]
        output: Option<PathBuf>,
    },
    /// Count copies of a pattern in each input graph
    Count {
        #[arg(long, value_enum)]
        pattern: CountKind,
        #[arg(long)]
        t: Option<usize>,
        #[arg(long)]
        a: Option<usize>,
        #[arg(long)]
        b: Option<usize>,
        #[arg(long)]
        r: Option<usize>,
        /// Pattern for `embed`: k_s, k_a_b, c_r or g6:<graph6>
        #[arg(long)]
        f: Option<Pattern>,
        #[command(flatten)]
        source: GraphSource,
        #[arg(short = 'o', long)]
        output: Option<PathBuf>,
    },
    /// Report F-freeness and F-saturation of each input graph (exit 1 if any is not saturated)
    Check {
        #[arg(long, value_enum)]
        sat: SatKind,
        /// Clique size for `--sat ks`
        #[arg(long)]
        s: Option<usize>,
        /// Pattern for `--sat pattern`
        #[arg(long)]
        f: Option<Pattern>,
        #[command(flatten)]
        source: GraphSource,
        #[arg(short = 'o', long)]
        output: Option<PathBuf>,
    },
    /// Exact minimum number of copies of H over F-saturated graphs on n vertices
    Search {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        h: Pattern,
        #[arg(long)]
        f: Pattern,
        /// Only part i of k of the search tree: "i/k"
        #[arg(long)]
        shard: Option<String>,
        #[arg(long, default_value_t = DEFAULT_EXTREMAL_CAP)]
        cap: usize,
        /// Scan all labeled graphs instead (n <= 7)
        #[arg(long, conflicts_with_all = ["shard", "input"])]
        brute: bool,
        /// Minimize over the graphs of this graph6 file instead of generating them
        #[arg(short = 'i', long, conflicts_with = "shard")]
        input: Option<PathBuf>,
        #[arg(short = 'o', long)]
        output: Option<PathBuf>,
    },
    /// Merge search records of disjoint shards
    Merge {
        #[arg(required = true)]
        files: Vec<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_EXTREMAL_CAP)]
        cap: usize,
        #[arg(short = 'o', long)]
        output: Option<PathBuf>,
    },
    /// Run the random F-free process (exit 1 if an output is not saturated)
    Process {
        #[arg(long)]
        n: usize,
        /// Forbid K_s
        #[arg(long, conflicts_with = "f")]
        s: Option<usize>,
        /// Forbid a general pattern
        #[arg(long)]
        f: Option<Pattern>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        trials: u64,
        /// Pattern whose copies are counted in each output
        #[arg(long)]
        count: Option<Pattern>,
        /// Write every trace as a JSON line to this file
        #[arg(long)]
        trace: Option<PathBuf>,
        #[arg(short = 'o', long)]
        output: Option<PathBuf>,
    },
    /// Run an inequality suite over all K_s-saturated graphs (exit 1 on a violated asserted bound)
    Verify {
        #[arg(long, value_enum)]
        suite: SuiteArg,
        #[arg(long, default_value_t = 7)]
        n_max: usize,
        /// Clique sizes, comma separated
        #[arg(long, value_delimiter = ',', default_values_t = vec![3, 4, 5])]
        s: Vec<usize>,
        #[arg(long, value_enum, default_value_t = ReportFormat::Csv)]
        format: ReportFormat,
        #[arg(short = 'o', long)]
        output: Option<PathBuf>,
    },
    /// Evaluate a closed form
    Formula {
        /// ehm_edges, cl_kr, thm12_k12, thm11_lower, ehm_k22, prop21_rhs
        #[arg(long)]
        name: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        s: Option<usize>,
        #[arg(long)]
        r: Option<usize>,
        #[arg(long)]
        t: Option<usize>,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum GraphFormat {
    Graph6,
    Json,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum ReportFormat {
    Csv,
    Json,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum CountKind {
    Star,
    Kab,
    Clique,
    Cycle,
    K4minus,
    Codegree,
    Embed,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum SatKind {
    Ks,
    Pattern,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum SuiteArg {
    Kkko,
    K4minus,
    Prop21,
    Hypergraph,
    Formulas,
    All,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Suite {
        match s {
            SuiteArg::Kkko => Suite::Kkko,
            SuiteArg::K4minus => Suite::K4minus,
            SuiteArg::Prop21 => Suite::Prop21,
            SuiteArg::Hypergraph => Suite::Hypergraph,
            SuiteArg::Formulas => Suite::Formulas,
            SuiteArg::All => Suite::All,
        }
    }
}

fn need<T>(v: Option<T>, flag: &str, what: &str) -> Result<T, Failure> {
    v.ok_or_else(|| Failure::usage(format!("{what} requires --{flag}")))
}

#[derive(Serialize)]
struct GraphJson {
    graph: String,
    n: usize,
    edges: usize,
}

fn construct(
    spec: FamilySpec,
    duplicate: Option<&str>,
    format: GraphFormat,
    output: Option<&PathBuf>,
) -> Result<u8, Failure> {
    let mut g = make(spec)?;
    if let Some(d) = duplicate {
        let (v, k) = d
            .split_once(':')
            .and_then(|(v, k)| Some((v.parse().ok()?, k.parse().ok()?)))
            .ok_or_else(|| Failure::usage(format!("--duplicate expects V:K, got '{d}'")))?;
        g = g.duplicate_vertex(v, k)?;
    }
    let mut out = Sink::open(output)?;
    match format {
        GraphFormat::Graph6 => out.line(&to_graph6(&g))?,
        GraphFormat::Json => out.json(&GraphJson {
            graph: to_graph6(&g),
            n: g.n(),
            edges: g.edge_count(),
        })?,
    }
    out.finish()?;
    Ok(0)
}

#[derive(Serialize)]
struct CountJson {
    graph: String,
    pattern: String,
    count: u128,
}

fn count(kind: CountKind, t: Option<usize>, a: Option<usize>, b: Option<usize>, r: Option<usize>, f: Option<Pattern>, g: &Graph) -> Result<(String, u128), Failure> {
    let (label, value) = match kind {
        CountKind::Star => {
            let t = need(t, "t", "star")?;
            (format!("k_1_{t}"), count_stars(g, t)?)
        }
        CountKind::Kab => {
            let p = BipartitePattern::new(need(a, "a", "kab")?, need(b, "b", "kab")?)?;
            (format!("k_{}_{}", p.a(), p.b()), count_kab(g, p)?)
        }
        CountKind::Clique => {
            let r = need(r, "r", "clique")?;
            (format!("k_{r}"), count_cliques(g, r)?)
        }
        CountKind::Cycle => {
            let r = need(r, "r", "cycle")?;
            (format!("c_{r}"), count_cycles(g, r)?)
        }
        CountKind::K4minus => ("k4minus".to_string(), count_k4_minus(g)?),
        CountKind::Codegree => {
            let t = need(t, "t", "codegree")?;
            (format!("codegree_{t}"), codegree_sum(g, t)?)
        }
        CountKind::Embed => {
            let p = need(f, "f", "embed")?;
            let pg = p.to_pattern_graph()?;
            (p.to_string(), satlab::count::count_embeddings(g, &pg)?)
        }
    };
    Ok((label, value.value()))
}

#[derive(Serialize)]
struct CheckJson<'a> {
    graph: String,
    f: String,
    #[serde(flatten)]
    report: &'a SaturationReport,
}

fn parse_shard(text: &str) -> Result<Shard, Failure> {
    let (i, k) = text
        .split_once('/')
        .and_then(|(i, k)| Some((i.trim().parse().ok()?, k.trim().parse().ok()?)))
        .ok_or_else(|| Failure::usage(format!("--shard expects i/k, got '{text}'")))?;
    Ok(Shard::new(i, k)?)
}

/// Unsharded search split across the thread pool; the merge gives the same
/// record as a single pass.
fn parallel_search(n: usize, h: &Pattern, f: &Pattern, cap: usize) -> Result<SatRecord, Failure> {
    let total = rayon::current_num_threads();
    if total <= 1 {
        return Ok(min_count_over_saturated(n, h, f, SearchOptions { cap, shard: None })?);
    }
    let parts: Vec<ShardResult> = (0..total)
        .into_par_iter()
        .map(|index| {
            let opts = SearchOptions {
                cap,
                shard: Some(Shard::new(index, total)?),
            };
            min_count_shard(n, h, f, opts)
        })
        .collect::<Result<_, Error>>()?;
    merge_results(parts, cap)
}

fn merge_results(parts: Vec<ShardResult>, cap: usize) -> Result<SatRecord, Failure> {
    let mut merged: Option<SatRecord> = None;
    let mut extra = 0;
    for part in parts {
        match part {
            ShardResult::Found(r) => {
                merged = Some(match merged {
                    None => r,
                    Some(m) => m.merge(r, cap)?,
                })
            }
            ShardResult::Empty { searched, .. } => extra += searched,
        }
    }
    let mut rec = merged.ok_or_else(|| Failure::data("no shard found a saturated graph"))?;
    rec.searched += extra;
    Ok(rec)
}

#[derive(Serialize)]
struct ProcessJson {
    n: usize,
    f: Pattern,
    seed: u64,
    trials: u64,
    count_pattern: Option<Pattern>,
    stats: Option<CountStats>,
    saturated: u64,
    edges: CountStats,
}

#[allow(clippy::too_many_arguments)]
fn process(
    n: usize,
    f: Pattern,
    seed: u64,
    trials: u64,
    h: Option<Pattern>,
    trace: Option<&PathBuf>,
    output: Option<&PathBuf>,
) -> Result<u8, Failure> {
    if trials == 0 {
        return Err(Failure::usage("--trials must be at least 1"));
    }
    let fg = match &f {
        Pattern::Clique(_) => None,
        other => Some(other.to_pattern_graph()?),
    };
    struct Trial {
        trace: ProcessTrace,
        count: Option<u128>,
        saturated: bool,
    }
    let runs: Vec<Trial> = (0..trials)
        .into_par_iter()
        .map(|i| -> Result<Trial, Error> {
            let trace = run_ffree_process(n, &f, seed.wrapping_add(i))?;
            let saturated = match (&f, &fg) {
                (Pattern::Clique(s), _) => is_ks_saturated(&trace.result, *s).is_saturated,
                (_, Some(p)) => is_h_saturated(&trace.result, p)?.is_saturated,
                _ => unreachable!(),
            };
            let count = h.as_ref().map(|h| h.count(&trace.result)).transpose()?.map(|c| c.value());
            Ok(Trial { trace, count, saturated })
        })
        .collect::<Result<_, Error>>()?;
    if let Some(path) = trace {
        let mut sink = Sink::open(Some(path))?;
        for r in &runs {
            sink.json(&r.trace)?;
        }
        sink.finish()?;
    }
    let counts: Vec<u128> = runs.iter().filter_map(|r| r.count).collect();
    let edges: Vec<u128> = runs.iter().map(|r| r.trace.result.edge_count() as u128).collect();
    let saturated = runs.iter().filter(|r| r.saturated).count() as u64;
    let report = ProcessJson {
        n,
        f,
        seed,
        trials,
        stats: if h.is_some() { Some(CountStats::from_samples(&counts)?) } else { None },
        count_pattern: h,
        saturated,
        edges: CountStats::from_samples(&edges)?,
    };
    let mut out = Sink::open(output)?;
    out.json(&report)?;
    out.finish()?;
    if saturated < trials {
        eprintln!("satlab: {} of {trials} outputs are not saturated", trials - saturated);
        return Ok(1);
    }
    Ok(0)
}

fn verify(suite: Suite, n_max: usize, s_values: &[usize], format: ReportFormat, output: Option<&PathBuf>) -> Result<u8, Failure> {
    let jobs: Vec<(usize, usize)> = s_values
        .iter()
        .flat_map(|&s| (s..=n_max).map(move |n| (n, s)))
        .collect();
    if jobs.is_empty() {
        return Err(Failure::usage("no (n, s) pair with s <= n <= n-max"));
    }
    let mut reports: Vec<_> = jobs
        .into_par_iter()
        .map(|(n, s)| reports_at(suite, n, s))
        .collect::<Result<Vec<_>, Error>>()?
        .into_iter()
        .flatten()
        .collect();
    sort_reports(&mut reports);
    let mut out = Sink::open(output)?;
    match format {
        ReportFormat::Csv => out.csv(&reports)?,
        ReportFormat::Json => {
            for r in &reports {
                out.json(r)?;
            }
        }
    }
    out.finish()?;
    let violated = reports.iter().filter(|r| r.violated()).count();
    let asserted = reports.iter().filter(|r| r.asserted).count();
    eprintln!("satlab: {} reports, {asserted} asserted, {violated} violated", reports.len());
    Ok(if violated > 0 { 1 } else { 0 })
}

#[derive(Serialize)]
struct FormulaJson {
    formula: Formula,
    value: FormulaValue,
}

fn run(cli: Cli) -> Result<u8, Failure> {
    match cli.command {
        Command::Construct {
            family,
            n,
            s,
            a,
            b,
            duplicate,
            format,
            output,
        } => {
            let spec = if family.contains(':') {
                input::parse_family(&family)?
            } else {
                FamilySpec::from_name(&family, n, s, a, b)?
            };
            construct(spec, duplicate.as_deref(), format, output.as_ref())
        }
        Command::Count {
            pattern,
            t,
            a,
            b,
            r,
            f,
            source,
            output,
        } => {
            // Parameter errors surface before any input is read.
            count(pattern, t, a, b, r, f.clone(), &Graph::new(0)?)?;
            let graphs = source.graphs()?;
            let mut out = Sink::open(output.as_ref())?;
            for g in &graphs {
                let (label, value) = count(pattern, t, a, b, r, f.clone(), g)?;
                out.json(&CountJson {
                    graph: to_graph6(g),
                    pattern: label,
                    count: value,
                })?;
            }
            out.finish()?;
            Ok(0)
        }
        Command::Check {
            sat,
            s,
            f,
            source,
            output,
        } => {
            let pattern = match sat {
                SatKind::Ks => Pattern::Clique(need(s, "s", "--sat ks")?),
                SatKind::Pattern => need(f, "f", "--sat pattern")?,
            };
            let pg = match &pattern {
                Pattern::Clique(_) => None,
                other => Some(other.to_pattern_graph()?),
            };
            let graphs = source.graphs()?;
            let mut out = Sink::open(output.as_ref())?;
            let mut all = true;
            for g in &graphs {
                let report = match (&pattern, &pg) {
                    (Pattern::Clique(s), _) => is_ks_saturated(g, *s),
                    (_, Some(p)) => is_h_saturated(g, p)?,
                    _ => unreachable!(),
                };
                all &= report.is_saturated;
                out.json(&CheckJson {
                    graph: to_graph6(g),
                    f: pattern.to_string(),
                    report: &report,
                })?;
            }
            out.finish()?;
            Ok(if all { 0 } else { 1 })
        }
        Command::Search {
            n,
            h,
            f,
            shard,
            cap,
            brute,
            input,
            output,
        } => {
            let mut out = Sink::open(output.as_ref())?;
            if let Some(text) = shard {
                let opts = SearchOptions {
                    cap,
                    shard: Some(parse_shard(&text)?),
                };
                out.json(&min_count_shard(n, &h, &f, opts)?)?;
            } else if brute {
                let mut rec = brute_force_labeled(n, &h, &f)?;
                let before = rec.extremal.len();
                rec.extremal.truncate(cap);
                rec.truncated |= rec.extremal.len() < before;
                out.json(&rec)?;
            } else if let Some(path) = input {
                let graphs = satlab::graph6::parse_lines(&read_text(&path)?)?;
                out.json(&min_count_over_stream(n, graphs, &h, &f, cap)?)?;
            } else {
                out.json(&parallel_search(n, &h, &f, cap)?)?;
            }
            out.finish()?;
            Ok(0)
        }
        Command::Merge { files, cap, output } => {
            let mut parts = Vec::new();
            for path in &files {
                let text = read_text(path)?;
                let part: ShardResult = serde_json::from_str(text.trim())
                    .map_err(|e| Failure::data(format!("{}: {e}", path.display())))?;
                parts.push(part);
            }
            let rec = merge_results(parts, cap)?;
            let mut out = Sink::open(output.as_ref())?;
            out.json(&rec)?;
            out.finish()?;
            Ok(0)
        }
        Command::Process {
            n,
            s,
            f,
            seed,
            trials,
            count,
            trace,
            output,
        } => {
            let forbidden = match (s, f) {
                (Some(s), None) => Pattern::Clique(s),
                (None, Some(f)) => f,
                _ => return Err(Failure::usage("process requires exactly one of --s and --f")),
            };
            process(n, forbidden, seed, trials, count, trace.as_ref(), output.as_ref())
        }
        Command::Verify {
            suite,
            n_max,
            s,
            format,
            output,
        } => verify(suite.into(), n_max, &s, format, output.as_ref()),
        Command::Formula { name, n, s, r, t } => {
            let f = Formula::from_name(&name, n, s, r, t)?;
            let value = formula(f)?;
            let mut out = Sink::open(None)?;
            out.json(&FormulaJson { formula: f, value })?;
            out.finish()?;
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(k) = cli.threads {
        if k == 0 {
            eprintln!("satlab: --threads must be at least 1");
            return ExitCode::from(2);
        }
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(k).build_global() {
            eprintln!("satlab: thread pool: {e}");
            return ExitCode::from(3);
        }
    }
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("satlab: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
