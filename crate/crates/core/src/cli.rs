//! Command-line front end.
//!
//! Exit codes: 0 success, 1 a verification claim failed, 2 usage, parse or
//! configuration error.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use thiserror::Error;

use crate::bitset::VertexSet;
use crate::deficiency::{beta0_star_bruteforce_bounded, beta0_star_fast, DEFAULT_ORACLE_BOUND, ORACLE_HARD_LIMIT};
use crate::format::{
    parse_edge_list, parse_graph6, parse_labeled_edge_list, write_dot, write_edge_list, write_graph6, DotLabels,
    FormatError, LabelTable,
};
use crate::graph::{EdgeSet, Graph};
use crate::harness::{
    run_campaign_timed, verify_family_member, CampaignConfig, CampaignMode, CampaignReport, HarnessError, Verdict,
    DEFAULT_STRUCTURE_BOUND, REPORT_SCHEMA_VERSION,
};
use crate::operators::{
    complete, counterexample_graph, cycle, erdos_renyi, path, splitting_graph, star, FamilySpec, OperatorError,
};
use crate::solvers::{max_independent_set, maximum_matching, min_edge_cover, min_vertex_cover, SolveError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{context}: {source}")]
    Format { context: String, source: FormatError },
    #[error(transparent)]
    Operator(#[from] OperatorError),
    #[error(transparent)]
    Solve(#[from] SolveError),
    #[error(transparent)]
    Harness(#[from] HarnessError),
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
}

impl From<crate::deficiency::DeficiencyError> for CliError {
    fn from(e: crate::deficiency::DeficiencyError) -> Self {
        Self::Harness(e.into())
    }
}

impl From<crate::graph::GraphError> for CliError {
    fn from(e: crate::graph::GraphError) -> Self {
        Self::Harness(e.into())
    }
}

#[derive(Debug, Parser)]
#[command(name = "splitgraph", version, about = "Splitting graphs, exact invariants and claim checks")]
pub struct Cli {
    /// Print progress and timing to stderr.
    #[arg(short, long, global = true)]
    pub verbose: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build S(G) and print it.
    Split {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value_t = OutputFormat::Graph6)]
        format: OutputFormat,
    },
    /// Exact invariants of G and the deficiency β₀*.
    Invariants {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value_t = OutputFormat::Table)]
        format: OutputFormat,
        /// Largest order for which β₀* comes from exhaustive search.
        #[arg(long, default_value_t = DEFAULT_ORACLE_BOUND)]
        oracle_bound: usize,
    },
    /// Run a verification campaign and print its report.
    Verify(VerifyArgs),
    /// The pendant family G_k for every k in n..=2n-2.
    Family {
        n: usize,
        #[arg(long, value_enum, default_value_t = OutputFormat::Table)]
        format: OutputFormat,
    },
    /// Convert between graph6, edge-list and DOT.
    Convert {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum)]
        format: OutputFormat,
        /// Accept arbitrary vertex tokens in an edge-list input.
        #[arg(long)]
        labels: bool,
        /// Write the token table of a labeled edge list to this JSON file.
        #[arg(long, requires = "labels")]
        label_table: Option<PathBuf>,
    },
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct InputArgs {
    /// Inline graph6 string.
    #[arg(long)]
    pub graph6: Option<String>,
    /// Generator: complete:N, star:K, path:N, cycle:N, empty:N, gk:N,K or
    /// er:N,P (with --seed).
    #[arg(long)]
    pub gen: Option<String>,
    /// File of one graph (graph6 or edge list); `-` reads stdin.
    #[arg(long)]
    pub input: Option<String>,
    #[arg(long, value_enum, default_value_t = InputFormat::Auto)]
    pub input_format: InputFormat,
    /// Seed for random generators.
    #[arg(long)]
    pub seed: Option<u64>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// All connected labeled graphs of order 2..=N.
    #[arg(long, value_name = "N", group = "mode")]
    pub exhaustive: Option<usize>,
    /// Random G(n, p) samples; needs --n, --p, --samples and --seed.
    #[arg(long, group = "mode", requires_all = ["n", "p", "seed"])]
    pub random: bool,
    /// The pendant family for orders 2..=N.
    #[arg(long, value_name = "N", group = "mode")]
    pub family: Option<usize>,
    /// One graph6 graph per line; `-` is not accepted.
    #[arg(long, value_name = "PATH", group = "mode")]
    pub file: Option<PathBuf>,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub p: Option<f64>,
    #[arg(long, default_value_t = 100)]
    pub samples: usize,
    #[arg(long)]
    pub seed: Option<u64>,
    /// Worker threads.
    #[arg(long, default_value_t = default_jobs())]
    pub jobs: usize,
    #[arg(long, default_value_t = DEFAULT_ORACLE_BOUND)]
    pub oracle_bound: usize,
    #[arg(long, default_value_t = DEFAULT_STRUCTURE_BOUND)]
    pub structure_bound: usize,
    /// Counterexamples kept per audited claim.
    #[arg(long, default_value_t = 20)]
    pub max_examples: usize,
    /// Allow exhaustive order 8 (about 2.5 * 10^8 graphs).
    #[arg(long)]
    pub long_run: bool,
    /// Include elapsed time in the report.
    #[arg(long)]
    pub timing: bool,
    #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
    pub format: OutputFormat,
}

fn default_jobs() -> usize {
    std::thread::available_parallelism().map(usize::from).unwrap_or(1)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Table,
    Json,
    Graph6,
    EdgeList,
    Dot,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum InputFormat {
    /// Edge list when the first significant line has two fields.
    Auto,
    Graph6,
    EdgeList,
}

/// Parses `name:params` generator specs.
pub fn generate(spec: &str, seed: Option<u64>) -> Result<Graph, CliError> {
    let usage = || CliError::Usage(format!("bad generator `{spec}`"));
    let (name, params) = spec.split_once(':').ok_or_else(usage)?;
    let ints = |expected: usize| -> Result<Vec<usize>, CliError> {
        let v: Vec<usize> =
            params.split(',').map(|p| p.trim().parse()).collect::<Result<_, _>>().map_err(|_| usage())?;
        if v.len() == expected {
            Ok(v)
        } else {
            Err(usage())
        }
    };
    let checked = |n: usize| {
        if n > crate::graph::MAX_ORDER {
            Err(CliError::Usage(format!("order {n} exceeds {}", crate::graph::MAX_ORDER)))
        } else {
            Ok(n)
        }
    };
    Ok(match name {
        "complete" => complete(checked(ints(1)?[0])?),
        "star" => star(checked(ints(1)?[0])?),
        "path" => path(checked(ints(1)?[0])?),
        "cycle" => cycle(checked(ints(1)?[0])?)?,
        "empty" => Graph::empty(checked(ints(1)?[0])?)?,
        "gk" => {
            let v = ints(2)?;
            counterexample_graph(FamilySpec::new(v[0], v[1])?).graph
        }
        "er" => {
            let (n, p) = params.split_once(',').ok_or_else(usage)?;
            let n: usize = checked(n.trim().parse().map_err(|_| usage())?)?;
            let p: f64 = p.trim().parse().map_err(|_| usage())?;
            let seed = seed.ok_or_else(|| CliError::Usage("generator `er` requires --seed".into()))?;
            erdos_renyi(n, p, seed)?
        }
        _ => return Err(usage()),
    })
}

fn read_source(path: &str) -> Result<String, CliError> {
    let io = |source| CliError::Io { path: path.to_owned(), source };
    if path == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(io)?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(io)
    }
}

fn looks_like_edge_list(text: &str) -> bool {
    text.lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#') && !l.starts_with(">>"))
        .is_some_and(|l| l.split_whitespace().count() == 2)
}

/// The graph named by the input flags, with a label table when labeled
/// parsing was requested.
fn load(input: &InputArgs, labeled: bool) -> Result<(Graph, Option<LabelTable>), CliError> {
    let fmt = |context: &str| {
        let context = context.to_owned();
        move |source| CliError::Format { context, source }
    };
    if let Some(s) = &input.graph6 {
        return Ok((parse_graph6(s.trim()).map_err(fmt("--graph6"))?, None));
    }
    if let Some(spec) = &input.gen {
        return Ok((generate(spec, input.seed)?, None));
    }
    let path = input.input.as_deref().expect("clap enforces one input source");
    let text = read_source(path)?;
    let edge_list = match input.input_format {
        InputFormat::Auto => looks_like_edge_list(&text),
        InputFormat::EdgeList => true,
        InputFormat::Graph6 => false,
    };
    if labeled {
        if !edge_list {
            return Err(CliError::Usage("--labels needs an edge-list input".into()));
        }
        let (g, table) = parse_labeled_edge_list(&text).map_err(fmt(path))?;
        return Ok((g, Some(table)));
    }
    if edge_list {
        return Ok((parse_edge_list(&text).map_err(fmt(path))?, None));
    }
    let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
    let first = lines.next().ok_or_else(|| CliError::Usage(format!("{path}: no graph found")))?;
    if lines.next().is_some() {
        return Err(CliError::Usage(format!("{path}: expected a single graph6 line")));
    }
    Ok((parse_graph6(first).map_err(fmt(path))?, None))
}

fn render_graph(g: &Graph, format: OutputFormat, dot: DotLabels) -> Result<String, CliError> {
    Ok(match format {
        OutputFormat::Graph6 => write_graph6(g) + "\n",
        OutputFormat::EdgeList => write_edge_list(g),
        OutputFormat::Dot => write_dot(g, dot),
        OutputFormat::Json => {
            #[derive(Serialize)]
            struct GraphJson<'a> {
                schema_version: &'a str,
                n: usize,
                edges: EdgeSet,
                graph6: String,
            }
            let doc = GraphJson {
                schema_version: REPORT_SCHEMA_VERSION,
                n: g.order(),
                edges: g.edge_set(),
                graph6: write_graph6(g),
            };
            serde_json::to_string_pretty(&doc).expect("serializes") + "\n"
        }
        OutputFormat::Table => {
            let mut out = format!("n {}\nm {}\n", g.order(), g.edge_count());
            for (u, v) in g.edges() {
                let _ = writeln!(out, "{u:>5} {v:>5}");
            }
            out
        }
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct Invariant<W> {
    pub value: usize,
    pub witness: W,
}

#[derive(Debug, Clone, Serialize)]
pub struct DeficiencyReport {
    pub value: i64,
    /// Present when the exhaustive oracle ran.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<VertexSet>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub neighborhood: Option<VertexSet>,
    pub method: &'static str,
}

#[derive(Debug, Clone, Serialize)]
pub struct InvariantReport {
    pub schema_version: &'static str,
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    pub alpha0: Invariant<VertexSet>,
    pub beta0: Invariant<VertexSet>,
    /// Absent when `G` has an isolated vertex.
    pub alpha1: Option<Invariant<EdgeSet>>,
    pub beta1: Invariant<EdgeSet>,
    pub beta0_star: DeficiencyReport,
    pub alpha0_plus_beta0: usize,
    pub alpha1_plus_beta1: Option<usize>,
}

pub fn invariant_report(g: &Graph, oracle_bound: usize) -> Result<InvariantReport, CliError> {
    if oracle_bound > ORACLE_HARD_LIMIT {
        return Err(CliError::Usage(format!("--oracle-bound may not exceed {ORACLE_HARD_LIMIT}")));
    }
    let mis = max_independent_set(g)?;
    let cover = min_vertex_cover(g)?;
    let matching = maximum_matching(g)?;
    let edge_cover = if g.has_isolated_vertex() { None } else { Some(min_edge_cover(g)?) };
    let beta0_star = if g.order() <= oracle_bound {
        let c = beta0_star_bruteforce_bounded(g, oracle_bound)?;
        DeficiencyReport { value: c.value, witness: Some(c.s), neighborhood: Some(c.n_of_s), method: "exhaustive" }
    } else {
        DeficiencyReport { value: beta0_star_fast(g)?, witness: None, neighborhood: None, method: "matching" }
    };
    Ok(InvariantReport {
        schema_version: REPORT_SCHEMA_VERSION,
        graph6: write_graph6(g),
        n: g.order(),
        m: g.edge_count(),
        alpha0_plus_beta0: cover.size + mis.size,
        alpha1_plus_beta1: edge_cover.as_ref().map(|c| c.size + matching.size),
        alpha0: Invariant { value: cover.size, witness: cover.witness },
        beta0: Invariant { value: mis.size, witness: mis.witness },
        alpha1: edge_cover.map(|c| Invariant { value: c.size, witness: c.witness }),
        beta1: Invariant { value: matching.size, witness: matching.witness },
        beta0_star,
    })
}

fn edges_text(e: &EdgeSet) -> String {
    let parts: Vec<String> = e.iter().map(|(u, v)| format!("{u}-{v}")).collect();
    format!("{{{}}}", parts.join(","))
}

fn invariant_table(r: &InvariantReport) -> String {
    let mut rows: Vec<(&str, String, String)> = vec![
        ("n", r.n.to_string(), String::new()),
        ("m", r.m.to_string(), String::new()),
        ("alpha0", r.alpha0.value.to_string(), r.alpha0.witness.to_string()),
        ("beta0", r.beta0.value.to_string(), r.beta0.witness.to_string()),
    ];
    match &r.alpha1 {
        Some(a) => rows.push(("alpha1", a.value.to_string(), edges_text(&a.witness))),
        None => rows.push(("alpha1", "-".into(), "isolated vertex".into())),
    }
    rows.push(("beta1", r.beta1.value.to_string(), edges_text(&r.beta1.witness)));
    let witness = match (&r.beta0_star.witness, &r.beta0_star.neighborhood) {
        (Some(s), Some(ns)) => format!("S={s} N(S)={ns}"),
        _ => format!("({})", r.beta0_star.method),
    };
    rows.push(("beta0*", r.beta0_star.value.to_string(), witness));
    rows.push(("alpha0+beta0", r.alpha0_plus_beta0.to_string(), String::new()));
    rows.push(("alpha1+beta1", r.alpha1_plus_beta1.map_or("-".into(), |v| v.to_string()), String::new()));
    let mut out = format!("graph6  {}\n", r.graph6);
    for (name, value, witness) in rows {
        let _ = writeln!(out, "{:<13}{:>6}  {}", name, value, witness).map(|_| ());
    }
    out.lines().map(|l| l.trim_end().to_owned() + "\n").collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct FamilyTableRow {
    pub k: usize,
    pub graph6: String,
    pub beta0_star: i64,
    pub beta0_split: usize,
    pub alpha0_split: usize,
    pub realized: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct FamilyTable {
    pub schema_version: &'static str,
    pub n: usize,
    pub rows: Vec<FamilyTableRow>,
}

pub fn family_table(n: usize) -> Result<FamilyTable, CliError> {
    if !(2..=crate::harness::CAMPAIGN_MAX_ORDER).contains(&n) {
        return Err(CliError::Usage(format!("family order must lie in 2..={}", crate::harness::CAMPAIGN_MAX_ORDER)));
    }
    let mut rows = Vec::new();
    for spec in FamilySpec::all_for_order(n)? {
        let o = verify_family_member(&counterexample_graph(spec))?;
        rows.push(FamilyTableRow {
            k: spec.k(),
            beta0_star: o.payload.beta0_star.unwrap_or_default(),
            beta0_split: o.payload.beta0_split.unwrap_or_default(),
            alpha0_split: o.payload.alpha0_split.unwrap_or_default(),
            realized: o.verdict == Verdict::Holds,
            graph6: o.graph_id,
        });
    }
    Ok(FamilyTable { schema_version: REPORT_SCHEMA_VERSION, n, rows })
}

fn render_family(t: &FamilyTable) -> String {
    let width = t.rows.iter().map(|r| r.graph6.len()).max().unwrap_or(6).max(6);
    let mut out = format!(
        "{:>4}  {:<width$}  {:>6}  {:>8}  {:>8}  {}\n",
        "k", "graph6", "beta0*", "beta0(S)", "alpha0(S)", "realized"
    );
    for r in &t.rows {
        let _ = writeln!(
            out,
            "{:>4}  {:<width$}  {:>6}  {:>8}  {:>8}  {}",
            r.k,
            r.graph6,
            r.beta0_star,
            r.beta0_split,
            r.alpha0_split,
            if r.realized { "yes" } else { "no" }
        );
    }
    out
}

fn render_report_table(r: &CampaignReport) -> String {
    let mut out = format!("graphs checked {}\n", r.graphs_checked);
    let _ = writeln!(out, "{:<22}{:>10}{:>10}{:>10}  kind", "claim", "holds", "fails", "n/a");
    for (claim, c) in &r.claims {
        let kind = if claim.is_audit() { "audit" } else { "required" };
        let _ = writeln!(out, "{:<22}{:>10}{:>10}{:>10}  {}", claim.as_str(), c.holds, c.fails, c.not_applicable, kind);
    }
    let _ = writeln!(out, "unexpected failures {}", r.failures.len());
    for f in &r.failures {
        let _ = writeln!(out, "  {} {}", f.claim_id, f.graph_id);
    }
    if let Some(ms) = r.elapsed_ms {
        let _ = writeln!(out, "elapsed {ms} ms");
    }
    out
}

fn campaign_config(a: &VerifyArgs) -> Result<CampaignConfig, CliError> {
    let mut config = if let Some(n) = a.exhaustive {
        CampaignConfig::exhaustive(n)
    } else if a.random {
        let n = a.n.expect("clap requires --n");
        let p = a.p.expect("clap requires --p");
        CampaignConfig::random(n, p, a.samples, a.seed.expect("clap requires --seed"))
    } else if let Some(n) = a.family {
        CampaignConfig::family(2, n)
    } else if let Some(path) = &a.file {
        CampaignConfig::file(path.clone())
    } else {
        return Err(CliError::Usage("choose one of --exhaustive, --random, --family or --file".into()));
    };
    config.jobs = a.jobs;
    config.oracle_bound = a.oracle_bound;
    config.structure_bound = a.structure_bound;
    config.max_examples = a.max_examples;
    config.long_run = a.long_run;
    if config.mode != CampaignMode::Random {
        config.seed = a.seed;
    }
    if a.oracle_bound > ORACLE_HARD_LIMIT {
        return Err(CliError::Usage(format!("--oracle-bound may not exceed {ORACLE_HARD_LIMIT}")));
    }
    Ok(config)
}

fn json_line<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("serializes") + "\n"
}

fn execute(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, CliError> {
    let write = |out: &mut dyn Write, s: &str| {
        out.write_all(s.as_bytes()).map_err(|source| CliError::Io { path: "stdout".into(), source })
    };
    match &cli.command {
        Command::Split { input, format } => {
            let (g, _) = load(input, false)?;
            let split = splitting_graph(&g)?;
            let labels = DotLabels::Split { base_order: g.order() };
            write(out, &render_graph(split.graph(), *format, labels)?)?;
        }
        Command::Invariants { input, format, oracle_bound } => {
            let (g, _) = load(input, false)?;
            let report = invariant_report(&g, *oracle_bound)?;
            let text = match format {
                OutputFormat::Table => invariant_table(&report),
                OutputFormat::Json => json_line(&report),
                _ => return Err(CliError::Usage("invariants supports --format table or json".into())),
            };
            write(out, &text)?;
        }
        Command::Verify(args) => {
            let config = campaign_config(args)?;
            let report = run_campaign_timed(&config, args.timing || cli.verbose)?;
            if cli.verbose {
                let _ =
                    writeln!(err, "checked {} graphs in {} ms", report.graphs_checked, report.elapsed_ms.unwrap_or(0));
            }
            let mut report = report;
            if !args.timing {
                report.elapsed_ms = None;
            }
            let text = match args.format {
                OutputFormat::Json => report.to_json() + "\n",
                OutputFormat::Table => render_report_table(&report),
                _ => return Err(CliError::Usage("verify supports --format json or table".into())),
            };
            write(out, &text)?;
            for f in &report.failures {
                let _ = writeln!(err, "claim {} fails on {}", f.claim_id, f.graph_id);
            }
            return Ok(report.exit_code());
        }
        Command::Family { n, format } => {
            let table = family_table(*n)?;
            let text = match format {
                OutputFormat::Table => render_family(&table),
                OutputFormat::Json => json_line(&table),
                _ => return Err(CliError::Usage("family supports --format table or json".into())),
            };
            write(out, &text)?;
            if let Some(r) = table.rows.iter().find(|r| !r.realized) {
                let _ = writeln!(err, "k = {} is not realized: beta0(S(G_k)) = {}", r.k, r.beta0_split);
                return Ok(EXIT_FAILED);
            }
        }
        Command::Convert { input, format, labels, label_table } => {
            let (g, table) = load(input, *labels)?;
            write(out, &render_graph(&g, *format, DotLabels::Plain)?)?;
            if let (Some(path), Some(table)) = (label_table, table) {
                #[derive(Serialize)]
                struct Sidecar<'a> {
                    schema_version: &'a str,
                    labels: Vec<Option<String>>,
                }
                let doc = json_line(&Sidecar { schema_version: REPORT_SCHEMA_VERSION, labels: table.labels });
                std::fs::write(path, doc)
                    .map_err(|source| CliError::Io { path: path.display().to_string(), source })?;
            }
        }
    }
    Ok(EXIT_OK)
}

/// Parses `args` (including the program name) and runs the command.
/// Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ =
                if e.use_stderr() { err.write_all(rendered.as_bytes()) } else { out.write_all(rendered.as_bytes()) };
            return code;
        }
    };
    match execute(&cli, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}
