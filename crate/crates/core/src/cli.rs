//! Command-line front end. All options are validated into a [`Plan`] before
//! any computation starts; output is collected into an [`Outcome`] so the
//! dispatcher can be driven from tests.

use std::fmt::Write as _;
use std::fs::File;
use std::io::{BufRead, BufReader};
use std::path::PathBuf;

use clap::{Parser, ValueEnum};
use num_rational::Ratio;
use serde::Serialize;
use serde_json::{json, Value};

use crate::analysis::{
    lower_half_check, min_degree_certificate, mode_vs_avd, ratio_tail_best,
    tail_nonincreasing_check, universal_vertex_ratio_check, Certificate, CertificateKind,
};
use crate::domination::{
    brute_force_profile, complete_profile, multipartite_profile, DominationProfile, EnumConfig,
    RecurrenceFamily, DEFAULT_CAP,
};
use crate::error::Error;
use crate::experiments::{
    census, exhaustive_labeled, reproduce_table, stream_classify, CensusConfig, CensusReport,
    Predicate, SweepConfig, SweepReport, Table, TableReport, DEFAULT_OFFENDER_CAP,
};
use crate::graph::{FamilySpec, Graph, GRAPH6_MAX_ORDER, MAX_ORDER};
use crate::poly::{analyze_shape, ShapeReport};
use crate::report::{profile_csv, ProfileJson};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CommandKind {
    Compute,
    Family,
    Analyze,
    Tables,
    Census,
    Exhaustive,
    Stream,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyKind {
    Path,
    Cycle,
    #[value(name = "L")]
    L,
    Multipartite,
    Complete,
    /// `K_1` joined to `n` disjoint edges.
    Friendship,
    /// `P_n` with a `K_m` attached to every vertex (`m` from `--parts`, default 1).
    Corona,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Brute,
    Recurrence,
    Closed,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Check {
    Unimodal,
    Logconcave,
    LowerHalf,
    RatioTail,
    MinDegree,
    Tail,
    Universal,
    Avd,
}

impl Check {
    const ALL: [Check; 8] = [
        Check::Unimodal,
        Check::Logconcave,
        Check::LowerHalf,
        Check::RatioTail,
        Check::MinDegree,
        Check::Tail,
        Check::Universal,
        Check::Avd,
    ];
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableArg {
    #[value(name = "t1paths", alias = "paths")]
    T1Paths,
    #[value(name = "t1cycles", alias = "cycles")]
    T1Cycles,
    #[value(name = "t2L", alias = "L")]
    T2L,
}

impl From<TableArg> for Table {
    fn from(t: TableArg) -> Table {
        match t {
            TableArg::T1Paths => Table::Paths,
            TableArg::T1Cycles => Table::Cycles,
            TableArg::T2L => Table::LGraphs,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

fn parse_ratio(s: &str) -> Result<Ratio<u64>, String> {
    let (num, den) = s
        .split_once('/')
        .ok_or_else(|| format!("expected NUM/DEN, got {s:?}"))?;
    let num: u64 = num.trim().parse().map_err(|e| format!("numerator: {e}"))?;
    let den: u64 = den.trim().parse().map_err(|e| format!("denominator: {e}"))?;
    if den == 0 {
        return Err("denominator must be positive".into());
    }
    Ok(Ratio::new(num, den))
}

#[derive(Debug, Parser)]
#[command(name = "dompoly", version, about = "Exact domination polynomials and their shape")]
pub struct Cli {
    #[arg(value_enum)]
    pub command: CommandKind,
    /// Graph in graph6 format.
    #[arg(long)]
    pub g6: Option<String>,
    /// Edge-list file: `n m` then `m` lines `u v`.
    #[arg(long)]
    pub edges: Option<PathBuf>,
    #[arg(long, value_enum)]
    pub kind: Option<FamilyKind>,
    #[arg(long = "n")]
    pub n: Option<usize>,
    #[arg(long, value_delimiter = ',')]
    pub parts: Option<Vec<usize>>,
    #[arg(long, value_enum)]
    pub method: Option<Method>,
    #[arg(long, value_enum, value_delimiter = ',')]
    pub checks: Option<Vec<Check>>,
    #[arg(long, value_enum)]
    pub table: Option<TableArg>,
    /// Edge probability as NUM/DEN.
    #[arg(long = "p", value_parser = parse_ratio)]
    pub p: Option<Ratio<u64>>,
    #[arg(long)]
    pub samples: Option<usize>,
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
    /// Exit with status 1 when violations are found.
    #[arg(long)]
    pub strict: bool,
    #[arg(long)]
    pub threads: Option<usize>,
    /// Largest order accepted by exhaustive enumeration.
    #[arg(long)]
    pub cap: Option<usize>,
    /// graph6 input file for `stream` and batch `analyze`.
    #[arg(long)]
    pub input: Option<PathBuf>,
    /// Allow the order-8 exhaustive sweep (hours).
    #[arg(long)]
    pub long_run: bool,
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn usage(msg: impl std::fmt::Display) -> Self {
        Self { code: EXIT_USAGE, stdout: String::new(), stderr: format!("error: {msg}\n") }
    }

    fn failure(e: Error) -> Self {
        Self { code: EXIT_VIOLATION, stdout: String::new(), stderr: format!("error: {e}\n") }
    }
}

#[derive(Debug, Clone)]
enum FamilyRequest {
    Recurrence(RecurrenceFamily, usize),
    Multipartite(Vec<usize>),
    Complete(usize),
    Friendship(usize),
    Corona { n: usize, m: usize },
}

impl FamilyRequest {
    fn parse(kind: FamilyKind, n: Option<usize>, parts: Option<&[usize]>) -> Result<Self, String> {
        let name = kind.to_possible_value().map(|v| v.get_name().to_string()).unwrap_or_default();
        let need_n = || n.ok_or_else(|| format!("--kind {name} requires --n"));
        let no_parts = || match parts {
            Some(_) => Err(format!("--parts does not apply to --kind {name}")),
            None => Ok(()),
        };
        Ok(match kind {
            FamilyKind::Path | FamilyKind::Cycle | FamilyKind::L => {
                no_parts()?;
                let fam = match kind {
                    FamilyKind::Path => RecurrenceFamily::Path,
                    FamilyKind::Cycle => RecurrenceFamily::Cycle,
                    _ => RecurrenceFamily::LGraph,
                };
                let n = need_n()?;
                if n < fam.min_order() {
                    return Err(format!("--kind {name} needs --n >= {}", fam.min_order()));
                }
                FamilyRequest::Recurrence(fam, n)
            }
            FamilyKind::Complete => {
                no_parts()?;
                FamilyRequest::Complete(need_n()?)
            }
            FamilyKind::Friendship => {
                no_parts()?;
                FamilyRequest::Friendship(need_n()?)
            }
            FamilyKind::Multipartite => {
                if n.is_some() {
                    return Err("--kind multipartite takes --parts, not --n".into());
                }
                let parts = parts.ok_or("--kind multipartite requires --parts")?;
                if parts.is_empty() || parts.contains(&0) {
                    return Err("--parts must be a nonempty list of positive sizes".into());
                }
                FamilyRequest::Multipartite(parts.to_vec())
            }
            FamilyKind::Corona => {
                let n = need_n()?;
                let m = match parts {
                    None => 1,
                    Some([m]) => *m,
                    Some(_) => return Err("--kind corona takes one --parts value (copy size)".into()),
                };
                FamilyRequest::Corona { n, m }
            }
        })
    }

    fn order(&self) -> usize {
        match self {
            FamilyRequest::Recurrence(_, n) | FamilyRequest::Complete(n) => *n,
            FamilyRequest::Multipartite(parts) => parts.iter().sum(),
            FamilyRequest::Friendship(k) => 2 * k + 1,
            FamilyRequest::Corona { n, m } => n * (1 + m),
        }
    }

    fn supports(&self, method: Method) -> bool {
        match method {
            Method::Brute => true,
            Method::Recurrence => matches!(self, FamilyRequest::Recurrence(..)),
            Method::Closed => matches!(self, FamilyRequest::Multipartite(_) | FamilyRequest::Complete(_)),
        }
    }

    fn graph(&self) -> crate::error::Result<Graph> {
        match self {
            FamilyRequest::Recurrence(fam, n) => match fam {
                RecurrenceFamily::Path => FamilySpec::Path(*n),
                RecurrenceFamily::Cycle => FamilySpec::Cycle(*n),
                RecurrenceFamily::LGraph => FamilySpec::LGraph(*n),
            }
            .generate(),
            FamilyRequest::Multipartite(parts) => FamilySpec::CompleteMultipartite(parts.clone()).generate(),
            FamilyRequest::Complete(n) => FamilySpec::Complete(*n).generate(),
            FamilyRequest::Friendship(k) => FamilySpec::Complete(1)
                .generate()?
                .join(&FamilySpec::MatchingUnion(*k).generate()?),
            FamilyRequest::Corona { n, m } => FamilySpec::Path(*n)
                .generate()?
                .corona(&FamilySpec::Complete(*m).generate()?),
        }
    }

    fn profile(&self, method: Method, cfg: &EnumConfig) -> crate::error::Result<DominationProfile> {
        match (method, self) {
            (Method::Recurrence, FamilyRequest::Recurrence(fam, n)) => fam.profile(*n),
            (Method::Closed, FamilyRequest::Multipartite(parts)) => multipartite_profile(parts),
            (Method::Closed, FamilyRequest::Complete(n)) => complete_profile(*n),
            _ => brute_force_profile(&self.graph()?, cfg),
        }
    }
}

enum Source {
    Graph6(String),
    Edges(PathBuf),
    Family(FamilyRequest),
    /// Batch `analyze`: one graph6 graph per line.
    Batch(PathBuf),
}

struct Plan {
    cli: Cli,
    source: Option<Source>,
    method: Method,
    enumeration: EnumConfig,
}

fn validate(cli: Cli) -> Result<Plan, String> {
    use CommandKind::*;
    let cmd = cli.command;
    let given = |set: bool, flag: &str, allowed: &[CommandKind]| -> Result<(), String> {
        if set && !allowed.contains(&cmd) {
            return Err(format!("{flag} is not accepted by this subcommand"));
        }
        Ok(())
    };
    given(cli.g6.is_some(), "--g6", &[Compute, Family, Analyze])?;
    given(cli.edges.is_some(), "--edges", &[Compute, Family, Analyze])?;
    given(cli.kind.is_some(), "--kind", &[Compute, Family, Analyze])?;
    given(cli.parts.is_some(), "--parts", &[Compute, Family, Analyze])?;
    given(cli.method.is_some(), "--method", &[Compute, Family, Analyze])?;
    given(cli.n.is_some(), "--n", &[Compute, Family, Analyze, Census, Exhaustive])?;
    given(cli.checks.is_some(), "--checks", &[Analyze, Exhaustive, Stream])?;
    given(cli.table.is_some(), "--table", &[Tables])?;
    given(cli.p.is_some(), "--p", &[Census])?;
    given(cli.samples.is_some(), "--samples", &[Census])?;
    given(cli.seed.is_some(), "--seed", &[Census])?;
    given(cli.input.is_some(), "--input", &[Analyze, Stream])?;
    given(cli.long_run, "--long-run", &[Exhaustive])?;
    given(cli.cap.is_some(), "--cap", &[Compute, Family, Analyze, Census, Stream])?;

    if cli.threads == Some(0) {
        return Err("--threads must be at least 1".into());
    }
    let cap = cli.cap.unwrap_or(DEFAULT_CAP);
    if cap > 40 {
        return Err("--cap above 40 is not supported".into());
    }
    let enumeration = EnumConfig { cap, threads: cli.threads };

    let mut source = None;
    if matches!(cmd, Compute | Family | Analyze) {
        let sources = [cli.g6.is_some(), cli.edges.is_some(), cli.kind.is_some(), cli.input.is_some()];
        match sources.iter().filter(|&&s| s).count() {
            0 => return Err("one graph source is required: --g6, --edges or --kind".into()),
            1 => {}
            _ => return Err("conflicting graph sources: give exactly one of --g6, --edges, --kind, --input".into()),
        }
        if cmd == Family && cli.kind.is_none() {
            return Err("family requires --kind".into());
        }
        if cli.kind.is_none() && (cli.n.is_some() || cli.parts.is_some()) {
            return Err("--n and --parts only apply with --kind".into());
        }
        source = Some(if let Some(g6) = &cli.g6 {
            Source::Graph6(g6.clone())
        } else if let Some(path) = &cli.edges {
            Source::Edges(path.clone())
        } else if let Some(path) = &cli.input {
            Source::Batch(path.clone())
        } else {
            let kind = cli.kind.expect("checked above");
            Source::Family(FamilyRequest::parse(kind, cli.n, cli.parts.as_deref())?)
        });
    }

    let method = cli.method.unwrap_or(Method::Brute);
    match &source {
        Some(Source::Family(req)) => {
            if !req.supports(method) {
                return Err(format!("--method {method:?} is not available for this family").to_lowercase());
            }
            if method == Method::Brute && req.order() > cap {
                return Err(format!("order {} exceeds the enumeration cap {cap}", req.order()));
            }
            if method == Method::Closed && req.order() > MAX_ORDER {
                return Err(format!("order {} exceeds {MAX_ORDER}", req.order()));
            }
        }
        Some(_) if method != Method::Brute => {
            return Err("--method recurrence/closed need a --kind family".into());
        }
        _ => {}
    }

    match cmd {
        Census => {
            let n = cli.n.ok_or("census requires --n")?;
            let p = cli.p.ok_or("census requires --p NUM/DEN")?;
            if *p.numer() == 0 || p.numer() >= p.denom() {
                return Err("--p must lie strictly between 0 and 1".into());
            }
            if n == 0 || n > cap {
                return Err(format!("--n must be between 1 and the cap {cap}"));
            }
            if cli.samples == Some(0) {
                return Err("--samples must be at least 1".into());
            }
        }
        Exhaustive => {
            let n = cli.n.ok_or("exhaustive requires --n")?;
            let limit = if cli.long_run { 8 } else { 7 };
            if n > limit {
                return Err(format!("exhaustive --n {n} exceeds {limit} (order 8 needs --long-run)"));
            }
            predicate_from(&cli.checks)?;
        }
        Stream => {
            predicate_from(&cli.checks)?;
        }
        _ => {}
    }
    Ok(Plan { cli, source, method, enumeration })
}

fn predicate_from(checks: &Option<Vec<Check>>) -> Result<Predicate, String> {
    match checks.as_deref() {
        None | Some([Check::Unimodal]) => Ok(Predicate::Unimodal),
        Some([Check::Logconcave]) => Ok(Predicate::LogConcave),
        _ => Err("sweeps take exactly one of --checks unimodal|logconcave".into()),
    }
}

/// Parses `argv` (program name first) and runs the command. `stdin` feeds
/// `stream` when no `--input` is given.
pub fn dispatch<I, T>(argv: I, stdin: &mut dyn BufRead) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code, stdout: String::new(), stderr: text }
            } else {
                Outcome { code, stdout: text, stderr: String::new() }
            };
        }
    };
    let plan = match validate(cli) {
        Ok(plan) => plan,
        Err(msg) => return Outcome::usage(msg),
    };
    match run(&plan, stdin) {
        Ok((body, violations)) => Outcome {
            code: if plan.cli.strict && violations { EXIT_VIOLATION } else { EXIT_OK },
            stdout: body,
            stderr: String::new(),
        },
        Err(e) => Outcome::failure(e),
    }
}

fn meta(cmd: CommandKind) -> Value {
    json!({ "tool": "dompoly", "version": env!("CARGO_PKG_VERSION"), "command": cmd })
}

fn graph_json(g: &Graph) -> Value {
    json!({
        "n": g.order(),
        "m": g.edge_count(),
        "graph6": if g.order() <= GRAPH6_MAX_ORDER { g.to_graph6().ok() } else { None },
    })
}

fn with_meta(cmd: CommandKind, body: Value) -> String {
    let mut out = json!({ "meta": meta(cmd) });
    if let (Value::Object(dst), Value::Object(src)) = (&mut out, body) {
        dst.extend(src);
    }
    out.to_string() + "\n"
}

fn load_graph(source: &Source) -> crate::error::Result<Graph> {
    match source {
        Source::Graph6(s) => Graph::parse_graph6(s),
        Source::Edges(path) => {
            let file = File::open(path).map_err(|e| Error::EdgeList(format!("{}: {e}", path.display())))?;
            Graph::parse_edge_list(BufReader::new(file))
        }
        Source::Family(req) => req.graph(),
        Source::Batch(_) => unreachable!("batch sources are read line by line"),
    }
}

/// Computes the profile and, when it is small enough to build, the graph.
fn resolve(plan: &Plan, source: &Source) -> crate::error::Result<(Option<Graph>, DominationProfile)> {
    match source {
        Source::Family(req) if plan.method != Method::Brute => {
            let graph = if req.order() <= MAX_ORDER { Some(req.graph()?) } else { None };
            Ok((graph, req.profile(plan.method, &plan.enumeration)?))
        }
        _ => {
            let g = load_graph(source)?;
            let p = brute_force_profile(&g, &plan.enumeration)?;
            Ok((Some(g), p))
        }
    }
}

fn run(plan: &Plan, stdin: &mut dyn BufRead) -> crate::error::Result<(String, bool)> {
    let cli = &plan.cli;
    match cli.command {
        CommandKind::Compute | CommandKind::Family => {
            let (g, p) = resolve(plan, plan.source.as_ref().expect("validated"))?;
            Ok(match cli.format {
                Format::Csv => (profile_csv(&p), false),
                Format::Json => {
                    let body = json!({
                        "graph": g.as_ref().map(graph_json),
                        "method": plan.method,
                        "profile": ProfileJson::from(&p),
                    });
                    (with_meta(cli.command, body), false)
                }
            })
        }
        CommandKind::Analyze => run_analyze(plan),
        CommandKind::Tables => {
            let tables: Vec<Table> = match cli.table {
                Some(t) => vec![t.into()],
                None => Table::ALL.to_vec(),
            };
            let reports = tables.into_iter().map(reproduce_table).collect::<crate::error::Result<Vec<_>>>()?;
            let mismatch = reports.iter().any(|r| !r.all_match());
            Ok(match cli.format {
                Format::Csv => (tables_csv(&reports), mismatch),
                Format::Json => (with_meta(cli.command, json!({ "tables": reports })), mismatch),
            })
        }
        CommandKind::Census => {
            let cfg = CensusConfig { enumeration: plan.enumeration, offender_cap: DEFAULT_OFFENDER_CAP };
            let report = census(
                cli.n.expect("validated"),
                cli.p.expect("validated"),
                cli.samples.unwrap_or(1000),
                cli.seed.unwrap_or(0),
                &cfg,
            )?;
            let violations = report.offender_total > 0;
            Ok(match cli.format {
                Format::Csv => (census_csv(&report), violations),
                Format::Json => (with_meta(cli.command, serde_json::to_value(&report).expect("plain data")), violations),
            })
        }
        CommandKind::Exhaustive | CommandKind::Stream => {
            let predicate = predicate_from(&cli.checks).expect("validated");
            let cfg = SweepConfig {
                long_run: cli.long_run,
                offender_cap: DEFAULT_OFFENDER_CAP,
                threads: cli.threads,
                cap: plan.enumeration.cap,
            };
            let report = if cli.command == CommandKind::Exhaustive {
                exhaustive_labeled(cli.n.expect("validated"), predicate, &cfg)?
            } else if let Some(path) = &cli.input {
                let file = File::open(path)
                    .map_err(|e| Error::InvalidParameter(format!("{}: {e}", path.display())))?;
                stream_classify(BufReader::new(file), predicate, &cfg)?
            } else {
                stream_classify(stdin, predicate, &cfg)?
            };
            let violations = report.violations > 0;
            Ok(match cli.format {
                Format::Csv => (sweep_csv(&report), violations),
                Format::Json => (with_meta(cli.command, serde_json::to_value(&report).expect("plain data")), violations),
            })
        }
    }
}

#[derive(Serialize)]
struct Analysis {
    #[serde(skip_serializing_if = "Option::is_none")]
    line: Option<usize>,
    graph: Option<Value>,
    profile: ProfileJson,
    shape: ShapeReport,
    certificates: Vec<Certificate>,
    #[serde(skip_serializing_if = "Option::is_none")]
    mode_vs_avd: Option<crate::analysis::ModeAvdReport>,
}

fn analyze_one(g: Option<&Graph>, p: &DominationProfile, checks: &[Check]) -> crate::error::Result<(Analysis, bool)> {
    let shape = analyze_shape(p.poly())?;
    let mut violations = false;
    let mut certificates = Vec::new();
    let mut avd = None;
    for check in checks {
        match check {
            Check::Unimodal => violations |= !shape.unimodal,
            Check::Logconcave => violations |= !shape.logconcave,
            Check::LowerHalf => certificates.push(lower_half_check(p)),
            Check::RatioTail if p.order() > 0 => certificates.push(ratio_tail_best(p)?),
            Check::MinDegree => {
                if let Some(g) = g.filter(|g| g.order() > 0) {
                    certificates.push(min_degree_certificate(g, p)?);
                }
            }
            Check::Tail => {
                let isolated_free = g.map(|g| !g.has_isolated_vertex());
                let mut c = tail_nonincreasing_check(p, isolated_free.unwrap_or(false));
                if isolated_free.is_none() {
                    c.details["reason"] = json!("graph not materialized");
                }
                certificates.push(c);
            }
            Check::Universal => match g.map(|g| universal_vertex_ratio_check(g, p)) {
                Some(Ok(c)) => certificates.push(c),
                Some(Err(Error::NoUniversalVertex)) | None => certificates.push(Certificate {
                    kind: CertificateKind::UniversalVertexRatio,
                    applicable: false,
                    verified: false,
                    details: json!({ "reason": "no universal vertex" }),
                }),
                Some(Err(e)) => return Err(e),
            },
            Check::Avd if p.order() > 0 => avd = Some(mode_vs_avd(p)?),
            _ => {}
        }
    }
    violations |= certificates.iter().any(Certificate::is_violation);
    Ok((
        Analysis {
            line: None,
            graph: g.map(graph_json),
            profile: ProfileJson::from(p),
            shape,
            certificates,
            mode_vs_avd: avd,
        },
        violations,
    ))
}

fn run_analyze(plan: &Plan) -> crate::error::Result<(String, bool)> {
    let cli = &plan.cli;
    let checks = cli.checks.clone().unwrap_or_else(|| Check::ALL.to_vec());
    let source = plan.source.as_ref().expect("validated");
    if let Source::Batch(path) = source {
        let file = File::open(path).map_err(|e| Error::InvalidParameter(format!("{}: {e}", path.display())))?;
        let mut out = String::new();
        let mut any = false;
        for (idx, line) in BufReader::new(file).lines().enumerate() {
            let line = line.map_err(|e| Error::InvalidParameter(e.to_string()))?;
            let text = line.trim();
            if text.is_empty() {
                continue;
            }
            let result = Graph::parse_graph6(text).and_then(|g| {
                let p = brute_force_profile(&g, &plan.enumeration)?;
                analyze_one(Some(&g), &p, &checks)
            });
            match result {
                Ok((mut a, v)) => {
                    any |= v;
                    a.line = Some(idx + 1);
                    out += &serde_json::to_string(&a).expect("plain data");
                }
                Err(e) => out += &json!({ "line": idx + 1, "error": e.to_string() }).to_string(),
            }
            out.push('\n');
        }
        return Ok((out, any));
    }
    let (g, p) = resolve(plan, source)?;
    let (analysis, violations) = analyze_one(g.as_ref(), &p, &checks)?;
    Ok(match cli.format {
        Format::Csv => {
            let mut out = String::from("check,applicable,verified\n");
            let flag = |b: bool| if b { "true" } else { "false" };
            if checks.contains(&Check::Unimodal) {
                writeln!(out, "unimodal,true,{}", flag(analysis.shape.unimodal)).unwrap();
            }
            if checks.contains(&Check::Logconcave) {
                writeln!(out, "logconcave,true,{}", flag(analysis.shape.logconcave)).unwrap();
            }
            for c in &analysis.certificates {
                writeln!(out, "{:?},{},{}", c.kind, flag(c.applicable), flag(c.verified)).unwrap();
            }
            (out, violations)
        }
        Format::Json => (
            with_meta(cli.command, serde_json::to_value(&analysis).expect("plain data")),
            violations,
        ),
    })
}

fn tables_csv(reports: &[TableReport]) -> String {
    let mut out = String::from("table,n,mode_max,matches_golden,coefficients\n");
    for r in reports {
        let name = serde_json::to_value(r.table).expect("unit enum");
        for row in &r.rows {
            writeln!(
                out,
                "{},{},{},{},{}",
                name.as_str().unwrap_or_default(),
                row.n,
                row.mode_max,
                row.matches_golden,
                row.poly.to_decimal_strings().join(" ")
            )
            .unwrap();
        }
    }
    out
}

fn census_csv(r: &CensusReport) -> String {
    let c = &r.counts;
    let rows: [(&str, String); 15] = [
        ("n", r.n.to_string()),
        ("p", format!("{}/{}", r.p.num, r.p.den)),
        ("samples", r.samples.to_string()),
        ("seed", r.seed.to_string()),
        ("generator", r.generator.clone()),
        ("total", c.total.to_string()),
        ("degree_qualified", c.degree_qualified.to_string()),
        ("unimodal", c.unimodal.to_string()),
        ("mode_at_half", c.mode_at_half.to_string()),
        ("logconcave", c.logconcave.to_string()),
        ("lower_half_violations", c.lower_half_violations.to_string()),
        ("min_degree_violations", c.min_degree_violations.to_string()),
        ("ratio_tail_violations", c.ratio_tail_violations.to_string()),
        ("qualified_avd_outside_window", c.qualified_avd_outside_window.to_string()),
        ("offender_total", r.offender_total.to_string()),
    ];
    summary_csv(&rows)
}

fn sweep_csv(r: &SweepReport) -> String {
    let predicate = serde_json::to_value(r.predicate).expect("unit enum");
    let rows = [
        ("universe", r.universe.clone()),
        ("n", r.n.map(|n| n.to_string()).unwrap_or_default()),
        ("predicate", predicate.as_str().unwrap_or_default().to_string()),
        ("examined", r.examined.to_string()),
        ("violations", r.violations.to_string()),
        ("errors", r.errors.len().to_string()),
    ];
    summary_csv(&rows)
}

fn summary_csv(rows: &[(&str, String)]) -> String {
    let mut out = String::from("field,value\n");
    for (k, v) in rows {
        writeln!(out, "{k},{v}").unwrap();
    }
    out
}
