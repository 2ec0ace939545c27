//! Reproduction harness: golden tables, seeded G(n, p) census, exhaustive
//! labelled sweeps and classification of graph6 streams.

use std::io::BufRead;

use num_rational::Ratio;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::analysis::{
    avd_in_half_window, ratio_tail_certificate, lower_half_check, min_degree_certificate,
};
use crate::domination::{brute_force_profile, dominating_counts_serial, DominationProfile, EnumConfig};
use crate::error::{Error, Result};
use crate::fixtures::{self, GoldenRow};
use crate::graph::{erdos_renyi, FamilySpec, Graph, RNG_NAME};
use crate::poly::{analyze_shape, CoeffSeq};

/// Default bound on the number of offender witnesses kept in a report.
pub const DEFAULT_OFFENDER_CAP: usize = 100;

/// Largest order swept without the long-run flag.
pub const EXHAUSTIVE_DEFAULT_MAX: usize = 7;
/// Largest order swept at all.
pub const EXHAUSTIVE_LONG_RUN_MAX: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Table {
    #[serde(rename = "t1paths")]
    Paths,
    #[serde(rename = "t1cycles")]
    Cycles,
    #[serde(rename = "t2L")]
    LGraphs,
}

impl Table {
    pub const ALL: [Table; 3] = [Table::Paths, Table::Cycles, Table::LGraphs];

    pub fn golden(self) -> &'static [GoldenRow; 4] {
        match self {
            Table::Paths => &fixtures::PATHS,
            Table::Cycles => &fixtures::CYCLES,
            Table::LGraphs => &fixtures::L_GRAPHS,
        }
    }

    pub fn family(self, n: usize) -> FamilySpec {
        match self {
            Table::Paths => FamilySpec::Path(n),
            Table::Cycles => FamilySpec::Cycle(n),
            Table::LGraphs => FamilySpec::LGraph(n),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub n: usize,
    #[serde(serialize_with = "crate::report::serialize_coeffs")]
    pub poly: CoeffSeq,
    pub mode_max: usize,
    /// Whether both the polynomial and the mode equal the reference row.
    pub matches_golden: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableReport {
    pub table: Table,
    pub rows: Vec<TableRow>,
}

impl TableReport {
    pub fn all_match(&self) -> bool {
        self.rows.iter().all(|r| r.matches_golden)
    }
}

/// Recomputes a table by enumeration and compares each row with the fixture.
pub fn reproduce_table(which: Table) -> Result<TableReport> {
    let cfg = EnumConfig::serial();
    let rows = which
        .golden()
        .iter()
        .map(|row| {
            let g = which.family(row.n).generate()?;
            let poly = brute_force_profile(&g, &cfg)?.into_poly();
            let mode_max = analyze_shape(&poly)?.mode_max;
            let matches_golden = poly == CoeffSeq::from_u64s(row.coeffs) && mode_max == row.mode;
            Ok(TableRow { n: row.n, poly, mode_max, matches_golden })
        })
        .collect::<Result<_>>()?;
    Ok(TableReport { table: which, rows })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Predicate {
    #[serde(rename = "unimodal")]
    Unimodal,
    #[serde(rename = "logconcave")]
    LogConcave,
}

impl Predicate {
    pub fn holds(self, p: &CoeffSeq) -> Result<bool> {
        let shape = analyze_shape(p)?;
        Ok(match self {
            Predicate::Unimodal => shape.unimodal,
            Predicate::LogConcave => shape.logconcave,
        })
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct CensusCounts {
    pub total: usize,
    pub degree_qualified: usize,
    pub unimodal: usize,
    pub mode_at_half: usize,
    pub logconcave: usize,
    pub lower_half_violations: usize,
    pub min_degree_violations: usize,
    pub ratio_tail_violations: usize,
    /// Degree-qualified samples whose average dominating-set size falls
    /// outside `[n/2, (n+1)/2]`.
    pub qualified_avd_outside_window: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CensusReport {
    pub n: usize,
    pub p: crate::report::RationalJson,
    pub samples: usize,
    pub seed: u64,
    pub generator: String,
    pub counts: CensusCounts,
    /// graph6 strings of non-unimodal samples, capped.
    pub offenders: Vec<String>,
    pub offender_total: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CensusConfig {
    pub enumeration: EnumConfig,
    pub offender_cap: usize,
}

impl Default for CensusConfig {
    fn default() -> Self {
        Self { enumeration: EnumConfig::default(), offender_cap: DEFAULT_OFFENDER_CAP }
    }
}

/// Sample `index` of a census: ChaCha8 seeded with `seed`, on stream `index`.
/// Sample 0 is therefore the graph `FamilySpec::ErdosRenyi { n, p, seed }`.
pub fn census_sample(n: usize, p: Ratio<u64>, seed: u64, index: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    erdos_renyi(n, p, &mut rng)
}

#[derive(Debug, Default)]
struct SampleOutcome {
    qualified: bool,
    unimodal: bool,
    mode_at_half: bool,
    logconcave: bool,
    lower_half_ok: bool,
    min_degree_violation: bool,
    ratio_tail_violation: bool,
    avd_outside: bool,
    graph6: Option<String>,
}

fn classify_sample(g: &Graph) -> Result<SampleOutcome> {
    let n = g.order();
    let profile = DominationProfile::from_u64s(n, &dominating_counts_serial(g))?;
    let shape = analyze_shape(profile.poly())?;
    let min_degree = min_degree_certificate(g, &profile)?;
    let mut ratio_tail_violation = false;
    for k in n.div_ceil(2)..=n {
        ratio_tail_violation |= ratio_tail_certificate(&profile, k)?.is_violation();
    }
    let avd_outside = min_degree.applicable && !avd_in_half_window(&profile)?;
    Ok(SampleOutcome {
        qualified: min_degree.applicable,
        unimodal: shape.unimodal,
        mode_at_half: shape.mode_set.contains(&n.div_ceil(2)),
        logconcave: shape.logconcave,
        lower_half_ok: lower_half_check(&profile).verified,
        min_degree_violation: min_degree.is_violation(),
        ratio_tail_violation,
        avd_outside,
        graph6: (!shape.unimodal).then(|| g.to_graph6()).transpose()?,
    })
}

fn with_threads<T: Send>(threads: Option<usize>, f: impl FnOnce() -> T + Send) -> Result<T> {
    match threads {
        None => Ok(f()),
        Some(t) => Ok(rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build()
            .map_err(|e| Error::InvalidParameter(e.to_string()))?
            .install(f)),
    }
}

/// Seeded census of G(n, p). Deterministic in `(n, p, samples, seed)` and
/// independent of the thread count. Fails if any sample contradicts a
/// theorem-backed property (lower-half monotonicity, the minimum-degree
/// criterion, or the ratio-threshold tail).
pub fn census(n: usize, p: Ratio<u64>, samples: usize, seed: u64, cfg: &CensusConfig) -> Result<CensusReport> {
    if *p.numer() == 0 || p.numer() >= p.denom() {
        return Err(Error::InvalidParameter(format!("edge probability {p} must lie strictly between 0 and 1")));
    }
    if samples == 0 {
        return Err(Error::InvalidParameter("samples must be at least 1".into()));
    }
    if n > cfg.enumeration.cap {
        return Err(Error::CapExceeded { order: n, cap: cfg.enumeration.cap });
    }
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let outcomes: Vec<SampleOutcome> = with_threads(cfg.enumeration.threads, || {
        (0..samples as u64)
            .into_par_iter()
            .map(|i| classify_sample(&census_sample(n, p, seed, i)))
            .collect::<Result<Vec<_>>>()
    })??;

    let mut counts = CensusCounts { total: outcomes.len(), ..Default::default() };
    let mut offenders = Vec::new();
    let mut offender_total = 0;
    for o in outcomes {
        counts.degree_qualified += o.qualified as usize;
        counts.unimodal += o.unimodal as usize;
        counts.mode_at_half += o.mode_at_half as usize;
        counts.logconcave += o.logconcave as usize;
        counts.lower_half_violations += !o.lower_half_ok as usize;
        counts.min_degree_violations += o.min_degree_violation as usize;
        counts.ratio_tail_violations += o.ratio_tail_violation as usize;
        counts.qualified_avd_outside_window += o.avd_outside as usize;
        if let Some(g6) = o.graph6 {
            offender_total += 1;
            if offenders.len() < cfg.offender_cap {
                offenders.push(g6);
            }
        }
    }
    if counts.lower_half_violations + counts.min_degree_violations + counts.ratio_tail_violations > 0 {
        return Err(Error::InvariantViolation(format!(
            "census n={n} p={p} seed={seed}: lower_half={}, min_degree={}, ratio_tail={}",
            counts.lower_half_violations, counts.min_degree_violations, counts.ratio_tail_violations
        )));
    }
    Ok(CensusReport {
        n,
        p: crate::report::RationalJson { num: p.numer().to_string(), den: p.denom().to_string() },
        samples,
        seed,
        generator: RNG_NAME.to_string(),
        counts,
        offenders,
        offender_total,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Offender {
    /// 1-based input line, for stream sweeps.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub line: Option<usize>,
    pub graph6: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LineError {
    pub line: usize,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    pub universe: String,
    pub predicate: Predicate,
    pub examined: u64,
    pub violations: u64,
    pub offenders: Vec<Offender>,
    pub errors: Vec<LineError>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SweepConfig {
    pub long_run: bool,
    pub offender_cap: usize,
    pub threads: Option<usize>,
    pub cap: usize,
}

impl Default for SweepConfig {
    fn default() -> Self {
        Self {
            long_run: false,
            offender_cap: DEFAULT_OFFENDER_CAP,
            threads: None,
            cap: crate::domination::DEFAULT_CAP,
        }
    }
}

/// The labelled graph on `n` vertices whose edge set is given by the bits
/// of `code`, bit `k` standing for the `k`-th pair in lexicographic order.
pub fn labeled_graph(n: usize, code: u64) -> Graph {
    let mut edges = Vec::new();
    let mut k = 0;
    for u in 0..n {
        for v in u + 1..n {
            if code >> k & 1 == 1 {
                edges.push((u, v));
            }
            k += 1;
        }
    }
    Graph::from_edge_list(n, &edges).expect("pairs are in range")
}

const SWEEP_CHUNK: u64 = 1 << 12;

/// Classifies all `2^(n(n-1)/2)` labelled graphs on `n` vertices.
pub fn exhaustive_labeled(n: usize, predicate: Predicate, cfg: &SweepConfig) -> Result<SweepReport> {
    let limit = if cfg.long_run { EXHAUSTIVE_LONG_RUN_MAX } else { EXHAUSTIVE_DEFAULT_MAX };
    if n > limit {
        return Err(Error::InvalidParameter(format!(
            "exhaustive sweep of order {n} exceeds {limit}{}",
            if cfg.long_run { "" } else { " (use the long-run flag for n = 8)" }
        )));
    }
    let total: u64 = 1 << (n * n.saturating_sub(1) / 2);
    let chunks = total.div_ceil(SWEEP_CHUNK);
    let per_chunk: Vec<(u64, Vec<String>)> = with_threads(cfg.threads, || {
        (0..chunks)
            .into_par_iter()
            .map(|c| {
                let mut bad = 0u64;
                let mut witnesses = Vec::new();
                for code in c * SWEEP_CHUNK..((c + 1) * SWEEP_CHUNK).min(total) {
                    let g = labeled_graph(n, code);
                    let poly = CoeffSeq::from_u64s(&dominating_counts_serial(&g));
                    if !predicate.holds(&poly)? {
                        bad += 1;
                        if witnesses.len() < cfg.offender_cap {
                            witnesses.push(g.to_graph6()?);
                        }
                    }
                }
                Ok((bad, witnesses))
            })
            .collect::<Result<Vec<_>>>()
    })??;

    let mut offenders = Vec::new();
    let mut violations = 0;
    for (bad, witnesses) in per_chunk {
        violations += bad;
        for graph6 in witnesses {
            if offenders.len() < cfg.offender_cap {
                offenders.push(Offender { line: None, graph6 });
            }
        }
    }
    Ok(SweepReport {
        n: Some(n),
        universe: "all labeled graphs".into(),
        predicate,
        examined: total,
        violations,
        offenders,
        errors: Vec::new(),
    })
}

/// Classifies one graph6 graph per input line. Blank lines are skipped; a
/// line that fails to parse or exceeds the enumeration cap is recorded as
/// an error and processing continues.
pub fn stream_classify<R: BufRead>(input: R, predicate: Predicate, cfg: &SweepConfig) -> Result<SweepReport> {
    let enumeration = EnumConfig { cap: cfg.cap, threads: cfg.threads };
    let mut report = SweepReport {
        n: None,
        universe: "stream".into(),
        predicate,
        examined: 0,
        violations: 0,
        offenders: Vec::new(),
        errors: Vec::new(),
    };
    for (idx, line) in input.lines().enumerate() {
        let lineno = idx + 1;
        let line = line.map_err(|e| Error::InvalidParameter(format!("read error at line {lineno}: {e}")))?;
        let text = line.trim();
        let text = text.strip_prefix(">>graph6<<").unwrap_or(text);
        if text.is_empty() {
            continue;
        }
        let outcome = Graph::parse_graph6(text)
            .and_then(|g| brute_force_profile(&g, &enumeration))
            .and_then(|p| predicate.holds(p.poly()));
        match outcome {
            Ok(holds) => {
                report.examined += 1;
                if !holds {
                    report.violations += 1;
                    if report.offenders.len() < cfg.offender_cap {
                        report.offenders.push(Offender { line: Some(lineno), graph6: text.to_string() });
                    }
                }
            }
            Err(e) => report.errors.push(LineError { line: lineno, message: e.to_string() }),
        }
    }
    Ok(report)
}
