//! Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
//! criterion fails. Runs as a plain binary so the report is always printed.

use std::time::{Duration, Instant};

use dompoly_core::analysis::{
    avd_in_half_window, lower_half_check, min_degree_certificate, min_degree_condition_holds,
    ratio_tail_certificate, universal_vertex_ratio_check,
};
use dompoly_core::domination::{
    brute_force_profile, multipartite_profile, simple3path_identity_check, DominationProfile,
    EnumConfig, RecurrenceFamily,
};
use dompoly_core::experiments::{
    census, census_sample, exhaustive_labeled, reproduce_table, CensusConfig, Predicate,
    SweepConfig, Table,
};
use dompoly_core::fixtures::{NON_LC_EDGES, NON_LC_POLY};
use dompoly_core::graph::{FamilySpec, Graph};
use dompoly_core::poly::{analyze_shape, CoeffSeq};
use num_rational::Ratio;

type Check = Result<String, String>;

/// Everything computed along the way, for the suites that range over
/// "every tested graph".
#[derive(Default)]
struct Seen {
    profiles: Vec<(String, DominationProfile)>,
    /// Graphs meeting the minimum-degree condition, with their profiles.
    qualified: Vec<(String, Graph, DominationProfile)>,
}

impl Seen {
    fn add(&mut self, label: impl Into<String>, p: &DominationProfile) {
        self.profiles.push((label.into(), p.clone()));
    }
}

fn cfg() -> EnumConfig {
    EnumConfig::default()
}

fn brute(g: &Graph) -> Result<DominationProfile, String> {
    brute_force_profile(g, &cfg()).map_err(|e| e.to_string())
}

fn generate(spec: FamilySpec) -> Result<Graph, String> {
    spec.generate().map_err(|e| e.to_string())
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn golden_tables(seen: &mut Seen) -> Check {
    let expected = [
        (Table::Paths, [1, 1, 2, 3]),
        (Table::Cycles, [2, 2, 3, 4]),
        (Table::LGraphs, [2, 3, 4, 4]),
    ];
    for (table, modes) in expected {
        let report = reproduce_table(table).map_err(|e| e.to_string())?;
        ensure(report.all_match(), || format!("{table:?} differs from the reference rows"))?;
        let got: Vec<usize> = report.rows.iter().map(|r| r.mode_max).collect();
        ensure(got == modes, || format!("{table:?} mode_max {got:?}, want {modes:?}"))?;
        for row in &report.rows {
            seen.add(format!("{table:?} n={}", row.n), &DominationProfile::new(row.n, row.poly.clone()).map_err(|e| e.to_string())?);
        }
    }
    Ok("12 rows bit-exact, mode_max (1,1,2,3) (2,2,3,4) (2,3,4,4)".into())
}

fn non_log_concave_fixture(seen: &mut Seen) -> Check {
    let g = Graph::from_edge_list(9, &NON_LC_EDGES).map_err(|e| e.to_string())?;
    let p = brute(&g)?;
    ensure(*p.poly() == CoeffSeq::from_u64s(&NON_LC_POLY), || format!("got {}", p.poly()))?;
    let shape = analyze_shape(p.poly()).map_err(|e| e.to_string())?;
    ensure(!shape.logconcave && shape.lc_witness == Some(3), || format!("lc={} witness={:?}", shape.logconcave, shape.lc_witness))?;
    let (d2, d3, d4) = (p.d(2), p.d(3), p.d(4));
    ensure(&d3 * &d3 == 49u32.into() && &d2 * &d4 == 50u32.into(), || "witness values".into())?;
    ensure(shape.unimodal && shape.mode_set == [5], || format!("mode_set {:?}", shape.mode_set))?;
    seen.add("non-log-concave order 9", &p);
    Ok(format!("D = {}; 7^2 = 49 < 50 = 1*50; mode_set {{5}}", p.poly()))
}

fn recurrence_vs_enumeration(seen: &mut Seen) -> Check {
    let mut compared = 0;
    for (fam, spec) in [
        (RecurrenceFamily::Path, FamilySpec::Path as fn(usize) -> FamilySpec),
        (RecurrenceFamily::Cycle, FamilySpec::Cycle),
        (RecurrenceFamily::LGraph, FamilySpec::LGraph),
    ] {
        let seq = fam.sequence(18).map_err(|e| e.to_string())?;
        for n in fam.min_order()..=18 {
            let rec = seq.get(n).ok_or_else(|| format!("{fam:?} missing n={n}"))?;
            let p = brute(&generate(spec(n))?)?;
            ensure(rec == p.poly(), || format!("{fam:?} n={n}: recurrence {rec} vs brute {}", p.poly()))?;
            seen.add(format!("{fam:?} n={n}"), &p);
            compared += 1;
        }
    }
    Ok(format!("{compared} (family, n) pairs equal up to n=18"))
}

/// Partitions of `n` as non-increasing part lists.
fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(rest: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in (1..=rest.min(max)).rev() {
            prefix.push(part);
            go(rest - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

fn closed_form_vs_enumeration(seen: &mut Seen) -> Check {
    let mut total = 0;
    for n in 1..=12 {
        let parts = partitions(n);
        if n == 12 {
            ensure(parts.len() == 77, || format!("{} partitions of 12", parts.len()))?;
        }
        for parts in parts {
            let closed = multipartite_profile(&parts).map_err(|e| e.to_string())?;
            let p = brute(&generate(FamilySpec::CompleteMultipartite(parts.clone()))?)?;
            ensure(closed == p, || format!("K{parts:?}: closed {} vs brute {}", closed.poly(), p.poly()))?;
            seen.add(format!("K{parts:?}"), &p);
            total += 1;
        }
    }
    Ok(format!("{total} partitions, n <= 12"))
}

fn contraction_identity(seen: &mut Seen) -> Check {
    let mut triples = 0;
    for n in 6..=12 {
        let path = generate(FamilySpec::Path(n))?;
        for i in 1..=n - 4 {
            let t = (i, i + 1, i + 2);
            let ok = simple3path_identity_check(&path, t, &cfg()).map_err(|e| format!("P_{n} {t:?}: {e}"))?;
            ensure(ok, || format!("P_{n} {t:?}"))?;
            triples += 1;
        }
        let cycle = generate(FamilySpec::Cycle(n))?;
        for i in 0..n {
            let t = (i, (i + 1) % n, (i + 2) % n);
            let ok = simple3path_identity_check(&cycle, t, &cfg()).map_err(|e| format!("C_{n} {t:?}: {e}"))?;
            ensure(ok, || format!("C_{n} {t:?}"))?;
            triples += 1;
        }
        seen.add(format!("P_{n}"), &brute(&path)?);
        seen.add(format!("C_{n}"), &brute(&cycle)?);
    }
    Ok(format!("{triples} triples on P_n and C_n, 6 <= n <= 12"))
}

fn lower_half(seen: &Seen) -> Check {
    for (label, p) in &seen.profiles {
        ensure(lower_half_check(p).verified, || format!("{label}: {}", p.poly()))?;
    }
    let mut sampled = 0;
    for n in [9, 12, 16] {
        for p in [Ratio::new(1, 5), Ratio::new(1, 2), Ratio::new(4, 5)] {
            let report = census(n, p, 1000, 42, &CensusConfig::default()).map_err(|e| e.to_string())?;
            ensure(report.counts.lower_half_violations == 0, || format!("G({n},{p})"))?;
            sampled += report.counts.total;
        }
    }
    Ok(format!("{} profiles from criteria 1-5 plus {sampled} seeded G(n,p) samples", seen.profiles.len()))
}

fn min_degree_soundness(seen: &mut Seen) -> Check {
    let mut graphs: Vec<(String, Graph)> = Vec::new();
    for n in 1..=22 {
        graphs.push((format!("K_{n}"), generate(FamilySpec::Complete(n))?));
    }
    for n in (2..=20).step_by(2) {
        graphs.push((format!("K_{{{0},{0}}}", n / 2), generate(FamilySpec::CompleteMultipartite(vec![n / 2, n / 2]))?));
    }
    let mut checked = 0;
    for (label, g) in graphs {
        let p = brute(&g)?;
        seen.add(label.clone(), &p);
        if !min_degree_condition_holds(&g) {
            continue;
        }
        let cert = min_degree_certificate(&g, &p).map_err(|e| e.to_string())?;
        ensure(cert.verified, || format!("{label}: {}", cert.details))?;
        // Independent restatement of the conclusion.
        let n = g.order();
        let half = n.div_ceil(2);
        let shape = analyze_shape(p.poly()).map_err(|e| e.to_string())?;
        let tail_ok = (half..n).all(|i| p.d(i) >= p.d(i + 1));
        ensure(shape.unimodal && shape.mode_set.contains(&half) && tail_ok, || format!("{label}: {}", p.poly()))?;
        seen.qualified.push((label, g, p));
        checked += 1;
    }
    let report = census(20, Ratio::new(1, 2), 1000, 42, &CensusConfig::default()).map_err(|e| e.to_string())?;
    ensure(report.counts.min_degree_violations == 0, || "census(20,1/2) violation".into())?;
    for i in 0..1000 {
        let g = census_sample(20, Ratio::new(1, 2), 42, i);
        if min_degree_condition_holds(&g) {
            let p = brute(&g)?;
            seen.qualified.push((format!("census(20,1/2,42)#{i}"), g, p));
        }
    }
    ensure(seen.qualified.len() == checked + report.counts.degree_qualified, || "qualified count mismatch".into())?;
    Ok(format!(
        "{checked} complete/balanced bipartite graphs and {} of 1000 census graphs qualified; all unimodal with ceil(n/2) a mode",
        report.counts.degree_qualified
    ))
}

fn ratio_tail(seen: &Seen) -> Check {
    let mut applicable = 0;
    for (label, p) in &seen.profiles {
        let n = p.order();
        for k in n.div_ceil(2)..=n {
            let c = ratio_tail_certificate(p, k).map_err(|e| e.to_string())?;
            ensure(!c.is_violation(), || format!("{label} k={k}: {}", c.details))?;
            applicable += c.applicable as usize;
        }
    }
    // The censuses in criteria 6 and 7 apply the same check to every sample
    // and would have failed there on a violation.
    Ok(format!("{} profiles, {applicable} (profile, k) pairs met the threshold, no tail rises", seen.profiles.len()))
}

fn exhaustive() -> Check {
    let cfg = SweepConfig::default();
    let mut examined = 0;
    for n in 1..=7 {
        for predicate in [Predicate::LogConcave, Predicate::Unimodal] {
            let report = exhaustive_labeled(n, predicate, &cfg).map_err(|e| e.to_string())?;
            ensure(report.violations == 0, || format!("n={n} {predicate:?}: {:?}", report.offenders))?;
            examined += report.examined;
        }
    }
    Ok(format!("{examined} labeled graphs (n <= 7, both predicates), all log-concave and unimodal"))
}

fn binomial(seen: &mut Seen) -> Check {
    for n in 1..=20 {
        let p = brute(&generate(FamilySpec::Complete(n))?)?;
        let mut want = CoeffSeq::binomial_row(n).coeffs().to_vec();
        want[0] -= 1u32;
        ensure(p.coeffs() == want.as_slice(), || format!("K_{n}: {}", p.poly()))?;
        seen.add(format!("K_{n}"), &p);
    }
    Ok("D(K_n) = (1+x)^n - 1 for n <= 20".into())
}

fn avd_and_universal(seen: &mut Seen) -> Check {
    for (label, _, p) in &seen.qualified {
        ensure(avd_in_half_window(p).map_err(|e| e.to_string())?, || format!("{label}: avd outside [n/2, (n+1)/2]"))?;
    }
    let k1 = generate(FamilySpec::Complete(1))?;
    let mut off_mode = Vec::new();
    for seed in 0..30u64 {
        let m = 1 + (seed % 8) as usize;
        let base = generate(FamilySpec::ErdosRenyi { n: m, p: Ratio::new(1, 2), seed })?;
        let g = k1.join(&base).map_err(|e| e.to_string())?;
        let p = brute(&g)?;
        let cert = universal_vertex_ratio_check(&g, &p).map_err(|e| e.to_string())?;
        ensure(cert.verified, || format!("seed {seed}: {}", cert.details))?;
        let n = g.order();
        let half = n.div_ceil(2);
        let mode_max = analyze_shape(p.poly()).map_err(|e| e.to_string())?.mode_max;
        if mode_max != half && mode_max != half + 1 {
            off_mode.push(format!("seed {seed} n={n} mode_max={mode_max}"));
        }
        seen.add(format!("K_1 + G seed {seed}"), &p);
    }
    Ok(format!(
        "{} qualified graphs inside the avd window; 30 universal-vertex graphs satisfy r_i >= i/n; mode observation off on {} ({})",
        seen.qualified.len(),
        off_mode.len(),
        if off_mode.is_empty() { "none".to_string() } else { off_mode.join(", ") }
    ))
}

fn corona_log_concave(seen: &mut Seen) -> Check {
    let k1 = generate(FamilySpec::Complete(1))?;
    let k2 = generate(FamilySpec::Complete(2))?;
    for seed in 0..50u64 {
        let m = 1 + (seed % 6) as usize;
        let g = generate(FamilySpec::ErdosRenyi { n: m, p: Ratio::new(1, 2), seed })?;
        for (name, h) in [("K_1", &k1), ("K_2", &k2)] {
            let p = brute(&g.corona(h).map_err(|e| e.to_string())?)?;
            let shape = analyze_shape(p.poly()).map_err(|e| e.to_string())?;
            ensure(shape.logconcave, || format!("seed {seed} corona {name}: {}", p.poly()))?;
            seen.add(format!("corona seed {seed} {name}"), &p);
        }
    }
    Ok("100 corona profiles log-concave".into())
}

fn main() {
    let mut seen = Seen::default();
    let mut lines: Vec<(u32, bool, String)> = Vec::new();
    let mut report = |id: u32, name: &str, limit: Option<Duration>, f: &mut dyn FnMut() -> Check| {
        let start = Instant::now();
        let mut result = f();
        let elapsed = start.elapsed();
        if let (Ok(_), Some(limit)) = (&result, limit) {
            if elapsed > limit {
                result = Err(format!("took {elapsed:.2?}, limit {limit:?}"));
            }
        }
        let (ok, msg) = match result {
            Ok(msg) => (true, msg),
            Err(msg) => (false, msg),
        };
        let line = format!("{} {id:>2} {name} [{elapsed:.2?}]: {msg}", if ok { "PASS" } else { "FAIL" });
        lines.push((id, ok, line));
    };
    let secs = Duration::from_secs;
    report(1, "golden tables", Some(secs(1)), &mut || golden_tables(&mut seen));
    report(2, "order-9 non-log-concave fixture", Some(secs(1)), &mut || non_log_concave_fixture(&mut seen));
    report(3, "recurrence equals enumeration", Some(secs(120)), &mut || recurrence_vs_enumeration(&mut seen));
    report(4, "multipartite closed form equals enumeration", Some(secs(120)), &mut || closed_form_vs_enumeration(&mut seen));
    report(5, "simple 3-path contraction identity", Some(secs(60)), &mut || contraction_identity(&mut seen));
    report(6, "lower half non-decreasing", None, &mut || lower_half(&seen));
    report(7, "minimum-degree criterion soundness", Some(secs(600)), &mut || min_degree_soundness(&mut seen));
    report(10, "complete graph binomial identity", None, &mut || binomial(&mut seen));
    report(11, "avd window and universal-vertex ratios", None, &mut || avd_and_universal(&mut seen));
    report(12, "corona log-concavity spot check", None, &mut || corona_log_concave(&mut seen));
    report(8, "ratio-threshold tail soundness", None, &mut || ratio_tail(&seen));
    report(9, "exhaustive labeled sweep n <= 7", Some(secs(1800)), &mut exhaustive);
    lines.sort_by_key(|l| l.0);

    for (_, _, line) in &lines {
        println!("{line}");
    }
    let failures = lines.iter().filter(|l| !l.1).count();
    if failures > 0 {
        println!("{failures} criteria failed");
        std::process::exit(1);
    }
    println!("all 12 criteria passed");
}
