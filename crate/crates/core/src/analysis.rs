//! Sufficient-condition certificates and property checks on domination
//! profiles. Every comparison is exact; floats never decide a verdict.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;
use serde_json::{json, Value};

use crate::domination::{DominationProfile, RecurrenceSeq};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::poly::{analyze_shape, avd_from_poly, floor_ceil, CoeffSeq};
use crate::report::rational_json;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum CertificateKind {
    /// Ratio threshold `r_k >= (n-k)/(k+1)` forcing a non-increasing tail.
    RatioTail,
    /// Minimum degree at least `2 log2 n`.
    MinDegree,
    /// Non-decreasing coefficients below `n/2`.
    LowerHalf,
    /// Non-increasing coefficients from `floor(3n/4)`.
    TailThreeQuarters,
    /// `d_i >= C(n-1, i-1)` and `r_i >= i/n` for graphs with a universal vertex.
    UniversalVertexRatio,
}

/// Outcome of a check. `applicable` says whether the hypothesis holds;
/// `verified` says the conclusion was observed on the profile too.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Certificate {
    pub kind: CertificateKind,
    pub applicable: bool,
    pub verified: bool,
    pub details: Value,
}

impl Certificate {
    /// Hypothesis held but the conclusion did not.
    pub fn is_violation(&self) -> bool {
        self.applicable && !self.verified
    }
}

fn ratio(num: impl Into<BigInt>, den: impl Into<BigInt>) -> BigRational {
    BigRational::new(num.into(), den.into())
}

/// First `i >= from` with `d_{i+1} > d_i`.
fn first_rise(d: &[BigUint], from: usize) -> Option<usize> {
    (from..d.len().saturating_sub(1)).find(|&i| d[i + 1] > d[i])
}

/// `(n - k) / (k + 1)`.
pub fn g_threshold(n: usize, k: usize) -> Result<BigRational> {
    if k > n {
        return Err(Error::InvalidParameter(format!("index {k} exceeds order {n}")));
    }
    Ok(ratio(n - k, k + 1))
}

/// `1 - (n - i) ((n - i) / n)^delta`, the lower bound on `r_i` for a graph
/// of order `n` and minimum degree `delta`.
pub fn r_lower_bound(n: usize, delta: usize, i: usize) -> Result<BigRational> {
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    if i > n {
        return Err(Error::InvalidParameter(format!("index {i} exceeds order {n}")));
    }
    let base = ratio(n - i, n);
    let power = num_traits::pow(base, delta);
    Ok(BigRational::one() - BigRational::from_integer((n - i).into()) * power)
}

pub fn ratio_tail_certificate(p: &DominationProfile, k: usize) -> Result<Certificate> {
    let n = p.order();
    if 2 * k < n {
        return Err(Error::IndexBelowHalf { k, n });
    }
    if k > n {
        return Err(Error::InvalidParameter(format!("index {k} exceeds order {n}")));
    }
    let r_k = p.ratio(k);
    let threshold = g_threshold(n, k)?;
    let applicable = r_k >= threshold;
    let rise = first_rise(p.coeffs(), k);
    Ok(Certificate {
        kind: CertificateKind::RatioTail,
        applicable,
        verified: applicable && rise.is_none(),
        details: json!({
            "k": k,
            "r_k": rational_json(&r_k),
            "threshold": rational_json(&threshold),
            "tail_rise_at": rise,
        }),
    })
}

/// Ratio-tail certificate at the smallest index `k >= n/2` whose threshold holds, if any.
pub fn ratio_tail_best(p: &DominationProfile) -> Result<Certificate> {
    let n = p.order();
    let start = n.div_ceil(2);
    let mut last = None;
    for k in start..=n {
        let c = ratio_tail_certificate(p, k)?;
        if c.applicable {
            return Ok(c);
        }
        last = Some(c);
    }
    last.ok_or(Error::EmptyGraph)
}

/// `2^delta >= n^2`, the exact form of `delta >= 2 log2 n`.
pub fn min_degree_condition_holds(g: &Graph) -> bool {
    let n = g.order();
    match g.min_degree() {
        Ok(delta) => min_degree_condition(n, delta),
        Err(_) => false,
    }
}

pub fn min_degree_condition(n: usize, delta: usize) -> bool {
    (BigUint::one() << delta) >= BigUint::from(n * n)
}

/// Minimum-degree certificate: hypothesis from the graph, conclusion
/// (unimodal, `ceil(n/2)` a mode, non-increasing from there) from the profile.
pub fn min_degree_certificate(g: &Graph, p: &DominationProfile) -> Result<Certificate> {
    let n = g.order();
    let delta = g.min_degree()?;
    let applicable = min_degree_condition(n, delta);
    let shape = analyze_shape(p.poly())?;
    let half = n.div_ceil(2);
    let rise = first_rise(p.coeffs(), half);
    let holds = shape.unimodal && shape.mode_set.contains(&half) && rise.is_none();
    Ok(Certificate {
        kind: CertificateKind::MinDegree,
        applicable,
        verified: applicable && holds,
        details: json!({
            "n": n,
            "min_degree": delta,
            "half": half,
            "unimodal": shape.unimodal,
            "mode_set": shape.mode_set,
            "tail_rise_at": rise,
        }),
    })
}

pub fn lower_half_check(p: &DominationProfile) -> Certificate {
    let n = p.order();
    let d = p.coeffs();
    // integer i with 2i < n
    let violation = (0..n.div_ceil(2)).find(|&i| d[i] > d[i + 1]);
    Certificate {
        kind: CertificateKind::LowerHalf,
        applicable: true,
        verified: violation.is_none(),
        details: json!({ "violation_at": violation }),
    }
}

/// Non-increase from `floor(3n/4)`. Only claimed for graphs without
/// isolated vertices; the caller says whether that holds.
pub fn tail_nonincreasing_check(p: &DominationProfile, isolated_free: bool) -> Certificate {
    let n = p.order();
    let from = 3 * n / 4;
    let rise = first_rise(p.coeffs(), from);
    Certificate {
        kind: CertificateKind::TailThreeQuarters,
        applicable: isolated_free,
        verified: isolated_free && rise.is_none(),
        details: json!({
            "from": from,
            "holds": rise.is_none(),
            "rise_at": rise,
        }),
    }
}

pub fn universal_vertex_ratio_check(g: &Graph, p: &DominationProfile) -> Result<Certificate> {
    let hub = g.universal_vertex().ok_or(Error::NoUniversalVertex)?;
    let n = g.order();
    let below = CoeffSeq::binomial_row(n - 1);
    let mut count_violation = None;
    let mut ratio_violation = None;
    for i in 1..=n {
        if count_violation.is_none() && p.d(i) < below.coeff(i - 1) {
            count_violation = Some(i);
        }
        if ratio_violation.is_none() && p.ratio(i) < ratio(i, n) {
            ratio_violation = Some(i);
        }
    }
    Ok(Certificate {
        kind: CertificateKind::UniversalVertexRatio,
        applicable: true,
        verified: count_violation.is_none() && ratio_violation.is_none(),
        details: json!({
            "hub": hub,
            "count_violation_at": count_violation,
            "ratio_violation_at": ratio_violation,
        }),
    })
}

/// Whether a consistent mode sequence exists: one mode per entry, each
/// entry unimodal, and consecutive modes differing by 0 or 1. Ties are
/// resolved by carrying every reachable mode forward.
pub fn mode_progression_check(seq: &RecurrenceSeq) -> Result<bool> {
    if seq.polys.len() < 4 {
        return Err(Error::TooFewEntries { need: 4, got: seq.polys.len() });
    }
    let mut reachable: Option<Vec<usize>> = None;
    for poly in &seq.polys {
        let shape = analyze_shape(poly)?;
        if !shape.unimodal {
            return Ok(false);
        }
        let next: Vec<usize> = match &reachable {
            None => shape.mode_set,
            Some(prev) => shape
                .mode_set
                .into_iter()
                .filter(|&m| prev.iter().any(|&q| m == q || m == q + 1))
                .collect(),
        };
        if next.is_empty() {
            return Ok(false);
        }
        reachable = Some(next);
    }
    Ok(true)
}

/// Mode set next to the floor and ceiling of the average dominating-set size.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ModeAvdReport {
    pub mode_set: Vec<usize>,
    #[serde(serialize_with = "crate::report::serialize_rational")]
    pub avd: BigRational,
    pub avd_floor: usize,
    pub avd_ceil: usize,
    pub agree: bool,
}

pub fn mode_vs_avd(p: &DominationProfile) -> Result<ModeAvdReport> {
    if p.order() == 0 {
        return Err(Error::EmptyGraph);
    }
    let shape = analyze_shape(p.poly())?;
    let avd = avd_from_poly(p.poly())?;
    let (lo, hi) = floor_ceil(&avd);
    let agree = shape.mode_set.iter().any(|&m| m == lo || m == hi);
    Ok(ModeAvdReport { mode_set: shape.mode_set, avd, avd_floor: lo, avd_ceil: hi, agree })
}

/// Whether `avd` lies in `[n/2, (n+1)/2]`.
pub fn avd_in_half_window(p: &DominationProfile) -> Result<bool> {
    let n = p.order();
    let avd = avd_from_poly(p.poly())?;
    Ok(avd >= ratio(n, 2) && avd <= ratio(n + 1, 2))
}

/// `d_{i+1} (i+1) >= d_i (n-i)` for all `i < n`; `None` when it holds.
pub fn counting_inequality_violation(p: &DominationProfile) -> Option<usize> {
    let n = p.order();
    (0..n).find(|&i| p.d(i + 1) * BigUint::from(i + 1) < p.d(i) * BigUint::from(n - i))
}

/// First `i` with `r_{i+1} < r_i`, if any.
pub fn ratio_monotonicity_violation(p: &DominationProfile) -> Option<usize> {
    let r = p.ratios();
    (0..r.len().saturating_sub(1)).find(|&i| r[i + 1] < r[i])
}

/// First `i` with `r_i` below [`r_lower_bound`].
pub fn r_lower_bound_violation(p: &DominationProfile, delta: usize) -> Result<Option<usize>> {
    let n = p.order();
    let r = p.ratios();
    for (i, ri) in r.iter().enumerate() {
        if *ri < r_lower_bound(n, delta, i)? {
            return Ok(Some(i));
        }
    }
    Ok(None)
}

/// Structural invariants every domination profile must satisfy.
pub fn profile_invariant_violations(p: &DominationProfile) -> Vec<String> {
    let n = p.order();
    let d = p.coeffs();
    let mut out = Vec::new();
    if n >= 1 && d[n] != BigUint::one() {
        out.push(format!("d_n = {} != 1", d[n]));
    }
    if (n == 0) != (d[0] == BigUint::one()) || d[0] > BigUint::one() {
        out.push(format!("d_0 = {} for n = {n}", d[0]));
    }
    if let Some(i) = (p.gamma()..=n).find(|&i| d[i].is_zero()) {
        out.push(format!("support gap at {i}"));
    }
    if let Some(i) = counting_inequality_violation(p) {
        out.push(format!("(i+1) d_(i+1) < (n-i) d_i at i = {i}"));
    }
    if let Some(i) = ratio_monotonicity_violation(p) {
        out.push(format!("r_(i+1) < r_i at i = {i}"));
    }
    if !lower_half_check(p).verified {
        out.push("d_i > d_(i+1) below n/2".into());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domination::{brute_force_profile, complete_profile, EnumConfig, RecurrenceFamily};
    use crate::fixtures;
    use crate::graph::FamilySpec;

    fn fig1_profile() -> DominationProfile {
        DominationProfile::from_u64s(9, &fixtures::NON_LC_POLY).unwrap()
    }

    fn fig1_graph() -> Graph {
        Graph::from_edge_list(9, &fixtures::NON_LC_EDGES).unwrap()
    }

    #[test]
    fn ratio_tail_examples() {
        let k16 = complete_profile(16).unwrap();
        let c = ratio_tail_certificate(&k16, 8).unwrap();
        assert!(c.applicable && c.verified);
        assert_eq!(analyze_shape(k16.poly()).unwrap().mode_max, 8);

        let c = ratio_tail_certificate(&fig1_profile(), 5).unwrap();
        assert!(c.applicable && c.verified);
        assert_eq!(c.details["r_k"], json!({"num": "89", "den": "126"}));

        let p4 = DominationProfile::from_u64s(4, &[0, 0, 4, 4, 1]).unwrap();
        // r_2 = 4/6 meets the threshold 2/3 exactly.
        assert!(ratio_tail_certificate(&p4, 2).unwrap().applicable);
        let c6 = DominationProfile::from_u64s(6, &[0, 0, 3, 14, 15, 6, 1]).unwrap();
        let c = ratio_tail_certificate(&c6, 3).unwrap();
        // r_3 = 14/20 < 3/4
        assert!(!c.applicable && !c.verified);
        assert_eq!(ratio_tail_certificate(&c6, 2), Err(Error::IndexBelowHalf { k: 2, n: 6 }));
    }

    #[test]
    fn min_degree_examples() {
        assert!(min_degree_condition_holds(&FamilySpec::Complete(16).generate().unwrap()));
        assert!(!min_degree_condition_holds(&fig1_graph()));
        assert!(min_degree_condition_holds(&FamilySpec::Complete(1).generate().unwrap()));
        assert!(!min_degree_condition_holds(&Graph::empty(0).unwrap()));
        // Boundary 2^delta = n^2.
        assert!(min_degree_condition(16, 8));
        assert!(!min_degree_condition(16, 7));
    }

    #[test]
    fn min_degree_condition_matches_float_form() {
        for n in 1..=64usize {
            for delta in 0..=63usize {
                let float = delta as f64 >= 2.0 * (n as f64).log2();
                assert_eq!(min_degree_condition(n, delta), float, "n={n} delta={delta}");
            }
        }
    }

    #[test]
    fn bound_functions() {
        for n in 1..=40usize {
            assert_eq!(r_lower_bound(n, 3, n).unwrap(), BigRational::one());
            assert_eq!(g_threshold(n, n).unwrap(), BigRational::zero());
            if n % 2 == 0 {
                let g = g_threshold(n, n / 2).unwrap();
                assert_eq!(g, ratio(n, n + 2));
                let lhs = BigRational::one() - ratio(2, n + 2);
                assert!(lhs <= BigRational::one() - ratio(1, 2 * n));
            }
        }
        // delta = 2 log2 n exactly when n is a power of two.
        for n in [2usize, 4, 8, 16, 32] {
            let delta = 2 * n.trailing_zeros() as usize;
            assert_eq!(
                r_lower_bound(n, delta, n / 2).unwrap(),
                BigRational::one() - ratio(1, 2 * n)
            );
        }
        assert_eq!(r_lower_bound(0, 0, 0), Err(Error::EmptyGraph));
    }

    #[test]
    fn r_bound_monotone_in_index_and_degree() {
        for n in 1..=14usize {
            for delta in 0..n {
                for i in 0..=n {
                    let f = r_lower_bound(n, delta, i).unwrap();
                    if i < n {
                        assert!(f <= r_lower_bound(n, delta, i + 1).unwrap());
                    }
                    assert!(f <= r_lower_bound(n, delta + 1, i).unwrap());
                }
            }
        }
    }

    #[test]
    fn chain_of_ratios() {
        for n in 2..=20usize {
            for delta in 0..n {
                for i in 0..=n - delta - 1 {
                    for k in 0..delta {
                        let a = ratio(n - i - k, n - k);
                        let b = ratio(n - i - k - 1, n - k - 1);
                        assert!(a >= b);
                    }
                }
            }
        }
    }

    #[test]
    fn r_bound_holds_on_computed_profiles() {
        for seed in 0..40u64 {
            let n = 5 + (seed as usize % 10);
            let g = FamilySpec::ErdosRenyi { n, p: num_rational::Ratio::new(3, 5), seed }.generate().unwrap();
            let p = brute_force_profile(&g, &EnumConfig::default()).unwrap();
            let delta = g.min_degree().unwrap();
            assert_eq!(r_lower_bound_violation(&p, delta).unwrap(), None);
        }
    }

    #[test]
    fn lower_half_examples() {
        assert!(lower_half_check(&DominationProfile::from_u64s(4, &[0, 0, 4, 4, 1]).unwrap()).verified);
        assert!(lower_half_check(&fig1_profile()).verified);
        assert!(lower_half_check(&DominationProfile::from_u64s(2, &[0, 0, 1]).unwrap()).verified);
        let fake = DominationProfile::from_u64s(4, &[0, 3, 2, 4, 1]).unwrap();
        let c = lower_half_check(&fake);
        assert!(!c.verified);
        assert_eq!(c.details["violation_at"], json!(1));
    }

    #[test]
    fn mode_progression_examples() {
        for fam in [RecurrenceFamily::Path, RecurrenceFamily::Cycle, RecurrenceFamily::LGraph] {
            let seq = fam.sequence(fam.min_order() + 3).unwrap();
            assert!(mode_progression_check(&seq).unwrap());
            assert!(mode_progression_check(&fam.sequence(40).unwrap()).unwrap());
        }
        let short = RecurrenceFamily::Path.sequence(3).unwrap();
        assert!(mode_progression_check(&short).is_err());
        // Modes 1, 1, 3: jump of two.
        let bad = RecurrenceSeq {
            start_index: 0,
            polys: [&[0u64, 2, 1][..], &[0, 2, 1], &[0, 1, 2, 3], &[0, 1, 2, 3]]
                .iter()
                .map(|c| CoeffSeq::from_u64s(c))
                .collect(),
        };
        assert!(!mode_progression_check(&bad).unwrap());
    }

    #[test]
    fn tail_examples() {
        assert!(tail_nonincreasing_check(&fig1_profile(), true).verified);
        assert!(tail_nonincreasing_check(&complete_profile(16).unwrap(), true).verified);
        let c = tail_nonincreasing_check(&fig1_profile(), false);
        assert!(!c.applicable && !c.verified);
        for seed in 0..30u64 {
            let g = FamilySpec::ErdosRenyi { n: 12, p: num_rational::Ratio::new(1, 3), seed }.generate().unwrap();
            if g.has_isolated_vertex() {
                continue;
            }
            let p = brute_force_profile(&g, &EnumConfig::default()).unwrap();
            assert!(tail_nonincreasing_check(&p, true).verified, "seed {seed}");
        }
    }

    #[test]
    fn universal_vertex_examples() {
        let k1 = FamilySpec::Complete(1).generate().unwrap();
        let f2 = k1.join(&FamilySpec::MatchingUnion(2).generate().unwrap()).unwrap();
        let p = brute_force_profile(&f2, &EnumConfig::default()).unwrap();
        assert!(universal_vertex_ratio_check(&f2, &p).unwrap().verified);
        let k7 = FamilySpec::Complete(7).generate().unwrap();
        let c = universal_vertex_ratio_check(&k7, &complete_profile(7).unwrap()).unwrap();
        assert!(c.verified);
        let p4 = FamilySpec::Path(4).generate().unwrap();
        let prof = brute_force_profile(&p4, &EnumConfig::default()).unwrap();
        assert_eq!(universal_vertex_ratio_check(&p4, &prof), Err(Error::NoUniversalVertex));
    }

    #[test]
    fn mode_avd_examples() {
        let k1 = mode_vs_avd(&complete_profile(1).unwrap()).unwrap();
        assert!(k1.agree);
        assert_eq!(k1.avd, BigRational::one());
        let p4 = mode_vs_avd(&DominationProfile::from_u64s(4, &[0, 0, 4, 4, 1]).unwrap()).unwrap();
        assert_eq!((p4.avd_floor, p4.avd_ceil), (2, 3));
        assert!(p4.agree);
        let k16 = mode_vs_avd(&complete_profile(16).unwrap()).unwrap();
        assert_eq!(k16.avd, ratio(16u64 * 32768, 65535u64));
        assert_eq!((k16.avd_floor, k16.avd_ceil), (8, 9));
        assert!(k16.agree);
    }

    #[test]
    fn invariants_on_profiles() {
        assert!(profile_invariant_violations(&fig1_profile()).is_empty());
        let fake = DominationProfile::from_u64s(3, &[0, 3, 0, 1]).unwrap();
        assert!(!profile_invariant_violations(&fake).is_empty());
    }
}
