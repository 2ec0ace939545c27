//! Domination polynomials: exhaustive enumeration, the three-term
//! contraction recurrence for graphs with simple 3-paths, and the closed form
//! for complete multipartite graphs.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::fixtures::{self, GoldenRow};
use crate::graph::{full_mask, Graph};
use crate::poly::{poly_add, CoeffSeq};

/// Default largest order accepted by the exhaustive enumerator.
pub const DEFAULT_CAP: usize = 26;

/// Low-half width of the split enumeration tables.
const LOW_BITS: usize = 16;

/// Settings for exhaustive enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumConfig {
    pub cap: usize,
    /// Worker threads; `None` uses the global pool, `Some(1)` runs inline.
    pub threads: Option<usize>,
}

impl Default for EnumConfig {
    fn default() -> Self {
        Self { cap: DEFAULT_CAP, threads: None }
    }
}

impl EnumConfig {
    pub fn serial() -> Self {
        Self { threads: Some(1), ..Self::default() }
    }
}

/// `d_i(G)` for every `i`, plus derived quantities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DominationProfile {
    n: usize,
    d: CoeffSeq,
    gamma: usize,
}

impl DominationProfile {
    /// Wraps a coefficient sequence for a graph of order `n`.
    pub fn new(n: usize, d: CoeffSeq) -> Result<Self> {
        let deg = d.degree().ok_or(Error::ZeroPolynomial)?;
        if deg > n {
            return Err(Error::InvalidParameter(format!(
                "degree {deg} exceeds graph order {n}"
            )));
        }
        let gamma = d.coeffs().iter().position(|c| !c.is_zero()).expect("nonzero");
        let mut coeffs = d.normalized().to_vec();
        coeffs.resize(n + 1, BigUint::zero());
        Ok(Self { n, d: CoeffSeq::new(coeffs), gamma })
    }

    pub fn from_u64s(n: usize, d: &[u64]) -> Result<Self> {
        Self::new(n, CoeffSeq::from_u64s(d))
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// Domination number.
    pub fn gamma(&self) -> usize {
        self.gamma
    }

    /// `d_i`; zero beyond `n`.
    pub fn d(&self, i: usize) -> BigUint {
        self.d.coeff(i)
    }

    /// The coefficients `d_0..d_n` (always `n + 1` entries).
    pub fn coeffs(&self) -> &[BigUint] {
        self.d.coeffs()
    }

    pub fn poly(&self) -> &CoeffSeq {
        &self.d
    }

    pub fn into_poly(self) -> CoeffSeq {
        self.d
    }

    /// `r_i = d_i / C(n, i)`.
    pub fn ratio(&self, i: usize) -> BigRational {
        let binom = CoeffSeq::binomial_row(self.n).coeff(i);
        BigRational::new(BigInt::from(self.d(i)), BigInt::from(binom))
    }

    /// `r_0..r_n`, each in lowest terms.
    pub fn ratios(&self) -> Vec<BigRational> {
        let row = CoeffSeq::binomial_row(self.n);
        (0..=self.n)
            .map(|i| BigRational::new(BigInt::from(self.d(i)), BigInt::from(row.coeff(i))))
            .collect()
    }
}

pub fn profile_to_poly(p: &DominationProfile) -> CoeffSeq {
    p.poly().clone()
}

pub fn ratios(p: &DominationProfile) -> Vec<BigRational> {
    p.ratios()
}

/// `table[mask]` = union of `closed[v]` over the bits of `mask`.
fn span_table(closed: &[u64]) -> Vec<u64> {
    let mut table = vec![0u64; 1 << closed.len()];
    for mask in 1..table.len() {
        let v = mask.trailing_zeros() as usize;
        table[mask] = table[mask & (mask - 1)] | closed[v];
    }
    table
}

/// Counts, by cardinality, the low subsets that complete `covered` to `full`.
#[inline]
fn count_block(low: &[u64], covered: u64, full: u64, offset: usize, counts: &mut [u64]) {
    let need = full & !covered;
    for (mask, &dom) in low.iter().enumerate() {
        if dom & need == need {
            counts[offset + (mask as u32).count_ones() as usize] += 1;
        }
    }
}

/// Counts dominating sets by size on the calling thread.
pub(crate) fn dominating_counts_serial(g: &Graph) -> Vec<u64> {
    let n = g.order();
    let closed = g.closed_neighborhoods();
    let l = n.min(LOW_BITS);
    let low = span_table(&closed[..l]);
    let high = span_table(&closed[l..]);
    let full = full_mask(n);
    let mut counts = vec![0u64; n + 1];
    for (hmask, &covered) in high.iter().enumerate() {
        count_block(&low, covered, full, (hmask as u32).count_ones() as usize, &mut counts);
    }
    counts
}

fn dominating_counts_parallel(g: &Graph) -> Vec<u64> {
    let n = g.order();
    let closed = g.closed_neighborhoods();
    let l = n.min(LOW_BITS);
    let low = span_table(&closed[..l]);
    let high = span_table(&closed[l..]);
    let full = full_mask(n);
    high.par_iter()
        .enumerate()
        .fold(
            || vec![0u64; n + 1],
            |mut counts, (hmask, &covered)| {
                count_block(&low, covered, full, (hmask as u32).count_ones() as usize, &mut counts);
                counts
            },
        )
        .reduce(
            || vec![0u64; n + 1],
            |mut a, b| {
                a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                a
            },
        )
}

/// Exhaustive count of dominating sets by cardinality.
///
/// The vertex set is split into a low block (up to 16 vertices) and a high
/// block; the closed-neighbourhood union of every subset of each block is
/// tabulated, and each pair of subsets is tested with a single mask
/// comparison. High-block subsets are independent and are sharded across
/// threads; the merge is coefficient-wise addition, so the result does not
/// depend on the thread count.
pub fn brute_force_profile(g: &Graph, cfg: &EnumConfig) -> Result<DominationProfile> {
    let n = g.order();
    if n > cfg.cap || n > 40 {
        return Err(Error::CapExceeded { order: n, cap: cfg.cap.min(40) });
    }
    let counts = match cfg.threads {
        Some(1) => dominating_counts_serial(g),
        _ if n <= LOW_BITS + 2 => dominating_counts_serial(g),
        None => dominating_counts_parallel(g),
        Some(t) => rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build()
            .map_err(|e| Error::InvalidParameter(e.to_string()))?
            .install(|| dominating_counts_parallel(g)),
    };
    DominationProfile::from_u64s(n, &counts)
}

/// A sequence `f_s, f_{s+1}, ...` closed under `f_n = x(f_{n-1} + f_{n-2} + f_{n-3})`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecurrenceSeq {
    pub start_index: usize,
    pub polys: Vec<CoeffSeq>,
}

impl RecurrenceSeq {
    /// `f_n`, if it lies in the computed range.
    pub fn get(&self, n: usize) -> Option<&CoeffSeq> {
        n.checked_sub(self.start_index).and_then(|k| self.polys.get(k))
    }

    pub fn end_index(&self) -> usize {
        self.start_index + self.polys.len() - 1
    }

    /// Appends `steps` further terms.
    pub fn extend(&mut self, steps: usize) {
        for _ in 0..steps {
            let k = self.polys.len();
            let sum = poly_add(&self.polys[k - 1], &poly_add(&self.polys[k - 2], &self.polys[k - 3]));
            self.polys.push(sum.shift_by_x());
        }
    }
}

/// Extends three (or more) consecutive base polynomials, the first being
/// `f_{start_index}`, by `steps` terms of the recurrence.
pub fn recurrence_extend(base: &[CoeffSeq], start_index: usize, steps: usize) -> Result<RecurrenceSeq> {
    if base.len() < 3 {
        return Err(Error::RecurrenceBase(base.len()));
    }
    let mut seq = RecurrenceSeq { start_index, polys: base.to_vec() };
    seq.extend(steps);
    Ok(seq)
}

/// Families whose domination polynomials follow the recurrence.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RecurrenceFamily {
    Path,
    Cycle,
    LGraph,
}

impl RecurrenceFamily {
    /// The reference rows used as the base of the recurrence.
    pub fn golden_rows(self) -> &'static [GoldenRow; 4] {
        match self {
            RecurrenceFamily::Path => &fixtures::PATHS,
            RecurrenceFamily::Cycle => &fixtures::CYCLES,
            RecurrenceFamily::LGraph => &fixtures::L_GRAPHS,
        }
    }

    pub fn min_order(self) -> usize {
        self.golden_rows()[0].n
    }

    /// Base of three consecutive members, starting at [`Self::min_order`].
    pub fn base(self) -> RecurrenceSeq {
        let rows = self.golden_rows();
        RecurrenceSeq {
            start_index: rows[0].n,
            polys: rows[..3].iter().map(|r| CoeffSeq::from_u64s(r.coeffs)).collect(),
        }
    }

    /// Members `min_order..=max_n`.
    pub fn sequence(self, max_n: usize) -> Result<RecurrenceSeq> {
        let mut seq = self.base();
        if max_n < seq.start_index {
            return Err(Error::InvalidFamily(format!(
                "order {max_n} below the family minimum {}",
                seq.start_index
            )));
        }
        if max_n > seq.end_index() {
            seq.extend(max_n - seq.end_index());
        } else {
            seq.polys.truncate(max_n - seq.start_index + 1);
        }
        Ok(seq)
    }

    pub fn profile(self, n: usize) -> Result<DominationProfile> {
        let seq = self.sequence(n)?;
        DominationProfile::new(n, seq.get(n).expect("in range").clone())
    }
}

/// Checks `D(G) = x (D(G/u) + D(G/u/v) + D(G/u/v/w))` by enumeration,
/// following the labels of `v` and `w` through each deletion-shift.
pub fn simple3path_identity_check(
    g: &Graph,
    (u, v, w): (usize, usize, usize),
    cfg: &EnumConfig,
) -> Result<bool> {
    if !g.is_simple_3path(u, v, w) {
        return Err(Error::NotSimple3Path(u, v, w));
    }
    let shift = |x: usize, removed: usize| if x > removed { x - 1 } else { x };
    let g_u = g.contract(u)?;
    let (v1, w1) = (shift(v, u), shift(w, u));
    let g_uv = g_u.contract(v1)?;
    let w2 = shift(w1, v1);
    let g_uvw = g_uv.contract(w2)?;

    let lhs = brute_force_profile(g, cfg)?.into_poly();
    let parts = [&g_u, &g_uv, &g_uvw]
        .into_iter()
        .map(|h| brute_force_profile(h, cfg).map(DominationProfile::into_poly))
        .collect::<Result<Vec<_>>>()?;
    let rhs = poly_add(&parts[0], &poly_add(&parts[1], &parts[2])).shift_by_x();
    Ok(lhs == rhs)
}

/// Closed form for `K_{n_1,...,n_k}`: every dependent set dominates, and the
/// only independent dominating sets are whole parts, so
/// `d_i = C(n,i) - sum_j C(n_j,i) + #{j : n_j = i}` for `i >= 1`, `d_0 = 0`.
pub fn multipartite_profile(parts: &[usize]) -> Result<DominationProfile> {
    if parts.is_empty() {
        return Err(Error::InvalidPartition("empty part list".into()));
    }
    if parts.contains(&0) {
        return Err(Error::InvalidPartition("zero part size".into()));
    }
    let n: usize = parts.iter().sum();
    if n > crate::graph::MAX_ORDER {
        return Err(Error::OrderOverflow(n));
    }
    let total = CoeffSeq::binomial_row(n);
    let mut d: Vec<BigInt> = total.coeffs().iter().cloned().map(BigInt::from).collect();
    d[0] = BigInt::zero();
    for &size in parts {
        let row = CoeffSeq::binomial_row(size);
        for (i, c) in row.coeffs().iter().enumerate().skip(1) {
            d[i] -= BigInt::from(c.clone());
        }
        d[size] += BigInt::one();
    }
    let coeffs = d
        .into_iter()
        .map(|c| c.to_biguint().expect("dominating-set counts are non-negative"))
        .collect();
    DominationProfile::new(n, CoeffSeq::new(coeffs))
}

/// `D(K_n) = (1 + x)^n - 1`.
pub fn complete_profile(n: usize) -> Result<DominationProfile> {
    if n == 0 {
        return DominationProfile::new(0, CoeffSeq::one());
    }
    multipartite_profile(&vec![1; n])
}
