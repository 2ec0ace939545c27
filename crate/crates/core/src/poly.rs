//! Dense polynomials with non-negative arbitrary-precision coefficients and
//! coefficient-sequence shape analysis.

use std::fmt;
use std::ops::Add;

use num_bigint::BigUint;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};

/// Coefficients `a_0, a_1, ..., a_d`, index = degree.
///
/// Trailing zeros may be stored; equality compares normalized forms.
#[derive(Clone, Default)]
pub struct CoeffSeq {
    coeffs: Vec<BigUint>,
}

impl CoeffSeq {
    pub fn new(coeffs: Vec<BigUint>) -> Self {
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_u64s(&[1])
    }

    pub fn from_u64s(coeffs: &[u64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigUint::from(c)).collect())
    }

    /// `(1 + x)^n`.
    pub fn binomial_row(n: usize) -> Self {
        let mut row = vec![BigUint::from(1u32)];
        for k in 0..n {
            let next = &row[k] * BigUint::from(n - k) / BigUint::from(k + 1);
            row.push(next);
        }
        Self::new(row)
    }

    /// Stored coefficients, possibly with trailing zeros.
    pub fn coeffs(&self) -> &[BigUint] {
        &self.coeffs
    }

    /// Coefficient of `x^i`; zero beyond the stored range.
    pub fn coeff(&self, i: usize) -> BigUint {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    fn normalized_len(&self) -> usize {
        self.coeffs.iter().rposition(|c| !c.is_zero()).map_or(0, |i| i + 1)
    }

    /// Coefficients with trailing zeros removed.
    pub fn normalized(&self) -> &[BigUint] {
        &self.coeffs[..self.normalized_len()]
    }

    pub fn is_zero(&self) -> bool {
        self.normalized_len() == 0
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.normalized_len().checked_sub(1)
    }

    /// Multiplies by `x`.
    pub fn shift_by_x(&self) -> Self {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(BigUint::zero());
        coeffs.extend(self.coeffs.iter().cloned());
        Self::new(coeffs)
    }

    /// Value at `x = 1`.
    pub fn sum(&self) -> BigUint {
        self.coeffs.iter().sum()
    }

    /// Value of the derivative at `x = 1`.
    pub fn derivative_at_one(&self) -> BigUint {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| c * BigUint::from(i))
            .sum()
    }

    pub fn to_decimal_strings(&self) -> Vec<String> {
        self.normalized().iter().map(|c| c.to_str_radix(10)).collect()
    }

    /// Coefficients as `u64`, when they all fit.
    pub fn to_u64s(&self) -> Option<Vec<u64>> {
        self.normalized().iter().map(|c| c.to_u64()).collect()
    }

    pub fn shape(&self) -> Result<ShapeReport> {
        analyze_shape(self)
    }

    pub fn avd(&self) -> Result<BigRational> {
        avd_from_poly(self)
    }
}

impl PartialEq for CoeffSeq {
    fn eq(&self, other: &Self) -> bool {
        self.normalized() == other.normalized()
    }
}

impl Eq for CoeffSeq {}

impl fmt::Debug for CoeffSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.normalized().iter().map(|c| c.to_string())).finish()
    }
}

/// Human-readable form, highest degree first, e.g. `x^4 + 4x^3 + 4x^2`.
impl fmt::Display for CoeffSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .normalized()
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| {
                let one = *c == BigUint::from(1u32);
                match (i, one) {
                    (0, _) => c.to_string(),
                    (1, true) => "x".to_string(),
                    (1, false) => format!("{c}x"),
                    (_, true) => format!("x^{i}"),
                    (_, false) => format!("{c}x^{i}"),
                }
            })
            .collect();
        if terms.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&terms.join(" + "))
        }
    }
}

impl Add for &CoeffSeq {
    type Output = CoeffSeq;

    fn add(self, rhs: &CoeffSeq) -> CoeffSeq {
        poly_add(self, rhs)
    }
}

/// Coefficient-wise sum.
pub fn poly_add(p: &CoeffSeq, q: &CoeffSeq) -> CoeffSeq {
    let (long, short) = if p.coeffs.len() >= q.coeffs.len() { (p, q) } else { (q, p) };
    let mut coeffs = long.coeffs.clone();
    for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
        *c += s;
    }
    CoeffSeq::new(coeffs)
}

pub fn shift_by_x(p: &CoeffSeq) -> CoeffSeq {
    p.shift_by_x()
}

/// Shape of a coefficient sequence over the index range `0..=deg`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ShapeReport {
    pub unimodal: bool,
    /// All indices attaining the maximum coefficient, ascending.
    pub mode_set: Vec<usize>,
    /// Largest maximizing index; the scalar mode reported in tables.
    pub mode_max: usize,
    pub logconcave: bool,
    /// Smallest interior `i` with `a_i^2 < a_{i-1} a_{i+1}`.
    pub lc_witness: Option<usize>,
    /// Smallest `t` with `a_t >= a_{t+1} >= ... >= a_d`.
    pub tail_from: usize,
}

pub fn analyze_shape(p: &CoeffSeq) -> Result<ShapeReport> {
    let a = p.normalized();
    if a.is_empty() {
        return Err(Error::ZeroPolynomial);
    }
    let d = a.len() - 1;

    let mut i = 0;
    while i < d && a[i] <= a[i + 1] {
        i += 1;
    }
    while i < d && a[i] >= a[i + 1] {
        i += 1;
    }
    let unimodal = i == d;

    let max = a.iter().max().expect("nonempty");
    let mode_set: Vec<usize> = (0..=d).filter(|&i| &a[i] == max).collect();
    let mode_max = *mode_set.last().expect("max is attained");

    let lc_witness = (1..d).find(|&i| &a[i] * &a[i] < &a[i - 1] * &a[i + 1]);

    let mut tail_from = d;
    while tail_from > 0 && a[tail_from - 1] >= a[tail_from] {
        tail_from -= 1;
    }

    Ok(ShapeReport {
        unimodal,
        mode_set,
        mode_max,
        logconcave: lc_witness.is_none(),
        lc_witness,
        tail_from,
    })
}

/// Average index weighted by coefficient: `p'(1) / p(1)`, in lowest terms.
pub fn avd_from_poly(p: &CoeffSeq) -> Result<BigRational> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    Ok(BigRational::new(
        p.derivative_at_one().into(),
        p.sum().into(),
    ))
}

/// Floor and ceiling of a non-negative rational as machine integers.
pub fn floor_ceil(r: &BigRational) -> (usize, usize) {
    let (q, rem) = r.numer().div_rem(r.denom());
    let q = q.to_usize().expect("small non-negative rational");
    if rem.is_zero() {
        (q, q)
    } else {
        (q, q + 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn seq(c: &[u64]) -> CoeffSeq {
        CoeffSeq::from_u64s(c)
    }

    /// Tries every candidate peak index.
    fn unimodal_brute(a: &[u64]) -> bool {
        (0..a.len()).any(|k| {
            a[..=k].windows(2).all(|w| w[0] <= w[1]) && a[k..].windows(2).all(|w| w[0] >= w[1])
        })
    }

    #[test]
    fn add_and_shift() {
        let p1 = seq(&[0, 1]);
        let p2 = seq(&[0, 2, 1]);
        let p3 = seq(&[0, 1, 3, 1]);
        let p4 = shift_by_x(&poly_add(&p3, &poly_add(&p2, &p1)));
        assert_eq!(p4, seq(&[0, 0, 4, 4, 1]));
        assert_eq!(poly_add(&p3, &CoeffSeq::zero()), p3);
        assert_eq!(shift_by_x(&CoeffSeq::one()), seq(&[0, 1]));
        assert_eq!(seq(&[1, 2, 0, 0]), seq(&[1, 2]));
        assert_eq!(p4.to_string(), "x^4 + 4x^3 + 4x^2");
    }

    #[test]
    fn shape_of_non_log_concave_example() {
        let r = analyze_shape(&seq(&[0, 0, 1, 7, 50, 89, 75, 35, 9, 1])).unwrap();
        assert!(r.unimodal);
        assert_eq!(r.mode_set, vec![5]);
        assert_eq!(r.mode_max, 5);
        assert!(!r.logconcave);
        assert_eq!(r.lc_witness, Some(3));
        assert_eq!(r.tail_from, 5);
    }

    #[test]
    fn shape_with_tied_mode() {
        let r = analyze_shape(&seq(&[0, 0, 4, 4, 1])).unwrap();
        assert!(r.unimodal);
        assert_eq!(r.mode_set, vec![2, 3]);
        assert_eq!(r.mode_max, 3);
        assert_eq!(r.tail_from, 2);
    }

    #[test]
    fn shape_of_constant_and_errors() {
        let r = analyze_shape(&CoeffSeq::one()).unwrap();
        assert!(r.unimodal && r.logconcave);
        assert_eq!(r.mode_set, vec![0]);
        assert_eq!(analyze_shape(&CoeffSeq::zero()), Err(Error::ZeroPolynomial));
        assert_eq!(analyze_shape(&seq(&[0, 0])), Err(Error::ZeroPolynomial));
        let bimodal = analyze_shape(&seq(&[3, 1, 3])).unwrap();
        assert!(!bimodal.unimodal);
        assert_eq!(bimodal.mode_set, vec![0, 2]);
    }

    #[test]
    fn avd_values() {
        let half = |n: i64, d: i64| BigRational::new(n.into(), d.into());
        assert_eq!(avd_from_poly(&seq(&[0, 1])).unwrap(), half(1, 1));
        assert_eq!(avd_from_poly(&seq(&[0, 0, 4, 4, 1])).unwrap(), half(8, 3));
        assert_eq!(avd_from_poly(&seq(&[0, 3, 3, 1])).unwrap(), half(12, 7));
        assert_eq!(avd_from_poly(&CoeffSeq::zero()), Err(Error::ZeroPolynomial));
        assert_eq!(floor_ceil(&half(8, 3)), (2, 3));
        assert_eq!(floor_ceil(&half(4, 1)), (4, 4));
    }

    #[test]
    fn avd_of_binomial_rows() {
        for n in 0..=30usize {
            let avd = avd_from_poly(&CoeffSeq::binomial_row(n)).unwrap();
            assert_eq!(avd, BigRational::new(n.into(), 2.into()), "n = {n}");
        }
    }

    #[test]
    fn binomial_row_is_exact() {
        let row = CoeffSeq::binomial_row(70);
        assert_eq!(row.coeff(35).to_string(), "112186277816662845432");
        assert_eq!(row.sum(), BigUint::from(1u32) << 70);
    }

    proptest! {
        #[test]
        fn shape_agrees_with_brute_force(a in prop::collection::vec(0u64..6, 1..12)) {
            prop_assume!(a.iter().any(|&c| c > 0));
            let r = analyze_shape(&seq(&a)).unwrap();
            let mut trimmed = a.clone();
            while trimmed.last() == Some(&0) {
                trimmed.pop();
            }
            prop_assert_eq!(r.unimodal, unimodal_brute(&trimmed));
            let max = *trimmed.iter().max().unwrap();
            let modes: Vec<usize> = (0..trimmed.len()).filter(|&i| trimmed[i] == max).collect();
            prop_assert_eq!(&r.mode_set, &modes);
            if r.unimodal {
                prop_assert!(modes.windows(2).all(|w| w[1] == w[0] + 1));
            }
            let t = r.tail_from;
            prop_assert!(trimmed[t..].windows(2).all(|w| w[0] >= w[1]));
            prop_assert!(t == 0 || trimmed[t - 1] < trimmed[t]);
        }

        #[test]
        fn logconcave_positive_sequences_are_unimodal(
            start in 1u64..50,
            ratios in prop::collection::vec((1u64..8, 1u64..8), 0..10),
        ) {
            // Non-increasing successive ratios give a log-concave sequence.
            let mut ratios: Vec<(u64, u64)> = ratios;
            ratios.sort_by(|a, b| (b.0 * a.1).cmp(&(a.0 * b.1)));
            let mut a: Vec<BigUint> = vec![BigUint::from(start)];
            let denom_total: BigUint = ratios.iter().map(|r| BigUint::from(r.1)).product();
            a[0] *= &denom_total;
            for &(num, den) in &ratios {
                let next = a.last().unwrap() * BigUint::from(num) / BigUint::from(den);
                a.push(next);
            }
            prop_assume!(a.iter().all(|c| !c.is_zero()));
            let r = analyze_shape(&CoeffSeq::new(a)).unwrap();
            if r.logconcave {
                prop_assert!(r.unimodal);
            }
        }

        #[test]
        fn addition_laws(
            p in prop::collection::vec(0u64..1000, 0..8),
            q in prop::collection::vec(0u64..1000, 0..8),
            r in prop::collection::vec(0u64..1000, 0..8),
        ) {
            let (p, q, r) = (seq(&p), seq(&q), seq(&r));
            prop_assert_eq!(&p + &q, &q + &p);
            prop_assert_eq!(&(&p + &q) + &r, &p + &(&q + &r));
            prop_assert_eq!(shift_by_x(&(&p + &q)), &shift_by_x(&p) + &shift_by_x(&q));
        }
    }
}
