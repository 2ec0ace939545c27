//! Published reference values: the small-order tables for paths, cycles and
//! `L_n`, and the smallest graph whose domination polynomial is not
//! log-concave.

/// One table row: order, coefficients `d_0..d_n`, reported mode.
#[derive(Debug, Clone, Copy)]
pub struct GoldenRow {
    pub n: usize,
    pub coeffs: &'static [u64],
    pub mode: usize,
}

pub const PATHS: [GoldenRow; 4] = [
    GoldenRow { n: 1, coeffs: &[0, 1], mode: 1 },
    GoldenRow { n: 2, coeffs: &[0, 2, 1], mode: 1 },
    GoldenRow { n: 3, coeffs: &[0, 1, 3, 1], mode: 2 },
    GoldenRow { n: 4, coeffs: &[0, 0, 4, 4, 1], mode: 3 },
];

pub const CYCLES: [GoldenRow; 4] = [
    GoldenRow { n: 3, coeffs: &[0, 3, 3, 1], mode: 2 },
    GoldenRow { n: 4, coeffs: &[0, 0, 6, 4, 1], mode: 2 },
    GoldenRow { n: 5, coeffs: &[0, 0, 5, 10, 5, 1], mode: 3 },
    GoldenRow { n: 6, coeffs: &[0, 0, 3, 14, 15, 6, 1], mode: 4 },
];

pub const L_GRAPHS: [GoldenRow; 4] = [
    GoldenRow { n: 4, coeffs: &[0, 1, 5, 4, 1], mode: 2 },
    GoldenRow { n: 5, coeffs: &[0, 0, 6, 9, 5, 1], mode: 3 },
    GoldenRow { n: 6, coeffs: &[0, 0, 4, 14, 14, 6, 1], mode: 4 },
    GoldenRow { n: 7, coeffs: &[0, 0, 1, 15, 27, 20, 7, 1], mode: 4 },
];

/// Edges of the order-9 non-log-concave graph, 0-based.
pub const NON_LC_EDGES: [(usize, usize); 12] = [
    (0, 1), (1, 2), (1, 3), (2, 4), (2, 6), (3, 5),
    (3, 7), (4, 5), (4, 8), (5, 8), (6, 8), (7, 8),
];

/// Its graph6 encoding.
pub const NON_LC_GRAPH6: &str = "HiGX?_N";

/// Its domination polynomial, `d_0..d_9`.
pub const NON_LC_POLY: [u64; 10] = [0, 0, 1, 7, 50, 89, 75, 35, 9, 1];
