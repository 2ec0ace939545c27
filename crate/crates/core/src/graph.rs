//! Simple undirected graphs on at most 64 vertices.
//!
//! Neighbourhoods are stored as `u64` bitmasks, so vertex `v` is bit `v`.
//! Closed neighbourhoods `N[v]` are cached alongside the open ones and are
//! rebuilt by every constructor.

use std::fmt;
use std::io::BufRead;

use num_rational::Ratio;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

/// Largest supported order.
pub const MAX_ORDER: usize = 64;
/// Largest order representable in short-form graph6.
pub const GRAPH6_MAX_ORDER: usize = 62;
/// Name recorded in reports for the random source behind [`FamilySpec::ErdosRenyi`].
pub const RNG_NAME: &str = "ChaCha8Rng(rand_chacha 0.3, seed_from_u64)";

#[inline]
pub(crate) fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
    closed: Vec<u64>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_ORDER {
            return Err(Error::OrderOverflow(n));
        }
        Ok(Self::from_adj_unchecked(vec![0; n]))
    }

    fn from_adj_unchecked(adj: Vec<u64>) -> Self {
        let closed = adj.iter().enumerate().map(|(v, &a)| a | (1u64 << v)).collect();
        Self { n: adj.len(), adj, closed }
    }

    /// Builds a graph from explicit vertex pairs. Repeated edges collapse.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n > MAX_ORDER {
            return Err(Error::OrderOverflow(n));
        }
        let mut adj = vec![0u64; n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, order: n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        Ok(Self::from_adj_unchecked(adj))
    }

    /// Parses the edge-list text format: a header line `n m` followed by
    /// `m` lines of `u v` (0-based). Blank lines are skipped.
    pub fn parse_edge_list<R: BufRead>(reader: R) -> Result<Self> {
        let mut lines = reader
            .lines()
            .map(|l| l.map_err(|e| Error::EdgeList(e.to_string())))
            .filter(|l| l.as_ref().map_or(true, |s| !s.trim().is_empty()));
        let header = lines
            .next()
            .ok_or_else(|| Error::EdgeList("missing header line".into()))??;
        let (n, m) = parse_pair(&header)?;
        let mut edges = Vec::with_capacity(m);
        for _ in 0..m {
            let line = lines
                .next()
                .ok_or_else(|| Error::EdgeList(format!("expected {m} edges")))??;
            edges.push(parse_pair(&line)?);
        }
        if let Some(extra) = lines.next() {
            return Err(Error::EdgeList(format!("unexpected trailing line {:?}", extra?)));
        }
        Self::from_edge_list(n, &edges)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.count_ones() as usize).sum::<usize>() / 2
    }

    /// Open neighbourhood of `v` as a bitmask.
    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    /// Closed neighbourhood `N[v]` as a bitmask.
    pub fn closed_neighborhood(&self, v: usize) -> u64 {
        self.closed[v]
    }

    pub fn closed_neighborhoods(&self) -> &[u64] {
        &self.closed
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    /// Minimum degree. Undefined for the empty graph.
    pub fn min_degree(&self) -> Result<usize> {
        (0..self.n).map(|v| self.degree(v)).min().ok_or(Error::EmptyGraph)
    }

    pub fn has_isolated_vertex(&self) -> bool {
        self.adj.contains(&0)
    }

    /// Some vertex adjacent to every other vertex, if one exists.
    pub fn universal_vertex(&self) -> Option<usize> {
        (0..self.n).find(|&v| self.degree(v) + 1 == self.n)
    }

    /// Edges `(u, v)` with `u < v` in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            let higher = self.adj[u] & !full_mask(u + 1);
            BitIter(higher).map(move |v| (u, v))
        })
    }

    /// Disjoint union, `g` first.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.n + other.n;
        if n > MAX_ORDER {
            return Err(Error::OrderOverflow(n));
        }
        let shift = self.n;
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|&a| a << shift));
        Ok(Self::from_adj_unchecked(adj))
    }

    /// Join: disjoint union plus every edge between the two sides.
    pub fn join(&self, other: &Graph) -> Result<Graph> {
        let n = self.n + other.n;
        if n > MAX_ORDER {
            return Err(Error::OrderOverflow(n));
        }
        let left = full_mask(self.n);
        let right = full_mask(n) & !left;
        let mut adj: Vec<u64> = self.adj.iter().map(|&a| a | right).collect();
        adj.extend(other.adj.iter().map(|&a| (a << self.n) | left));
        Ok(Self::from_adj_unchecked(adj))
    }

    /// Corona: one copy of `other` per vertex of `self`, each base vertex
    /// joined to its own copy. Base vertices keep labels `0..n`; the copy
    /// for base vertex `v` occupies `n + v*m .. n + (v+1)*m`.
    pub fn corona(&self, other: &Graph) -> Result<Graph> {
        let (n, m) = (self.n, other.n);
        let total = n * (1 + m);
        if total > MAX_ORDER {
            return Err(Error::OrderOverflow(total));
        }
        let mut adj = vec![0u64; total];
        adj[..n].copy_from_slice(&self.adj);
        for v in 0..n {
            let offset = n + v * m;
            let copy = full_mask(m) << offset;
            adj[v] |= copy;
            for w in 0..m {
                adj[offset + w] = (other.adj[w] << offset) | (1 << v);
            }
        }
        Ok(Self::from_adj_unchecked(adj))
    }

    /// `G/u`: make every pair of neighbours of `u` adjacent, then delete `u`.
    /// Vertices above `u` shift down by one.
    pub fn contract(&self, u: usize) -> Result<Graph> {
        if u >= self.n {
            return Err(Error::VertexOutOfRange { vertex: u, order: self.n });
        }
        let nbrs = self.adj[u];
        let mut adj = self.adj.clone();
        for v in BitIter(nbrs) {
            adj[v] |= nbrs & !(1 << v);
        }
        adj.remove(u);
        let low = full_mask(u);
        let adj = adj
            .into_iter()
            .map(|a| (a & low) | ((a >> 1) & !low))
            .collect();
        Ok(Self::from_adj_unchecked(adj))
    }

    /// The induced subgraph obtained by deleting `u`, with deletion-shift relabelling.
    pub fn delete_vertex(&self, u: usize) -> Result<Graph> {
        if u >= self.n {
            return Err(Error::VertexOutOfRange { vertex: u, order: self.n });
        }
        let low = full_mask(u);
        let adj = (0..self.n)
            .filter(|&v| v != u)
            .map(|v| {
                let a = self.adj[v] & !(1 << u);
                (a & low) | ((a >> 1) & !low)
            })
            .collect();
        Ok(Self::from_adj_unchecked(adj))
    }

    /// Whether `(u, v, w)` are degree-2 vertices inducing the path `u-v-w`.
    pub fn is_simple_3path(&self, u: usize, v: usize, w: usize) -> bool {
        let n = self.n;
        u < n
            && v < n
            && w < n
            && u != v
            && v != w
            && u != w
            && [u, v, w].iter().all(|&x| self.degree(x) == 2)
            && self.has_edge(u, v)
            && self.has_edge(v, w)
            && !self.has_edge(u, w)
    }

    /// The lexicographically smallest simple 3-path `(u, v, w)`, if any.
    pub fn detect_simple_3path(&self) -> Option<(usize, usize, usize)> {
        let deg2: Vec<usize> = (0..self.n).filter(|&v| self.degree(v) == 2).collect();
        for &u in &deg2 {
            for &v in &deg2 {
                for &w in &deg2 {
                    if self.is_simple_3path(u, v, w) {
                        return Some((u, v, w));
                    }
                }
            }
        }
        None
    }

    /// Short-form graph6 encoding (n <= 62).
    pub fn to_graph6(&self) -> Result<String> {
        if self.n > GRAPH6_MAX_ORDER {
            return Err(Error::Graph6(format!(
                "order {} needs the long form, which is not supported",
                self.n
            )));
        }
        let mut out = String::with_capacity(1 + (self.n * self.n.saturating_sub(1) / 2).div_ceil(6));
        out.push((63 + self.n as u8) as char);
        let mut chunk = 0u8;
        let mut filled = 0;
        for j in 1..self.n {
            for i in 0..j {
                chunk = (chunk << 1) | self.has_edge(i, j) as u8;
                filled += 1;
                if filled == 6 {
                    out.push((chunk + 63) as char);
                    chunk = 0;
                    filled = 0;
                }
            }
        }
        if filled > 0 {
            out.push(((chunk << (6 - filled)) + 63) as char);
        }
        Ok(out)
    }

    /// Decodes one short-form graph6 line. Surrounding whitespace is ignored.
    pub fn parse_graph6(text: &str) -> Result<Graph> {
        let bytes = text.trim().as_bytes();
        let (&head, body) = bytes
            .split_first()
            .ok_or_else(|| Error::Graph6("empty input".into()))?;
        if head == 126 {
            return Err(Error::Graph6(
                "long-form header (n > 62) is not supported".into(),
            ));
        }
        if !(63..126).contains(&head) {
            return Err(Error::Graph6(format!("malformed header byte {head:#04x}")));
        }
        let n = (head - 63) as usize;
        let bits = n * n.saturating_sub(1) / 2;
        let need = bits.div_ceil(6);
        if body.len() < need {
            return Err(Error::Graph6(format!(
                "truncated body: expected {need} bytes, found {}",
                body.len()
            )));
        }
        if body.len() > need {
            return Err(Error::Graph6(format!(
                "trailing bytes: expected {need} body bytes, found {}",
                body.len()
            )));
        }
        if let Some(bad) = body.iter().find(|b| !(63..=126).contains(*b)) {
            return Err(Error::Graph6(format!("byte {bad:#04x} outside the printable range")));
        }
        let mut adj = vec![0u64; n];
        let mut k = 0;
        for j in 1..n {
            for i in 0..j {
                let byte = body[k / 6] - 63;
                if byte >> (5 - k % 6) & 1 == 1 {
                    adj[i] |= 1 << j;
                    adj[j] |= 1 << i;
                }
                k += 1;
            }
        }
        Ok(Self::from_adj_unchecked(adj))
    }
}

fn parse_pair(line: &str) -> Result<(usize, usize)> {
    let mut it = line.split_whitespace().map(|t| {
        t.parse::<usize>()
            .map_err(|e| Error::EdgeList(format!("{t:?}: {e}")))
    });
    match (it.next(), it.next(), it.next()) {
        (Some(a), Some(b), None) => Ok((a?, b?)),
        _ => Err(Error::EdgeList(format!("expected two integers, got {line:?}"))),
    }
}

/// Iterates the set bits of a mask from lowest to highest.
#[derive(Clone, Copy)]
pub(crate) struct BitIter(pub u64);

impl Iterator for BitIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }
}

/// Named graph families.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilySpec {
    Path(usize),
    Cycle(usize),
    /// A path on `n - 2` vertices with a `K_2` joined to one leaf.
    LGraph(usize),
    CompleteMultipartite(Vec<usize>),
    Complete(usize),
    /// `k` disjoint edges.
    MatchingUnion(usize),
    /// Each pair is an edge with probability `p`, drawn in lexicographic pair order.
    ErdosRenyi { n: usize, p: Ratio<u64>, seed: u64 },
}

impl FamilySpec {
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidFamily(msg));
        let order = match self {
            FamilySpec::Path(n) | FamilySpec::Complete(n) if *n == 0 => {
                return bad("order must be at least 1".into())
            }
            FamilySpec::Cycle(n) if *n < 3 => return bad(format!("cycle needs n >= 3, got {n}")),
            FamilySpec::LGraph(n) if *n < 4 => return bad(format!("L graph needs n >= 4, got {n}")),
            FamilySpec::CompleteMultipartite(parts) => {
                if parts.is_empty() {
                    return bad("part list is empty".into());
                }
                if parts.contains(&0) {
                    return bad("part sizes must be positive".into());
                }
                parts.iter().sum()
            }
            FamilySpec::ErdosRenyi { n, p, .. } => {
                if *p.denom() == 0 || p.numer() > p.denom() {
                    return bad(format!("edge probability {p} outside [0, 1]"));
                }
                *n
            }
            FamilySpec::MatchingUnion(k) => 2 * k,
            FamilySpec::Path(n)
            | FamilySpec::Cycle(n)
            | FamilySpec::LGraph(n)
            | FamilySpec::Complete(n) => *n,
        };
        if order > MAX_ORDER {
            return Err(Error::OrderOverflow(order));
        }
        Ok(())
    }

    pub fn generate(&self) -> Result<Graph> {
        self.validate()?;
        match self {
            FamilySpec::Path(n) => {
                let edges: Vec<_> = (1..*n).map(|v| (v - 1, v)).collect();
                Graph::from_edge_list(*n, &edges)
            }
            FamilySpec::Cycle(n) => {
                let edges: Vec<_> = (0..*n).map(|v| (v, (v + 1) % n)).collect();
                Graph::from_edge_list(*n, &edges)
            }
            FamilySpec::LGraph(n) => {
                // 0 and 1 form the K_2, 2 is the leaf they attach to, 2..n is the path.
                let mut edges = vec![(0, 1), (0, 2), (1, 2)];
                edges.extend((3..*n).map(|v| (v - 1, v)));
                Graph::from_edge_list(*n, &edges)
            }
            FamilySpec::CompleteMultipartite(parts) => {
                let mut g = Graph::empty(0)?;
                for &size in parts {
                    g = g.join(&Graph::empty(size)?)?;
                }
                Ok(g)
            }
            FamilySpec::Complete(n) => {
                let adj = (0..*n).map(|v| full_mask(*n) & !(1 << v)).collect();
                Ok(Graph::from_adj_unchecked(adj))
            }
            FamilySpec::MatchingUnion(k) => {
                let edges: Vec<_> = (0..*k).map(|i| (2 * i, 2 * i + 1)).collect();
                Graph::from_edge_list(2 * k, &edges)
            }
            FamilySpec::ErdosRenyi { n, p, seed } => {
                let mut rng = ChaCha8Rng::seed_from_u64(*seed);
                Ok(erdos_renyi(*n, *p, &mut rng))
            }
        }
    }
}

/// Samples G(n, p) with one uniform draw per pair in lexicographic order:
/// pair `(u, v)` is an edge iff a uniform integer in `[0, den)` is below `num`.
pub fn erdos_renyi<R: Rng>(n: usize, p: Ratio<u64>, rng: &mut R) -> Graph {
    let (num, den) = (*p.numer(), *p.denom());
    let mut adj = vec![0u64; n];
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_range(0..den) < num {
                adj[u] |= 1 << v;
                adj[v] |= 1 << u;
            }
        }
    }
    Graph::from_adj_unchecked(adj)
}
