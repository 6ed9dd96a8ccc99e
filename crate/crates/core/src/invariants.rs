//! Scalar graph invariants consumed by the eigenvalue bounds.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Every invariant a bound evaluator may need, computed once per graph.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct InvariantSet {
    pub n: usize,
    pub m: usize,
    /// Δ
    pub max_degree: usize,
    /// Δ₂: largest degree value strictly below Δ, or Δ for regular graphs.
    pub second_max_degree: usize,
    /// d₂: second entry of the non-increasing degree sequence (Δ when n = 1).
    pub second_degree: usize,
    /// δ
    pub min_degree: usize,
    /// d̄ = 2m / n
    pub mean_degree: f64,
    pub zagreb1: u64,
    pub zagreb2: u64,
    /// ω
    pub clique_number: usize,
    pub diameter: Option<usize>,
    pub connected: bool,
    pub bipartite: bool,
    pub irregular: bool,
    /// Non-increasing.
    pub degree_sequence: Vec<usize>,
}

impl InvariantSet {
    pub fn compute(g: &Graph) -> Self {
        let profile = g.structure_profile();
        let degrees = profile.degree_sequence.clone();
        let zagreb = zagreb_indices(g, 2.0).expect("p = 2 is always valid");
        Self {
            n: g.n(),
            m: g.m(),
            max_degree: degrees[0],
            second_max_degree: second_max_degree(g),
            second_degree: degrees.get(1).copied().unwrap_or(degrees[0]),
            min_degree: degrees[degrees.len() - 1],
            mean_degree: 2.0 * g.m() as f64 / g.n() as f64,
            zagreb1: zagreb.first,
            zagreb2: zagreb.second,
            clique_number: clique_number(g),
            diameter: profile.diameter,
            connected: profile.connected,
            bipartite: profile.bipartite,
            irregular: profile.is_irregular(),
            degree_sequence: degrees,
        }
    }

    pub fn is_regular(&self) -> bool {
        !self.irregular
    }

    /// Whether the graph is some H_{n−1,Δ₂}: exactly one vertex of degree
    /// n − 1, and every other vertex of one common degree below n − 1.
    pub fn is_h_family(&self) -> bool {
        let d = &self.degree_sequence;
        self.n >= 3 && d[0] == self.n - 1 && d[1] < self.n - 1 && d[1..].iter().all(|&x| x == d[1])
    }
}

/// Largest degree value strictly below Δ; Δ itself when the graph is regular.
pub fn second_max_degree(g: &Graph) -> usize {
    let degrees = g.degree_sequence();
    let max = degrees[0];
    degrees.iter().copied().find(|&d| d < max).unwrap_or(max)
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Zagreb {
    /// Z₁ = Σ d_i²
    pub first: u64,
    /// Z₂ = Σ_{uv ∈ E} d_u d_v
    pub second: u64,
    /// Z^(p) = Σ d_i^p
    pub general: f64,
}

pub fn zagreb_indices(g: &Graph, p: f64) -> Result<Zagreb> {
    let degrees = g.degrees();
    if p == 0.0 || p == 1.0 || !p.is_finite() {
        return Err(Error::InvalidExponent(p));
    }
    if p < 0.0 && degrees.contains(&0) {
        return Err(Error::InvalidExponent(p));
    }
    let first = degrees.iter().map(|&d| (d * d) as u64).sum();
    let second = g
        .edges()
        .map(|(u, v)| (degrees[u] * degrees[v]) as u64)
        .sum();
    let general = if p == 2.0 {
        first as f64
    } else {
        degrees.iter().map(|&d| (d as f64).powf(p)).sum()
    };
    Ok(Zagreb {
        first,
        second,
        general,
    })
}

/// Das's lower bound `Δ² + δ² + (2m − Δ − δ)² / (n − 2)` on Z₁.
pub fn das_z1_lower(n: usize, m: usize, max_degree: usize, min_degree: usize) -> Result<f64> {
    if n < 3 {
        return Err(Error::TooFewVertices(n));
    }
    let (delta, small) = (max_degree as f64, min_degree as f64);
    let rest = 2.0 * m as f64 - delta - small;
    Ok(delta * delta + small * small + rest * rest / (n as f64 - 2.0))
}

/// Das's upper bound `2mn − n(n − 1)δ + 2m(δ − 1)` on Z₁ for connected graphs.
///
/// Summing `(d_i − δ)(d_i − (n − 1)) <= 0` gives the bound, so it is attained
/// exactly when every degree is `δ` or `n − 1`. Stars and regular graphs are
/// special cases; K₄ minus an edge is another.
pub fn das_z1_upper(n: usize, m: usize, min_degree: usize) -> f64 {
    let (n, m, d) = (n as f64, m as f64, min_degree as f64);
    2.0 * m * n - n * (n - 1.0) * d + 2.0 * m * (d - 1.0)
}

/// `(n − 2)·Z₁ − ((n − 2)(Δ² + δ²) + (2m − Δ − δ)²)`, i.e. the lower-bound
/// slack scaled by `n − 2`, in exact integer arithmetic. Requires `n >= 3`.
pub fn das_z1_lower_slack_exact(
    n: usize,
    m: usize,
    max_degree: usize,
    min_degree: usize,
    zagreb1: u64,
) -> i128 {
    let (n, m, hi, lo, z) = (
        n as i128,
        m as i128,
        max_degree as i128,
        min_degree as i128,
        zagreb1 as i128,
    );
    let rest = 2 * m - hi - lo;
    (n - 2) * (z - hi * hi - lo * lo) - rest * rest
}

/// `2mn − n(n − 1)δ + 2m(δ − 1) − Z₁` in exact integer arithmetic.
pub fn das_z1_upper_slack_exact(n: usize, m: usize, min_degree: usize, zagreb1: u64) -> i128 {
    let (n, m, d, z) = (n as i128, m as i128, min_degree as i128, zagreb1 as i128);
    2 * m * n - n * (n - 1) * d + 2 * m * (d - 1) - z
}

pub fn clique_number(g: &Graph) -> usize {
    maximum_clique(g).len()
}

/// Vertices of one maximum clique, sorted.
///
/// Exact Bron–Kerbosch with Tomita pivoting, seeded along a degeneracy
/// ordering and pruned by the best size found so far.
pub fn maximum_clique(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let neighbors: Vec<BitSet> = (0..n)
        .map(|v| BitSet::from_iter(n, g.neighbors(v).iter().copied()))
        .collect();
    let mut search = CliqueSearch {
        neighbors: &neighbors,
        best: vec![0],
        current: Vec::new(),
    };

    let order = degeneracy_order(g);
    let mut position = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        position[v] = i;
    }
    for &v in &order {
        let mut later = BitSet::new(n);
        let mut earlier = BitSet::new(n);
        for &w in g.neighbors(v) {
            if position[w] > position[v] {
                later.insert(w);
            } else {
                earlier.insert(w);
            }
        }
        if later.len() < search.best.len() {
            continue;
        }
        search.current.push(v);
        search.expand(later, earlier);
        search.current.pop();
    }
    let mut best = search.best;
    best.sort_unstable();
    best
}

struct CliqueSearch<'a> {
    neighbors: &'a [BitSet],
    best: Vec<usize>,
    current: Vec<usize>,
}

impl CliqueSearch<'_> {
    fn expand(&mut self, mut candidates: BitSet, mut excluded: BitSet) {
        if candidates.is_empty() {
            if self.current.len() > self.best.len() {
                self.best = self.current.clone();
            }
            return;
        }
        if self.current.len() + candidates.len() <= self.best.len() {
            return;
        }
        let pivot = candidates
            .iter()
            .chain(excluded.iter())
            .max_by_key(|&u| candidates.intersection_len(&self.neighbors[u]))
            .expect("candidates is non-empty");
        let branch: Vec<usize> = candidates
            .iter()
            .filter(|&v| !self.neighbors[pivot].contains(v))
            .collect();
        for v in branch {
            self.current.push(v);
            self.expand(
                candidates.intersection(&self.neighbors[v]),
                excluded.intersection(&self.neighbors[v]),
            );
            self.current.pop();
            candidates.remove(v);
            excluded.insert(v);
        }
    }
}

/// Vertices in smallest-last order (repeatedly remove a minimum-degree vertex).
fn degeneracy_order(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut degree = g.degrees();
    let mut removed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !removed[v])
            .min_by_key(|&v| (degree[v], v))
            .expect("vertices remain");
        removed[v] = true;
        order.push(v);
        for &w in g.neighbors(v) {
            if !removed[w] {
                degree[w] -= 1;
            }
        }
    }
    order
}

#[derive(Clone, Debug)]
struct BitSet {
    words: Vec<u64>,
}

impl BitSet {
    fn new(n: usize) -> Self {
        Self {
            words: vec![0; n.div_ceil(64)],
        }
    }

    fn from_iter(n: usize, items: impl Iterator<Item = usize>) -> Self {
        let mut set = Self::new(n);
        for i in items {
            set.insert(i);
        }
        set
    }

    fn insert(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    fn remove(&mut self, i: usize) {
        self.words[i / 64] &= !(1 << (i % 64));
    }

    fn contains(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    fn intersection(&self, other: &BitSet) -> BitSet {
        BitSet {
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a & b)
                .collect(),
        }
    }

    fn intersection_len(&self, other: &BitSet) -> usize {
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(k, &word)| {
            let mut w = word;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let bit = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(k * 64 + bit)
            })
        })
    }
}
