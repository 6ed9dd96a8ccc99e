//! Deterministic graph constructors and corpora.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order [`enumerate_connected`] accepts; 2^21 bitmasks at n = 7.
pub const MAX_ENUMERATION_ORDER: usize = 7;

fn invalid<T>(message: impl Into<String>) -> Result<T> {
    Err(Error::InvalidParameters(message.into()))
}

/// Named graph families.
#[derive(Clone, Debug, PartialEq)]
pub enum Family {
    Complete(usize),
    /// K_{1,n−1} on `n` vertices, center 0.
    Star(usize),
    Path(usize),
    Cycle(usize),
    CompleteBipartite(usize, usize),
    /// `i ~ i ± s (mod n)` for every offset `s`.
    Circulant(usize, Vec<usize>),
}

pub fn generate_named(family: &Family) -> Result<Graph> {
    match *family {
        Family::Complete(n) => {
            let mut edges = Vec::new();
            for j in 1..n {
                for i in 0..j {
                    edges.push((i, j));
                }
            }
            Graph::from_edges(n, &edges)
        }
        Family::Star(n) => {
            let edges: Vec<_> = (1..n).map(|i| (0, i)).collect();
            Graph::from_edges(n, &edges)
        }
        Family::Path(n) => {
            let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
            Graph::from_edges(n, &edges)
        }
        Family::Cycle(n) => {
            if n < 3 {
                return invalid(format!("cycle needs n >= 3, got {n}"));
            }
            circulant(n, &[1])
        }
        Family::CompleteBipartite(p, q) => {
            if p == 0 || q == 0 {
                return invalid("complete bipartite parts must be non-empty");
            }
            let edges: Vec<_> = (0..p)
                .flat_map(|i| (p..p + q).map(move |j| (i, j)))
                .collect();
            Graph::from_edges(p + q, &edges)
        }
        Family::Circulant(n, ref offsets) => circulant(n, offsets),
    }
}

fn circulant(n: usize, offsets: &[usize]) -> Result<Graph> {
    if let Some(&s) = offsets.iter().find(|&&s| s == 0 || s > n / 2) {
        return invalid(format!("circulant offset {s} outside [1, {}]", n / 2));
    }
    let mut edges = Vec::new();
    for i in 0..n {
        for &s in offsets {
            edges.push((i, (i + s) % n));
        }
    }
    Graph::from_edges(n, &edges)
}

/// Whether H_{n−1,Δ₂} can be built: `1 <= Δ₂ < n − 1` and a (Δ₂ − 1)-regular
/// graph exists on the n − 1 non-center vertices.
pub fn h_feasible(n: usize, second_max: usize) -> bool {
    second_max >= 1 && second_max + 1 < n && ((second_max - 1) * (n - 1)).is_multiple_of(2)
}

/// H_{n−1,Δ₂}: vertex 0 joined to everything, vertices `1..n` carrying a
/// (Δ₂ − 1)-regular circulant.
pub fn generate_h(n: usize, second_max: usize) -> Result<Graph> {
    if !h_feasible(n, second_max) {
        return invalid(format!(
            "H_(n-1, d2) infeasible for n = {n}, d2 = {second_max}"
        ));
    }
    let rest = n - 1;
    let inner = second_max - 1;
    let mut offsets: Vec<usize> = (1..=inner / 2).collect();
    if inner % 2 == 1 {
        // Odd inner degree forces an even ring; the antipodal offset adds one.
        offsets.push(rest / 2);
    }
    let ring = circulant(rest, &offsets)?;
    let mut edges: Vec<_> = (1..n).map(|v| (0, v)).collect();
    edges.extend(ring.edges().map(|(u, v)| (u + 1, v + 1)));
    Graph::from_edges(n, &edges)
}

/// SplitMix64 stream.
#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        Self { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e37_79b9_7f4a_7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        z ^ (z >> 31)
    }

    /// Uniform in [0, 1) with 53 bits of precision.
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }
}

/// Erdős–Rényi G(n, p). Pairs are drawn in lexicographic order, one SplitMix64
/// output per pair, so `(n, p, seed)` fixes the graph.
pub fn gnp(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return invalid(format!("edge probability {p} outside [0, 1]"));
    }
    let mut rng = SplitMix64::new(seed);
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.next_f64() < p {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(n, &edges)
}

/// Pair `(i, j)`, `i < j`, for bit `k` of an edge mask, in graph6 column
/// order: (0,1), (0,2), (1,2), (0,3), ...
pub fn mask_pairs(n: usize) -> Vec<(usize, usize)> {
    (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect()
}

pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let edges: Vec<_> = mask_pairs(n)
        .into_iter()
        .enumerate()
        .filter(|&(k, _)| mask >> k & 1 == 1)
        .map(|(_, e)| e)
        .collect();
    Graph::from_edges(n, &edges).expect("mask pairs are valid edges")
}

/// Connectivity of the graph encoded by `mask`, without building it.
pub fn mask_is_connected(n: usize, pairs: &[(usize, usize)], mask: u64) -> bool {
    let mut neighbors = [0u32; 32];
    for (k, &(i, j)) in pairs.iter().enumerate() {
        if mask >> k & 1 == 1 {
            neighbors[i] |= 1 << j;
            neighbors[j] |= 1 << i;
        }
    }
    let all = (1u32 << n) - 1;
    let mut seen = 1u32;
    let mut frontier = 1u32;
    while frontier != 0 {
        let mut next = 0;
        let mut f = frontier;
        while f != 0 {
            let v = f.trailing_zeros() as usize;
            f &= f - 1;
            next |= neighbors[v];
        }
        frontier = next & !seen;
        seen |= next;
    }
    seen & all == all
}

/// Edge masks of all connected labeled graphs on `n` vertices, ascending.
pub fn connected_masks(n: usize) -> Result<Vec<u64>> {
    if n == 0 || n > MAX_ENUMERATION_ORDER {
        return invalid(format!(
            "enumeration needs 1 <= n <= {MAX_ENUMERATION_ORDER}, got {n}"
        ));
    }
    let pairs = mask_pairs(n);
    Ok((0..1u64 << pairs.len())
        .filter(|&mask| mask_is_connected(n, &pairs, mask))
        .collect())
}

/// Every connected labeled graph on `n` vertices, by ascending edge mask.
pub fn enumerate_connected(n: usize) -> Result<impl Iterator<Item = Graph>> {
    Ok(connected_masks(n)?
        .into_iter()
        .map(move |mask| graph_from_mask(n, mask)))
}

/// Textual graph source understood by the CLI and corpus readers.
///
/// `complete:N`, `star:N`, `path:N`, `cycle:N`, `complete_bipartite:P:Q`,
/// `circulant:N:S1,S2,...`, `h:N:D2`, `gnp:N:P:SEED`.
#[derive(Clone, Debug, PartialEq)]
pub enum GraphSpec {
    Named(Family),
    H { n: usize, second_max: usize },
    Gnp { n: usize, p: f64, seed: u64 },
}

impl GraphSpec {
    pub fn build(&self) -> Result<Graph> {
        match self {
            GraphSpec::Named(family) => generate_named(family),
            GraphSpec::H { n, second_max } => generate_h(*n, *second_max),
            GraphSpec::Gnp { n, p, seed } => gnp(*n, *p, *seed),
        }
    }
}

impl FromStr for GraphSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.trim().split(':').collect();
        let num = |text: &str| -> Result<usize> {
            text.parse()
                .map_err(|_| Error::InvalidParameters(format!("expected an integer, got {text:?}")))
        };
        let spec = match parts.as_slice() {
            ["complete", n] => GraphSpec::Named(Family::Complete(num(n)?)),
            ["star", n] => GraphSpec::Named(Family::Star(num(n)?)),
            ["path", n] => GraphSpec::Named(Family::Path(num(n)?)),
            ["cycle", n] => GraphSpec::Named(Family::Cycle(num(n)?)),
            ["complete_bipartite", p, q] => {
                GraphSpec::Named(Family::CompleteBipartite(num(p)?, num(q)?))
            }
            ["circulant", n, offsets] => {
                let offsets = offsets
                    .split(',')
                    .filter(|s| !s.is_empty())
                    .map(num)
                    .collect::<Result<_>>()?;
                GraphSpec::Named(Family::Circulant(num(n)?, offsets))
            }
            ["h", n, d2] => GraphSpec::H {
                n: num(n)?,
                second_max: num(d2)?,
            },
            ["gnp", n, p, seed] => GraphSpec::Gnp {
                n: num(n)?,
                p: p.parse()
                    .map_err(|_| Error::InvalidParameters(format!("bad probability {p:?}")))?,
                seed: seed
                    .parse()
                    .map_err(|_| Error::InvalidParameters(format!("bad seed {seed:?}")))?,
            },
            _ => return invalid(format!("unknown generator spec {s:?}")),
        };
        Ok(spec)
    }
}

impl fmt::Display for GraphSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphSpec::Named(Family::Complete(n)) => write!(f, "complete:{n}"),
            GraphSpec::Named(Family::Star(n)) => write!(f, "star:{n}"),
            GraphSpec::Named(Family::Path(n)) => write!(f, "path:{n}"),
            GraphSpec::Named(Family::Cycle(n)) => write!(f, "cycle:{n}"),
            GraphSpec::Named(Family::CompleteBipartite(p, q)) => {
                write!(f, "complete_bipartite:{p}:{q}")
            }
            GraphSpec::Named(Family::Circulant(n, s)) => {
                let s: Vec<String> = s.iter().map(ToString::to_string).collect();
                write!(f, "circulant:{n}:{}", s.join(","))
            }
            GraphSpec::H { n, second_max } => write!(f, "h:{n}:{second_max}"),
            GraphSpec::Gnp { n, p, seed } => write!(f, "gnp:{n}:{p}:{seed}"),
        }
    }
}
