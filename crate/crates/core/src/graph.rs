//! Immutable simple undirected graphs.

use std::collections::VecDeque;

use serde::Serialize;

use crate::error::{Error, Result};

/// Simple undirected graph on vertices `0..n`.
///
/// Neighbor lists are kept sorted so that every traversal, and therefore every
/// floating-point summation built on top of one, happens in a fixed order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
    edge_count: usize,
}

impl Graph {
    /// Builds a graph from an edge list. Repeated pairs (in either
    /// orientation) collapse to a single edge.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in edges {
            for index in [u, v] {
                if index >= n {
                    return Err(Error::VertexOutOfRange { index, n });
                }
            }
            if u == v {
                return Err(Error::Loop(u));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        let mut twice = 0;
        for list in &mut adjacency {
            list.sort_unstable();
            list.dedup();
            twice += list.len();
        }
        Ok(Self {
            adjacency,
            edge_count: twice / 2,
        })
    }

    /// Graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Result<Self> {
        Self::from_edges(n, &[])
    }

    pub fn n(&self) -> usize {
        self.adjacency.len()
    }

    pub fn m(&self) -> usize {
        self.edge_count
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    /// Sorted neighbors of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Degrees indexed by vertex.
    pub fn degrees(&self) -> Vec<usize> {
        self.adjacency.iter().map(Vec::len).collect()
    }

    /// Degrees sorted non-increasing.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d = self.degrees();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// Copy of this graph with the edge `{u, v}` removed (no-op if absent).
    pub fn without_edge(&self, u: usize, v: usize) -> Graph {
        let edges: Vec<_> = self
            .edges()
            .filter(|&e| e != (u.min(v), u.max(v)))
            .collect();
        Graph::from_edges(self.n(), &edges).expect("subgraph of a valid graph")
    }

    /// Breadth-first distances from `source`; `None` marks unreachable vertices.
    pub fn bfs_distances(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n()];
        let mut queue = VecDeque::new();
        dist[source] = Some(0);
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap_or(0);
            for &w in self.neighbors(u) {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Component label per vertex, labels assigned in order of first vertex.
    pub fn components(&self) -> Vec<usize> {
        let mut label = vec![usize::MAX; self.n()];
        let mut next = 0;
        for start in 0..self.n() {
            if label[start] != usize::MAX {
                continue;
            }
            let mut stack = vec![start];
            label[start] = next;
            while let Some(u) = stack.pop() {
                for &w in self.neighbors(u) {
                    if label[w] == usize::MAX {
                        label[w] = next;
                        stack.push(w);
                    }
                }
            }
            next += 1;
        }
        label
    }

    pub fn is_connected(&self) -> bool {
        self.bfs_distances(0).iter().all(Option::is_some)
    }

    /// A proper 2-coloring if one exists.
    pub fn two_coloring(&self) -> Option<Vec<bool>> {
        let mut color: Vec<Option<bool>> = vec![None; self.n()];
        for start in 0..self.n() {
            if color[start].is_some() {
                continue;
            }
            color[start] = Some(false);
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                let cu = color[u].unwrap_or(false);
                for &w in self.neighbors(u) {
                    match color[w] {
                        None => {
                            color[w] = Some(!cu);
                            queue.push_back(w);
                        }
                        Some(cw) if cw == cu => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(color.into_iter().map(|c| c.unwrap_or(false)).collect())
    }

    /// Largest BFS distance over all vertex pairs, or `None` if disconnected.
    pub fn diameter(&self) -> Option<usize> {
        let mut best = 0;
        for v in 0..self.n() {
            for d in self.bfs_distances(v) {
                best = best.max(d?);
            }
        }
        Some(best)
    }

    pub fn structure_profile(&self) -> StructureProfile {
        let component_count = self.components().into_iter().max().map_or(0, |c| c + 1);
        let connected = component_count == 1;
        let degree_sequence = self.degree_sequence();
        let mut distinct = degree_sequence.clone();
        distinct.dedup();
        let regularity = match distinct.len() {
            1 => Regularity::Regular(distinct[0]),
            2 => Regularity::Semiregular,
            _ => Regularity::Irregular,
        };
        StructureProfile {
            connected,
            component_count,
            bipartite: self.two_coloring().is_some(),
            diameter: if connected { self.diameter() } else { None },
            distinct_degree_count: distinct.len(),
            degree_sequence,
            regularity,
        }
    }
}

/// Degree-regularity class.
///
/// `Semiregular` (exactly two distinct degrees) is a special case of being
/// irregular; `Irregular` here means three or more distinct degrees.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Regularity {
    Regular(usize),
    Semiregular,
    Irregular,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StructureProfile {
    pub connected: bool,
    pub component_count: usize,
    pub bipartite: bool,
    /// Defined only for connected graphs.
    pub diameter: Option<usize>,
    /// Non-increasing.
    pub degree_sequence: Vec<usize>,
    pub distinct_degree_count: usize,
    pub regularity: Regularity,
}

impl StructureProfile {
    /// At least two distinct degree values.
    pub fn is_irregular(&self) -> bool {
        self.distinct_degree_count >= 2
    }
}
