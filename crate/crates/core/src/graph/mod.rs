//! Bipartite graph model shared by every algorithm in the crate.
//!
//! Vertices are 0-indexed: `a ∈ [0, n)` on the A side, `b ∈ [0, m)` on the
//! B side. Edge files use 1-indexed vertices (see [`io`]).

pub mod generate;
pub mod io;
pub mod stream;

pub use stream::{make_stream, EdgeStream, StreamOrder};

use std::collections::HashSet;
use std::hash::{DefaultHasher, Hash, Hasher};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An edge `ab` with `a ∈ A` and `b ∈ B`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Edge {
    pub a: usize,
    pub b: usize,
}

impl Edge {
    pub const fn new(a: usize, b: usize) -> Self {
        Self { a, b }
    }
}

impl From<(usize, usize)> for Edge {
    fn from((a, b): (usize, usize)) -> Self {
        Self { a, b }
    }
}

/// A simple bipartite graph `G = (A, B, E)`, immutable after construction.
///
/// Edges keep their construction order, which is the `as-given` stream
/// order. Adjacency lists are sorted by vertex index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipartiteGraph {
    n: usize,
    m: usize,
    edges: Vec<Edge>,
    // (b, edge index) per a, sorted by b
    a_adj: Vec<Vec<(usize, usize)>>,
    // (a, edge index) per b, sorted by a
    b_adj: Vec<Vec<(usize, usize)>>,
}

impl BipartiteGraph {
    /// Builds a graph, dropping repeated edges (first occurrence wins).
    pub fn new<I, E>(n: usize, m: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = E>,
        E: Into<Edge>,
    {
        let mut seen = HashSet::new();
        let mut kept = Vec::new();
        for e in edges {
            let e = e.into();
            if e.a >= n || e.b >= m {
                return Err(Error::InvalidArgument(format!(
                    "edge ({}, {}) out of range for n={n}, m={m}",
                    e.a, e.b
                )));
            }
            if seen.insert(e) {
                kept.push(e);
            }
        }
        Ok(Self::from_unique(n, m, kept))
    }

    /// Builds a graph from edges that are known to be in range and distinct.
    pub(crate) fn from_unique(n: usize, m: usize, edges: Vec<Edge>) -> Self {
        let mut a_adj = vec![Vec::new(); n];
        let mut b_adj = vec![Vec::new(); m];
        for (i, e) in edges.iter().enumerate() {
            a_adj[e.a].push((e.b, i));
            b_adj[e.b].push((e.a, i));
        }
        a_adj.iter_mut().for_each(|l| l.sort_unstable());
        b_adj.iter_mut().for_each(|l| l.sort_unstable());
        Self {
            n,
            m,
            edges,
            a_adj,
            b_adj,
        }
    }

    /// `|A|`
    pub fn n(&self) -> usize {
        self.n
    }

    /// `|B|`
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, idx: usize) -> Edge {
        self.edges[idx]
    }

    /// `Γ(a)` in increasing order of `b`.
    pub fn neighbors_of_a(&self, a: usize) -> impl ExactSizeIterator<Item = usize> + '_ {
        self.a_adj[a].iter().map(|&(b, _)| b)
    }

    /// `Γ(b)` in increasing order of `a`.
    pub fn neighbors_of_b(&self, b: usize) -> impl ExactSizeIterator<Item = usize> + '_ {
        self.b_adj[b].iter().map(|&(a, _)| a)
    }

    /// Incident edges of `a` as `(b, edge index)` pairs.
    pub fn incident_a(&self, a: usize) -> &[(usize, usize)] {
        &self.a_adj[a]
    }

    pub fn incident_b(&self, b: usize) -> &[(usize, usize)] {
        &self.b_adj[b]
    }

    pub fn deg_a(&self, a: usize) -> usize {
        self.a_adj[a].len()
    }

    pub fn deg_b(&self, b: usize) -> usize {
        self.b_adj[b].len()
    }

    pub fn edge_index(&self, a: usize, b: usize) -> Option<usize> {
        let adj = self.a_adj.get(a)?;
        adj.binary_search_by_key(&b, |&(x, _)| x)
            .ok()
            .map(|pos| adj[pos].1)
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.edge_index(a, b).is_some()
    }

    /// All A vertices, `0..n`.
    pub fn all_a(&self) -> Vec<usize> {
        (0..self.n).collect()
    }

    /// First A vertex in `active` without any neighbor, if any.
    pub fn find_isolated(&self, active: &[usize]) -> Option<usize> {
        active.iter().copied().find(|&a| self.a_adj[a].is_empty())
    }

    /// `A(E)`: A vertices with at least one edge.
    pub fn covered_a(&self) -> Vec<usize> {
        (0..self.n).filter(|&a| !self.a_adj[a].is_empty()).collect()
    }

    /// The graph `(A, B, E')` on the same vertex sets.
    pub fn edge_subgraph(&self, subset: &EdgeSubset) -> BipartiteGraph {
        let edges = subset.indices().iter().map(|&i| self.edges[i]).collect();
        Self::from_unique(self.n, self.m, edges)
    }

    /// Graph on the same vertex sets with edges from `self` and `other`.
    pub fn union(&self, other: &BipartiteGraph) -> Result<BipartiteGraph> {
        if self.n != other.n || self.m != other.m {
            return Err(Error::InvalidArgument(format!(
                "cannot union graphs of shape {}x{} and {}x{}",
                self.n, self.m, other.n, other.m
            )));
        }
        Self::new(
            self.n,
            self.m,
            self.edges.iter().chain(other.edges.iter()).copied(),
        )
    }

    /// A stable fingerprint of the vertex counts and edge set.
    pub fn fingerprint(&self) -> u64 {
        let mut sorted = self.edges.clone();
        sorted.sort_unstable();
        let mut h = DefaultHasher::new();
        (self.n, self.m).hash(&mut h);
        sorted.hash(&mut h);
        h.finish()
    }
}

/// A subset `E' ⊆ E`, stored as sorted, distinct edge indices into a parent graph.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EdgeSubset {
    indices: Vec<usize>,
}

impl EdgeSubset {
    pub fn new(g: &BipartiteGraph, indices: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut indices: Vec<usize> = indices.into_iter().collect();
        indices.sort_unstable();
        indices.dedup();
        if let Some(&bad) = indices.iter().find(|&&i| i >= g.num_edges()) {
            return Err(Error::InvalidArgument(format!(
                "edge index {bad} not in graph with {} edges",
                g.num_edges()
            )));
        }
        Ok(Self { indices })
    }

    /// Looks up each `(a, b)` pair in `g`.
    pub fn from_edges(g: &BipartiteGraph, edges: impl IntoIterator<Item = Edge>) -> Result<Self> {
        let mut idx = Vec::new();
        for e in edges {
            idx.push(g.edge_index(e.a, e.b).ok_or_else(|| {
                Error::InvalidArgument(format!("({}, {}) is not an edge of the graph", e.a, e.b))
            })?);
        }
        Self::new(g, idx)
    }

    pub fn full(g: &BipartiteGraph) -> Self {
        Self {
            indices: (0..g.num_edges()).collect(),
        }
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn contains(&self, idx: usize) -> bool {
        self.indices.binary_search(&idx).is_ok()
    }

    pub fn edges<'g>(&'g self, g: &'g BipartiteGraph) -> impl Iterator<Item = Edge> + 'g {
        self.indices.iter().map(move |&i| g.edge(i))
    }

    /// `deg_{E'}(a)` for every `a`.
    pub fn a_degrees(&self, g: &BipartiteGraph) -> Vec<usize> {
        let mut deg = vec![0; g.n()];
        self.edges(g).for_each(|e| deg[e.a] += 1);
        deg
    }

    /// `deg_{E'}(b)` for every `b`.
    pub fn b_degrees(&self, g: &BipartiteGraph) -> Vec<usize> {
        let mut deg = vec![0; g.m()];
        self.edges(g).for_each(|e| deg[e.b] += 1);
        deg
    }

    /// `degmax E'` over both sides.
    pub fn degmax(&self, g: &BipartiteGraph) -> usize {
        let a = self.a_degrees(g).into_iter().max().unwrap_or(0);
        let b = self.b_degrees(g).into_iter().max().unwrap_or(0);
        a.max(b)
    }

    /// `E'|_{A' × B'}` given membership masks.
    pub fn restrict(&self, g: &BipartiteGraph, a_mask: &[bool], b_mask: &[bool]) -> EdgeSubset {
        let indices = self
            .indices
            .iter()
            .copied()
            .filter(|&i| {
                let e = g.edge(i);
                a_mask[e.a] && b_mask[e.b]
            })
            .collect();
        EdgeSubset { indices }
    }

    /// `A(E')` in increasing order.
    pub fn a_side(&self, g: &BipartiteGraph) -> Vec<usize> {
        let mut v: Vec<usize> = self.edges(g).map(|e| e.a).collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    /// `B(E')` in increasing order.
    pub fn b_side(&self, g: &BipartiteGraph) -> Vec<usize> {
        let mut v: Vec<usize> = self.edges(g).map(|e| e.b).collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    pub fn union(&self, other: &EdgeSubset) -> EdgeSubset {
        let mut indices: Vec<usize> = self.indices.iter().chain(&other.indices).copied().collect();
        indices.sort_unstable();
        indices.dedup();
        EdgeSubset { indices }
    }

    /// `E ∖ E'`.
    pub fn complement(&self, g: &BipartiteGraph) -> EdgeSubset {
        let indices = (0..g.num_edges()).filter(|&i| !self.contains(i)).collect();
        EdgeSubset { indices }
    }
}

/// Boolean membership mask over `0..len` for the listed vertices.
pub fn mask_of(len: usize, members: &[usize]) -> Vec<bool> {
    let mut mask = vec![false; len];
    members.iter().for_each(|&v| mask[v] = true);
    mask
}

/// Sorted, deduplicated copy of a vertex list, checked against `bound`.
pub(crate) fn normalize_vertices(members: &[usize], bound: usize) -> Result<Vec<usize>> {
    let mut v = members.to_vec();
    v.sort_unstable();
    v.dedup();
    if let Some(&bad) = v.iter().find(|&&x| x >= bound) {
        return Err(Error::InvalidArgument(format!(
            "vertex {bad} out of range (bound {bound})"
        )));
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tri() -> BipartiteGraph {
        BipartiteGraph::new(3, 2, [(0, 0), (1, 0), (2, 0), (2, 1)]).unwrap()
    }

    #[test]
    fn adjacency_matches_stored_edges() {
        let g = tri();
        assert_eq!(g.neighbors_of_a(2).collect::<Vec<_>>(), vec![0, 1]);
        assert_eq!(g.neighbors_of_b(0).collect::<Vec<_>>(), vec![0, 1, 2]);
        assert_eq!(g.edge_index(2, 1), Some(3));
        assert!(!g.has_edge(0, 1));
        let total: usize = (0..g.n()).map(|a| g.deg_a(a)).sum();
        assert_eq!(total, g.num_edges());
    }

    #[test]
    fn duplicates_collapse_and_out_of_range_rejected() {
        let g = BipartiteGraph::new(2, 1, [(0, 0), (0, 0), (1, 0)]).unwrap();
        assert_eq!(g.num_edges(), 2);
        assert!(BipartiteGraph::new(2, 1, [(2, 0)]).is_err());
    }

    #[test]
    fn subset_degrees_and_restriction() {
        let g = tri();
        let s = EdgeSubset::new(&g, [0, 2, 3]).unwrap();
        assert_eq!(s.b_degrees(&g), vec![2, 1]);
        assert_eq!(s.degmax(&g), 2);
        let r = s.restrict(&g, &[true, false, true], &[true, false]);
        assert_eq!(r.indices(), &[0, 2]);
        assert_eq!(s.complement(&g).indices(), &[1]);
        assert_eq!(s.a_side(&g), vec![0, 2]);
    }
}
