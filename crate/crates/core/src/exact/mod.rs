//! Exact and reference solvers for semi-matchings.
//!
//! A semi-matching over an active set `A' ⊆ A` assigns every `a ∈ A'` to one
//! neighboring B vertex. The *load* of `b` is `deg_S(b)`, and the quantity
//! minimized throughout is `degmax S`, the maximum load.

mod brute;
mod expansion;
mod isemi;
mod path;
mod solve;

pub use brute::{brute_force_semi, for_each_semi_matching, BRUTE_FORCE_LIMIT};
pub use expansion::{
    min_expansion, min_expansion_by_cut, min_expansion_enumerate, Expansion, ENUMERATION_LIMIT,
};
pub use isemi::isemi_max;
pub use path::{apply_path, find_deg_min_path, DegMinPath};
pub use solve::{greedy_semi, optimal_semi, semi2, semi2_violation};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{BipartiteGraph, Edge, EdgeSubset};

/// Assignment of every active A vertex to one neighboring B vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SemiMatching {
    assign: Vec<Option<usize>>,
    load: Vec<usize>,
}

impl SemiMatching {
    /// Validates that every assigned pair is an edge of `g`.
    pub fn from_assignment(g: &BipartiteGraph, assign: Vec<Option<usize>>) -> Result<Self> {
        if assign.len() != g.n() {
            return Err(Error::InvalidArgument(format!(
                "assignment covers {} A vertices, graph has {}",
                assign.len(),
                g.n()
            )));
        }
        let mut load = vec![0; g.m()];
        for (a, b) in assign.iter().enumerate() {
            if let Some(b) = *b {
                if !g.has_edge(a, b) {
                    return Err(Error::InvalidArgument(format!("({a}, {b}) is not an edge")));
                }
                load[b] += 1;
            }
        }
        Ok(Self { assign, load })
    }

    /// Builds from edges, one per A vertex.
    pub fn from_edges(g: &BipartiteGraph, edges: impl IntoIterator<Item = Edge>) -> Result<Self> {
        let mut assign = vec![None; g.n()];
        for e in edges {
            if e.a >= g.n() {
                return Err(Error::InvalidArgument(format!(
                    "A vertex {} out of range",
                    e.a
                )));
            }
            if assign[e.a].replace(e.b).is_some() {
                return Err(Error::InvalidArgument(format!(
                    "A vertex {} assigned twice",
                    e.a
                )));
            }
        }
        Self::from_assignment(g, assign)
    }

    pub(crate) fn from_parts(assign: Vec<Option<usize>>, m: usize) -> Self {
        let mut load = vec![0; m];
        assign.iter().flatten().for_each(|&b| load[b] += 1);
        Self { assign, load }
    }

    /// `S(a)`, if `a` is assigned.
    pub fn get(&self, a: usize) -> Option<usize> {
        self.assign[a]
    }

    pub fn assignment(&self) -> &[Option<usize>] {
        &self.assign
    }

    /// `deg_S(b)`
    pub fn load(&self, b: usize) -> usize {
        self.load[b]
    }

    pub fn loads(&self) -> &[usize] {
        &self.load
    }

    /// `degmax S` (0 for the empty semi-matching).
    pub fn degmax(&self) -> usize {
        self.load.iter().copied().max().unwrap_or(0)
    }

    /// Number of assigned A vertices.
    pub fn len(&self) -> usize {
        self.assign.iter().flatten().count()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Assigned A vertices in increasing order.
    pub fn covered(&self) -> Vec<usize> {
        (0..self.assign.len())
            .filter(|&a| self.assign[a].is_some())
            .collect()
    }

    /// Edges in increasing order of `a`.
    pub fn edges(&self) -> Vec<Edge> {
        self.assign
            .iter()
            .enumerate()
            .filter_map(|(a, b)| b.map(|b| Edge::new(a, b)))
            .collect()
    }

    pub fn to_subset(&self, g: &BipartiteGraph) -> Result<EdgeSubset> {
        EdgeSubset::from_edges(g, self.edges())
    }

    /// `Σ_b deg(b)·(deg(b)+1)/2`, the total completion time of unit jobs.
    pub fn cost(&self) -> u64 {
        self.load.iter().map(|&d| (d * (d + 1) / 2) as u64).sum()
    }

    /// Loads sorted in decreasing order.
    pub fn sorted_profile(&self) -> Vec<usize> {
        let mut p = self.load.clone();
        p.sort_unstable_by(|x, y| y.cmp(x));
        p
    }

    /// `S|_{A'' × B}` for the A vertices flagged in `a_mask`.
    pub fn restrict(&self, a_mask: &[bool]) -> SemiMatching {
        let assign = self
            .assign
            .iter()
            .enumerate()
            .map(|(a, &b)| if a_mask[a] { b } else { None })
            .collect();
        Self::from_parts(assign, self.load.len())
    }

    /// True when exactly the vertices in `active` are assigned.
    pub fn covers_exactly(&self, active: &[usize]) -> bool {
        let mask = crate::graph::mask_of(self.assign.len(), active);
        self.assign
            .iter()
            .zip(mask)
            .all(|(b, want)| b.is_some() == want)
    }

    pub(crate) fn reassign(&mut self, a: usize, b: usize) {
        if let Some(old) = self.assign[a].replace(b) {
            self.load[old] -= 1;
        }
        self.load[b] += 1;
    }
}

/// A partial assignment with every load at most `cap`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IncompleteSemiMatching {
    assign: Vec<Option<usize>>,
    load: Vec<usize>,
    cap: usize,
}

impl IncompleteSemiMatching {
    pub fn empty(n: usize, m: usize, cap: usize) -> Self {
        Self {
            assign: vec![None; n],
            load: vec![0; m],
            cap,
        }
    }

    /// Builds from edges, checking one edge per A vertex and loads `≤ cap`.
    pub fn from_edges(
        g: &BipartiteGraph,
        edges: impl IntoIterator<Item = Edge>,
        cap: usize,
    ) -> Result<Self> {
        let mut s = Self::empty(g.n(), g.m(), cap);
        for e in edges {
            if !g.has_edge(e.a, e.b) {
                return Err(Error::InvalidArgument(format!(
                    "({}, {}) is not an edge",
                    e.a, e.b
                )));
            }
            if s.assign[e.a].is_some() {
                return Err(Error::InvalidArgument(format!(
                    "A vertex {} assigned twice",
                    e.a
                )));
            }
            s.assign[e.a] = Some(e.b);
            s.load[e.b] += 1;
            if s.load[e.b] > cap {
                return Err(Error::InvalidArgument(format!(
                    "B vertex {} exceeds cap {cap}",
                    e.b
                )));
            }
        }
        Ok(s)
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn get(&self, a: usize) -> Option<usize> {
        self.assign[a]
    }

    pub fn load(&self, b: usize) -> usize {
        self.load[b]
    }

    pub fn loads(&self) -> &[usize] {
        &self.load
    }

    pub fn degmax(&self) -> usize {
        self.load.iter().copied().max().unwrap_or(0)
    }

    /// Number of assigned A vertices.
    pub fn size(&self) -> usize {
        self.assign.iter().flatten().count()
    }

    pub fn edges(&self) -> Vec<Edge> {
        self.assign
            .iter()
            .enumerate()
            .filter_map(|(a, b)| b.map(|b| Edge::new(a, b)))
            .collect()
    }

    pub fn covered(&self) -> Vec<usize> {
        (0..self.assign.len())
            .filter(|&a| self.assign[a].is_some())
            .collect()
    }

    /// The assignment as a semi-matching over its covered vertices.
    pub fn to_semi_matching(&self) -> SemiMatching {
        SemiMatching::from_parts(self.assign.clone(), self.load.len())
    }

    pub(crate) fn from_parts(assign: Vec<Option<usize>>, m: usize, cap: usize) -> Self {
        let mut load = vec![0; m];
        assign.iter().flatten().for_each(|&b| load[b] += 1);
        Self { assign, load, cap }
    }
}

#[cfg(test)]
pub(crate) mod fixtures {
    use crate::graph::BipartiteGraph;

    /// `A = {a1,a2,a3}`, `B = {b1,b2}`, `E = {a1b1, a2b1, a3b1, a3b2}` (0-indexed here).
    pub fn tri() -> BipartiteGraph {
        BipartiteGraph::new(3, 2, [(0, 0), (1, 0), (2, 0), (2, 1)]).unwrap()
    }

    /// `a_i – b_i` only.
    pub fn perfect(n: usize) -> BipartiteGraph {
        BipartiteGraph::new(n, n, (0..n).map(|i| (i, i))).unwrap()
    }

    /// `K_{n,1}`
    pub fn star(n: usize) -> BipartiteGraph {
        BipartiteGraph::new(n, 1, (0..n).map(|i| (i, 0))).unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::fixtures::tri;
    use super::*;

    #[test]
    fn semi_matching_accessors() {
        let g = tri();
        let s = SemiMatching::from_assignment(&g, vec![Some(0), Some(0), Some(1)]).unwrap();
        assert_eq!(s.degmax(), 2);
        assert_eq!(s.cost(), 3 + 1);
        assert_eq!(s.sorted_profile(), vec![2, 1]);
        assert!(s.covers_exactly(&[0, 1, 2]));
        let r = s.restrict(&[true, false, true]);
        assert_eq!(r.loads(), &[1, 1]);
        assert!(SemiMatching::from_assignment(&g, vec![Some(1), None, None]).is_err());
        assert!(SemiMatching::from_edges(&g, [Edge::new(0, 0), Edge::new(0, 0)]).is_err());
    }

    #[test]
    fn incomplete_cap_is_enforced() {
        let g = tri();
        assert!(
            IncompleteSemiMatching::from_edges(&g, [Edge::new(0, 0), Edge::new(1, 0)], 1).is_err()
        );
        let s =
            IncompleteSemiMatching::from_edges(&g, [Edge::new(0, 0), Edge::new(2, 1)], 1).unwrap();
        assert_eq!(s.size(), 2);
        assert_eq!(s.covered(), vec![0, 2]);
    }
}
