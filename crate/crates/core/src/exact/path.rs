use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use super::SemiMatching;
use crate::error::{Error, Result};
use crate::graph::BipartiteGraph;

/// An alternating path `(b₁, a₁, b₂, …, a_{k-1}, b_k)` with `S(a_i) = b_i`
/// and `(a_i, b_{i+1}) ∈ E ∖ S`, whose loads satisfy
/// `deg(b₁) > deg(b₂) ≥ … ≥ deg(b_{k-1}) > deg(b_k)` and
/// `deg(b₁) ≥ deg(b_k) + 2`.
///
/// Flipping it moves each `a_i` from `b_i` to `b_{i+1}`: the load of `b₁`
/// drops by one, the load of `b_k` rises by one, and all others stay put.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegMinPath {
    bs: Vec<usize>,
    as_: Vec<usize>,
}

impl DegMinPath {
    /// `bs` holds `b₁..b_k`, `as_` holds `a₁..a_{k-1}`.
    pub fn new(bs: Vec<usize>, as_: Vec<usize>) -> Result<Self> {
        if bs.len() < 2 || as_.len() + 1 != bs.len() {
            return Err(Error::InvalidPath(format!(
                "need k ≥ 2 B vertices and k-1 A vertices, got {} and {}",
                bs.len(),
                as_.len()
            )));
        }
        Ok(Self { bs, as_ })
    }

    pub fn b_vertices(&self) -> &[usize] {
        &self.bs
    }

    pub fn a_vertices(&self) -> &[usize] {
        &self.as_
    }

    pub fn start(&self) -> usize {
        self.bs[0]
    }

    pub fn end(&self) -> usize {
        *self.bs.last().unwrap()
    }

    /// Number of edges, `2(k-1)`.
    pub fn len_edges(&self) -> usize {
        2 * self.as_.len()
    }

    /// Checks every path condition against `s` on `g`.
    pub fn validate(&self, g: &BipartiteGraph, s: &SemiMatching) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidPath(msg));
        let mut seen_b = std::collections::HashSet::new();
        if !self.bs.iter().all(|&b| b < g.m() && seen_b.insert(b)) {
            return bad("B vertices must be distinct and in range".into());
        }
        let mut seen_a = std::collections::HashSet::new();
        if !self.as_.iter().all(|&a| a < g.n() && seen_a.insert(a)) {
            return bad("A vertices must be distinct and in range".into());
        }
        for (i, &a) in self.as_.iter().enumerate() {
            if s.get(a) != Some(self.bs[i]) {
                return bad(format!("a={a} is not matched to b={} in S", self.bs[i]));
            }
            if !g.has_edge(a, self.bs[i + 1]) {
                return bad(format!("({a}, {}) is not an edge", self.bs[i + 1]));
            }
        }
        let loads: Vec<usize> = self.bs.iter().map(|&b| s.load(b)).collect();
        let k = loads.len();
        let chain = loads[0] > loads[1]
            && loads[1..k - 1].windows(2).all(|w| w[0] >= w[1])
            && loads[k - 2] > loads[k - 1];
        if !chain || loads[0] < loads[k - 1] + 2 {
            return bad(format!("load sequence {loads:?} is not degree-minimizing"));
        }
        Ok(())
    }
}

/// Flips `path` in `s`, after validating it.
pub fn apply_path(g: &BipartiteGraph, s: &SemiMatching, path: &DegMinPath) -> Result<SemiMatching> {
    path.validate(g, s)?;
    let mut out = s.clone();
    flip(&mut out, path);
    Ok(out)
}

pub(crate) fn flip(s: &mut SemiMatching, path: &DegMinPath) {
    for (i, &a) in path.as_.iter().enumerate() {
        s.reassign(a, path.bs[i + 1]);
    }
}

/// Searches for a degree-minimizing path in `s`.
///
/// Start vertices are tried by decreasing load (ties by lowest index). From
/// a start with load `D`, a breadth-first search walks `b → a ∈ Γ_S(b) →
/// b' ∈ Γ(a)` through B vertices of load exactly `D-1` until it reaches one
/// of load at most `D-2`. Some path exists iff one of this shape exists, so
/// `None` certifies that `s` is optimal.
pub fn find_deg_min_path(g: &BipartiteGraph, s: &SemiMatching) -> Option<DegMinPath> {
    PathSearch::new(g, s).find(s)
}

/// Reusable search state: fibers `Γ_S(b)` plus BFS scratch space.
pub(crate) struct PathSearch<'g> {
    g: &'g BipartiteGraph,
    fibers: Vec<Vec<usize>>,
    // parent (a, previous b) per visited B vertex
    parent: Vec<Option<(usize, usize)>>,
    stamp: Vec<u32>,
    epoch: u32,
}

impl<'g> PathSearch<'g> {
    pub fn new(g: &'g BipartiteGraph, s: &SemiMatching) -> Self {
        let mut fibers = vec![Vec::new(); g.m()];
        for (a, b) in s.assignment().iter().enumerate() {
            if let Some(b) = *b {
                fibers[b].push(a);
            }
        }
        Self {
            g,
            fibers,
            parent: vec![None; g.m()],
            stamp: vec![0; g.m()],
            epoch: 0,
        }
    }

    pub fn find(&mut self, s: &SemiMatching) -> Option<DegMinPath> {
        let mut order: Vec<usize> = (0..self.g.m()).filter(|&b| s.load(b) >= 2).collect();
        order.sort_by_key(|&b| (std::cmp::Reverse(s.load(b)), b));
        order.into_iter().find_map(|b| self.search_from(s, b))
    }

    pub fn search_from(&mut self, s: &SemiMatching, start: usize) -> Option<DegMinPath> {
        let top = s.load(start);
        if top < 2 {
            return None;
        }
        self.epoch += 1;
        let epoch = self.epoch;
        self.stamp[start] = epoch;
        self.parent[start] = None;
        let mut queue = VecDeque::from([start]);
        while let Some(b) = queue.pop_front() {
            for &a in &self.fibers[b] {
                for next in self.g.neighbors_of_a(a) {
                    if self.stamp[next] == epoch {
                        continue;
                    }
                    let load = s.load(next);
                    if load + 2 <= top {
                        self.parent[next] = Some((a, b));
                        self.stamp[next] = epoch;
                        return Some(self.trace(next));
                    }
                    if load + 1 == top {
                        self.stamp[next] = epoch;
                        self.parent[next] = Some((a, b));
                        queue.push_back(next);
                    }
                }
            }
        }
        None
    }

    fn trace(&self, end: usize) -> DegMinPath {
        let mut bs = vec![end];
        let mut as_ = Vec::new();
        let mut cur = end;
        while let Some((a, prev)) = self.parent[cur] {
            as_.push(a);
            bs.push(prev);
            cur = prev;
        }
        bs.reverse();
        as_.reverse();
        DegMinPath { bs, as_ }
    }

    /// Flips `path` in `s` and keeps the fibers in sync.
    pub fn apply(&mut self, s: &mut SemiMatching, path: &DegMinPath) {
        for (i, &a) in path.as_.iter().enumerate() {
            let (from, to) = (path.bs[i], path.bs[i + 1]);
            let pos = self.fibers[from].iter().position(|&x| x == a).unwrap();
            self.fibers[from].swap_remove(pos);
            self.fibers[to].push(a);
        }
        flip(s, path);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::fixtures::{perfect, tri};

    /// Every simple alternating path from every start, checked directly
    /// against the load-chain definition.
    fn exhaustive_has_path(g: &BipartiteGraph, s: &SemiMatching) -> bool {
        fn extend(
            g: &BipartiteGraph,
            s: &SemiMatching,
            bs: &mut Vec<usize>,
            as_: &mut Vec<usize>,
        ) -> bool {
            if bs.len() >= 2
                && DegMinPath::new(bs.clone(), as_.clone())
                    .unwrap()
                    .validate(g, s)
                    .is_ok()
            {
                return true;
            }
            let b = *bs.last().unwrap();
            for a in 0..g.n() {
                if s.get(a) != Some(b) || as_.contains(&a) {
                    continue;
                }
                for next in g.neighbors_of_a(a) {
                    if bs.contains(&next) {
                        continue;
                    }
                    bs.push(next);
                    as_.push(a);
                    let hit = extend(g, s, bs, as_);
                    bs.pop();
                    as_.pop();
                    if hit {
                        return true;
                    }
                }
            }
            false
        }
        (0..g.m()).any(|b| extend(g, s, &mut vec![b], &mut Vec::new()))
    }

    fn sm(g: &BipartiteGraph, assign: &[usize]) -> SemiMatching {
        SemiMatching::from_assignment(g, assign.iter().map(|&b| Some(b)).collect()).unwrap()
    }

    #[test]
    fn finds_flip_on_overloaded_tri() {
        let g = tri();
        let s = sm(&g, &[0, 0, 0]);
        let p = find_deg_min_path(&g, &s).unwrap();
        assert_eq!(p.b_vertices(), &[0, 1]);
        assert_eq!(p.a_vertices(), &[2]);
        let s2 = apply_path(&g, &s, &p).unwrap();
        assert_eq!(s2.assignment(), &[Some(0), Some(0), Some(1)]);
        assert_eq!(s.loads(), &[3, 0]);
        assert_eq!(s2.loads(), &[2, 1]);
        assert!(find_deg_min_path(&g, &s2).is_none());
        assert!(!exhaustive_has_path(&g, &s2));
    }

    #[test]
    fn perfect_matching_has_no_path() {
        let g = perfect(4);
        assert!(find_deg_min_path(&g, &sm(&g, &[0, 1, 2, 3])).is_none());
    }

    #[test]
    fn invalid_paths_rejected() {
        let g = tri();
        let s = sm(&g, &[0, 0, 1]);
        // loads (2, 1): difference 1 does not qualify
        let p = DegMinPath::new(vec![0, 1], vec![2]).unwrap();
        assert!(matches!(apply_path(&g, &s, &p), Err(Error::InvalidPath(_))));
        let p = DegMinPath::new(vec![0, 1], vec![0]).unwrap();
        assert!(apply_path(&g, &s, &p).is_err());
        assert!(DegMinPath::new(vec![0], vec![]).is_err());
    }

    #[test]
    fn search_agrees_with_exhaustive_definition() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(17);
        for seed in 0..300 {
            let g = crate::graph::generate::random_covering(6, 4, 0.45, seed).unwrap();
            let assign: Vec<usize> = (0..g.n())
                .map(|a| {
                    let nb: Vec<usize> = g.neighbors_of_a(a).collect();
                    nb[rng.random_range(0..nb.len())]
                })
                .collect();
            let s = sm(&g, &assign);
            let found = find_deg_min_path(&g, &s);
            assert_eq!(found.is_some(), exhaustive_has_path(&g, &s), "seed {seed}");
            if let Some(p) = found {
                p.validate(&g, &s).unwrap();
                let after = apply_path(&g, &s, &p).unwrap();
                assert!(after.cost() < s.cost());
                assert_eq!(after.load(p.start()) + 1, s.load(p.start()));
                assert_eq!(after.load(p.end()), s.load(p.end()) + 1);
            }
        }
    }
}
