use super::path::PathSearch;
use super::SemiMatching;
use crate::error::{Error, Result};
use crate::graph::{normalize_vertices, BipartiteGraph, Edge};

fn prepare(g: &BipartiteGraph, active: &[usize]) -> Result<Vec<usize>> {
    let active = normalize_vertices(active, g.n())?;
    if let Some(a) = g.find_isolated(&active) {
        return Err(Error::IsolatedVertex(a));
    }
    Ok(active)
}

fn least_loaded(g: &BipartiteGraph, load: &[usize], a: usize) -> usize {
    g.neighbors_of_a(a)
        .min_by_key(|&b| (load[b], b))
        .expect("caller checked for isolated vertices")
}

/// Assigns each active vertex, in increasing order, to its least-loaded
/// neighbor (ties by lowest index).
pub fn greedy_semi(g: &BipartiteGraph, active: &[usize]) -> Result<SemiMatching> {
    let active = prepare(g, active)?;
    let mut s = SemiMatching::from_parts(vec![None; g.n()], g.m());
    for a in active {
        let b = least_loaded(g, s.loads(), a);
        s.reassign(a, b);
    }
    Ok(s)
}

/// An optimal semi-matching of `G|_{A' × B}`: one without any
/// degree-minimizing path.
///
/// Starts from [`greedy_semi`] and flips paths found by
/// [`find_deg_min_path`](super::find_deg_min_path) until none is left. Each
/// flip lowers `Σ deg(deg+1)/2`, so the loop terminates; the result
/// minimizes both `degmax` and that cost.
pub fn optimal_semi(g: &BipartiteGraph, active: &[usize]) -> Result<SemiMatching> {
    let mut s = greedy_semi(g, active)?;
    let mut search = PathSearch::new(g, &s);
    while let Some(path) = search.find(&s) {
        search.apply(&mut s, &path);
    }
    Ok(s)
}

/// The first edge `ab ∉ S` (by `a`, then `b`) with `deg(S(a)) > deg(b) + 1`,
/// i.e. a length-2 degree-minimizing path `(S(a), a, b)`.
pub fn semi2_violation(g: &BipartiteGraph, s: &SemiMatching) -> Option<Edge> {
    (0..g.n()).find_map(|a| {
        let cur = s.get(a)?;
        g.neighbors_of_a(a)
            .find(|&b| s.load(cur) > s.load(b) + 1)
            .map(|b| Edge::new(a, b))
    })
}

/// A semi-matching of `G|_{A' × B}` without length-2 degree-minimizing paths.
///
/// Starts from each vertex's lowest-index neighbor and repeatedly moves a
/// vertex to its least-loaded neighbor while that lowers the larger of the
/// two loads. The result need not be optimal.
pub fn semi2(g: &BipartiteGraph, active: &[usize]) -> Result<SemiMatching> {
    let active = prepare(g, active)?;
    let mut s = SemiMatching::from_parts(vec![None; g.n()], g.m());
    for &a in &active {
        let b = g.neighbors_of_a(a).next().unwrap();
        s.reassign(a, b);
    }
    loop {
        let mut moved = false;
        for &a in &active {
            let cur = s.get(a).unwrap();
            let best = least_loaded(g, s.loads(), a);
            if s.load(cur) > s.load(best) + 1 {
                s.reassign(a, best);
                moved = true;
            }
        }
        if !moved {
            return Ok(s);
        }
    }
}
