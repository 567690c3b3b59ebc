use super::IncompleteSemiMatching;
use crate::error::Result;
use crate::flow::FlowNetwork;
use crate::graph::{normalize_vertices, BipartiteGraph};

/// A maximum-size incomplete `d`-bounded semi-matching of `G|_{A' × B}`.
///
/// Reduces to maximum flow: source → `a` (capacity 1) for `a ∈ A'`,
/// `a → b` (capacity 1) per edge, `b` → sink (capacity `d`).
pub fn isemi_max(g: &BipartiteGraph, active: &[usize], d: usize) -> Result<IncompleteSemiMatching> {
    let active = normalize_vertices(active, g.n())?;
    if d == 0 || active.is_empty() {
        return Ok(IncompleteSemiMatching::empty(g.n(), g.m(), d));
    }
    let (n, m) = (g.n(), g.m());
    let (source, sink) = (n + m, n + m + 1);
    let mut net = FlowNetwork::new(n + m + 2);
    let mut arcs = Vec::new();
    for &a in &active {
        net.add_arc(source, a, 1);
        for &(b, _) in g.incident_a(a) {
            arcs.push((a, b, net.add_arc(a, n + b, 1)));
        }
    }
    for b in 0..m {
        net.add_arc(n + b, sink, d as u64);
    }
    net.max_flow(source, sink);

    let mut assign = vec![None; n];
    for (a, b, id) in arcs {
        if net.flow(id) > 0 {
            assign[a] = Some(b);
        }
    }
    Ok(IncompleteSemiMatching::from_parts(assign, m, d))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::fixtures::tri;
    use crate::graph::generate::random;

    /// Largest d-bounded partial assignment by trying "skip or any neighbor" per vertex.
    fn brute(g: &BipartiteGraph, d: usize) -> usize {
        fn go(g: &BipartiteGraph, a: usize, d: usize, load: &mut Vec<usize>) -> usize {
            if a == g.n() {
                return 0;
            }
            let mut best = go(g, a + 1, d, load);
            for b in g.neighbors_of_a(a) {
                if load[b] < d {
                    load[b] += 1;
                    best = best.max(1 + go(g, a + 1, d, load));
                    load[b] -= 1;
                }
            }
            best
        }
        go(g, 0, d, &mut vec![0; g.m()])
    }

    #[test]
    fn tri_sizes() {
        let g = tri();
        assert_eq!(brute(&g, 1), 2);
        assert_eq!(isemi_max(&g, &g.all_a(), 1).unwrap().size(), 2);
        assert_eq!(isemi_max(&g, &g.all_a(), 2).unwrap().size(), 3);
        assert_eq!(isemi_max(&g, &g.all_a(), 0).unwrap().size(), 0);
    }

    #[test]
    fn matches_brute_force() {
        for seed in 0..150 {
            let g = random(7, 4, 0.4, seed).unwrap();
            for d in 1..=3 {
                let s = isemi_max(&g, &g.all_a(), d).unwrap();
                assert_eq!(s.size(), brute(&g, d), "seed {seed} d {d}");
                assert!(s.degmax() <= d);
                IncompleteSemiMatching::from_edges(&g, s.edges(), d).unwrap();
            }
        }
    }

    #[test]
    fn only_active_vertices_are_used() {
        let g = tri();
        let s = isemi_max(&g, &[1, 2], 5).unwrap();
        assert_eq!(s.covered(), vec![1, 2]);
    }
}
