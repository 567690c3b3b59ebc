//! Hopcroft–Karp maximum bipartite matching.

use std::collections::VecDeque;

use crate::graph::{BipartiteGraph, Edge};

const FREE: usize = usize::MAX;

/// Maximum matching of `G|_{A' × B'}` given membership masks.
pub fn maximum_matching(g: &BipartiteGraph, a_mask: &[bool], b_mask: &[bool]) -> Vec<Edge> {
    let n = g.n();
    let adj: Vec<Vec<usize>> = (0..n)
        .map(|a| {
            if a_mask[a] {
                g.neighbors_of_a(a).filter(|&b| b_mask[b]).collect()
            } else {
                Vec::new()
            }
        })
        .collect();

    let mut mate_a = vec![FREE; n];
    let mut mate_b = vec![FREE; g.m()];
    let mut dist = vec![0usize; n];

    loop {
        // Layer the free A vertices and everything reachable by alternating paths.
        let mut queue = VecDeque::new();
        for a in 0..n {
            if !adj[a].is_empty() && mate_a[a] == FREE {
                dist[a] = 0;
                queue.push_back(a);
            } else {
                dist[a] = usize::MAX;
            }
        }
        let mut found = false;
        while let Some(a) = queue.pop_front() {
            for &b in &adj[a] {
                let next = mate_b[b];
                if next == FREE {
                    found = true;
                } else if dist[next] == usize::MAX {
                    dist[next] = dist[a] + 1;
                    queue.push_back(next);
                }
            }
        }
        if !found {
            break;
        }
        for a in 0..n {
            if mate_a[a] == FREE && !adj[a].is_empty() {
                augment(a, &adj, &mut mate_a, &mut mate_b, &mut dist);
            }
        }
    }

    mate_a
        .iter()
        .enumerate()
        .filter(|&(_, &b)| b != FREE)
        .map(|(a, &b)| Edge::new(a, b))
        .collect()
}

fn augment(
    a: usize,
    adj: &[Vec<usize>],
    mate_a: &mut [usize],
    mate_b: &mut [usize],
    dist: &mut [usize],
) -> bool {
    for &b in &adj[a] {
        let next = mate_b[b];
        if next == FREE || (dist[next] == dist[a] + 1 && augment(next, adj, mate_a, mate_b, dist)) {
            mate_a[a] = b;
            mate_b[b] = a;
            return true;
        }
    }
    dist[a] = usize::MAX;
    false
}

/// Size of a maximum matching in the whole graph.
pub fn maximum_matching_size(g: &BipartiteGraph) -> usize {
    maximum_matching(g, &vec![true; g.n()], &vec![true; g.m()]).len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generate::{complete, random};

    /// Exhaustive maximum matching size by trying every choice per A vertex.
    fn brute(g: &BipartiteGraph) -> usize {
        fn go(g: &BipartiteGraph, a: usize, used: &mut Vec<bool>) -> usize {
            if a == g.n() {
                return 0;
            }
            let mut best = go(g, a + 1, used);
            for b in g.neighbors_of_a(a) {
                if !used[b] {
                    used[b] = true;
                    best = best.max(1 + go(g, a + 1, used));
                    used[b] = false;
                }
            }
            best
        }
        go(g, 0, &mut vec![false; g.m()])
    }

    #[test]
    fn agrees_with_exhaustive_search() {
        for seed in 0..200 {
            let g = random(7, 6, 0.35, seed).unwrap();
            let mm = maximum_matching(&g, &[true; 7], &[true; 6]);
            assert_eq!(mm.len(), brute(&g), "seed {seed}");
            let mut bs: Vec<usize> = mm.iter().map(|e| e.b).collect();
            bs.sort_unstable();
            bs.dedup();
            assert_eq!(bs.len(), mm.len());
            assert!(mm.iter().all(|e| g.has_edge(e.a, e.b)));
        }
    }

    #[test]
    fn respects_masks() {
        let g = complete(3, 3).unwrap();
        assert_eq!(maximum_matching_size(&g), 3);
        let mm = maximum_matching(&g, &[true, true, false], &[false, true, false]);
        assert_eq!(mm.len(), 1);
        assert_eq!(mm[0].b, 1);
    }
}
