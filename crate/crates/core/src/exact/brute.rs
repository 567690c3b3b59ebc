use super::SemiMatching;
use crate::error::{Error, Result};
use crate::graph::{normalize_vertices, BipartiteGraph};

/// Limit on `Π_{a ∈ A'} deg(a)`, the number of semi-matchings enumerated.
pub const BRUTE_FORCE_LIMIT: u128 = 10_000_000;

fn prepare(g: &BipartiteGraph, active: &[usize]) -> Result<(Vec<usize>, Vec<Vec<usize>>)> {
    let active = normalize_vertices(active, g.n())?;
    if let Some(a) = g.find_isolated(&active) {
        return Err(Error::IsolatedVertex(a));
    }
    let count = active
        .iter()
        .fold(1u128, |acc, &a| acc.saturating_mul(g.deg_a(a) as u128));
    if count > BRUTE_FORCE_LIMIT {
        return Err(Error::GuardExceeded {
            what: "number of semi-matchings",
            actual: count,
            limit: BRUTE_FORCE_LIMIT,
        });
    }
    let choices = active
        .iter()
        .map(|&a| g.neighbors_of_a(a).collect())
        .collect();
    Ok((active, choices))
}

/// Calls `visit` on every semi-matching of `G|_{A' × B}`, in lexicographic
/// order of the assignment.
pub fn for_each_semi_matching<F>(g: &BipartiteGraph, active: &[usize], mut visit: F) -> Result<()>
where
    F: FnMut(&SemiMatching),
{
    let (active, choices) = prepare(g, active)?;
    let mut s = SemiMatching::from_parts(vec![None; g.n()], g.m());
    fn go<F: FnMut(&SemiMatching)>(
        i: usize,
        active: &[usize],
        choices: &[Vec<usize>],
        s: &mut SemiMatching,
        visit: &mut F,
    ) {
        if i == active.len() {
            visit(s);
            return;
        }
        for &b in &choices[i] {
            s.reassign(active[i], b);
            go(i + 1, active, choices, s, visit);
        }
    }
    go(0, &active, &choices, &mut s, &mut visit);
    Ok(())
}

/// Exhaustive reference solver. Returns the semi-matching with the
/// lexicographically smallest decreasing load profile, ties broken by the
/// lexicographically smallest assignment.
pub fn brute_force_semi(g: &BipartiteGraph, active: &[usize]) -> Result<SemiMatching> {
    let (active, choices) = prepare(g, active)?;
    let mut search = Search {
        active: &active,
        choices: &choices,
        assign: vec![None; g.n()],
        load: vec![0; g.m()],
        best: None,
    };
    search.go(0, 0);
    let (_, assign) = search.best.expect("at least one semi-matching exists");
    Ok(SemiMatching::from_parts(assign, g.m()))
}

struct Search<'a> {
    active: &'a [usize],
    choices: &'a [Vec<usize>],
    assign: Vec<Option<usize>>,
    load: Vec<usize>,
    best: Option<(Vec<usize>, Vec<Option<usize>>)>,
}

impl Search<'_> {
    fn go(&mut self, i: usize, cur_max: usize) {
        // Loads only grow, so a partial max above the best profile's head cannot win.
        if let Some((profile, _)) = &self.best {
            if cur_max > profile[0] {
                return;
            }
        }
        if i == self.active.len() {
            let mut profile = self.load.clone();
            profile.sort_unstable_by(|x, y| y.cmp(x));
            let better = match &self.best {
                None => true,
                // Enumeration is in lexicographic assignment order, so only a
                // strictly smaller profile can replace the incumbent.
                Some((bp, _)) => profile < *bp,
            };
            if better {
                self.best = Some((profile, self.assign.clone()));
            }
            return;
        }
        let a = self.active[i];
        for &b in self.choices[i].iter() {
            self.assign[a] = Some(b);
            self.load[b] += 1;
            self.go(i + 1, cur_max.max(self.load[b]));
            self.load[b] -= 1;
        }
        self.assign[a] = None;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::fixtures::{star, tri};
    use crate::graph::generate::complete;

    #[test]
    fn small_cases() {
        let g = tri();
        let s = brute_force_semi(&g, &g.all_a()).unwrap();
        assert_eq!(s.degmax(), 2);
        assert_eq!(s.assignment(), &[Some(0), Some(0), Some(1)]);
        let g = complete(3, 3).unwrap();
        let s = brute_force_semi(&g, &g.all_a()).unwrap();
        assert_eq!(s.degmax(), 1);
        assert_eq!(s.assignment(), &[Some(0), Some(1), Some(2)]);
        assert_eq!(
            brute_force_semi(&star(4), &[0, 1, 2, 3]).unwrap().degmax(),
            4
        );
    }

    #[test]
    fn enumeration_counts_and_guard() {
        let g = tri();
        let mut count = 0;
        for_each_semi_matching(&g, &g.all_a(), |_| count += 1).unwrap();
        assert_eq!(count, 2);
        let big = complete(12, 4).unwrap();
        assert!(matches!(
            brute_force_semi(&big, &big.all_a()),
            Err(Error::GuardExceeded { .. })
        ));
        let h = BipartiteGraph::new(2, 1, [(0, 0)]).unwrap();
        assert!(matches!(
            brute_force_semi(&h, &[0, 1]),
            Err(Error::IsolatedVertex(1))
        ));
    }

    #[test]
    fn pruned_search_matches_plain_enumeration() {
        for seed in 0..60 {
            let g = crate::graph::generate::random_covering(6, 4, 0.5, seed).unwrap();
            let mut best: Option<(Vec<usize>, Vec<Option<usize>>)> = None;
            for_each_semi_matching(&g, &g.all_a(), |s| {
                let key = (s.sorted_profile(), s.assignment().to_vec());
                if best.as_ref().is_none_or(|b| key < *b) {
                    best = Some(key);
                }
            })
            .unwrap();
            let s = brute_force_semi(&g, &g.all_a()).unwrap();
            assert_eq!(s.assignment(), best.unwrap().1.as_slice(), "seed {seed}");
        }
    }
}
