use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::flow::FlowNetwork;
use crate::graph::{normalize_vertices, BipartiteGraph};

/// Largest active set handled by subset enumeration (2²⁰ subsets).
pub const ENUMERATION_LIMIT: usize = 20;

/// A subset `A'' ⊆ A'` together with its expansion `α = |Γ(A'')| / |A''|`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Expansion {
    pub subset: Vec<usize>,
    pub neighborhood: usize,
}

impl Expansion {
    pub fn alpha(&self) -> Ratio<usize> {
        Ratio::new(self.neighborhood, self.subset.len())
    }

    /// `⌈1/α⌉`, which equals `degmax` of an optimal semi-matching when `α` is minimal.
    pub fn load_bound(&self) -> usize {
        self.subset.len().div_ceil(self.neighborhood)
    }
}

fn prepare(g: &BipartiteGraph, active: &[usize]) -> Result<Vec<usize>> {
    let active = normalize_vertices(active, g.n())?;
    if active.is_empty() {
        return Err(Error::InvalidArgument(
            "expansion needs a non-empty vertex set".into(),
        ));
    }
    if let Some(a) = g.find_isolated(&active) {
        return Err(Error::IsolatedVertex(a));
    }
    Ok(active)
}

fn neighborhood_size(g: &BipartiteGraph, members: &[usize]) -> usize {
    let mut seen = vec![false; g.m()];
    members
        .iter()
        .flat_map(|&a| g.neighbors_of_a(a))
        .filter(|&b| !std::mem::replace(&mut seen[b], true))
        .count()
}

/// Minimum-expansion subset of `A'`: exhaustive for `|A'| ≤ 20`, otherwise
/// by parametric minimum cuts. Both routes are exact.
pub fn min_expansion(g: &BipartiteGraph, active: &[usize]) -> Result<Expansion> {
    if normalize_vertices(active, g.n())?.len() <= ENUMERATION_LIMIT {
        min_expansion_enumerate(g, active)
    } else {
        min_expansion_by_cut(g, active)
    }
}

/// Enumerates every non-empty subset in Gray-code order, maintaining
/// `|Γ(·)|` incrementally. Ties prefer fewer vertices, then the subset whose
/// bit mask over the sorted `A'` is smallest.
pub fn min_expansion_enumerate(g: &BipartiteGraph, active: &[usize]) -> Result<Expansion> {
    let active = prepare(g, active)?;
    let k = active.len();
    if k > ENUMERATION_LIMIT {
        return Err(Error::GuardExceeded {
            what: "active set size for subset enumeration",
            actual: k as u128,
            limit: ENUMERATION_LIMIT as u128,
        });
    }

    let mut hits = vec![0u32; g.m()];
    let mut gamma = 0usize;
    let mut mask = 0u32;
    // (neighborhood, size, mask)
    let mut best: Option<(usize, usize, u32)> = None;
    for i in 1u32..(1 << k) {
        let bit = i.trailing_zeros() as usize;
        let adding = mask & (1 << bit) == 0;
        mask ^= 1 << bit;
        for b in g.neighbors_of_a(active[bit]) {
            if adding {
                hits[b] += 1;
                gamma += usize::from(hits[b] == 1);
            } else {
                hits[b] -= 1;
                gamma -= usize::from(hits[b] == 0);
            }
        }
        let size = mask.count_ones() as usize;
        let better = match best {
            None => true,
            Some((bg, bs, bm)) => {
                let (lhs, rhs) = (gamma * bs, bg * size);
                lhs < rhs || (lhs == rhs && (size, mask) < (bs, bm))
            }
        };
        if better {
            best = Some((gamma, size, mask));
        }
    }

    let (neighborhood, _, mask) = best.expect("k ≥ 1");
    let subset = (0..k)
        .filter(|&j| mask & (1 << j) != 0)
        .map(|j| active[j])
        .collect();
    Ok(Expansion {
        subset,
        neighborhood,
    })
}

/// Dinkelbach iteration on parametric minimum cuts.
///
/// For a ratio `λ = p/q`, the network source → `a` (capacity `p`),
/// `a → b` (unbounded), `b` → sink (capacity `q`) has minimum cut
/// `p·|A'| + min_X (q·|Γ(X)| − p·|X|)`. A cut below `p·|A'|` exposes a set
/// with expansion strictly below `λ`, which becomes the next `λ`.
pub fn min_expansion_by_cut(g: &BipartiteGraph, active: &[usize]) -> Result<Expansion> {
    let active = prepare(g, active)?;
    let (n, m) = (g.n(), g.m());
    let (source, sink) = (n + m, n + m + 1);
    let mut best = Expansion {
        neighborhood: neighborhood_size(g, &active),
        subset: active.clone(),
    };
    loop {
        let p = best.neighborhood as u64;
        let q = best.subset.len() as u64;
        let unbounded = p * active.len() as u64 + 1;
        let mut net = FlowNetwork::new(n + m + 2);
        for &a in &active {
            net.add_arc(source, a, p);
            for b in g.neighbors_of_a(a) {
                net.add_arc(a, n + b, unbounded);
            }
        }
        for b in 0..m {
            net.add_arc(n + b, sink, q);
        }
        let cut = net.max_flow(source, sink);
        if cut >= p * active.len() as u64 {
            return Ok(best);
        }
        let side = net.residual_reachable(source);
        let subset: Vec<usize> = active.iter().copied().filter(|&a| side[a]).collect();
        let neighborhood = neighborhood_size(g, &subset);
        debug_assert!((neighborhood as u64) * q < p * subset.len() as u64);
        best = Expansion {
            subset,
            neighborhood,
        };
    }
}
