//! Instance generators.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use statrs::function::gamma::ln_gamma;

use super::{normalize_vertices, BipartiteGraph, Edge};
use crate::error::{Error, Result};

/// Generator selection, as used by the CLI and experiment specs.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Generator {
    Complete {
        n: usize,
        m: usize,
    },
    Random {
        n: usize,
        m: usize,
        p: f64,
        seed: u64,
    },
    RandomCovering {
        n: usize,
        m: usize,
        p: f64,
        seed: u64,
    },
    HardG1 {
        n: usize,
        c: usize,
        eps: f64,
        seed: u64,
    },
    MatchingG2 {
        n: usize,
        members: Vec<usize>,
    },
}

impl Generator {
    pub fn build(&self) -> Result<BipartiteGraph> {
        match *self {
            Generator::Complete { n, m } => complete(n, m),
            Generator::Random { n, m, p, seed } => random(n, m, p, seed),
            Generator::RandomCovering { n, m, p, seed } => random_covering(n, m, p, seed),
            Generator::HardG1 { n, c, eps, seed } => hard_g1(n, c, eps, seed),
            Generator::MatchingG2 { n, ref members } => matching_g2(n, members),
        }
    }

    /// The same generator with its seed advanced by `offset` (seedless
    /// generators are returned unchanged).
    pub fn reseeded(&self, offset: u64) -> Generator {
        let mut g = self.clone();
        match &mut g {
            Generator::Random { seed, .. }
            | Generator::RandomCovering { seed, .. }
            | Generator::HardG1 { seed, .. } => *seed = seed.wrapping_add(offset),
            Generator::Complete { .. } | Generator::MatchingG2 { .. } => {}
        }
        g
    }

    /// Short human-readable descriptor used in result records.
    pub fn describe(&self) -> String {
        match self {
            Generator::Complete { n, m } => format!("complete(n={n},m={m})"),
            Generator::Random { n, m, p, seed } => format!("random(n={n},m={m},p={p},seed={seed})"),
            Generator::RandomCovering { n, m, p, seed } => {
                format!("random_covering(n={n},m={m},p={p},seed={seed})")
            }
            Generator::HardG1 { n, c, eps, seed } => {
                format!("hard_g1(n={n},c={c},eps={eps},seed={seed})")
            }
            Generator::MatchingG2 { n, members } => {
                format!("matching_g2(n={n},|A'|={})", members.len())
            }
        }
    }
}

fn check_counts(n: usize, m: usize) -> Result<()> {
    if n == 0 || m == 0 {
        return Err(Error::InvalidArgument(format!(
            "vertex counts must be positive, got n={n}, m={m}"
        )));
    }
    Ok(())
}

/// `K_{n,m}`, edges in row-major order.
pub fn complete(n: usize, m: usize) -> Result<BipartiteGraph> {
    check_counts(n, m)?;
    let edges = (0..n)
        .flat_map(|a| (0..m).map(move |b| Edge::new(a, b)))
        .collect();
    Ok(BipartiteGraph::from_unique(n, m, edges))
}

/// Each of the `n·m` pairs is an edge independently with probability `p`.
pub fn random(n: usize, m: usize, p: f64, seed: u64) -> Result<BipartiteGraph> {
    check_counts(n, m)?;
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidArgument(format!(
            "edge probability {p} not in [0, 1]"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for a in 0..n {
        for b in 0..m {
            if rng.random_bool(p) {
                edges.push(Edge::new(a, b));
            }
        }
    }
    Ok(BipartiteGraph::from_unique(n, m, edges))
}

/// Like [`random`], then gives every isolated A vertex one uniformly chosen neighbor.
pub fn random_covering(n: usize, m: usize, p: f64, seed: u64) -> Result<BipartiteGraph> {
    let g = random(n, m, p, seed)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e37_79b9_7f4a_7c15);
    let mut edges = g.edges().to_vec();
    for a in 0..n {
        if g.deg_a(a) == 0 {
            edges.push(Edge::new(a, rng.random_range(0..m)));
        }
    }
    Ok(BipartiteGraph::from_unique(n, m, edges))
}

/// Width `|B|` of the complete graph used by the skeleton lower bound.
///
/// With `eps = 0` this is `(c!)^{1/(c+1)} · n^{1/(c+1)}`; with `eps > 0`
/// it is `(c'!)^{1/(c'+1)} · (eps/(1+eps) · n)^{1/(c'+1)}` where
/// `c' = (1+eps)·c` and `c'!` is `Γ(c'+1)`. The value is floored and
/// clamped to at least 1.
pub fn lower_bound_width(n: usize, c: usize, eps: f64) -> Result<usize> {
    if n == 0 || c == 0 {
        return Err(Error::InvalidArgument(format!(
            "lower-bound width needs n ≥ 1 and c ≥ 1, got n={n}, c={c}"
        )));
    }
    if !(eps >= 0.0 && eps.is_finite()) {
        return Err(Error::InvalidArgument(format!(
            "eps {eps} must be finite and ≥ 0"
        )));
    }
    let (cc, base) = if eps == 0.0 {
        (c as f64, n as f64)
    } else {
        ((1.0 + eps) * c as f64, eps / (1.0 + eps) * n as f64)
    };
    let width = ((ln_gamma(cc + 1.0) + base.ln()) / (cc + 1.0)).exp();
    // Guard against exp/ln rounding just below an integer (e.g. √16).
    Ok(((width + 1e-9).floor() as usize).max(1))
}

/// A member of the family `G₁`: `A = {a_i}`, `B = B₀ ∪ B₁` where `b⁰_j` is
/// B index `j` and `b¹_j` is `m + j`. For every `(i, j)` exactly one of
/// `(a_i, b⁰_j)`, `(a_i, b¹_j)` is present, selected by `bits[i][j]`.
pub fn hard_g1_from_bits(bits: &[Vec<bool>]) -> Result<BipartiteGraph> {
    let n = bits.len();
    let m = bits.first().map_or(0, Vec::len);
    check_counts(n, m)?;
    if bits.iter().any(|row| row.len() != m) {
        return Err(Error::InvalidArgument(
            "bit matrix rows differ in length".into(),
        ));
    }
    let edges = bits
        .iter()
        .enumerate()
        .flat_map(|(i, row)| {
            row.iter()
                .enumerate()
                .map(move |(j, &x)| Edge::new(i, if x { m + j } else { j }))
        })
        .collect();
    Ok(BipartiteGraph::from_unique(n, 2 * m, edges))
}

/// [`hard_g1_from_bits`] with `m = lower_bound_width(n, c, eps)` and bits drawn from `seed`.
pub fn hard_g1(n: usize, c: usize, eps: f64, seed: u64) -> Result<BipartiteGraph> {
    let m = lower_bound_width(n, c, eps)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let bits: Vec<Vec<bool>> = (0..n)
        .map(|_| (0..m).map(|_| rng.random_bool(0.5)).collect())
        .collect();
    hard_g1_from_bits(&bits)
}

/// A member of `G₂`: `|A| = |C| = n`, and the listed A vertices are matched
/// to C in index order (`a_i → c_i`).
pub fn matching_g2(n: usize, members: &[usize]) -> Result<BipartiteGraph> {
    check_counts(n, n)?;
    let members = normalize_vertices(members, n)?;
    let edges = members.into_iter().map(|a| Edge::new(a, a)).collect();
    Ok(BipartiteGraph::from_unique(n, n, edges))
}

/// A member of `G = G₁ × G₂` on `B₀ ∪ B₁ ∪ C`: C vertex `c_i` is B index
/// `2m + i`. Returns the graph and the index range of the `G₁` edges
/// (the remaining edges come from `G₂`).
pub fn hard_family(bits: &[Vec<bool>], members: &[usize]) -> Result<(BipartiteGraph, usize)> {
    let g1 = hard_g1_from_bits(bits)?;
    let g2 = matching_g2(g1.n(), members)?;
    let offset = g1.m();
    let mut edges = g1.edges().to_vec();
    let split = edges.len();
    edges.extend(g2.edges().iter().map(|e| Edge::new(e.a, offset + e.b)));
    Ok((
        BipartiteGraph::from_unique(g1.n(), offset + g1.n(), edges),
        split,
    ))
}
