//! Semi-matching skeletons and the one-way two-party protocol built on them.
//!
//! A skeleton `S ⊆ E` has quality `c` when every `A' ⊆ A` satisfies
//! `degmax semi(A', B, S) ≤ c · degmax semi(A', B, E)`. An optimal
//! semi-matching is an `O(√n)` skeleton with `n` edges; adding an optimal
//! semi-matching of each B vertex's fiber gives an `O(n^{1/3})` skeleton
//! with at most `2n` edges.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{optimal_semi, SemiMatching};
use crate::graph::generate::{complete, lower_bound_width};
use crate::graph::io::{load_subset, read_to_string};
use crate::graph::{mask_of, BipartiteGraph, Edge, EdgeSubset};
use crate::streaming::ceil_log2;

/// Largest `n` for which [`QualityMode::Exact`] enumerates every `A' ⊆ A`.
pub const EXACT_QUALITY_LIMIT: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SkeletonKind {
    /// An optimal semi-matching.
    Sqrt,
    /// An optimal semi-matching plus an optimal semi-matching of each fiber.
    Cuberoot,
    /// Any edge subset supplied by the caller.
    Custom,
}

impl SkeletonKind {
    pub fn as_str(self) -> &'static str {
        match self {
            SkeletonKind::Sqrt => "sqrt",
            SkeletonKind::Cuberoot => "cuberoot",
            SkeletonKind::Custom => "custom",
        }
    }

    /// Edge-count cap as a multiple of `n` (`None` for custom skeletons).
    pub fn size_factor(self) -> Option<usize> {
        match self {
            SkeletonKind::Sqrt => Some(1),
            SkeletonKind::Cuberoot => Some(2),
            SkeletonKind::Custom => None,
        }
    }

    /// Approximation bound of [`two_party`] with this kind: `√n + 2` or `2n^{1/3} + 2`.
    pub fn protocol_bound(self, n: usize) -> Option<f64> {
        let n = n as f64;
        match self {
            SkeletonKind::Sqrt => Some(n.sqrt() + 2.0),
            SkeletonKind::Cuberoot => Some(2.0 * n.cbrt() + 2.0),
            SkeletonKind::Custom => None,
        }
    }
}

impl fmt::Display for SkeletonKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SkeletonKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "sqrt" => Ok(SkeletonKind::Sqrt),
            "cuberoot" => Ok(SkeletonKind::Cuberoot),
            "custom" => Ok(SkeletonKind::Custom),
            _ => Err(Error::InvalidArgument(format!(
                "unknown skeleton kind {s:?} (expected sqrt or cuberoot)"
            ))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Skeleton {
    pub kind: SkeletonKind,
    pub edges: EdgeSubset,
    /// [`BipartiteGraph::fingerprint`] of the graph the edges index into.
    pub source: u64,
}

impl Skeleton {
    pub fn custom(g: &BipartiteGraph, edges: EdgeSubset) -> Self {
        Self {
            kind: SkeletonKind::Custom,
            edges,
            source: g.fingerprint(),
        }
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// `(A, B, S)` on the vertex sets of `g`.
    pub fn graph(&self, g: &BipartiteGraph) -> Result<BipartiteGraph> {
        if g.fingerprint() != self.source {
            return Err(Error::InvalidArgument(
                "skeleton was built for a different graph".into(),
            ));
        }
        Ok(g.edge_subgraph(&self.edges))
    }
}

fn skeleton_on(g: &BipartiteGraph, active: &[usize], kind: SkeletonKind) -> Result<EdgeSubset> {
    let s = optimal_semi(g, active)?;
    let mut edges = s.edges();
    match kind {
        SkeletonKind::Sqrt => {}
        SkeletonKind::Cuberoot => {
            let mut fibers = vec![Vec::new(); g.m()];
            for e in &edges {
                fibers[e.b].push(e.a);
            }
            for fiber in fibers.iter().filter(|f| !f.is_empty()) {
                edges.extend(optimal_semi(g, fiber)?.edges());
            }
        }
        SkeletonKind::Custom => {
            return Err(Error::InvalidArgument(
                "custom skeletons are not constructed".into(),
            ))
        }
    }
    EdgeSubset::from_edges(g, edges)
}

/// The edges of `optimal_semi(g, A)`: exactly `n` edges.
pub fn sqrt_skeleton(g: &BipartiteGraph) -> Result<Skeleton> {
    build_skeleton(g, SkeletonKind::Sqrt)
}

/// `S ∪ ⋃_{b ∈ B(S)} semi(Γ_S(b), B, E)` with `S = optimal_semi(g, A)`: at most `2n` edges.
pub fn cuberoot_skeleton(g: &BipartiteGraph) -> Result<Skeleton> {
    build_skeleton(g, SkeletonKind::Cuberoot)
}

pub fn build_skeleton(g: &BipartiteGraph, kind: SkeletonKind) -> Result<Skeleton> {
    Ok(Skeleton {
        kind,
        edges: skeleton_on(g, &g.all_a(), kind)?,
        source: g.fingerprint(),
    })
}

/// `√n · √d + 1`; the sqrt skeleton's `degmax` on `A'` stays strictly below
/// it when `d = degmax semi(A', B, E)`.
pub fn sqrt_quality_bound(n: usize, d: usize) -> f64 {
    (n as f64).sqrt() * (d as f64).sqrt() + 1.0
}

/// `⌈2 n^{1/3} d⌉`; the cuberoot skeleton's `degmax` on `A'` is at most this.
pub fn cuberoot_quality_bound(n: usize, d: usize) -> usize {
    (2.0 * (n as f64).cbrt() * d as f64 - 1e-9).ceil() as usize
}

/// Optimal `degmax` of one subset in the skeleton and in the full graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubsetQuality {
    pub subset: Vec<usize>,
    /// `None` when some vertex of the subset has no skeleton edge.
    pub skeleton: Option<usize>,
    pub full: usize,
}

impl SubsetQuality {
    /// `skeleton / full`; infinite when the skeleton cannot cover the subset.
    pub fn ratio(&self) -> f64 {
        self.skeleton
            .map_or(f64::INFINITY, |s| s as f64 / self.full as f64)
    }

    /// Larger ratio first; equal ratios prefer the smaller subset, then the
    /// lexicographically smaller one.
    fn worse_than(&self, other: &SubsetQuality) -> bool {
        let by_ratio = match (self.skeleton, other.skeleton) {
            (None, None) => Ordering::Equal,
            (None, Some(_)) => Ordering::Greater,
            (Some(_), None) => Ordering::Less,
            (Some(x), Some(y)) => (x * other.full).cmp(&(y * self.full)),
        };
        by_ratio == Ordering::Greater
            || (by_ratio == Ordering::Equal
                && (self.subset.len(), &self.subset) < (other.subset.len(), &other.subset))
    }
}

fn degmax_on(g: &BipartiteGraph, subset: &[usize]) -> Option<usize> {
    match optimal_semi(g, subset) {
        Ok(s) => Some(s.degmax()),
        Err(Error::IsolatedVertex(_)) => None,
        Err(e) => unreachable!("subset vertices are in range: {e}"),
    }
}

struct Evaluator {
    full: BipartiteGraph,
    sk: BipartiteGraph,
}

impl Evaluator {
    fn new(g: &BipartiteGraph, sk: &Skeleton) -> Result<Self> {
        if let Some(a) = g.find_isolated(&g.all_a()) {
            return Err(Error::IsolatedVertex(a));
        }
        Ok(Self {
            full: g.clone(),
            sk: sk.graph(g)?,
        })
    }

    fn eval(&self, subset: Vec<usize>) -> SubsetQuality {
        SubsetQuality {
            skeleton: degmax_on(&self.sk, &subset),
            full: degmax_on(&self.full, &subset).expect("no isolated vertices"),
            subset,
        }
    }
}

/// Every non-empty `A' ⊆ A`, ordered by bit mask (bit `i` is `a_i`).
/// Requires `n ≤ 16`.
pub fn subset_qualities(g: &BipartiteGraph, sk: &Skeleton) -> Result<Vec<SubsetQuality>> {
    if g.n() > EXACT_QUALITY_LIMIT {
        return Err(Error::GuardExceeded {
            what: "|A| for exhaustive skeleton quality",
            actual: g.n() as u128,
            limit: EXACT_QUALITY_LIMIT as u128,
        });
    }
    let ev = Evaluator::new(g, sk)?;
    let n = g.n();
    Ok((1u32..1 << n)
        .into_par_iter()
        .map(|mask| ev.eval((0..n).filter(|&a| mask & (1 << a) != 0).collect()))
        .collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum QualityMode {
    /// All non-empty subsets; needs `n ≤ 16`.
    Exact,
    /// Local search from `budget` starting sets: the skeleton's fibers
    /// first, then seeded random subsets. Gives a lower bound on the
    /// worst ratio.
    Adversarial { budget: usize, seed: u64 },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct QualityReport {
    pub worst: SubsetQuality,
    pub ratio: f64,
    pub evaluated: usize,
}

pub fn skeleton_quality(
    g: &BipartiteGraph,
    sk: &Skeleton,
    mode: QualityMode,
) -> Result<QualityReport> {
    if g.n() == 0 {
        return Err(Error::InvalidArgument(
            "skeleton quality needs a non-empty A side".into(),
        ));
    }
    let (worst, evaluated) = match mode {
        QualityMode::Exact => {
            let all = subset_qualities(g, sk)?;
            let evaluated = all.len();
            let worst = all
                .into_iter()
                .reduce(|x, y| if y.worse_than(&x) { y } else { x })
                .expect("n ≥ 1");
            (worst, evaluated)
        }
        QualityMode::Adversarial { budget, seed } => adversarial(g, sk, budget, seed)?,
    };
    Ok(QualityReport {
        ratio: worst.ratio(),
        worst,
        evaluated,
    })
}

fn adversarial(
    g: &BipartiteGraph,
    sk: &Skeleton,
    budget: usize,
    seed: u64,
) -> Result<(SubsetQuality, usize)> {
    let ev = Evaluator::new(g, sk)?;
    let n = g.n();
    let mut fibers = vec![Vec::new(); g.m()];
    for e in sk.edges.edges(g) {
        fibers[e.b].push(e.a);
    }
    let mut starts: Vec<Vec<usize>> = fibers.into_iter().filter(|f| !f.is_empty()).collect();
    starts.truncate(budget);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    while starts.len() < budget {
        let mut all = g.all_a();
        all.shuffle(&mut rng);
        all.truncate(rng.random_range(1..=n));
        all.sort_unstable();
        starts.push(all);
    }

    let mut evaluated = 0;
    let mut best: Option<SubsetQuality> = None;
    for start in starts {
        let mut cur = ev.eval(start);
        evaluated += 1;
        // Single add/remove moves until no move gives a worse ratio.
        loop {
            let mut step: Option<SubsetQuality> = None;
            for a in 0..n {
                let mut next = cur.subset.clone();
                match next.binary_search(&a) {
                    Ok(i) if next.len() > 1 => {
                        next.remove(i);
                    }
                    Ok(_) => continue,
                    Err(i) => next.insert(i, a),
                }
                let q = ev.eval(next);
                evaluated += 1;
                if q.worse_than(step.as_ref().unwrap_or(&cur)) {
                    step = Some(q);
                }
            }
            match step {
                Some(q) if q.ratio() > cur.ratio() => cur = q,
                _ => break,
            }
        }
        if best.as_ref().is_none_or(|b| cur.worse_than(b)) {
            best = Some(cur);
        }
    }
    let best =
        best.ok_or_else(|| Error::InvalidArgument("adversarial budget must be at least 1".into()))?;
    Ok((best, evaluated))
}

/// A split of `E` into Alice's edges `E₁` and Bob's edges `E₂`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgePartition {
    pub alice: EdgeSubset,
    pub bob: EdgeSubset,
}

impl EdgePartition {
    /// Checks that the two sides are disjoint and together cover `E`.
    pub fn new(g: &BipartiteGraph, alice: EdgeSubset, bob: EdgeSubset) -> Result<Self> {
        let mut seen = vec![false; g.num_edges()];
        for &i in alice.indices().iter().chain(bob.indices()) {
            if i >= g.num_edges() {
                return Err(Error::InvalidPartition(format!(
                    "edge index {i} out of range"
                )));
            }
            if std::mem::replace(&mut seen[i], true) {
                let e = g.edge(i);
                return Err(Error::InvalidPartition(format!(
                    "edge ({}, {}) is on both sides",
                    e.a, e.b
                )));
            }
        }
        if let Some(i) = seen.iter().position(|&x| !x) {
            let e = g.edge(i);
            return Err(Error::InvalidPartition(format!(
                "edge ({}, {}) is on neither side",
                e.a, e.b
            )));
        }
        Ok(Self { alice, bob })
    }

    /// Alice holds `alice`, Bob holds the rest.
    pub fn from_alice(g: &BipartiteGraph, alice: EdgeSubset) -> Self {
        let bob = alice.complement(g);
        Self { alice, bob }
    }

    /// Each edge goes to Alice with probability ½.
    pub fn random(g: &BipartiteGraph, seed: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let alice = (0..g.num_edges()).filter(|_| rng.random_bool(0.5));
        Self::from_alice(g, EdgeSubset::new(g, alice).expect("indices in range"))
    }

    /// `random:<seed>`, or `file:<path>` naming an edge file with Alice's edges.
    pub fn parse(g: &BipartiteGraph, spec: &str) -> Result<Self> {
        if let Some(seed) = spec.strip_prefix("random:") {
            let seed = seed
                .parse()
                .map_err(|_| Error::InvalidArgument(format!("bad split seed {seed:?}")))?;
            Ok(Self::random(g, seed))
        } else if let Some(path) = spec.strip_prefix("file:") {
            let alice = load_subset(g, &read_to_string(path)?)?;
            Ok(Self::from_alice(g, alice))
        } else {
            Err(Error::InvalidArgument(format!(
                "split {spec:?} must be random:<seed> or file:<path>"
            )))
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ProtocolTranscript {
    pub kind: SkeletonKind,
    pub alice_edges: usize,
    pub bob_edges: usize,
    /// Skeleton edges sent by Alice.
    pub message_edges: usize,
    /// `message_edges · ⌈log₂(2nm)⌉`.
    pub message_bits: u64,
    /// `message_edges · ⌈log₂ m⌉`.
    pub message_bits_compact: u64,
    pub output: SemiMatching,
    pub degmax: usize,
    pub optimum: usize,
    pub ratio: f64,
    pub bound: f64,
}

impl ProtocolTranscript {
    pub fn within_bound(&self) -> bool {
        self.ratio <= self.bound
    }
}

/// Alice sends a skeleton of `(A(E₁), B, E₁)`; Bob returns an optimal
/// semi-matching of the skeleton together with `E₂`.
pub fn two_party(
    g: &BipartiteGraph,
    split: &EdgePartition,
    kind: SkeletonKind,
) -> Result<ProtocolTranscript> {
    let split = EdgePartition::new(g, split.alice.clone(), split.bob.clone())?;
    let bound = kind
        .protocol_bound(g.n())
        .ok_or_else(|| Error::InvalidArgument("protocol needs the sqrt or cuberoot kind".into()))?;
    if let Some(a) = g.find_isolated(&g.all_a()) {
        return Err(Error::IsolatedVertex(a));
    }

    let alice_graph = g.edge_subgraph(&split.alice);
    let message = skeleton_on(&alice_graph, &alice_graph.covered_a(), kind)?;
    let sent = EdgeSubset::from_edges(g, message.edges(&alice_graph))?;

    let bob_graph = g.edge_subgraph(&sent.union(&split.bob));
    if let Some(a) = bob_graph.find_isolated(&g.all_a()) {
        return Err(Error::ReceiverInfeasible(a));
    }
    let output = optimal_semi(&bob_graph, &g.all_a())?;
    let output = SemiMatching::from_assignment(g, output.assignment().to_vec())?;
    let optimum = optimal_semi(g, &g.all_a())?.degmax();
    let degmax = output.degmax();
    let edges = sent.len() as u64;
    Ok(ProtocolTranscript {
        kind,
        alice_edges: split.alice.len(),
        bob_edges: split.bob.len(),
        message_edges: sent.len(),
        message_bits: edges * ceil_log2(2 * g.n() * g.m()) as u64,
        message_bits_compact: edges * ceil_log2(g.m()) as u64,
        ratio: if optimum == 0 {
            1.0
        } else {
            degmax as f64 / optimum as f64
        },
        output,
        degmax,
        optimum,
        bound,
    })
}

/// Result of [`hard_instance_probe`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ProbeReport {
    /// `|B|` of the complete graph `K_{n,m}`.
    pub width: usize,
    pub witness: Vec<usize>,
    /// `degmax semi(witness, B, S)`; `None` when a witness vertex has no skeleton edge.
    pub degmax: Option<usize>,
    /// `e^{-1.3} · n^{1/(c+1)}`, or `e^{-1.3} · (ε/(1+ε)·n)^{1/(c'+1)}` with `c' = (1+ε)c`.
    pub lower_bound: f64,
    /// Whether local search ran after the neighborhood-class search.
    pub local_search: bool,
}

impl ProbeReport {
    pub fn meets_lower_bound(&self) -> bool {
        self.degmax.is_none_or(|d| d as f64 >= self.lower_bound)
    }
}

/// Searches for `A'` with `|A'| ≤ m` that the skeleton serves badly, where
/// the skeleton is a subset of `K_{n,m}` with at most `c·n` edges.
///
/// Vertices are grouped by skeleton neighborhood. For each class
/// neighborhood `U`, the candidate takes up to `m` vertices whose
/// neighborhoods lie inside `U`. If some vertex has more than `c` skeleton
/// edges (`c' = (1+ε)c` when `ε > 0`), single-vertex swaps refine the best
/// candidate afterwards.
pub fn hard_instance_probe(n: usize, c: usize, eps: f64, skeleton: &[Edge]) -> Result<ProbeReport> {
    let m = lower_bound_width(n, c, eps)?;
    let kn = complete(n, m)?;
    let subset = EdgeSubset::from_edges(&kn, skeleton.iter().copied())?;
    if subset.len() > c * n {
        return Err(Error::InvalidArgument(format!(
            "skeleton has {} edges, more than c·n = {}",
            subset.len(),
            c * n
        )));
    }
    let sk = kn.edge_subgraph(&subset);
    let c_eff = if eps == 0.0 {
        c as f64
    } else {
        (1.0 + eps) * c as f64
    };
    let base = if eps == 0.0 {
        n as f64
    } else {
        eps / (1.0 + eps) * n as f64
    };
    let lower_bound = (-1.3f64).exp() * base.powf(1.0 / (c_eff + 1.0));

    let report = |witness: Vec<usize>, degmax, local_search| ProbeReport {
        width: m,
        witness,
        degmax,
        lower_bound,
        local_search,
    };
    if let Some(a) = sk.find_isolated(&sk.all_a()) {
        return Ok(report(vec![a], None, false));
    }

    let hoods: Vec<Vec<usize>> = (0..n).map(|a| sk.neighbors_of_a(a).collect()).collect();
    let mut classes = hoods.clone();
    classes.sort();
    classes.dedup();
    let mut best: Option<(usize, Vec<usize>)> = None;
    for u in &classes {
        let inside = mask_of(m, u);
        let members: Vec<usize> = (0..n)
            .filter(|&a| hoods[a].iter().all(|&b| inside[b]))
            .take(m)
            .collect();
        let d = optimal_semi(&sk, &members)?.degmax();
        if best.as_ref().is_none_or(|(bd, _)| d > *bd) {
            best = Some((d, members));
        }
    }
    let (mut d, mut witness) = best.expect("n ≥ 1 gives a class");

    let local_search = hoods.iter().any(|h| h.len() as f64 > c_eff);
    if local_search {
        loop {
            let mut improved = false;
            'moves: for add in (0..n).filter(|a| witness.binary_search(a).is_err()) {
                let drops: Vec<Option<usize>> = if witness.len() < m {
                    vec![None]
                } else {
                    witness.iter().map(|&x| Some(x)).collect()
                };
                for drop in drops {
                    let mut next: Vec<usize> = witness
                        .iter()
                        .copied()
                        .filter(|&x| Some(x) != drop)
                        .collect();
                    let pos = next.binary_search(&add).unwrap_err();
                    next.insert(pos, add);
                    let nd = optimal_semi(&sk, &next)?.degmax();
                    if nd > d {
                        d = nd;
                        witness = next;
                        improved = true;
                        break 'moves;
                    }
                }
            }
            if !improved {
                break;
            }
        }
    }
    Ok(report(witness, Some(d), local_search))
}
