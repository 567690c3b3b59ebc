//! Streaming semi-matching algorithms with explicit space accounting.
//!
//! The building block is [`incomplete_pass`]: one pass that greedily builds
//! a `d`-bounded partial assignment `S₁` while keeping up to `k` edges per A
//! vertex in a side set `E'`, then fills in unmatched vertices with a
//! maximum `d`-bounded assignment `S₂` over `E'`. [`asemi`] repeats it on the
//! still-unmatched vertices. [`one_pass_semi`] and [`multipass_semi`] run
//! `⌈log₂ n⌉ + 1` copies with doubling caps side by side over the same
//! replays and keep the best complete result.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{isemi_max, IncompleteSemiMatching, SemiMatching};
use crate::graph::{normalize_vertices, BipartiteGraph, Edge, EdgeStream};

/// Every stored-edge peak reported here stays within
/// `SPACE_CONSTANT · s · (⌈log₂ n⌉ + 1)` for the budget `s ≥ n` of the run:
/// a copy keeps at most `n` assignment edges plus `⌊s/|A'|⌋` side edges per
/// active vertex.
pub const SPACE_CONSTANT: f64 = 2.0;

/// `⌈log₂ n⌉`, with `ceil_log2(0) = ceil_log2(1) = 0`.
pub fn ceil_log2(n: usize) -> usize {
    if n <= 1 {
        0
    } else {
        (usize::BITS - (n - 1).leading_zeros()) as usize
    }
}

/// Passes used by [`multipass_semi`]: `⌈log₂ n⌉`, and at least one.
pub fn pass_budget(n: usize) -> usize {
    ceil_log2(n).max(1)
}

/// Approximation factor guaranteed by [`one_pass_semi`]: `4·n^{(1−ε)/2}`.
pub fn one_pass_factor(n: usize, eps: f64) -> f64 {
    4.0 * (n as f64).powf((1.0 - eps) / 2.0)
}

/// Approximation factor guaranteed by [`multipass_semi`]: `4·⌈log₂ n⌉`
/// (with the pass count clamped to at least one).
pub fn multipass_factor(n: usize) -> f64 {
    4.0 * pass_budget(n) as f64
}

/// Competitive ratio of [`online_greedy`]: `⌈log₂(n+1)⌉`.
pub fn greedy_factor(n: usize) -> f64 {
    ceil_log2(n + 1) as f64
}

/// Peak-space bound for a run with per-copy budget `s` on `n` A vertices.
pub fn space_bound(n: usize, s: f64) -> f64 {
    SPACE_CONSTANT * s * (ceil_log2(n) + 1) as f64
}

/// Space and pass accounting for one streaming run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpaceLedger {
    /// Largest number of edges held at once across `S₁`, `E'`, `S₂` and
    /// earlier-pass outputs of every copy.
    pub peak_edges: usize,
    /// Full replays of the stream.
    pub passes: usize,
    /// Space budget `s` handed to each copy.
    pub s: f64,
    /// Degree cap `d` of each copy.
    pub caps: Vec<usize>,
    /// Pass limit `p` of each copy.
    pub max_passes: usize,
    pub eps: Option<f64>,
    /// Side-set width `k` used in the first pass.
    pub k: usize,
}

/// Side-set width `k = ⌊s/|A'|⌋`, at least 1.
pub fn side_width(s: f64, active: usize) -> usize {
    if active == 0 {
        return 1;
    }
    // tolerance keeps n^{1+ε}/n from falling just short of an integer
    ((s / active as f64 + 1e-9).floor() as usize).max(1)
}

/// State of one `incomplete` pass.
#[derive(Debug)]
struct PassState {
    active: Vec<bool>,
    d: usize,
    k: usize,
    first_load: Vec<usize>,
    first_assign: Vec<Option<usize>>,
    first: Vec<Edge>,
    side_deg: Vec<usize>,
    side: Vec<Edge>,
}

impl PassState {
    fn new(g: &BipartiteGraph, active: &[usize], s: f64, d: usize) -> Self {
        let mut mask = vec![false; g.n()];
        active.iter().for_each(|&a| mask[a] = true);
        Self {
            active: mask,
            d,
            k: side_width(s, active.len()),
            first_load: vec![0; g.m()],
            first_assign: vec![None; g.n()],
            first: Vec::new(),
            side_deg: vec![0; g.n()],
            side: Vec::new(),
        }
    }

    fn observe(&mut self, e: Edge) {
        if !self.active[e.a] {
            return;
        }
        if self.first_assign[e.a].is_none() && self.first_load[e.b] < self.d {
            self.first_assign[e.a] = Some(e.b);
            self.first_load[e.b] += 1;
            self.first.push(e);
        }
        if self.side_deg[e.a] < self.k {
            self.side_deg[e.a] += 1;
            self.side.push(e);
        }
    }

    fn stored(&self) -> usize {
        self.first.len() + self.side.len()
    }

    /// `S₂ = isemi_d(E'|_{(A' ∖ A(S₁)) × B})`.
    fn second(&self, g: &BipartiteGraph) -> Vec<Edge> {
        let side_graph = BipartiteGraph::from_unique(g.n(), g.m(), self.side.clone());
        let rest: Vec<usize> = (0..g.n())
            .filter(|&a| self.active[a] && self.first_assign[a].is_none())
            .collect();
        isemi_max(&side_graph, &rest, self.d)
            .expect("vertices come from the graph")
            .edges()
    }
}

/// Result of [`incomplete_pass`], with its intermediate sets for inspection.
#[derive(Debug, Clone)]
pub struct IncompleteOutcome {
    /// `S₁ ∪ S₂`, a `2d`-bounded incomplete semi-matching.
    pub matching: IncompleteSemiMatching,
    /// Greedy part `S₁`, in acceptance order.
    pub first: Vec<Edge>,
    /// Side set `E'`, in acceptance order.
    pub side: Vec<Edge>,
    /// Completion `S₂` computed from `E'` after the pass.
    pub second: Vec<Edge>,
    pub k: usize,
    pub ledger: SpaceLedger,
}

fn check_budget(s: f64, active: usize, d: usize) -> Result<()> {
    if s.is_nan() || s < active as f64 {
        return Err(Error::InvalidArgument(format!(
            "space budget s={s} is below the {active} active A vertices"
        )));
    }
    if d == 0 {
        return Err(Error::InvalidArgument(
            "degree cap d must be at least 1".into(),
        ));
    }
    Ok(())
}

/// One pass of the `incomplete` routine over the active vertices `A'`.
///
/// An edge `ab` with `a ∉ A'` is skipped. Otherwise it joins `S₁` when `a`
/// is unassigned in `S₁` and `deg_{S₁}(b) < d`, and joins `E'` while
/// `deg_{E'}(a) < k` with `k = ⌊s/|A'|⌋`. After the pass, `S₂` is a maximum
/// `d`-bounded assignment of `A' ∖ A(S₁)` using only `E'`.
pub fn incomplete_pass(
    stream: &EdgeStream<'_>,
    active: &[usize],
    s: f64,
    d: usize,
) -> Result<IncompleteOutcome> {
    let g = stream.graph();
    let active = normalize_vertices(active, g.n())?;
    check_budget(s, active.len(), d)?;

    let mut state = PassState::new(g, &active, s, d);
    let mut peak = 0;
    for e in stream.replay() {
        state.observe(e);
        peak = peak.max(state.stored());
    }
    let second = state.second(g);
    peak = peak.max(state.stored() + second.len());

    let matching = IncompleteSemiMatching::from_edges(
        g,
        state.first.iter().chain(second.iter()).copied(),
        2 * d,
    )?;
    Ok(IncompleteOutcome {
        matching,
        k: state.k,
        ledger: SpaceLedger {
            peak_edges: peak,
            passes: 1,
            s,
            caps: vec![d],
            max_passes: 1,
            eps: None,
            k: state.k,
        },
        first: state.first,
        side: state.side,
        second,
    })
}

/// One copy of the multi-pass skeleton: repeated `incomplete` passes on
/// the unmatched vertices, at most `max_passes` times.
#[derive(Debug)]
struct Copy {
    s: f64,
    d: usize,
    max_passes: usize,
    assign: Vec<Option<usize>>,
    matched: usize,
    passes: usize,
    first_k: Option<usize>,
    pass: Option<PassState>,
}

impl Copy {
    fn new(g: &BipartiteGraph, s: f64, d: usize, max_passes: usize) -> Self {
        Self {
            s,
            d,
            max_passes,
            assign: vec![None; g.n()],
            matched: 0,
            passes: 0,
            first_k: None,
            pass: None,
        }
    }

    fn wants_pass(&self) -> bool {
        self.passes < self.max_passes && self.matched < self.assign.len()
    }

    fn begin(&mut self, g: &BipartiteGraph) {
        let rest: Vec<usize> = (0..g.n()).filter(|&a| self.assign[a].is_none()).collect();
        let state = PassState::new(g, &rest, self.s, self.d);
        self.first_k.get_or_insert(state.k);
        self.pass = Some(state);
        self.passes += 1;
    }

    fn observe(&mut self, e: Edge) {
        if let Some(p) = self.pass.as_mut() {
            p.observe(e);
        }
    }

    fn stored(&self) -> usize {
        self.matched + self.pass.as_ref().map_or(0, PassState::stored)
    }

    /// Closes the pass; returns the momentary peak while `S₂` coexists with `E'`.
    fn finish(&mut self, g: &BipartiteGraph) -> usize {
        let Some(state) = self.pass.take() else {
            return self.stored();
        };
        let second = state.second(g);
        let momentary = self.matched + state.stored() + second.len();
        for e in state.first.iter().chain(second.iter()) {
            self.assign[e.a] = Some(e.b);
            self.matched += 1;
        }
        momentary
    }

    fn into_matching(self, g: &BipartiteGraph, cap: usize) -> IncompleteSemiMatching {
        IncompleteSemiMatching::from_parts(self.assign, g.m(), cap)
    }
}

/// Runs the copies side by side: each replay of the stream feeds every copy
/// that still wants a pass. Returns the pass count and peak stored edges.
fn run_copies(stream: &EdgeStream<'_>, copies: &mut [Copy]) -> (usize, usize) {
    let g = stream.graph();
    let mut passes = 0;
    let mut peak = 0;
    loop {
        let live: Vec<usize> = (0..copies.len())
            .filter(|&i| copies[i].wants_pass())
            .collect();
        if live.is_empty() {
            break;
        }
        passes += 1;
        for &i in &live {
            copies[i].begin(g);
        }
        for e in stream.replay() {
            for &i in &live {
                copies[i].observe(e);
            }
            peak = peak.max(copies.iter().map(Copy::stored).sum());
        }
        // S₂ of each copy is built while every other copy still holds its E'.
        let mut held: usize = copies.iter().map(Copy::stored).sum();
        for &i in &live {
            let before = copies[i].stored();
            let momentary = copies[i].finish(g);
            peak = peak.max(held - before + momentary);
            held = held - before + copies[i].stored();
        }
    }
    (passes, peak)
}

/// Result of [`asemi`].
#[derive(Debug, Clone)]
pub struct AsemiOutcome {
    /// A `2dp`-bounded incomplete semi-matching.
    pub matching: IncompleteSemiMatching,
    pub ledger: SpaceLedger,
}

/// Repeats [`incomplete_pass`] on the still-unmatched A vertices at most `p`
/// times, stopping early once every A vertex is matched.
pub fn asemi(stream: &EdgeStream<'_>, s: f64, d: usize, p: usize) -> Result<AsemiOutcome> {
    let g = stream.graph();
    if p == 0 {
        return Err(Error::InvalidArgument(
            "pass limit p must be at least 1".into(),
        ));
    }
    check_budget(s, g.n(), d)?;
    let mut copies = [Copy::new(g, s, d, p)];
    let (passes, peak) = run_copies(stream, &mut copies);
    let [copy] = copies;
    let k = copy.first_k.unwrap_or_else(|| side_width(s, g.n()));
    let matching = copy.into_matching(g, 2 * d * p);
    Ok(AsemiOutcome {
        matching,
        ledger: SpaceLedger {
            peak_edges: peak,
            passes,
            s,
            caps: vec![d],
            max_passes: p,
            eps: None,
            k,
        },
    })
}

/// Summary of one parallel copy in a [`StreamOutcome`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Candidate {
    pub cap: usize,
    pub complete: bool,
    pub degmax: usize,
}

/// Result of [`one_pass_semi`] or [`multipass_semi`].
#[derive(Debug, Clone)]
pub struct StreamOutcome {
    pub matching: SemiMatching,
    pub ledger: SpaceLedger,
    pub candidates: Vec<Candidate>,
    /// Index of the chosen copy in `candidates`.
    pub chosen: usize,
}

fn run_family(
    stream: &EdgeStream<'_>,
    s: f64,
    caps: Vec<usize>,
    p: usize,
    eps: Option<f64>,
) -> Result<StreamOutcome> {
    let g = stream.graph();
    if let Some(a) = g.find_isolated(&g.all_a()) {
        return Err(Error::IsolatedVertex(a));
    }
    let mut copies: Vec<Copy> = caps.iter().map(|&d| Copy::new(g, s, d, p)).collect();
    let (passes, peak) = run_copies(stream, &mut copies);

    let k = side_width(s, g.n());
    let results: Vec<SemiMatching> = copies
        .into_iter()
        .map(|c| {
            let cap = 2 * c.d * p;
            c.into_matching(g, cap).to_semi_matching()
        })
        .collect();
    let candidates: Vec<Candidate> = results
        .iter()
        .zip(&caps)
        .map(|(r, &cap)| Candidate {
            cap,
            complete: r.len() == g.n(),
            degmax: r.degmax(),
        })
        .collect();
    let chosen = (0..candidates.len())
        .filter(|&i| candidates[i].complete)
        .min_by_key(|&i| (candidates[i].degmax, i))
        .ok_or(Error::NoCompleteCandidate)?;
    Ok(StreamOutcome {
        matching: results[chosen].clone(),
        ledger: SpaceLedger {
            peak_edges: peak,
            passes,
            s,
            caps,
            max_passes: p,
            eps,
            k,
        },
        candidates,
        chosen,
    })
}

/// One-pass approximation with space budget `n^{1+ε}` per copy.
///
/// Copy `i ∈ 0..=⌈log₂ n⌉` runs [`asemi`] with `s = n^{1+ε}`,
/// `d = ⌈n^{(1−ε)/2}⌉·2^i` and `p = 1`; the complete result with the
/// smallest `degmax` (then smallest `i`) is returned. Its `degmax` is at
/// most `4·n^{(1−ε)/2}` times the optimum.
pub fn one_pass_semi(stream: &EdgeStream<'_>, eps: f64) -> Result<StreamOutcome> {
    if !(0.0..=1.0).contains(&eps) {
        return Err(Error::InvalidArgument(format!("eps {eps} not in [0, 1]")));
    }
    let n = stream.graph().n();
    let nf = n as f64;
    let s = nf.powf(1.0 + eps);
    let base = ((nf.powf((1.0 - eps) / 2.0) - 1e-9).ceil() as usize).max(1);
    let caps = (0..=ceil_log2(n)).map(|i| base << i).collect();
    run_family(stream, s, caps, 1, Some(eps))
}

/// `⌈log₂ n⌉`-pass approximation with space budget `n` per copy.
///
/// Copy `i ∈ 0..=⌈log₂ n⌉` runs [`asemi`] with `s = n`, `d = 2^i` and
/// `p = max(1, ⌈log₂ n⌉)`. The returned `degmax` is at most `4·p` times the
/// optimum.
pub fn multipass_semi(stream: &EdgeStream<'_>) -> Result<StreamOutcome> {
    let n = stream.graph().n();
    let caps = (0..=ceil_log2(n)).map(|i| 1usize << i).collect();
    run_family(stream, n as f64, caps, pass_budget(n), None)
}

/// Online greedy for vertex-arrival streams: when the last edge of an A
/// vertex has arrived, it is assigned to its least-loaded neighbor (ties
/// by lowest index). Any stream where each A vertex's edges are contiguous
/// is accepted.
pub fn online_greedy(stream: &EdgeStream<'_>) -> Result<SemiMatching> {
    let g = stream.graph();
    let mut assign = vec![None; g.n()];
    let mut load = vec![0usize; g.m()];
    let mut done = vec![false; g.n()];
    let mut current: Option<usize> = None;
    let mut block: Vec<usize> = Vec::new();

    let mut settle = |a: usize, block: &mut Vec<usize>, assign: &mut Vec<Option<usize>>| {
        let b = *block
            .iter()
            .min_by_key(|&&b| (load[b], b))
            .expect("non-empty block");
        load[b] += 1;
        assign[a] = Some(b);
        block.clear();
    };

    for e in stream.replay() {
        if current != Some(e.a) {
            if done[e.a] {
                return Err(Error::StreamNotVertexArrival(e.a));
            }
            if let Some(prev) = current {
                settle(prev, &mut block, &mut assign);
            }
            done[e.a] = true;
            current = Some(e.a);
        }
        block.push(e.b);
    }
    if let Some(prev) = current {
        settle(prev, &mut block, &mut assign);
    }
    if let Some(a) = assign.iter().position(Option::is_none) {
        return Err(Error::IsolatedVertex(a));
    }
    SemiMatching::from_assignment(g, assign)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::fixtures::{perfect, star, tri};
    use crate::exact::optimal_semi;
    use crate::graph::generate::random_covering;
    use crate::graph::{make_stream, StreamOrder};
    use proptest::prelude::*;

    fn e(a: usize, b: usize) -> Edge {
        Edge::new(a, b)
    }

    #[test]
    fn log_helpers() {
        assert_eq!(
            [0, 1, 2, 3, 4, 5, 8, 9].map(ceil_log2),
            [0, 0, 1, 2, 2, 3, 3, 4]
        );
        assert_eq!(pass_budget(1), 1);
        assert_eq!(greedy_factor(3), 2.0);
        assert_eq!(side_width(20f64.powf(2.0), 20), 20);
        assert_eq!(side_width(5.0, 3), 1);
    }

    #[test]
    fn incomplete_trace_on_tri() {
        let g = tri();
        let st = make_stream(&g, StreamOrder::AsGiven, 0);
        let out = incomplete_pass(&st, &g.all_a(), 3.0, 1).unwrap();
        assert_eq!(out.k, 1);
        assert_eq!(out.first, vec![e(0, 0), e(2, 1)]);
        assert_eq!(out.side, vec![e(0, 0), e(1, 0), e(2, 0)]);
        assert_eq!(out.second, vec![e(1, 0)]);
        assert_eq!(out.matching.size(), 3);
        assert_eq!(out.matching.degmax(), 2);
        assert_eq!(out.ledger.passes, 1);
        assert_eq!(out.ledger.peak_edges, 6);

        let out = incomplete_pass(&st, &g.all_a(), 3.0, 3).unwrap();
        assert_eq!(out.first, vec![e(0, 0), e(1, 0), e(2, 0)]);
        assert!(out.second.is_empty());

        let out = incomplete_pass(&st, &[], 0.0, 1).unwrap();
        assert_eq!(out.matching.size(), 0);
        assert_eq!(out.ledger.passes, 1);
    }

    #[test]
    fn incomplete_rejects_bad_parameters() {
        let g = tri();
        let st = make_stream(&g, StreamOrder::AsGiven, 0);
        assert!(incomplete_pass(&st, &g.all_a(), 2.0, 1).is_err());
        assert!(incomplete_pass(&st, &g.all_a(), 3.0, 0).is_err());
        assert!(asemi(&st, 3.0, 1, 0).is_err());
    }

    #[test]
    fn asemi_with_one_pass_is_incomplete() {
        for seed in 0..30 {
            let g = random_covering(10, 5, 0.3, seed).unwrap();
            let st = make_stream(&g, StreamOrder::UniformRandom, seed);
            let a = asemi(&st, 10.0, 2, 1).unwrap();
            let b = incomplete_pass(&st, &g.all_a(), 10.0, 2).unwrap();
            assert_eq!(a.matching.edges(), b.matching.edges());
            assert_eq!(a.ledger.peak_edges, b.ledger.peak_edges);
        }
        let g = tri();
        let st = make_stream(&g, StreamOrder::AsGiven, 0);
        let out = asemi(&st, 3.0, 1, 2).unwrap();
        assert_eq!(out.matching.size(), 3);
        assert_eq!(out.ledger.passes, 1);
        assert!(out.matching.degmax() <= 4);
    }

    #[test]
    fn wrappers_on_small_graphs() {
        let g = perfect(7);
        for order in StreamOrder::ALL {
            let st = make_stream(&g, order, 3);
            for eps in [0.0, 0.5, 1.0] {
                assert_eq!(one_pass_semi(&st, eps).unwrap().matching.degmax(), 1);
            }
            assert_eq!(multipass_semi(&st).unwrap().matching.degmax(), 1);
        }
        let g = star(5);
        let st = make_stream(&g, StreamOrder::AsGiven, 0);
        let out = multipass_semi(&st).unwrap();
        assert_eq!(out.matching.degmax(), 5);
        assert!(out.ledger.passes <= 3);

        let g = tri();
        let st = make_stream(&g, StreamOrder::AsGiven, 0);
        let out = one_pass_semi(&st, 0.0).unwrap();
        assert_eq!(out.matching.len(), 3);
        assert!(out.matching.degmax() <= 3);
        assert_eq!(out.ledger.caps, vec![2, 4, 8]);
        assert!(one_pass_semi(&st, 1.5).is_err());
    }

    #[test]
    fn isolated_vertices_are_rejected() {
        let g = BipartiteGraph::new(2, 1, [(0, 0)]).unwrap();
        let st = make_stream(&g, StreamOrder::AsGiven, 0);
        assert!(matches!(
            one_pass_semi(&st, 0.5),
            Err(Error::IsolatedVertex(1))
        ));
        assert!(matches!(online_greedy(&st), Err(Error::IsolatedVertex(1))));
    }

    #[test]
    fn greedy_examples() {
        let g = tri();
        let st = make_stream(&g, StreamOrder::AsGiven, 0);
        let s = online_greedy(&st).unwrap();
        assert_eq!(s.assignment(), &[Some(0), Some(0), Some(1)]);
        assert_eq!(
            online_greedy(&make_stream(&perfect(4), StreamOrder::AsGiven, 0))
                .unwrap()
                .degmax(),
            1
        );
        assert_eq!(
            online_greedy(&make_stream(&star(4), StreamOrder::AsGiven, 0))
                .unwrap()
                .degmax(),
            4
        );

        let interleaved = EdgeStream::with_order(&g, vec![0, 3, 1, 2]).unwrap();
        assert!(matches!(
            online_greedy(&interleaved),
            Err(Error::StreamNotVertexArrival(2))
        ));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn pass_invariants(seed in 0u64..10_000, d in 1usize..4, extra in 0usize..20) {
            let g = random_covering(12, 6, 0.35, seed).unwrap();
            let st = make_stream(&g, StreamOrder::UniformRandom, seed);
            let s = 12.0 + extra as f64;
            let out = incomplete_pass(&st, &g.all_a(), s, d).unwrap();
            let mut load = vec![0; g.m()];
            for x in &out.first {
                load[x.b] += 1;
            }
            prop_assert!(load.iter().all(|&l| l <= d));
            let mut per_a = vec![0; g.n()];
            for x in &out.side {
                per_a[x.a] += 1;
                prop_assert!(g.has_edge(x.a, x.b));
            }
            prop_assert!(per_a.iter().all(|&c| c <= out.k));
            prop_assert!(out.matching.degmax() <= 2 * d);
        }

        #[test]
        fn guarantees_hold(seed in 0u64..10_000, order in 0usize..4) {
            let g = random_covering(16, 8, 0.2, seed).unwrap();
            let st = make_stream(&g, StreamOrder::ALL[order], seed);
            let opt = optimal_semi(&g, &g.all_a()).unwrap().degmax() as f64;
            for eps in [0.0, 0.5, 1.0] {
                let out = one_pass_semi(&st, eps).unwrap();
                prop_assert_eq!(out.matching.len(), 16);
                prop_assert!(out.matching.degmax() as f64 <= one_pass_factor(16, eps) * opt);
                prop_assert!(out.ledger.peak_edges as f64 <= space_bound(16, out.ledger.s));
            }
            let out = multipass_semi(&st).unwrap();
            prop_assert!(out.ledger.passes <= pass_budget(16));
            prop_assert!(out.matching.degmax() as f64 <= multipass_factor(16) * opt);
            prop_assert!(out.ledger.peak_edges as f64 <= space_bound(16, 16.0));
            let vst = make_stream(&g, StreamOrder::VertexArrival, seed);
            let greedy = online_greedy(&vst).unwrap();
            prop_assert!(greedy.degmax() as f64 <= greedy_factor(16) * opt);
        }
    }
}
