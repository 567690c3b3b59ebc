//! Decomposition of a semi-matching into matchings.
//!
//! The edges at each B vertex are labeled `1, 2, …` in increasing order of
//! their A endpoint; layer `M_i` holds the edges labeled `i`. With
//! `A_1 = A(S)`, `B_1 = B`, `A_i = A_1 ∖ ⋃_{j<i} A(M_j)` and
//! `B_i = B(M_{i−1})`, every layer of a semi-matching without length-2
//! degree-minimizing paths is a maximal matching of `G|_{A_i × B_i}`, and
//! every layer of an optimal one is a maximum matching there.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{optimal_semi, semi2, semi2_violation, SemiMatching};
use crate::graph::{mask_of, normalize_vertices, BipartiteGraph, Edge};
use crate::matching::maximum_matching;
use crate::streaming::ceil_log2;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decomposition {
    /// `M_1, M_2, …`, each sorted by A vertex.
    pub layers: Vec<Vec<Edge>>,
    /// `A_i` per layer.
    pub a_sets: Vec<Vec<usize>>,
    /// `B_i` per layer.
    pub b_sets: Vec<Vec<usize>>,
}

impl Decomposition {
    pub fn len(&self) -> usize {
        self.layers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.layers.is_empty()
    }
}

pub fn decompose(g: &BipartiteGraph, s: &SemiMatching) -> Decomposition {
    let mut next_label = vec![0usize; g.m()];
    let mut layers: Vec<Vec<Edge>> = vec![Vec::new(); s.degmax()];
    for a in 0..g.n() {
        if let Some(b) = s.get(a) {
            layers[next_label[b]].push(Edge::new(a, b));
            next_label[b] += 1;
        }
    }

    let mut remaining = s.covered();
    let mut a_sets = Vec::with_capacity(layers.len());
    let mut b_sets = Vec::with_capacity(layers.len());
    let mut b_cur: Vec<usize> = (0..g.m()).collect();
    for layer in &layers {
        a_sets.push(remaining.clone());
        b_sets.push(b_cur);
        let used = mask_of(g.n(), &layer.iter().map(|e| e.a).collect::<Vec<_>>());
        remaining.retain(|&a| !used[a]);
        b_cur = layer.iter().map(|e| e.b).collect();
        b_cur.sort_unstable();
    }
    Decomposition {
        layers,
        a_sets,
        b_sets,
    }
}

/// Outcome of checking one layer.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LayerCheck {
    /// 1-based layer index.
    pub layer: usize,
    pub size: usize,
    /// Maximum matching size in `G|_{A_i × B_i}` (maximum-layer checks only).
    pub maximum: Option<usize>,
    /// An edge of `G|_{A_i × B_i}` with both endpoints free in `M_i` (maximal-layer checks only).
    pub extension: Option<Edge>,
    pub ok: bool,
}

/// For each layer, looks for an edge of `G|_{A_i × B_i}` that could be added to `M_i`.
pub fn verify_maximal_layers(dec: &Decomposition, g: &BipartiteGraph) -> Vec<LayerCheck> {
    dec.layers
        .iter()
        .enumerate()
        .map(|(i, layer)| {
            let in_b = mask_of(g.m(), &dec.b_sets[i]);
            let mut a_used = vec![false; g.n()];
            let mut b_used = vec![false; g.m()];
            for e in layer {
                a_used[e.a] = true;
                b_used[e.b] = true;
            }
            let extension = dec.a_sets[i]
                .iter()
                .filter(|&&a| !a_used[a])
                .find_map(|&a| {
                    g.neighbors_of_a(a)
                        .find(|&b| in_b[b] && !b_used[b])
                        .map(|b| Edge::new(a, b))
                });
            LayerCheck {
                layer: i + 1,
                size: layer.len(),
                maximum: None,
                ok: extension.is_none(),
                extension,
            }
        })
        .collect()
}

/// For each layer, compares `|M_i|` with a maximum matching of `G|_{A_i × B_i}`.
pub fn verify_maximum_layers(dec: &Decomposition, g: &BipartiteGraph) -> Vec<LayerCheck> {
    dec.layers
        .iter()
        .enumerate()
        .map(|(i, layer)| {
            let a_mask = mask_of(g.n(), &dec.a_sets[i]);
            let b_mask = mask_of(g.m(), &dec.b_sets[i]);
            let maximum = maximum_matching(g, &a_mask, &b_mask).len();
            LayerCheck {
                layer: i + 1,
                size: layer.len(),
                maximum: Some(maximum),
                extension: None,
                ok: layer.len() == maximum,
            }
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LogBoundCheck {
    pub semi2: usize,
    pub optimum: usize,
    pub ratio: f64,
    /// `⌈log₂(n+1)⌉`
    pub factor: usize,
    pub holds: bool,
}

/// Compares `degmax semi2(G)` with `⌈log₂(n+1)⌉ · degmax` of an optimal semi-matching.
pub fn check_log_bound(g: &BipartiteGraph) -> Result<LogBoundCheck> {
    let all = g.all_a();
    let s2 = semi2(g, &all)?.degmax();
    let opt = optimal_semi(g, &all)?.degmax();
    let factor = ceil_log2(g.n() + 1);
    Ok(LogBoundCheck {
        semi2: s2,
        optimum: opt,
        ratio: if opt == 0 {
            1.0
        } else {
            s2 as f64 / opt as f64
        },
        factor,
        holds: s2 <= factor * opt,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HalfSplit {
    /// `degmax` of an optimal semi-matching of `A'`.
    pub d_star: usize,
    /// `A''`: vertices covered by the first `d*` layers.
    pub covered: Vec<usize>,
    /// `S` restricted to `A' ∖ A''`.
    pub residual: SemiMatching,
    /// `|A''| ≥ |A'|/2`
    pub half_ok: bool,
    /// `degmax S|_{A''} ≤ d*`
    pub load_ok: bool,
    /// The residual has no length-2 degree-minimizing path.
    pub residual_ok: bool,
}

impl HalfSplit {
    pub fn ok(&self) -> bool {
        self.half_ok && self.load_ok && self.residual_ok
    }
}

/// Splits `A'` by the first `d*` layers of `decompose(S)`, where `S` is a
/// semi-matching of `A'` without length-2 degree-minimizing paths.
pub fn half_matched_split(
    g: &BipartiteGraph,
    s: &SemiMatching,
    active: &[usize],
) -> Result<HalfSplit> {
    let active = normalize_vertices(active, g.n())?;
    if !s.covers_exactly(&active) {
        return Err(Error::InvalidArgument(
            "semi-matching does not cover exactly the given A vertices".into(),
        ));
    }
    let d_star = optimal_semi(g, &active)?.degmax();
    let dec = decompose(g, s);
    let mut covered: Vec<usize> = dec
        .layers
        .iter()
        .take(d_star)
        .flatten()
        .map(|e| e.a)
        .collect();
    covered.sort_unstable();

    let in_covered = mask_of(g.n(), &covered);
    let top = s.restrict(&in_covered);
    let rest_mask: Vec<bool> = (0..g.n()).map(|a| !in_covered[a]).collect();
    let residual = s.restrict(&rest_mask);
    Ok(HalfSplit {
        d_star,
        half_ok: 2 * covered.len() >= active.len(),
        load_ok: top.degmax() <= d_star,
        residual_ok: semi2_violation(g, &residual).is_none(),
        covered,
        residual,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::fixtures::{perfect, star, tri};
    use crate::graph::generate::random_covering;

    fn e(a: usize, b: usize) -> Edge {
        Edge::new(a, b)
    }

    #[test]
    fn decomposition_examples() {
        let g = tri();
        let s = optimal_semi(&g, &g.all_a()).unwrap();
        let dec = decompose(&g, &s);
        assert_eq!(dec.layers, vec![vec![e(0, 0), e(2, 1)], vec![e(1, 0)]]);
        assert_eq!(dec.a_sets, vec![vec![0, 1, 2], vec![1]]);
        assert_eq!(dec.b_sets, vec![vec![0, 1], vec![0, 1]]);
        assert!(verify_maximum_layers(&dec, &g).iter().all(|c| c.ok));

        let g = perfect(4);
        let dec = decompose(&g, &optimal_semi(&g, &g.all_a()).unwrap());
        assert_eq!(dec.len(), 1);
        assert!(verify_maximal_layers(&dec, &g)[0].ok);

        let g = star(4);
        let dec = decompose(&g, &optimal_semi(&g, &g.all_a()).unwrap());
        assert_eq!(dec.len(), 4);
        assert!(dec.layers.iter().all(|l| l.len() == 1));
    }

    #[test]
    fn planted_length_two_path_breaks_maximality() {
        let g = tri();
        let s = SemiMatching::from_edges(&g, [e(0, 0), e(1, 0), e(2, 0)]).unwrap();
        let checks = verify_maximal_layers(&decompose(&g, &s), &g);
        assert!(!checks[0].ok);
        assert_eq!(checks[0].extension, Some(e(2, 1)));
    }

    #[test]
    fn semi2_layer_can_be_maximal_but_not_maximum() {
        let g = BipartiteGraph::new(3, 3, [(0, 0), (1, 0), (1, 1), (2, 1), (2, 2)]).unwrap();
        let s = semi2(&g, &g.all_a()).unwrap();
        let dec = decompose(&g, &s);
        assert!(verify_maximal_layers(&dec, &g).iter().all(|c| c.ok));
        let max = verify_maximum_layers(&dec, &g);
        assert!(!max[0].ok);
        assert_eq!((max[0].size, max[0].maximum), (2, Some(3)));
    }

    #[test]
    fn layers_partition_the_semi_matching() {
        for seed in 0..100 {
            let g = random_covering(10, 5, 0.3, seed).unwrap();
            for s in [
                semi2(&g, &g.all_a()).unwrap(),
                optimal_semi(&g, &g.all_a()).unwrap(),
            ] {
                let dec = decompose(&g, &s);
                assert_eq!(dec.len(), s.degmax());
                let mut all: Vec<Edge> = dec.layers.concat();
                all.sort_unstable();
                assert_eq!(all, s.edges());
                for layer in &dec.layers {
                    let mut bs: Vec<usize> = layer.iter().map(|e| e.b).collect();
                    bs.sort_unstable();
                    bs.dedup();
                    assert_eq!(bs.len(), layer.len());
                }
                assert!(
                    verify_maximal_layers(&dec, &g).iter().all(|c| c.ok),
                    "seed {seed}"
                );
            }
            let opt = optimal_semi(&g, &g.all_a()).unwrap();
            assert!(verify_maximum_layers(&decompose(&g, &opt), &g)
                .iter()
                .all(|c| c.ok));
            assert!(check_log_bound(&g).unwrap().holds);
        }
    }

    #[test]
    fn log_bound_examples() {
        let c = check_log_bound(&star(4)).unwrap();
        assert_eq!((c.semi2, c.optimum, c.factor), (4, 4, 3));
        assert!(c.holds);
        assert!(check_log_bound(&perfect(6)).unwrap().holds);
    }

    #[test]
    fn half_split_examples() {
        let g = tri();
        let s = semi2(&g, &g.all_a()).unwrap();
        let h = half_matched_split(&g, &s, &g.all_a()).unwrap();
        assert_eq!(h.d_star, 2);
        assert_eq!(h.covered, vec![0, 1, 2]);
        assert!(h.ok());

        let g = perfect(5);
        let s = semi2(&g, &g.all_a()).unwrap();
        assert_eq!(
            half_matched_split(&g, &s, &g.all_a())
                .unwrap()
                .covered
                .len(),
            5
        );

        for seed in 0..100 {
            let g = random_covering(12, 4, 0.3, seed).unwrap();
            let active: Vec<usize> = (0..12).filter(|a| a % 4 != 0).collect();
            let s = semi2(&g, &active).unwrap();
            assert!(
                half_matched_split(&g, &s, &active).unwrap().ok(),
                "seed {seed}"
            );
        }
        assert!(half_matched_split(&tri(), &s, &[0]).is_err());
    }
}
