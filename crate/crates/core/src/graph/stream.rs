//! Replayable edge streams.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::{BipartiteGraph, Edge};
use crate::error::{Error, Result};

/// How the edges of a graph are ordered in a stream.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum StreamOrder {
    /// Construction order of the graph.
    AsGiven,
    /// Uniformly random permutation drawn from the seed.
    #[serde(rename = "random", alias = "uniform-random")]
    UniformRandom,
    /// Edges into high-degree B vertices first (by `deg(b)` descending,
    /// then `b`, then `a`). Greedy rules see every popular B vertex before
    /// any alternative, which loads them as much as the caps allow.
    #[serde(rename = "adversarial", alias = "adversarial-sorted")]
    AdversarialSorted,
    /// A vertices in a seeded random order, each emitting all its edges
    /// contiguously (in a seeded random order too).
    VertexArrival,
}

impl StreamOrder {
    pub const ALL: [StreamOrder; 4] = [
        StreamOrder::AsGiven,
        StreamOrder::UniformRandom,
        StreamOrder::AdversarialSorted,
        StreamOrder::VertexArrival,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            StreamOrder::AsGiven => "as-given",
            StreamOrder::UniformRandom => "random",
            StreamOrder::AdversarialSorted => "adversarial",
            StreamOrder::VertexArrival => "vertex-arrival",
        }
    }
}

impl fmt::Display for StreamOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for StreamOrder {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "as-given" => Ok(StreamOrder::AsGiven),
            "random" | "uniform-random" => Ok(StreamOrder::UniformRandom),
            "adversarial" | "adversarial-sorted" => Ok(StreamOrder::AdversarialSorted),
            "vertex-arrival" => Ok(StreamOrder::VertexArrival),
            other => Err(Error::InvalidArgument(format!(
                "unknown stream order {other:?}"
            ))),
        }
    }
}

/// A fixed permutation of a graph's edges that can be replayed any number of times.
#[derive(Debug, Clone)]
pub struct EdgeStream<'g> {
    graph: &'g BipartiteGraph,
    order: Vec<usize>,
    policy: StreamOrder,
    seed: u64,
}

impl<'g> EdgeStream<'g> {
    pub fn new(graph: &'g BipartiteGraph, policy: StreamOrder, seed: u64) -> Self {
        let order = match policy {
            StreamOrder::AsGiven => (0..graph.num_edges()).collect(),
            StreamOrder::UniformRandom => {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                let mut order: Vec<usize> = (0..graph.num_edges()).collect();
                order.shuffle(&mut rng);
                order
            }
            StreamOrder::AdversarialSorted => {
                let mut order: Vec<usize> = (0..graph.num_edges()).collect();
                order.sort_by_key(|&i| {
                    let e = graph.edge(i);
                    (std::cmp::Reverse(graph.deg_b(e.b)), e.b, e.a)
                });
                order
            }
            StreamOrder::VertexArrival => {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                let mut arrivals: Vec<usize> = (0..graph.n()).collect();
                arrivals.shuffle(&mut rng);
                let mut order = Vec::with_capacity(graph.num_edges());
                for a in arrivals {
                    let mut block: Vec<usize> =
                        graph.incident_a(a).iter().map(|&(_, i)| i).collect();
                    block.shuffle(&mut rng);
                    order.extend(block);
                }
                order
            }
        };
        Self {
            graph,
            order,
            policy,
            seed,
        }
    }

    /// A stream with an explicit order; `order` must be a permutation of the edge indices.
    pub fn with_order(graph: &'g BipartiteGraph, order: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; graph.num_edges()];
        if order.len() != graph.num_edges() {
            return Err(Error::InvalidArgument(format!(
                "order has {} entries for {} edges",
                order.len(),
                graph.num_edges()
            )));
        }
        for &i in &order {
            if i >= seen.len() || std::mem::replace(&mut seen[i], true) {
                return Err(Error::InvalidArgument(format!(
                    "order is not a permutation (index {i})"
                )));
            }
        }
        Ok(Self {
            graph,
            order,
            policy: StreamOrder::AsGiven,
            seed: 0,
        })
    }

    pub fn graph(&self) -> &'g BipartiteGraph {
        self.graph
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn policy(&self) -> StreamOrder {
        self.policy
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    /// One replay of the stream.
    pub fn replay(&self) -> impl Iterator<Item = Edge> + '_ {
        self.order.iter().map(|&i| self.graph.edge(i))
    }
}

/// Convenience wrapper matching the operation name used throughout the docs.
pub fn make_stream(g: &BipartiteGraph, policy: StreamOrder, seed: u64) -> EdgeStream<'_> {
    EdgeStream::new(g, policy, seed)
}
