//! Shared instance builders for the benchmarks.

use semistream_core::graph::generate::random_covering;
use semistream_core::BipartiteGraph;

/// Random instance with every A vertex covered, average A degree about `avg_deg`.
pub fn instance(n: usize, m: usize, avg_deg: f64, seed: u64) -> BipartiteGraph {
    let p = (avg_deg / m as f64).min(1.0);
    random_covering(n, m, p, seed).expect("valid generator parameters")
}
