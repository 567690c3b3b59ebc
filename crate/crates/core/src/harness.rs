//! Experiment runner and result records.
//!
//! An [`ExperimentSpec`] lists instances, algorithms and stream orders;
//! [`run_experiment`] produces one [`ResultRecord`] per combination and
//! repetition, in spec order, and [`emit`] renders them as JSON lines or CSV.

use std::path::PathBuf;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{brute_force_semi, optimal_semi, semi2, SemiMatching};
use crate::graph::generate::Generator;
use crate::graph::io::read_graph_file;
use crate::graph::{make_stream, BipartiteGraph, StreamOrder};
use crate::skeleton::{two_party, EdgePartition, SkeletonKind};
use crate::streaming::{
    greedy_factor, multipass_factor, multipass_semi, one_pass_factor, one_pass_semi, online_greedy,
    StreamOutcome,
};

pub const SCHEMA_VERSION: u32 = 1;

/// Largest `n` for which the record's optimum is computed.
pub const OPTIMUM_LIMIT: usize = 2000;

/// Largest `n` for which the optimum is cross-checked by brute force.
pub const BRUTE_FORCE_CHECK_LIMIT: usize = 8;

/// One entry of [`ExperimentSpec::instances`]: either a graph file or a
/// generator, the latter optionally repeated `count` times with seeds
/// `seed, seed+1, …`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub file: Option<PathBuf>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generate: Option<Generator>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub count: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "name", rename_all = "snake_case", deny_unknown_fields)]
pub enum Algorithm {
    OnePass { eps: f64 },
    Multipass,
    Greedy,
    Optimal,
    Semi2,
    Protocol { kind: SkeletonKind },
}

impl Algorithm {
    pub fn is_streaming(self) -> bool {
        matches!(
            self,
            Algorithm::OnePass { .. } | Algorithm::Multipass | Algorithm::Greedy
        )
    }

    pub fn describe(self) -> String {
        match self {
            Algorithm::OnePass { eps } => format!("one_pass(eps={eps})"),
            Algorithm::Multipass => "multipass".into(),
            Algorithm::Greedy => "greedy".into(),
            Algorithm::Optimal => "optimal".into(),
            Algorithm::Semi2 => "semi2".into(),
            Algorithm::Protocol { kind } => format!("protocol({kind})"),
        }
    }

    /// Guaranteed ratio to the optimum on an instance with `n` A vertices.
    pub fn factor(self, n: usize) -> f64 {
        match self {
            Algorithm::OnePass { eps } => one_pass_factor(n, eps),
            Algorithm::Multipass => multipass_factor(n),
            Algorithm::Greedy | Algorithm::Semi2 => greedy_factor(n),
            Algorithm::Optimal => 1.0,
            Algorithm::Protocol { kind } => kind.protocol_bound(n).unwrap_or(f64::INFINITY),
        }
    }
}

fn default_orders() -> Vec<StreamOrder> {
    vec![StreamOrder::AsGiven]
}

fn default_repetitions() -> usize {
    1
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentSpec {
    pub instances: Vec<InstanceSpec>,
    pub algorithms: Vec<Algorithm>,
    /// Orders for streaming algorithms; offline algorithms run once per repetition.
    #[serde(default = "default_orders")]
    pub orders: Vec<StreamOrder>,
    /// Base seed; repetition `r` streams (and splits) with `seed + r`.
    #[serde(default)]
    pub seed: u64,
    #[serde(default = "default_repetitions")]
    pub repetitions: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub output: Option<PathBuf>,
    /// Record wall-clock time per run (makes output non-reproducible).
    #[serde(default)]
    pub wall_time: bool,
}

fn spec_error(path: impl Into<String>, msg: impl Into<String>) -> Error {
    Error::Spec {
        path: path.into(),
        msg: msg.into(),
    }
}

impl ExperimentSpec {
    /// Parses and validates a JSON document.
    pub fn from_json(text: &str) -> Result<Self> {
        let de = &mut serde_json::Deserializer::from_str(text);
        let spec: ExperimentSpec = serde_path_to_error::deserialize(de).map_err(|e| {
            let path = e.path().to_string();
            spec_error(
                if path == "." { "spec".into() } else { path },
                e.into_inner().to_string(),
            )
        })?;
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        for (i, inst) in self.instances.iter().enumerate() {
            let path = format!("instances[{i}]");
            match (&inst.file, &inst.generate) {
                (Some(_), Some(_)) | (None, None) => {
                    return Err(spec_error(
                        path,
                        "exactly one of file and generate is required",
                    ))
                }
                (Some(_), None) if inst.count.is_some() => {
                    return Err(spec_error(
                        format!("{path}.count"),
                        "count needs a generator",
                    ))
                }
                _ => {}
            }
            if inst.count == Some(0) {
                return Err(spec_error(format!("{path}.count"), "must be at least 1"));
            }
        }
        for (i, alg) in self.algorithms.iter().enumerate() {
            match *alg {
                Algorithm::OnePass { eps } if !(0.0..=1.0).contains(&eps) => {
                    return Err(spec_error(
                        format!("algorithms[{i}].eps"),
                        "must lie in [0, 1]",
                    ))
                }
                Algorithm::Protocol {
                    kind: SkeletonKind::Custom,
                } => {
                    return Err(spec_error(
                        format!("algorithms[{i}].kind"),
                        "must be sqrt or cuberoot",
                    ))
                }
                Algorithm::Greedy => {
                    if let Some(j) = self.orders.iter().position(|o| {
                        !matches!(o, StreamOrder::AsGiven | StreamOrder::VertexArrival)
                    }) {
                        return Err(spec_error(
                            format!("orders[{j}]"),
                            "greedy needs as-given or vertex-arrival streams",
                        ));
                    }
                }
                _ => {}
            }
        }
        if self.orders.is_empty() && self.algorithms.iter().any(|a| a.is_streaming()) {
            return Err(spec_error(
                "orders",
                "streaming algorithms need at least one order",
            ));
        }
        Ok(())
    }
}

/// One run of one algorithm on one instance. `bound = factor · optimum`,
/// and `bound_satisfied` is `degmax ≤ bound`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ResultRecord {
    pub schema: u32,
    pub instance: String,
    pub instance_index: usize,
    pub n: usize,
    pub m: usize,
    pub edges: usize,
    pub algorithm: String,
    pub order: Option<StreamOrder>,
    pub seed: u64,
    pub repetition: usize,
    pub degmax: usize,
    pub optimum: Option<usize>,
    pub ratio: Option<f64>,
    pub factor: f64,
    pub bound: Option<f64>,
    pub bound_satisfied: Option<bool>,
    pub peak_edges: Option<usize>,
    pub passes: Option<usize>,
    pub message_edges: Option<usize>,
    pub wall_time_ms: Option<f64>,
}

/// CSV column names, in serialization order.
pub const CSV_HEADER: [&str; 20] = [
    "schema",
    "instance",
    "instance_index",
    "n",
    "m",
    "edges",
    "algorithm",
    "order",
    "seed",
    "repetition",
    "degmax",
    "optimum",
    "ratio",
    "factor",
    "bound",
    "bound_satisfied",
    "peak_edges",
    "passes",
    "message_edges",
    "wall_time_ms",
];

impl ResultRecord {
    /// Recomputes the bound flag from the record's own fields.
    pub fn recheck(&self) -> Option<bool> {
        self.optimum
            .map(|opt| self.degmax as f64 <= self.factor * opt as f64)
    }
}

struct Instance {
    descriptor: String,
    graph: BipartiteGraph,
    optimum: Option<usize>,
}

fn load_instances(spec: &ExperimentSpec) -> Result<Vec<Instance>> {
    let mut sources = Vec::new();
    for inst in &spec.instances {
        if let Some(path) = &inst.file {
            sources.push((path.display().to_string(), None, Some(path.clone())));
        } else if let Some(gen) = &inst.generate {
            for i in 0..inst.count.unwrap_or(1) {
                let gen = gen.reseeded(i as u64);
                sources.push((gen.describe(), Some(gen), None));
            }
        }
    }
    sources
        .into_par_iter()
        .map(|(descriptor, gen, path)| {
            let graph = match (gen, path) {
                (Some(gen), _) => gen.build()?,
                (None, Some(path)) => read_graph_file(path)?,
                (None, None) => unreachable!("validated"),
            };
            let optimum = optimum_of(&graph)?;
            Ok(Instance {
                descriptor,
                graph,
                optimum,
            })
        })
        .collect()
}

fn optimum_of(g: &BipartiteGraph) -> Result<Option<usize>> {
    if g.n() > OPTIMUM_LIMIT || g.find_isolated(&g.all_a()).is_some() {
        return Ok(None);
    }
    let all = g.all_a();
    let d = optimal_semi(g, &all)?.degmax();
    if g.n() <= BRUTE_FORCE_CHECK_LIMIT {
        match brute_force_semi(g, &all) {
            Ok(s) => assert_eq!(s.degmax(), d, "optimal solver disagrees with brute force"),
            Err(Error::GuardExceeded { .. }) => {}
            Err(e) => return Err(e),
        }
    }
    Ok(Some(d))
}

struct Task {
    instance: usize,
    algorithm: Algorithm,
    order: Option<StreamOrder>,
    repetition: usize,
}

struct Outcome {
    matching: SemiMatching,
    peak_edges: Option<usize>,
    passes: Option<usize>,
    message_edges: Option<usize>,
}

fn from_stream(out: StreamOutcome) -> Outcome {
    Outcome {
        matching: out.matching,
        peak_edges: Some(out.ledger.peak_edges),
        passes: Some(out.ledger.passes),
        message_edges: None,
    }
}

fn run_one(
    g: &BipartiteGraph,
    alg: Algorithm,
    order: Option<StreamOrder>,
    seed: u64,
) -> Result<Outcome> {
    let stream = || make_stream(g, order.unwrap_or(StreamOrder::AsGiven), seed);
    let plain = |matching| Outcome {
        matching,
        peak_edges: None,
        passes: None,
        message_edges: None,
    };
    Ok(match alg {
        Algorithm::OnePass { eps } => from_stream(one_pass_semi(&stream(), eps)?),
        Algorithm::Multipass => from_stream(multipass_semi(&stream())?),
        Algorithm::Greedy => plain(online_greedy(&stream())?),
        Algorithm::Optimal => plain(optimal_semi(g, &g.all_a())?),
        Algorithm::Semi2 => plain(semi2(g, &g.all_a())?),
        Algorithm::Protocol { kind } => {
            let t = two_party(g, &EdgePartition::random(g, seed), kind)?;
            Outcome {
                message_edges: Some(t.message_edges),
                ..plain(t.output)
            }
        }
    })
}

/// Runs every (instance, algorithm, order, repetition) combination on a
/// worker pool; records come back in spec order.
pub fn run_experiment(spec: &ExperimentSpec) -> Result<Vec<ResultRecord>> {
    spec.validate()?;
    let instances = load_instances(spec)?;
    let mut tasks = Vec::new();
    for instance in 0..instances.len() {
        for &algorithm in &spec.algorithms {
            let orders: Vec<Option<StreamOrder>> = if algorithm.is_streaming() {
                spec.orders.iter().copied().map(Some).collect()
            } else {
                vec![None]
            };
            for order in orders {
                for repetition in 0..spec.repetitions {
                    tasks.push(Task {
                        instance,
                        algorithm,
                        order,
                        repetition,
                    });
                }
            }
        }
    }

    tasks
        .into_par_iter()
        .map(|t| {
            let inst = &instances[t.instance];
            let g = &inst.graph;
            let seed = spec.seed.wrapping_add(t.repetition as u64);
            let start = Instant::now();
            let out = run_one(g, t.algorithm, t.order, seed)?;
            let elapsed = start.elapsed().as_secs_f64() * 1e3;
            let degmax = out.matching.degmax();
            let factor = t.algorithm.factor(g.n());
            let bound = inst.optimum.map(|opt| factor * opt as f64);
            Ok(ResultRecord {
                schema: SCHEMA_VERSION,
                instance: inst.descriptor.clone(),
                instance_index: t.instance,
                n: g.n(),
                m: g.m(),
                edges: g.num_edges(),
                algorithm: t.algorithm.describe(),
                order: t.order,
                seed,
                repetition: t.repetition,
                degmax,
                optimum: inst.optimum,
                ratio: inst.optimum.map(|opt| degmax as f64 / opt as f64),
                factor,
                bound,
                bound_satisfied: bound.map(|b| degmax as f64 <= b),
                peak_edges: out.peak_edges,
                passes: out.passes,
                message_edges: out.message_edges,
                wall_time_ms: spec.wall_time.then_some(elapsed),
            })
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Format {
    JsonLines,
    Csv,
}

impl std::str::FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json-lines" | "jsonl" | "json" => Ok(Format::JsonLines),
            "csv" => Ok(Format::Csv),
            _ => Err(Error::InvalidArgument(format!(
                "unknown format {s:?} (expected json-lines or csv)"
            ))),
        }
    }
}

/// Renders records; CSV always starts with [`CSV_HEADER`].
pub fn emit(records: &[ResultRecord], format: Format) -> String {
    match format {
        Format::JsonLines => records
            .iter()
            .map(|r| serde_json::to_string(r).expect("records serialize") + "\n")
            .collect(),
        Format::Csv => {
            let mut w = csv::WriterBuilder::new()
                .has_headers(false)
                .from_writer(Vec::new());
            w.write_record(CSV_HEADER).expect("in-memory write");
            for r in records {
                w.serialize(r).expect("in-memory write");
            }
            String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 fields")
        }
    }
}

/// Parses a JSON-lines document produced by [`emit`].
pub fn parse_json_lines(text: &str) -> Result<Vec<ResultRecord>> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| serde_json::from_str(l).map_err(|e| Error::parse(i + 1, e.to_string())))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn suite_spec() -> ExperimentSpec {
        ExperimentSpec::from_json(
            r#"{
                "instances": [{"generate": {"kind": "random_covering", "n": 8, "m": 5, "p": 0.3, "seed": 1}, "count": 10}],
                "algorithms": [{"name": "one_pass", "eps": 0.0}],
                "orders": ["as-given", "random", "adversarial"],
                "seed": 5
            }"#,
        )
        .unwrap()
    }

    #[test]
    fn thirty_records_all_within_bound() {
        let records = run_experiment(&suite_spec()).unwrap();
        assert_eq!(records.len(), 30);
        for r in &records {
            assert_eq!(r.bound_satisfied, Some(true));
            assert_eq!(r.recheck(), r.bound_satisfied);
            assert_eq!(r.schema, 1);
            assert!(r.wall_time_ms.is_none());
        }
        assert_eq!(records[0].order, Some(StreamOrder::AsGiven));
        assert_eq!(records[1].order, Some(StreamOrder::UniformRandom));
        assert_eq!(records[3].instance_index, 1);
    }

    #[test]
    fn zero_repetitions_give_nothing() {
        let mut spec = suite_spec();
        spec.repetitions = 0;
        assert!(run_experiment(&spec).unwrap().is_empty());
        assert_eq!(emit(&[], Format::Csv), CSV_HEADER.join(",") + "\n");
        assert_eq!(emit(&[], Format::JsonLines), "");
    }

    #[test]
    fn missing_file_names_the_path() {
        let spec = ExperimentSpec::from_json(
            r#"{"instances": [{"file": "/nonexistent/g.graph"}], "algorithms": [{"name": "optimal"}]}"#,
        )
        .unwrap();
        let err = run_experiment(&spec).unwrap_err().to_string();
        assert!(err.contains("/nonexistent/g.graph"), "{err}");
    }

    #[test]
    fn validation_errors_carry_field_paths() {
        let cases = [
            (r#"{"instances": [{}], "algorithms": []}"#, "instances[0]"),
            (
                r#"{"instances": [], "algorithms": [{"name": "one_pass", "eps": 2.0}]}"#,
                "algorithms[0].eps",
            ),
            (
                r#"{"instances": [], "algorithms": [{"name": "greedy"}], "orders": ["as-given", "random"]}"#,
                "orders[1]",
            ),
            (
                r#"{"instances": [], "algorithms": [{"name": "fancy"}]}"#,
                "algorithms[0].name",
            ),
            (
                r#"{"instances": [], "algorithms": [], "repetitions": -1}"#,
                "repetitions",
            ),
        ];
        for (text, path) in cases {
            match ExperimentSpec::from_json(text) {
                Err(Error::Spec { path: p, .. }) => assert_eq!(p, path, "{text}"),
                other => panic!("{text}: {other:?}"),
            }
        }
    }

    #[test]
    fn emit_round_trip_and_determinism() {
        let spec = ExperimentSpec::from_json(
            r#"{
                "instances": [{"generate": {"kind": "random_covering", "n": 6, "m": 4, "p": 0.5, "seed": 3}, "count": 2}],
                "algorithms": [{"name": "multipass"}, {"name": "semi2"}, {"name": "protocol", "kind": "sqrt"}, {"name": "greedy"}],
                "orders": ["as-given", "vertex-arrival"],
                "repetitions": 2
            }"#,
        )
        .unwrap();
        let a = run_experiment(&spec).unwrap();
        let b = run_experiment(&spec).unwrap();
        assert_eq!(a.len(), 2 * (2 * 2 + 2 + 2 + 2 * 2));
        for format in [Format::JsonLines, Format::Csv] {
            assert_eq!(emit(&a, format), emit(&b, format));
        }
        let text = emit(&a[..1], Format::JsonLines);
        assert_eq!(text.lines().count(), 1);
        assert_eq!(parse_json_lines(&text).unwrap(), a[..1].to_vec());
        let csv = emit(&a, Format::Csv);
        assert_eq!(csv.lines().count(), a.len() + 1);
        let mut reader = csv::Reader::from_reader(csv.as_bytes());
        assert_eq!(reader.headers().unwrap().len(), CSV_HEADER.len());
        assert!(reader
            .records()
            .all(|r| r.unwrap().len() == CSV_HEADER.len()));
    }
}
