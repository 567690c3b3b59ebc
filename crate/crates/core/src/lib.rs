//! Semi-matching algorithms for bipartite graphs.
//!
//! A semi-matching assigns every A vertex to one neighboring B vertex; the
//! goal is to keep the maximum B load (`degmax`) small. The crate covers
//! exact solvers ([`exact`]), streaming approximations ([`streaming`]),
//! sparse skeletons and a one-way two-party protocol ([`skeleton`]),
//! decompositions into matchings ([`structure`]) and an experiment runner
//! ([`harness`]).

pub mod error;
pub mod exact;
mod flow;
pub mod graph;
pub mod harness;
pub mod matching;
pub mod skeleton;
pub mod streaming;
pub mod structure;

pub use error::{Error, Result};
pub use exact::{DegMinPath, IncompleteSemiMatching, SemiMatching};
pub use graph::generate::Generator;
pub use graph::{make_stream, BipartiteGraph, Edge, EdgeStream, EdgeSubset, StreamOrder};
pub use harness::{emit, run_experiment, ExperimentSpec, Format, ResultRecord};
pub use skeleton::{EdgePartition, ProtocolTranscript, Skeleton, SkeletonKind};
pub use streaming::SpaceLedger;
pub use structure::Decomposition;
