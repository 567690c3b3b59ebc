use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use semistream_core::exact::{
    brute_force_semi, greedy_semi, min_expansion, optimal_semi, semi2, BRUTE_FORCE_LIMIT,
};
use semistream_core::graph::io::{read_graph_file, read_to_string, save_graph, save_subset};
use semistream_core::harness::{emit, run_experiment, ExperimentSpec, Format, OPTIMUM_LIMIT};
use semistream_core::skeleton::{build_skeleton, skeleton_quality, two_party, QualityMode};
use semistream_core::streaming::{
    greedy_factor, multipass_factor, multipass_semi, one_pass_factor, one_pass_semi, online_greedy,
    space_bound,
};
use semistream_core::structure::{
    check_log_bound, decompose, half_matched_split, verify_maximal_layers, verify_maximum_layers,
};
use semistream_core::{
    make_stream, BipartiteGraph, EdgePartition, Generator, SemiMatching, SkeletonKind, StreamOrder,
};

type Measured<'a> = (&'static str, Box<dyn Fn() -> Result<usize> + 'a>);

#[derive(Parser)]
#[command(
    name = "semistream",
    version,
    about = "Semi-matching solvers, streaming approximations and skeletons"
)]
struct Cli {
    /// Seed for generators, stream orders and random splits.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Output file (stdout when omitted).
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Record format for eval and bench.
    #[arg(long, global = true, value_enum, default_value_t = RecordFormat::JsonLines)]
    format: RecordFormat,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum RecordFormat {
    JsonLines,
    Csv,
}

impl From<RecordFormat> for Format {
    fn from(f: RecordFormat) -> Self {
        match f {
            RecordFormat::JsonLines => Format::JsonLines,
            RecordFormat::Csv => Format::Csv,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum GenKind {
    Complete,
    Random,
    RandomCovering,
    HardG1,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Optimal,
    Semi2,
    Greedy,
    Brute,
}

#[derive(Clone, Copy, ValueEnum)]
enum StreamAlgo {
    Onepass,
    Multipass,
    Greedy,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Sqrt,
    Cuberoot,
}

impl From<Kind> for SkeletonKind {
    fn from(k: Kind) -> Self {
        match k {
            Kind::Sqrt => SkeletonKind::Sqrt,
            Kind::Cuberoot => SkeletonKind::Cuberoot,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Semi {
    Semi2,
    Optimal,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a graph file.
    Gen {
        #[arg(long, value_enum)]
        kind: GenKind,
        #[arg(long)]
        n: usize,
        /// |B| (ignored by hard-g1, whose width follows from n and c).
        #[arg(long, default_value_t = 1)]
        m: usize,
        /// Edge probability for random graphs.
        #[arg(long, default_value_t = 0.5)]
        p: f64,
        #[arg(long, default_value_t = 1)]
        c: usize,
        #[arg(long, default_value_t = 0.0)]
        eps: f64,
    },
    /// Solve exactly (or with a reference heuristic).
    Solve {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = Method::Optimal)]
        method: Method,
    },
    /// Run a streaming algorithm and check its guarantee.
    Stream {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, value_enum)]
        algo: StreamAlgo,
        #[arg(long, default_value_t = 0.5)]
        eps: f64,
        /// as-given, random, adversarial or vertex-arrival.
        #[arg(long, default_value = "as-given")]
        order: StreamOrder,
    },
    /// Build a skeleton and write it as an edge file.
    Skeleton {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, value_enum)]
        kind: Kind,
        /// Also report the skeleton's quality (exact needs n ≤ 16).
        #[arg(long, value_enum)]
        quality: Option<QualityArg>,
        #[arg(long, default_value_t = 100)]
        budget: usize,
    },
    /// Simulate the one-way two-party protocol.
    Protocol {
        #[arg(long = "in")]
        input: PathBuf,
        /// random:<seed> or file:<path> (Alice's edges).
        #[arg(long)]
        split: String,
        #[arg(long, value_enum)]
        kind: Kind,
    },
    /// Decompose a semi-matching into matchings and verify the layers.
    Decompose {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = Semi::Semi2)]
        semi: Semi,
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Run an experiment spec and emit result records.
    Eval {
        #[arg(long)]
        spec: PathBuf,
    },
    /// Time every algorithm on random instances.
    Bench {
        #[arg(long, value_delimiter = ',', default_value = "64,256,1024")]
        sizes: Vec<usize>,
        /// Expected A-side degree.
        #[arg(long, default_value_t = 4.0)]
        degree: f64,
        #[arg(long, default_value_t = 3)]
        reps: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum QualityArg {
    Exact,
    Adversarial,
}

fn write_out(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(path) => {
            std::fs::write(path, text).with_context(|| format!("writing {}", path.display()))
        }
        None => {
            std::io::stdout().write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

fn write_json(out: Option<&Path>, value: &impl Serialize) -> Result<()> {
    write_out(out, &(serde_json::to_string_pretty(value)? + "\n"))
}

/// 1-indexed B vertex per A vertex, as in edge files.
fn one_indexed(s: &SemiMatching) -> Vec<Option<usize>> {
    s.assignment().iter().map(|b| b.map(|b| b + 1)).collect()
}

fn optimum(g: &BipartiteGraph) -> Result<Option<usize>> {
    if g.n() > OPTIMUM_LIMIT {
        return Ok(None);
    }
    Ok(Some(optimal_semi(g, &g.all_a())?.degmax()))
}

/// Runs a command; `Ok(false)` means a guarantee was violated.
fn run(cli: Cli) -> Result<bool> {
    let out = cli.out.as_deref();
    match cli.command {
        Command::Gen {
            kind,
            n,
            m,
            p,
            c,
            eps,
        } => {
            let gen = match kind {
                GenKind::Complete => Generator::Complete { n, m },
                GenKind::Random => Generator::Random {
                    n,
                    m,
                    p,
                    seed: cli.seed,
                },
                GenKind::RandomCovering => Generator::RandomCovering {
                    n,
                    m,
                    p,
                    seed: cli.seed,
                },
                GenKind::HardG1 => Generator::HardG1 {
                    n,
                    c,
                    eps,
                    seed: cli.seed,
                },
            };
            let g = gen.build()?;
            write_out(out, &format!("c {}\n{}", gen.describe(), save_graph(&g)))?;
            Ok(true)
        }

        Command::Solve { input, method } => {
            let g = read_graph_file(&input)?;
            let all = g.all_a();
            let s = match method {
                Method::Optimal => optimal_semi(&g, &all)?,
                Method::Semi2 => semi2(&g, &all)?,
                Method::Greedy => greedy_semi(&g, &all)?,
                Method::Brute => brute_force_semi(&g, &all)?,
            };
            let expansion = if g.n() > 0 {
                Some(min_expansion(&g, &all)?)
            } else {
                None
            };
            write_json(
                out,
                &json!({
                    "n": g.n(),
                    "m": g.m(),
                    "edges": g.num_edges(),
                    "degmax": s.degmax(),
                    "cost": s.cost(),
                    "assignment": one_indexed(&s),
                    "min_expansion": expansion.map(|e| json!({
                        "subset": e.subset.iter().map(|a| a + 1).collect::<Vec<_>>(),
                        "neighborhood": e.neighborhood,
                        "load_bound": e.load_bound(),
                    })),
                    "brute_force_limit": BRUTE_FORCE_LIMIT,
                }),
            )?;
            Ok(true)
        }

        Command::Stream {
            input,
            algo,
            eps,
            order,
        } => {
            let g = read_graph_file(&input)?;
            let stream = make_stream(&g, order, cli.seed);
            let (s, ledger, factor, space) = match algo {
                StreamAlgo::Onepass => {
                    let r = one_pass_semi(&stream, eps)?;
                    let space = space_bound(g.n(), r.ledger.s);
                    (
                        r.matching,
                        Some(r.ledger),
                        one_pass_factor(g.n(), eps),
                        Some(space),
                    )
                }
                StreamAlgo::Multipass => {
                    let r = multipass_semi(&stream)?;
                    let space = space_bound(g.n(), r.ledger.s);
                    (
                        r.matching,
                        Some(r.ledger),
                        multipass_factor(g.n()),
                        Some(space),
                    )
                }
                StreamAlgo::Greedy => (online_greedy(&stream)?, None, greedy_factor(g.n()), None),
            };
            let opt = optimum(&g)?;
            let bound = opt.map(|d| factor * d as f64);
            let within = bound.is_none_or(|b| s.degmax() as f64 <= b);
            let space_ok = match (&ledger, space) {
                (Some(l), Some(cap)) => l.peak_edges as f64 <= cap,
                _ => true,
            };
            write_json(
                out,
                &json!({
                    "algorithm": match algo {
                        StreamAlgo::Onepass => "onepass",
                        StreamAlgo::Multipass => "multipass",
                        StreamAlgo::Greedy => "greedy",
                    },
                    "order": order,
                    "seed": cli.seed,
                    "n": g.n(),
                    "m": g.m(),
                    "degmax": s.degmax(),
                    "optimum": opt,
                    "factor": factor,
                    "bound": bound,
                    "bound_satisfied": within,
                    "space_bound": space,
                    "space_satisfied": space_ok,
                    "ledger": ledger,
                    "assignment": one_indexed(&s),
                }),
            )?;
            Ok(within && space_ok)
        }

        Command::Skeleton {
            input,
            kind,
            quality,
            budget,
        } => {
            let g = read_graph_file(&input)?;
            let sk = build_skeleton(&g, kind.into())?;
            write_out(out, &save_subset(&g, &sk.edges))?;
            if let Some(q) = quality {
                let mode = match q {
                    QualityArg::Exact => QualityMode::Exact,
                    QualityArg::Adversarial => QualityMode::Adversarial {
                        budget,
                        seed: cli.seed,
                    },
                };
                let r = skeleton_quality(&g, &sk, mode)?;
                eprintln!(
                    "skeleton edges {}, worst ratio {} on A' = {:?} ({} subsets evaluated)",
                    sk.len(),
                    r.ratio,
                    r.worst.subset.iter().map(|a| a + 1).collect::<Vec<_>>(),
                    r.evaluated
                );
            }
            Ok(true)
        }

        Command::Protocol { input, split, kind } => {
            let g = read_graph_file(&input)?;
            let split = EdgePartition::parse(&g, &split)?;
            let t = two_party(&g, &split, kind.into())?;
            let ok = t.within_bound();
            write_json(
                out,
                &json!({
                    "kind": t.kind,
                    "alice_edges": t.alice_edges,
                    "bob_edges": t.bob_edges,
                    "message_edges": t.message_edges,
                    "message_bits": t.message_bits,
                    "message_bits_compact": t.message_bits_compact,
                    "degmax": t.degmax,
                    "optimum": t.optimum,
                    "ratio": t.ratio,
                    "bound": t.bound,
                    "bound_satisfied": ok,
                    "assignment": one_indexed(&t.output),
                }),
            )?;
            Ok(ok)
        }

        Command::Decompose {
            input,
            semi: which,
            report,
        } => {
            let g = read_graph_file(&input)?;
            let all = g.all_a();
            let s = match which {
                Semi::Semi2 => semi2(&g, &all)?,
                Semi::Optimal => optimal_semi(&g, &all)?,
            };
            let dec = decompose(&g, &s);
            let maximal = verify_maximal_layers(&dec, &g);
            let maximum = verify_maximum_layers(&dec, &g);
            let log = check_log_bound(&g)?;
            let half = half_matched_split(&g, &s, &all)?;
            let ok = match which {
                Semi::Semi2 => maximal.iter().all(|c| c.ok) && log.holds && half.ok(),
                Semi::Optimal => maximum.iter().all(|c| c.ok),
            };
            let layers: Vec<Vec<[usize; 2]>> = dec
                .layers
                .iter()
                .map(|l| l.iter().map(|e| [e.a + 1, e.b + 1]).collect())
                .collect();
            let doc = json!({
                "semi": match which { Semi::Semi2 => "semi2", Semi::Optimal => "optimal" },
                "degmax": s.degmax(),
                "layers": layers,
                "maximal": maximal,
                "maximum": maximum,
                "log_bound": log,
                "half_split": {
                    "d_star": half.d_star,
                    "covered": half.covered.iter().map(|a| a + 1).collect::<Vec<_>>(),
                    "half_ok": half.half_ok,
                    "load_ok": half.load_ok,
                    "residual_ok": half.residual_ok,
                },
                "ok": ok,
            });
            write_json(report.as_deref().or(out), &doc)?;
            Ok(ok)
        }

        Command::Eval { spec } => {
            let text = read_to_string(&spec)?;
            let spec = ExperimentSpec::from_json(&text)?;
            let records = run_experiment(&spec)?;
            let doc = emit(&records, cli.format.into());
            write_out(out.or(spec.output.as_deref()), &doc)?;
            Ok(records.iter().all(|r| r.bound_satisfied != Some(false)))
        }

        Command::Bench {
            sizes,
            degree,
            reps,
        } => {
            if reps == 0 {
                bail!("--reps must be at least 1");
            }
            let mut rows = Vec::new();
            for &n in &sizes {
                let m = (n / 2).max(1);
                let g = Generator::RandomCovering {
                    n,
                    m,
                    p: (degree / m as f64).min(1.0),
                    seed: cli.seed,
                }
                .build()?;
                let stream = make_stream(&g, StreamOrder::UniformRandom, cli.seed);
                let vstream = make_stream(&g, StreamOrder::VertexArrival, cli.seed);
                let algos: [Measured; 6] = [
                    (
                        "optimal",
                        Box::new(|| Ok(optimal_semi(&g, &g.all_a())?.degmax())),
                    ),
                    ("semi2", Box::new(|| Ok(semi2(&g, &g.all_a())?.degmax()))),
                    (
                        "one_pass(eps=0.5)",
                        Box::new(|| Ok(one_pass_semi(&stream, 0.5)?.matching.degmax())),
                    ),
                    (
                        "multipass",
                        Box::new(|| Ok(multipass_semi(&stream)?.matching.degmax())),
                    ),
                    ("greedy", Box::new(|| Ok(online_greedy(&vstream)?.degmax()))),
                    (
                        "skeleton(sqrt)",
                        Box::new(|| Ok(build_skeleton(&g, SkeletonKind::Sqrt)?.len())),
                    ),
                ];
                for (name, f) in algos.iter() {
                    let mut best = f64::INFINITY;
                    let mut value = 0;
                    for _ in 0..reps {
                        let start = Instant::now();
                        value = f()?;
                        best = best.min(start.elapsed().as_secs_f64() * 1e3);
                    }
                    rows.push((n, m, g.num_edges(), *name, value, best));
                }
            }
            let text = match cli.format {
                RecordFormat::JsonLines => rows
                    .iter()
                    .map(|(n, m, e, name, value, ms)| {
                        json!({"n": n, "m": m, "edges": e, "algorithm": name, "value": value, "best_ms": ms})
                            .to_string()
                            + "\n"
                    })
                    .collect::<String>(),
                RecordFormat::Csv => {
                    let mut s = String::from("n,m,edges,algorithm,value,best_ms\n");
                    for (n, m, e, name, value, ms) in &rows {
                        s.push_str(&format!("{n},{m},{e},{name},{value},{ms}\n"));
                    }
                    s
                }
            };
            write_out(out, &text)?;
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => {
            eprintln!("guarantee violated");
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
