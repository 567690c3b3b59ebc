use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn semistream(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_semistream"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json_of(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is json")
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_owned()
}

const TRI: &str = "p semi 3 2\ne 1 1\ne 2 1\ne 3 1\ne 3 2\n";

#[test]
fn gen_then_solve() {
    let dir = tempfile::tempdir().unwrap();
    let g = dir.path().join("g.graph");
    let g = g.to_str().unwrap();
    let out = semistream(&[
        "gen",
        "--kind",
        "random-covering",
        "--n",
        "10",
        "--m",
        "4",
        "--p",
        "0.3",
        "--seed",
        "3",
        "--out",
        g,
    ]);
    assert!(out.status.success());
    let text = std::fs::read_to_string(g).unwrap();
    assert!(text.contains("p semi 10 4"));

    let optimal = json_of(&semistream(&["solve", "--in", g]));
    let brute = json_of(&semistream(&["solve", "--in", g, "--method", "brute"]));
    assert_eq!(optimal["degmax"], brute["degmax"]);
    assert_eq!(optimal["degmax"], optimal["min_expansion"]["load_bound"]);
}

#[test]
fn solve_tri() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "tri.graph", TRI);
    let v = json_of(&semistream(&["solve", "--in", &g]));
    assert_eq!(v["degmax"], 2);
    assert_eq!(v["assignment"], serde_json::json!([1, 1, 2]));
}

#[test]
fn stream_algorithms_report_bounds() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "tri.graph", TRI);
    for algo in ["onepass", "multipass", "greedy"] {
        let out = semistream(&["stream", "--in", &g, "--algo", algo, "--eps", "0"]);
        assert_eq!(out.status.code(), Some(0), "{algo}");
        let v = json_of(&out);
        assert_eq!(v["bound_satisfied"], true);
        assert_eq!(v["optimum"], 2);
    }
    let result = dir.path().join("result.json");
    let out = semistream(&[
        "stream",
        "--in",
        &g,
        "--algo",
        "onepass",
        "--order",
        "random",
        "--seed",
        "9",
        "--out",
        result.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(result).unwrap()).unwrap();
    assert_eq!(v["ledger"]["passes"], 1);
}

#[test]
fn greedy_rejects_interleaved_streams() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "g.graph", "p semi 2 2\ne 1 1\ne 2 1\ne 1 2\n");
    let out = semistream(&["stream", "--in", &g, "--algo", "greedy"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("vertex-arrival"));
}

#[test]
fn skeleton_and_protocol() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "tri.graph", TRI);
    let sk = dir.path().join("sk.edges");
    let out = semistream(&[
        "skeleton",
        "--in",
        &g,
        "--kind",
        "sqrt",
        "--out",
        sk.to_str().unwrap(),
        "--quality",
        "exact",
    ]);
    assert!(out.status.success());
    assert_eq!(
        std::fs::read_to_string(&sk).unwrap(),
        "p semi 3 2\ne 1 1\ne 2 1\ne 3 2\n"
    );

    let alice = write(dir.path(), "alice.edges", "p semi 3 2\ne 1 1\ne 2 1\n");
    let v = json_of(&semistream(&[
        "protocol",
        "--in",
        &g,
        "--split",
        &format!("file:{alice}"),
        "--kind",
        "sqrt",
    ]));
    assert_eq!(v["message_edges"], 2);
    assert_eq!(v["ratio"], 1.0);

    let out = semistream(&[
        "protocol", "--in", &g, "--split", "random:4", "--kind", "cuberoot",
    ]);
    assert!(out.status.success());
    let out = semistream(&["protocol", "--in", &g, "--split", "coin", "--kind", "sqrt"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn decompose_writes_report() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(
        dir.path(),
        "g.graph",
        "p semi 3 3\ne 1 1\ne 2 1\ne 2 2\ne 3 2\ne 3 3\n",
    );
    let report = dir.path().join("report.json");
    let out = semistream(&[
        "decompose",
        "--in",
        &g,
        "--semi",
        "semi2",
        "--report",
        report.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();
    assert_eq!(v["ok"], true);
    assert_eq!(v["maximum"][0]["ok"], false);
    assert_eq!(v["layers"][0], serde_json::json!([[1, 1], [3, 2]]));
}

#[test]
fn eval_is_deterministic_in_both_formats() {
    let dir = tempfile::tempdir().unwrap();
    let spec = write(
        dir.path(),
        "spec.json",
        r#"{
            "instances": [{"generate": {"kind": "random_covering", "n": 8, "m": 5, "p": 0.4, "seed": 1}, "count": 4}],
            "algorithms": [{"name": "one_pass", "eps": 0.5}, {"name": "multipass"}, {"name": "semi2"}],
            "orders": ["as-given", "random", "adversarial"],
            "seed": 11
        }"#,
    );
    let a = semistream(&["eval", "--spec", &spec]);
    let b = semistream(&["eval", "--spec", &spec]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(
        String::from_utf8_lossy(&a.stdout).lines().count(),
        4 * (3 + 3 + 1)
    );

    let csv = semistream(&["eval", "--spec", &spec, "--format", "csv"]);
    let text = String::from_utf8(csv.stdout).unwrap();
    assert!(text.starts_with("schema,instance,"));
    assert_eq!(text.lines().count(), 4 * 7 + 1);
}

#[test]
fn eval_reports_spec_errors_with_paths() {
    let dir = tempfile::tempdir().unwrap();
    let spec = write(
        dir.path(),
        "spec.json",
        r#"{"instances": [], "algorithms": [{"name": "one_pass", "eps": 3}]}"#,
    );
    let out = semistream(&["eval", "--spec", &spec]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("algorithms[0].eps"));
}

#[test]
fn malformed_graph_is_a_usage_error() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "bad.graph", "p semi 2 2\ne 3 1\n");
    let out = semistream(&["solve", "--in", &g]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
}

#[test]
fn bench_emits_rows() {
    let out = semistream(&[
        "bench", "--sizes", "16,32", "--reps", "1", "--format", "csv",
    ]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().count(), 1 + 2 * 6);
}
