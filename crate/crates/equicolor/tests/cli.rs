//! Black-box tests of the command-line binary: pipelines, exit codes, and
//! cross-run determinism of the emitted files.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> &'static str {
    env!("CARGO_BIN_EXE_equicolor")
}

fn run(args: &[&str]) -> Output {
    Command::new(bin()).args(args).output().expect("binary runs")
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn gen_grid(dir: &Path, rows: usize, cols: usize) -> PathBuf {
    let graph = dir.join(format!("grid_{rows}x{cols}.txt"));
    let out = run(&[
        "gen",
        "--spec",
        &format!(r#"{{"family":"grid_diag","rows":{rows},"cols":{cols}}}"#),
        "--out",
        path_str(&graph),
    ]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    graph
}

#[test]
fn gen_color_verify_pipeline() {
    let dir = tempfile::tempdir().unwrap();
    let graph = gen_grid(dir.path(), 8, 8);
    let coloring = dir.path().join("coloring.json");

    let out = run(&[
        "color", "--r", "13", "--in", path_str(&graph), "--out", path_str(&coloring),
    ]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));

    let out = run(&["verify", "--in", path_str(&graph), "--coloring", path_str(&coloring)]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("ok"));
}

#[test]
fn corrupted_coloring_exits_1() {
    let dir = tempfile::tempdir().unwrap();
    let graph = gen_grid(dir.path(), 5, 5);
    let coloring = dir.path().join("coloring.json");
    run(&["color", "--r", "13", "--in", path_str(&graph), "--out", path_str(&coloring)]);

    // merge class 1 into class 0: no longer equitable, likely not proper
    let text = std::fs::read_to_string(&coloring).unwrap();
    let mut json: serde_json::Value = serde_json::from_str(&text).unwrap();
    let assignment = json["assignment"].as_array_mut().unwrap();
    for slot in assignment.iter_mut() {
        if slot == 1 {
            *slot = 0.into();
        }
    }
    let sizes = json["class_sizes"].as_array_mut().unwrap();
    let moved = sizes[1].as_u64().unwrap();
    sizes[0] = (sizes[0].as_u64().unwrap() + moved).into();
    sizes[1] = 0.into();
    std::fs::write(&coloring, serde_json::to_string(&json).unwrap()).unwrap();

    let out = run(&["verify", "--in", path_str(&graph), "--coloring", path_str(&coloring)]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn bad_input_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let bogus = dir.path().join("bogus.txt");
    std::fs::write(&bogus, "this is not an edge list\n").unwrap();
    let out = run(&["color", "--r", "13", "--in", path_str(&bogus)]);
    assert_eq!(out.status.code(), Some(2));

    // r too small for the mode is also an input error
    let graph = gen_grid(dir.path(), 4, 4);
    let out = run(&["color", "--r", "12", "--in", path_str(&graph)]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn infeasible_oracle_exits_4_when_required() {
    let dir = tempfile::tempdir().unwrap();
    let graph = dir.path().join("k77.txt");
    let out = run(&[
        "gen", "--spec", r#"{"family":"complete_bipartite","p":7,"q":7}"#, "--out", path_str(&graph),
    ]);
    assert!(out.status.success());

    let out = run(&["oracle", "--k", "7", "--in", path_str(&graph), "--require-feasible"]);
    assert_eq!(out.status.code(), Some(4));

    let out = run(&["oracle", "--k", "7", "--in", path_str(&graph)]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("infeasible"));

    let out = run(&["oracle", "--k", "8", "--in", path_str(&graph), "--require-feasible"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn trace_records_and_replays() {
    let dir = tempfile::tempdir().unwrap();
    let graph = gen_grid(dir.path(), 16, 16);
    let coloring = dir.path().join("coloring.json");
    let trace = dir.path().join("trace.json");

    let out = run(&[
        "color", "--r", "14", "--in", path_str(&graph),
        "--out", path_str(&coloring), "--trace", path_str(&trace),
    ]);
    assert!(out.status.success());

    let out = run(&["trace", "verify", "--in", path_str(&graph), "--trace", path_str(&trace)]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("replayed identically"));

    // a trace from a different graph is rejected
    let other = gen_grid(dir.path(), 5, 5);
    let out = run(&["trace", "verify", "--in", path_str(&other), "--trace", path_str(&trace)]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn output_files_are_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let graph = gen_grid(dir.path(), 10, 10);
    let mut outputs = Vec::new();
    for run_idx in 0..2 {
        let coloring = dir.path().join(format!("c{run_idx}.json"));
        let trace = dir.path().join(format!("t{run_idx}.json"));
        let out = run(&[
            "color", "--r", "13", "--seed", "9", "--in", path_str(&graph),
            "--out", path_str(&coloring), "--trace", path_str(&trace),
        ]);
        assert!(out.status.success());
        outputs.push((std::fs::read(&coloring).unwrap(), std::fs::read(&trace).unwrap()));
    }
    assert_eq!(outputs[0], outputs[1], "outputs must be byte-identical");
}
