use std::io::Write;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_hyperturan"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn write_file(dir: &Path, name: &str, body: &str) -> String {
    let path = dir.join(name);
    std::fs::File::create(&path).unwrap().write_all(body.as_bytes()).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn construct_turan_as_hg() {
    let out = run(&["construct", "turan", "--n", "6", "--k", "3", "--r", "3", "--format", "hg"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.starts_with("6 3\n"));
    assert_eq!(text.lines().count(), 1 + 8);
}

#[test]
fn construct_counts_as_json() {
    let out = run(&["construct", "hprime", "--n", "7", "--k", "3", "--r", "3", "--m", "3", "--format", "json"]);
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["construction"], "hprime");
    assert_eq!(v["params"]["m"], 3);
    assert_eq!(v["edges"], 19);
}

#[test]
fn emitted_hg_round_trips_through_the_cli() {
    let dir = tempfile::tempdir().unwrap();
    let first = stdout(&run(&["construct", "turan-cone", "--n", "7", "--k", "3", "--r", "3", "--i", "1"]));
    let path = write_file(dir.path(), "cone.hg", &first);
    let again = run(&["shadow", "--host", &path]);
    assert_eq!(again.status.code(), Some(0));
    let parsed = hyperturan::parse_hg(&first).unwrap();
    assert_eq!(hyperturan::write_hg(&parsed), first);
    assert_eq!(parsed.edge_count(), 23);
}

#[test]
fn contains_reports_not_contained() {
    let dir = tempfile::tempdir().unwrap();
    let host = write_file(dir.path(), "h.hg", "5 3\n0 1 2\n0 3 4\n1 3 4\n");
    let core = write_file(dir.path(), "k3.g", "3 2\n0 1\n1 2\n0 2\n");
    let out = run(&["contains", "--host", &host, "--core", &core, "--r", "3", "--format", "text"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "not contained");
}

#[test]
fn contains_reports_a_witness() {
    let dir = tempfile::tempdir().unwrap();
    let host = write_file(dir.path(), "h.hg", "6 3\n0 1 3\n1 2 4\n0 2 5\n");
    let out = run(&["contains", "--host", &host, "--core", "K3", "--r", "3"]);
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["contained"], true);
    assert_eq!(v["witness"]["edge_assignment"].as_array().unwrap().len(), 3);
}

#[test]
fn verify_biex_book_passes() {
    let out = run(&["verify", "biex-book"]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["suite"], "biex-book");
    assert_eq!(v["pass"], true);
    for c in v["claims"].as_array().unwrap() {
        for field in ["id", "anchor", "status", "detail"] {
            assert!(c.get(field).is_some());
        }
    }
}

#[test]
fn verify_is_deterministic_across_runs_and_parallelism() {
    let a = stdout(&run(&["verify", "lower-bounds"]));
    let b = stdout(&run(&["verify", "lower-bounds"]));
    let c = stdout(&run(&["--parallel", "verify", "lower-bounds"]));
    assert_eq!(a, b);
    assert_eq!(a, c);
}

#[test]
fn failing_suite_exits_one() {
    let out = run(&["verify", "optimal-m-r3"]);
    assert_eq!(out.status.code(), Some(1));
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["pass"], false);
}

#[test]
fn unknown_suite_is_a_usage_error() {
    assert_eq!(run(&["verify", "nope"]).status.code(), Some(2));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["construct"]).status.code(), Some(2));
    assert_eq!(run(&["construct", "turan", "--n", "6"]).status.code(), Some(2));
    assert_eq!(run(&["construct", "turan", "--n", "6", "--k", "2", "--r", "3"]).status.code(), Some(2));
    assert_eq!(run(&["chromatic", "--core", "Q9"]).status.code(), Some(2));
    assert_eq!(run(&["--format", "csv", "construct", "book", "--k", "2"]).status.code(), Some(2));
}

#[test]
fn bad_files_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write_file(dir.path(), "bad.hg", "4 3\n0 1 2\n0 1 x\n");
    let out = run(&["shadow", "--host", &bad]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 3"));
    let missing = dir.path().join("missing.hg");
    assert_eq!(run(&["shadow", "--host", missing.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn zero_budget_exits_three() {
    let out = run(&["--budget-nodes", "0", "search", "ex-hyper", "--n", "6", "--r", "3", "--core", "K3"]);
    assert_eq!(out.status.code(), Some(3));
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["exhaustive"], false);
}

#[test]
fn exact_searches() {
    let out = run(&["search", "ex-hyper", "--n", "6", "--r", "3", "--core", "K3"]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["value"], 10);
    assert_eq!(v["witness_edges"].as_array().unwrap().len(), 10);

    let out = run(&["search", "ex-graph", "--n", "6", "--forbid", "K3"]);
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["value"], 9);

    let out = run(&["search", "ex-cliques", "--n", "6", "--order", "3", "--forbid", "K4"]);
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["value"], 8);
}

#[test]
fn local_search_from_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let start = stdout(&run(&["construct", "fixed-vertex", "--n", "6", "--r", "3"]));
    let path = write_file(dir.path(), "start.hg", &start);
    let out = run(&["search", "local", "--n", "6", "--r", "3", "--core", "K3", "--start", &path, "--steps", "50"]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert!(v["value"].as_u64().unwrap() >= 10);
}

#[test]
fn gap_table_csv() {
    let out = run(&["gap-table", "--core", "K3", "--r", "3", "--n-min", "4", "--n-max", "6"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("n,lb_clique,lb_fixed,value,exhaustive"));
    assert_eq!(lines.count(), 3);
}

#[test]
fn graph_commands() {
    let v: Value = serde_json::from_str(&stdout(&run(&["chromatic", "--core", "C5"]))).unwrap();
    assert_eq!(v["chromatic_number"], 3);
    let v: Value = serde_json::from_str(&stdout(&run(&["critical", "--core", "B2"]))).unwrap();
    assert!(v["critical_edges"].as_array().unwrap().is_empty());
    let v: Value = serde_json::from_str(&stdout(&run(&["decomp", "--core", "B2"]))).unwrap();
    assert_eq!(v["members"].as_array().unwrap().len(), 2);
    let v: Value = serde_json::from_str(&stdout(&run(&["biex", "--core", "B2", "--n", "6"]))).unwrap();
    assert_eq!(v["value"], 1);
    let v: Value = serde_json::from_str(&stdout(&run(&["optimal-m", "--n", "7", "--k", "3", "--r", "3"]))).unwrap();
    assert_eq!(v["m"], 2);
}

#[test]
fn expand_and_operators() {
    let dir = tempfile::tempdir().unwrap();
    let text = stdout(&run(&["expand", "--core", "K3", "--r", "3"]));
    assert_eq!(text, "6 3\n0 1 3\n0 2 4\n1 2 5\n");
    let host = write_file(dir.path(), "k.hg", &stdout(&run(&["construct", "fixed-vertex", "--n", "6", "--r", "3"])));
    let heavy = hyperturan::parse_hg(&stdout(&run(&["heavy", "--host", &host, "--t", "4"]))).unwrap();
    assert_eq!(heavy.edge_count(), 5);
    let fat = hyperturan::parse_hg(&stdout(&run(&["fatgraph", "--host", &host, "--t", "2"]))).unwrap();
    assert_eq!(fat.edge_count(), 5);
}

#[test]
fn analyze_structure_flags_cone_apex() {
    let dir = tempfile::tempdir().unwrap();
    let host =
        write_file(dir.path(), "c.hg", &stdout(&run(&["construct", "turan-cone", "--n", "9", "--k", "3", "--r", "3"])));
    let out = run(&["analyze-structure", "--host", &host, "--k", "3", "--t", "2", "--theta", "2/9"]);
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["b_candidates"], serde_json::json!([0]));
    assert_eq!(v["exact"], true);
    let out = run(&["analyze-structure", "--host", &host, "--k", "3", "--t", "2", "--theta", "oops"]);
    assert_eq!(out.status.code(), Some(2));
}
