use std::io::Write;
use std::process::{Command, Output, Stdio};

use splitgraph::format::{parse_edge_list, parse_graph6};

fn splitgraph(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_splitgraph")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn with_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_splitgraph"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

#[test]
fn split_of_k2_is_a_path() {
    let o = splitgraph(&["split", "--graph6", "A_", "--format", "edge-list"]);
    assert!(o.status.success());
    let g = parse_edge_list(&stdout(&o)).unwrap();
    assert_eq!((g.order(), g.edge_count()), (4, 3));
    assert_eq!(g.degrees().iter().filter(|&&d| d == 1).count(), 2);
    assert!(g.is_connected());
}

#[test]
fn split_of_triangle_has_nine_edges() {
    let o = splitgraph(&["split", "--gen", "complete:3", "--format", "graph6"]);
    let g = parse_graph6(stdout(&o).trim()).unwrap();
    assert_eq!((g.order(), g.edge_count()), (6, 9));
}

#[test]
fn split_dot_marks_copies() {
    let o = splitgraph(&["split", "--graph6", "A_", "--format", "dot"]);
    let dot = stdout(&o);
    assert_eq!(dot.matches("label=").count(), 4);
    assert_eq!(dot.matches("style=dashed").count(), 2);
    assert_eq!(dot.matches(" -- ").count(), 3);
}

#[test]
fn invariants_json() {
    let o = splitgraph(&["invariants", "--gen", "gk:6,8", "--format", "json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["schema_version"], "1.0.0");
    assert_eq!(v["beta0_star"]["value"], 2);
    assert_eq!(v["beta0"]["value"], 4);
    assert_eq!(v["alpha0_plus_beta0"], 6);
    let o = splitgraph(&["invariants", "--gen", "star:5", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["beta0_star"]["value"], 4);
}

#[test]
fn invariants_reject_oversized_graphs() {
    let o = splitgraph(&["invariants", "--gen", "path:300"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("128"));
}

#[test]
fn exhaustive_verify_holds() {
    let o = splitgraph(&["verify", "--exhaustive", "5"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["graphs_checked"], 771);
    assert_eq!(v["failures"].as_array().unwrap().len(), 0);
    assert!(v.get("elapsed_ms").is_none());
}

#[test]
fn random_verify_is_deterministic() {
    let args = ["verify", "--random", "--n", "12", "--p", "0.3", "--samples", "100", "--seed", "7"];
    let (a, b) = (splitgraph(&args), splitgraph(&args));
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let mut narrow = args.to_vec();
    narrow.extend(["--jobs", "1"]);
    let c = splitgraph(&narrow);
    let strip = |o: &Output| {
        let mut v: serde_json::Value = serde_json::from_str(&stdout(o)).unwrap();
        v["config"]["jobs"] = 0.into();
        v
    };
    assert_eq!(strip(&a), strip(&c));
}

#[test]
fn random_verify_needs_a_seed() {
    let o = splitgraph(&["verify", "--random", "--n", "12", "--p", "0.3"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_over_graph_file() {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/tests/data/atlas.g6");
    let o = splitgraph(&["verify", "--file", path, "--format", "table"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(stdout(&o).starts_with("graphs checked 1253\n"));
}

#[test]
fn verify_reports_bad_file_lines() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.g6");
    std::fs::write(&path, "A_\nA\n").unwrap();
    let o = splitgraph(&["verify", "--file", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains(":2:"));
}

#[test]
fn family_table_flags_the_unrealized_row() {
    let o = splitgraph(&["family", "6"]);
    assert_eq!(o.status.code(), Some(1));
    let rows: Vec<Vec<String>> =
        stdout(&o).lines().skip(1).map(|l| l.split_whitespace().map(str::to_owned).collect()).collect();
    let k_and_beta: Vec<(&str, &str)> = rows.iter().map(|r| (r[0].as_str(), r[3].as_str())).collect();
    assert_eq!(k_and_beta, [("6", "6"), ("7", "7"), ("8", "8"), ("9", "10"), ("10", "10")]);
    assert_eq!(splitgraph(&["family", "3"]).status.code(), Some(0));
}

#[test]
fn convert_round_trips() {
    let o = splitgraph(&["convert", "--graph6", "FL~Cg", "--format", "edge-list"]);
    let edges = stdout(&o);
    let back = with_stdin(&["convert", "--input", "-", "--format", "graph6"], &edges);
    assert!(back.status.success());
    assert_eq!(stdout(&back), "FL~Cg\n");
}

#[test]
fn convert_labeled_edge_list_writes_sidecar() {
    let dir = tempfile::tempdir().unwrap();
    let (input, table) = (dir.path().join("g.txt"), dir.path().join("labels.json"));
    std::fs::write(&input, "4 3\nalice bob\nbob carol\ncarol alice\n").unwrap();
    let o = splitgraph(&[
        "convert",
        "--input",
        input.to_str().unwrap(),
        "--labels",
        "--label-table",
        table.to_str().unwrap(),
        "--format",
        "edge-list",
    ]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(stdout(&o), "4 3\n0 1\n0 2\n1 2\n");
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&table).unwrap()).unwrap();
    assert_eq!(v["labels"], serde_json::json!(["alice", "bob", "carol", null]));
}

#[test]
fn parse_errors_exit_two() {
    let o = splitgraph(&["convert", "--graph6", "A", "--format", "edge-list"]);
    assert_eq!(o.status.code(), Some(2));
    let o = with_stdin(&["split", "--input", "-"], "3 1\n0 5\n");
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2: vertex 5 is outside [0, 3)"));
    let o = splitgraph(&["split", "--graph6", "A_", "--gen", "path:2"]);
    assert_eq!(o.status.code(), Some(2));
}
