use std::io::Write;
use std::process::{Command, Output};

use serde_json::Value;

fn heawood(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_heawood"))
        .args(args)
        .env_remove("HEAWOOD_MAX_N")
        .output()
        .unwrap()
}

fn json(args: &[&str]) -> Value {
    let out = heawood(args);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn entry<'a>(report: &'a Value, name: &str) -> &'a Value {
    report["entries"].as_array().unwrap().iter().find(|e| e["name"] == name).unwrap()
}

#[test]
fn analyze_octahedron() {
    let r = json(&["analyze", "octahedron", "--output", "json"]);
    assert_eq!(r["a"].as_f64().unwrap(), 4.0);
    assert_eq!(r["n"], 6);
    assert_eq!(r["e"], 12);
    assert_eq!(entry(&r, "chromatic")["value"].as_f64().unwrap(), 4.0);
    assert_eq!(entry(&r, "heawood")["value"].as_f64().unwrap(), 5.0);
    assert_eq!(r["best_upper"].as_f64().unwrap(), 4.0);
    assert_eq!(r["tight"], true);
}

#[test]
fn analyze_k6_on_projective_plane() {
    let r = json(&["analyze", "complete:6", "--surface", "nonorientable:1", "--output", "json"]);
    assert_eq!(r["a"].as_f64().unwrap(), 6.0);
    assert_eq!(entry(&r, "heawood")["value"].as_f64().unwrap(), 6.0);
    assert_eq!(r["tight"], true);
}

#[test]
fn analyze_edge_list_file_in_text_mode() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    writeln!(file, "# four-cycle\n4 4\n0 1\n1 2\n2 3\n0 3").unwrap();
    let out = heawood(&["analyze", file.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("fiedler_min_degree"), "{text}");
}

#[test]
fn exit_codes() {
    assert_eq!(heawood(&["analyze", "definitely not a graph"]).status.code(), Some(2));
    assert_eq!(heawood(&["analyze", "octahedron", "--bogus"]).status.code(), Some(2));
    // graph6 for the empty graph on two vertices
    assert_eq!(heawood(&["analyze", "A?"]).status.code(), Some(3));
    assert_eq!(heawood(&["ramanujan", "path:4"]).status.code(), Some(3));
    assert_eq!(heawood(&["sweep", "--predicate", "nope", "--max-n", "4"]).status.code(), Some(2));
}

#[test]
fn surface_table_by_genus() {
    let rows = json(&["surface", "--genus-range", "0..3", "--output", "json"]);
    let heawood: Vec<i64> = rows.as_array().unwrap().iter().map(|r| r["heawood"].as_i64().unwrap()).collect();
    assert_eq!(heawood, [4, 7, 8, 9]);
    let rows = json(&["surface", "--genus-range", "1..2", "--orientable", "false", "--output", "json"]);
    let max: Vec<u64> = rows.as_array().unwrap().iter().map(|r| r["max_complete"].as_u64().unwrap()).collect();
    assert_eq!(max, [6, 6]);
    let rows = json(&["surface", "--chi-range", "-2..1", "--output", "json"]);
    assert!(rows.as_array().unwrap().iter().all(|r| r["heawood"].as_i64() == r["cook"].as_i64().map(|c| c + 1)));
}

#[test]
fn sweep_fiedler_chain() {
    let r = json(&["sweep", "--predicate", "fiedler_chain_holds", "--max-n", "7", "--output", "json"]);
    assert_eq!(r["counterexamples"].as_array().unwrap().len(), 0);
    assert!(r["checked"].as_u64().unwrap() > 853);
    let text = String::from_utf8(heawood(&["sweep", "--predicate", "fiedler_chain_holds", "--max-n", "5"]).stdout).unwrap();
    assert!(text.contains("counterexamples: none"), "{text}");
}

#[test]
fn sweep_order_is_capped() {
    let out = heawood(&["sweep", "--predicate", "fiedler_chain_holds", "--max-n", "9"]);
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn sweep_graph6_file() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    // K4, the octahedron, and the double wheel on a pentagon
    let oct = String::from_utf8(heawood(&["family", "octahedron", "--format", "g6"]).stdout).unwrap();
    let dw = String::from_utf8(heawood(&["family", "double_wheel:5", "--format", "g6"]).stdout).unwrap();
    write!(file, "C~\n{}{}", oct, dw).unwrap();
    let path = file.path().to_str().unwrap();
    let r = json(&["sweep", "--predicate", "conjecture1_gap", "--input", path, "--output", "json"]);
    assert_eq!(r["checked"], 1);
    assert_eq!(r["counterexamples"].as_array().unwrap().len(), 1);
    let r = json(&["sweep", "--predicate", "conjecture1_planar_cap", "--input", path, "--output", "json"]);
    assert_eq!(r["checked"], 3);
    assert_eq!(r["extremal"].as_array().unwrap().len(), 2);
}

#[test]
fn trend_double_wheel() {
    let points = json(&["trend", "--family", "double_wheel", "--n", "4..20", "--output", "json"]);
    let points = points.as_array().unwrap();
    assert_eq!(points.len(), 17);
    for p in points {
        let n = p["n"].as_f64().unwrap();
        let expected = (4.0 - 2.0 * (2.0 * std::f64::consts::PI / n).cos()).min(n);
        assert!((p["a"].as_f64().unwrap() - expected).abs() < 1e-8);
    }
}

#[test]
fn ramanujan_degrees() {
    let r = json(&["ramanujan", "--d", "8", "--output", "json"]);
    assert_eq!(r["applicable"], false);
    assert!(r["reason"].as_str().unwrap().starts_with("inapplicable"));
    let r = json(&["ramanujan", "--d", "9", "--output", "json"]);
    assert_eq!(r["genus_lower_bound"], 1);
    let r = json(&["ramanujan", "complete:10", "--output", "json"]);
    assert_eq!(r["applicable"], false);
    assert_eq!(r["ramanujan"], true);
    let r = json(&["ramanujan", "petersen", "--output", "json"]);
    assert_eq!(r["degree"], 3);
    assert_eq!(r["applicable"], false);
}

#[test]
fn family_output() {
    let out = heawood(&["family", "complete:3", "--format", "g6"]);
    assert_eq!(String::from_utf8(out.stdout).unwrap().trim(), "Bw");
    let out = heawood(&["family", "cycle:4"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().next().unwrap().trim(), "4 4");
    assert_eq!(heawood(&["family", "nonsense"]).status.code(), Some(2));
}
