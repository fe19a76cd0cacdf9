// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

//! End-to-end tests against the compiled binary.

use serde_json::Value;
use std::path::PathBuf;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_incolor"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json_stdout(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!(
            "stdout is not JSON ({e}): {}",
            String::from_utf8_lossy(&out.stdout)
        )
    })
}

fn temp_file(name: &str, content: &str) -> PathBuf {
    let path = std::env::temp_dir().join(format!("incolor-test-{}-{name}", std::process::id()));
    std::fs::write(&path, content).unwrap();
    path
}

#[test]
fn analyze_cycle5_reports_lower_and_exact_four() {
    let out = run(&["analyze", "--family", "cycle:5"]);
    assert!(out.status.success());
    let v = json_stdout(&out);
    assert_eq!(v["schema"], 1);
    assert_eq!(v["exact"]["chi_i"], 4);
    let dom = v["lower"]
        .as_array()
        .unwrap()
        .iter()
        .find(|b| b["name"] == "domination")
        .expect("domination bound present");
    assert_eq!(dom["value"], 4);
}

#[test]
fn analyze_petersen_flags_the_necessary_conditions() {
    let out = run(&["analyze", "--family", "petersen", "--no-exact"]);
    assert!(out.status.success());
    let v = json_stdout(&out);
    assert_eq!(v["nec"]["conclusion"], "lower_bound_raised");
    assert_eq!(v["nec"]["order_divisible"], false);
    assert_eq!(v["nec"]["class_one"], false);
    let nec_bound = v["lower"]
        .as_array()
        .unwrap()
        .iter()
        .find(|b| b["name"] == "necessary-conditions")
        .expect("necessary-conditions bound present");
    assert_eq!(nec_bound["value"], 5);
    assert!(v.get("exact").is_none());
}

#[test]
fn analyze_wheel_with_planar_flag_reports_delta_plus_five() {
    let out = run(&["analyze", "--family", "wheel:8", "--planar", "--no-exact"]);
    assert!(out.status.success());
    let v = json_stdout(&out);
    assert_eq!(v["graph"]["max_degree"], 8);
    let planar = v["upper"]
        .as_array()
        .unwrap()
        .iter()
        .find(|b| b["name"] == "planar")
        .expect("planar bound present");
    assert_eq!(planar["value"], 13);
}

#[test]
fn analyze_reads_graph_files_in_both_formats() {
    let g6 = temp_file("k4.g6", "C~\n");
    let out = run(&["analyze", "--input", g6.to_str().unwrap()]);
    assert!(out.status.success());
    let v = json_stdout(&out);
    assert_eq!(v["graph"]["n"], 4);
    assert_eq!(v["graph"]["m"], 6);
    assert_eq!(v["exact"]["chi_i"], 4);

    let el = temp_file("c4.txt", "4 4\n0 1\n1 2\n2 3\n0 3\n");
    let out = run(&["analyze", "--input", el.to_str().unwrap()]);
    assert!(out.status.success());
    let v = json_stdout(&out);
    assert_eq!(v["graph"]["m"], 4);
    assert_eq!(v["exact"]["chi_i"], 4);
}

#[test]
fn analyze_rejects_bad_input_with_exit_2() {
    let bad = temp_file("bad.g6", "C!\n");
    let out = run(&["analyze", "--input", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("graph6"));

    let out = run(&["analyze", "--family", "mystery:9"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn analyze_beyond_guard_degrades_to_bounds_with_warning() {
    let out = run(&["analyze", "--family", "complete:12"]);
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("guard"));
    let v = json_stdout(&out);
    assert!(v.get("exact").is_none());
    assert!(!v["upper"].as_array().unwrap().is_empty());
}

#[test]
fn compose_cartesian_of_triangles_yields_a_valid_six_coloring() {
    let out = run(&["compose", "cartesian", "cycle:3", "cycle:3"]);
    assert!(out.status.success());
    let v = json_stdout(&out);
    assert_eq!(v["palette"], 6);
    assert_eq!(v["valid"], true);
    assert_eq!(v["n"], 9);
    assert_eq!(v["m"], 18);
    assert_eq!(v["coloring"].as_array().unwrap().len(), 36);
}

#[test]
fn compose_join_of_null_graphs_yields_five_colors() {
    let out = run(&["compose", "join", "null:3", "null:2"]);
    assert!(out.status.success());
    let v = json_stdout(&out);
    assert_eq!(v["palette"], 5);
    assert_eq!(v["valid"], true);
    assert_eq!(v["strategy"], "join-cross-palette");
}

#[test]
fn compose_union_of_matchings_yields_the_four_colored_cycle() {
    let out = run(&["compose", "union", "matching:10a", "matching:10b"]);
    assert!(out.status.success());
    let v = json_stdout(&out);
    assert_eq!(v["palette"], 4);
    assert_eq!(v["valid"], true);
    assert_eq!(v["n"], 10);
    assert_eq!(v["m"], 10);
}

#[test]
fn compose_writes_dot_when_asked() {
    let dot = std::env::temp_dir().join(format!("incolor-test-{}.dot", std::process::id()));
    let out = run(&[
        "compose",
        "cartesian",
        "complete:2",
        "complete:2",
        "--dot",
        dot.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let text = std::fs::read_to_string(&dot).unwrap();
    assert!(text.starts_with("graph g {"));
    assert_eq!(text.matches("--").count(), 4);
}

#[test]
fn scan_of_cycles_reproduces_the_cycle_law() {
    let spec = temp_file(
        "cycles.json",
        r#"{ "schema": 1, "families": ["cycle:3..12"], "exact": true }"#,
    );
    let out = run(&["scan", spec.to_str().unwrap()]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.trim().lines().collect();
    assert_eq!(lines.len(), 11, "{text}");
    assert!(lines[0].starts_with("id,n,m,max_degree"));
    let chis: Vec<&str> = lines[1..]
        .iter()
        .map(|l| l.split(',').nth(9).unwrap())
        .collect();
    assert_eq!(chis, ["3", "4", "4", "3", "4", "4", "3", "4", "4", "3"]);
    assert!(lines[1..]
        .iter()
        .all(|l| l.split(',').nth(10) == Some("false")));
}

#[test]
fn scan_output_is_byte_identical_across_runs() {
    let spec = temp_file(
        "det.json",
        r#"{ "schema": 1, "families": ["cycle:3..6", "random_gnp:7:0.5", "star:4"], "seeds": [1, 2] }"#,
    );
    let a = run(&["scan", spec.to_str().unwrap()]);
    let b = run(&["scan", spec.to_str().unwrap()]);
    assert!(a.status.success() && b.status.success());
    assert_eq!(a.stdout, b.stdout);
    // Two seeds instantiate the random family twice.
    let text = String::from_utf8(a.stdout).unwrap();
    assert!(text.contains("random_gnp:7:0.5:1"));
    assert!(text.contains("random_gnp:7:0.5:2"));
}

#[test]
fn scan_with_no_families_prints_the_header_only() {
    let spec = temp_file("empty.json", r#"{ "schema": 1, "families": [] }"#);
    let out = run(&["scan", spec.to_str().unwrap()]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.trim().lines().count(), 1);
}

#[test]
fn scan_records_instance_failures_in_row() {
    let spec = temp_file(
        "failing.json",
        r#"{ "schema": 1, "families": ["cycle:2", "cycle:4"] }"#,
    );
    let out = run(&["scan", spec.to_str().unwrap()]);
    assert!(out.status.success(), "scan must not abort on a bad instance");
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.trim().lines().collect();
    assert_eq!(lines.len(), 3);
    assert!(lines[1].starts_with("cycle:2,,"), "{}", lines[1]);
    assert!(lines[1].contains("cycle needs n >= 3"));
    assert!(lines[2].starts_with("cycle:4,4,4"));
}

#[test]
fn scan_json_format_carries_the_same_rows() {
    let spec = temp_file(
        "json.json",
        r#"{ "schema": 1, "families": ["cycle:5"], "format": "json" }"#,
    );
    let out = run(&["scan", spec.to_str().unwrap()]);
    assert!(out.status.success());
    let v = json_stdout(&out);
    assert_eq!(v["schema"], 1);
    assert_eq!(v["rows"][0]["id"], "cycle:5");
    assert_eq!(v["rows"][0]["chi_i"], 4);
    assert_eq!(v["rows"][0]["sandwich_violation"], false);
}

#[test]
fn check_accepts_solver_output_and_flags_corruption() {
    // Round-trip: analyze emits a witness, check must accept it.
    let out = run(&["analyze", "--family", "cycle:6"]);
    assert!(out.status.success());
    let v = json_stdout(&out);
    let witness = serde_json::to_string(&v["exact"]["witness"]).unwrap();
    let coloring = temp_file("witness.json", &witness);
    let out = run(&[
        "check",
        "--family",
        "cycle:6",
        "--coloring",
        coloring.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let v = json_stdout(&out);
    assert_eq!(v["valid"], true);
    assert_eq!(v["violations"].as_array().unwrap().len(), 0);

    // Corrupt one arc: both arcs of edge (0,1) get color 0.
    let mut records: Vec<Value> = serde_json::from_str(&witness).unwrap();
    for r in &mut records {
        if (r["tail"] == 0 && r["head"] == 1) || (r["tail"] == 1 && r["head"] == 0) {
            r["color"] = serde_json::json!(0);
        }
    }
    let corrupted = temp_file("corrupted.json", &serde_json::to_string(&records).unwrap());
    let out = run(&[
        "check",
        "--family",
        "cycle:6",
        "--coloring",
        corrupted.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let v = json_stdout(&out);
    assert_eq!(v["valid"], false);
    assert!(!v["violations"].as_array().unwrap().is_empty());

    // An incomplete coloring is an input error, not a verdict.
    records.pop();
    let partial = temp_file("partial.json", &serde_json::to_string(&records).unwrap());
    let out = run(&[
        "check",
        "--family",
        "cycle:6",
        "--coloring",
        partial.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn analyze_accepts_an_ordering_file_for_the_degeneracy_bound() {
    let ordering = temp_file("order.txt", "0 1 2 3 4 5 6\n");
    let out = run(&[
        "analyze",
        "--family",
        "random_ktree:2:7:3",
        "--ordering",
        ordering.to_str().unwrap(),
        "--no-exact",
    ]);
    assert!(out.status.success());
    let v = json_stdout(&out);
    let delta = v["graph"]["max_degree"].as_u64().unwrap();
    let kdeg = v["upper"]
        .as_array()
        .unwrap()
        .iter()
        .find(|b| b["name"] == "restricted-degenerate")
        .expect("restricted bound present");
    assert_eq!(kdeg["value"].as_u64().unwrap(), delta + 2 + 2);
}

#[test]
fn scan_rejects_malformed_specs() {
    let spec = temp_file("badschema.json", r#"{ "schema": 7, "families": [] }"#);
    let out = run(&["scan", spec.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));

    let spec = temp_file("badjson.json", "{");
    let out = run(&["scan", spec.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}
