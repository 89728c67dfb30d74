//! End-to-end tests of the `minrank` binary: spawn the real executable and
//! check reports, formats, and exit codes.

use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_minrank"))
}

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout_json(output: &Output) -> Value {
    serde_json::from_slice(&output.stdout).unwrap_or_else(|e| {
        panic!(
            "stdout is not JSON ({e}): {}",
            String::from_utf8_lossy(&output.stdout)
        )
    })
}

#[test]
fn compute_path4_graph6_json() {
    let out = run(&["compute", "Ch", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["n"], 4);
    assert_eq!(v["status"], "EXACT");
    assert_eq!(v["mr"], 3);
    assert_eq!(v["mr_certified_real"], true);
    assert_eq!(v["max_nullity"], 1);
    assert_eq!(v["max_multiplicity"], 1);
    assert_eq!(v["zero_forcing"], 1);
    assert_eq!(v["lower_bound"], 3);
    let iterations = v["iterations"].as_array().unwrap();
    assert_eq!(iterations.len(), 4);
    for rec in &iterations[..3] {
        assert_eq!(rec["skipped_by_bound"], true);
        assert_eq!(rec["gb_trivial"], true);
        assert_eq!(rec["minors_distinct"], Value::Null);
    }
    assert_eq!(iterations[3]["k"], 4);
    assert_eq!(iterations[3]["gb_trivial"], false);
    assert_eq!(iterations[3]["minors_total"], 1);
    let witness = v["witness"].as_array().unwrap();
    assert_eq!(witness.len(), 4);
}

#[test]
fn compute_edge_list_file() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    writeln!(file, "0 1").unwrap();
    let path = file.path().to_str().unwrap().to_string();
    let out = run(&["compute", &path, "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["n"], 2);
    assert_eq!(v["mr"], 1);
}

#[test]
fn compute_edgeless_graph6() {
    let out = run(&["compute", "A?", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["mr"], 0);
    assert_eq!(v["status"], "EXACT");
    assert_eq!(v["components"].as_array().unwrap().len(), 2);
}

#[test]
fn compute_inline_edge_list() {
    let out = run(&["compute", "0 1\n1 2", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["n"], 3);
    assert_eq!(v["mr"], 2);
}

#[test]
fn format_flag_overrides_inference() {
    // `0 1` alone would infer the edge-list format; forcing graph6 must
    // fail because of the interior space.
    let out = run(&["compute", "0 1", "--format", "graph6"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn bounds_reports_without_algebra() {
    let out = run(&["bounds", "Ch", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["n"], 4);
    assert_eq!(v["zero_forcing_number"], 1);
    assert_eq!(v["lower_bound"], 3);
    assert_eq!(v["upper_bound"], 3);

    // K_4: Z = 3, one component.
    let out = run(&["bounds", "C~", "--json"]);
    let v = stdout_json(&out);
    assert_eq!(v["zero_forcing_number"], 3);
    assert_eq!(v["lower_bound"], 1);
    assert_eq!(v["upper_bound"], 3);

    // Edgeless on 3 vertices: no forcing at all.
    let out = run(&["bounds", "B?", "--json"]);
    let v = stdout_json(&out);
    assert_eq!(v["zero_forcing_number"], 3);
    assert_eq!(v["lower_bound"], 0);
    assert_eq!(v["upper_bound"], 0);
}

#[test]
fn witness_found_and_verified_by_rank_command() {
    let out = run(&["witness", "Ch", "--rank", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let matrix_text = String::from_utf8(out.stdout).unwrap();
    let mut file = tempfile::NamedTempFile::new().unwrap();
    file.write_all(matrix_text.as_bytes()).unwrap();
    let path = file.path().to_str().unwrap().to_string();
    let out = run(&["rank", &path]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8(out.stdout).unwrap().trim(), "3");
}

#[test]
fn witness_impossible_rank_reports_none() {
    let out = run(&["witness", "Ch", "--rank", "2", "--attempts", "2000"]);
    assert_eq!(out.status.code(), Some(3));
    assert_eq!(String::from_utf8(out.stdout).unwrap().trim(), "none found");
}

#[test]
fn witness_defaults_to_computed_mr() {
    let out = run(&["witness", "Ch", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["rank_target"], 3);
    assert_eq!(v["found"], true);
    assert_eq!(v["rank"], 3);
}

#[test]
fn rank_fixture_matrices() {
    let path11 = fixture("path11_witness.txt");
    let out = run(&["rank", path11.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8(out.stdout).unwrap().trim(), "10");

    let path12 = fixture("path12_witness.txt");
    let out = run(&["rank", path12.to_str().unwrap(), "--json"]);
    let v = stdout_json(&out);
    assert_eq!(v["rank"], 11);
    assert_eq!(v["rows"], 12);
}

#[test]
fn rank_inline_with_fractions() {
    let out = run(&["rank", "1/2 1\n1 2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8(out.stdout).unwrap().trim(), "1");
}

#[test]
fn parse_errors_exit_2() {
    for args in [
        vec!["compute", "this is not ; a graph"],
        vec!["rank", "1 2\n3"],
        vec!["compute", "0 0"],
    ] {
        let out = run(&args);
        assert_eq!(out.status.code(), Some(2), "args {args:?}");
    }
}

#[test]
fn exhausted_budgets_exit_3_with_report() {
    let out = run(&["compute", "D~{", "--max-pairs", "2", "--json"]);
    assert_eq!(out.status.code(), Some(3));
    let v = stdout_json(&out);
    assert_eq!(v["status"], "LOWER_BOUND_ONLY");
    assert_eq!(v["mr"], Value::Null);
    assert!(v["mr_lower"].as_u64().unwrap() >= 1);
    assert_eq!(v["mr_upper"], 4);
}

#[test]
fn trace_replays_levels() {
    let out = run(&["trace", "Ch", "--no-bounds", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    let levels = v["levels"].as_array().unwrap();
    assert_eq!(levels.len(), 4);
    for level in &levels[..3] {
        assert_eq!(level["verdict"], "TRIVIAL");
        assert_eq!(level["basis_size"], 1);
    }
    assert_eq!(levels[3]["verdict"], "SOLVABLE");
    assert_eq!(levels[3]["minors_total"], 1);
}

#[test]
fn trace_single_level_dumps_basis() {
    let out = run(&["trace", "Ch", "--k", "4", "--dump-gb", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    let levels = v["levels"].as_array().unwrap();
    assert_eq!(levels.len(), 1);
    let basis: Vec<&str> = levels[0]["basis"]
        .as_array()
        .unwrap()
        .iter()
        .map(|s| s.as_str().unwrap())
        .collect();
    assert!(basis.contains(&"y0*yh0 - 1"), "basis {basis:?}");
}

#[test]
fn thread_fanout_is_deterministic() {
    let baseline = run(&["compute", "Ch", "--json"]);
    let threaded = run(&["compute", "Ch", "--threads", "4", "--json"]);
    let env_threads = bin()
        .args(["compute", "Ch", "--json"])
        .env("MINRANK_THREADS", "3")
        .output()
        .expect("binary runs");
    let w0 = stdout_json(&baseline)["witness"].clone();
    assert_eq!(w0, stdout_json(&threaded)["witness"]);
    assert_eq!(w0, stdout_json(&env_threads)["witness"]);
}

#[test]
fn seed_changes_witness_but_not_mr() {
    let a = stdout_json(&run(&["compute", "Ch", "--json", "--seed", "7"]));
    let b = stdout_json(&run(&["compute", "Ch", "--json", "--seed", "8"]));
    assert_eq!(a["mr"], 3);
    assert_eq!(b["mr"], 3);
    // Identical runs are reproducible.
    let a2 = stdout_json(&run(&["compute", "Ch", "--json", "--seed", "7"]));
    assert_eq!(a["witness"], a2["witness"]);
}
