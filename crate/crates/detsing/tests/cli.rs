use std::process::{Command, Output};

use serde_json::{json, Value};

fn detsing(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_detsing")).args(args).output().expect("binary runs")
}

fn json_of(args: &[&str]) -> Value {
    let out = detsing(args);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

fn schema(v: &Value) {
    assert!(v["params"].is_object());
    assert!(v["rows"].is_array());
    assert!(v["provenance"]["source"].is_string());
}

#[test]
fn cohomology_golden() {
    let v = json_of(&["cohomology", "--m", "3", "--a", "2", "--b", "2", "--c", "1", "--json"]);
    schema(&v);
    assert_eq!(v["rows"], json!([{ "nu": 1, "rank": 3, "descriptor": "F^∨_1" }]));
    assert_eq!(v["params"], json!({ "m": 3, "a": 2, "b": 2, "c": 1 }));
    assert_eq!((&v["nu"], &v["rank"], &v["descriptor"]), (&json!(1), &json!(3), &json!("F^∨_1")));
}

#[test]
fn negative_twist_is_accepted() {
    let v = json_of(&["cohomology", "--m", "2", "--a", "1", "--b", "2", "--c", "-1", "--json"]);
    assert_eq!((&v["nu"], &v["rank"]), (&json!(0), &json!(3)));
}

#[test]
fn presentation_structure() {
    let v = json_of(&["presentation", "--m", "5", "--n", "5", "--a", "4", "--b", "4", "--json"]);
    schema(&v);
    assert_eq!(v["structure"], json!("((Δ^(5),Δ^(4)),(Δ^(4),Δ^(3)))"));
    let ranks = |key: &str| v[key].as_array().unwrap().iter().map(|s| s["rank"].as_u64().unwrap()).collect::<Vec<_>>();
    assert_eq!(ranks("p0"), vec![1, 25]);
    assert_eq!(ranks("p1"), vec![1, 25]);
    assert_eq!((&v["rho"]["rows"], &v["rho"]["cols"]), (&json!(26), &json!(26)));
    let blocks: Vec<u64> = v["rows"].as_array().unwrap().iter().map(|r| r["t"].as_u64().unwrap()).collect();
    assert_eq!(blocks, vec![5, 4, 4, 3]);
}

#[test]
fn presentation_of_the_one_by_one_case() {
    let v = json_of(&["presentation", "--m", "1", "--n", "1", "--a", "1", "--b", "1", "--json"]);
    let entries = v["rho"]["entries"].as_array().unwrap();
    assert_eq!(entries.len(), 1);
    let terms = entries[0][2].as_array().unwrap();
    assert_eq!(terms.len(), 1);
    assert_eq!(terms[0]["exponents"], json!({ "x_11": 1 }));
    assert_eq!(terms[0]["coeff_den"], json!(1));
    assert_eq!(terms[0]["coeff_num"].as_i64().unwrap().abs(), 1);
}

#[test]
fn ext_and_simples() {
    let v = json_of(&["ext", "--m", "3", "--n", "3", "--a", "2", "--b", "2", "--t", "3", "--json"]);
    schema(&v);
    assert_eq!(v["dimension"], json!(9));
    let v = json_of(&["simples", "--m", "3", "--n", "3", "--a", "2", "--tmax", "1", "--json"]);
    let rows: Vec<(u64, u64, u64)> = v["rows"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| (r["t"].as_u64().unwrap(), r["vertex"].as_u64().unwrap(), r["rank"].as_u64().unwrap()))
        .collect();
    assert_eq!(rows, vec![(0, 2, 1), (1, 1, 3), (1, 3, 3)]);
}

#[test]
fn betti_and_rankpoly() {
    let v = json_of(&["betti", "--m", "2", "--n", "3", "--a", "2", "--b", "2", "--c", "0", "--json"]);
    schema(&v);
    let v = json_of(&["rankpoly", "--m", "2", "--a", "2", "--b", "2", "--json"]);
    assert_eq!(v["polynomial"].as_str().map(|s| s.contains('z')), Some(true));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(detsing(&["bogus"]).status.code(), Some(2));
    assert_eq!(detsing(&["cohomology", "--m", "3"]).status.code(), Some(2));
    let out = detsing(&["cohomology", "--m", "3", "--a", "5", "--b", "2", "--c", "1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("error"));
    assert_eq!(detsing(&["betti", "--m", "3", "--n", "3", "--a", "2", "--b", "2", "--c", "3"]).status.code(), Some(2));
    assert_eq!(detsing(&["--help"]).status.code(), Some(0));
}

#[test]
fn failed_verification_exits_one_with_a_report() {
    let out = detsing(&["verify", "--suite", "betti", "--m", "2", "--n", "3", "--max-degree", "1"]);
    assert_eq!(out.status.code(), Some(1));
    let report: Value = serde_json::from_slice(&out.stderr).expect("failure report");
    assert!(!report["failures"].as_array().unwrap().is_empty());
    let out = detsing(&["verify", "--suite", "betti", "--m", "2", "--n", "3", "--max-degree", "1", "--json"]);
    assert_eq!(out.status.code(), Some(1));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["passed"], json!(false));
}

#[test]
fn verification_suites_pass() {
    for suite in ["star", "pbw", "cohomology", "hilbert", "betti", "moduli", "ext"] {
        let out = detsing(&["verify", "--suite", suite, "--m", "2", "--n", "2", "--max-degree", "6", "--samples", "40"]);
        assert_eq!(out.status.code(), Some(0), "{suite}: {}", String::from_utf8_lossy(&out.stdout));
    }
}

#[test]
fn identical_seeds_give_identical_reports() {
    for suite in ["star", "moduli"] {
        let args = ["verify", "--suite", suite, "--m", "2", "--n", "3", "--seed", "17", "--samples", "30", "--json"];
        let (x, y) = (detsing(&args), detsing(&args));
        assert_eq!(x.status.code(), Some(0));
        assert_eq!(x.stdout, y.stdout);
    }
}

#[test]
fn library_entry_point_matches_the_binary() {
    let args = ["detsing", "cohomology", "--m", "3", "--a", "2", "--b", "2", "--c", "1", "--json"];
    let (mut out, mut err) = (Vec::new(), Vec::new());
    assert_eq!(detsing::run(args, &mut out, &mut err), 0);
    assert_eq!(out, detsing(&args[1..]).stdout);
}

#[test]
fn moduli_from_files() {
    let dir = tempfile::tempdir().unwrap();
    let alpha = dir.path().join("alpha.txt");
    let beta = dir.path().join("beta.txt");
    std::fs::write(&alpha, "# alpha\n1 0 0\n0 1 0\n").unwrap();
    std::fs::write(&beta, "1/2, 0, 3\n0 -1 1\n").unwrap();
    let (a, b) = (alpha.to_str().unwrap(), beta.to_str().unwrap());
    let v = json_of(&["moduli", "--m", "3", "--n", "3", "--alpha", a, "--beta", b, "--json"]);
    schema(&v);
    let row = &v["rows"][0];
    assert_eq!(row["dimension_vector"], json!([1, 2, 1]));
    assert_eq!(row["violations"], json!([]));
    assert_eq!(row["simple"], json!(true));
    assert_eq!(row["associated_rank"], json!(2));

    std::fs::write(&beta, "0 0 0\n0 0 0\n").unwrap();
    let v = json_of(&["moduli", "--m", "3", "--n", "3", "--alpha", a, "--beta", b, "--json"]);
    assert_eq!(v["rows"][0]["simple"], json!(false));

    std::fs::write(&beta, "1 2\n").unwrap();
    assert_eq!(detsing(&["moduli", "--m", "3", "--n", "3", "--alpha", a, "--beta", b]).status.code(), Some(2));
    std::fs::write(&beta, "1 x 0\n0 1 0\n").unwrap();
    assert_eq!(detsing(&["moduli", "--m", "3", "--n", "3", "--alpha", a, "--beta", b]).status.code(), Some(2));
    let missing = dir.path().join("missing.txt");
    assert_eq!(detsing(&["moduli", "--m", "3", "--n", "3", "--alpha", missing.to_str().unwrap(), "--beta", b]).status.code(), Some(2));
}

#[test]
fn out_flag_writes_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("table.json");
    let out = detsing(&["cohomology", "--m", "3", "--a", "2", "--b", "2", "--c", "1", "--json", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["rank"], json!(3));
}
