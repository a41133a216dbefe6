use std::path::PathBuf;
use std::process::{Command, Output};

use treeweights_core::Rational;

fn fixture(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "core", "fixtures", name]
        .iter()
        .collect();
    p.to_string_lossy().into_owned()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_treeweights"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn weights_table_for_kite() {
    let out = run(&["weights", "--graph", &fixture("kite.json"), "--partition", "v1|v2|v3,v4"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.starts_with("partition: [{v1},{v2},{v3,v4}]"));
    for (tree, weight) in [
        ("{l1,l2,l5}", "7/80"),
        ("{l1,l2,l6}", "11/200"),
        ("{l1,l3,l5}", "47/400"),
        ("{l1,l5,l6}", "17/400"),
        ("{l2,l3,l6}", "2/25"),
        ("{l2,l5,l6}", "1/20"),
    ] {
        let line = text.lines().find(|l| l.starts_with(tree)).unwrap();
        assert_eq!(line.split_whitespace().nth(1), Some(weight), "{line}");
    }
    assert!(text.trim_end().ends_with("total: 1/1"));
}

#[test]
fn weights_json_sums_to_one() {
    let out = run(&[
        "weights",
        "--graph",
        &fixture("kite.json"),
        "--partition",
        "v1|v2|v3,v4",
        "--format",
        "json",
        "--breakdown",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["format"], 1);
    let trees = v["trees"].as_array().unwrap();
    assert_eq!(trees.len(), 12);
    let total: Rational = trees
        .iter()
        .map(|t| t["weight"].as_str().unwrap().parse::<Rational>().unwrap())
        .sum();
    assert!(total.is_one());
    let orderings: usize = trees
        .iter()
        .map(|t| t["breakdown"].as_array().unwrap().len())
        .sum();
    assert_eq!(orderings, 54);
}

#[test]
fn csv_output_has_one_row_per_tree() {
    let out = run(&["weights", "--graph", &fixture("triangle.json"), "--partition", "v1|v2,v3", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("tree,weight,decimal,orderings"));
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 5);
    assert!(rows.contains(&"l1 l2,1/3,0.333333,2"));
}

#[test]
fn symmetric_routes_agree() {
    let out = run(&["symmetric", "--graph", &fixture("kite.json")]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.starts_with("sectors: 720"));
    assert!(text.contains("routes agree: yes"));
    assert_eq!(text.matches("11/120").count(), 16);
}

#[test]
fn trivial_partition_is_an_input_error() {
    let out = run(&["weights", "--graph", &fixture("triangle.json"), "--partition", "v1,v2,v3"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("TrivialPartition"));
    assert!(out.stdout.is_empty());
}

#[test]
fn bad_inputs_exit_two() {
    let out = run(&["weights", "--graph", &fixture("triangle.json"), "--partition", "v1|v9,v2,v3"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("UnknownVertex"));

    let out = run(&["trees", "--graph", "/definitely/not/here.json"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("IoError"));
}

#[test]
fn guard_exceeded_exits_four() {
    let out = run(&["symmetric", "--graph", &fixture("kite.json"), "--guard", "5"]);
    assert_eq!(out.status.code(), Some(4));
    assert!(stderr(&out).contains("EnumerationGuardExceeded"));
}

#[test]
fn output_is_byte_identical_across_runs() {
    let args = ["weights", "--graph", &fixture("kite.json"), "--partition", "v2|v1,v3|v4", "--format", "json"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);

    let args = ["psd", "--graph", &fixture("kite.json"), "--seed", "11", "--samples", "4", "--format", "json"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
}

#[test]
fn verify_passes_on_fixtures() {
    for (graph, partition) in [("triangle.json", "v2|v1,v3"), ("kite.json", "v1|v2|v3,v4")] {
        let out = run(&["verify", "--graph", &fixture(graph), "--partition", partition]);
        assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
        assert!(!stdout(&out).contains("FAIL"));
    }
}

#[test]
fn psd_check_passes() {
    let out = run(&[
        "psd",
        "--graph",
        &fixture("kite.json"),
        "--partition",
        "v1|v2|v3,v4",
        "--samples",
        "5",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["passed"], true);
    assert_eq!(v["ordered_trees"], 54);
    assert!(v["min_eigenvalue"].as_f64().unwrap() >= -1e-10);
}

#[test]
fn trees_lists_spanning_trees() {
    let out = run(&["trees", "--graph", &fixture("triangle.json"), "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["count"], 5);
    assert_eq!(v["trees"][0], serde_json::json!(["l1", "l2"]));
}
