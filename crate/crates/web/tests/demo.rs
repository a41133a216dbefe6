use serde_json::Value;
use treeweights_web::demo;

fn kite() -> String {
    demo::example_graph("kite").unwrap()
}

#[test]
fn partition_weights_table() {
    let out: Value = serde_json::from_str(&demo::partition_weights(&kite(), "v1|v2|v3,v4").unwrap()).unwrap();
    assert_eq!(out["format"], 1);
    assert_eq!(out["total"], "1/1");
    let trees = out["trees"].as_array().unwrap();
    assert_eq!(trees.len(), 12);
    let t125 = trees
        .iter()
        .find(|t| t["edges"] == serde_json::json!(["l1", "l2", "l5"]))
        .unwrap();
    assert_eq!(t125["weight"], "7/80");
    assert_eq!(t125["breakdown"].as_array().unwrap().len(), 6);
}

#[test]
fn empty_partition_means_singletons() {
    let a = demo::partition_weights(&kite(), "").unwrap();
    let b = demo::partition_weights(&kite(), "v1|v2|v3|v4").unwrap();
    assert_eq!(a, b);
}

#[test]
fn symmetric_routes_agree() {
    let out: Value = serde_json::from_str(&demo::symmetric_weights(&kite(), 10).unwrap()).unwrap();
    assert_eq!(out["sectors"], 720);
    assert_eq!(out["agree"], true);
    let light = out["trees"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|t| t["census"] == "11/120")
        .count();
    assert_eq!(light, 8);
}

#[test]
fn contact_matrix_explorer() {
    let out: Value = serde_json::from_str(
        &demo::contact_matrix(&kite(), "v1|v2|v3,v4", "l1,l2,l5", &[0.3, 0.6, 0.9]).unwrap(),
    )
    .unwrap();
    assert_eq!(out["k"], serde_json::json!([5, 4, 2]));
    assert_eq!(out["weight"], "1/40");
    // (v3, v4): indices (2, 3), entry u3
    assert_eq!(out["contacts"][2][3], serde_json::json!([2, 3]));
    assert_eq!(out["matrix"][2][3], 0.9);
    assert!(out["recursion_max_diff"].as_f64().unwrap() < 1e-12);
    assert!(out["min_eigenvalue"].as_f64().unwrap() >= -1e-10);
}

#[test]
fn errors_carry_codes() {
    let err = demo::contact_matrix(&kite(), "v1|v2|v3,v4", "l6,l1,l2", &[0.5; 3]).unwrap_err();
    assert_eq!(err.code(), "NotAdmissible");
    let err = demo::contact_matrix(&kite(), "v1|v2|v3,v4", "l1,l2,l5", &[0.5]).unwrap_err();
    assert_eq!(err.code(), "BadDimension");
    assert_eq!(demo::example_graph("fig9").unwrap_err().code(), "ParseError");
    assert_eq!(
        demo::symmetric_weights(&kite(), 3).unwrap_err().code(),
        "EnumerationGuardExceeded"
    );
}
