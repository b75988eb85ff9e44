use std::process::Command;

use cluster_tilt::cli::{verify, Check, Status, VerifyOptions};
use cluster_tilt::root_system::DynkinType;
use cluster_tilt::tilting::checks::Context;
use cluster_tilt::tilting::example::find_d5_example;
use serde_json::Value;

fn bin(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_cluster-tilt"))
        .args(args)
        .output()
        .unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn verify_a3_all_passes() {
    let (code, out, _) = bin(&["verify", "--type", "A3", "--checks", "all"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("overall PASS"));
    for c in Check::ALL {
        assert!(out.contains(c.name()));
    }
}

#[test]
fn verify_a1_sections_are_empty() {
    let (code, out, _) = bin(&["verify", "--type", "A1", "--format", "json"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    let checks = v["checks"].as_array().unwrap();
    let get = |name: &str| checks.iter().find(|c| c["check"] == name).unwrap();
    assert_eq!(get("relations")["checked"], 0);
    assert_eq!(get("winding")["checked"], 0);
    assert_eq!(get("appendix")["summary"]["arrows"], 0);
    assert_eq!(get("appendix")["summary"]["profiles"], serde_json::json!({}));
}

#[test]
fn verify_d5_example_cluster() {
    let ctx = Context::new(DynkinType::d(5), Default::default(), Default::default()).unwrap();
    let ex = find_d5_example(&ctx).unwrap();
    let id = ex.cluster.to_string();
    let (code, out, _) = bin(&[
        "verify", "--type", "D5", "--checks", "denominators", "--cluster", &id, "--format", "json",
    ]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    let den = &v["checks"][0];
    assert_eq!(den["status"], "pass");
    assert_eq!(den["summary"]["d5_example"]["d"], serde_json::json!([1, 1, 1, 1, 0]));
    assert_eq!(den["summary"]["d5_example"]["denominator"], serde_json::json!([1, 1, 1, 1, 0]));
}

#[test]
fn unknown_check_is_an_error() {
    let (code, _, err) = bin(&["verify", "--type", "A2", "--checks", "quivers,nonsense"]);
    assert_eq!(code, 2);
    assert!(err.contains("unknown check nonsense"));
}

#[test]
fn large_types_need_opt_in() {
    let (code, _, err) = bin(&["clusters", "--type", "E7"]);
    assert_eq!(code, 2);
    assert!(err.contains("E7"));
}

#[test]
fn convention_flip_fails_quivers() {
    let (code, out, _) = bin(&["verify", "--type", "A2", "--checks", "quivers", "--convention-flip"]);
    assert_eq!(code, 1);
    assert!(out.contains("FAIL"));
}

#[test]
fn export_a2_atlas() {
    let dir = std::env::temp_dir().join(format!("cluster-tilt-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("atlas.json");
    let (code, _, _) = bin(&["clusters", "--type", "A2", "--out", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["clusters"].as_array().unwrap().len(), 5);
    assert_eq!(v["variables"].as_array().unwrap().len(), 5);
    let (_, dot, _) = bin(&["export", "atlas", "--type", "A2", "--format", "dot"]);
    assert_eq!(dot.matches(" -- ").count(), 5);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn export_initial_quiver_dot() {
    for (t, n) in [("A4", 4), ("D5", 5), ("E6", 6)] {
        let (code, dot, _) = bin(&["export", "quiver", "--type", t, "--format", "dot"]);
        assert_eq!(code, 0);
        assert!(dot.starts_with("digraph"));
        assert_eq!(dot.matches("[label=").count(), n);
        assert_eq!(dot.matches(" -> ").count(), n - 1);
    }
}

#[test]
fn export_a3_homtable() {
    let (code, out, _) = bin(&["export", "homtable", "--type", "A3"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["entries"].as_array().unwrap().len(), 81);
    let (code, _, _) = bin(&["export", "homtable", "--type", "A3", "--format", "dot"]);
    assert_eq!(code, 2);
}

#[test]
fn reports_are_reproducible() {
    let opts = VerifyOptions::default();
    let a = verify(DynkinType::d(4), &opts).unwrap();
    let b = verify(DynkinType::d(4), &opts).unwrap();
    assert_eq!(a.to_json_without_timings(), b.to_json_without_timings());
    assert!(a.checks.iter().all(|c| c.status == Status::Pass));
}
