use std::path::PathBuf;
use std::process::Command;

use serde_json::Value;

fn fixture(name: &str) -> String {
    let mut p = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    p.push("../../fixtures");
    p.push(name);
    p.to_string_lossy().into_owned()
}

fn run(args: &[&str]) -> (i32, String, String) {
    run_env(args, None)
}

fn run_env(args: &[&str], budget: Option<&str>) -> (i32, String, String) {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_chromabij"));
    cmd.args(args).env_remove("CHROMABIJ_BUDGET");
    if let Some(b) = budget {
        cmd.env("CHROMABIJ_BUDGET", b);
    }
    let out = cmd.output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap().trim().to_string(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn json(args: &[&str]) -> Value {
    let (code, out, err) = run(args);
    assert_eq!(code, 0, "{args:?}: {err}");
    serde_json::from_str(&out).unwrap()
}

#[test]
fn chi_outputs() {
    let fig1 = fixture("fig1.el");
    assert_eq!(run(&["chi", "--graph", &fig1]).1, r#"{"coeffs":[0,-2,5,-4,1]}"#);
    assert_eq!(run(&["chi", "--graph", &fig1, "--at", "4"]).1, "72");
    assert_eq!(run(&["chi", "--graph", &fig1, "--at", "-1"]).1, "12");
    for m in ["count", "subgraphs", "nbc", "delcon"] {
        assert_eq!(run(&["chi", "-g", "fig1", "--method", m]).1, r#"{"coeffs":[0,-2,5,-4,1]}"#);
    }
    assert_eq!(run(&["chi", "-g", &fixture("k2.g6")]).1, r#"{"coeffs":[0,-1,1]}"#);
    assert_eq!(run(&["--pretty", "chi", "-g", "fig1"]).1, "chi(t) = t^4 - 4t^3 + 5t^2 - 2t");
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["csf", "-g", "butterfly"][..],
        &["verify", "-g", "net", "--tmax", "2", "--mumax", "2"],
        &["acyclic", "-g", "kite", "--list"],
    ] {
        assert_eq!(run(args).1, run(args).1);
    }
}

#[test]
fn csf_outputs() {
    let x = json(&["csf", "-g", "fig1"]);
    let terms = x["terms"].as_array().unwrap();
    assert_eq!(terms.len(), 5);
    assert_eq!(terms[0]["partition"], serde_json::json!([4]));
    assert_eq!(terms[0]["coeff"], -2);
    assert_eq!(terms[4]["partition"], serde_json::json!([1, 1, 1, 1]));
    assert_eq!(json(&["csf", "-g", "fig1", "--method", "subgraphs"]), x);

    let w = json(&["csf", "-g", "fig1", "--omega"]);
    assert_eq!(w["terms"][0]["coeff"], 2);

    let m = json(&["csf", "-g", &fixture("k2.g6"), "--expand", "3"]);
    assert_eq!(m["vars"], 3);
    assert_eq!(m["terms"].as_array().unwrap().len(), 3);
}

#[test]
fn acyclic_and_compat() {
    assert_eq!(json(&["acyclic", "-g", "fig1"])["count"], 12);
    let listed = json(&["acyclic", "-g", "fig1", "--list"]);
    assert_eq!(listed["orientations"].as_array().unwrap().len(), 12);
    let c = json(&["compat", "-g", "fig1", "-t", "2", "--check"]);
    assert_eq!(c["count"], 72);
    assert_eq!(c["agrees"], true);
    assert_eq!(json(&["compat", "-g", "fig1", "-t", "1"])["count"], 12);
}

#[test]
fn bijection_outputs() {
    let p = json(&["bijection", "-g", "fig1", "--phi", "++++"]);
    assert_eq!(p["nbc_subset"], serde_json::json!([2, 3, 4]));
    let q = json(&["bijection", "-g", "fig1", "--psi", "2,3,4"]);
    assert_eq!(q["orientation"], "++++");
    let t = json(&["bijection", "-g", "fig1", "--psi", "2,4", "--trace"]);
    let stages = t["stages"].as_array().unwrap();
    assert_eq!(stages.len(), 5);
    assert_eq!(stages[0]["edges"], ".|.|");
    assert_eq!(stages[4]["edges"], t["orientation"]);
    let e = json(&["bijection", "-g", &fixture("k2.g6"), "--psi", ""]);
    assert_eq!(e["orientation"], "-");

    let colored = json(&["bijection", "-g", "fig1", "--phi", "++++", "--coloring", "1,1,2,2"]);
    assert_eq!(colored["nbc_subset"], serde_json::json!([2]));
    let back = json(&["bijection", "-g", "fig1", "--psi", "2", "--coloring", "1,1,2,2"]);
    assert_eq!(back["orientation"], "++++");
}

#[test]
fn verify_and_trees() {
    let r = json(&["verify", "-g", "fig1"]);
    assert_eq!(r["totals"]["fail"], 0);
    assert_eq!(r["checks"].as_array().unwrap().len(), 13);

    let cmp = json(&["verify", "-g", "butterfly", "--against", "kite"]);
    assert_eq!(cmp["comparison"]["csf_equal"], true);
    assert_eq!(cmp["certified_non_isomorphic"], true);

    let sweep = json(&["verify", "-n", "3"]);
    assert_eq!(sweep["graphs"], 8);
    assert_eq!(sweep["failed_graphs"].as_array().unwrap().len(), 0);

    let trees = json(&["trees", "-n", "6"]);
    assert_eq!(trees["isomorphism_classes"], 6);
    assert_eq!(trees["collisions"].as_array().unwrap().len(), 0);
}

#[test]
fn bench_counts() {
    let b = json(&["bench", "-g", "fig1", "--reps", "1"]);
    assert_eq!(b["subgraphs"]["visited_subsets"], 16);
    assert_eq!(b["nbc"]["visited_subsets"], 12);
    assert_eq!(b["agree"], true);
    let t = json(&["bench", "-g", &fixture("k2.g6"), "--reps", "1"]);
    assert_eq!(t["forest"], true);
    assert_eq!(t["nbc"]["visited_subsets"], t["subgraphs"]["visited_subsets"]);
}

#[test]
fn exit_codes() {
    // usage
    assert_eq!(run(&["chi"]).0, 2);
    assert_eq!(run(&["bijection", "-g", "fig1"]).0, 2);
    assert_eq!(run(&["verify"]).0, 2);
    // parse errors
    assert_eq!(run(&["chi", "-g", "no-such-file.el"]).0, 2);
    let bad = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("loop.el");
    std::fs::write(&bad, "2 1\n0 0\n").unwrap();
    let (code, _, err) = run(&["chi", "-g", bad.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(err.contains("line 2"), "{err}");
    assert_eq!(run(&["bijection", "-g", "fig1", "--phi", "++"]).0, 2);
    assert_eq!(run(&["bijection", "-g", "fig1", "--psi", "1,2"]).0, 2);
    // budget
    assert_eq!(run_env(&["chi", "-g", "fig1"], Some("10")).0, 3);
    assert_eq!(run_env(&["acyclic", "-g", "butterfly"], Some("32")).0, 3);
    assert_eq!(run_env(&["chi", "-g", "fig1"], Some("lots")).0, 2);
    assert_eq!(run_env(&["chi", "-g", "fig1"], Some("1000")).0, 0);
}
