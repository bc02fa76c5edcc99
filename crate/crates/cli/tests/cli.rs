use std::path::PathBuf;
use std::process::{Command, Output};

use lspace_cli::corpus::EMBEDDED;
use lspace_cli::json::{form_from_value, rational_from_value};
use lspace_cli::text::parse_form;
use lspace_core::Rational;
use serde_json::Value;

fn lspace(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lspace")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> (Value, i32) {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let out = lspace(&full);
    let v = serde_json::from_slice(&out.stdout)
        .unwrap_or_else(|e| panic!("bad JSON ({e}): {}", String::from_utf8_lossy(&out.stdout)));
    (v, out.status.code().unwrap())
}

fn golden(name: &str) -> String {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name);
    std::fs::read_to_string(path).unwrap()
}

#[test]
fn decide_exit_codes() {
    assert_eq!(lspace(&["decide", "SFS[S2; -1; 1/2, 2/3, 4/5]"]).status.code(), Some(0));
    assert_eq!(lspace(&["decide", "SFS[S2; -2; 2/3, 2/3, 2/3]"]).status.code(), Some(1));
    assert_eq!(lspace(&["decide", "SFS[S2; 0; 1/2, 1/2, 1/2, 1/2]"]).status.code(), Some(2));
    assert_eq!(lspace(&["decide", "SFS[S2; 0; 1/0, 0/0]"]).status.code(), Some(2));
    assert_eq!(lspace(&["decide", "SFS[RP2]"]).status.code(), Some(0));
}

#[test]
fn parse_errors_point_at_the_column() {
    let out = lspace(&["decide", "SFS[S2; -1; 1/2, x]"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("column 18"), "{err}");
    assert!(err.lines().last().unwrap().ends_with('^'));

    let (v, code) = json(&["decide", "SFS[S2; -1; 1/2, x]"]);
    assert_eq!(code, 2);
    assert_eq!(v["error"]["kind"], "Parse");
}

#[test]
fn golden_outputs() {
    let run = |args: &[&str]| String::from_utf8(lspace(args).stdout).unwrap();
    assert_eq!(run(&["--json", "decide", "SFS[S2; -2; 2/3, 2/3, 2/3]"]), golden("decide_dual_witness.json"));
    assert_eq!(run(&["--json", "h1", "SFS[S2; 0; 26/33, -2/7, 1/2]"]), golden("h1_three_fibers.json"));
    assert_eq!(run(&["--json", "--float", "threshold", "--", "-2", "2/3", "2/3"]), golden("threshold_float.json"));
    assert_eq!(run(&["decide", "SFS[S2; -1; 1/7, 1/3, 1/2]"]), golden("decide_witness.txt"));
}

#[test]
fn json_round_trips_exact_values() {
    let src = "SFS[S2; 0; 26/33, -2/7, 1/2, inf]";
    let (v, code) = json(&["normalize", src]);
    assert_eq!(code, 0);
    let decoded = form_from_value(&v["outputs"]["form"]).unwrap();
    assert_eq!(decoded, parse_form(src).unwrap().normalized());

    let (v, _) = json(&["--float", "threshold", "--", "-1", "1/7", "1/3"]);
    let t = rational_from_value(&v["outputs"]["lspace_set"]["t"]).unwrap();
    assert!(t > Rational::zero() && t < Rational::one());
}

#[test]
fn large_integers_stay_exact() {
    let big = "123456789012345678901234567890";
    let (v, _) = json(&["h1", &format!("SFS[S2; {big}]")]);
    assert_eq!(v["outputs"]["h1"].to_string(), big);
}

#[test]
fn text_and_json_carry_the_same_data() {
    let args = ["threshold", "--", "-2", "2/3", "2/3"];
    let text = String::from_utf8(lspace(&args).stdout).unwrap();
    let (v, _) = json(&args);
    assert_eq!(text, lspace_cli::render::render(&v));
}

#[test]
fn timing_only_on_request() {
    let (v, _) = json(&["h1", "SFS[S2; 4; 1/2, 2/3]"]);
    assert!(v.get("timing_ms").is_none());
    let (v, _) = json(&["--timing", "h1", "SFS[S2; 4; 1/2, 2/3]"]);
    assert!(v["timing_ms"].is_number());
}

#[test]
fn family_run_reports_claim() {
    let (v, code) = json(&["family", "run", "unknot", "--params", "m=0,p=3", "--window=-5..5"]);
    assert_eq!(code, 0);
    assert_eq!(v["outputs"]["reports"][0]["non_lspace_n"], serde_json::json!([0]));
    let (_, code) = json(&["family", "run", "unknot", "--params", "q=1"]);
    assert_eq!(code, 2);
    let (_, code) = json(&["family", "run", "nope"]);
    assert_eq!(code, 2);
}

#[test]
fn twist_scan_rejects_bad_matrix() {
    let out = lspace(&[
        "twist-scan",
        "--b",
        "0",
        "--r1",
        "1/2",
        "--r2",
        "1/2",
        "--matrix",
        "1,1,1,1",
        "--m",
        "0",
        "--l",
        "2",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8(out.stderr).unwrap().contains("determinant"));
}

#[test]
fn twist_scan_realizable_checks_homology() {
    let (v, code) = json(&[
        "twist-scan",
        "--b",
        "3",
        "--r1",
        "1/2",
        "--r2",
        "2/3",
        "--matrix",
        "1,0,0,1",
        "--m",
        "6",
        "--l",
        "5",
        "--window=-10..10",
        "--realizable",
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["outputs"]["h1_mismatches"], serde_json::json!([]));
}

#[test]
fn reproduce_embedded_corpus() {
    let (v, code) = json(&["reproduce"]);
    assert_eq!(code, 0, "{v:#}");
    assert_eq!(v["outputs"]["failed"], 0);

    let (v, code) = json(&["reproduce", "--only", "h1-lens"]);
    assert_eq!(code, 0);
    assert_eq!(v["outputs"]["cases"].as_array().unwrap().len(), 1);

    let (_, code) = json(&["reproduce", "--only", "no-such-case"]);
    assert_eq!(code, 2);
}

#[test]
fn reproduce_detects_perturbed_expectation() {
    let mut cases: Value = serde_json::from_str(EMBEDDED).unwrap();
    let target = cases.as_array_mut().unwrap().iter_mut().find(|c| c["name"] == "h1-lens").unwrap();
    target["expect"]["outputs"]["h1"] = serde_json::json!(32);
    let dir = std::env::temp_dir().join(format!("lspace-corpus-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("cases.json");
    std::fs::write(&path, serde_json::to_string(&cases).unwrap()).unwrap();

    let out = lspace(&["reproduce", "--corpus", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("h1-lens"), "{text}");
    assert!(text.contains("expected 32, found 31"), "{text}");
    assert!(text.contains("failed: 1"), "{text}");
    std::fs::remove_dir_all(dir).unwrap();
}
