//! End-to-end runs of the binary against the shipped spec files.

use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn spec_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../specs")
}

fn spec(name: &str) -> String {
    spec_dir().join(name).to_string_lossy().into_owned()
}

fn freeprod(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_freeprod"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_json(out: &Output) -> Value {
    let text = String::from_utf8_lossy(&out.stdout);
    serde_json::from_str(text.lines().next().expect("one line of output"))
        .unwrap_or_else(|e| panic!("not JSON: {e}\n{text}"))
}

fn stdout_lines(out: &Output) -> Vec<Value> {
    String::from_utf8_lossy(&out.stdout)
        .lines()
        .map(|l| serde_json::from_str(l).expect("JSON line"))
        .collect()
}

#[test]
fn reduce_telescopes_to_identity() {
    let out = freeprod(&["reduce", "--spec", &spec("z3z2.json"), "--word", "x y y x^2"]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["reduced"], "");
    assert_eq!(v["length"], 0);
}

#[test]
fn reduce_reports_partial_cascades() {
    let out = freeprod(&["reduce", "--spec", &spec("z3z2.json"), "--word", "x y y x^2 x"]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["reduced"], "x");
    assert_eq!(v["length"], 1);
}

#[test]
fn sc2_rejects_the_sixth_power_word() {
    let out = freeprod(&["sc2", "--spec", &spec("z3z2.json"), "--word", "(x y)^3"]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["member"], false);
}

#[test]
fn sc2_expectation_mismatch_exits_one() {
    let out = freeprod(&[
        "sc2",
        "--spec",
        &spec("z3z2.json"),
        "--word",
        "(x y)^3",
        "--expect",
        "true",
    ]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn sc2_member_carries_witness_and_factors() {
    let out = freeprod(&[
        "sc2",
        "--spec",
        &spec("z3z2.json"),
        "--word",
        "y x y x y x^2",
        "--expect",
        "true",
    ]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["member"], true);
    assert_eq!(v["witness"]["form"], "simple");
    assert_eq!(v["factors"][0], "y x y");
    assert_eq!(v["factors"][1], "x y x^2");
}

#[test]
fn classify_reports_the_full_record() {
    let out = freeprod(&[
        "classify",
        "--spec",
        &spec("z3z2.json"),
        "--word",
        "x y x^2",
        "--expect-sc",
        "true",
    ]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["length"], 3);
    assert_eq!(v["conjugator"], "x");
    assert_eq!(v["core"], "y");
    assert_eq!(v["in_s_complement"], true);
    assert_eq!(v["torsion_order"], 2);
    assert_eq!(v["in_f_tilde"], false);
    assert_eq!(v["witness_form"], "trivial");
    assert_eq!(v["type"][0], 0);
    assert_eq!(v["type"][1], 0);
}

#[test]
fn power_uses_the_core_shortcut() {
    let out = freeprod(&[
        "power",
        "--spec",
        &spec("z3z2.json"),
        "--word",
        "x y x",
        "-n",
        "2",
    ]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["result"], "x y x^2 y x");
    assert_eq!(v["length"], 5);
}

#[test]
fn enumerate_lists_the_dihedral_ball() {
    let out = freeprod(&["enumerate", "--spec", &spec("z2z2.json"), "--max-len", "2"]);
    assert!(out.status.success());
    let words: Vec<String> = stdout_lines(&out)
        .iter()
        .map(|v| v["word"].as_str().unwrap().to_string())
        .collect();
    assert_eq!(words, vec!["", "x", "y", "x y", "y x"]);
}

#[test]
fn verify_passes_and_is_scriptable() {
    let out = freeprod(&[
        "verify",
        "--spec",
        &spec("z3z2.json"),
        "--lemma",
        "2.3",
        "--max-len",
        "5",
        "--probes",
        "4",
        "--seed",
        "7",
    ]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stdout));
    let v = stdout_json(&out);
    assert_eq!(v["pass"], true);
    assert_eq!(v["lemma"], "2.3");
    assert!(v["instances"].as_u64().unwrap() > 0);
    assert!(v["notes"][0].as_str().unwrap().contains("seed 7"));
}

#[test]
fn verify_unknown_lemma_exits_two() {
    let out = freeprod(&[
        "verify",
        "--spec",
        &spec("z3z2.json"),
        "--lemma",
        "9.9",
        "--max-len",
        "4",
    ]);
    assert_eq!(out.status.code(), Some(2));
    let v = stdout_json(&out);
    assert_eq!(v["error"]["kind"], "unknown-lemma");
}

#[test]
fn parse_errors_carry_positions() {
    let out = freeprod(&["reduce", "--spec", &spec("z3z2.json"), "--word", "x ("]);
    assert_eq!(out.status.code(), Some(2));
    let v = stdout_json(&out);
    assert_eq!(v["error"]["kind"], "parse");
    assert_eq!(v["error"]["position"], 2);
}

#[test]
fn missing_spec_is_a_usage_error() {
    let out = freeprod(&["reduce", "--word", "x"]);
    assert_eq!(out.status.code(), Some(2));
    let v = stdout_json(&out);
    assert_eq!(v["error"]["kind"], "usage");
}

#[test]
fn spec_dir_env_resolves_relative_paths() {
    let out = Command::new(env!("CARGO_BIN_EXE_freeprod"))
        .args(["reduce", "--spec", "z3z2.json", "--word", "x"])
        .env("FREEPROD_SPEC_DIR", spec_dir())
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stdout));
}

#[test]
fn simulate_emits_the_ledger() {
    let out = freeprod(&[
        "simulate",
        "--spec",
        &spec("z3z2.json"),
        "--schedule",
        "dudley",
        "--gamma",
        "(x y)^3",
        "--depth",
        "3",
    ]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stdout));
    let v = stdout_json(&out);
    assert_eq!(v["pass"], true);
    assert_eq!(v["depth"], 3);
    assert_eq!(v["rates"][0], 7);
    assert_eq!(v["final_bound"]["target"], 2);
    assert_eq!(v["final_bound"]["met"], true);
    assert_eq!(v["levels"].as_array().unwrap().len(), 3);
}

#[test]
fn simulate_budget_exhaustion_exits_three() {
    let out = freeprod(&[
        "simulate",
        "--spec",
        &spec("z3z2.json"),
        "--schedule",
        "dudley",
        "--gamma",
        "(x y)^3",
        "--depth",
        "6",
        "--budget",
        "1000",
    ]);
    assert_eq!(out.status.code(), Some(3));
    let v = stdout_json(&out);
    assert_eq!(v["error"]["kind"], "resource");
}

#[test]
fn table_specs_work_end_to_end() {
    let out = freeprod(&[
        "classify",
        "--spec",
        &spec("s3z2.json"),
        "--word",
        "r y r^2 s",
        "--expect-sc",
        "false",
    ]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stdout));
    let v = stdout_json(&out);
    assert_eq!(v["in_s_complement"], false);
}

#[test]
fn infinite_cyclic_specs_work_end_to_end() {
    let out = freeprod(&[
        "power",
        "--spec",
        &spec("f2.json"),
        "--word",
        "a b a^-1",
        "-n",
        "3",
    ]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["result"], "a b^3 a^-1");
    assert_eq!(v["length"], 3);
}
