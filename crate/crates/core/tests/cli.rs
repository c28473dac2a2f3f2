use std::process::{Command, Output};

use serde_json::Value;
use torus_git::report::ReportDocument;

fn bin(args: &[&str], env: &[(&str, &str)]) -> Output {
    let mut c = Command::new(env!("CARGO_BIN_EXE_torus-git"));
    c.args(args).env_remove("TORUS_GIT_MAX_WEYL");
    for (k, v) in env {
        c.env(k, v);
    }
    c.output().expect("binary runs")
}

fn run(args: &[&str]) -> (i32, String) {
    let o = bin(args, &[]);
    (
        o.status.code().unwrap(),
        String::from_utf8(o.stdout).unwrap(),
    )
}

fn schema() -> jsonschema::JSONSchema {
    let text = std::fs::read_to_string(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/schema/report.schema.json"
    ))
    .unwrap();
    let v: Value = serde_json::from_str(&text).unwrap();
    jsonschema::JSONSchema::compile(&v).expect("schema compiles")
}

fn validated(args: &[&str], expected_code: i32) -> Value {
    let (code, out) = run(args);
    assert_eq!(code, expected_code, "{args:?}\n{out}");
    let v: Value = serde_json::from_str(&out).unwrap();
    let s = schema();
    if let Err(errors) = s.validate(&v) {
        let msgs: Vec<String> = errors
            .map(|e| format!("{e} at {}", e.instance_path))
            .collect();
        panic!("{args:?} fails schema: {msgs:?}");
    }
    let doc: ReportDocument = serde_json::from_value(v.clone()).unwrap();
    assert_eq!(serde_json::to_value(&doc).unwrap(), v, "round trip");
    v
}

#[test]
fn roots_reports() {
    let v = validated(&["roots", "--type", "A", "--rank", "3"], 0);
    assert_eq!(v["sections"][0]["data"]["positive_root_count"], 6);
    assert_eq!(v["sections"][0]["data"]["cartan_determinant"], 4);
    let v = validated(&["roots", "--type", "G", "--rank", "2"], 0);
    assert_eq!(v["sections"][0]["data"]["positive_root_count"], 6);
    assert_eq!(run(&["roots", "--type", "A", "--rank", "0"]).0, 2);
    assert_eq!(run(&["roots", "--type", "Q", "--rank", "3"]).0, 2);
    assert_eq!(run(&["roots", "--type", "A"]).0, 2);
}

#[test]
fn find_chi_reports() {
    let v = validated(
        &["find-chi", "--type", "A", "--rank", "3", "--bound", "12"],
        0,
    );
    let found = v["sections"][0]["data"]["found"].as_array().unwrap();
    assert!(!found.is_empty());
    for f in found {
        assert_eq!(f["pairings_nonzero"], true);
    }
    let v = validated(
        &["find-chi", "--type", "A", "--rank", "2", "--bound", "30"],
        0,
    );
    assert_eq!(v["sections"][0]["data"]["count"], 0);
    assert!(v["sections"][0]["data"]["note"]
        .as_str()
        .unwrap()
        .contains("excluded"));
}

#[test]
fn check_chi_both_bases() {
    let a = validated(
        &[
            "check-chi",
            "--type",
            "A",
            "--rank",
            "3",
            "--chi-omega",
            "3,3,1",
        ],
        0,
    );
    let b = validated(
        &[
            "check-chi",
            "--type",
            "A",
            "--rank",
            "3",
            "--chi-alpha",
            "4,5,3",
        ],
        0,
    );
    assert_eq!(a, b);
    assert_eq!(a["input"]["chi"]["omega"], serde_json::json!([3, 3, 1]));
    assert_eq!(
        a["input"]["chi"]["alpha"],
        serde_json::json!(["4", "5", "3"])
    );
    let c = validated(
        &[
            "check-chi",
            "--type",
            "A",
            "--rank",
            "3",
            "--chi-omega",
            "1,0,0",
        ],
        1,
    );
    assert_eq!(
        c["input"]["chi"]["alpha"],
        serde_json::json!(["3/4", "1/2", "1/4"])
    );
    let d = validated(
        &[
            "check-chi",
            "--type",
            "A",
            "--rank",
            "3",
            "--chi-alpha",
            "3/4,1/2,1/4",
        ],
        1,
    );
    assert_eq!(d["input"]["chi"]["omega"], serde_json::json!([1, 0, 0]));
    assert_eq!(
        run(&[
            "check-chi",
            "--type",
            "A",
            "--rank",
            "3",
            "--chi-omega",
            "3,x,1"
        ])
        .0,
        2
    );
    assert_eq!(
        run(&[
            "check-chi",
            "--type",
            "A",
            "--rank",
            "3",
            "--chi-omega",
            "3,3"
        ])
        .0,
        2
    );
    assert_eq!(
        run(&[
            "check-chi",
            "--type",
            "A",
            "--rank",
            "3",
            "--chi-alpha",
            "1/2,0,0"
        ])
        .0,
        2
    );
    assert_eq!(run(&["check-chi", "--type", "A", "--rank", "3"]).0, 2);
}

#[test]
fn verify_exit_codes() {
    let v = validated(
        &[
            "verify",
            "--type",
            "A",
            "--rank",
            "3",
            "--chi-omega",
            "3,3,1",
            "--scope",
            "all",
        ],
        0,
    );
    assert_eq!(v["outcome"], "pass");
    let v = validated(
        &[
            "verify",
            "--type",
            "A",
            "--rank",
            "3",
            "--chi-omega",
            "2,2,2",
            "--scope",
            "flag",
        ],
        1,
    );
    let flag = v["sections"]
        .as_array()
        .unwrap()
        .iter()
        .find(|s| s["name"] == "flag")
        .unwrap();
    let ss = flag["checks"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["name"] == "semistable_is_stable")
        .unwrap();
    assert_eq!(ss["status"], "machine_checked_fail");
    let v = validated(
        &[
            "verify",
            "--type",
            "B",
            "--rank",
            "3",
            "--chi-omega",
            "2,1,2",
            "--scope",
            "wonderful",
        ],
        0,
    );
    let text = v.to_string();
    assert!(text.contains("out_of_hypothesis"));
    assert!(text.contains("theorem stated for PSL(n+1) only"));
    validated(
        &[
            "verify-flag",
            "--type",
            "A",
            "--rank",
            "3",
            "--chi-omega",
            "3,3,1",
        ],
        0,
    );
    validated(
        &[
            "verify",
            "--type",
            "A",
            "--rank",
            "3",
            "--chi-omega",
            "1,0,0",
        ],
        1,
    );
    validated(
        &[
            "verify",
            "--type",
            "A",
            "--rank",
            "3",
            "--chi-omega",
            "-1,2,0",
            "--scope",
            "flag",
        ],
        1,
    );
    assert_eq!(
        run(&[
            "verify",
            "--type",
            "A",
            "--rank",
            "3",
            "--chi-omega",
            "3,3,1",
            "--scope",
            "bogus"
        ])
        .0,
        2
    );
}

#[test]
fn verify_wonderful_scope() {
    let v = validated(
        &[
            "verify-wonderful",
            "--type",
            "A",
            "--rank",
            "3",
            "--chi-omega",
            "3,3,1",
        ],
        0,
    );
    let w = v["sections"]
        .as_array()
        .unwrap()
        .iter()
        .find(|s| s["name"] == "wonderful")
        .unwrap();
    assert_eq!(w["data"]["min_unstable_codim_in_Z"], 2);
    assert_eq!(w["data"]["derived_codim_bound_in_X"], 3);
    assert_eq!(w["data"]["picard_rank_Y"], 6);
    let asserted = w["checks"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["status"] == "paper_asserted")
        .count();
    assert_eq!(asserted, 2);
    let o = bin(
        &[
            "verify-wonderful",
            "--type",
            "A",
            "--rank",
            "2",
            "--chi-omega",
            "2,2",
        ],
        &[],
    );
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("excluded"));
}

#[test]
fn picard_reports() {
    for (n, y) in [("3", 6), ("4", 8)] {
        let v = validated(&["picard", "--type", "A", "--rank", n], 0);
        assert_eq!(v["sections"][0]["data"]["picard_rank_Y"], y);
    }
    let v = validated(&["picard", "--type", "A", "--rank", "2"], 0);
    assert!(v.to_string().contains("outside theorem hypotheses"));
}

#[test]
fn mu_and_cells() {
    let v = validated(
        &[
            "mu",
            "--type",
            "A",
            "--rank",
            "3",
            "--chi-omega",
            "3,3,1",
            "--word",
            "1,2",
        ],
        0,
    );
    assert_eq!(v["sections"][0]["data"]["word"], serde_json::json!([1, 2]));
    let v = validated(
        &[
            "mu",
            "--type",
            "A",
            "--rank",
            "3",
            "--chi-omega",
            "3,3,1",
            "--lambda",
            "-1,0,0",
        ],
        0,
    );
    // identity cell: μ({χ}, -λ₁) = ⟨χ, λ₁⟩ = first α-coordinate
    assert_eq!(v["sections"][0]["data"]["values"][0]["mu"], "4");
    assert_eq!(
        run(&[
            "mu",
            "--type",
            "A",
            "--rank",
            "3",
            "--chi-omega",
            "3,3,1",
            "--word",
            "0"
        ])
        .0,
        2
    );
    let v = validated(
        &[
            "classify-cells",
            "--type",
            "A",
            "--rank",
            "3",
            "--chi-omega",
            "3,3,1",
        ],
        0,
    );
    assert_eq!(
        v["sections"][0]["data"]["cells"].as_array().unwrap().len(),
        24
    );
}

#[test]
fn tsv_matches_json_statuses() {
    let args = [
        "verify",
        "--type",
        "A",
        "--rank",
        "3",
        "--chi-omega",
        "2,2,2",
    ];
    let (c1, json) = run(&args);
    let mut tsv_args = args.to_vec();
    tsv_args.extend(["--format", "tsv"]);
    let (c2, tsv) = run(&tsv_args);
    assert_eq!(c1, c2);
    let v: Value = serde_json::from_str(&json).unwrap();
    let mut from_json = Vec::new();
    for s in v["sections"].as_array().unwrap() {
        for c in s["checks"].as_array().unwrap() {
            from_json.push(format!(
                "{}\t{}\t{}",
                s["name"].as_str().unwrap(),
                c["name"].as_str().unwrap(),
                c["status"].as_str().unwrap()
            ));
        }
    }
    let from_tsv: Vec<String> = tsv
        .lines()
        .skip(1)
        .filter(|l| !l.contains("\tdata\t") && !l.starts_with("report\t"))
        .map(|l| l.split('\t').take(3).collect::<Vec<_>>().join("\t"))
        .collect();
    assert_eq!(from_json, from_tsv);
}

#[test]
fn output_is_thread_count_independent() {
    let args = [
        "verify",
        "--type",
        "A",
        "--rank",
        "3",
        "--chi-omega",
        "3,3,1",
    ];
    let one = bin(&args, &[("RAYON_NUM_THREADS", "1")]);
    let many = bin(&args, &[("RAYON_NUM_THREADS", "4")]);
    assert_eq!(one.stdout, many.stdout);
}

#[test]
fn weyl_bound_env() {
    let o = bin(
        &["find-chi", "--type", "A", "--rank", "3"],
        &[("TORUS_GIT_MAX_WEYL", "10")],
    );
    assert_eq!(o.status.code(), Some(2));
    let o = bin(
        &["find-chi", "--type", "A", "--rank", "3"],
        &[("TORUS_GIT_MAX_WEYL", "abc")],
    );
    assert_eq!(o.status.code(), Some(2));
    let o = bin(
        &[
            "check-chi",
            "--type",
            "A",
            "--rank",
            "3",
            "--chi-omega",
            "3,3,1",
        ],
        &[("TORUS_GIT_MAX_WEYL", "24")],
    );
    assert_eq!(o.status.code(), Some(0));
    let o = bin(
        &[
            "check-chi",
            "--type",
            "E",
            "--rank",
            "8",
            "--chi-omega",
            "1,1,1,1,1,1,1,1",
        ],
        &[],
    );
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn in_process_run_matches_binary() {
    let args = [
        "torus-git",
        "check-chi",
        "--type",
        "A",
        "--rank",
        "3",
        "--chi-omega",
        "3,3,1",
    ];
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = torus_git::cli::run(args, &mut out, &mut err);
    assert_eq!(code, 0);
    assert_eq!(out, bin(&args[1..], &[]).stdout);
}
