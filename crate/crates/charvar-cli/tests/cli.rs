use std::process::{Command, Output};

use serde_json::{json, Value};

fn charvar(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_charvar"))
        .args(args)
        .env_remove("CH_BUDGET")
        .output()
        .expect("binary runs")
}

fn json_of(out: &Output) -> Value {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn h_text(v: &Value) -> String {
    let num = charvar::exact::poly_from_json(&v["H"]["num"]).unwrap();
    let den = charvar::exact::poly_from_json(&v["H"]["den"]).unwrap();
    assert!(den.is_one());
    num.to_string()
}

#[test]
fn hfun_affine_d4() {
    let v = json_of(&charvar(&[
        "hfun",
        "--multipartition",
        "[1,1];[1,1];[1,1];[1,1]",
        "--g",
        "0",
    ]));
    assert_eq!(h_text(&v), "z^2 + w^2 + 4");
    assert_eq!(v["E_ic"], json!([1, 4, 1]));
    assert_eq!(v["pure"], json!([4, 1]));
    assert_eq!(v["d"], json!(2));
    assert_eq!(v["palindromic"], json!(true));
    assert_eq!(v["symmetric"], json!(true));
}

#[test]
fn hfun_rank_one_genus_one() {
    let v = json_of(&charvar(&["hfun", "--multitype", "[1]", "--g", "1"]));
    assert_eq!(h_text(&v), "z^2 - 2*z*w + w^2");
    assert_eq!(v["E_ic"], json!([1, -2, 1]));
}

#[test]
fn malformed_input_exits_64_with_caret() {
    let out = charvar(&["hfun", "--multitype", "[1][1;[2]"]);
    assert_eq!(out.status.code(), Some(64));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("parse error"), "{err}");
    assert!(err.lines().any(|l| l.trim() == "^"), "{err}");
    assert_eq!(
        charvar(&["hfun", "--multitype", "[1]", "--k", "2"]).status.code(),
        Some(64)
    );
    assert_eq!(
        charvar(&["hfun", "--multitype", "[1][1]", "--N", "1"]).status.code(),
        Some(64)
    );
    assert_eq!(charvar(&["no-such-command"]).status.code(), Some(64));
    let out = charvar(&["count", "--n", "2", "--q", "3", "--classes", "[1]@0[1]@1"]);
    assert_eq!(out.status.code(), Some(64));
}

#[test]
fn verify_suites() {
    let v = json_of(&charvar(&["verify", "--suite", "d4", "--r", "1"]));
    assert_eq!(v["passed"], json!(5));
    assert_eq!(v["failed"], json!(0));
    let v = json_of(&charvar(&["verify", "--suite", "convtheo", "--q", "3", "--n", "2"]));
    assert_eq!(v["failed"], json!(0));
    assert!(v["passed"].as_u64().unwrap() > 50);
    let v = json_of(&charvar(&["verify", "--suite", "logexp", "--seed", "42"]));
    assert_eq!(v["passed"], json!(100));
    assert_eq!(v["failed"], json!(0));
}

#[test]
fn quiver_affine_d4() {
    let v = json_of(&charvar(&[
        "quiver",
        "--multitype",
        "[1][1];[1][1];[1][1];[1][1]",
        "--g",
        "0",
    ]));
    assert_eq!(v["classification"], json!("imaginary_fundamental"));
    assert_eq!(v["d_c"], json!(2));
    assert_eq!(v["is_root"], json!(true));
}

#[test]
fn count_examples() {
    let v = json_of(&charvar(&[
        "count",
        "--n",
        "1",
        "--q",
        "5",
        "--g",
        "1",
        "--classes",
        "[1]@1",
    ]));
    assert_eq!(v["stack_count"], json!(4));
    assert_eq!(v["matches_H"], json!(true));
    // eigenvalue product ≠ 1: no solutions
    let v = json_of(&charvar(&[
        "count",
        "--n",
        "1",
        "--q",
        "3",
        "--g",
        "0",
        "--classes",
        "[1]@2",
    ]));
    assert_eq!(v["raw_count"], json!(0));
    assert_eq!(v["stack_count"], json!(0));
}

#[test]
fn count_budget_exits_3() {
    let out = charvar(&[
        "count",
        "--n",
        "3",
        "--q",
        "3",
        "--classes",
        "[3]@1",
        "--budget",
        "1000",
    ]);
    assert_eq!(out.status.code(), Some(3));
    let out = Command::new(env!("CARGO_BIN_EXE_charvar"))
        .args(["count", "--n", "3", "--q", "3", "--classes", "[3]@1"])
        .env("CH_BUDGET", "1000")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn output_is_deterministic() {
    let args = [
        "verify",
        "--suite",
        "logexp",
        "--seed",
        "7",
        "--count",
        "20",
        "--threads",
        "2",
    ];
    assert_eq!(charvar(&args).stdout, charvar(&args).stdout);
    let args = ["hfun", "--multitype", "[1][1];[1][1];[2];[2]", "--format", "table"];
    assert_eq!(charvar(&args).stdout, charvar(&args).stdout);
}

#[test]
fn kostka_table() {
    let out = charvar(&["kostka", "--n", "2"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text, "lambda\\mu\t[2]\t[1,1]\n[2]\t1\t1\n[1,1]\tq\tt\n");
}
