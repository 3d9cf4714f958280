use std::process::Command;

use serde_json::Value;

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("abelcanon").chain(args.iter().copied());
    let code = abelcanon_cli::run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn json(args: &[&str]) -> (i32, Value) {
    let (code, out, _) = run(args);
    (
        code,
        serde_json::from_str(&out).unwrap_or_else(|e| panic!("{args:?}: {e}\n{out}")),
    )
}

#[test]
fn canon_reports_user_and_primary_coordinates() {
    let (code, v) = json(&["canon", "--group", "Z8xZ8", "--element", "2,4"]);
    assert_eq!(code, 0);
    assert_eq!(v["order"], 4);
    assert_eq!(v["canonical"]["user"], serde_json::json!([2, 0]));
    assert_eq!(v["canonical"]["conforming"], true);
    assert!(v.get("trace").is_none());
}

#[test]
fn canon_trace_lists_steps() {
    let (code, v) = json(&["canon", "--group", "Z2xZ8", "--element", "1,6", "--trace"]);
    assert_eq!(code, 0);
    let steps = v["trace"].as_array().unwrap();
    assert!(!steps.is_empty());
    for step in steps {
        assert!(step["kind"].is_string());
        assert!(step.get("before").is_some() && step.get("after").is_some());
    }
}

#[test]
fn canon_accepts_negative_free_coordinates() {
    let (code, v) = json(&["canon", "--group", "Z4xZ", "--element", "1,-6"]);
    assert_eq!(code, 0);
    assert_eq!(v["canonical"]["d"], 6);
    assert_eq!(v["order"], "infinite");
}

#[test]
fn equiv_exit_code_matches_answer() {
    let (code, v) = json(&[
        "equiv",
        "--group",
        "Z8xZ2",
        "--element",
        "2,1",
        "--element",
        "6,1",
    ]);
    assert_eq!((code, &v["equivalent"]), (0, &Value::Bool(true)));
    let (code, v) = json(&[
        "equiv",
        "--group",
        "Z8xZ2",
        "--element",
        "2,0",
        "--element",
        "4,0",
    ]);
    assert_eq!((code, &v["equivalent"]), (1, &Value::Bool(false)));
}

#[test]
fn equiv_needs_two_elements() {
    let (code, _, err) = run(&["equiv", "--group", "Z8", "--element", "1"]);
    assert_eq!(code, 2);
    assert!(err.contains("exactly two"));
}

#[test]
fn count_detail_splits_by_nonzero_terms() {
    let (code, v) = json(&["count", "--group", "Z2xZ4xZ16", "--detail"]);
    assert_eq!(code, 0);
    assert_eq!(v["total"], 12);
    let hist: Vec<u64> = v["per_prime"][0]["by_nonzero_terms"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| x.as_u64().unwrap())
        .collect();
    assert_eq!(hist, vec![1, 7, 4, 0]);
}

#[test]
fn count_of_infinite_group_is_a_domain_error() {
    let (code, v) = json(&["count", "--group", "Z4xZ"]);
    assert_eq!(code, 3);
    assert_eq!(v["error"], "InfiniteClasses");
}

#[test]
fn enumerate_lists_every_class() {
    let (code, v) = json(&["enumerate", "--group", "Z2xZ8"]);
    assert_eq!(code, 0);
    let (_, count) = json(&["count", "--group", "Z2xZ8"]);
    let listed = v.as_array().unwrap();
    assert!(listed.iter().all(|c| c["conforming"] == true));
    assert_eq!(listed.len() as u64, count["total"].as_u64().unwrap());
}

#[test]
fn orbits_and_verify_agree_with_count() {
    let (code, v) = json(&["verify", "--group", "Z4xZ2xZ9"]);
    assert_eq!(code, 0, "{v}");
    let (code, _) = json(&["orbits", "--group", "Z4xZ2xZ9"]);
    assert_eq!(code, 0);
}

#[test]
fn oracle_cap_is_a_domain_error() {
    let (code, v) = json(&["orbits", "--group", "Z64xZ64", "--max-order", "100"]);
    assert_eq!(code, 3);
    assert_eq!(v["error"], "CapExceeded");
}

#[test]
fn max_order_is_read_from_the_environment() {
    let output = Command::new(env!("CARGO_BIN_EXE_abelcanon"))
        .args(["verify", "--group", "Z16xZ16"])
        .env("ABELCANON_MAX_ORDER", "64")
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(3));
    let output = Command::new(env!("CARGO_BIN_EXE_abelcanon"))
        .args(["verify", "--group", "Z16xZ16"])
        .env("ABELCANON_MAX_ORDER", "256")
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(0));
}

#[test]
fn info_shows_primary_decomposition() {
    let (code, v) = json(&["info", "--group", "Z12xZ8xZ"]);
    assert_eq!(code, 0);
    assert_eq!(v["free_rank"], 1);
    let primes: Vec<u64> = v["primes"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["p"].as_u64().unwrap())
        .collect();
    assert_eq!(primes, vec![2, 3]);
}

#[test]
fn input_errors_exit_2_and_name_the_problem() {
    let (code, v) = json(&["canon", "--group", "Z0", "--element", "0"]);
    assert_eq!(code, 2);
    assert_eq!(v["error"], "ZeroModulus");
    let (code, v) = json(&["canon", "--group", "Z4xZ4", "--element", "1,y"]);
    assert_eq!(code, 2);
    assert_eq!(v["error"], "BadCoordinate");
    assert!(v["message"].as_str().unwrap().contains("coordinate 1"));
    let (code, _, _) = run(&["frobnicate"]);
    assert_eq!(code, 2);
}

#[test]
fn output_is_byte_stable() {
    for args in [
        &[
            "canon",
            "--group",
            "Z2xZ4xZ16xZ9",
            "--element",
            "1,3,6,4",
            "--trace",
        ][..],
        &["count", "--group", "Z8^3xZ27", "--detail"],
        &["enumerate", "--group", "Z4xZ8"],
        &["--format", "text", "info", "--group", "Z72xZ"],
    ] {
        assert_eq!(run(args), run(args), "{args:?}");
    }
}

#[test]
fn text_format_is_plain() {
    let (code, out, _) = run(&["--format", "text", "count", "--group", "Z2xZ8"]);
    assert_eq!(code, 0);
    assert!(!out.trim_start().starts_with('{'));
    assert!(out.contains('6'));
}
