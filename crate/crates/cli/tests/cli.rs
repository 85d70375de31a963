use std::process::{Command, Output};

use serde_json::Value;

fn rcm(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rcm"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

/// The envelope is the last line of standard output.
fn envelope(out: &Output) -> Value {
    let text = stdout(out);
    let last = text.lines().last().expect("some output");
    let v: Value = serde_json::from_str(last).expect("json");
    assert_eq!(v["schema"], "rcm/1");
    v
}

fn payload_without_timing(out: &Output) -> Value {
    let mut v = envelope(out);
    v.as_object_mut().unwrap().remove("elapsed_ms");
    v
}

#[test]
fn order_examples() {
    for (args, order) in [
        (&["order", "--field", "2^2", "--n", "3"][..], "27"),
        (&["order", "--mod", "6", "--n", "2"], "8"),
        (&["order", "--field", "2^1", "--n", "1"], "1"),
        (&["order", "--mod", "4", "--n", "2"], "8"),
    ] {
        let out = rcm(args);
        assert_eq!(code(&out), 0, "{args:?}");
        let v = envelope(&out);
        assert_eq!(v["command"], "order");
        assert_eq!(v["payload"]["order"], order, "{args:?}");
    }
}

#[test]
fn order_breakdown_multiplies_to_order() {
    let v = envelope(&rcm(&["order", "--field", "3^2", "--n", "12"]));
    let product = v["payload"]["breakdown"]
        .as_array()
        .unwrap()
        .iter()
        .map(|f| f["factor"].as_str().unwrap().parse::<u128>().unwrap())
        .product::<u128>();
    assert_eq!(v["payload"]["order"].as_str().unwrap(), product.to_string());
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["order", "--field", "4", "--n", "3"][..],
        &["order", "--field", "4^1", "--n", "3"],
        &["order", "--field", "2^0", "--n", "3"],
        &["order", "--field", "2^1", "--n", "0"],
        &["order", "--field", "2^1", "--mod", "6", "--n", "2"],
        &["order", "--n", "2"],
        &["verify", "--suite", "bogus"],
        &["frobnicate"],
        &["canonical", "--field", "2^1", "--n", "2", "--column", "1"],
        &["table", "--p-list", "4", "--t-max", "1", "--n-max", "2"],
    ] {
        assert_eq!(code(&rcm(args)), 2, "{args:?}");
    }
    assert_eq!(code(&rcm(&["--help"])), 0);
    assert_eq!(code(&rcm(&["--version"])), 0);
}

#[test]
fn table_csv() {
    let out = rcm(&["table", "--p-list", "2", "--t-max", "1", "--n-max", "4"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "p,t,n,order\n2,1,1,1\n2,1,2,2\n2,1,3,3\n2,1,4,8\n");
}

#[test]
fn table_empty_range_is_header_only() {
    let out = rcm(&["table", "--p-list", "2", "--t-max", "1", "--n-max", "0"]);
    assert_eq!(stdout(&out), "p,t,n,order\n");
    let out = rcm(&["table", "--p-list", "", "--t-max", "3", "--n-max", "3"]);
    assert_eq!(stdout(&out), "p,t,n,order\n");
}

#[test]
fn table_rows_are_sorted() {
    let out = rcm(&["table", "--p-list", "3,2", "--t-max", "2", "--n-max", "2"]);
    let keys: Vec<String> = stdout(&out).lines().skip(1).map(|l| l.rsplitn(2, ',').nth(1).unwrap().to_owned()).collect();
    assert_eq!(keys, ["2,1,1", "2,1,2", "2,2,1", "2,2,2", "3,1,1", "3,1,2", "3,2,1", "3,2,2"]);
}

#[test]
fn table_json_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("orders.json");
    let out = rcm(&[
        "table", "--p-list", "2,3", "--t-max", "1", "--n-max", "3", "--format", "json", "--output",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    assert_eq!(envelope(&out)["payload"]["rows"], 6);
    let rows: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let rows = rows.as_array().unwrap();
    assert_eq!(rows.len(), 6);
    for row in rows {
        assert_eq!(row["kind"], "field");
        assert!(row["order"].is_string());
        assert!(row["breakdown"].is_array());
    }
    assert_eq!(rows[3]["order"], "2");
}

#[test]
fn table_unwritable_path_exits_three() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("missing").join("t.csv");
    let out = rcm(&["table", "--p-list", "2", "--t-max", "1", "--n-max", "2", "--output", path.to_str().unwrap()]);
    assert_eq!(code(&out), 3);
}

#[test]
fn enumerate_examples() {
    let v = envelope(&rcm(&["enumerate", "--field", "2^1", "--n", "4"]));
    assert_eq!(v["payload"]["count"], "8");
    assert_eq!(v["payload"]["agrees"], true);
    let v = envelope(&rcm(&["enumerate", "--field", "3^1", "--n", "3", "--det-one"]));
    assert_eq!(v["payload"]["count"], "9");
    let v = envelope(&rcm(&["enumerate", "--mod", "9", "--n", "3"]));
    assert_eq!(v["payload"]["agrees"], true);
    let out = rcm(&["enumerate", "--field", "2^1", "--n", "64"]);
    assert_eq!(code(&out), 4);
    assert!(String::from_utf8_lossy(&out.stderr).contains("18446744073709551616"));
    assert_eq!(code(&rcm(&["enumerate", "--field", "2^1", "--n", "5", "--budget", "31"])), 4);
}

#[test]
fn enumerate_emit_streams_vectors() {
    let out = rcm(&["enumerate", "--field", "2^1", "--n", "3", "--emit"]);
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(&lines[..3], ["0,0,1", "0,1,0", "1,0,0"]);
    assert_eq!(lines.len(), 4);
    assert_eq!(envelope(&out)["payload"]["count"], "3");
}

#[test]
fn canonical_identity_and_shift() {
    let v = envelope(&rcm(&["canonical", "--field", "2^1", "--n", "3", "--column", "0,0,1"]));
    assert_eq!(v["payload"]["blocks"], serde_json::json!([[1], [1], [1]]));
    assert_eq!(v["payload"]["admissible"], true);
    assert_eq!(v["payload"]["s"], 2);

    let v = envelope(&rcm(&["canonical", "--field", "2^1", "--n", "3", "--column", "0,1,0"]));
    let mu = v["payload"]["mu"].as_u64().unwrap();
    // In F_4 = F_2[x]/(x^2+x+1) the primitive cube roots are x and x + 1.
    assert!(mu == 2 || mu == 3);
    let mu2 = 5 - mu;
    assert_eq!(v["payload"]["blocks"], serde_json::json!([[mu], [mu2], [1]]));

    let v = envelope(&rcm(&["canonical", "--field", "3^1", "--n", "6", "--column", "0,0,0,0,0,1"]));
    assert_eq!(v["payload"]["blocks"], serde_json::json!([[0, 0, 1], [0, 0, 1]]));
}

#[test]
fn canonical_matrix_flag() {
    let v = envelope(&rcm(&["canonical", "--field", "2^1", "--n", "2", "--column", "1,0", "--matrix"]));
    assert_eq!(v["payload"]["matrix"]["rows"], 2);
    assert_eq!(v["payload"]["matrix"]["entries"], serde_json::json!([1, 1, 0, 1]));
}

#[test]
fn canonical_errors() {
    assert_eq!(code(&rcm(&["canonical", "--field", "2^1", "--n", "2", "--column", "1,1"])), 5);
    assert_eq!(code(&rcm(&["canonical", "--field", "2^1", "--n", "2", "--column", "0,2"])), 5);
    assert_eq!(code(&rcm(&["canonical", "--field", "2^1", "--n", "2", "--column", "0,x"])), 2);
}

#[test]
fn verify_suites() {
    for suite in ["cycles", "pascal"] {
        let out = rcm(&["verify", "--suite", suite]);
        assert_eq!(code(&out), 0, "{suite}");
        let text = stdout(&out);
        assert!(text.lines().next().unwrap().starts_with("PASS"));
        assert_eq!(envelope(&out)["payload"]["passed"], true);
    }
}

#[test]
fn verify_small_budget_skips_without_failing() {
    let out = rcm(&["verify", "--suite", "all", "--budget", "1000"]);
    assert_eq!(code(&out), 0);
    let v = envelope(&out);
    assert_eq!(v["payload"]["failed"], 0);
    let checks = v["payload"]["checks"].as_array().unwrap();
    assert!(checks.iter().any(|c| c["skipped"].as_u64().unwrap() > 0));
    assert!(stdout(&out).contains("SKIPPED") || stdout(&out).contains("skipped by budget"));
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["order", "--field", "5^3", "--n", "40"][..],
        &["enumerate", "--mod", "12", "--n", "3"],
        &["canonical", "--field", "3^1", "--n", "4", "--column", "1,2,0,1", "--matrix"],
    ] {
        assert_eq!(payload_without_timing(&rcm(args)), payload_without_timing(&rcm(args)));
    }
}

#[test]
fn pretty_flag_keeps_json() {
    let out = rcm(&["--pretty", "order", "--mod", "6", "--n", "2"]);
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["payload"]["order"], "8");
}
