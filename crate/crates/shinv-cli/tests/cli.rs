//! End-to-end checks of the command-line interface: every command's numeric
//! output must equal the library result, and the JSON schema must stay
//! stable.

use std::process::{Command, Output};

fn shinv_cmd(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_shinv"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(args: &[&str]) -> String {
    let out = shinv_cmd(args);
    assert!(
        out.status.success(),
        "command {args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn div_prints_quotient_and_remainder() {
    assert_eq!(stdout_of(&["div", "1000000", "7"]).trim(), "q=142857 r=1");
    assert_eq!(stdout_of(&["div", "9", "7", "--base", "10"]).trim(), "q=1 r=2");
    assert_eq!(stdout_of(&["div", "100", "10"]).trim(), "q=10 r=0");
    assert_eq!(
        stdout_of(&["div", "1000000", "7", "--variant", "refine1", "--mult", "schoolbook"])
            .trim(),
        "q=142857 r=1"
    );
}

#[test]
fn div_signed_conventions_truncate() {
    // Truncated division: q = sign(u)sign(v) * (|u| quo |v|), r = sign(u) * (|u| rem |v|).
    assert_eq!(stdout_of(&["div", "-9", "7"]).trim(), "q=-1 r=-2");
    assert_eq!(stdout_of(&["div", "9", "-7"]).trim(), "q=-1 r=2");
    assert_eq!(stdout_of(&["div", "-9", "-7"]).trim(), "q=1 r=-2");
    assert_eq!(stdout_of(&["div", "-14", "7"]).trim(), "q=-2 r=0");
    assert_eq!(stdout_of(&["div", "0", "-3"]).trim(), "q=0 r=0");
}

#[test]
fn div_accepts_hex_input() {
    assert_eq!(stdout_of(&["div", "0xff", "0x10"]).trim(), "q=15 r=15");
}

#[test]
fn division_by_zero_exits_2() {
    let out = shinv_cmd(&["div", "5", "0"]);
    assert_eq!(out.status.code(), Some(2));
    let out = shinv_cmd(&["pdiv", "1,1", "0", "--field", "F5"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn shinv_reports_value_and_stats() {
    let out = stdout_of(&["shinv", "7", "6", "--base", "10"]);
    assert!(out.starts_with("142857\n"), "{out}");
    assert!(out.contains("iterations = "), "{out}");

    let out = stdout_of(&["shinv", "300", "6", "--base", "16"]);
    assert!(out.contains("55924"), "{out}");
    assert!(out.contains("w0 = 55808"), "{out}");

    assert!(stdout_of(&["shinv", "2", "3", "--base", "10"]).starts_with("500\n"));
}

#[test]
fn pdiv_divides_over_prime_fields() {
    assert_eq!(stdout_of(&["pdiv", "1,2,0,1", "1,1", "--field", "F5"]).trim(), "q=3,4,1 r=3");
    assert_eq!(stdout_of(&["pdiv", "1,2,0,1", "1,2,0,1", "--field", "F5"]).trim(), "q=1 r=0");
    assert_eq!(stdout_of(&["pdiv", "1", "1,1", "--field", "F5"]).trim(), "q=0 r=1");
    let out = shinv_cmd(&["pdiv", "1,1", "1,1", "--field", "F4"]);
    assert_eq!(out.status.code(), Some(2), "composite modulus must be rejected");
}

#[test]
fn census_emits_reference_rows() {
    let out = stdout_of(&["census", "1000", "--format", "csv"]);
    assert!(out.starts_with("u,actual,estimate,abs_err,rel_err\n"), "{out}");
    assert!(out.contains("10,8,8,0,"), "{out}");
    assert!(out.contains("100,85,81,4,4.706e-2"), "{out}");
    assert!(out.contains("1000,818,811,7,8.557e-3"), "{out}");
}

#[test]
fn trace_prints_iterates() {
    assert_eq!(stdout_of(&["trace", "100", "7", "11"]).trim(), "11 -> 13 -> 14 (fixed)");
    assert_eq!(stdout_of(&["trace", "100", "7", "0"]).trim(), "0 (fixed)");
    let out = stdout_of(&["trace", "100", "7", "29"]);
    assert!(out.contains("diverged"), "{out}");
}

#[test]
fn bench_smoke_run() {
    let out = stdout_of(&["bench", "--sizes", "4,8", "--runs", "2"]);
    assert!(out.starts_with("size,variant,mult,median_ns,ratio,iterations"), "{out}");
    assert_eq!(out.lines().count(), 3, "{out}");
}

#[test]
fn json_output_round_trips_with_stable_schema() {
    for args in [
        vec!["div", "9", "7", "--base", "10", "--format", "json"],
        vec!["shinv", "7", "6", "--base", "10", "--format", "json"],
        vec!["pdiv", "1,2,0,1", "1,1", "--field", "F5", "--format", "json"],
        vec!["census", "100", "--format", "json"],
        vec!["trace", "100", "7", "11", "--format", "json"],
        vec!["bench", "--sizes", "4", "--runs", "1", "--format", "json"],
    ] {
        let out = stdout_of(&args);
        let v: serde_json::Value = serde_json::from_str(&out).expect("valid json");
        for key in ["command", "inputs", "result", "stats"] {
            assert!(v.get(key).is_some(), "{args:?} missing {key}: {out}");
        }
        let stats = v.get("stats").unwrap();
        for key in ["iterations", "mults", "wall_ns"] {
            assert!(stats.get(key).is_some(), "{args:?} missing stats.{key}");
        }
    }

    // Spot-check values inside the JSON.
    let out = stdout_of(&["div", "9", "7", "--base", "10", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["result"]["q"], "1");
    assert_eq!(v["result"]["r"], "2");
    assert_eq!(v["result"]["delta"], 1);
    assert_eq!(v["command"], "div");
}

#[test]
fn usage_errors_exit_2() {
    let out = shinv_cmd(&["div", "9"]);
    assert_eq!(out.status.code(), Some(2));
    let out = shinv_cmd(&["div", "abc", "3"]);
    assert_eq!(out.status.code(), Some(2));
    let out = shinv_cmd(&["trace", "7", "100", "5"]);
    assert_eq!(out.status.code(), Some(2));
}
