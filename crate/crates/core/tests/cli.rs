use std::process::{Command, Output};

fn grassmann(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_grassmann"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> &str {
    std::str::from_utf8(&out.stdout).unwrap()
}

#[test]
fn normalize_reduces_reordered_product() {
    let out = grassmann(&["normalize", "1 + 2*x1 + 3*x2 + 5*x1*x2 + 2*x2*x1"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "1 + 2*x1 + 3*x2 + 3*x1*x2\n");
}

#[test]
fn counterexample_exit_code() {
    let out = grassmann(&["-n", "2", "check-identity", "[y1,y2]"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stdout(&out).contains("y1 -> x1\ny2 -> x2\nvalue: 2*x1*x2"));
}

#[test]
fn json_check_identity() {
    let out = grassmann(&["-n", "2", "--format", "json", "check-identity", "[y1,y2]"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["holds"], false);
    assert_eq!(v["mode"], "exhaustive-multilinear");
    assert_eq!(v["witness"]["y1"]["1"], "1");
    assert_eq!(v["witness"]["y2"]["2"], "1");
    assert_eq!(v["value"]["1.2"], "2");
}

#[test]
fn json_grade() {
    let out = grassmann(&["--format", "json", "grade", "1/2 + x1 - 3*x1*x2"]);
    assert_eq!(
        stdout(&out),
        "{\"even\":{\"\":\"1/2\",\"1.2\":\"-3\"},\"odd\":{\"1\":\"1\"}}\n"
    );
}

#[test]
fn parse_error_goes_to_stderr() {
    let out = grassmann(&["normalize", "x1 x2"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(out.stdout.is_empty());
    assert!(String::from_utf8_lossy(&out.stderr).contains("offset 4"));
}

#[test]
fn help_exits_zero() {
    let out = grassmann(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("check-identity"));
}

#[test]
fn randomized_mode_is_seeded() {
    let args = [
        "-n",
        "3",
        "check-identity",
        "--seed",
        "11",
        "--trials",
        "20",
        "y1*y1",
    ];
    let (a, b) = (grassmann(&args), grassmann(&args));
    assert_eq!(a.status.code(), Some(2));
    assert_eq!(a.stdout, b.stdout);
    assert!(stdout(&a).starts_with("fails (randomized"));

    let odd = grassmann(&["-n", "3", "check-identity", "--domain", "odd", "y1*y1"]);
    assert_eq!(odd.status.code(), Some(0));
    assert_eq!(stdout(&odd), "holds (randomized, 100 cases)\n");
}
