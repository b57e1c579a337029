//! Black-box tests of the command-line interface: exit codes, CSV
//! shape and solve output.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sinc-fredholm"))
        .args(args)
        .output()
        .expect("binary runs")
}

#[test]
fn bench_writes_csv_to_stdout() {
    let out = run(&[
        "bench",
        "--example",
        "1",
        "--methods",
        "new-de,nystrom-se",
        "--n-min",
        "4",
        "--n-max",
        "8",
        "--n-step",
        "4",
        "--grid",
        "101",
        "--count-kernel-evals",
    ]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(
        lines[0],
        "method,example,N,h,max_error,assemble_ms,solve_ms,eval_ms,kernel_evals"
    );
    assert_eq!(lines.len(), 5); // header + 2 methods x 2 N
    assert!(lines[1].starts_with("new-de,example1,4,"));
    assert!(lines[3].starts_with("nystrom-se,example1,4,"));
    for row in &lines[1..] {
        assert_eq!(row.split(',').count(), 9);
    }
}

#[test]
fn bench_writes_csv_to_file() {
    let path = std::env::temp_dir().join("sinc_fredholm_cli_test.csv");
    let out = run(&[
        "bench",
        "--example",
        "2",
        "--methods",
        "new-se",
        "--n-min",
        "5",
        "--n-max",
        "5",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("method,example,N,h,"));
    assert_eq!(text.lines().count(), 2);
    std::fs::remove_file(&path).ok();
}

#[test]
fn usage_errors_exit_2() {
    // clap-level: unknown method token
    let out = run(&[
        "bench", "--example", "1", "--methods", "bogus", "--n-min", "1", "--n-max", "2",
    ]);
    assert_eq!(out.status.code(), Some(2));

    // out-of-range example
    let out = run(&[
        "bench", "--example", "9", "--methods", "new-se", "--n-min", "1", "--n-max", "2",
    ]);
    assert_eq!(out.status.code(), Some(2));

    // inverted N range
    let out = run(&[
        "bench", "--example", "1", "--methods", "new-se", "--n-min", "5", "--n-max", "2",
    ]);
    assert_eq!(out.status.code(), Some(2));

    // evaluation point outside the interval
    let out = run(&[
        "solve", "--example", "1", "--method", "new-de", "--n", "10", "--at", "1.5",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn infeasible_mesh_exits_3() {
    // example 4 DE mesh needs N > 4; the sweep emits +inf sentinels
    let out = run(&[
        "bench", "--example", "4", "--methods", "new-de", "--n-min", "2", "--n-max", "2",
    ]);
    assert_eq!(out.status.code(), Some(3));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().nth(1).unwrap().contains("inf"));
}

#[test]
fn solve_prints_value_and_error() {
    let out = run(&[
        "solve", "--example", "1", "--method", "new-de", "--n", "40", "--at", "0.5",
    ]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    let approx = lines.next().unwrap();
    let exact = lines.next().unwrap();
    assert!(approx.starts_with("approx u(0.5) = "));
    assert!(exact.starts_with("exact  u(0.5) = "));
    assert!(exact.contains("|error|"));
    let v: f64 = approx.rsplit(' ').next().unwrap().parse().unwrap();
    // exact solution of example 1 at t = 1/2 is 1/r = 2 with r = 1/2
    assert!((v - 2.0).abs() < 1e-6);
}
