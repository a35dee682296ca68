//! Exit-code and output behavior of the kdom binary.

use std::path::Path;
use std::process::{Command, Output};

fn kdom(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kdom"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn write(dir: &Path, name: &str, contents: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path.to_str().unwrap().to_string()
}

fn stdout(output: &Output) -> String {
    String::from_utf8_lossy(&output.stdout).into_owned()
}

fn stderr(output: &Output) -> String {
    String::from_utf8_lossy(&output.stderr).into_owned()
}

#[test]
fn solve_prints_gamma_and_witness() {
    let dir = tempfile::tempdir().unwrap();
    let path4 = write(dir.path(), "path4.txt", "n 4\ne 0 1\ne 1 2\ne 2 3\n");
    let out = kdom(&["solve", "--graph", &path4, "--k", "2", "--witness"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("gamma=4"), "{text}");
    assert!(text.contains("witness={"), "{text}");

    let k3 = write(dir.path(), "k3.txt", "n 3\ne 0 1\ne 0 2\ne 1 2\n");
    let out = kdom(&["solve", "--graph", &k3, "--k", "2", "--method", "brute"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("gamma=2"));
}

#[test]
fn solve_rejects_malformed_files_with_line_numbers() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write(dir.path(), "bad.txt", "n 2\ne 0 0\n");
    let out = kdom(&["solve", "--graph", &bad, "--k", "1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("line 2"), "{}", stderr(&out));

    let out = kdom(&["solve", "--graph", "/nonexistent/file.txt", "--k", "1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn solve_reports_budget_exhaustion() {
    let dir = tempfile::tempdir().unwrap();
    let grid = write(
        dir.path(),
        "grid45.txt",
        &(0..4)
            .flat_map(|r| (0..5).map(move |c| (r, c)))
            .fold(String::from("n 20\n"), |mut acc, (r, c)| {
                let v = r * 5 + c;
                if c + 1 < 5 {
                    acc.push_str(&format!("e {} {}\n", v, v + 1));
                }
                if r + 1 < 4 {
                    acc.push_str(&format!("e {} {}\n", v, v + 5));
                }
                acc
            }),
    );
    let out = kdom(&["solve", "--graph", &grid, "--k", "2", "--budget-secs", "0"]);
    assert_eq!(out.status.code(), Some(3));
    // the best known upper bound is still reported
    assert!(stdout(&out).contains("gamma="), "{}", stdout(&out));
    assert!(stderr(&out).contains("budget"), "{}", stderr(&out));
}

#[test]
fn solve_rejects_k_zero_as_usage_error() {
    let dir = tempfile::tempdir().unwrap();
    let k2 = write(dir.path(), "k2.txt", "n 2\ne 0 1\n");
    let out = kdom(&["solve", "--graph", &k2, "--k", "0"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_reports_the_chain_and_writes_certificates() {
    let dir = tempfile::tempdir().unwrap();
    let k2 = write(dir.path(), "k2.txt", "n 2\ne 0 1\n");
    let cert_path = dir.path().join("cert.json");
    let out = kdom(&[
        "verify",
        "--g",
        &k2,
        "--h",
        &k2,
        "--k",
        "1",
        "--cert",
        cert_path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("chain: 1 <= "), "{text}");
    assert!(
        text.trim_end()
            .lines()
            .any(|l| l.ends_with("<= 4") || l.contains("<= 4")),
        "{text}"
    );
    assert!(cert_path.exists());

    let k1 = write(dir.path(), "k1.txt", "n 1\n");
    let out = kdom(&["verify", "--g", &k1, "--h", &k1, "--k", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("chain: 9 <= "), "{text}");
    assert!(text.contains("<= 18"), "{text}");
}

#[test]
fn verify_propagates_parse_errors() {
    let out = kdom(&[
        "verify",
        "--g",
        "/missing.txt",
        "--h",
        "/missing.txt",
        "--k",
        "1",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn check_cert_passes_fresh_and_fails_tampered() {
    let dir = tempfile::tempdir().unwrap();
    let p3 = write(dir.path(), "p3.txt", "n 3\ne 0 1\ne 1 2\n");
    let cert_path = dir.path().join("cert.json");
    let out = kdom(&[
        "verify",
        "--g",
        &p3,
        "--h",
        &p3,
        "--k",
        "2",
        "--cert",
        cert_path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));

    let out = kdom(&["check-cert", cert_path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert_eq!(text.matches("PASS").count(), 9, "{text}");

    // flip one matrix bit
    let mut value: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&cert_path).unwrap()).unwrap();
    let row = value["blocks"][0]["rows"][0].as_str().unwrap().to_string();
    let flipped: String = row
        .chars()
        .enumerate()
        .map(|(i, c)| {
            if i == 0 {
                if c == '0' {
                    '1'
                } else {
                    '0'
                }
            } else {
                c
            }
        })
        .collect();
    value["blocks"][0]["rows"][0] = serde_json::json!(flipped);
    let tampered = write(
        dir.path(),
        "tampered.json",
        &serde_json::to_string(&value).unwrap(),
    );
    let out = kdom(&["check-cert", &tampered]);
    assert_eq!(out.status.code(), Some(4));
    let text = stdout(&out);
    assert!(text.contains("check 4") && text.contains("FAIL"), "{text}");

    // claim a violated inequality in the chain
    let mut value: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&cert_path).unwrap()).unwrap();
    value["chain"]["rhs"] = serde_json::json!(0);
    let lying = write(
        dir.path(),
        "lying.json",
        &serde_json::to_string(&value).unwrap(),
    );
    let out = kdom(&["check-cert", &lying]);
    assert_eq!(out.status.code(), Some(4));
    let text = stdout(&out);
    assert!(
        text.lines()
            .any(|l| l.starts_with("check 9") && l.contains("FAIL")),
        "{text}"
    );
}

#[test]
fn check_cert_distinguishes_parse_failures() {
    let dir = tempfile::tempdir().unwrap();
    let truncated = write(dir.path(), "truncated.json", "{\"version\": 1, \"k\":");
    let out = kdom(&["check-cert", &truncated]);
    assert_eq!(out.status.code(), Some(2));

    let out = kdom(&["check-cert", "/nonexistent.json"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn sweep_validates_family_lists() {
    let dir = tempfile::tempdir().unwrap();
    let out_csv = dir.path().join("out.csv");
    let out = kdom(&[
        "sweep",
        "--families",
        "bogus",
        "--n-max",
        "3",
        "--k-max",
        "1",
        "--out",
        out_csv.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(2));

    // flag present but valueless is a usage error from the parser
    let out = kdom(&["sweep", "--families", "--n-max", "3"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn sweep_rows_hold_the_bound_and_verify() {
    let dir = tempfile::tempdir().unwrap();
    let out_csv = dir.path().join("rows.csv");
    let out = kdom(&[
        "sweep",
        "--families",
        "path,cycle,complete",
        "--n-max",
        "4",
        "--k-max",
        "2",
        "--out",
        out_csv.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let text = std::fs::read_to_string(&out_csv).unwrap();
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "family_g,params_g,family_h,params_h,k,gamma_g,gamma_h,gamma_product,lhs,rhs,ratio,cert_ok,millis"
    );
    let mut rows = 0;
    for line in lines {
        let cells: Vec<&str> = line.split(',').collect();
        assert_eq!(cells.len(), 13, "{line}");
        let lhs: usize = cells[8].parse().unwrap();
        let rhs: usize = cells[9].parse().unwrap();
        assert!(lhs <= rhs, "bound must hold on {line}");
        assert_eq!(cells[11], "true", "certificate must verify on {line}");
        rows += 1;
    }
    // 4 paths + 2 cycles + 4 completes = 10 instances, ordered pairs, k in 1..=2
    assert_eq!(rows, 10 * 10 * 2);
}

#[test]
fn sweep_budget_flushes_partial_output() {
    let dir = tempfile::tempdir().unwrap();
    let out_csv = dir.path().join("partial.csv");
    let out = kdom(&[
        "sweep",
        "--families",
        "path,cycle,complete,star",
        "--n-max",
        "5",
        "--k-max",
        "2",
        "--out",
        out_csv.to_str().unwrap(),
        "--budget-secs",
        "0",
    ]);
    assert_eq!(out.status.code(), Some(3));
    let text = std::fs::read_to_string(&out_csv).unwrap();
    assert!(
        text.lines().last().unwrap().starts_with("# aborted"),
        "{text}"
    );
}
