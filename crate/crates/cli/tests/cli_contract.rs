//! Binary-level contract tests: exit codes, stream determinism, formats,
//! and the stdin/file input paths.

use std::io::Write;
use std::process::{Command, Output, Stdio};

fn inertia_bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_inertia"))
}

fn run_with_stdin(args: &[&str], stdin: &str) -> Output {
    let mut child = inertia_bin()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary spawns");
    child
        .stdin
        .as_mut()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

#[test]
fn scan_clean_input_exits_zero() {
    let out = run_with_stdin(&["scan", "--checks", "main"], "A_\nDhc\n");
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().count(), 2);
    for line in text.lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(v["checks"][0]["verdict"], "tight");
    }
}

#[test]
fn scan_malformed_line_counts_but_exits_zero() {
    let out = run_with_stdin(&["scan", "--checks", "main"], "A_\n!!!bad\nBw\n");
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().count(), 2, "record count unchanged");
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("line 2:"), "stderr: {err}");
    assert!(err.contains("1 parse errors"), "stderr: {err}");
}

#[test]
fn scan_fail_fast_aborts_with_exit_one() {
    let out = run_with_stdin(&["scan", "--fail-fast", "--checks", "main"], "!!!bad\nA_\n");
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn scan_is_bitwise_deterministic_across_parallelism() {
    // ten graphs, checked with 1 and 4 workers: identical streams
    let corpus: String = std::iter::repeat_n("Dhc\nA_\nBw\nD?{\n", 5).collect();
    let a = run_with_stdin(&["scan", "--jobs", "1"], &corpus);
    let b = run_with_stdin(&["scan", "--jobs", "4"], &corpus);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn sample_runs_are_reproducible() {
    let args = &[
        "sample", "--order", "30", "--count", "5", "--seed", "9", "--checks", "main",
    ];
    let a = inertia_bin().args(args).output().unwrap();
    let b = inertia_bin().args(args).output().unwrap();
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout, "seeded runs must be bitwise identical");
    let text = String::from_utf8(a.stdout).unwrap();
    assert!(text
        .lines()
        .last()
        .unwrap()
        .contains("\"rng\":\"splitmix64\""));
}

#[test]
fn enumerate_summary_counts_labeled_graphs() {
    let out = inertia_bin()
        .args([
            "enumerate",
            "--max-order",
            "4",
            "--quiet",
            "--checks",
            "main",
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let v: serde_json::Value = serde_json::from_str(text.lines().last().unwrap()).unwrap();
    assert_eq!(v["summary"]["graphs"], 75); // 1 + 2 + 8 + 64
    assert_eq!(v["summary"]["checks"]["main"]["violated"], 0);
    let out = inertia_bin()
        .args(["enumerate", "--max-order", "9"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1), "order cap enforced");
}

#[test]
fn construct_matches_library_values() {
    let out = inertia_bin()
        .args(["construct", "triangular", "5", "|", "complement"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    // the Petersen graph: 10 vertices, 15 edges
    let line = String::from_utf8(out.stdout).unwrap();
    let g = inertia_core::format::parse_graph6(line.trim()).unwrap();
    assert_eq!((g.order(), g.size()), (10, 15));

    let out = inertia_bin()
        .args(["construct", "paley", "9"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn csv_emit_has_flat_rows() {
    let out = run_with_stdin(
        &["scan", "--emit", "csv", "--checks", "main,weaker"],
        "A_\n",
    );
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert!(lines[0].starts_with("line,id,order"));
    assert_eq!(lines.len(), 3); // header + one row per check
    assert!(lines[1].contains(",main,"));
    assert!(lines[2].contains(",weaker,"));
}

#[test]
fn fixtures_exits_zero_with_tight_catalogue() {
    let out = inertia_bin().args(["fixtures"]).output().unwrap();
    assert_eq!(
        out.status.code(),
        Some(0),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    let text = String::from_utf8(out.stdout).unwrap();
    let mclaughlin = text
        .lines()
        .find(|l| l.contains("McLaughlin"))
        .expect("McLaughlin record");
    let v: serde_json::Value = serde_json::from_str(mclaughlin).unwrap();
    assert_eq!(v["n_plus"], 253);
    assert_eq!(v["n_minus"], 22);
}

#[test]
fn sparse6_input_accepted() {
    let out = run_with_stdin(&["scan", "--checks", "main"], ":DaYkN\n");
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let v: serde_json::Value = serde_json::from_str(text.lines().next().unwrap()).unwrap();
    // C5 up to relabeling: inertia (3, 0, 2)
    assert_eq!(v["n_plus"], 3);
    assert_eq!(v["n_minus"], 2);
}

#[test]
fn jobs_env_variable_honoured() {
    let corpus = "Dhc\nA_\n";
    let out = inertia_bin()
        .args(["scan", "--checks", "main"])
        .env("INERTIA_JOBS", "3")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .and_then(|mut c| {
            c.stdin.as_mut().unwrap().write_all(corpus.as_bytes())?;
            c.wait_with_output()
        })
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8(out.stdout).unwrap().lines().count(), 2);
}
