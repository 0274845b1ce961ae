//! End-to-end checks of the command-line surface: output formats, exit
//! codes, and round-trips through the parent-array text format.

use std::process::{Command, Output};

use transversals::counting::count_transversals;
use transversals::tree::RootedTree;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_transversals"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn exit_code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

#[test]
fn count_prints_vector() {
    let out = run(&["count", "--tree", "0 1 1 2 2"]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(stdout(&out).trim(), "0,1,5,9,5,1");
}

#[test]
fn count_emits_dot() {
    let out = run(&["count", "--tree", "0 1 2", "--emit", "dot"]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout(&out);
    assert!(text.starts_with("digraph tree {"));
    assert!(text.contains("1 -> 2;"));
    assert!(text.contains("2 -> 3;"));
    assert!(text.contains("c = 0,3,3,1"));
}

#[test]
fn compare_prints_verdict_and_indices() {
    let out = run(&["compare", "--tree-a", "0 1 2", "--tree-b", "0 1 1"]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(stdout(&out).trim(), "strictly_succeeds k=[1]");

    let out = run(&["compare", "--tree-a", "0 1 1", "--tree-b", "0 1 1"]);
    assert_eq!(stdout(&out).trim(), "equal");

    // Different node counts are a usage error.
    let out = run(&["compare", "--tree-a", "0 1", "--tree-b", "0 1 1"]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn transform_round_trips() {
    let out = run(&[
        "transform",
        "--tree",
        "0 1 1 3 2",
        "--op",
        "shed",
        "--x",
        "2",
        "--y",
        "4",
    ]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout(&out);
    assert_eq!(text.trim(), "0 1 1 3 4");

    // The printed tree re-parses and counts identically to the library path.
    let reparsed: RootedTree = text.trim().parse().unwrap();
    let direct = transversals::transforms::shed(&"0 1 1 3 2".parse().unwrap(), 2, 4).unwrap();
    assert_eq!(count_transversals(&reparsed), count_transversals(&direct));

    let count_out = run(&["count", "--tree", text.trim()]);
    assert_eq!(
        stdout(&count_out).trim(),
        count_transversals(&direct).to_string()
    );

    let out = run(&[
        "transform",
        "--tree",
        "0 1 2",
        "--op",
        "lift",
        "--x",
        "3",
        "--y",
        "1",
    ]);
    assert_eq!(stdout(&out).trim(), "0 1 1");
}

#[test]
fn transform_rejects_bad_pairs() {
    let out = run(&[
        "transform",
        "--tree",
        "0 1 2",
        "--op",
        "lift",
        "--x",
        "3",
        "--y",
        "2",
    ]);
    assert_eq!(exit_code(&out), 2);
    let out = run(&[
        "transform",
        "--tree",
        "0 1 1 2 2",
        "--op",
        "shed",
        "--x",
        "2",
        "--y",
        "3",
    ]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn extremal_prints_tree_and_vector() {
    let out = run(&["extremal", "--n", "5", "--max-children", "2"]);
    assert_eq!(exit_code(&out), 0);
    let lines: Vec<String> = stdout(&out).lines().map(str::to_string).collect();
    assert_eq!(
        lines,
        vec!["0 1 1 2 2".to_string(), "0,1,5,9,5,1".to_string()]
    );

    let out = run(&["extremal", "--n", "5", "--max-leaves", "3"]);
    let lines: Vec<String> = stdout(&out).lines().map(str::to_string).collect();
    assert_eq!(lines[0], "0 1 1 1 2");

    // Exactly one bound is required.
    assert_eq!(exit_code(&run(&["extremal", "--n", "5"])), 2);
    assert_eq!(
        exit_code(&run(&[
            "extremal",
            "--n",
            "5",
            "--max-children",
            "2",
            "--max-leaves",
            "2"
        ])),
        2
    );
    // Out-of-range degree.
    assert_eq!(
        exit_code(&run(&["extremal", "--n", "4", "--max-children", "4"])),
        2
    );
}

#[test]
fn enumerate_streams_classes() {
    let out = run(&["enumerate", "--n", "5"]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(stdout(&out).lines().count(), 9);

    let out = run(&["enumerate", "--n", "5", "--max-children", "2"]);
    assert_eq!(stdout(&out).lines().count(), 6);

    let out = run(&["enumerate", "--n", "4", "--emit", "code"]);
    let lines: Vec<String> = stdout(&out).lines().map(str::to_string).collect();
    assert_eq!(lines.len(), 4);
    assert!(lines.iter().all(|l| l.starts_with('(') && l.len() == 8));

    assert_eq!(exit_code(&run(&["enumerate", "--n", "0"])), 2);
}

#[test]
fn verify_writes_report_and_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = run(&[
        "verify",
        "--target",
        "theorem_main",
        "--n",
        "7",
        "--d",
        "2",
        "--report",
        path.to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&out), 0);
    let report: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(report["target"], "theorem_main");
    assert_eq!(report["verdict"], "pass");
    assert_eq!(report["params"]["n"], 7);
    assert_eq!(report["params"]["d"], 2);
    assert!(report["params"]["m"].is_null());
}

#[test]
fn verify_exit_one_under_fault_injection() {
    let out = run(&["verify", "--target", "boundary", "--n", "4", "--corrupt"]);
    assert_eq!(exit_code(&out), 1);
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["verdict"], "fail");
    // One violation per tree: the 1 + 2 + 4 classes with 2 <= n <= 4.
    assert_eq!(report["violations"].as_array().unwrap().len(), 7);

    let out = run(&[
        "verify",
        "--target",
        "boundary",
        "--n",
        "4",
        "--corrupt",
        "--fail-fast",
    ]);
    assert_eq!(exit_code(&out), 1);
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["verdict"], "fail");
    assert_eq!(report["violations"].as_array().unwrap().len(), 1);
    assert_eq!(report["trees_checked"], 1);
}

#[test]
fn verify_rejects_misapplied_flags() {
    assert_eq!(
        exit_code(&run(&["verify", "--target", "theorem_main", "--n", "5"])),
        2
    );
    assert_eq!(
        exit_code(&run(&[
            "verify",
            "--target",
            "theorem_main",
            "--n",
            "5",
            "--m",
            "2"
        ])),
        2
    );
    assert_eq!(
        exit_code(&run(&[
            "verify", "--target", "boundary", "--n", "5", "--d", "2"
        ])),
        2
    );
    assert_eq!(
        exit_code(&run(&[
            "verify",
            "--target",
            "lemmas",
            "--n",
            "4",
            "--corrupt"
        ])),
        2
    );
    assert_eq!(
        exit_code(&run(&[
            "verify", "--target", "sandwich", "--n", "8", "--jobs", "0"
        ])),
        2
    );
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(exit_code(&run(&["count", "--tree", "0 1 junk"])), 2);
    assert_eq!(exit_code(&run(&["count", "--tree", "0 3 0"])), 2);
    assert_eq!(exit_code(&run(&["frobnicate"])), 2);
    assert_eq!(exit_code(&run(&["count"])), 2);
}

#[test]
fn verify_range_targets_accept_n_max() {
    let a = run(&["verify", "--target", "boundary", "--n", "5"]);
    let b = run(&["verify", "--target", "boundary", "--n", "2", "--n-max", "5"]);
    assert_eq!(exit_code(&a), 0);
    assert_eq!(exit_code(&b), 0);
    let va: serde_json::Value = serde_json::from_str(&stdout(&a)).unwrap();
    let vb: serde_json::Value = serde_json::from_str(&stdout(&b)).unwrap();
    assert_eq!(va["trees_checked"], vb["trees_checked"]);
    assert_eq!(va["trees_checked"], 16);
}
