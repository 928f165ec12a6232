//! End-to-end checks of the command-line surface: exit codes, format
//! contracts, and byte determinism under parallelism.

use std::io::Write;
use std::process::{Command, Stdio};

fn run(args: &[&str], stdin: &str) -> (String, String, i32) {
    let mut child = Command::new(env!("CARGO_BIN_EXE_intrec"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn intrec");
    child.stdin.as_mut().unwrap().write_all(stdin.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    (
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
        out.status.code().unwrap_or(-1),
    )
}

#[test]
fn recognize_interval_and_witness() {
    // P4 is interval: representation JSON, exit 0
    let (stdout, _, code) = run(&["recognize"], "Ch\n");
    assert_eq!(code, 0);
    assert!(stdout.starts_with("[["), "unexpected output: {}", stdout);

    // C4 is not: witness JSON, exit 1
    let (stdout, _, code) = run(&["recognize"], "Cr\n");
    assert_eq!(code, 1);
    assert!(stdout.contains("induced_cycle"), "unexpected output: {}", stdout);
}

#[test]
fn usage_errors_exit_2() {
    let (_, _, code) = run(&["enumerate"], "");
    assert_eq!(code, 2); // missing --n
    let (_, _, code) = run(&["no-such-command"], "");
    assert_eq!(code, 2);
}

#[test]
fn deck_then_reconstruct_roundtrips() {
    // double-tailed star: center adjacent to 1,2,3,4; tails 3-5, 4-6
    let g = "Fs_OO\n"; // graph6 of that labeled graph
    let (deck_json, _, code) = run(&["deck"], g);
    assert_eq!(code, 0, "deck failed: {}", deck_json);
    let (result, stderr, code) = run(&["reconstruct"], &deck_json);
    assert_eq!(code, 0, "reconstruct failed: {}", stderr);
    assert!(result.contains("\"method\""));
    // result graph must have the same deck
    let (g6_only, _, code) = run(&["reconstruct", "--format", "g6"], &deck_json);
    assert_eq!(code, 0);
    let (deck2, _, _) = run(&["deck"], &g6_only);
    assert_eq!(deck_json, deck2);
}

#[test]
fn flank_sizes_from_graph_or_deck() {
    let g = "Fs_OO\n";
    let (sizes, _, code) = run(&["flank-sizes"], g);
    assert_eq!(code, 0);
    assert_eq!(sizes.trim(), "{\"flank_sizes\":[1,1]}");
    let (deck_json, _, _) = run(&["deck"], g);
    let (sizes2, _, _) = run(&["flank-sizes"], &deck_json);
    assert_eq!(sizes, sizes2);
}

#[test]
fn enumerate_counts_and_determinism() {
    let (out3, _, code) = run(&["enumerate", "--n", "3"], "");
    assert_eq!(code, 0);
    assert_eq!(out3.lines().count(), 4);
    assert!(out3.ends_with('\n'));

    let (out4, _, _) = run(&["enumerate", "--n", "4", "--interval-only"], "");
    assert_eq!(out4.lines().count(), 10);

    let (seq, _, _) = run(&["enumerate", "--n", "5"], "");
    let (par, _, _) = run(&["enumerate", "--n", "5", "--jobs", "4"], "");
    assert_eq!(seq, par);
}

#[test]
fn reconstruct_path_reports_its_case() {
    // P5 labeled along the path
    let (deck_json, _, _) = run(&["deck"], "DhC\n");
    let (result, _, code) = run(&["reconstruct"], &deck_json);
    assert_eq!(code, 0);
    assert!(result.contains("no-flank case 3"), "unexpected: {}", result);
}

#[test]
fn verify_small_orders() {
    let (report, _, code) = run(&["verify", "--n", "4"], "");
    assert_eq!(code, 0);
    assert!(report.contains("\"collisions\":[]"), "unexpected report: {}", report);
}

#[test]
fn output_file_flag() {
    let dir = std::env::temp_dir().join(format!("intrec-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("out.g6");
    let (_, _, code) =
        run(&["enumerate", "--n", "3", "--output", path.to_str().unwrap()], "");
    assert_eq!(code, 0);
    let content = std::fs::read_to_string(&path).unwrap();
    assert_eq!(content.lines().count(), 4);
    std::fs::remove_dir_all(&dir).ok();
}
