//! End-to-end checks of the binary: output bytes, exit codes, file handling.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn eds(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_eds")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> &str {
    std::str::from_utf8(&o.stdout).expect("utf8 stdout")
}

fn stderr(o: &Output) -> &str {
    std::str::from_utf8(&o.stderr).expect("utf8 stderr")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn path_file(dir: &Path, n: usize) -> PathBuf {
    let mut text = format!("{} {}\n", n, n - 1);
    for i in 1..n {
        text.push_str(&format!("{} {}\n", i - 1, i));
    }
    write(dir, &format!("p{n}.g"), &text)
}

const SPIDER: &str = "8 7\n0 1\n0 2\n0 3\n3 4\n4 5\n5 6\n6 7\n";

#[test]
fn solve_family_goldens() {
    let dir = tempfile::tempdir().unwrap();
    let p4 = path_file(dir.path(), 4);
    let o = eds(&["solve", p4.to_str().unwrap()]);
    assert_eq!((stdout(&o), code(&o)), ("EDS 2\n0 3\n", 0));

    let p6 = path_file(dir.path(), 6);
    let o = eds(&["solve", p6.to_str().unwrap()]);
    assert_eq!((stdout(&o), code(&o)), ("EDS 2\n1 4\n", 0));

    let p7 = path_file(dir.path(), 7);
    let o = eds(&["solve", p7.to_str().unwrap()]);
    assert_eq!((stdout(&o), code(&o)), ("EDS 3\n0 3 6\n", 0));

    let c4 = write(dir.path(), "c4.g", "4 4\n0 1\n1 2\n2 3\n3 0\n");
    let o = eds(&["solve", c4.to_str().unwrap()]);
    assert_eq!((stdout(&o), code(&o)), ("NONE\n", 1));

    let c6 = write(dir.path(), "c6.g", "6 6\n0 1\n1 2\n2 3\n3 4\n4 5\n5 0\n");
    let o = eds(&["solve", c6.to_str().unwrap()]);
    assert_eq!((stdout(&o), code(&o)), ("EDS 2\n0 3\n", 0));
}

#[test]
fn solve_and_oracle_may_pick_different_solutions() {
    let dir = tempfile::tempdir().unwrap();
    let p8 = path_file(dir.path(), 8);
    let o = eds(&["solve", p8.to_str().unwrap()]);
    assert_eq!((stdout(&o), code(&o)), ("EDS 3\n1 4 7\n", 0));
    let o = eds(&["oracle", p8.to_str().unwrap()]);
    assert_eq!((stdout(&o), code(&o)), ("EDS 3\n0 3 6\n", 0));
}

#[test]
fn solve_output_is_stable_across_runs() {
    let dir = tempfile::tempdir().unwrap();
    let f = eds(&[
        "gen", "--kind", "random", "--nx", "8", "--ny", "8", "--p", "0.3", "--seed", "5",
        "--out",
        dir.path().join("r.g").to_str().unwrap(),
    ]);
    assert_eq!(code(&f), 0);
    let file = dir.path().join("r.g");
    let first = eds(&["solve", file.to_str().unwrap()]);
    for _ in 0..3 {
        let again = eds(&["solve", file.to_str().unwrap()]);
        assert_eq!(again.stdout, first.stdout);
        assert_eq!(code(&again), code(&first));
    }
}

#[test]
fn trace_lines_follow_the_result() {
    let dir = tempfile::tempdir().unwrap();
    let p6 = path_file(dir.path(), 6);
    let o = eds(&["solve", p6.to_str().unwrap(), "--trace"]);
    assert_eq!(code(&o), 0);
    let lines: Vec<&str> = stdout(&o).lines().collect();
    assert_eq!(&lines[..2], &["EDS 2", "1 4"]);
    assert!(lines[2..].iter().all(|l| l.starts_with("# ")));
    assert!(lines.iter().any(|l| l.contains("branch B")));
    assert!(lines.iter().any(|l| l.contains("seed force 1 4")));
}

#[test]
fn strict_mode_rejects_spiders_with_a_witness() {
    let dir = tempfile::tempdir().unwrap();
    let sp = write(dir.path(), "sp.g", SPIDER);
    let o = eds(&["solve", sp.to_str().unwrap(), "--strict"]);
    assert_eq!(code(&o), 4);
    assert_eq!(stdout(&o), "0 1 2 3 4 5 6 7\n");

    let o = eds(&["solve", sp.to_str().unwrap()]);
    assert_eq!((stdout(&o), code(&o)), ("NONE\n", 1));

    let o = eds(&["solve", sp.to_str().unwrap(), "--strict", "--permissive"]);
    assert_eq!(code(&o), 2);
}

#[test]
fn detect_patterns() {
    let dir = tempfile::tempdir().unwrap();
    let sp = write(dir.path(), "sp.g", SPIDER);
    let o = eds(&["detect", sp.to_str().unwrap(), "--pattern", "s115"]);
    assert_eq!((stdout(&o), code(&o)), ("0 1 2 3 4 5 6 7\n", 1));

    let p8 = path_file(dir.path(), 8);
    let o = eds(&["detect", p8.to_str().unwrap(), "--pattern", "p8"]);
    assert_eq!((stdout(&o), code(&o)), ("0 1 2 3 4 5 6 7\n", 1));
    let o = eds(&["detect", p8.to_str().unwrap(), "--pattern", "s115"]);
    assert_eq!((stdout(&o), code(&o)), ("FREE\n", 0));

    let p7 = path_file(dir.path(), 7);
    let o = eds(&["detect", p7.to_str().unwrap(), "--pattern", "p8"]);
    assert_eq!((stdout(&o), code(&o)), ("FREE\n", 0));

    let c6 = write(dir.path(), "c6.g", "6 6\n0 1\n1 2\n2 3\n3 4\n4 5\n5 0\n");
    let o = eds(&["detect", c6.to_str().unwrap(), "--pattern", "c6"]);
    assert_eq!((stdout(&o), code(&o)), ("0 1 2 3 4 5\n", 1));
}

#[test]
fn verify_subcommand() {
    let dir = tempfile::tempdir().unwrap();
    let p4 = path_file(dir.path(), 4);
    let f = p4.to_str().unwrap();
    let o = eds(&["verify", f, "--set", "0 3"]);
    assert_eq!((stdout(&o), code(&o)), ("VALID\n", 0));
    let o = eds(&["verify", f, "--set", "0"]);
    assert_eq!((stdout(&o), code(&o)), ("INVALID v=2 count=0\n", 1));
    let o = eds(&["verify", f, "--set", "0 1"]);
    assert_eq!((stdout(&o), code(&o)), ("INVALID v=0 count=2\n", 1));
    let o = eds(&["verify", f, "--set", "9"]);
    assert_eq!(code(&o), 2);
    let o = eds(&["verify", f, "--set", "zero"]);
    assert_eq!(code(&o), 2);
}

#[test]
fn gen_writes_the_documented_bytes() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("p4.g");
    let o = eds(&["gen", "--kind", "path", "--n", "4", "--out", out.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "");
    assert_eq!(std::fs::read_to_string(&out).unwrap(), "4 3\n0 1\n1 2\n2 3\n");
}

#[test]
fn gen_is_deterministic_per_seed() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.g");
    let b = dir.path().join("b.g");
    for out in [&a, &b] {
        let o = eds(&[
            "gen", "--kind", "s115free", "--nx", "10", "--ny", "10", "--p", "0.2",
            "--seed", "42", "--out",
            out.to_str().unwrap(),
        ]);
        assert_eq!(code(&o), 0);
    }
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    let o = eds(&["detect", a.to_str().unwrap(), "--pattern", "s115"]);
    assert_eq!((stdout(&o), code(&o)), ("FREE\n", 0));
}

#[test]
fn planted_gen_writes_a_valid_sidecar() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("pl.g");
    let o = eds(&[
        "gen", "--kind", "planted", "--nd", "6", "--spread", "5", "--extra-p", "0.1",
        "--seed", "3", "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 0);
    let side = dir.path().join("pl.g.solution");
    let planted = std::fs::read_to_string(&side).unwrap();
    assert!(planted.ends_with('\n'));
    let o = eds(&["verify", out.to_str().unwrap(), "--set", planted.trim()]);
    assert_eq!((stdout(&o), code(&o)), ("VALID\n", 0));
    let o = eds(&["solve", out.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
}

#[test]
fn operational_errors() {
    let dir = tempfile::tempdir().unwrap();
    let o = eds(&["solve", dir.path().join("missing.g").to_str().unwrap()]);
    assert_eq!(code(&o), 2);

    let bad = write(dir.path(), "bad.g", "x y\n");
    let o = eds(&["solve", bad.to_str().unwrap()]);
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("expected two integers"));

    let short = write(dir.path(), "short.g", "4 3\n0 1\n");
    let o = eds(&["solve", short.to_str().unwrap()]);
    assert_eq!(code(&o), 2);

    let tri = write(dir.path(), "tri.g", "3 3\n0 1\n1 2\n0 2\n");
    let o = eds(&["solve", tri.to_str().unwrap()]);
    assert_eq!(code(&o), 3);
    assert!(stderr(&o).contains("not bipartite"));
    let o = eds(&["oracle", tri.to_str().unwrap()]);
    assert_eq!(code(&o), 3);

    let o = eds(&["gen", "--kind", "blob", "--out", dir.path().join("z.g").to_str().unwrap()]);
    assert_eq!(code(&o), 2);
    let o = eds(&["gen", "--kind", "random", "--out", dir.path().join("z.g").to_str().unwrap()]);
    assert_eq!(code(&o), 2);
}

#[test]
fn empty_graph_has_the_empty_solution() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "e.g", "0 0\n");
    let o = eds(&["solve", f.to_str().unwrap()]);
    assert_eq!((stdout(&o), code(&o)), ("EDS 0\n\n", 0));
    let o = eds(&["oracle", f.to_str().unwrap()]);
    assert_eq!((stdout(&o), code(&o)), ("EDS 0\n\n", 0));
}

#[test]
fn compare_smoke() {
    let o = eds(&["compare", "--count", "10", "--seed", "9", "--max-n", "14"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    assert!(text.starts_with("instances 10\n"));
    assert!(text.ends_with("result PASS\n"));
    let again = eds(&["compare", "--count", "10", "--seed", "9", "--max-n", "14"]);
    assert_eq!(again.stdout, o.stdout);
}

#[test]
fn bench_smoke() {
    let o = eds(&["bench", "--seed", "1"]);
    assert_eq!(code(&o), 0);
    let lines: Vec<&str> = stdout(&o).lines().collect();
    assert_eq!(lines[0], "n\tm\tms\tk");
    assert_eq!(lines.len(), 7);
    assert!(lines[1..].iter().all(|l| l.split('\t').count() == 4));
}
