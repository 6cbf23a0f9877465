use std::path::Path;
use std::process::{Command, Output};

const SEVEN: &str = "1^+1 2^-1 3^+1 7^+1 6^+1 4^-1 5^+1";

fn linearr(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_linearr")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn triangles_by_every_method_agree_on_seven_lines() {
    let want = "1 2 3\n1 2 4\n1 6 7\n2 3 7\n5 6 7\n";
    for method in ["thmB", "oracle"] {
        let o = linearr(&["triangles", "--nomenclature", SEVEN, "--method", method]);
        assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
        assert_eq!(stdout(&o), want);
    }
}

#[test]
fn triangles_from_a_cycle() {
    let o = linearr(&["triangles", "--cycle", "(1 2 4 3)", "--method", "thmA"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "1 2 3\n1 2 4\n");
    let o = linearr(&["triangles", "--cycle", "(1 2 4 3)", "--method", "oracle"]);
    assert_eq!(stdout(&o), "1 2 3\n1 2 4\n");
}

#[test]
fn census_counts_and_lists() {
    let o = linearr(&["census", "-n", "4", "--list"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 5);
    assert!(lines.contains(&"(1 2 4 3)"));
    assert_eq!(lines[4], "valid cycles: 4 (formula 2^{n-1}-n = 4)");
}

#[test]
fn infinity_line_exit_codes() {
    let yes = "1^+1 2^-1 5^+1 3^+1 4^-1 6^+1";
    let no = "1^+1 2^-1 5^+1 3^+1 6^+1 4^-1";
    for method in ["symbolic", "geometric"] {
        let o = linearr(&["infinity-line", "--nomenclature", yes, "--line", "6", "--method", method]);
        assert_eq!((o.status.code(), stdout(&o).as_str()), (Some(0), "true\n"));
        let o = linearr(&["infinity-line", "--nomenclature", no, "--line", "6", "--method", method]);
        assert_eq!((o.status.code(), stdout(&o).as_str()), (Some(1), "false\n"));
    }
    let o = linearr(&["infinity-line", "--nomenclature", yes, "--line", "4"]);
    assert_eq!((o.status.code(), stdout(&o).as_str()), (Some(1), "false\n"));
    let o = linearr(&["infinity-line", "--nomenclature", yes, "--line", "9"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("unknown-line"));
}

#[test]
fn realize_analyze_render() {
    let dir = tempfile::tempdir().unwrap();
    let arr = dir.path().join("seven.arr");
    let svg = dir.path().join("seven.svg");
    let o = linearr(&["realize", "--nomenclature", SEVEN, "-o", path(&arr)]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(std::fs::read_to_string(&arr).unwrap().starts_with("arr v1 n=7\n"));

    let o = linearr(&["analyze", path(&arr)]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let out = stdout(&o);
    assert!(out.contains("lines: 7"));
    assert!(out.contains("corner points: {3,4} {4,5} {5,6}"));
    assert!(out.contains("triangles (thmB): same"));

    let o = linearr(&["triangles", path(&arr), "--method", "thmB"]);
    assert_eq!(stdout(&o), "1 2 3\n1 2 4\n1 6 7\n2 3 7\n5 6 7\n");

    let o = linearr(&["render", path(&arr), "-o", path(&svg), "--padding", "1/2"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let text = std::fs::read_to_string(&svg).unwrap();
    assert!(text.starts_with("<svg"));
    assert_eq!(text.matches("<line ").count(), 7);
    assert_eq!(text.matches("<polygon ").count(), 5);
}

#[test]
fn realize_cycle_to_stdout() {
    let o = linearr(&["realize", "--cycle", "(1 3 4 2 5)"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let arr = linearr::io::parse_arr(&text).unwrap();
    assert_eq!(linearr::cyclicity::detect_gonality_cycle(&arr).unwrap().to_string(), "(1 3 4 2 5)");
}

#[test]
fn fuzz_json_report() {
    let args = ["fuzz", "--family", "cyclic", "--trials", "20", "--n-min", "4", "--n-max", "7", "--seed", "5", "--json"];
    let a = linearr(&args);
    assert_eq!(a.status.code(), Some(0), "{}", stderr(&a));
    let report = linearr::fuzz::FuzzReport::from_json(stdout(&a).trim()).unwrap();
    assert_eq!(report.trials, 20);
    assert!(report.is_clean());
    assert_eq!(a.stdout, linearr(&args).stdout);
}

#[test]
fn invalid_input_exits_two() {
    let o = linearr(&["triangles", "--nomenclature", "1^+1 2^+2 3^+1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("bad-token"));
    let o = linearr(&["triangles", "--cycle", "(1 2 3 4)", "--method", "thmA"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("invalid-cycle"));
    let o = linearr(&["census", "-n", "2"]);
    assert_eq!(o.status.code(), Some(2));
    let o = linearr(&["analyze", "/nonexistent/file.arr"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn file_errors_are_reported_with_codes() {
    let dir = tempfile::tempdir().unwrap();
    let swapped = dir.path().join("swapped.arr");
    std::fs::write(&swapped, "arr v1 n=3\n1 1 0 1\n2 1 -1 0\n3 1 1 3\n").unwrap();
    let o = linearr(&["analyze", path(&swapped)]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("id-order-mismatch"), "{}", stderr(&o));

    let parallel = dir.path().join("parallel.arr");
    std::fs::write(&parallel, "arr v1 n=3\n1 1 -1 0\n2 1 0 1\n3 2 -2 5\n").unwrap();
    let o = linearr(&["analyze", path(&parallel)]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("parallel-lines"), "{}", stderr(&o));

    let garbage = dir.path().join("garbage.arr");
    std::fs::write(&garbage, "arr v1 n=3\n1 1 -1 0\n2 1 0 0.5\n3 1 1 3\n").unwrap();
    let o = linearr(&["analyze", path(&garbage)]);
    assert!(stderr(&o).contains("bad-file: line 3"), "{}", stderr(&o));
}

#[test]
fn thm_a_without_a_cycle_exits_one() {
    // not every line bounds a common face
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("a.arr");
    let nom_arr = linearr(&["realize", "--nomenclature", SEVEN]);
    std::fs::write(&f, &nom_arr.stdout).unwrap();
    let o = linearr(&["triangles", path(&f), "--method", "thmA"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("no gonality cycle"));
}
