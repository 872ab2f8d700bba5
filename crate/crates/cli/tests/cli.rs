use std::path::{Path, PathBuf};
use std::process::Command;

fn gsmod(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_gsmod"))
        .args(args)
        .output()
        .unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn sl2_file() -> String {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../../data/sl2.gs")
        .to_string_lossy()
        .into_owned()
}

fn write(dir: &tempfile::TempDir, name: &str, text: &str) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, text).unwrap();
    path
}

#[test]
fn check_sl2_is_gsb() {
    let (code, out, _) = gsmod(&["check", &sl2_file()]);
    assert_eq!(code, 0);
    assert!(out.starts_with("mode: pair\n"));
    assert!(
        out.ends_with("GSB: yes; compositions checked: 4; all trivial\n"),
        "{out}"
    );
}

#[test]
fn basis_sl2_matches_oracle() {
    let (code, out, _) = gsmod(&["basis", &sl2_file(), "--max-deg", "10", "--oracle"]);
    assert_eq!(code, 0);
    assert!(out.contains("total: 4\n"));
    assert!(out.contains("oracle: 1 1 1 1 0 0 0 0 0 0 0\n"));
    assert!(out.ends_with("oracle agreement: agree\n"));
    for m in ["v0", "y*v0", "y*y*v0", "y*y*y*v0"] {
        assert!(out.contains(&format!("  {m}\n")), "{m}");
    }
}

#[test]
fn oracle_budget_is_enforced() {
    let (code, _, err) = gsmod(&[
        "basis",
        &sl2_file(),
        "--max-deg",
        "6",
        "--oracle",
        "--budget",
        "100",
    ]);
    assert_eq!(code, 2);
    assert!(err.contains("budget"));
}

#[test]
fn normal_form_of_h_y_v0() {
    let (code, out, _) = gsmod(&["nf", &sl2_file(), "--expr", "h*y*v0"]);
    assert_eq!((code, out.as_str()), (0, "1*y*v0\n"));
    let (_, out, _) = gsmod(&["nf", &sl2_file(), "--expr", "x*y*y*v0"]);
    assert_eq!(out, "4*y*v0\n");
    let (_, out, _) = gsmod(&["nf", &sl2_file(), "--expr", "[x,y]"]);
    assert_eq!(out, "1*h\n");
}

#[test]
fn parse_errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let zero = write(
        &dir,
        "zero.gs",
        "algebra-generators: x > y\nrelation: x*y - x*y\n",
    );
    let (code, _, err) = gsmod(&["check", zero.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(err.contains("zero relation"), "{err}");
    let undeclared = write(&dir, "z.gs", "algebra-generators: x > y\nrelation: x*z\n");
    let (code, _, err) = gsmod(&["check", undeclared.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(err.contains("`z`") || err.contains(" z"), "{err}");
    let (code, _, _) = gsmod(&["check"]);
    assert_eq!(code, 2);
    let (code, _, _) = gsmod(&["nf", &sl2_file(), "--expr", "q*v0"]);
    assert_eq!(code, 2);
}

#[test]
fn complete_reports_status() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(
        &dir,
        "xx.gs",
        "algebra-generators: x > y\nrelation: x*x - y\n",
    );
    let (code, out, _) = gsmod(&["complete", f.to_str().unwrap(), "--max-deg", "5"]);
    assert_eq!(code, 0, "{out}");
    assert!(
        out.contains("added r1: 1*x*y - 1*y*x <- intersection w=x*x*x f=r0 g=r0\n"),
        "{out}"
    );
    assert!(out.contains("status: closed\n"));
    let g = write(
        &dir,
        "xyx.gs",
        "algebra-generators: x > y\nrelation: x*y*x - y\n",
    );
    let (code, out, _) = gsmod(&["complete", g.to_str().unwrap(), "--max-deg", "3"]);
    assert_eq!(code, 1);
    assert!(out.contains("over cap: 1\n"), "{out}");
    assert!(out.ends_with("completion: degree-capped\n"), "{out}");
    let (code, _, _) = gsmod(&["check", f.to_str().unwrap()]);
    assert_eq!(code, 1);
}

#[test]
fn sl2_with_wrong_weight_is_not_gsb() {
    let (code, out, _) = gsmod(&["example", "sl2", "--m", "2", "--lambda", "5"]);
    assert_eq!(code, 1);
    assert!(out.contains("nontrivial: 1"));
}

#[test]
fn emitted_examples_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let cases: [&[&str]; 6] = [
        &["example", "sl2", "--m", "3", "--lambda", "5/3", "--emit"],
        &["example", "kac-moody", "--type", "B2", "--emit"],
        &["example", "negative", "--type", "A3", "--emit"],
        &[
            "example",
            "verma",
            "--type",
            "A2",
            "--weights",
            "1,-2",
            "--emit",
        ],
        &[
            "example",
            "conformal",
            "--symbols",
            "a,b",
            "--locality",
            "2",
            "--lo",
            "-3",
            "--hi",
            "2",
            "--emit",
        ],
        &["example", "conformal", "--verma", "--emit"],
    ];
    for (i, args) in cases.iter().enumerate() {
        let (code, text, err) = gsmod(args);
        assert_eq!(code, 0, "{args:?}: {err}");
        let path = write(&dir, &format!("e{i}.gs"), &text);
        let (code, _, err) = gsmod(&["check", path.to_str().unwrap()]);
        assert!(code == 0 || code == 1, "{args:?}: {err}");
        let again = write(&dir, &format!("e{i}b.gs"), &text);
        let (_, a, _) = gsmod(&["basis", path.to_str().unwrap(), "--max-deg", "2"]);
        let (_, b, _) = gsmod(&["basis", again.to_str().unwrap(), "--max-deg", "2"]);
        assert_eq!(a, b);
    }
}

#[test]
fn example_checks_match_file_checks() {
    let dir = tempfile::tempdir().unwrap();
    let (_, text, _) = gsmod(&["example", "sl2", "--emit"]);
    let path = write(&dir, "sl2.gs", &text);
    let (code, from_file, _) = gsmod(&["check", path.to_str().unwrap()]);
    let (_, from_example, _) = gsmod(&["example", "sl2"]);
    assert_eq!(code, 0);
    assert!(from_example.ends_with(&from_file));
}

#[test]
fn reports_are_deterministic() {
    let args = ["example", "verma", "--weights", "1,1"];
    let first = gsmod(&args);
    assert_eq!(first.0, 0, "{}", first.2);
    for _ in 0..3 {
        assert_eq!(gsmod(&args), first);
    }
    let c = [
        "complete",
        &sl2_file(),
        "--max-deg",
        "6",
        "--mode",
        "module",
    ];
    assert_eq!(gsmod(&c), gsmod(&c));
}
