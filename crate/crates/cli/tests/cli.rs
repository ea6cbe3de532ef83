use std::path::PathBuf;
use std::process::{Command, Output};

const P: &str = "a :- not b, not c.\nb :- not a, not c.\nc.\n";
const Q: &str = "a :- not b, not c.\nb :- not c.\nc.\n";

fn file(test: &str, name: &str, text: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(test);
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path
}

fn lpaf(args: &[&str], files: &[&PathBuf]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lpaf"))
        .args(args)
        .args(files.iter().map(|f| f.as_os_str()))
        .output()
        .unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn solve_prints_answer_sets() {
    let p = file("solve", "p.lp", "a :- not b.\nb :- not a.\n");
    let out = lpaf(&["solve"], &[&p]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "{a}\n{b}\n");
    let json: serde_json::Value = serde_json::from_slice(&lpaf(&["--json", "solve"], &[&p]).stdout).unwrap();
    assert_eq!(json, serde_json::json!([["a"], ["b"]]));
}

#[test]
fn solve_frameworks() {
    let f = file("solve_af", "f.af", "arg(a). arg(b). att(a,b). att(b,a).\n");
    assert_eq!(stdout(&lpaf(&["solve"], &[&f])), "{a}\n{b}\n");
    let c = file("solve_af", "c.caf", "carg(x1,a). carg(x2,b). catt(a,x2).\n");
    assert_eq!(stdout(&lpaf(&["solve"], &[&c])), "{a}\n");
}

#[test]
fn se_exit_codes_follow_the_verdict() {
    let (p, q) = (file("se", "p.lp", P), file("se", "q.lp", Q));
    assert_eq!(lpaf(&["se", "--mode", "standard"], &[&p, &q]).status.code(), Some(0));
    assert_eq!(lpaf(&["se", "--mode", "rr-head"], &[&p, &q]).status.code(), Some(1));
    assert_eq!(lpaf(&["se", "--mode", "af"], &[&p, &q]).status.code(), Some(1));
    assert_eq!(lpaf(&["se", "--mode", "rr-head"], &[&p, &p]).status.code(), Some(0));
    let out = lpaf(&["--json", "se", "--mode", "rr-head"], &[&p, &q]);
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(json["equivalent"], false);
    assert_eq!(json["witness"]["kind"], "program_kernel_diff");
}

#[test]
fn oracle_reports_a_separating_update() {
    let (p, q) = (file("oracle", "p.lp", P), file("oracle", "q.lp", Q));
    let out = lpaf(&["oracle", "--mode", "head"], &[&p, &q]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("c :- not a."));
    let out = lpaf(&["oracle", "--mode", "union", "--fresh-atoms", "1"], &[&p, &q]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn translate_and_update() {
    let p = file("translate", "p.lp", P);
    let out = lpaf(&["translate", "--to", "af"], &[&p]);
    assert_eq!(out.status.code(), Some(0));
    let af = file("translate", "p.af", &stdout(&out));
    let back = lpaf(&["translate", "--to", "lp"], &[&af]);
    let round = file("translate", "back.lp", &stdout(&back));
    assert_eq!(lpaf(&["se", "--mode", "rr-head"], &[&p, &round]).status.code(), Some(0));

    let delta = file("translate", "d.lp", "c :- not a.\n");
    let out = lpaf(
        &[
            "update",
            "--mode",
            "head",
            "--base",
            p.to_str().unwrap(),
            "--delta",
            delta.to_str().unwrap(),
        ],
        &[],
    );
    assert_eq!(out.status.code(), Some(0));
    let updated = file("translate", "u.lp", &stdout(&out));
    assert_eq!(stdout(&lpaf(&["solve"], &[&updated])), "{a}\n{c}\n");
}

#[test]
fn kernel_and_check() {
    let p = file("kernel", "p.lp", "a :- not a, not b.\nb :- not a, not c.\n");
    let out = lpaf(&["kernel"], &[&p]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "1: a :- not a, not b.\n2: b :- not c.\n");
    let out = lpaf(&["kernel", "--check"], &[&p]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    let dup = file("kernel", "dup.lp", "1: a :- not b.\n2: b.\n3: b :- not b.\n");
    assert_eq!(lpaf(&["kernel"], &[&dup]).status.code(), Some(2));
}

#[test]
fn input_errors_exit_with_two() {
    let bad = file("errors", "bad.lp", "a :- \n");
    let out = lpaf(&["solve"], &[&bad]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.starts_with("error: ") && err.contains("line 2, column 1"), "{err}");
    let missing = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("does-not-exist.lp");
    assert_eq!(lpaf(&["solve"], &[&missing]).status.code(), Some(2));
    let f = file("errors", "f.af", "arg(a).\n");
    let p = file("errors", "p.lp", "a.\n");
    assert_eq!(lpaf(&["se", "--mode", "standard"], &[&f, &p]).status.code(), Some(2));
}

#[test]
fn generation_is_reproducible_and_parses() {
    for kind in ["lp", "af", "caf"] {
        let args = ["gen", "--kind", kind, "--size", "5", "--seed", "42", "--density", "0.4"];
        let (a, b) = (lpaf(&args, &[]), lpaf(&args, &[]));
        assert_eq!(a.status.code(), Some(0));
        assert_eq!(a.stdout, b.stdout);
        let f = file("gen", &format!("g.{kind}"), &stdout(&a));
        assert_eq!(lpaf(&["solve"], &[&f]).status.code(), Some(0));
    }
    let args = [
        "gen",
        "--kind",
        "lp",
        "--size",
        "4",
        "--seed",
        "3",
        "--class",
        "atomic,h-unique",
    ];
    let p = file("gen", "xi.lp", &stdout(&lpaf(&args, &[])));
    assert_eq!(lpaf(&["se", "--mode", "rr-head"], &[&p, &p]).status.code(), Some(0));
}

#[test]
fn output_is_byte_stable() {
    let p = file("stable", "p.lp", P);
    let q = file("stable", "q.lp", Q);
    for args in [&["oracle", "--mode", "head"][..], &["--json", "se", "--mode", "rr-id"]] {
        assert_eq!(lpaf(args, &[&p, &q]).stdout, lpaf(args, &[&p, &q]).stdout);
    }
}
