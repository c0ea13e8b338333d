//! The `jacquet` binary end to end: output, JSON shape and exit status.

use std::process::{Command, Output};

fn jacquet(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_jacquet"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn mstar_of_a_segment() {
    let o = jacquet(&["mstar", "d[0,1]"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "1 (x) {[0,1]} + {[0,1]} (x) 1 + {[1,1]} (x) {[0,0]}");
}

#[test]
fn mstar_json_lists_terms() {
    let o = jacquet(&["--json", "mstar", "d[0,1]"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["terms"].as_array().unwrap().len(), 3);
    assert_eq!(v["twisted"], false);
}

#[test]
fn mustar_and_mult_agree() {
    let o = jacquet(&["mustar", "d[1/2] |x sigma"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("{[-1/2,-1/2]} (x) sigma"));
    let o = jacquet(&["mult", "(1/2)", "()", "d[1/2] |x sigma"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "split route 1, concatenated route 1");
}

#[test]
fn dual_of_gl_and_of_parameter() {
    assert_eq!(stdout(&jacquet(&["dual", "d[0,1]"])).trim(), "{[0,0],[1,1]} - {[0,1]}");
    let o = jacquet(&["dual", "L([2,3];d([1];sigma))", "--alpha", "1"]);
    assert_eq!(stdout(&o).trim(), "L([3],[1,2];sigma)");
}

#[test]
fn enumerate_marks_two_exceptions() {
    let o = jacquet(&["enumerate", "--alpha", "1", "--n", "2"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 8);
    assert_eq!(text.lines().filter(|l| l.starts_with("EXCEPTION")).count(), 2);
}

#[test]
fn verify_single_parameter() {
    let o = jacquet(&["--json", "verify", "--alpha", "1", "--gamma", "L([2,3],[1];sigma)"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v[0]["case"], "B");
    assert_eq!(v[0]["pass"], true);
    assert_eq!(v[0]["mult_bound"], 4);
}

#[test]
fn verify_rejects_excluded_parameter_and_bad_rank() {
    assert_eq!(
        jacquet(&["verify", "--alpha", "1", "--gamma", "d([1,3];sigma)"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(jacquet(&["verify", "--alpha", "1", "--n", "9"]).status.code(), Some(2));
    assert_eq!(jacquet(&["mstar", "d[0,"]).status.code(), Some(2));
}

#[test]
fn sweep_writes_report_tree() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().to_str().unwrap();
    let o = jacquet(&["--sequential", "sweep", "--alphas", "1", "--ns", "1,2", "--out", out]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(stdout(&o).lines().count(), 2);
    assert!(dir.path().join("alpha_1_n_2/summary.json").is_file());
    assert!(dir.path().join("alpha_1_n_2/gamma_005.json").is_file());
}
