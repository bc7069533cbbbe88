use std::process::{Command, Output};

use serde_json::Value;

fn ptheta(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ptheta")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn coeffs_text() {
    let o = ptheta(&["coeffs", "--b", "1", "--order", "4"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().next(), Some("1 1 1 2 5"));
}

#[test]
fn coeffs_json_schema() {
    let o = ptheta(&["coeffs", "--b", "3", "--order", "12", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["b"], 3);
    assert_eq!(v["order"], 12);
    assert_eq!(v["a"].as_array().unwrap().len(), 13);
    assert_eq!(v["a"][1], "3/1");
    assert_eq!(v["stable_sign"], -1);
    assert_eq!(v["sign_cutoff"], 3);
}

#[test]
fn coeffs_csv() {
    let o = ptheta(&["coeffs", "--b", "2", "--order", "3", "--format", "csv"]);
    assert_eq!(stdout(&o), "b,n,a_n\n2,0,1/1\n2,1,2/1\n2,2,2/1\n2,3,2/1\n");
}

#[test]
fn bad_arguments_exit_2() {
    assert_eq!(ptheta(&["coeffs", "--b", "0"]).status.code(), Some(2));
    assert_eq!(ptheta(&["coeffs", "--b", "x"]).status.code(), Some(2));
    assert_eq!(ptheta(&["verify", "involutions", "--order", "9"]).status.code(), Some(2));
    assert_eq!(ptheta(&["eval", "--b", "1", "--t", "2"]).status.code(), Some(2));
    assert_eq!(ptheta(&["nonsense"]).status.code(), Some(2));
}

#[test]
fn short_sign_tail_is_undetermined() {
    let o = ptheta(&["verify", "signs", "--order", "3"]);
    assert_eq!(o.status.code(), Some(3));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["suite"], "signs");
}

#[test]
fn suites_pass() {
    for suite in ["recursion", "eta-identity", "signs", "integrality", "involutions"] {
        let o = ptheta(&["verify", suite]);
        assert_eq!(o.status.code(), Some(0), "{suite}: {}", stdout(&o));
        let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
        assert_eq!(v["schema_version"], 1);
        assert_eq!(v["status"], "ok");
    }
}

#[test]
fn oracle_suite_passes() {
    let o = ptheta(&["verify", "oracles", "--b-max", "2", "--order", "4"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn output_is_deterministic() {
    let a = ptheta(&["verify", "recursion", "--b-max", "6", "--order", "80"]);
    let b = ptheta(&["verify", "recursion", "--b-max", "6", "--order", "80"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn out_flag_writes_file() {
    let dir = std::env::temp_dir().join(format!("ptheta-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("z.csv");
    let o = ptheta(&["zigzag", "--order", "6", "--format", "csv", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    assert!(written.contains("61"), "{written}");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn eval_and_eta_check() {
    let o = ptheta(&["eval", "--b", "1", "--t", "1/2", "--digits", "8"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("1.7805175"), "{}", stdout(&o));
    assert_eq!(ptheta(&["eta-check"]).status.code(), Some(0));
    assert_eq!(ptheta(&["eta-check", "--precision-bits", "64"]).status.code(), Some(3));
}
