use std::path::PathBuf;
use std::process::{Command, Output};

fn biperm(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_biperm")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

/// Body lines after the header comment.
fn body(o: &Output) -> Vec<String> {
    stdout(o).lines().filter(|l| !l.starts_with('#')).map(str::to_string).collect()
}

fn temp_file(name: &str, contents: &str) -> PathBuf {
    let path = std::env::temp_dir().join(format!("biperm-cli-{}-{name}", std::process::id()));
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn bieulerian_by_every_method() {
    for method in ["descents", "h-from-f", "ehrhart"] {
        let o = biperm(&["bieulerian", "--n", "4", "--method", method]);
        assert!(o.status.success());
        assert_eq!(body(&o), ["1,72,603,1168,603,72,1"], "{method}");
    }
}

#[test]
fn polynomial_json_schema() {
    let o = biperm(&["bieulerian", "--n", "4", "--format", "json", "--seed", "5"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["n"], 4);
    assert_eq!(v["coeffs"], serde_json::json!(["1", "72", "603", "1168", "603", "72", "1"]));
    assert_eq!(v["seed"], "5");
    assert_eq!(v["version"], env!("CARGO_PKG_VERSION"));
}

#[test]
fn face_vectors() {
    let o = biperm(&["fvector", "--n", "4", "--object", "polytope"]);
    assert_eq!(body(&o), ["1,2520,7560,8460,4320,978,78,1"]);
    let o = biperm(&["fvector", "--n", "3", "--object", "polytope", "--method", "bruteforce"]);
    assert_eq!(body(&o), ["1,90,180,114,24,1"]);
    let o = biperm(&["fvector", "--n", "2"]);
    assert_eq!(body(&o), ["1,6,6"]);
    let o = biperm(&["hvector", "--n", "3"]);
    assert_eq!(body(&o), ["1,20,48,20,1"]);
}

#[test]
fn quotient_is_two() {
    for n in ["2", "3", "4"] {
        let o = biperm(&["quotient", "--n", n]);
        assert!(o.status.success());
        assert_eq!(body(&o), ["2"], "n = {n}");
    }
}

#[test]
fn quotient_failures_exit_one() {
    let o = biperm(&["quotient", "--n", "3", "--p", "harmonic", "--q", "biperm"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(body(&o), ["0"]);
    let o = biperm(&["quotient", "--n", "3", "--p", "zero", "--q", "zero"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn vertices_and_facets_dump() {
    let o = biperm(&["vertices", "--n", "2", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["vertices"].as_array().unwrap().len(), 6);
    let o = biperm(&["facets", "--n", "2", "--format", "csv"]);
    assert_eq!(body(&o).len(), 1 + 6);
    assert_eq!(body(&o)[0], "S;T;rhs");
}

#[test]
fn nef_check_reads_support_files() {
    // The hexagon's support function, one line per bisubset of {1,2}.
    let pi = "# S;T;value\n1;2;-3\n2;1;-3\n1;1,2;-8/2\n2;1,2;-4\n1,2;1;-4\n1,2;2;-4\n";
    let o = biperm(&["nef-check", "--n", "2", "--support", temp_file("pi.csv", pi).to_str().unwrap()]);
    assert!(o.status.success(), "{}", stdout(&o));
    assert!(stdout(&o).contains("ample: true"));

    let bad = pi.replace("1;2;-3", "1;2;5");
    let o = biperm(&["nef-check", "--n", "2", "--support", temp_file("bad.csv", &bad).to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("violated wall-crossing inequality"));

    let missing = "1;2;-3\n";
    let o = biperm(&["nef-check", "--n", "2", "--support", temp_file("short.csv", missing).to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let o = biperm(&["nef-check", "--n", "2", "--support", "/nonexistent/file.csv"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn malformed_input_exits_two() {
    assert_eq!(biperm(&["fvector", "--n", "0"]).status.code(), Some(2));
    assert_eq!(biperm(&["fvector"]).status.code(), Some(2));
    assert_eq!(biperm(&["check", "--suite", "nonsense"]).status.code(), Some(2));
}

#[test]
fn check_suites_pass_and_repeat_exactly() {
    let args = ["check", "--suite", "all", "--n", "3", "--seed", "11", "--samples", "200", "--format", "json"];
    let (a, b) = (biperm(&args), biperm(&args));
    assert!(a.status.success(), "{}", stdout(&a));
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_str(&stdout(&a)).unwrap();
    assert_eq!(v["passed"], true);
    assert_eq!(v["seed"], "11");
}

#[test]
fn thread_cap_does_not_change_output() {
    let args = ["check", "--suite", "triangulation", "--n", "2", "--seed", "3"];
    let one = Command::new(env!("CARGO_BIN_EXE_biperm")).args(args).env("BIPERM_THREADS", "1").output().unwrap();
    let two = biperm(&[&args[..], &["--threads", "2"]].concat());
    assert!(one.status.success());
    assert_eq!(one.stdout, two.stdout);
}
