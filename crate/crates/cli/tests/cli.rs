use std::path::PathBuf;
use std::process::{Command, Output};

use codim4_cli::CommandReport;

fn codim4(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_codim4")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn temp_file(name: &str, contents: &str) -> PathBuf {
    let path = std::env::temp_dir().join(format!("codim4-cli-{}-{name}", std::process::id()));
    std::fs::write(&path, contents).unwrap();
    path
}

fn json(o: &Output) -> CommandReport {
    serde_json::from_slice(&o.stdout).expect("valid json report")
}

#[test]
fn family_output_feeds_verify() {
    for family in [&["family", "koszul", "--degrees", "1,2,1,3"][..], &["family", "pfh", "--l", "1"], &["family", "tom"]] {
        let emitted = codim4(family);
        assert!(emitted.status.success(), "{family:?}");
        let path = temp_file("family.txt", &stdout(&emitted));
        let verified = codim4(&["verify", path.to_str().unwrap()]);
        assert_eq!(verified.status.code(), Some(0), "{}", stdout(&verified));
        assert!(stdout(&verified).contains("overall: PASS"));
    }
}

#[test]
fn tom_census() {
    let tom = codim4(&["family", "tom", "--quiet"]);
    let path = temp_file("tom.txt", &stdout(&tom));
    let r = json(&codim4(&["--json", "spinors", path.to_str().unwrap(), "--census"]));
    assert_eq!(r.values["census"], serde_json::json!({"zero": 14, "monomial_times_relation": 62, "other": 52}));
}

#[test]
fn tangent_dimension_for_k_eight() {
    let r = json(&codim4(&["--json", "tangent", "--k", "8"]));
    assert!(r.passed);
    assert_eq!(r.values["tangent_dim"], 100);
}

#[test]
fn json_is_byte_stable() {
    let path = temp_file("stable.txt", &stdout(&codim4(&["family", "tom", "--quiet"])));
    let args = ["--json", "--seed", "7", "exactness", path.to_str().unwrap()];
    let first = codim4(&args);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, codim4(&args).stdout);
}

#[test]
fn parse_errors_exit_two_with_a_location() {
    let path = temp_file("bad.txt", "ring x;\nideal I : x**2;\n");
    let o = codim4(&["verify", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains(":2:13:"), "{err}");
}

#[test]
fn missing_matrices_are_usage_errors() {
    let path = temp_file("ideal.txt", "ring x y;\nideal I : x, y;\n");
    assert_eq!(codim4(&["verify", path.to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(codim4(&["tangent", "--k", "0"]).status.code(), Some(2));
    assert_eq!(codim4(&["family", "tom", "--lambda", "0"]).status.code(), Some(2));
}

#[test]
fn exhausted_budget_exits_three() {
    let path = temp_file("rolling.txt", &stdout(&codim4(&["family", "rolling", "--quiet"])));
    let o = codim4(&["--json", "--limit", "3", "resolve", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(3));
    assert!(!json(&o).passed);
}

#[test]
fn inconclusive_exactness_fails() {
    let path = temp_file("tom2.txt", &stdout(&codim4(&["family", "tom", "--quiet"])));
    let o = codim4(&["exactness", path.to_str().unwrap(), "--subsets", "2"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL codim of spinor wedge ideal"));
}

#[test]
fn rolling_resolves_and_symmetrizes() {
    let path = temp_file("rolling2.txt", &stdout(&codim4(&["family", "rolling", "--quiet"])));
    let r = json(&codim4(&["--json", "resolve", path.to_str().unwrap()]));
    assert_eq!(r.values["betti"], serde_json::json!([1, 9, 16, 9, 1]));
    let sym = codim4(&["symmetrize", path.to_str().unwrap(), "--quiet"]);
    let sym_path = temp_file("sym.txt", &stdout(&sym));
    assert_eq!(codim4(&["verify", sym_path.to_str().unwrap()]).status.code(), Some(0));
}

#[test]
fn lift_and_ogr24() {
    let path = temp_file("koszul.txt", &stdout(&codim4(&["family", "koszul"])));
    let r = json(&codim4(&["--json", "lift", path.to_str().unwrap(), "--i", "1", "--j", "4"]));
    assert!(r.passed);
    let o = codim4(&["--json", "family", "ogr24"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o).checks.len(), 5);
}
