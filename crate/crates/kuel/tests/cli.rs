use std::io::Write;
use std::process::{Command, Output};

use serde_json::Value;

fn kuel(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kuel")).args(args).output().expect("kuel runs")
}

fn json(out: &Output) -> Value {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

#[test]
fn report_registry_instance() {
    let v = json(&kuel(&["report", "Ln[n=3,j=0]", "--field", "p=2"]));
    assert_eq!(v["name"], "Ln[n=3,j=0]");
    let tower = v["tower"].as_array().unwrap();
    assert!(tower.len() >= 2);
    assert_eq!(tower[0]["n"], 0);
    let dims: Vec<u64> = tower.iter().map(|l| l["dim_Tn"].as_u64().unwrap()).collect();
    assert!(dims.windows(2).all(|w| w[0] <= w[1]));
}

#[test]
fn report_dual_numbers_from_file() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    write!(
        f,
        r#"{{"field": {{"p": 2}}, "dim": 2, "labels": ["1", "x"], "unit": [1, 0],
            "structure": [[0, 0, 0, 1], [0, 1, 1, 1], [1, 0, 1, 1]]}}"#
    )
    .unwrap();
    let v = json(&kuel(&["report", f.path().to_str().unwrap()]));
    assert_eq!(v["dims"]["A"], 2);
    assert_eq!(v["dims"]["Z"], 2);
    assert_eq!(v["dims"]["rad"], 1);
    // x^2 = 0 in characteristic 2, so T_1 = A and T_1^perp = soc
    assert_eq!(v["tower"][1]["dim_Tn_perp"], 1);
}

#[test]
fn invalid_parameters_exit_2() {
    let out = kuel(&["report", "Ln[n=3,j=3]", "--field", "p=2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("j < n"));
}

#[test]
fn compare_with_itself_is_isomorphic() {
    let v = json(&kuel(&["compare", "Ln[n=3,j=1]", "Ln[n=3,j=1]", "--field", "p=2"]));
    assert_eq!(v["verdict"], "isomorphic");
}

#[test]
fn compare_follows_tower_formula() {
    // the closed formula gives T_i dims 2, 3 for both j = 0 and j = 1 at n = 3
    let v = json(&kuel(&["compare", "Ln[n=3,j=0]", "Ln[n=3,j=1]", "--field", "p=2"]));
    assert_eq!(v["verdict"], "not_distinguished");
    assert!(v["agreeing"].as_array().unwrap().iter().any(|a| a == "dim T_1/[A,A]"));
    // j = 2 gives 3 at i = 1
    let v = json(&kuel(&["compare", "Ln[n=3,j=0]", "Ln[n=3,j=2]", "--field", "p=2"]));
    assert_eq!(v["verdict"], "distinguished");
    assert_eq!(v["invariant"], "stabilization index");
}

#[test]
fn selftest_filter() {
    let out = kuel(&["selftest", "--filter", "ln-formula"]);
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 2);
    assert!(lines[0].starts_with("PASS  1 ln-formula"));
    assert_eq!(lines[1], "1 passed, 0 failed");
}

#[test]
fn output_is_deterministic() {
    let args = ["sweep", "Ln", "--grid", "n=2..3", "--grid", "j=0..2", "--field", "p=2", "--jobs", "4"];
    let (a, b) = (kuel(&args), kuel(&args));
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let v: Value = serde_json::from_slice(&a.stdout).unwrap();
    let cells = v.as_array().unwrap();
    assert_eq!(cells.len(), 6);
    assert!(cells[2]["error"].is_string());
    assert!(cells[3]["report"].is_object());
}

#[test]
fn usage_errors_exit_1() {
    assert_eq!(kuel(&["report"]).status.code(), Some(1));
    assert_eq!(kuel(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(kuel(&["build"]).status.code(), Some(1));
    assert_eq!(kuel(&["--help"]).status.code(), Some(0));
}

#[test]
fn table_output_and_family_listing() {
    let out = kuel(&["report", "Nil[n=2]", "--field", "p=3", "--out", "table"]);
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stdout).starts_with("Nil[n=2] over"));
    let v = json(&kuel(&["build", "--list-families"]));
    assert!(v.as_array().unwrap().iter().any(|f| f["name"] == "Ln"));
}
