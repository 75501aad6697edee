use std::process::{Command, Output};

use serde_json::Value;

fn sievelab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sievelab"))
        .args(args)
        .env("SIEVELAB_SEED", "11")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn passing_suite_exits_zero_with_json_report() {
    let o = sievelab(&["verify", "even-dihedral", "--n", "4", "--kmax", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let report: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let rows = report.as_array().unwrap();
    assert_eq!(rows.len(), 8 * 4);
    assert!(rows.iter().all(|r| r["status"] == "pass" && r["witness"].is_null()));
}

#[test]
fn failing_suite_exits_one_and_prints_witnesses() {
    let o = sievelab(&["verify", "raney", "--pmax", "2", "--rmax", "2", "--kmax", "1"]);
    assert_eq!(o.status.code(), Some(1));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("FAIL") && err.contains("raney/root/p=2/r=2/k=1"), "{err}");
}

#[test]
fn usage_and_domain_errors_exit_two() {
    assert_eq!(sievelab(&["verify", "bogus"]).status.code(), Some(2));
    assert_eq!(sievelab(&["verify", "type-a", "--s", "2", "--m", "3"]).status.code(), Some(2));
    assert_eq!(sievelab(&["verify", "cluster", "--type", "E", "--rank", "8"]).status.code(), Some(2));
    assert_eq!(sievelab(&["enumerate", "dissections", "--n", "6", "--k", "5"]).status.code(), Some(2));
}

#[test]
fn csv_reports_are_deterministic() {
    let args = ["verify", "cluster", "--type", "A", "--rank", "3", "--format", "csv"];
    let first = stdout(&sievelab(&args));
    assert_eq!(first, stdout(&sievelab(&args)));
    assert!(first.starts_with("check_id,family,"));
    let algebra = ["verify", "algebra", "--trials", "5"];
    assert_eq!(stdout(&sievelab(&algebra)), stdout(&sievelab(&algebra)));
}

#[test]
fn enumerations() {
    let coral = stdout(&sievelab(&["enumerate", "coral", "--p", "4", "--r", "2", "--k", "1"]));
    assert_eq!(coral, "(o (o o o o))\n((o o o o) o)\n");
    let triangulations = stdout(&sievelab(&["enumerate", "dissections", "--n", "6", "--k", "3"]));
    assert_eq!(triangulations.lines().count(), 14);
    let facets = stdout(&sievelab(&["enumerate", "facets", "--type", "B", "--rank", "3"]));
    assert_eq!(facets.lines().count(), 20);
    let ideals = stdout(&sievelab(&["enumerate", "ideals", "--type", "I", "--rank", "5"]));
    assert_eq!(ideals.lines().count(), 7);
    let roots: Value = serde_json::from_str(&stdout(&sievelab(&["enumerate", "roots-json", "--type", "D", "--rank", "4"]))).unwrap();
    assert_eq!(roots["coxeter_number"], 6);
    assert_eq!(roots["roots"].as_array().unwrap().len(), 16);
}

#[test]
fn census_lists_every_group_element() {
    let o = sievelab(&["census", "--n", "7", "--k", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 15);
    assert!(text.lines().nth(1).unwrap().ends_with(",42"));
}
