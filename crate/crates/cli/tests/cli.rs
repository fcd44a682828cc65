use std::path::PathBuf;
use std::process::{Command, Output};

use qalg_core::VerificationReport;

fn qalg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qalg")).args(args).output().unwrap()
}

fn file(dir: &tempfile::TempDir, name: &str, body: &str) -> PathBuf {
    let p = dir.path().join(name);
    std::fs::write(&p, body).unwrap();
    p
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn closure_prints_faces() {
    let dir = tempfile::tempdir().unwrap();
    let p = file(&dir, "p.json", r#"{"n":3,"facets":[[1,2],[2,3]]}"#);
    let o = qalg(&["closure", "--complex", p.to_str().unwrap()]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "{\"schema\":1,\"n\":3,\"dimension\":1,\"faces\":[[1],[2],[3],[1,2],[2,3]]}\n");
    let e = file(&dir, "e.json", r#"{"n":2,"facets":[]}"#);
    assert_eq!(
        stdout(&qalg(&["closure", "--complex", e.to_str().unwrap()])),
        "{\"schema\":1,\"n\":2,\"dimension\":0,\"faces\":[[1],[2]]}\n"
    );
}

#[test]
fn membership_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let p = file(&dir, "p.json", r#"{"n":3,"facets":[[1,2],[2,3]]}"#);
    let path = p.to_str().unwrap();
    let o = qalg(&["membership", "--complex", path, "--poly", "[u({1}),u({3})] + u({1,3})", "--max-degree", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "member\nremainder: 0\n");
    let o = qalg(&["membership", "--complex", path, "--poly", "[u({1,2}),u({3})]", "--max-degree", "2"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("non-member\nremainder: "));
    let o = qalg(&["membership", "--complex", path, "--poly", "u({1})*u({2})*u({3})", "--max-degree", "2"]);
    assert_eq!(o.status.code(), Some(2));
    let o = qalg(&["membership", "--complex", path, "--poly", "u({1}) +", "--max-degree", "2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("--poly: parse error"));
}

#[test]
fn graph_presentation_needs_a_graph() {
    let dir = tempfile::tempdir().unwrap();
    let t = file(&dir, "t.json", r#"{"n":3,"facets":[[1,2,3]]}"#);
    let o = qalg(&["hilbert", "--complex", t.to_str().unwrap(), "--max-degree", "1", "--presentation", "graph"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("dimension 2"));
    let o = qalg(&["hilbert", "--complex", t.to_str().unwrap(), "--max-degree", "1"]);
    assert_eq!(stdout(&o), "{\"schema\":1,\"label\":\"Q(F) n=3 facets=[[1,2,3]]\",\"dims\":[1,7]}\n");
}

#[test]
fn relations_listing() {
    let o = qalg(&["relations", "--family", "9", "--n", "2", "--A", "", "--B", "", "--i", "1", "--j", "2"]);
    assert_eq!(stdout(&o), "u({1})*u({2}) - u({2})*u({1})\n");
    let o = qalg(&["relations", "--family", "1", "--n", "2"]);
    let lines: Vec<String> = stdout(&o).lines().map(String::from).collect();
    assert_eq!(lines.len(), 2);
    assert!(lines[0].starts_with("A={} i=1 j=2: "));
    let o = qalg(&["relations", "--family", "5", "--n", "3", "--A", "1", "--i", "1", "--j", "2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("index 1 must not lie in {1}"));
}

#[test]
fn verify_json_round_trips_and_is_deterministic() {
    let args = ["verify", "--n", "3", "--checks", "corollary,theorem,proposition", "--format", "json"];
    let a = qalg(&args);
    let b = qalg(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let report = VerificationReport::from_json(stdout(&a).trim()).unwrap();
    assert!(report.pass);
    assert_eq!(report.entries.len(), 3);
    assert_eq!(report.to_json(), stdout(&a).trim());
}

#[test]
fn verify_reports_failure_bounds_as_input_errors() {
    let o = qalg(&["verify", "--n", "6", "--checks", "basis_lemma"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("basis_lemma needs 1 <= n <= 5"));
}
