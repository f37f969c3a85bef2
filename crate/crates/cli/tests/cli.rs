use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn qramsey(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qramsey")).args(args).output().expect("binary runs")
}

fn stdout_json(out: &Output) -> Value {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn colors(report: &Value) -> (usize, usize) {
    let edges = report["edges"].as_array().unwrap();
    let red = edges.iter().filter(|e| e["color"] == "red").count();
    (red, edges.len() - red)
}

#[test]
fn analyze_fig1a_set() {
    let report = stdout_json(&qramsey(&["analyze", "--set", "px,py,lx"]));
    assert_eq!(colors(&report), (2, 1));
    let text = String::from_utf8(qramsey(&["analyze", "--set", "px,py,lx"]).stdout).unwrap();
    let mut positions = Vec::new();
    for k in ["vertices", "edges", "red_triangles", "green_triangles", "max_red_cliques", "max_green_cliques", "discrepancies"] {
        positions.push(text.find(&format!("\"{k}\"")).unwrap_or_else(|| panic!("missing {k}")));
    }
    assert!(positions.windows(2).all(|w| w[0] < w[1]), "key order");
}

#[test]
fn ramsey_certificate() {
    let cert = stdout_json(&qramsey(&["ramsey"]));
    assert_eq!(cert["k6_colorings_checked"], 32768);
    assert_eq!(cert["k6_colorings_without_mono_triangle"], 0);
    assert_eq!(cert["k5_witness"]["verified"], true);
}

#[test]
fn outputs_are_byte_identical_across_runs() {
    for args in [&["analyze", "--set", "x,y,z,p_x,p_y,p_z"][..], &["jacobi", "--set", "x,p_x,l_z,L2"], &["interfere", "--slits", "3", "--gamma", "0.5"]] {
        assert_eq!(qramsey(args).stdout, qramsey(args).stdout, "{args:?}");
    }
}

#[test]
fn figures_writes_every_panel() {
    let dir = tempfile::tempdir().unwrap();
    let out = qramsey(&["figures", "--out", dir.path().to_str().unwrap()]);
    assert!(out.status.success());
    let names: Vec<String> = fs::read_dir(dir.path()).unwrap().map(|e| e.unwrap().file_name().into_string().unwrap()).collect();
    assert_eq!(names.iter().filter(|n| n.ends_with(".dot")).count(), 10);
    assert_eq!(names.iter().filter(|n| n.ends_with(".json")).count(), 10);
    let summary = fs::read_to_string(dir.path().join("discrepancy_summary.txt")).unwrap();
    assert!(summary.contains("refuted") && summary.contains("fig3b-generic"));
    let fig4: Value = serde_json::from_str(&fs::read_to_string(dir.path().join("fig4.json")).unwrap()).unwrap();
    assert_eq!(fig4["red_triangles"].as_array().unwrap().len(), 8);
    assert!(fs::read_to_string(dir.path().join("fig4.dot")).unwrap().starts_with("graph commutation {"));

    let strict = qramsey(&["figures", "--out", dir.path().to_str().unwrap(), "--strict-claims"]);
    assert_eq!(strict.status.code(), Some(3));
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn config_with_custom_observable_rules_and_claims() {
    let dir = tempfile::tempdir().unwrap();
    write(
        dir.path(),
        "rules.txt",
        "pair K x red \"# assumed\"\npair K y red \"# assumed\"\npair K p_x green \"# assumed\"\npair K T green \"# assumed\"\n",
    );
    write(dir.path(), "claims.txt", "claim c1 mono red K x y\nclaim c2 mono green p_x x K\n");
    let cfg = write(
        dir.path(),
        "analysis.txt",
        "observable x\nobservable y\nobservable p_x\nobservable T = px^2 + py^2 + pz^2\nobservable K\nrules rules.txt\nclaims claims.txt\n",
    );
    let dot = dir.path().join("g.dot");
    let json = dir.path().join("g.json");
    let out = qramsey(&["audit", "--config", &cfg, "--dot", dot.to_str().unwrap(), "--json", json.to_str().unwrap()]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert!(out.stdout.is_empty());
    let report: Value = serde_json::from_str(&fs::read_to_string(&json).unwrap()).unwrap();
    let verdicts: Vec<&str> = report["discrepancies"].as_array().unwrap().iter().map(|d| d["verdict"].as_str().unwrap()).collect();
    assert_eq!(verdicts, ["confirmed", "refuted"]);
    let t_px = report["edges"].as_array().unwrap().iter().find(|e| e["a"] == "p_x" && e["b"] == "T").unwrap();
    assert_eq!(t_px["color"], "red");
    assert_eq!(t_px["basis"], "computed");
    let k_x = report["edges"].as_array().unwrap().iter().find(|e| e["a"] == "x" && e["b"] == "K").unwrap();
    assert_eq!((k_x["basis"].as_str(), k_x["citation"].as_str()), (Some("declared"), Some("assumed")));
    assert!(fs::read_to_string(&dot).unwrap().contains("\"x\" -- \"K\" [color=red];"));
}

#[test]
fn unclassifiable_pair_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write(dir.path(), "a.txt", "observable x\nobservable K\n");
    let out = qramsey(&["analyze", "--config", &cfg]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("x") && err.contains("K"), "{err}");
}

#[test]
fn refuted_claims_exit_3_only_when_strict() {
    let dir = tempfile::tempdir().unwrap();
    let claims = write(dir.path(), "c.txt", "claim t mono red p_x x y\n");
    let base = ["audit", "--set", "p_x,x,y", "--claims", &claims];
    let lenient = qramsey(&base);
    let report = stdout_json(&lenient);
    assert_eq!(report["discrepancies"][0]["verdict"], "refuted");
    let mut strict = base.to_vec();
    strict.push("--strict-claims");
    assert_eq!(qramsey(&strict).status.code(), Some(3));
}

#[test]
fn usage_errors_exit_1_and_name_the_input() {
    let out = qramsey(&["analyze", "--set", "x,qq"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("qq"));
    assert_eq!(qramsey(&["analyze"]).status.code(), Some(1));
    assert_eq!(qramsey(&["interfere", "--slits", "9"]).status.code(), Some(1));
    assert_eq!(qramsey(&["audit", "--set", "x,y"]).status.code(), Some(1));
    assert_eq!(qramsey(&["--version"]).status.code(), Some(0));
}

#[test]
fn oracle_reports_agreement() {
    let report = stdout_json(&qramsey(&["oracle", "--set", "x,p_x,l_z,L2", "--N", "8"]));
    assert_eq!(report["pairs"].as_array().unwrap().len(), 6);
    assert_eq!(report["mismatches"], 0);
    assert_eq!(qramsey(&["oracle", "--set", "x,r"]).status.code(), Some(1));
}

#[test]
fn interfere_csv_and_correlations() {
    let out = qramsey(&["interfere", "--slits", "2"]);
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("s,intensity"));
    assert_eq!(text.lines().count(), 1202);
    let center = text.lines().find(|l| l.starts_with("0.0")).unwrap();
    assert!(center.ends_with(",4.00000000000000e0"), "{center}");

    let dir = tempfile::tempdir().unwrap();
    let corr = write(dir.path(), "c.txt", "# i j re im\n1 2 0.1 0.0\n2 3 0.0 0.2\n");
    let out_dir = dir.path().join("o");
    let out = qramsey(&["interfere", "--slits", "3", "--correlation", &corr, "--out", out_dir.to_str().unwrap()]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert!(fs::read_to_string(out_dir.join("pattern.csv")).unwrap().starts_with("s,intensity\n"));
    let bad = write(dir.path(), "bad.txt", "2 1 0.1 0.0\n");
    assert_eq!(qramsey(&["interfere", "--slits", "3", "--correlation", &bad]).status.code(), Some(1));
}
