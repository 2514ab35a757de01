//! End-to-end tests of the `expograph` binary: output shapes, determinism
//! and exit codes (0 ok, 1 usage, 2 budget, 3 verification mismatch).

use assert_cmd::Command;
use predicates::prelude::*;

fn expograph() -> Command {
    Command::cargo_bin("expograph").unwrap()
}

#[test]
fn gen_writes_edge_list_and_sidecar() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("c8.edges");
    expograph()
        .args(["gen", "EXP(K2,K2)", "--out"])
        .arg(&out)
        .assert()
        .success();
    let edges = std::fs::read_to_string(&out).unwrap();
    assert!(edges.starts_with("8 8\n"), "C8 has 8 vertices and 8 edges");
    let sidecar: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(out.with_extension("edges.json")).unwrap())
            .unwrap();
    assert_eq!(sidecar["order"], "8");
    assert_eq!(sidecar["size"], "8");
    assert_eq!(sidecar["spec"], "EXP(K2,K2)");
}

#[test]
fn gen_omega4_and_de_bruijn_degree_classes() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("om4.edges");
    expograph()
        .args(["gen", "OMEGA(4)", "--out"])
        .arg(&out)
        .assert()
        .success();
    let first = std::fs::read_to_string(&out).unwrap();
    assert!(first.starts_with("32768 65536\n"));

    // B(2,3): 8 vertices, exactly two of degree 2 (the fixed points of the shift)
    let output = expograph().args(["gen", "B(2,3)"]).output().unwrap();
    assert!(output.status.success());
    let text = String::from_utf8(output.stdout).unwrap();
    let mut lines = text.lines();
    let header = lines.next().unwrap();
    assert!(header.starts_with("8 "));
    let mut deg = [0usize; 8];
    for line in lines {
        let mut it = line.split_whitespace();
        let u: usize = it.next().unwrap().parse().unwrap();
        let v: usize = it.next().unwrap().parse().unwrap();
        deg[u] += 1;
        deg[v] += 1;
    }
    assert_eq!(deg.iter().filter(|&&d| d == 2).count(), 2);
}

#[test]
fn gen_beyond_budget_exits_2() {
    expograph()
        .args(["gen", "OMEGA(5)"])
        .assert()
        .code(2)
        .stderr(predicate::str::contains("budget"));
}

#[test]
fn usage_errors_exit_1() {
    expograph().args(["gen", "NOTAGRAPH(3)"]).assert().code(1);
    expograph().args(["frobnicate"]).assert().code(1);
    expograph().args(["tables", "9"]).assert().code(1);
    expograph().args(["route", "C8", "0", "1"]).assert().code(1);
}

#[test]
fn analyze_exp_c8_k2_diam_both_is_deterministic() {
    let run = || {
        let out = expograph()
            .args(["analyze", "EXP(C8,K2)", "--diam", "both", "--canonical"])
            .output()
            .unwrap();
        assert!(out.status.success());
        out.stdout
    };
    let a = run();
    let b = run();
    assert_eq!(a, b, "canonical output must be byte-identical");
    let report: serde_json::Value = serde_json::from_slice(&a).unwrap();
    assert_eq!(report["diameter"]["formula"], "10");
    assert_eq!(report["diameter"]["bfs"], 10);
    assert_eq!(report["order"]["display"], "128");
    assert!(report.get("timingMs").is_none(), "canonical strips timing");
}

#[test]
fn analyze_superlambda_no_with_witness() {
    let out = expograph()
        .args(["analyze", "EXP(K2,K2)", "--superlambda", "--canonical"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["superLambda"], "no");
    assert!(report["witness"]["elements"].is_array());
}

#[test]
fn analyze_psi_is_stats_only_beyond_budget() {
    let out = expograph()
        .args(["analyze", "PSI(3)", "--canonical"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["order"]["display"], "2048");
    assert_eq!(report["minDegree"], 3);

    let out = expograph()
        .args(["analyze", "PSI(4)", "--canonical"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["order"]["display"], "2^2059");
    assert!(report["diameter"]["formula"]
        .as_str()
        .unwrap()
        .starts_with("<="));
    // a BFS diameter on a non-materializable graph is a budget error
    expograph()
        .args(["analyze", "PSI(4)", "--diam", "bfs"])
        .assert()
        .code(2);
}

#[test]
fn route_reports_exact_length_and_stretch() {
    let out = expograph()
        .args(["route", "EXP(C8,K2)", "0", "1"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["plan"]["length"], 1);
    assert_eq!(report["bfsDistance"], 1);
    assert_eq!(report["stretch"], "1.0000");

    expograph()
        .args(["route", "EXP(C8,K2)", "0", "999"])
        .assert()
        .code(1);

    let out = expograph()
        .args(["route", "EXP(C8,C4)", "17", "203", "--mode", "hamcycle"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let stretch: f64 = report["stretch"].as_str().unwrap().parse().unwrap();
    assert!(stretch >= 1.0);
}

#[test]
fn ham_cycle_roundtrip_through_verify() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cycle.json");
    expograph()
        .args(["ham", "EXP(C8,K2)", "--what", "cycle", "--verify", "--out"])
        .arg(&path)
        .assert()
        .success();
    let cert: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(cert["order"], 128);
    assert_eq!(cert["cycle"]["vertices"].as_array().unwrap().len(), 129);

    expograph()
        .args(["verify", "EXP(C8,K2)"])
        .arg(&path)
        .assert()
        .success()
        .stdout(predicate::str::contains("\"verified\": true"));

    // tamper with one vertex: the walk breaks and verification fails
    let mut tampered = cert.clone();
    tampered["cycle"]["vertices"][1] = serde_json::json!(0);
    std::fs::write(&path, serde_json::to_string(&tampered).unwrap()).unwrap();
    expograph()
        .args(["verify", "EXP(C8,K2)"])
        .arg(&path)
        .assert()
        .code(3);
}

#[test]
fn ham_edhc_and_cist_on_c4_k4() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("edhc.json");
    expograph()
        .args(["ham", "EXP(C4,K4)", "--what", "edhc", "--verify", "--out"])
        .arg(&path)
        .assert()
        .success();
    let certs: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(certs.as_array().unwrap().len(), 2);
    assert_eq!(certs[0]["order"], 1024);
    expograph()
        .args(["verify", "EXP(C4,K4)"])
        .arg(&path)
        .assert()
        .success();

    let path = dir.path().join("cist.json");
    expograph()
        .args(["ham", "EXP(C4,K4)", "--what", "cist", "--verify", "--out"])
        .arg(&path)
        .assert()
        .success();
    let pair: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(pair["t1"].as_array().unwrap().len(), 1023);
    expograph()
        .args(["verify", "EXP(C4,K4)"])
        .arg(&path)
        .assert()
        .success();
}

#[test]
fn ham_precondition_failures_are_reported() {
    // odd base order: the even-order constructions must refuse
    expograph()
        .args(["ham", "EXP(C5,K4)", "--what", "edhc"])
        .assert()
        .code(1)
        .stderr(predicate::str::contains("even"));
    // non-complete exponent for spanning trees
    expograph()
        .args(["ham", "EXP(C4,C4)", "--what", "cist"])
        .assert()
        .code(1)
        .stderr(predicate::str::contains("complete"));
}

#[test]
fn tables_render_with_verification_markers() {
    let out = expograph()
        .args(["tables", "8", "--max-vertices", "3000"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("128 [v]"), "Omega_3 order verified: {text}");
    assert!(text.contains("10 [v]"), "Omega_3 diameter verified");
    assert!(text.contains("2^2059 [f]"), "Psi_4 order symbolic");

    let out = expograph()
        .args(["tables", "5", "--max-vertices", "2000", "--json"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let table: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(table["number"], 5);
    assert!(table["rows"].as_array().unwrap().len() == 12);
}
