use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

const DELTA1: &str = "abcd cdef acg aef abe afg bdg beg ceg dfg";

fn shk(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_shk")).args(args).output().expect("run shk")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let path = dir.path().join(name);
    fs::write(&path, text).unwrap();
    path
}

fn complex_file(dir: &TempDir, name: &str, facets: &str) -> PathBuf {
    let text: String = facets
        .split_whitespace()
        .map(|f| f.chars().map(String::from).collect::<Vec<_>>().join(" ") + "\n")
        .collect();
    write(dir, name, &text)
}

fn p(path: &Path) -> &str {
    path.to_str().unwrap()
}

fn json(args: &[&str]) -> Value {
    let out = shk(args);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn analyze_initial_cm_over_two_fields() {
    let dir = TempDir::new().unwrap();
    let d1 = complex_file(&dir, "delta1.cx", DELTA1);
    let v = json(&["analyze", p(&d1), "--props", "icm", "--fields", "q,gf2", "--json"]);
    assert_eq!(v["schema"], 1);
    assert_eq!(v["properties"]["initially_cm"]["q"], true);
    assert_eq!(v["properties"]["initially_cm"]["gf2"], false);
    assert_eq!(v["stats"]["mdim"], 2);
    assert_eq!(v["stats"]["dim"], 3);
}

#[test]
fn analyze_vertex_properties() {
    let dir = TempDir::new().unwrap();
    let r = complex_file(&dir, "remark3.cx", "ab cde");
    let v = json(&["analyze", p(&r), "--props", "dismissing:c,shedding:c", "--json"]);
    assert_eq!(v["properties"]["dismissing:c"]["value"], true);
    assert_eq!(v["properties"]["shedding:c"]["value"], false);
    let out = shk(&["analyze", p(&r), "--props", "dismissing:z"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn analyze_cycle_graph() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "cycle7.g", "1 2\n2 3\n3 4\n4 5\n5 6\n6 7\n7 1\n");
    let v = json(&["analyze", p(&g), "--props", "vdism,cochordal", "--exact", "--json"]);
    assert_eq!(v["properties"]["vertex_dismissible"]["value"], false);
    assert_eq!(v["properties"]["cochordal"]["value"], false);
}

#[test]
fn analyze_ideal() {
    let dir = TempDir::new().unwrap();
    let i = write(&dir, "b.mi", "@ring a b c d e f\nc d e f\na e f\na b c\n");
    let v = json(&["analyze", p(&i), "--json"]);
    let props = &v["properties"];
    assert_eq!(props["degree_quotients"]["value"], true);
    assert_eq!(props["vertex_divisible"]["value"], true);
    assert_eq!(props["regularity"]["q"], 4);
    assert_eq!(props["degree_quotients"]["certificate"]["kind"], "degree-quotient-order");
}

#[test]
fn json_output_is_deterministic() {
    let dir = TempDir::new().unwrap();
    let d1 = complex_file(&dir, "delta1.cx", DELTA1);
    let a = shk(&["analyze", p(&d1), "--json"]);
    let b = shk(&["analyze", p(&d1), "--json"]);
    assert_eq!(a.stdout, b.stdout);
    let a = shk(&["verify", "--checks", "truncation,mdim1", "--trials", "20", "--seed", "5", "--json"]);
    let b = shk(&["verify", "--checks", "truncation,mdim1", "--trials", "20", "--seed", "5", "--json"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn input_errors_exit_2_with_line_numbers() {
    let dir = TempDir::new().unwrap();
    let bad = write(&dir, "bad.cx", "@vertices a b\na b\nc\n");
    let out = shk(&["analyze", p(&bad)]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 3"));
    let r = complex_file(&dir, "r.cx", "ab cde");
    assert_eq!(shk(&["analyze", p(&r), "--props", "nonsense"]).status.code(), Some(2));
    assert_eq!(shk(&["analyze", p(&r), "--props", "lq"]).status.code(), Some(2));
    assert_eq!(shk(&["analyze", p(&r), "--fields", "gf5"]).status.code(), Some(2));
    let odd = write(&dir, "x.txt", "a b\n");
    assert_eq!(shk(&["analyze", p(&odd)]).status.code(), Some(2));
}

#[test]
fn capacity_errors_exit_3() {
    let dir = TempDir::new().unwrap();
    let labels: Vec<String> = (0..65).map(|k| format!("v{k}")).collect();
    let big = write(&dir, "big.cx", &(labels.join(" ") + "\n"));
    assert_eq!(shk(&["analyze", p(&big)]).status.code(), Some(3));
}

#[test]
fn dualize_round_trip() {
    let dir = TempDir::new().unwrap();
    let r = complex_file(&dir, "remark3.cx", "ab cde");
    let out = shk(&["dualize", p(&r)]);
    assert_eq!(stdout(&out), "@ring a b c d e\na b\nc d e\n");
    let mi = dir.path().join("r.mi");
    assert_eq!(shk(&["dualize", p(&r), "-o", p(&mi)]).status.code(), Some(0));
    let back = shk(&["dualize", p(&mi)]);
    assert_eq!(stdout(&back), "@vertices a b c d e\na b\nc d e\n");
    let b = complex_file(&dir, "b.cx", "ab bcd def");
    assert_eq!(stdout(&shk(&["dualize", p(&b)])), "@ring a b c d e f\na b c\na e f\nc d e f\n");
    let sr = shk(&["dualize", p(&r), "--view", "sr"]);
    assert_eq!(stdout(&sr), "@ring a b c d e\na c\na d\na e\nb c\nb d\nb e\n");
    let nsf = write(&dir, "n.mi", "@ring a b\na^2\n");
    assert_eq!(shk(&["dualize", p(&nsf)]).status.code(), Some(2));
}

#[test]
fn certificates_replay_and_tampering_is_caught() {
    let dir = TempDir::new().unwrap();
    let c = complex_file(&dir, "b.cx", "ab bcd def");
    let certs = dir.path().join("certs");
    let out = shk(&["analyze", p(&c), "--props", "vdism,scalable", "--certs-out", p(&certs)]);
    assert_eq!(out.status.code(), Some(0));
    for name in ["vertex_dismissible", "scalable"] {
        let bundle = certs.join(format!("{name}.json"));
        assert_eq!(shk(&["analyze", "--replay", p(&bundle)]).status.code(), Some(0), "{name}");
    }
    let bundle = certs.join("scalable.json");
    let mut v: Value = serde_json::from_str(&fs::read_to_string(&bundle).unwrap()).unwrap();
    // ab then def meet in the empty face, below mdim - 1.
    v["certificate"]["facets"] = serde_json::json!([["a", "b"], ["d", "e", "f"], ["b", "c", "d"]]);
    let tampered = write(&dir, "t.json", &v.to_string());
    let out = shk(&["analyze", "--replay", p(&tampered)]);
    assert_eq!(out.status.code(), Some(1), "{}", stdout(&out));
}

#[test]
fn graph_chordality_certificate_replays() {
    let dir = TempDir::new().unwrap();
    // P4 is self-complementary; its independence complex is a path.
    let g = write(&dir, "p4.g", "1 2\n2 3\n3 4\n");
    let certs = dir.path().join("certs");
    shk(&["analyze", p(&g), "--props", "cochordal,vdism", "--certs-out", p(&certs)]);
    for name in ["cochordal", "vertex_dismissible"] {
        let bundle = certs.join(format!("{name}.json"));
        assert_eq!(shk(&["analyze", "--replay", p(&bundle)]).status.code(), Some(0), "{name}");
    }
}

#[test]
fn verify_duality_is_clean() {
    let out = shk(&["verify", "--checks", "duality", "--vertices", "6", "--trials", "200"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    assert!(stdout(&out).contains("duality: 200 trials"));
}

#[test]
fn verify_cycles_reports_the_ten_cycle() {
    let out = shk(&["verify", "--checks", "cycles", "--json"]);
    assert_eq!(out.status.code(), Some(1));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    let violations = v["checks"][0]["violations"].as_array().unwrap();
    assert_eq!(violations.len(), 1);
    assert_eq!(violations[0]["trial"], 7);
    assert_eq!(violations[0]["known_counterexample"], true);
    assert!(violations[0]["instance"].as_str().unwrap().contains("1 10"));
}

#[test]
fn verify_rejects_bad_flags() {
    assert_eq!(shk(&["verify", "--checks", "nope"]).status.code(), Some(2));
    assert_eq!(shk(&["verify", "--vertices", "13"]).status.code(), Some(2));
}
