use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_rainbowconn"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).expect("JSON on stdout")
}

fn gen(dir: &TempDir, name: &str, args: &[&str]) -> PathBuf {
    let path = dir.path().join(name);
    let mut all = vec!["gen"];
    all.extend_from_slice(args);
    all.extend_from_slice(&["-o", path.to_str().unwrap()]);
    let o = run(&all);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    path
}

fn p(path: &Path) -> &str {
    path.to_str().unwrap()
}

#[test]
fn generated_file_has_the_header() {
    let dir = TempDir::new().unwrap();
    let f = gen(&dir, "r2.txt", &["R2", "--n", "12", "--m", "6"]);
    let text = std::fs::read_to_string(f).unwrap();
    assert!(text.starts_with("Kn 12 6\n"));
    assert_eq!(text.lines().count(), 12);
}

#[test]
fn describe_prints_parts() {
    let o = run(&["gen", "counter4t", "--tparam", "1", "--n", "20", "--describe"]);
    assert!(o.status.success());
    let v = json(&o);
    assert_eq!(v["params"]["k"], 4);
    let names: Vec<&str> = v["parts"].as_array().unwrap().iter().map(|p| p["name"].as_str().unwrap()).collect();
    assert!(names.contains(&"V3"));
}

#[test]
fn detect_reports_found_and_free() {
    let dir = TempDir::new().unwrap();
    let f = gen(&dir, "r1.txt", &["R1", "--n", "9", "--m", "4"]);
    let free = run(&["detect", "--pattern", "P5uP3", p(&f)]);
    assert_eq!(free.status.code(), Some(1));
    assert_eq!(stdout(&free).trim(), "rainbow-free");
    let found = run(&["detect", "--pattern", "K3", p(&f)]);
    assert_eq!(found.status.code(), Some(0));
    assert_eq!(json(&found)["embedding"]["map"].as_array().unwrap().len(), 3);
}

#[test]
fn kconn_modes() {
    let dir = TempDir::new().unwrap();
    let f = gen(&dir, "r1.txt", &["R1", "--n", "9", "--m", "4"]);
    let mono = json(&run(&["kconn", "--k", "1", "--colors", "mono", "--exact", p(&f)]));
    assert_eq!(mono["lower"], 6);
    assert_eq!(mono["exact"], true);
    let pair = json(&run(&["kconn", "--k", "1", "--colors", "pairs", p(&f)]));
    assert_eq!(pair["lower"], 9);
    let mask = json(&run(&["kconn", "--k", "1", "--colors", "mask=2", "--exact", p(&f)]));
    assert_eq!(mask["mask"], serde_json::json!([2]));
    let bad = run(&["kconn", "--k", "1", "--colors", "mask=9", p(&f)]);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn gallai_subcommands() {
    let dir = TempDir::new().unwrap();
    let f = dir.path().join("g.txt");
    let o = run(&["gallai", "sample", "--n", "9", "--m", "3", "--seed", "5", "--exact", "-o", p(&f)]);
    assert!(o.status.success());
    assert_eq!(json(&run(&["gallai", "check", p(&f)]))["gallai"], true);
    let part = json(&run(&["gallai", "partition", p(&f)]));
    assert!(part["parts"].as_array().unwrap().len() >= 2);
    for property in ["2conn", "3conn"] {
        let v = run(&["gallai", "verify", "--property", property, p(&f)]);
        assert!(v.status.success());
        assert_eq!(json(&v)["verdict"], "holds");
    }
    let r1 = gen(&dir, "r1.txt", &["R1", "--n", "9", "--m", "4"]);
    assert_eq!(run(&["gallai", "check", p(&r1)]).status.code(), Some(1));
}

#[test]
fn bipartite_subcommands() {
    let dir = TempDir::new().unwrap();
    let f = dir.path().join("b.txt");
    let o = run(&["bipartite", "gen-b", "--s", "9", "--t", "10", "--m", "6", "--seed", "2", "-o", p(&f)]);
    assert!(o.status.success());
    let st = json(&run(&["bipartite", "classify", p(&f)]));
    assert_eq!(st["case"], "B");
    assert_eq!(st["background"], 1);
    let cor = run(&["bipartite", "verify-background", "--k", "2", p(&f)]);
    assert!(cor.status.success());
    assert_eq!(json(&cor)["detail"]["order"], 19);
    let f1 = gen(&dir, "f1.txt", &["F1", "--s", "12", "--t", "6", "--m", "4"]);
    assert_eq!(json(&run(&["bipartite", "classify", p(&f1)]))["case"], "A");
}

#[test]
fn paths_and_cycles() {
    let dir = TempDir::new().unwrap();
    let f = gen(&dir, "r1.txt", &["R1", "--n", "9", "--m", "4"]);
    let path = json(&run(&["paths", "--color", "1", p(&f)]));
    assert_eq!(path["vertices"].as_array().unwrap().len(), 6);
    let vec = run(&["paths", "path-vector", "--a", "5,5,3,2", p(&f)]);
    assert!(vec.status.success());
    let cyc = json(&run(&["cycles", "--color", "3", p(&f)]));
    assert!(cyc["vertices"].as_array().unwrap().len() >= 3);
}

#[test]
fn verify_writes_json_reports() {
    let dir = TempDir::new().unwrap();
    let out = dir.path().join("reports.json");
    let o = run(&["verify", "--filter", "R2-*", "--seed", "3", "--json", p(&out)]);
    assert!(o.status.success(), "{}", stdout(&o));
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(out).unwrap()).unwrap();
    let reports = v.as_array().unwrap();
    assert_eq!(reports.len(), 6);
    for r in reports {
        assert_eq!(r["status"], "pass");
        assert_eq!(r["seed"], 3);
        assert!(r["millis"].is_u64());
        assert!(r["claim_id"].as_str().unwrap().starts_with("R2-"));
    }
}

#[test]
fn verify_unknown_filter_fails() {
    let o = run(&["verify", "--filter", "bogus-*"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("no claim matches"));
}

#[test]
fn crosscheck_small() {
    let o = run(&["crosscheck", "--max-n", "4", "--max-m", "2"]);
    assert!(o.status.success());
    let v = json(&o);
    let reports = v.as_array().unwrap();
    assert_eq!(reports.len(), 6);
    assert!(reports.iter().all(|r| r["exhaustive"] == true && r["disagreements"].as_array().unwrap().is_empty()));
}

#[test]
fn malformed_input_is_an_error() {
    let dir = TempDir::new().unwrap();
    let f = dir.path().join("bad.txt");
    std::fs::write(&f, "Kn 3 2\n1 5\n1\n").unwrap();
    let o = run(&["detect", "--pattern", "P3", p(&f)]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("color 5"));
}
