use std::fs;
use std::path::{Path, PathBuf};
use std::process::Command;

use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_gminor"))
}

fn run(args: &[&str]) -> (i32, String) {
    let out = bin().args(args).output().unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap())
}

fn report(args: &[&str]) -> (i32, Value) {
    let (code, text) = run(args);
    (code, serde_json::from_str(&text).unwrap_or(Value::Null))
}

fn complete_graph_file(dir: &Path, n: usize) -> PathBuf {
    let mut text = String::new();
    for a in 0..n {
        for b in a + 1..n {
            text.push_str(&format!("e{a}{b} v{a} v{b}\n"));
        }
    }
    let txt = dir.join(format!("K{n}.txt"));
    fs::write(&txt, text).unwrap();
    let json = dir.join(format!("K{n}.json"));
    let (code, _) = run(&["convert", "--input", txt.to_str().unwrap(), "--output", json.to_str().unwrap()]);
    assert_eq!(code, 0);
    json
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

fn convert(dir: &Path, name: &str, edges: &str) -> String {
    let txt = write(dir, &format!("{name}.txt"), edges);
    let json = dir.join(format!("{name}.json")).to_str().unwrap().to_string();
    assert_eq!(run(&["convert", "--input", &txt, "--output", &json]).0, 0);
    json
}

#[test]
fn homology_of_k5_matching_complex() {
    let dir = tempfile::tempdir().unwrap();
    let k5 = complete_graph_file(dir.path(), 5);
    let (code, r) = report(&["homology", "--graph", k5.to_str().unwrap(), "--kind", "matching", "--degrees", "0..2", "--coeff", "Z", "--uct"]);
    assert_eq!(code, 0);
    let h1 = &r["result"]["groups"][1];
    assert_eq!(h1["degree"], 1);
    assert_eq!(h1["free_rank"], 6);
    assert_eq!(h1["torsion"], Value::Array(vec![]));
    assert_eq!(r["tool"], "gminor");
    assert!(r["version"].is_string());
    assert_eq!(r["config"]["command"]["Homology"]["coeff"], "Z");
}

#[test]
fn complex_build_round_trips_through_homology() {
    let dir = tempfile::tempdir().unwrap();
    let k4 = complete_graph_file(dir.path(), 4);
    let c = dir.path().join("c.json");
    let (code, _) = run(&["complex", "build", "--graph", k4.to_str().unwrap(), "--kind", "matching", "--output", c.to_str().unwrap()]);
    assert_eq!(code, 0);
    let (code, r) = report(&["homology", "--complex", c.to_str().unwrap(), "--degrees", "0", "--coeff", "F2"]);
    assert_eq!(code, 0);
    assert_eq!(r["result"]["groups"][0]["free_rank"], 2);
    assert_eq!(r["result"]["groups"][0]["coefficients"], "F2");
}

#[test]
fn complete_graph_torsion_scan() {
    let (code, r) = report(&["scan", "torsion", "--i", "1", "--max-edges", "7", "--only", "complete", "--relabel-check", "--seed", "5"]);
    assert_eq!(code, 0);
    let records = r["result"]["records"].as_array().unwrap();
    let k7 = records.iter().find(|x| x["name"] == "K7").unwrap();
    assert_eq!(k7["torsion"], serde_json::json!([3]));
    assert_eq!(r["result"]["observed_exponent"], 3);
    assert_eq!(r["seed"], 5);
    // degree 2 carries the free part only
    let (code, r) = report(&["scan", "torsion", "--i", "2", "--max-edges", "7", "--only", "complete"]);
    assert_eq!(code, 0);
    let k7 = r["result"]["records"].as_array().unwrap().iter().find(|x| x["name"] == "K7").cloned().unwrap();
    assert_eq!(k7["free_rank"], 20);
}

#[test]
fn betti_oracle_columns_agree() {
    let dir = tempfile::tempdir().unwrap();
    let p3 = convert(dir.path(), "P3", "a b\nb c\nc d\n");
    let (code, r) = report(&["betti", "--graph", &p3, "--max-i", "1", "--oracle"]);
    assert_eq!(code, 0);
    for row in r["result"]["rows"].as_array().unwrap() {
        assert_eq!(row["value"], row["oracle"]);
    }
    let (code, csv) = run(&["betti", "--graph", &p3, "--max-i", "1", "--format", "csv"]);
    assert_eq!(code, 0);
    assert!(csv.lines().any(|l| l == "0,e0 e2,1"), "{csv}");
}

#[test]
fn reports_are_byte_identical() {
    let args = ["scan", "torsion", "--i", "1", "--max-edges", "4", "--relabel-check", "--seed", "11", "--threads", "3"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.0, 0);
    assert_eq!(a.1, b.1);
    let gen = ["scan", "generation", "--module", "matching-h0", "--N", "2", "--max-edges", "4"];
    assert_eq!(run(&gen).1, run(&gen).1);
}

#[test]
fn morphisms_enumerate_then_validate() {
    let dir = tempfile::tempdir().unwrap();
    let theta = convert(dir.path(), "theta", "x a b\ny a b\nz a b\n");
    let loops = convert(dir.path(), "loops", "p u u\nq u u\n");
    let (code, r) = report(&["morphisms", "enumerate", "--from", &theta, "--to", &loops]);
    assert_eq!(code, 0);
    let all = r["result"]["morphisms"].as_array().unwrap();
    assert_eq!(all.len(), r["result"]["count"].as_u64().unwrap() as usize);
    assert!(!all.is_empty());
    for (k, m) in all.iter().enumerate() {
        let path = write(dir.path(), &format!("m{k}.json"), &m.to_string());
        let (code, v) = report(&["morphisms", "validate", "--from", &theta, "--to", &loops, "--morphism", &path]);
        assert_eq!(code, 0, "{v}");
        assert_eq!(v["result"]["valid"], true);
    }
    let bad = write(dir.path(), "bad.json", r#"{"vertex_map": {"a": "u", "b": "u"}, "edge_map": {"x": "p", "y": "p", "z": "*"}}"#);
    let (code, v) = report(&["morphisms", "validate", "--from", &theta, "--to", &loops, "--morphism", &bad]);
    assert_eq!(code, 1);
    assert_eq!(v["result"]["valid"], false);
}

#[test]
fn conf_and_growth() {
    let dir = tempfile::tempdir().unwrap();
    let k4 = complete_graph_file(dir.path(), 4);
    let (code, r) = report(&["conf", "--graph", k4.to_str().unwrap(), "--d", "2", "--max-degree", "9", "--presentation", "--check"]);
    assert_eq!(code, 0);
    let ranks: Vec<u64> = r["result"]["ranks"].as_array().unwrap().iter().map(|x| x["rank"].as_u64().unwrap()).collect();
    assert_eq!(ranks, vec![1, 3, 3, 1]);
    assert_eq!(r["result"]["presentation"]["algebra"], "exterior");
    let base = convert(dir.path(), "base", "c u w\n");
    let (code, r) = report(&["scan", "growth", "--base", &base, "--sprout", "u,w", "--window", "2..5"]);
    assert_eq!(code, 0);
    assert_eq!(r["result"]["coefficients"], serde_json::json!(["1", "-2", "1"]));
    let (code, r) = report(&["scan", "growth", "--base", &base, "--sprout", "u", "--window", "2..2", "--module", "constant"]);
    assert_eq!(code, 1);
    assert!(r["result"]["fit"].is_null());
}

#[test]
fn catalan_and_bounds() {
    let (code, r) = report(&["scan", "hd", "--N", "5"]);
    assert_eq!(code, 0);
    assert_eq!(r["result"]["coefficients"], serde_json::json!([1, 1, 2, 5, 14, 42]));
    let (code, r) = report(&["scan", "bound", "--max-edges", "4"]);
    assert_eq!(code, 0);
    assert!(r["violations"].as_array().unwrap().is_empty());
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["homology", "--graph", "/nonexistent.json"]).0, 2);
    assert_eq!(run(&["homology"]).0, 2);
    assert_eq!(run(&["scan", "torsion", "--i", "1", "--max-edges", "9"]).0, 3);
    assert_eq!(run(&["scan", "hd", "--format", "csv"]).0, 2);
    let dir = tempfile::tempdir().unwrap();
    let g = convert(dir.path(), "g", "a b\n");
    assert_eq!(run(&["homology", "--graph", &g, "--coeff", "F4"]).0, 2);
}

#[test]
fn every_subcommand_has_help() {
    let commands: &[&[&str]] = &[
        &[],
        &["complex"],
        &["complex", "build"],
        &["homology"],
        &["morphisms", "enumerate"],
        &["morphisms", "validate"],
        &["betti"],
        &["conf"],
        &["scan", "torsion"],
        &["scan", "generation"],
        &["scan", "bound"],
        &["scan", "growth"],
        &["scan", "hd"],
        &["scan", "regularity"],
        &["convert"],
    ];
    for c in commands {
        let mut args = c.to_vec();
        args.push("--help");
        let (code, text) = run(&args);
        assert_eq!(code, 0, "{c:?}");
        assert!(text.contains("Usage"), "{c:?}");
    }
}
