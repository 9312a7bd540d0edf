use serde_json::Value;
use std::process::{Command, Output};

fn wlgenus(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wlgenus"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json_of(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is json")
}

#[test]
fn distinguish_exit_codes() {
    let yes = wlgenus(&["distinguish", "-k", "2", "--a", "C6", "--b", "P6"]);
    assert_eq!(yes.status.code(), Some(0));
    assert_eq!(json_of(&yes)["distinguished"], true);
    let no = wlgenus(&["distinguish", "-k", "1", "--a", "K3,3", "--b", "K3,3"]);
    assert_eq!(no.status.code(), Some(1));
    assert_eq!(json_of(&no)["distinguished"], false);
}

#[test]
fn errors_exit_two() {
    assert_eq!(wlgenus(&["distinguish", "-k", "1", "--a", "nope", "--b", "K3"]).status.code(), Some(2));
    assert_eq!(wlgenus(&["experiment", "--name", "nope"]).status.code(), Some(2));
    assert_eq!(wlgenus(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(wlgenus(&["necklace", "--embedding", "torus-4x4"]).status.code(), Some(2));
}

#[test]
fn iso_and_enumerate() {
    let out = wlgenus(&["iso", "--a", "C5", "--b", "C5"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json_of(&out)["witness"].as_array().unwrap().len(), 5);
    assert_eq!(wlgenus(&["iso", "--a", "K3,3", "--b", "T3x3"]).status.code(), Some(1));
    let out = wlgenus(&["enumerate", "--n", "4"]);
    assert_eq!(json_of(&out)["count"], 11);
    let out = wlgenus(&["enumerate", "--n", "4", "--connected"]);
    assert_eq!(json_of(&out)["count"], 6);
}

#[test]
fn genus_and_faces() {
    let out = wlgenus(&["genus", "--graph", "K5"]);
    assert_eq!(json_of(&out)["euler_genus"], 1);
    let out = wlgenus(&["genus", "--embedding", "toroidal-K5"]);
    let v = json_of(&out);
    assert_eq!((v["embedding_euler_genus"].clone(), v["faces"].clone()), (2.into(), 5.into()));
    let out = wlgenus(&["faces", "--embedding", "torus-3x3"]);
    assert_eq!(json_of(&out)["faces"].as_array().unwrap().len(), 9);
}

#[test]
fn necklace_and_cut() {
    let out = wlgenus(&["necklace", "--embedding", "torus-3x3"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json_of(&out)["u"], serde_json::json!([0, 1, 2]));
    let out = wlgenus(&["cut", "--embedding", "toroidal-K5"]);
    let v = json_of(&out);
    assert!(v["components"].as_array().unwrap().iter().all(|c| c["euler_genus"] == 0));
    let out = wlgenus(&["--format", "dot", "cut", "--embedding", "torus-3x3"]);
    assert!(String::from_utf8(out.stdout).unwrap().starts_with("graph G {"));
}

#[test]
fn cfi_writes_files() {
    let dir = tempfile::tempdir().unwrap();
    let prefix = dir.path().join("k4");
    let out = wlgenus(&["cfi", "--base", "K4", "--out-prefix", prefix.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json_of(&out)["order"], 40);
    let twisted = dir.path().join("k4_twisted.json");
    let d = wlgenus(&["distinguish", "-k", "2", "--a", twisted.to_str().unwrap(), "--b", dir.path().join("k4_untwisted.json").to_str().unwrap()]);
    assert_eq!(d.status.code(), Some(1));
}

#[test]
fn refine_and_wl_dim() {
    let out = wlgenus(&["refine", "-k", "1", "--graph", "P4"]);
    assert_eq!(out.status.code(), Some(0));
    let out = wlgenus(&["wl-dim", "--graph", "C6", "--kmax", "2"]);
    assert_eq!(json_of(&out)["dimension"], 2);
    let out = wlgenus(&["wl-dim", "--graph", "P4", "--family", "trees-4", "--kmax", "1"]);
    assert_eq!(json_of(&out)["dimension"], 1);
}

#[test]
fn experiment_reports_are_byte_identical() {
    let args = ["--seed", "7", "experiment", "--name", "surgery-invariants", "--samples", "40"];
    let a = wlgenus(&args);
    let b = wlgenus(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(json_of(&a)["seed"], 7);
    let c = wlgenus(&["--seed", "8", "experiment", "--name", "surgery-invariants", "--samples", "40"]);
    assert_ne!(a.stdout, c.stdout);
}
