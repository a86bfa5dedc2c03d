use std::path::{Path, PathBuf};
use std::process::Command;

use serde_json::Value;

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(name)
}

struct Run {
    code: i32,
    stdout: String,
    doc: Value,
}

fn sda_env(args: &[&str], env: &[(&str, &Path)]) -> Run {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_sda"));
    cmd.args(args).env_remove("SDA_CONFIG");
    for (k, v) in env {
        cmd.env(k, v);
    }
    let out = cmd.output().unwrap();
    let stdout = String::from_utf8(out.stdout).unwrap();
    let doc = serde_json::from_str(&stdout).unwrap_or(Value::Null);
    Run {
        code: out.status.code().unwrap(),
        stdout,
        doc,
    }
}

fn sda(args: &[&str]) -> Run {
    sda_env(args, &[])
}

fn f(name: &str) -> String {
    fixture(name).to_string_lossy().into_owned()
}

#[test]
fn envelope_shape() {
    let r = sda(&["verify", &f("read1954.sg"), "--set", "7,8"]);
    assert_eq!(r.code, 0);
    assert_eq!(r.doc["schema_version"], 1);
    assert_eq!(r.doc["command"], "verify");
    assert_eq!(r.doc["status"], "ok");
    assert!(r.doc["payload"].is_object());
}

#[test]
fn verify_exit_codes() {
    let r = sda(&["verify", &f("fig2b.sg"), "--set", "v1,v2,v3"]);
    assert_eq!(r.code, 1);
    assert_eq!(r.doc["status"], "no-solution");
    let r = sda(&["verify", &f("fig2b.sg"), "--set", "nope"]);
    assert_eq!(r.code, 2);
    assert_eq!(r.doc["payload"]["kind"], "unknown_vertex");
    let r = sda(&["verify", "/nonexistent/graph.sg", "--set", "a"]);
    assert_eq!(r.code, 2);
    assert_eq!(r.doc["payload"]["kind"], "io");
}

#[test]
fn min_alliance_outcomes() {
    let r = sda(&["min-alliance", &f("fig2b.sg"), "-k", "3"]);
    assert_eq!(r.code, 0);
    let r = sda(&["min-alliance", &f("negK4.sg"), "-k", "4"]);
    assert_eq!(r.code, 1);
    let r = sda(&["min-alliance", &f("fig2b.sg"), "-k", "0"]);
    assert_eq!(r.code, 2);
}

#[test]
fn solvers_agree_on_fixtures() {
    for (file, k) in [("fig2b.sg", "7"), ("read1954.sg", "16"), ("k5_32.sg", "5")] {
        let sizes: Vec<Value> = ["oracle", "searchtree", "treewidth", "snd", "auto"]
            .iter()
            .map(|s| {
                let r = sda(&["min-alliance", &f(file), "-k", k, "--solver", s]);
                assert_eq!(r.code, 0, "{file} {s}: {}", r.stdout);
                r.doc["payload"]["size"].clone()
            })
            .collect();
        assert!(sizes.windows(2).all(|w| w[0] == w[1]), "{file}: {sizes:?}");
    }
}

#[test]
fn config_changes_dispatch() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("sda.toml");
    let base = sda(&["min-alliance", &f("fig2b.sg"), "-k", "3"]);
    assert_eq!(base.doc["payload"]["solver"], "snd");
    std::fs::write(&cfg, "[auto]\nsnd_max = 0\n").unwrap();
    let r = sda_env(
        &["min-alliance", &f("fig2b.sg"), "-k", "3"],
        &[("SDA_CONFIG", &cfg)],
    );
    assert_eq!(r.code, 0);
    assert_ne!(r.doc["payload"]["solver"], "snd");
    assert_eq!(r.doc["payload"]["size"], base.doc["payload"]["size"]);
    std::fs::write(&cfg, "[auto]\nbogus = 1\n").unwrap();
    let r = sda_env(
        &["min-alliance", &f("fig2b.sg"), "-k", "3"],
        &[("SDA_CONFIG", &cfg)],
    );
    assert_eq!(r.code, 2);
}

#[test]
fn build_outcomes() {
    let ok = sda(&[
        "build",
        &f("negTriangle.sg"),
        "--target",
        "a,b,c",
        "-k",
        "2",
    ]);
    assert_eq!(ok.code, 0, "{}", ok.stdout);
    let none = sda(&[
        "build",
        &f("negTriangle.sg"),
        "--target",
        "a,b,c",
        "-k",
        "1",
    ]);
    assert_eq!(none.code, 1);
    let lit = sda(&[
        "build",
        &f("negTriangle.sg"),
        "--target",
        "a,b,c",
        "-k",
        "2",
        "--rule",
        "literal",
    ]);
    assert_ne!(lit.code, 2);
}

#[test]
fn analyze_reports() {
    let r = sda(&["analyze", &f("read1954.sg")]);
    assert_eq!(r.code, 0);
    assert_eq!(r.doc["payload"]["n"], 16);
    assert_eq!(r.doc["payload"]["snd"], 16);
}

#[test]
fn reproducible_output() {
    for args in [
        vec!["analyze".to_string(), f("read1954.sg")],
        vec![
            "min-alliance".into(),
            f("read1954.sg"),
            "-k".into(),
            "5".into(),
        ],
        vec![
            "gen".into(),
            "random".into(),
            "--n".into(),
            "9".into(),
            "-p".into(),
            "0.4".into(),
            "-q".into(),
            "0.5".into(),
            "--seed".into(),
            "3".into(),
        ],
    ] {
        let args: Vec<&str> = args.iter().map(String::as_str).collect();
        assert_eq!(sda(&args).stdout, sda(&args).stdout);
    }
}

#[test]
fn gen_commands() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("k.sg");
    let r = sda(&["gen", "kbalanced", "3,2", "-o", out.to_str().unwrap()]);
    assert_eq!(r.code, 0, "{}", r.stdout);
    let r = sda(&["analyze", out.to_str().unwrap()]);
    assert_eq!(r.doc["payload"]["n"], 5);
    let r = sda(&["gen", "kbalanced", "5"]);
    assert_eq!(r.code, 2);
}

#[test]
fn reduce_writes_outputs() {
    let dir = tempfile::tempdir().unwrap();
    let prefix = dir.path().join("nae");
    let p = prefix.to_str().unwrap();
    let r = sda(&["reduce", "nae2defall", &f("single.nae"), p]);
    assert_eq!(r.code, 0, "{}", r.stdout);
    let sg = std::fs::read_to_string(dir.path().join("nae.sg")).unwrap();
    assert!(sg.lines().count() > 50);
    let prov: Value = serde_json::from_str(
        &std::fs::read_to_string(dir.path().join("nae.provenance.json")).unwrap(),
    )
    .unwrap();
    assert!(prov.is_object());
    let r = sda(&["analyze", dir.path().join("nae.sg").to_str().unwrap()]);
    assert_eq!(r.doc["payload"]["n"], 58);

    let prefix = dir.path().join("sat");
    let r = sda(&[
        "reduce",
        "3sat2nae",
        &f("small.cnf"),
        prefix.to_str().unwrap(),
    ]);
    assert_eq!(r.code, 0, "{}", r.stdout);
    assert!(dir.path().join("sat.nae").exists());

    let r = sda(&[
        "reduce",
        "clique2minda",
        &f("triangle.edges"),
        dir.path().join("c").to_str().unwrap(),
        "-k",
        "3",
    ]);
    assert_eq!(r.code, 0, "{}", r.stdout);
    let r = sda(&["reduce", "nae2defall", &f("small.cnf"), p]);
    assert_eq!(r.code, 2);
}

#[test]
fn dot_output() {
    let r = sda(&["dot", &f("fig2b.sg"), "--set", "v6"]);
    assert_eq!(r.code, 0);
    assert!(r.stdout.starts_with("graph") || r.stdout.contains("graph"));
}
