use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    run_in(args, None)
}

fn run_in(args: &[&str], cache: Option<&Path>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_hamiltonia"));
    cmd.args(args);
    match cache {
        Some(dir) => cmd.env("HAMILTONIA_CACHE_DIR", dir),
        None => cmd.env_remove("HAMILTONIA_CACHE_DIR"),
    };
    cmd.output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("{e}: {}", stdout(o)))
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

#[test]
fn analyze_alt5() {
    let o = run(&["analyze", "alt:5", "--family", "nilpotent", "--format", "json"]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let v = json(&o);
    assert_eq!(v["order"], 60);
    assert_eq!(v["primes"], serde_json::json!([2, 3, 5]));
    assert_eq!(v["name"], "A5");
    assert_eq!(v["predicates"]["para_hamiltonian"]["value"], true);
    assert_eq!(v["predicates"]["meta_hamiltonian"]["value"], false);
    assert_eq!(v["predicates"]["biminimal_non"]["value"], true);
    assert_eq!(v["witnesses"]["meta_hamiltonian"]["normal"], false);

    let text = stdout(&run(&["analyze", "alt:5"]));
    assert!(text.contains("order: 60"));
    assert!(text.contains("para_hamiltonian: true"));
    assert!(text.contains("meta_hamiltonian: false (witness"));
}

#[test]
fn analyze_sl25_and_trivial() {
    let v = json(&run(&["analyze", "sl:2:5", "--format", "json"]));
    assert_eq!(v["name"], "SL(2,5)");
    assert_eq!(v["frattini_order"], 2);
    assert_eq!(v["center_order"], 2);

    let v = json(&run(&["analyze", "sl:2:5", "--family", "abelian", "--format", "json"]));
    assert_eq!(v["witnesses"]["biminimal_non"]["name"], "SL(2,3)");

    let v = json(&run(&["analyze", "cyclic:1", "--format", "json"]));
    assert_eq!(v["order"], 1);
    assert_eq!(v["basic"]["abelian"], true);
    assert_eq!(v["basic"]["nilpotent"], true);
    assert_eq!(v["predicates"]["in_family"]["value"], true);
    let v = json(&run(&["analyze", "cyclic:1", "--family", "abelian", "--format", "json"]));
    assert_eq!(v["predicates"]["in_family"]["value"], true);
}

#[test]
fn analyze_group_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("s3.grp");
    std::fs::write(&path, "# symmetric group on three points\nname S3\ndegree 3\ngen (1 2 3)\ngen (1 2)\n").unwrap();
    let o = run(&["analyze", path.to_str().unwrap(), "--format", "json"]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let v = json(&o);
    assert_eq!((v["group"].as_str(), v["order"].as_u64()), (Some("S3"), Some(6)));
    assert_eq!(v["predicates"]["minimal_non"]["value"], true);

    std::fs::write(&path, "degree 3\ngen (1 2 4)\n").unwrap();
    assert_eq!(code(&run(&["analyze", path.to_str().unwrap()])), 2);
    assert_eq!(code(&run(&["analyze", "missing/nothing.grp"])), 2);
}

#[test]
fn verify_selected_claims() {
    let o = run(&["verify", "--claims", "T3.6", "--format", "json"]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let v = json(&o);
    assert_eq!(v["schema"], "1");
    assert_eq!(v["verdict"], "pass");
    let r = &v["reports"][0];
    assert_eq!(r["claim"], "T3.6");
    assert_eq!(
        r["meta"]["insoluble_para_nilpotent_Hamiltonian"],
        serde_json::json!(["A5", "SL(2,5)"])
    );

    let o = run(&["verify", "--claims", "t3.10,L5.4"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    assert!(text.contains("T3.10") && text.contains("L5.4"));
    assert!(text.contains("overall: pass"));
}

#[test]
fn verify_with_custom_scope() {
    let o = run(&["verify", "--claims", "T3.6", "--scope", "alt:5", "--scope", "prod:cyclic:2,alt:5", "--format", "json"]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let v = json(&o);
    assert_eq!(v["reports"][0]["scope"], serde_json::json!(["A5", "C2xA5"]));

    let o = run(&["verify", "--claims", "T3.6", "--scope", "cyclic:5"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("pass (vacuous, n=0)"));
}

#[test]
fn exit_codes() {
    assert_eq!(code(&run(&["verify", "--claims", "T9.9"])), 2);
    assert_eq!(code(&run(&["verify", "--claims", ","])), 2);
    assert_eq!(code(&run(&["analyze", "dihedral:7"])), 2);
    assert_eq!(code(&run(&["analyze", "wat:3"])), 2);
    assert_eq!(code(&run(&["frobnicate"])), 2);
    assert_eq!(code(&run(&["analyze", "sym:7"])), 3);
    assert_eq!(code(&run(&["verify", "--claims", "T3.6", "--scope", "sym:6"])), 3);
    assert_eq!(code(&run(&["lattice", "sym:6", "--no-cache"])), 3);
    assert_eq!(code(&run(&["census", "--scope", "sym:6", "--strict"])), 3);
}

#[test]
fn census_rows() {
    let v = json(&run(&["census", "--max-order", "60", "--format", "json"]));
    let rows = v["rows"].as_array().unwrap();
    let a5 = rows.iter().find(|r| r["label"] == "A5").unwrap();
    assert_eq!(a5["primes"], serde_json::json!([2, 3, 5]));
    assert!(rows.iter().all(|r| r["order"].as_u64().unwrap() <= 60));

    let v = json(&run(&["census", "--max-order", "1", "--format", "json"]));
    assert_eq!(v["rows"].as_array().unwrap().len(), 1);
    assert_eq!(v["rows"][0]["order"], 1);

    let v = json(&run(&["census", "--max-order", "200", "--format", "json"]));
    let psl = v["rows"].as_array().unwrap().iter().find(|r| r["label"] == "PSL(2,7)").unwrap();
    let nil = psl["families"].as_array().unwrap().iter().find(|f| f["family"] == "nilpotent").unwrap();
    assert_eq!(nil["para_hamiltonian"], false);

    let o = run(&["census", "--scope", "sym:6", "--scope", "cyclic:2"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("skipped"));
}

#[test]
fn lattice_examples_and_cache() {
    let dir = tempfile::tempdir().unwrap();
    for (spec, count) in [("alt:5", 59), ("sl:2:5", 76), ("sym:4", 30)] {
        let o = run_in(&["lattice", spec, "--format", "json"], Some(dir.path()));
        assert_eq!(code(&o), 0, "{}", stderr(&o));
        assert_eq!(json(&o)["subgroups"], count, "{spec}");
    }
    let v = json(&run_in(&["lattice", "alt:5", "--format", "json"], Some(dir.path())));
    assert_eq!(v["conjugacy_classes"], 9);
    assert_eq!(v["normal_subgroups"].as_array().unwrap().len(), 2);

    let files: Vec<_> = std::fs::read_dir(dir.path()).unwrap().map(|e| e.unwrap().path()).collect();
    assert_eq!(files.len(), 3);

    let first = stdout(&run_in(&["lattice", "alt:5"], Some(dir.path())));
    for f in &files {
        std::fs::write(f, "{ not a lattice").unwrap();
    }
    let o = run_in(&["lattice", "alt:5"], Some(dir.path()));
    assert_eq!(code(&o), 0);
    assert!(stderr(&o).contains("warning"), "{}", stderr(&o));
    assert_eq!(stdout(&o), first);

    let other = tempfile::tempdir().unwrap();
    let o = run_in(&["lattice", "sym:4", "--cache-dir", other.path().to_str().unwrap()], Some(dir.path()));
    assert_eq!(code(&o), 0);
    assert_eq!(std::fs::read_dir(other.path()).unwrap().count(), 1);
}
