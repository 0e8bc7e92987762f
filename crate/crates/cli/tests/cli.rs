use std::path::{Path, PathBuf};
use std::process::Command;

use evprop_cli::ModuleDocument;
use serde_json::Value;

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn evprop(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_evprop"))
        .args(args)
        .env_remove("EVPROP_CAP")
        .env_remove("EVPROP_SEED")
        .output()
        .unwrap();
    Run {
        code: out.status.code().unwrap(),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

fn construct(dir: &Path, name: &str) -> PathBuf {
    let file = dir.join(format!("{}.json", name.replace([':', ','], "_")));
    let run = evprop(&["construct", "--name", name, "-o", file.to_str().unwrap()]);
    assert_eq!(run.code, 0, "{}", run.stderr);
    file
}

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let file = dir.join(name);
    std::fs::write(&file, text).unwrap();
    file
}

fn schema() -> jsonschema::JSONSchema {
    let text = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/../../docs/report.schema.json")).unwrap();
    let schema: Value = serde_json::from_str(&text).unwrap();
    jsonschema::JSONSchema::compile(&schema).unwrap()
}

fn assert_valid(schema: &jsonschema::JSONSchema, text: &str) {
    let value: Value = serde_json::from_str(text).unwrap();
    let msgs: Vec<String> = match schema.validate(&value) {
        Ok(()) => Vec::new(),
        Err(errors) => errors.map(|e| format!("{e} at {}", e.instance_path)).collect(),
    };
    assert!(msgs.is_empty(), "schema violations: {msgs:?}");
}

#[test]
fn m_is_rational() {
    let dir = tempfile::tempdir().unwrap();
    let m = construct(dir.path(), "M");
    let run = evprop(&["check", "rationality", m.to_str().unwrap()]);
    assert_eq!(run.code, 0);
    assert!(run.stdout.contains("pass"));
}

#[test]
fn classify_q8() {
    let dir = tempfile::tempdir().unwrap();
    let q8 = construct(dir.path(), "q8-sl25");
    let run = evprop(&["classify", q8.to_str().unwrap(), "--json"]);
    assert_eq!(run.code, 0);
    let report: Value = serde_json::from_str(&run.stdout).unwrap();
    assert_eq!(report["verdict"], "classified");
    assert_eq!(report["n"], 1);
    assert_eq!(report["k_order"], 1);
}

#[test]
fn classify_rejects_cyclic_group() {
    let dir = tempfile::tempdir().unwrap();
    let c4 = construct(dir.path(), "cyclic4");
    let run = evprop(&["classify", c4.to_str().unwrap()]);
    assert_eq!(run.code, 1);
    assert!(run.stdout.contains("hypothesis_failed"));
}

#[test]
fn sharpness_control() {
    let dir = tempfile::tempdir().unwrap();
    let f3 = construct(dir.path(), "f3-c2");
    let run = evprop(&["verify", "prop32", f3.to_str().unwrap()]);
    assert_eq!(run.code, 1);
    assert!(run.stdout.contains("p = 3 < 5"));
}

#[test]
fn construction_documents_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    for name in [
        "M",
        "q8-sl25",
        "f3-c2",
        "cyclic4",
        "quaternion:4",
        "wreath:q8-sl25:1,0",
        "wreath:q8-sl25:2",
        "sylow2-gl25",
    ] {
        let file = construct(dir.path(), name);
        let text = std::fs::read_to_string(&file).unwrap();
        let doc = ModuleDocument::parse(&text).unwrap();
        assert_eq!(doc.to_text(), text, "{name}");
    }
}

#[test]
fn semidirect_of_a_document() {
    let dir = tempfile::tempdir().unwrap();
    let q8 = construct(dir.path(), "q8-sl25");
    let id = format!("semidirect:{}", q8.display());
    let run = evprop(&["construct", "--name", &id]);
    assert_eq!(run.code, 0);
    let doc = ModuleDocument::parse(&run.stdout).unwrap();
    assert_eq!(doc.to_module(1000).unwrap().group().order(), 200);
}

#[test]
fn document_errors_are_distinct() {
    let dir = tempfile::tempdir().unwrap();
    let cases = [
        ("malformed.json", "{\"p\":5,\"dim\":", "malformed document"),
        (
            "range.json",
            "{\"p\":5,\"dim\":1,\"generators\":[[[9]]]}",
            "entry 9 of generator 1 out of range for modulus 5",
        ),
        (
            "singular.json",
            "{\"p\":5,\"dim\":2,\"generators\":[[[1,2],[2,4]]]}",
            "generator 1 not invertible mod 5",
        ),
        (
            "prime.json",
            "{\"p\":9,\"dim\":1,\"generators\":[[[1]]]}",
            "p = 9 is not a prime",
        ),
    ];
    for (name, text, message) in cases {
        let file = write(dir.path(), name, text);
        let run = evprop(&["check", "fpf", file.to_str().unwrap()]);
        assert_eq!(run.code, 2, "{name}");
        assert!(run.stderr.contains(message), "{name}: {}", run.stderr);
    }
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(evprop(&[]).code, 2);
    assert_eq!(evprop(&["verify", "nonsense"]).code, 2);
    assert_eq!(evprop(&["construct", "--name", "wreath:q8-sl25:1,x"]).code, 2);
    assert_eq!(evprop(&["check", "evp", "/nonexistent/file.json"]).code, 2);
    let dir = tempfile::tempdir().unwrap();
    let q8 = construct(dir.path(), "q8-sl25");
    assert_eq!(evprop(&["verify", "gl25scan", q8.to_str().unwrap()]).code, 2);
    // the closure cap is enforced
    let run = evprop(&["--cap", "4", "classify", q8.to_str().unwrap()]);
    assert_eq!(run.code, 2);
    assert!(run.stderr.contains("cap 4"));
}

#[test]
fn oversized_scan_is_inconclusive() {
    let dir = tempfile::tempdir().unwrap();
    let q32 = construct(dir.path(), "quaternion:5");
    let run = evprop(&["check", "evp", q32.to_str().unwrap()]);
    assert_eq!(run.code, 3);
    assert!(run.stdout.contains("inconclusive"));
}

#[test]
fn environment_defaults() {
    let dir = tempfile::tempdir().unwrap();
    let q8 = construct(dir.path(), "q8-sl25");
    let out = Command::new(env!("CARGO_BIN_EXE_evprop"))
        .args(["classify", q8.to_str().unwrap()])
        .env("EVPROP_CAP", "4")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn json_reports_match_schema() {
    let schema = schema();
    let dir = tempfile::tempdir().unwrap();
    let run = evprop(&["verify", "all", "--json"]);
    assert_eq!(run.code, 0);
    assert_valid(&schema, &run.stdout);
    for name in ["q8-sl25", "cyclic4", "wreath:q8-sl25:1,0", "f3-c2"] {
        let file = construct(dir.path(), name);
        let path = file.to_str().unwrap();
        assert_valid(&schema, &evprop(&["classify", path, "--json"]).stdout);
        for check in ["rationality", "evp", "fpf", "forms"] {
            assert_valid(&schema, &evprop(&["check", check, path, "--json"]).stdout);
        }
        for driver in ["remark21", "lemma22", "prop32", "prop34", "theoremA"] {
            assert_valid(&schema, &evprop(&["verify", driver, path, "--json"]).stdout);
        }
    }
}
