use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

const GAP: &str = r#"{"n":1,"m":2,"k":2,"L":[["0"],["0"]],"A":[["1"],["1"]],"b":["-1","-1"],"cone":{"orthant":2}}"#;
const SEG: &str = r#"{"n":2,"m":1,"k":2,"L":[["1","0"],["0","1"]],"A":[["1","1"]],"b":["1"],"cone":{"orthant":2}}"#;
const ZB: &str = r#"{"n":2,"m":1,"k":2,"L":[["-1","1"],["1","-1"]],"A":[["0","0"]],"b":["0"],"cone":{"orthant":2}}"#;
const SKEW: &str = r#"{"n":2,"m":1,"k":2,"L":[["1","0"],["0","1"]],"A":[["1","1"]],"b":["1"],
    "cone":{"dim":2,"generators":[["1","0"],["1","1"]]}}"#;
const RAY: &str = r#"{"n":2,"m":1,"k":2,"L":[["1","0"],["0","1"]],"A":[["1","-1"]],"b":["0"],"cone":{"orthant":2}}"#;
const BAD_DIMS: &str =
    r#"{"n":2,"m":1,"k":2,"L":[["1","0"],["0","1"]],"A":[["1","1","1"]],"b":["1"],"cone":{"orthant":2}}"#;
const FLOATS: &str = r#"{"n":1,"m":1,"k":1,"L":[["0.5"]],"A":[["1"]],"b":["1"],"cone":{"orthant":1}}"#;

struct Workspace {
    dir: TempDir,
}

impl Workspace {
    fn new() -> Self {
        Workspace {
            dir: TempDir::new().unwrap(),
        }
    }

    fn file(&self, name: &str, body: &str) -> PathBuf {
        let path = self.dir.path().join(name);
        std::fs::write(&path, body).unwrap();
        path
    }
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_vecdual")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("bad JSON ({e}): {}", stdout(o)))
}

fn p(path: &Path) -> &str {
    path.to_str().unwrap()
}

#[test]
fn examples_run_every_fixture() {
    let o = run(&["examples"]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    let out = stdout(&o);
    for name in ["FIX-GAP", "FIX-ZB", "FIX-SEG"] {
        assert!(out.contains(name), "{name} missing");
    }
    assert!(!out.contains("FAIL"));
}

#[test]
fn worked_example_value_is_not_in_the_dual_image() {
    let ws = Workspace::new();
    let f = ws.file("problem_gap.json", GAP);
    let o = run(&["member", p(&f), "--set", "hB", "--value", "[-1,-1]"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("not a member"));
    let o = run(&[
        "member",
        p(&f),
        "--set",
        "hL",
        "--value",
        r#"["-1","-1"]"#,
        "--format",
        "json",
    ]);
    assert_eq!(code(&o), 0);
    assert_eq!(json(&o)["member"], Value::Bool(true));
}

#[test]
fn bad_dimensions_name_the_field() {
    let ws = Workspace::new();
    let f = ws.file("bad_dims.json", BAD_DIMS);
    let o = run(&["validate", p(&f)]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("`A`"));
}

#[test]
fn decimal_entries_are_rejected() {
    let ws = Workspace::new();
    let f = ws.file("floats.json", FLOATS);
    assert_eq!(code(&run(&["validate", p(&f)])), 2);
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(code(&run(&[])), 2);
    assert_eq!(code(&run(&["vertices", "/no/such/file.json"])), 2);
    assert_eq!(code(&run(&["campaign", "--seed", "1", "--count", "1", "--bogus"])), 2);
    assert_eq!(code(&run(&["campaign", "--seed", "1", "--count", "0"])), 2);
}

#[test]
fn member_witness_passes_check_dual() {
    let ws = Workspace::new();
    for (name, body) in [("seg", SEG), ("zb", ZB), ("skew", SKEW), ("gap", GAP)] {
        let f = ws.file(&format!("{name}.json"), body);
        let mut values: Vec<String> = vec![r#"["0","0"]"#.into(), r#"["1","-1"]"#.into(), r#"["-1","-1"]"#.into()];
        let e = json(&run(&["efficient", p(&f), "--format", "json"]));
        for item in e["efficient"].as_array().unwrap() {
            values.push(item["image"].to_string());
        }
        for (set, kind) in [("hB", "D"), ("hL", "L"), ("hJ", "J")] {
            for value in &values {
                let o = run(&[
                    "member",
                    p(&f),
                    "--set",
                    set,
                    "--value",
                    value,
                    "--witness",
                    "--format",
                    "json",
                ]);
                assert_eq!(code(&o), 0);
                let verdict = json(&o);
                if verdict["member"] != Value::Bool(true) {
                    continue;
                }
                let w = ws.file("witness.json", &stdout(&o));
                let check = run(&["check-dual", p(&f), "--dual", p(&w), "--kind", kind, "--format", "json"]);
                assert_eq!(code(&check), 0, "{name} {set} {value}: {}", stdout(&check));
                assert_eq!(json(&check)["feasible"], Value::Bool(true));
            }
        }
    }
}

#[test]
fn dual_construction_round_trips_through_recover() {
    let ws = Workspace::new();
    let f = ws.file("seg.json", SEG);
    let o = run(&["dual-construct", p(&f), "--point", r#"["1","0"]"#, "--format", "json"]);
    assert_eq!(code(&o), 0);
    let built = json(&o);
    assert_eq!(built["objective"], serde_json::json!(["1", "0"]));
    let d = ws.file("dual.json", &stdout(&o));
    assert_eq!(code(&run(&["check-dual", p(&f), "--dual", p(&d), "--kind", "D"])), 0);
    let rec = run(&[
        "recover",
        p(&f),
        "--value",
        &built["objective"].to_string(),
        "--format",
        "json",
    ]);
    assert_eq!(code(&rec), 0);
    assert_eq!(json(&rec)["x"], serde_json::json!(["1", "0"]));
}

#[test]
fn dominated_point_is_a_failed_construction() {
    let ws = Workspace::new();
    let f = ws.file("ray.json", RAY);
    let o = run(&["certify", p(&f), "--point", r#"["1","1"]"#, "--format", "json"]);
    assert_eq!(code(&o), 0);
    assert_eq!(json(&o)["certificate"]["kind"], "dominated");
    assert_eq!(code(&run(&["dual-construct", p(&f), "--point", r#"["1","1"]"#])), 1);
    let seg = ws.file("seg.json", SEG);
    let o = run(&["certify", p(&seg), "--point", r#"["1","0"]"#, "--format", "json"]);
    assert_eq!(code(&o), 0);
    assert_eq!(json(&o)["certificate"]["kind"], "efficient-with-scalarization");
}

#[test]
fn campaign_json_is_deterministic_without_timings() {
    let args = [
        "campaign",
        "--seed",
        "42",
        "--count",
        "3",
        "--no-timings",
        "--format",
        "json",
    ];
    let (a, b) = (run(&args), run(&args));
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    let records = json(&a);
    let first = &records.as_array().unwrap()[0];
    for key in ["check", "instance", "status", "witness", "elapsed_ms"] {
        assert!(first.get(key).is_some(), "missing {key}");
    }
}

#[test]
fn verify_reports_every_check() {
    let ws = Workspace::new();
    let f = ws.file("skew.json", SKEW);
    let o = run(&["verify", p(&f), "--format", "json"]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    assert_eq!(json(&o).as_array().unwrap().len(), vecdual::harness::CHECKS.len());
}

#[test]
fn every_subcommand_emits_parseable_json() {
    let ws = Workspace::new();
    let f = ws.file("seg.json", SEG);
    let cases: Vec<Vec<&str>> = vec![
        vec!["validate", p(&f)],
        vec!["vertices", p(&f)],
        vec!["efficient", p(&f)],
        vec!["certify", p(&f), "--point", r#"["0","1"]"#],
        vec!["recover", p(&f), "--value", r#"["0","1"]"#],
        vec!["member", p(&f), "--set", "hJ", "--value", r#"["0","1"]"#],
        vec!["examples"],
    ];
    for mut args in cases {
        args.extend(["--format", "json"]);
        let o = run(&args);
        assert_eq!(code(&o), 0, "{args:?}");
        json(&o);
    }
}
