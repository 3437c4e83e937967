use nalab::catalog::{self, AlgebraSpec};
use nalab::cli::{run, EXIT_FAILED, EXIT_OK, EXIT_USAGE};
use nalab::freealg::{golden_table, parse_row, Triple};

#[test]
fn check_holds_in_quaternions() {
    let (code, out) = run(["nalab", "check", "H", "--identity", "1,1,2"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out.trim(), "holds (symbolic)");
}

#[test]
fn failed_check_exits_one_with_witness() {
    let (code, out) = run(["nalab", "check", "*H", "--identity", "1,1,1"]);
    assert_eq!(code, EXIT_FAILED);
    assert!(out.starts_with("fails (symbolic)"));
    assert!(out.contains("witness: x = "));
}

#[test]
fn polarize_prints_the_table_row() {
    let (code, out) = run(["nalab", "polarize", "2", "2", "2", "--m", "3"]);
    assert_eq!(code, EXIT_OK);
    let line = out.trim();
    let expr = line
        .strip_prefix("(2.2.2.3) ")
        .and_then(|s| s.strip_suffix(" = 0"))
        .expect("row format");
    let printed = parse_row(&expr.replace(' ', "")).unwrap();
    assert_eq!(printed, golden_table(Triple::new(2, 2, 2).unwrap(), 3).unwrap());
}

#[test]
fn polarize_lists_every_component() {
    let (_, out) = run(["nalab", "polarize", "1", "2", "2"]);
    assert_eq!(out.lines().count(), 4);
    let (code, _) = run(["nalab", "polarize", "1", "1", "1", "--m", "3"]);
    assert_eq!(code, EXIT_USAGE);
}

#[test]
fn usage_errors_exit_two() {
    for argv in [
        vec!["nalab", "frobnicate"],
        vec!["nalab", "check", "H"],
        vec!["nalab", "check", "H", "--identity", "1,3,1"],
        vec!["nalab", "check", "Z", "--identity", "1,1,1"],
        vec!["nalab", "predicate", "H", "--name", "commutative"],
        vec!["nalab", "polarize", "3", "1", "1"],
        vec!["nalab", "degree", "H", "--format", "yaml"],
    ] {
        let (code, out) = run(argv.clone());
        assert_eq!(code, EXIT_USAGE, "{argv:?}: {out}");
    }
}

#[test]
fn list_and_show() {
    let (code, out) = run(["nalab", "list"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out.lines().count(), catalog::entries().len());
    let (_, out) = run(["nalab", "show", "H"]);
    assert!(out.contains("i * j = k"));
    assert!(out.contains("j * i = -k"));
}

#[test]
fn units_degree_division() {
    let (_, out) = run(["nalab", "units", "*O"]);
    assert!(out.contains("has_left_unit: true"));
    assert!(out.contains("has_right_unit: false"));
    let (_, out) = run(["nalab", "degree", "P"]);
    assert_eq!(out.trim(), "degree 2");
    let (code, out) = run(["nalab", "division", "O", "--trials", "50", "--seed", "4"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("50 trials (seed 4)"));
}

#[test]
fn division_failure_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("dual.json");
    // Dual numbers: e*e = e, e*t = t*e = t, t*t = 0.
    let spec = AlgebraSpec::from_json(
        r#"{"name": "D", "dim": 2, "field": "Q", "basis": ["e", "t"],
            "constants": [[0,0,0,"1"], [0,1,1,"1"], [1,0,1,"1"]]}"#,
    )
    .unwrap();
    spec.write(&path).unwrap();
    let p = path.to_str().unwrap();
    let (code, out) = run(["nalab", "division", p]);
    assert_eq!(code, EXIT_FAILED, "{out}");
    let (code, out) = run(["nalab", "check", p, "--identity", "2,1,2"]);
    assert_eq!((code, out.trim()), (EXIT_OK, "holds (symbolic)"));
}

#[test]
fn malformed_file_reports_position() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    std::fs::write(&path, "{\n  \"name\": \"B\",\n  \"dim\": oops\n}\n").unwrap();
    let (code, out) = run(["nalab", "degree", path.to_str().unwrap()]);
    assert_eq!(code, EXIT_USAGE);
    assert!(out.contains("line 3"), "{out}");
}

#[test]
fn structured_output_is_versioned() {
    let (code, out) = run(["nalab", "predicate", "P", "--name", "TPA", "--format", "structured"]);
    assert_eq!(code, EXIT_OK);
    let doc: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(doc["schema_version"], 1);
    assert_eq!(doc["command"], "predicate");
    assert_eq!(doc["result"]["property"]["value"], true);
    assert_eq!(doc["result"]["property"]["mode"], "symbolic-proof");
}

#[test]
fn structured_witness_coordinates_parse() {
    let (_, out) = run(["nalab", "check", "⋆O", "--identity", "1,1,2", "--format", "structured"]);
    let doc: serde_json::Value = serde_json::from_str(&out).unwrap();
    let w = &doc["result"]["check"]["witness"];
    let x: nalab::algebra::Element = serde_json::from_value(w["x"].clone()).unwrap();
    assert_eq!(x.dim(), 8);
}

#[test]
fn report_and_paper_verify_succeed() {
    let (code, out) = run(["nalab", "report", "P"]);
    assert_eq!(code, EXIT_OK, "{out}");
    assert!(out.contains("flexible-not-pa-role: consistent"));
    let (code, out) = run(["nalab", "paper-verify"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains(", 0 failed"));
    assert!(!out.contains("FAIL"));
}
