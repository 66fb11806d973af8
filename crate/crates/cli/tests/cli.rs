//! End-to-end tests of the binary: exit-code contract, JSON-pointer
//! errors on malformed input, and byte-identical reports for identical
//! inputs.

use std::path::Path;
use std::process::{Command, Output};

fn equifloer(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_equifloer"))
        .args(args)
        .current_dir(dir)
        .output()
        .expect("binary runs")
}

fn write(dir: &Path, name: &str, contents: &str) {
    std::fs::write(dir.join(name), contents).unwrap();
}

#[test]
fn example_suites_pass_with_exit_zero() {
    let dir = tempfile::tempdir().unwrap();
    for suite in [
        "cp1-z3",
        "cp2-z3",
        "dbsing",
        "morse-circle",
        "morse-sphere",
        "free-quotient",
    ] {
        let out = equifloer(&["examples", suite, "--json"], dir.path());
        assert!(
            out.status.success(),
            "{suite} failed: {}",
            String::from_utf8_lossy(&out.stdout)
        );
        let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
        let results = report["results"].as_object().unwrap();
        assert!(!results.is_empty());
        for (name, r) in results {
            assert_eq!(r["status"], "pass", "check {name} did not pass");
        }
    }
}

#[test]
fn cp1_suite_reports_its_factorization_checks() {
    let dir = tempfile::tempdir().unwrap();
    let out = equifloer(&["examples", "cp1-z3", "--json"], dir.path());
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let results = report["results"].as_object().unwrap();
    for check in [
        "mf-balanced-verifies",
        "mf-invariant-verifies",
        "mf-downstairs-verifies",
    ] {
        assert_eq!(results[check]["status"], "pass");
    }
}

#[test]
fn h2_of_z3_is_zero() {
    let dir = tempfile::tempdir().unwrap();
    write(
        dir.path(),
        "z3.json",
        r#"{"order": 3, "table": [[0, 1, 2], [1, 2, 0], [2, 0, 1]]}"#,
    );
    let out = equifloer(
        &["cohomology", "h2", "--group", "z3.json", "--json"],
        dir.path(),
    );
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["results"]["dimension"]["value"], 0);
}

#[test]
fn malformed_table_exits_two_with_pointer() {
    let dir = tempfile::tempdir().unwrap();
    write(
        dir.path(),
        "bad.json",
        r#"{"order": 2, "table": [[0, 1], [1, 1]]}"#,
    );
    let out = equifloer(&["cohomology", "h2", "--group", "bad.json"], dir.path());
    assert_eq!(out.status.code(), Some(2));
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("/table/1"), "stderr was: {stderr}");
}

#[test]
fn zero_denominator_exits_two_with_pointer() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "s.json", r#"{"cutoff": "1/0", "terms": []}"#);
    write(dir.path(), "t.json", r#"{"cutoff": "1/1", "terms": []}"#);
    let out = equifloer(&["novikov", "add", "s.json", "t.json"], dir.path());
    assert_eq!(out.status.code(), Some(2));
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("/cutoff"), "stderr was: {stderr}");
}

#[test]
fn unknown_subcommand_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let out = equifloer(&["frobnicate"], dir.path());
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn failed_check_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "z2.json", r#"{"order": 2, "table": [[0, 1], [1, 0]]}"#);
    write(dir.path(), "spf0.json", r#"{"values": [[0, 0], [0, 1]]}"#);
    write(dir.path(), "zero.json", r#"{"values": [[0, 0], [0, 0]]}"#);
    write(dir.path(), "sp.json", r#"{"values": [0, 0]}"#);
    let out = equifloer(
        &[
            "complex",
            "signed-action",
            "--group",
            "z2.json",
            "--spf0",
            "spf0.json",
            "--spf1",
            "zero.json",
            "--sp",
            "sp.json",
        ],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn novikov_mul_matches_golden_value() {
    let dir = tempfile::tempdir().unwrap();
    write(
        dir.path(),
        "a.json",
        r#"{"cutoff": "3/1", "terms": [["0/1", "1/1"], ["1/1", "1/1"]]}"#,
    );
    write(
        dir.path(),
        "b.json",
        r#"{"cutoff": "3/1", "terms": [["0/1", "1/1"], ["1/1", "-1/1"]]}"#,
    );
    let out = equifloer(&["novikov", "mul", "a.json", "b.json", "--json"], dir.path());
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(
        report["results"]["result"]["value"]["terms"],
        serde_json::json!([["0/1", "1/1"], ["2/1", "-1/1"]])
    );
}

#[test]
fn identical_inputs_give_byte_identical_json_reports() {
    let dir = tempfile::tempdir().unwrap();
    write(
        dir.path(),
        "z4.json",
        r#"{"order": 4, "table": [[0,1,2,3],[1,2,3,0],[2,3,0,1],[3,0,1,2]]}"#,
    );
    let args = ["cohomology", "h2", "--group", "z4.json", "--json"];
    let first = equifloer(&args, dir.path());
    let second = equifloer(&args, dir.path());
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout, "reports must be byte-identical");
    // the same holds for a compiled-in suite
    let first = equifloer(&["examples", "cp2-z3", "--side", "a", "--json"], dir.path());
    let second = equifloer(&["examples", "cp2-z3", "--side", "a", "--json"], dir.path());
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn g_alpha_maslov_flag_changes_the_answer() {
    let dir = tempfile::tempdir().unwrap();
    // the antipodal square: energies zero, Maslov 1 on opposite edges
    write(
        dir.path(),
        "square.json",
        r#"{
            "group": {"order": 2, "table": [[0, 1], [1, 0]]},
            "vertices": ["a", "b", "a2", "b2"],
            "edges": [
                {"from": "a", "to": "b", "energy": "0/1", "maslov": 1},
                {"from": "b", "to": "a2", "energy": "0/1"},
                {"from": "a2", "to": "b2", "energy": "0/1", "maslov": 1},
                {"from": "b2", "to": "a", "energy": "0/1"}
            ],
            "vertex_action": [
                [0, "a", "a"], [0, "b", "b"], [0, "a2", "a2"], [0, "b2", "b2"],
                [1, "a", "a2"], [1, "b", "b2"], [1, "a2", "a"], [1, "b2", "b"]
            ],
            "basepoint": "a"
        }"#,
    );
    let plain = equifloer(&["complex", "g-alpha", "square.json", "--json"], dir.path());
    assert!(plain.status.success());
    let report: serde_json::Value = serde_json::from_slice(&plain.stdout).unwrap();
    assert_eq!(report["results"]["members"]["value"], serde_json::json!([0, 1]));
    let strict = equifloer(
        &["complex", "g-alpha", "square.json", "--maslov", "--json"],
        dir.path(),
    );
    let report: serde_json::Value = serde_json::from_slice(&strict.stdout).unwrap();
    assert_eq!(report["results"]["members"]["value"], serde_json::json!([0]));
}

#[test]
fn ainf_check_reports_failing_tuple() {
    let dir = tempfile::tempdir().unwrap();
    // (xx)x = yx = x but x(xx) = xy = 0: not associative
    write(
        dir.path(),
        "bad.json",
        r#"{
            "basis": [{"id": "x", "degree": 0}, {"id": "y", "degree": 0}],
            "max_arity": 3,
            "ops": [
                {"arity": 2, "inputs": ["x", "x"], "output": "y", "coeff": "1/1"},
                {"arity": 2, "inputs": ["y", "x"], "output": "x", "coeff": "1/1"}
            ]
        }"#,
    );
    let out = equifloer(&["ainf", "check", "bad.json", "--arity", "3", "--json"], dir.path());
    assert_eq!(out.status.code(), Some(1));
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["results"]["relations"]["status"], "fail");
    assert!(report["results"]["relations"]["value"]["failing_tuple"].is_array());
}

#[test]
fn weak_action_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    // Ψ_g = 2·id with σ = 3τ, τ(v) = u: the corrected square example
    write(
        dir.path(),
        "weak.json",
        r#"{
            "basis": [{"id": "u", "degree": 0}, {"id": "v", "degree": 1}],
            "m1": [["0/1", "0/1"], ["1/1", "0/1"]],
            "group": {"order": 2, "table": [[0, 1], [1, 0]]},
            "psi": [
                [["1/1", "0/1"], ["0/1", "1/1"]],
                [["2/1", "0/1"], ["0/1", "2/1"]]
            ],
            "sigma": [{"g": 1, "h": 1, "matrix": [["0/1", "3/1"], ["0/1", "0/1"]]}]
        }"#,
    );
    let out = equifloer(&["ainf", "weak-action", "weak.json", "--json"], dir.path());
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    // dropping the homotopy breaks the identity
    write(
        dir.path(),
        "broken.json",
        r#"{
            "basis": [{"id": "u", "degree": 0}, {"id": "v", "degree": 1}],
            "m1": [["0/1", "0/1"], ["1/1", "0/1"]],
            "group": {"order": 2, "table": [[0, 1], [1, 0]]},
            "psi": [
                [["1/1", "0/1"], ["0/1", "1/1"]],
                [["2/1", "0/1"], ["0/1", "2/1"]]
            ]
        }"#,
    );
    let out = equifloer(&["ainf", "weak-action", "broken.json"], dir.path());
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn averaging_through_the_cli() {
    let dir = tempfile::tempdir().unwrap();
    let space = r#"{
        "basis": [{"id": "a", "degree": 0}, {"id": "b", "degree": 0}],
        "max_arity": 1,
        "ops": []
    }"#;
    write(dir.path(), "space.json", space);
    write(
        dir.path(),
        "swap.json",
        r#"{
            "group": {"order": 2, "table": [[0, 1], [1, 0]]},
            "matrices": [
                [["1/1", "0/1"], ["0/1", "1/1"]],
                [["0/1", "1/1"], ["1/1", "0/1"]]
            ]
        }"#,
    );
    write(
        dir.path(),
        "f.json",
        r#"{
            "max_arity": 1,
            "components": [
                {"arity": 1, "inputs": ["a"], "output": "a", "coeff": "1/1"}
            ]
        }"#,
    );
    let out = equifloer(
        &[
            "ainf", "average", "f.json", "space.json", "space.json", "swap.json",
            "swap.json", "--json",
        ],
        dir.path(),
    );
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["results"]["equivariant-after-averaging"]["status"], "pass");
    let averaged = report["results"]["averaged"]["value"].as_array().unwrap();
    assert_eq!(averaged.len(), 2);
    assert_eq!(averaged[0]["coeff"], "1/2");
}

#[test]
fn bimodule_equivariance_through_the_cli() {
    let dir = tempfile::tempdir().unwrap();
    let rep = r#"{
        "group": {"order": 1, "table": [[0]]},
        "matrices": [[["1/1"]]]
    }"#;
    write(
        dir.path(),
        "bimodule.json",
        &format!(
            r#"{{
                "c1_basis": [{{"id": "x", "degree": 0}}],
                "m_basis": [{{"id": "m", "degree": 0}}],
                "c2_basis": [{{"id": "y", "degree": 0}}],
                "arity_bound": 2,
                "entries": [
                    {{"a_inputs": ["x"], "m_input": "m", "b_inputs": [],
                      "output": "m", "coeff": "1/1"}}
                ],
                "rep_c1": {rep},
                "rep_m": {rep},
                "rep_c2": {rep}
            }}"#
        ),
    );
    let out = equifloer(&["ainf", "bimodule", "bimodule.json"], dir.path());
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
}

#[test]
fn cyclotomic_field_flag_parses_t_coefficients() {
    let dir = tempfile::tempdir().unwrap();
    // one-dimensional space with m₂(x, x) = (1 + t + t²) x = 0·x — an
    // empty product in disguise; the relation holds
    write(
        dir.path(),
        "cyc.json",
        r#"{
            "basis": [{"id": "x", "degree": 0}],
            "max_arity": 2,
            "ops": [
                {"arity": 2, "inputs": ["x", "x"], "output": "x", "coeff": "1+t+t^2"}
            ]
        }"#,
    );
    let out = equifloer(
        &["ainf", "check", "cyc.json", "--field", "cyclotomic3", "--json"],
        dir.path(),
    );
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
}
