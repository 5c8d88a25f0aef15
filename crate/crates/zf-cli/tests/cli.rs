//! End-to-end tests of the `zf` binary: output bytes, exit codes, and the
//! family -> param round trip.

use std::io::Write as _;
use std::process::{Command, Output, Stdio};

fn zf(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_zf"))
        .args(args)
        .env_remove("ZF_SIZE_LIMIT")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8 stdout")
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("utf8 stderr")
}

#[test]
fn param_cycle_six_fault_tolerant_number() {
    let out = zf(&[
        "param", "--family", "cycle:6", "--zt", "1", "--format", "json",
    ]);
    assert!(out.status.success());
    let line = stdout(&out);
    assert!(
        line.starts_with(r#"{"parameter":"zt","k":1,"value":4,"#),
        "got: {line}"
    );
}

#[test]
fn param_fixture_witness_includes_known_optimum() {
    let out = zf(&[
        "param",
        "--fixture",
        "fig2_mummal",
        "--zt",
        "1",
        "--format",
        "json",
    ]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["value"], 4);
    let witnesses = v["witnesses"].as_array().unwrap();
    assert!(witnesses.contains(&serde_json::json!([0, 1, 4, 5])));
}

#[test]
fn param_two_fault_set_on_two_vertices_does_not_exist() {
    let out = zf(&[
        "param", "--family", "path:2", "--zt", "2", "--format", "json",
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).contains(r#""value":"not_exists""#));
}

#[test]
fn param_selects_all_four_parameters_by_default() {
    let out = zf(&["param", "--fixture", "fig1_house", "--format", "json"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let params: Vec<String> = text
        .lines()
        .map(|l| {
            serde_json::from_str::<serde_json::Value>(l).unwrap()["parameter"]
                .as_str()
                .unwrap()
                .to_string()
        })
        .collect();
    assert_eq!(params, ["zf", "zt", "pt", "fpt"]);
}

#[test]
fn family_output_pipes_back_into_param() {
    let family = zf(&["family", "--spec", "cycle:6"]);
    assert!(family.status.success());
    let direct = zf(&[
        "param", "--family", "cycle:6", "--zt", "1", "--format", "json",
    ]);

    let mut child = Command::new(env!("CARGO_BIN_EXE_zf"))
        .args(["param", "--input", "-", "--zt", "1", "--format", "json"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(&family.stdout)
        .unwrap();
    let piped = child.wait_with_output().unwrap();
    assert!(piped.status.success());
    assert_eq!(piped.stdout, direct.stdout);
}

#[test]
fn repeated_runs_are_byte_identical() {
    for args in [
        vec!["param", "--fixture", "fig2_mummal", "--format", "json"],
        vec![
            "ops",
            "--fixture",
            "fig5_gme",
            "--op",
            "delete-edge",
            "--format",
            "json",
        ],
        vec!["verify", "--scope", "ex.delta.*", "--format", "json"],
    ] {
        let a = zf(&args);
        let b = zf(&args);
        assert!(a.status.success(), "{args:?} failed: {}", stderr(&a));
        assert_eq!(a.stdout, b.stdout, "output differs for {args:?}");
    }
}

#[test]
fn trace_reports_rounds_and_forcing_verdict() {
    let out = zf(&[
        "trace",
        "--fixture",
        "fig1_house",
        "--set",
        "0,1",
        "--format",
        "json",
    ]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["layers"].as_array().unwrap().len(), 2);
    assert_eq!(v["forcing"], true);

    let out = zf(&[
        "trace",
        "--fixture",
        "fig1_house",
        "--set",
        "1,2",
        "--format",
        "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["layers"].as_array().unwrap().len(), 0);
    assert_eq!(v["forcing"], false);
}

#[test]
fn trace_writes_dot_frames() {
    let dir = std::env::temp_dir().join(format!("zf-dot-{}", std::process::id()));
    let dir_str = dir.to_str().unwrap();
    let out = zf(&[
        "trace",
        "--fixture",
        "fig1_house",
        "--set",
        "0,1",
        "--dot",
        dir_str,
    ]);
    assert!(out.status.success());
    let mut frames: Vec<_> = std::fs::read_dir(&dir)
        .unwrap()
        .map(|e| e.unwrap().file_name().into_string().unwrap())
        .collect();
    frames.sort();
    assert_eq!(frames, ["frame-00.dot", "frame-01.dot", "frame-02.dot"]);
    let last = std::fs::read_to_string(dir.join("frame-02.dot")).unwrap();
    assert!(last.contains("4 [style=filled"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn ops_emits_not_exists_rows_instead_of_skipping() {
    let out = zf(&[
        "ops",
        "--fixture",
        "fig5_gme",
        "--op",
        "delete-edge",
        "--format",
        "json",
    ]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["base"], 4);
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 7);
    assert!(rows
        .iter()
        .any(|r| r["value"] == "not_exists" && r["delta"].is_null()));
    let find = |edge: [usize; 2]| {
        rows.iter()
            .find(|r| r["operand"] == serde_json::json!(edge))
            .unwrap()["delta"]
            .clone()
    };
    assert_eq!(find([0, 1]), 0);
    assert_eq!(find([1, 2]), 1);
    assert_eq!(find([3, 4]), -1);
    assert_eq!(find([2, 3]), -2);
}

#[test]
fn verify_passing_scope_exits_zero() {
    let out = zf(&["verify", "--scope", "ex.delta.*"]);
    assert!(out.status.success(), "stderr: {}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("summary: 5 passed, 0 failed"));
}

#[test]
fn verify_failing_claim_exits_one_with_counterexample() {
    let out = zf(&[
        "verify",
        "--scope",
        "thm.families.wheel",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["status"], "fail");
    assert!(v["counterexample"].as_str().unwrap().contains("n=5"));
}

#[test]
fn verify_unknown_scope_is_an_input_error() {
    let out = zf(&["verify", "--scope", "no.such.claim"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("matches no claims"));
}

#[test]
fn input_errors_exit_two() {
    let out = zf(&["param", "--fixture", "nope"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("unknown fixture"));

    let out = zf(&["param", "--family", "pentagon:5"]);
    assert_eq!(out.status.code(), Some(2));

    let out = zf(&["trace", "--fixture", "fig1_house", "--set", "0,9"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("out of range"));

    // Mutually exclusive sources rejected by the argument parser.
    let out = zf(&["param", "--family", "path:3", "--fixture", "fig1_house"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn size_ceiling_exits_three() {
    let out = zf(&["param", "--family", "path:20", "--zt", "1"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stderr(&out).contains("exceeds limit"));

    let mut cmd = Command::new(env!("CARGO_BIN_EXE_zf"));
    cmd.args(["param", "--family", "path:6", "--zf"])
        .env("ZF_SIZE_LIMIT", "4");
    let out = cmd.output().unwrap();
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn tree_facts_for_the_known_cover_example() {
    let out = zf(&["tree", "--fixture", "fig4_ftcover_tree", "--format", "json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["path_cover_number"], 2);
    assert_eq!(v["ft_cover_value"], 4);
    assert_eq!(v["ft_set"], serde_json::json!([0, 4, 5, 6]));
    assert_eq!(v["leaf_set_fault_tolerant"], true);

    let out = zf(&["tree", "--fixture", "fig1_house"]);
    assert_eq!(out.status.code(), Some(2), "cycles are not trees");
}
