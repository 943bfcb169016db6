//! End-to-end coverage of the command surface: every subcommand, the three
//! output formats, exit codes, and byte stability of repeated invocations.

use assert_cmd::Command;
use predicates::prelude::*;
use serde_json::Value;

fn glon() -> Command {
    Command::cargo_bin("glon").expect("binary builds")
}

fn stdout_of(args: &[&str]) -> String {
    let output = glon().args(args).output().expect("command runs");
    assert!(
        output.status.success(),
        "expected success for {args:?}, stderr: {}",
        String::from_utf8_lossy(&output.stderr)
    );
    String::from_utf8(output.stdout).expect("utf-8 stdout")
}

fn json_of(args: &[&str]) -> Value {
    serde_json::from_str(&stdout_of(args)).expect("valid json")
}

#[test]
fn every_subcommand_runs_clean_in_every_format() {
    let invocations: &[&[&str]] = &[
        &["orbits", "--n", "4"],
        &["pairs", "--n", "4"],
        &["cuspidal", "--n", "4"],
        &["series", "--n", "4"],
        &["table", "--n", "4"],
        &["support", "--label", "[4,2,1];--+"],
        &["correspond", "--series", "N0=1 nu=[1] sigma=+", "--mu", "[2]"],
        &["restrict", "--label", "[4,2]+;--", "--to", "[2,2]+;-"],
        &["dims", "--n", "4"],
        &["count", "--max-n", "6"],
        &["verify-appendix"],
        &["oracle-check", "--max-n", "3", "--trials", "2"],
    ];
    for args in invocations {
        for format in ["text", "json", "csv"] {
            glon()
                .args(*args)
                .args(["--format", format])
                .assert()
                .success();
        }
    }
}

#[test]
fn orbit_listing_matches_known_dimensions() {
    assert_eq!(stdout_of(&["orbits", "--n", "2"]), "[2]+\t1\n[2]-\t1\n[1,1]\t0\n");
    let n4 = stdout_of(&["orbits", "--n", "4"]);
    assert_eq!(
        n4,
        "[4]+\t6\n[4]-\t6\n[3,1]\t5\n[2,2]+\t4\n[2,2]-\t4\n[2,1,1]\t3\n[1,1,1,1]\t0\n"
    );
}

#[test]
fn pairs_marks_cuspidal_rows() {
    let out = stdout_of(&["pairs", "--n", "2"]);
    assert_eq!(
        out,
        "[2]+;+\tinduced\n[2]+;-\tcuspidal\n[2]-;+\tinduced\n[2]-;-\tcuspidal\n[1,1];+\tcuspidal\n"
    );
    let listed = stdout_of(&["cuspidal", "--n", "2"]);
    assert_eq!(listed, "[2]+;-\n[2]-;-\n[1,1];+\n");
}

#[test]
fn series_render_empty_sigma_with_bare_equals() {
    let out = stdout_of(&["series", "--n", "2"]);
    assert_eq!(
        out,
        "N0=0 nu=[]+ sigma=\nN0=0 nu=[]- sigma=\nN0=2 nu=[2]+ sigma=-\nN0=2 nu=[2]- sigma=-\nN0=2 nu=[1,1] sigma=+\n"
    );
}

#[test]
fn table_csv_has_twelve_rows_at_ambient_five() {
    let csv = stdout_of(&["table", "--n", "5", "--format", "csv"]);
    let rows: Vec<&str> = csv.lines().collect();
    assert_eq!(rows.len(), 12);
    assert_eq!(rows[0], "[5];+,N0=1 nu=[1] sigma=+,[2]");
    let text = stdout_of(&["table", "--n", "5"]);
    assert_eq!(text.lines().count(), 12);
    let json = json_of(&["table", "--n", "5", "--format", "json"]);
    assert_eq!(json["results"].as_array().map(Vec::len), Some(12));
}

#[test]
fn support_reports_series_and_fiber_partition() {
    let json = json_of(&["support", "--label", "[4,2,1];--+", "--format", "json"]);
    assert_eq!(json["results"]["series"]["n0"], 5);
    assert_eq!(json["results"]["series"]["nu"]["lambda"], serde_json::json!([2, 2, 1]));
    assert_eq!(json["results"]["series"]["nu"]["split"], Value::Null);
    assert_eq!(json["results"]["series"]["sigma"], serde_json::json!([-1, 1]));
    assert_eq!(json["results"]["mu"], serde_json::json!([1]));
}

#[test]
fn correspond_inverts_support() {
    let out = stdout_of(&[
        "correspond",
        "--series",
        "N0=5 nu=[2,2,1] sigma=-+",
        "--mu",
        "[1]",
    ]);
    assert_eq!(out, "[4,2,1];--+\n");
}

#[test]
fn restrict_reports_procedures_and_multiplicity() {
    let out = stdout_of(&["restrict", "--label", "[4,2]+;--", "--to", "[2,2]+;-"]);
    assert!(out.starts_with("epsilon=1\n"), "got: {out}");
    assert!(out.contains("A'@1\tdim_y=0\ts=0\tfull=true"), "got: {out}");
}

#[test]
fn dims_show_zero_defect_on_open_orbits() {
    let out = stdout_of(&["dims", "--n", "6"]);
    assert!(out.lines().count() > 0);
    for line in out.lines() {
        assert!(line.ends_with("d_open=0"), "unexpected defect in: {line}");
    }
}

#[test]
fn count_confirms_closed_form() {
    let out = stdout_of(&["count", "--max-n", "8"]);
    assert!(out.lines().all(|l| l.ends_with("\tok")), "got: {out}");
    assert!(out.contains("N=6\tpairs=32\tcuspidal=14\tformula=14\tok"));
}

#[test]
fn verify_appendix_reports_all_tables_clean() {
    glon()
        .arg("verify-appendix")
        .assert()
        .success()
        .stdout(predicate::str::contains("6/6 tables match"));
}

#[test]
fn oracle_check_passes_on_small_ranks() {
    glon()
        .args(["oracle-check", "--max-n", "3", "--trials", "2"])
        .assert()
        .success()
        .stdout(predicate::str::contains("oracle ok"));
}

#[test]
fn bad_inputs_exit_with_usage_code() {
    glon()
        .args(["support", "--label", "bogus"])
        .assert()
        .code(2)
        .stderr(predicate::str::contains("error:"));
    glon().args(["orbits", "--n", "four"]).assert().code(2);
    glon().arg("no-such-command").assert().code(2);
    glon()
        .args(["restrict", "--label", "[2]+;+", "--to", "[2]+;+"])
        .assert()
        .code(2)
        .stderr(predicate::str::contains("error:"));
}

#[test]
fn json_envelopes_share_one_shape() {
    let cases: &[(&str, &[&str])] = &[
        ("orbits", &["orbits", "--n", "3"]),
        ("series", &["series", "--n", "3"]),
        ("support", &["support", "--label", "[2,1];++"]),
        ("count", &["count", "--max-n", "4"]),
        ("verify-appendix", &["verify-appendix"]),
    ];
    for (name, args) in cases {
        let mut with_format = args.to_vec();
        with_format.extend(["--format", "json"]);
        let json = json_of(&with_format);
        let object = json.as_object().expect("top-level object");
        let keys: Vec<&String> = object.keys().collect();
        assert_eq!(keys, ["command", "inputs", "results"], "envelope for {name}");
        assert_eq!(json["command"], *name);
    }
}

#[test]
fn repeated_invocations_are_byte_identical() {
    for args in [
        vec!["orbits", "--n", "5", "--format", "json"],
        vec!["table", "--n", "6", "--format", "csv"],
        vec!["series", "--n", "7"],
        vec!["oracle-check", "--max-n", "2", "--trials", "3", "--format", "json"],
    ] {
        let first = stdout_of(&args);
        let second = stdout_of(&args);
        assert_eq!(first, second, "unstable output for {args:?}");
        assert!(!first.contains('\r'), "carriage return in {args:?}");
    }
}
