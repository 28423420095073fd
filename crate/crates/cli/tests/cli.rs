use std::process::Command;

use pieri_cli::{run_captured, EXIT_DOMAIN, EXIT_OK};

fn pieri(args: &[&str]) -> (i32, String, String) {
    run_captured(std::iter::once("pieri").chain(args.iter().copied()))
}

fn stdout(args: &[&str]) -> String {
    let (status, out, err) = pieri(args);
    assert_eq!(status, EXIT_OK, "{args:?} failed: {err}");
    out
}

#[test]
fn one_one_extended_to_four() {
    assert_eq!(stdout(&["pieri", "--diagram", "1,1", "--target-size", "4"]), "3,1\n2,1,1\n");
}

#[test]
fn qdim_of_two_column() {
    assert_eq!(stdout(&["qdim", "--diagram", "1,1"]), "q\n");
}

#[test]
fn empty_strip() {
    assert_eq!(stdout(&["pieri", "--diagram", "2", "--target-size", "2"]), "2\n");
}

#[test]
fn gl_pieri_respects_row_bound() {
    let out = stdout(&["pieri", "--diagram", "1,1", "--target-size", "4", "--gl", "--max-rows", "2"]);
    assert_eq!(out, "3,1\n");
    let out = stdout(&["pieri", "--diagram", "1", "--target-size", "3", "--gl", "--max-rows", "3"]);
    assert_eq!(out, "3\n2,1\n");
}

#[test]
fn unknown_flags_are_rejected() {
    for args in [
        &["pieri", "--diagram", "1", "--target-size", "2", "--bogus"][..],
        &["kostka", "--n", "3", "--rows"],
        &["verify", "--max-n", "3", "--quick"],
        &["frobnicate"],
    ] {
        let (status, out, err) = pieri(args);
        assert_eq!(status, EXIT_DOMAIN, "{args:?}");
        assert!(out.is_empty());
        assert!(!err.is_empty());
    }
}

#[test]
fn parse_errors_name_the_flag() {
    let (status, _, err) = pieri(&["intertwine", "--left", "2,1", "--right", "1,x"]);
    assert_eq!(status, EXIT_DOMAIN);
    assert!(err.contains("--right"), "{err}");
    let (status, _, err) = pieri(&["pieri", "--diagram", "1,2", "--target-size", "4"]);
    assert_eq!(status, EXIT_DOMAIN);
    assert!(err.contains("--diagram"), "{err}");
}

#[test]
fn lenient_mode_sorts_and_drops_zeros() {
    let strict = stdout(&["pieri", "--diagram", "2,1", "--target-size", "4"]);
    let lenient = stdout(&["--lenient", "pieri", "--diagram", "1,0,2", "--target-size", "4"]);
    assert_eq!(strict, lenient);
}

#[test]
fn domain_errors_exit_one() {
    for args in [
        &["pieri", "--diagram", "3,1", "--target-size", "2"][..],
        &["intertwine", "--left", "2,1", "--right", "2"],
        &["kostka", "--n", "13"],
        &["kostka", "--n", "3", "--table-bound", "2"],
        &["double-cosets", "--left", "2,2", "--right", "2,2", "--p", "2"],
        &["pieri", "--diagram", "1,1", "--target-size", "4", "--gl", "--max-rows", "1"],
        &["intertwine", "--left", "2,1", "--right", "2,1", "--format", "latex"],
    ] {
        let (status, out, err) = pieri(args);
        assert_eq!(status, EXIT_DOMAIN, "{args:?}: {out}");
        assert!(err.starts_with("error:"), "{err}");
    }
}

#[test]
fn help_exits_zero() {
    let (status, out, _) = pieri(&["--help"]);
    assert_eq!(status, EXIT_OK);
    assert!(out.contains("kostka"));
    let (status, out, _) = pieri(&["decompose", "--help"]);
    assert_eq!(status, EXIT_OK);
    assert!(out.contains("--sps"));
}

const SAMPLES: &[&[&str]] = &[
    &["pieri", "--diagram", "2,1", "--target-size", "5"],
    &["pieri", "--diagram", "2,1", "--target-size", "5", "--gl", "--max-rows", "3"],
    &["kostka", "--n", "6"],
    &["kostka", "--n", "4", "--format", "latex"],
    &["decompose", "--young", "3,2,1"],
    &["decompose", "--young", "2,2", "--group", "gl", "--format", "latex"],
    &["decompose", "--sps", "2,1", "--target", "5"],
    &["intertwine", "--left", "3,2", "--right", "2,2,1", "--tables"],
    &["intertwine", "--left", "3,2", "--right", "2,2,1", "--signed"],
    &["qdim", "--diagram", "3,2,1", "--q", "3"],
    &["flag-size", "--diagram", "2,2,1", "--q", "2"],
    &["double-cosets", "--left", "2,1", "--right", "1,1,1", "--p", "2"],
    &["verify", "--max-n", "4"],
];

#[test]
fn repeated_runs_are_byte_identical() {
    for args in SAMPLES {
        let first = pieri(args);
        assert_eq!(first.0, EXIT_OK, "{args:?}: {}", first.2);
        for _ in 0..3 {
            assert_eq!(pieri(args), first, "{args:?}");
        }
    }
}

#[test]
fn json_round_trips_byte_for_byte() {
    for args in SAMPLES {
        if args.contains(&"latex") {
            continue;
        }
        let mut with_json = args.to_vec();
        with_json.extend(["--format", "json"]);
        let out = stdout(&with_json);
        assert!(out.ends_with('\n') && out.lines().count() == 1, "{with_json:?}");
        let value: serde_json::Value = serde_json::from_str(out.trim_end()).unwrap();
        assert_eq!(serde_json::to_string(&value).unwrap(), out.trim_end(), "{with_json:?}");
    }
}

#[test]
fn json_keeps_big_integers_exact() {
    let out = stdout(&["intertwine", "--left", "1,1,1,1,1,1,1,1,1,1,1,1", "--right", "1,1,1,1,1,1,1,1,1,1,1,1", "--format", "json"]);
    assert!(out.contains("\"count\":479001600"), "{out}");
    let out = stdout(&["flag-size", "--diagram", "1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1", "--q", "3", "--format", "json"]);
    let value: serde_json::Value = serde_json::from_str(&out).unwrap();
    let text = value["value"].to_string();
    assert!(text.len() > 20 && text.chars().all(|c| c.is_ascii_digit()), "{text}");
}

#[test]
fn kostka_json_lists_nonzero_entries_in_canonical_order() {
    let out = stdout(&["kostka", "--n", "3", "--format", "json"]);
    assert_eq!(
        out,
        concat!(
            r#"{"n":3,"entries":[{"e":"3","d":"3","mult":1},{"e":"3","d":"2,1","mult":1},"#,
            r#"{"e":"3","d":"1,1,1","mult":1},{"e":"2,1","d":"2,1","mult":1},"#,
            r#"{"e":"2,1","d":"1,1,1","mult":2},{"e":"1,1,1","d":"1,1,1","mult":1}]}"#,
            "\n"
        )
    );
}

#[test]
fn decompositions() {
    assert_eq!(stdout(&["decompose", "--young", "2,1", "--format", "json"]), concat!(
        r#"{"group":"S_n","module":"Y","diagram":"2,1","components":[{"partition":"3","mult":1},{"partition":"2,1","mult":1}]}"#,
        "\n"
    ));
    let out = stdout(&["decompose", "--young", "1,1,1", "--group", "gl"]);
    assert!(out.starts_with("I_(1,1,1) = ρ_(3) + 2ρ_(2,1) + ρ_(1,1,1)\n"), "{out}");
    let out = stdout(&["decompose", "--sps", "1,1", "--target", "4", "--format", "json"]);
    assert!(out.contains(r#""components":[{"partition":"3,1","mult":1},{"partition":"2,1,1","mult":1}]"#), "{out}");
}

#[test]
fn intertwining_counts() {
    assert_eq!(stdout(&["intertwine", "--left", "3,1", "--right", "3,1"]), "2\n");
    assert_eq!(stdout(&["intertwine", "--left", "2,2", "--right", "2,2", "--signed"]), "1\n");
    assert_eq!(stdout(&["intertwine", "--left", "3,1", "--right", "3,1", "--signed"]), "0\n");
}

#[test]
fn double_cosets_cross_check() {
    assert_eq!(
        stdout(&["double-cosets", "--left", "1,1", "--right", "1,1", "--p", "3"]),
        "2\nGL_2(F_3) enumeration: 2 (agrees)\n"
    );
}

#[test]
fn verify_passes_and_reports_a_table() {
    let out = stdout(&["verify", "--max-n", "5", "--suite", "all"]);
    for suite in ["dominance", "intertwine", "pieri", "kostka", "bruhat", "schur-weyl", "qdim"] {
        let line = out.lines().find(|l| l.trim_start().starts_with(suite)).unwrap();
        assert!(line.ends_with("pass"), "{line}");
    }
    let out = stdout(&["verify", "--suite", "bruhat", "--format", "json"]);
    assert!(out.starts_with(r#"{"passed":true,"suites":[{"suite":"bruhat","max_n":3,"cases":17,"passed":true}]}"#));
}

#[test]
fn binary_writes_to_stdout_and_sets_status() {
    let bin = env!("CARGO_BIN_EXE_pieri");
    let ok = Command::new(bin).args(["qdim", "--diagram", "2,1"]).output().unwrap();
    assert_eq!(ok.status.code(), Some(EXIT_OK));
    assert_eq!(String::from_utf8(ok.stdout).unwrap(), "q^2 + q\n");
    let bad = Command::new(bin).args(["qdim", "--diagram", "2,-1"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(EXIT_DOMAIN));
    assert!(bad.stdout.is_empty());
}
