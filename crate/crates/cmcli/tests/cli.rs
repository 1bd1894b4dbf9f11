//! End-to-end tests driving the compiled `cmcurves` binary.

use std::io::Write;
use std::process::{Command, Output};

const BIN: &str = env!("CARGO_BIN_EXE_cmcurves");

fn fixture(name: &str) -> String {
    format!("{}/../../fixtures/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn run(args: &[&str]) -> Output {
    Command::new(BIN)
        .args(args)
        .output()
        .expect("the binary runs")
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("stdout is UTF-8")
}

fn stderr_of(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("stderr is UTF-8")
}

#[test]
fn tangent_of_cubic_with_embedded_point_is_16() {
    let out = run(&["tangent", &fixture("z2zx_zy_x3.ideal")]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_of(&out).trim(), "16");
}

#[test]
fn tangent_of_determinantal_triple_line_is_12() {
    let out = run(&["tangent", &fixture("u2_uyx2_xu.ideal")]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_of(&out).trim(), "12");
}

#[test]
fn hilbert_of_triple_line_is_3t_plus_1() {
    let out = run(&["hilbert", &fixture("u2_uyx2_xu.ideal")]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_of(&out);
    assert!(text.contains("hilbert polynomial: 3*t + 1"), "{text}");
    assert!(text.contains("H(2) = 7"), "{text}");
}

#[test]
fn gb_of_twisted_cubic_has_three_elements() {
    let out = run(&["gb", &fixture("twisted_cubic.ideal")]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_of(&out);
    assert!(text.contains("3 elements"), "{text}");
    assert!(text.contains("y^2 - x*z"), "{text}");
}

#[test]
fn gb_output_is_deterministic() {
    let first = stdout_of(&run(&["gb", &fixture("twisted_cubic.ideal")]));
    let second = stdout_of(&run(&["gb", &fixture("twisted_cubic.ideal")]));
    assert_eq!(first, second);
}

#[test]
fn member_distinguishes_members_from_nonmembers() {
    let path = fixture("twisted_cubic.ideal");
    let yes = run(&["member", &path, "x*z*w - y^2*w"]);
    assert_eq!(yes.status.code(), Some(0));
    assert!(stdout_of(&yes).contains("member: true"));

    let no = run(&["member", &path, "x + y"]);
    assert_eq!(no.status.code(), Some(1));
    let text = stdout_of(&no);
    assert!(text.contains("member: false"), "{text}");
    assert!(text.contains("normal form: x + y"), "{text}");
}

#[test]
fn fitting_of_diagonal_matrix_is_the_product() {
    let mut file = tempfile::NamedTempFile::new().expect("temp file");
    writeln!(file, "ring F0 vars x, y;").unwrap();
    writeln!(file, "matrix: [x, 0], [0, y];").unwrap();
    let out = run(&["fitting", file.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_of(&out);
    assert!(text.contains("1 elements") || text.contains("x*y"), "{text}");
    assert!(text.contains("x*y"), "{text}");
}

#[test]
fn fitting_of_quintic_chart_contains_the_closed_form() {
    let out = run(&["fitting", &fixture("quintic_chart.pres")]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_of(&out);
    assert!(text.contains("8 elements"), "{text}");
    assert!(text.contains("x^5 - y^5 - y^3"), "{text}");
}

#[test]
fn liftcheck_accepts_the_embedded_cubic_chart() {
    let out = run(&["liftcheck", &fixture("embedded_cubic.setup")]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_of(&out);
    assert!(text.contains("zero mod obstruction: true"), "{text}");
}

#[test]
fn liftcheck_fails_without_the_obstruction_excuse() {
    // Same chart but with an empty obstruction ideal: the residue no longer
    // vanishes, so the command must exit 1.
    let setup = std::fs::read_to_string(fixture("embedded_cubic.setup")).unwrap();
    let stripped: String = setup
        .lines()
        .filter(|line| !line.trim_start().starts_with("obstruction:"))
        .collect::<Vec<_>>()
        .join("\n");
    let mut file = tempfile::NamedTempFile::new().expect("temp file");
    file.write_all(stripped.as_bytes()).unwrap();
    let out = run(&["liftcheck", file.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout_of(&out).contains("zero mod obstruction: false"));
}

#[test]
fn verify_single_check_passes() {
    let out = run(&["verify", "nonflat-5t-1"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_of(&out);
    assert!(text.contains("check nonflat-5t-1 [q]: pass"), "{text}");
    assert!(text.contains("witness in (Fitt0 : t): true"), "{text}");
    assert!(text.contains("witness outside Fitt0: true"), "{text}");
}

#[test]
fn verify_respects_field_and_seed_flags() {
    let out = run(&["--field", "fp:2", "--seed", "7", "verify", "tangent-12-15-16"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout_of(&out).contains("check tangent-12-15-16 [fp:2]: pass"));
}

#[test]
fn verify_all_runs_the_whole_catalog() {
    let out = run(&["verify", "all"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_of(&out);
    assert!(text.contains("15 of 15 check runs passed"), "{text}");
    // Characteristic-sensitive checks rerun over the rationals and F_2, F_3.
    assert!(text.contains("check ps-obstruction [fp:2]: pass"), "{text}");
    assert!(text.contains("check ps-obstruction [fp:3]: pass"), "{text}");
    assert!(text.contains("check kernel-properties [q]: pass"), "{text}");
}

#[test]
fn verify_unknown_check_exits_2_and_lists_the_catalog() {
    let out = run(&["verify", "no-such-check"]);
    assert_eq!(out.status.code(), Some(2));
    let text = stderr_of(&out);
    assert!(text.contains("determinantal-fiber"), "{text}");
    assert!(text.contains("kernel-properties"), "{text}");
}

#[test]
fn parse_errors_report_line_and_column_and_exit_2() {
    let mut file = tempfile::NamedTempFile::new().expect("temp file");
    writeln!(file, "ring F0 vars x, y;").unwrap();
    writeln!(file, "ideal: x +* y;").unwrap();
    let out = run(&["gb", file.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let text = stderr_of(&out);
    assert!(text.contains("line 2"), "{text}");
    assert!(text.contains("column"), "{text}");
}

#[test]
fn missing_statement_is_a_usage_error() {
    let mut file = tempfile::NamedTempFile::new().expect("temp file");
    writeln!(file, "ring F0 vars x, y;").unwrap();
    let out = run(&["tangent", file.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr_of(&out).contains("ideal"));
}

#[test]
fn invalid_field_is_rejected() {
    let out = run(&["--field", "fp:4", "gb", &fixture("twisted_cubic.ideal")]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr_of(&out).contains("not a prime"));
}

#[test]
fn field_override_changes_coefficients() {
    let out = run(&["--field", "fp:5", "gb", &fixture("twisted_cubic.ideal")]);
    assert_eq!(out.status.code(), Some(0));
    // Over F_5 the canonical basis rewrites -1 as 4.
    assert!(stdout_of(&out).contains("y^2 + 4*x*z"));
}

#[test]
fn json_flag_emits_parseable_records() {
    let out = run(&["--json", "verify", "determinantal-fiber"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_of(&out);
    let record: serde_json::Value =
        serde_json::from_str(text.lines().next().expect("one record")).expect("valid JSON");
    assert_eq!(record["check"], "determinantal-fiber");
    assert_eq!(record["status"], "pass");
    assert_eq!(record["field"], "q");
    assert!(record["elapsedMs"].as_f64().is_some());

    let out = run(&["--json", "tangent", &fixture("z2zx_zy_x3.ideal")]);
    let record: serde_json::Value =
        serde_json::from_str(stdout_of(&out).trim()).expect("valid JSON");
    assert_eq!(record["dimension"], 16);
}
