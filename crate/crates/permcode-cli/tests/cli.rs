//! End-to-end checks of the command-line binary: output content, byte
//! stability across runs, JSON validity, and the exit-code contract
//! (0 success, 1 verification mismatch, 2 usage error).

use std::path::Path;
use std::process::Output;

fn permcode(args: &[&str]) -> Output {
    std::process::Command::new(env!("CARGO_BIN_EXE_permcode"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 output")
}

#[test]
fn summary_table_is_byte_stable() {
    let first = permcode(&["tables", "--only", "summary"]);
    let second = permcode(&["tables", "--only", "summary"]);
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout, "identical runs must emit identical bytes");
    assert_eq!(
        stdout(&first),
        "family,blocks,symbols,repetition_distance,twisted_distance\n\
         s6,2,6,4,8\n\
         a6,2,6,6,8\n\
         asl32,2,8,8,12\n"
    );
}

#[test]
fn mindist_reports_the_twisted_distance() {
    let out = permcode(&["mindist", "--group", "s6", "--tuple", "natural,twisted"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("s6,natural+twisted,2,6,720,8,4"), "{}", stdout(&out));
}

#[test]
fn slot_digit_tuples_give_the_maximal_quadruple() {
    let out = permcode(&["mindist", "--group", "s6h12", "--tuple", "1234"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("s6h12,1+2+3+4,4,60,720,224,176"), "{}", stdout(&out));
}

#[test]
fn distribution_json_is_well_formed() {
    let out = permcode(&[
        "distribution",
        "--group",
        "psl32",
        "--tuple",
        "points",
        "--format",
        "json",
    ]);
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid json");
    let total: u64 = value["distribution"]
        .as_array()
        .expect("array")
        .iter()
        .map(|e| e["count"].as_u64().expect("count"))
        .sum();
    assert_eq!(total, 168);
}

#[test]
fn neighbours_reports_the_single_orbit() {
    let out = permcode(&["neighbours", "--group", "s6"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("s6,720,43200,43200,21600+21600"), "{}", stdout(&out));
}

#[test]
fn slope_audit_is_clean_and_exits_zero() {
    let out = permcode(&["asl2r", "--f", "2"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("min_distance,48"), "{text}");
    assert!(text.contains("distribution,0:1 48:60 60:704 64:195"), "{text}");
    assert!(text.contains("light_failures,0"), "{text}");
    assert!(text.contains("full_failures,0"), "{text}");
}

#[test]
fn verify_passes_on_the_builtin_reference() {
    let out = permcode(&["verify"]);
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid json");
    assert_eq!(value["pass"], serde_json::Value::Bool(true));
    assert_eq!(value["reports"].as_array().expect("reports").len(), 8);
}

#[test]
fn verify_flags_a_corrupted_reference_file_by_name() {
    let dir = tempfile::tempdir().expect("tempdir");
    let source = Path::new(env!("CARGO_MANIFEST_DIR")).join("../permcode/data");
    for file in [
        "s6_supports.csv",
        "a6_supports.csv",
        "m12_supports.csv",
        "asl32_supports.csv",
        "s6h12_supports.csv",
        "s6h12_multisets.csv",
        "m12_distributions.csv",
        "summary.csv",
    ] {
        std::fs::copy(source.join(file), dir.path().join(file)).expect("copy reference");
    }
    let minima = dir.path().join("s6h12_multisets.csv");
    let text = std::fs::read_to_string(&minima).unwrap();
    assert!(text.contains("1134,213"));
    std::fs::write(&minima, text.replace("1134,213", "1134,214")).unwrap();

    let out = permcode(&[
        "verify",
        "--reference",
        dir.path().to_str().expect("utf-8 path"),
    ]);
    assert_eq!(out.status.code(), Some(1));
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid json");
    assert_eq!(value["pass"], serde_json::Value::Bool(false));
    let failing: Vec<&str> = value["reports"]
        .as_array()
        .expect("reports")
        .iter()
        .filter(|r| r["pass"] == serde_json::Value::Bool(false))
        .map(|r| r["name"].as_str().expect("name"))
        .collect();
    assert_eq!(failing, vec!["s6h12-multisets"]);
}

#[test]
fn verify_names_an_unreadable_reference_file() {
    let dir = tempfile::tempdir().expect("tempdir");
    let out = permcode(&[
        "verify",
        "--reference",
        dir.path().to_str().expect("utf-8 path"),
    ]);
    assert_eq!(out.status.code(), Some(1));
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid json");
    assert_eq!(value["pass"], serde_json::Value::Bool(false));
    assert!(
        value["error"].as_str().expect("error").starts_with("s6_supports.csv:"),
        "{value}"
    );
}

#[test]
fn usage_errors_exit_with_code_two() {
    for args in [
        vec!["mindist", "--group", "nosuch", "--tuple", "natural"],
        vec!["mindist", "--group", "s6", "--tuple", "nosuch"],
        vec!["tables", "--only", "nosuch"],
        vec!["neighbours", "--group", "m12"],
        vec!["asl2r", "--f", "5"],
        vec!["asl2r", "--f", "4", "--emit", "distributions"],
        vec!["mindist", "--group", "s6"],
    ] {
        let out = permcode(&args);
        assert_eq!(out.status.code(), Some(2), "args {args:?}");
    }
}
