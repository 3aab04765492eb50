use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn fuzzalg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fuzzalg")).args(args).output().unwrap()
}

fn fixture(name: &str) -> PathBuf {
    [env!("CARGO_MANIFEST_DIR"), "..", "dsl", "tests", "fixtures", name].iter().collect()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn grid(dir: &Path, op: &str, n: usize, extra: &[&str]) -> (Output, String) {
    let out = dir.join(format!("{op}-{n}.csv"));
    let n = n.to_string();
    let mut args = vec!["grid", op, "--n", &n, "--out", out.to_str().unwrap()];
    args.extend_from_slice(extra);
    let o = fuzzalg(&args);
    let csv = std::fs::read_to_string(&out).unwrap_or_default();
    (o, csv)
}

#[test]
fn empty_script_exits_zero() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("empty.fz");
    std::fs::write(&path, "# nothing here\n").unwrap();
    let o = fuzzalg(&["run", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("0 checks"));
}

#[test]
fn malformed_script_exits_two_with_position() {
    for (name, pos) in [("bad_lex.fz", ":2:11:"), ("bad_parse.fz", ":2:30:"), ("bad_gap.fz", ":3:5:")] {
        let o = fuzzalg(&["run", fixture(name).to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(2), "{name}");
        let err = String::from_utf8_lossy(&o.stderr);
        assert!(err.contains(pos), "{name}: {err}");
        assert!(o.stdout.is_empty());
    }
}

#[test]
fn missing_file_is_a_usage_error() {
    assert_eq!(fuzzalg(&["run", "/nonexistent/x.fz"]).status.code(), Some(2));
    assert_eq!(fuzzalg(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn log_subnorm_script_report() {
    let o = fuzzalg(&["run", fixture("log_subnorm.fz").to_str().unwrap()]);
    let text = stdout(&o);
    assert!(text.contains("FAIL usubnorm-inequality @ (0, 0)"), "{text}");
    assert!(text.contains("FAIL identity-condition @ sigma(1)=0.5"), "{text}");
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn identity_strictness_sets_exit_code() {
    let path = fixture("log_subnorm_negated.fz");
    let lenient = fuzzalg(&["run", path.to_str().unwrap()]);
    assert!(stdout(&lenient).contains("PASS usubnorm-inequality"));
    assert!(stdout(&lenient).contains("FAIL identity-condition @ sigma(1)=0.5"));
    assert_eq!(lenient.status.code(), Some(0));
    let strict = fuzzalg(&["run", path.to_str().unwrap(), "--strict-identity"]);
    assert_eq!(strict.status.code(), Some(1));
}

#[test]
fn grid_rows_and_values() {
    let dir = tempfile::tempdir().unwrap();
    let (o, csv) = grid(dir.path(), "up-ln", 2, &[]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(csv, "x,y,value\n0,0,0\n0,1,0\n1,0,0\n1,1,1\n");

    let (_, csv) = grid(dir.path(), "tl", 3, &[]);
    assert!(csv.lines().any(|l| l == "0.5,0.5,0"), "{csv}");
    assert_eq!(csv.lines().count(), 10);

    let (_, csv) = grid(dir.path(), "up-ln", 3, &[]);
    assert!(csv.lines().any(|l| l == "0.5,0.5,0.5"), "{csv}");
    let (_, csv) = grid(dir.path(), "up-ln", 5, &[]);
    assert!(csv.lines().any(|l| l == "0.25,0.25,0.125"), "{csv}");
}

#[test]
fn grid_output_is_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.csv");
    let b = dir.path().join("b.csv");
    for out in [&a, &b] {
        let o = fuzzalg(&["grid", "up-rational", "--n", "41", "--out", out.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0));
    }
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
}

#[test]
fn grid_from_script_definitions() {
    let dir = tempfile::tempdir().unwrap();
    let script = dir.path().join("ops.fz");
    std::fs::write(&script, "let f = nullnorm(lukasiewicz, 0.5, lukasiewicz);\nlet g = fn(x) x;\n").unwrap();
    let s = script.to_str().unwrap();
    let (o, csv) = grid(dir.path(), "f", 3, &["--script", s]);
    assert_eq!(o.status.code(), Some(0));
    assert!(csv.lines().any(|l| l == "0,1,0.5"), "{csv}");

    let (o, _) = grid(dir.path(), "g", 3, &["--script", s]);
    assert_eq!(o.status.code(), Some(2));
    let (o, _) = grid(dir.path(), "nosuch", 3, &[]);
    assert_eq!(o.status.code(), Some(2));
    let (o, _) = grid(dir.path(), "tl", 1, &[]);
    assert_eq!(o.status.code(), Some(2));
}
