use std::io::Cursor;
use std::process::Command;

use serde_json::Value;
use tracewitt_cli::{run, Outcome};

fn cli(args: &[&str]) -> Outcome {
    cli_stdin(args, "")
}

fn cli_stdin(args: &[&str], stdin: &str) -> Outcome {
    let mut argv = vec!["tracewitt"];
    argv.extend_from_slice(args);
    run(argv, &mut Cursor::new(stdin.as_bytes().to_vec()))
}

fn json(out: &Outcome) -> Value {
    serde_json::from_str(&out.stdout).unwrap_or_else(|e| panic!("{e}: {:?}", out.stdout))
}

fn write(dir: &tempfile::TempDir, name: &str, text: &str) -> String {
    let path = dir.path().join(name);
    std::fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn check_traces_exit_codes() {
    assert_eq!(cli(&["check-traces", "--traces", "1,3"]).code, 0);
    let out = cli(&["check-traces", "--traces", "0,1"]);
    assert_eq!(out.code, 1);
    assert!(out.stdout.contains("FAIL"));

    let out = cli(&["check-traces", "--traces", "1,x"]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("\"x\""), "{}", out.stderr);
    assert!(out.stdout.is_empty());

    assert_eq!(cli(&["check-traces"]).code, 2);
    assert_eq!(cli(&["check-traces", "--traces", "1", "2"]).code, 2);
    assert_eq!(cli(&["check-traces", "1,3", "--frobnicate"]).code, 2);
}

#[test]
fn check_traces_json_report() {
    let out = cli(&["check-traces", "0,1", "--format", "json", "--no-timestamp", "--witness"]);
    let v = json(&out);
    assert_eq!(v["overall"], false);
    assert_eq!(v["policy"]["kind"], "trace-sequence");
    assert_eq!(v["witness"], serde_json::json!([0, "1/2"]));
    let row = &v["checks"][0];
    for (key, expected) in [("n", 2), ("p", 2), ("k", 1), ("lhs", 1), ("rhs", 0), ("modulus", 2)] {
        assert_eq!(row[key], expected, "{key}");
    }
    assert!(v.get("timestamp").is_none());

    let stamped = json(&cli(&["check-traces", "1,3", "--format", "json"]));
    assert!(stamped["timestamp"].is_u64());
}

#[test]
fn sequences_from_stdin() {
    let out = cli_stdin(&["check-traces", "-"], "1,3,4,7\n");
    assert_eq!(out.code, 0, "{}", out.stderr);
    let out = cli_stdin(&["witt", "--traces", "-"], "2, 4, 8, 16");
    assert_eq!(out.stdout, "2,0,0,0\n");
}

#[test]
fn negative_values_are_not_flags() {
    assert_eq!(cli(&["check-traces", "--traces", "-1,3"]).code, 0);
    assert_eq!(cli(&["check-traces", "-1,2"]).code, 1);
}

#[test]
fn synthesize_outputs() {
    let out = cli(&["synthesize", "--traces", "1,3"]);
    assert_eq!((out.code, out.stdout.as_str()), (0, "{\"dim\":2,\"entries\":[[0,1],[1,1]]}\n"));
    let out = cli(&["synthesize", "--traces", "2"]);
    assert_eq!(out.stdout, "{\"dim\":1,\"entries\":[[2]]}\n");
    let out = cli(&["synthesize", "--traces", "0,1"]);
    assert_eq!(out.code, 1);
    assert!(out.stdout.contains("FAIL"));
    assert!(out.stderr.contains("not a trace sequence"));
}

#[test]
fn synthesized_matrices_feed_back_into_traces() {
    let dir = tempfile::tempdir().unwrap();
    let valid = "1,3,4,7,11,18";
    let m = cli(&["synthesize", valid]);
    assert_eq!(m.code, 0);
    let path = write(&dir, "f.json", &m.stdout);
    let out = cli(&["traces", "--matrix", &path, "--count", "6"]);
    assert_eq!(out.stdout.trim(), valid);
}

#[test]
fn matrix_subcommands() {
    let dir = tempfile::tempdir().unwrap();
    let fib = write(&dir, "fib.json", r#"{"dim": 2, "entries": [[0, 1], [1, 1]]}"#);
    assert_eq!(cli(&["traces", "--matrix", &fib, "--count", "4"]).stdout, "1,3,4,7\n");
    assert_eq!(
        cli(&["traces", "--matrix", &fib, "--count", "4", "--format", "json"]).stdout,
        "[1,3,4,7]\n"
    );
    assert_eq!(cli(&["charpoly", "--matrix", &fib]).stdout, "1,-1\n");
    assert_eq!(cli(&["check-exterior", "--matrix", &fib, "--p", "2", "--k", "1"]).code, 0);
    assert_eq!(cli(&["check-matrix", "--matrix", &fib, "--p", "3", "--kmax", "2"]).code, 0);
    assert_eq!(cli(&["check-exterior", "--matrix", &fib, "--p", "4", "--k", "1"]).code, 2);

    let big = cli(&["traces", "--matrix", &fib, "--count", "100", "--format", "json"]);
    let v = json(&big);
    assert!(v[99].is_string(), "large traces serialize as strings");

    let stdin = cli_stdin(&["charpoly", "--matrix", "-"], r#"{"dim":1,"entries":[["-5"]]}"#);
    assert_eq!(stdin.stdout, "-5\n");
}

#[test]
fn bad_matrix_files() {
    let dir = tempfile::tempdir().unwrap();
    let ragged = write(&dir, "r.json", r#"{"dim": 2, "entries": [[0, 1], [1]]}"#);
    let float = write(&dir, "f.json", r#"{"dim": 1, "entries": [[0.5]]}"#);
    let garbage = write(&dir, "g.json", "[[[");
    for path in [ragged.as_str(), float.as_str(), garbage.as_str(), "/nonexistent/m.json"] {
        let out = cli(&["charpoly", "--matrix", path]);
        assert_eq!(out.code, 2, "{path}");
        assert!(out.stderr.starts_with("error:"));
    }
    assert_eq!(cli(&["traces", "--matrix", &ragged, "--count", "0"]).code, 2);
}

#[test]
fn witt_and_ghost() {
    assert_eq!(cli(&["witt", "2,4,8,16"]).stdout, "2,0,0,0\n");
    assert_eq!(cli(&["witt", "0,1"]).stdout, "0,1/2\n");
    assert_eq!(cli(&["ghost", "1", "--count", "3"]).stdout, "1,1,1\n");
    assert_eq!(cli(&["ghost", "--witt", "0,1", "--count", "4"]).stdout, "0,2,0,2\n");
    assert_eq!(cli(&["ghost", "1/2", "--count", "2"]).stdout, "1/2,1/4\n");
    assert_eq!(cli(&["ghost", "1/0", "--count", "2"]).code, 2);
    assert_eq!(cli(&["ghost", "1", "--count", "0"]).code, 2);
}

#[test]
fn character_tables() {
    let dir = tempfile::tempdir().unwrap();
    let regular = write(
        &dir,
        "reg.json",
        r#"{"order": 4, "values": {"0": 4, "1": 0, "2": 0, "3": 0}}"#,
    );
    let broken = write(&dir, "bad.json", r#"{"order": 2, "values": {"0": 2, "1": 1}}"#);
    let ones = write(&dir, "ones.json", r#"{"order": 3, "values": {"0": 1, "1": 1, "2": "1"}}"#);
    let missing = write(&dir, "m.json", r#"{"order": 3, "values": {"0": 1, "2": 1}}"#);

    let out = cli(&["check-character", "--table", &regular, "--format", "json", "--no-timestamp"]);
    assert_eq!(out.code, 0);
    let v = json(&out);
    assert_eq!(v["policy"]["mode"], "auto");
    assert_eq!(v["policy"]["bounds"][0]["p"], 2);

    let out = cli(&["check-character", "--table", &broken]);
    assert_eq!(out.code, 1);
    assert_eq!(cli(&["check-character", "--table", &ones]).code, 0);
    assert_eq!(cli(&["check-character", "--table", &missing]).code, 2);

    let capped = json(&cli(&[
        "check-character", "--table", &regular, "--kmax", "2", "--format", "json",
    ]));
    assert_eq!(capped["policy"]["mode"], "cap");
    assert_eq!(capped["policy"]["bounds"][1]["k_max"], 2);
}

#[test]
fn fuzz_command() {
    let out = cli(&["fuzz", "--trials", "20", "--dim", "3", "--entry-bound", "3", "--seed", "5"]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("violations: 0"));
    let out = cli(&["fuzz", "--trials", "1", "--dim", "0", "--entry-bound", "1"]);
    assert_eq!(out.code, 0);
    assert_eq!(cli(&["fuzz", "--trials", "0", "--dim", "2", "--entry-bound", "1"]).code, 2);
    let a = cli(&["--seed", "9", "fuzz", "--trials", "5", "--dim", "5", "--entry-bound", "2"]);
    let b = cli(&["fuzz", "--trials", "5", "--dim", "5", "--entry-bound", "2", "--seed", "9"]);
    assert_eq!(a, b);
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_tracewitt");
    let code = |args: &[&str]| Command::new(bin).args(args).output().unwrap().status.code();
    assert_eq!(code(&["check-traces", "1,3"]), Some(0));
    assert_eq!(code(&["check-traces", "0,1"]), Some(1));
    assert_eq!(code(&["check-traces", "1,x"]), Some(2));
    assert_eq!(code(&["no-such-command"]), Some(2));
    assert_eq!(code(&["--help"]), Some(0));
}
