//! Flag handling beyond the golden table: exit codes, engine checks, and
//! argument validation.

use std::process::Command;

fn run(args: &[&str]) -> (String, String, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_gaq"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
        out.status.code().unwrap(),
    )
}

#[test]
fn help_exits_zero() {
    let (stdout, _, code) = run(&["--help"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("--signature"));
    assert!(stdout.contains("--engine"));
}

#[test]
fn algebra_flags_are_required_and_exclusive() {
    let (_, stderr, code) = run(&["--eval", "1"]);
    assert_eq!(code, 1);
    assert!(!stderr.is_empty());

    let (_, _, code) = run(&["--signature", "2,0,0", "--preset", "cga2", "--eval", "1"]);
    assert_eq!(code, 1);
}

#[test]
fn fast_engine_rejects_non_diagonal_metrics() {
    let (stdout, stderr, code) = run(&["--preset", "cga2", "--engine", "fast", "--eval", "1"]);
    assert_eq!(code, 1);
    assert_eq!(stdout, "");
    assert_eq!(
        stderr,
        "error: the fast engine requires a diagonal metric; use --engine oracle or --engine auto\n"
    );
}

#[test]
fn malformed_signature_is_a_user_error() {
    let (_, stderr, code) = run(&["--signature", "2,0", "--eval", "1"]);
    assert_eq!(code, 1);
    assert!(stderr.contains("invalid signature"));
}

#[test]
fn missing_metric_file_is_a_user_error() {
    let (_, stderr, code) = run(&["--metric", "does/not/exist.json", "--eval", "1"]);
    assert_eq!(code, 1);
    assert!(stderr.contains("metric file"));
}

#[test]
fn nothing_to_do_is_reported() {
    let (_, stderr, code) = run(&["--signature", "2,0,0"]);
    assert_eq!(code, 1);
    assert_eq!(
        stderr,
        "error: nothing to do: pass --eval EXPR or --table\n"
    );
}

#[test]
fn table_dimension_is_bounded() {
    let (_, stderr, code) = run(&["--signature", "9,0,0", "--table"]);
    assert_eq!(code, 1);
    assert!(stderr.contains("cayley table limited to dimension 8"));
}

#[test]
fn multiple_evals_emit_one_line_each() {
    let (stdout, _, code) = run(&[
        "--signature",
        "2,0,0",
        "--eval",
        "e1",
        "--eval",
        "e2*e1",
        "--eval",
        "sp(3 + e1)",
    ]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "e1\n-e1e2\n3\n");
}

#[test]
fn engine_flags_give_identical_results_on_diagonal_metrics() {
    for source in [
        "e2*e1*e2",
        "(1 + e1)*(1 - e1)",
        "rev(e1*e2)*e1",
        "e1 | (e1^e2)",
    ] {
        let mut outputs = Vec::new();
        for engine in ["auto", "oracle", "fast"] {
            let (stdout, _, code) =
                run(&["--signature", "1,1,0", "--engine", engine, "--eval", source]);
            assert_eq!(code, 0);
            outputs.push(stdout);
        }
        assert_eq!(outputs[0], outputs[1], "{source}");
        assert_eq!(outputs[0], outputs[2], "{source}");
    }
}
