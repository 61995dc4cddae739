use std::io::Write;
use std::process::{Command, Output, Stdio};

use grossone::machine::{number_from_machine, report_from_machine, verdict_from_machine};
use grossone::{eval_str, GrossNumber};
use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_grossone"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("spawn")
}

fn run_stdin(args: &[&str], input: &str) -> Output {
    let mut child = bin()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn exit_codes() {
    let o = run(&["eval", "①*①^-1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "1\n");

    let o = run(&["eval", "①^"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(o.stdout.is_empty());
    assert!(String::from_utf8_lossy(&o.stderr).contains("position 3"));

    assert_eq!(run(&["eval", "1/(G+1)"]).status.code(), Some(2));
    assert_eq!(run(&["nonsense"]).status.code(), Some(3));
    assert_eq!(run(&["sieve"]).status.code(), Some(3));
}

#[test]
fn classify_trace_order() {
    let o = run(&["classify", "G^2/8 - 1", "--trace"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.starts_with("Prime (Lemma 2)"));
    let l3 = text.find("Lemma 3:").expect("Lemma 3 cited");
    let l2 = text.rfind("Lemma 2:").expect("Lemma 2 cited");
    assert!(l3 < l2);
}

#[test]
fn deterministic_output() {
    let args = [
        "--machine",
        "--trace",
        "twins",
        "--lambda",
        "G^16",
        "--p",
        "3",
        "--m",
        "4",
    ];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.stdout, b.stdout);
    let input = "G^2/8-1\nclassify G^4/2-1\nsieve --limit 50\n";
    assert_eq!(
        run_stdin(&["repl"], input).stdout,
        run_stdin(&["repl"], input).stdout
    );
}

#[test]
fn machine_records_parse_back() {
    let o = run(&["--machine", "eval", "5G^3.1 + 1 - G^-2/3"]);
    let rec: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(
        number_from_machine(&rec).unwrap(),
        eval_str("5G^3.1 + 1 - G^-2/3").unwrap()
    );

    let o = run(&["--machine", "classify", "G + 5"]);
    let rec: Value = serde_json::from_slice(&o.stdout).unwrap();
    let v = verdict_from_machine(&rec).unwrap();
    assert!(v.audit(&eval_str("G + 5").unwrap()));
    assert_eq!(rec["verdict"], "Composite");

    let o = run(&[
        "--machine",
        "finite-check",
        "--bound",
        "25",
        "--p",
        "2",
        "--mmax",
        "3",
    ]);
    let rec: Value = serde_json::from_slice(&o.stdout).unwrap();
    let r = report_from_machine(&rec).unwrap();
    assert!(r.all_passed());
    assert_eq!(rec["B"], 25);

    let o = run(&[
        "--machine",
        "enum-b",
        "--lambda",
        "G^2",
        "--p",
        "2",
        "--count",
        "2",
    ]);
    let rec: Value = serde_json::from_slice(&o.stdout).unwrap();
    let members: Vec<GrossNumber> = rec["members"]
        .as_array()
        .unwrap()
        .iter()
        .map(|m| number_from_machine(m).unwrap())
        .collect();
    assert_eq!(members[2], eval_str("G^2/32 - 1").unwrap());
}

#[test]
fn repl_survives_errors() {
    let o = run_stdin(
        &["repl"],
        "①-①\nclassify ①/2+1\n①^\n1/0\nset-count evens\nquit\n①\n",
    );
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "0");
    assert_eq!(lines[1], "Prime (Theorem 1)");
    assert!(lines[2].starts_with("error: parse error"));
    assert_eq!(lines[3], "error: division by zero");
    assert_eq!(lines[4], "①/2");
    assert_eq!(lines.len(), 5);
}

#[test]
fn repl_ends_at_eof_in_ascii_mode() {
    let o = run_stdin(&["--ascii", "repl"], "G^2 - 1\nclassify G^2 - 1");
    assert_eq!(stdout(&o), "G^2 - 1\nComposite: (G - 1) * (G + 1)\n");
}
