//! End-to-end checks of the `mvalg` binary: verb output, exit codes, and
//! byte determinism.

use std::process::Command;

fn mvalg(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_mvalg"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().expect("exit code"),
        String::from_utf8(out.stdout).expect("utf-8 stdout"),
        String::from_utf8(out.stderr).expect("utf-8 stderr"),
    )
}

#[test]
fn parse_prints_normal_forms() {
    let (code, stdout, _) = mvalg(&[
        "parse",
        "product[ chain:2 , lex:1 ]",
        "--filter",
        "pull{2;rad}",
        "--element",
        "(1, inf[3])",
    ]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "product[chain:2,chang]\npull{2;rad}\n(1,inf[3])\n");
}

#[test]
fn parse_errors_exit_2() {
    let (code, stdout, stderr) = mvalg(&["parse", "ring:3"]);
    assert_eq!(code, 2);
    assert!(stdout.is_empty());
    assert!(stderr.starts_with("error: "), "stderr: {stderr}");
    assert!(stderr.contains("at byte 0"), "stderr: {stderr}");

    let (code, _, _) = mvalg(&["parse", "lex:2", "--element", "coinf[1]"]);
    assert_eq!(code, 2, "element width mismatch");
    let (code, _, _) = mvalg(&["parse", "chain:2", "--filter", "rad"]);
    assert_eq!(code, 2, "rad needs a perfect algebra");
    let (code, _, _) = mvalg(&["ell", "lex:2", "--at", "one"]);
    assert_eq!(code, 2, "localization point must be prime");
}

#[test]
fn usage_errors_exit_2() {
    let out = Command::new(env!("CARGO_BIN_EXE_mvalg"))
        .arg("frobnicate")
        .output()
        .expect("binary runs");
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn axioms_verb() {
    let (code, stdout, _) = mvalg(&["axioms", "product[chang,lex:2]", "--window", "3"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "PASS\n");
}

#[test]
fn pspec_lists_nodes_and_edges() {
    let (code, stdout, _) = mvalg(&["pspec", "lex:2"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = stdout.lines().collect();
    assert_eq!(lines.iter().filter(|l| l.starts_with("node ")).count(), 3);
    assert!(lines.contains(&"edge m{1} rad"));
    assert!(lines.contains(&"edge m{2} rad"));

    // --at restricts to the primes comparable to the given one.
    let (code, stdout, _) = mvalg(&["pspec", "lex:2", "--at", "m{1}"]);
    assert_eq!(code, 0);
    assert_eq!(stdout.lines().filter(|l| l.starts_with("node ")).count(), 2);
    assert!(!stdout.contains("m{2}"));
}

#[test]
fn pspec_writes_dot() {
    let path = std::env::temp_dir().join("mvalg-cli-test.dot");
    let (code, _, _) = mvalg(&["pspec", "lex:2", "--dot", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    let dot = std::fs::read_to_string(&path).expect("diagram written");
    std::fs::remove_file(&path).ok();
    assert!(dot.starts_with("digraph spectrum {"));
    assert!(dot.contains("\"m{1}\" -> \"rad\";"));
    assert!(dot.contains("\"m{2}\" -> \"rad\";"));
}

#[test]
fn conrad_verb() {
    let (code, stdout, _) = mvalg(&["conrad", "product[chain:1,chain:1]"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "whole (improper)\n");

    let (code, stdout, _) = mvalg(&["conrad", "lex:3"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "rad\n");

    let (code, stdout, _) = mvalg(&["conrad", "chain:4"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "one\n");
}

#[test]
fn counits_verb() {
    let (code, stdout, _) = mvalg(&["counits", "lex:2", "--window", "1"]);
    assert_eq!(code, 0);
    let mut lines: Vec<&str> = stdout.lines().collect();
    lines.sort();
    assert_eq!(lines, ["coinf[0,1]", "coinf[1,0]"]);
}

#[test]
fn ell_and_localize_verbs() {
    let (code, stdout, _) = mvalg(&["ell", "lex:2", "--at", "rad"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "one\n");

    let (code, stdout, _) = mvalg(&["localize", "lex:2", "--at", "m{1}"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = stdout.lines().collect();
    assert_eq!(lines[0], "chang");
    assert!(lines[1..].iter().all(|l| l.starts_with("iso ")));
    assert_eq!(lines.len(), 3, "a 2-chain of primes maps over");

    let (code, stdout, _) = mvalg(&["localize", "lex:2", "--at", "rad"]);
    assert_eq!(code, 0);
    assert_eq!(stdout.lines().next(), Some("lex:2"));
}

#[test]
fn verify_verb_exit_codes() {
    let (code, stdout, _) = mvalg(&["verify", "chang"]);
    assert_eq!(code, 0);
    assert!(stdout.lines().all(|l| l.starts_with("CHECK ") && l.ends_with(" PASS")));
}

#[test]
fn catalog_verb() {
    let (code, stdout, _) = mvalg(&["catalog"]);
    assert_eq!(code, 0);
    assert_eq!(stdout.lines().count(), mvalg::CATALOG.len());
    assert!(stdout.lines().any(|l| l == "product[chang,lex:2]"));
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["verify", "lex:2"][..],
        &["pspec", "product[chang,lex:2]"],
        &["counits", "product[chain:2,chain:3]"],
        &["localize", "product[chain:2,chain:3]", "--at", "pull{1;one}"],
    ] {
        let first = mvalg(args);
        let second = mvalg(args);
        assert_eq!(first, second, "non-deterministic output for {args:?}");
    }
}
