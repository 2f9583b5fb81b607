//! End-to-end behavior of the binary: expression evaluation, output
//! round trips, exit codes, counting, verification, DOT rendering.

use std::process::Command;

fn run(args: &[&str]) -> (String, String, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_prelie-hopf"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        String::from_utf8(out.stdout).expect("utf-8 stdout"),
        String::from_utf8(out.stderr).expect("utf-8 stderr"),
        out.status.code().unwrap_or(-1),
    )
}

fn eval(mode: &str, expr: &str) -> String {
    let (stdout, stderr, code) = run(&["eval", "--mode", mode, expr]);
    assert_eq!(code, 0, "eval {expr:?} failed: {stderr}");
    stdout.trim_end().to_string()
}

#[test]
fn symmetric_eval_basics() {
    assert_eq!(eval("symmetric", "a o a"), "1 a[a]");
    assert_eq!(eval("symmetric", "a[a] o a"), "1 a[a a] + 1 a[a[a]]");
    assert_eq!(eval("symmetric", "a ∘ a[a]"), "1 a[a[a]]");
    assert_eq!(eval("symmetric", "S(a a)"), "2 a[a] + 1 a a");
    assert_eq!(eval("symmetric", "Δ(a)"), "a⊗1 + 1⊗a");
    assert_eq!(eval("symmetric", "coprod(a a)"), "a a⊗1 + 1⊗a a + 2 a⊗a");
    assert_eq!(eval("symmetric", "B+(a; a a)"), "1 a[a a]");
    assert_eq!(eval("symmetric", "brace(a; a a)"), "1 a[a a]");
    assert_eq!(eval("symmetric", "a o a - a o a"), "0");
    assert_eq!(eval("symmetric", "1"), "1 1");
    assert_eq!(eval("symmetric", "1 ∘ a"), "0");
    assert_eq!(eval("symmetric", "2 * a[a]"), "2 a[a]");
    assert_eq!(
        eval("symmetric", "ckcoprod(a[a a])"),
        "a[a a]⊗1 + 1⊗a[a a] + 2 a⊗a[a] + a a⊗a"
    );
}

#[test]
fn planar_eval_basics() {
    assert_eq!(eval("planar", "a * a"), "1 a[a] + 2 a a");
    // word b[a] times the letter a: both interleavings plus the three
    // sector graftings (the two corolla insertions coincide)
    assert_eq!(
        eval("planar", "b[a] * a"),
        "2 b[a a] + 1 b[a[a]] + 1 a b[a] + 1 b[a] a"
    );
    assert_eq!(eval("planar", "Δ(a b)"), "a b⊗1 + 1⊗a b + a⊗b");
    assert_eq!(eval("planar", "fΔ(a[a b])"), eval("planar", "fcoprod(a[a b])"));
    assert_eq!(eval("planar", "B+(a; b c)"), "1 a[b c]");
    assert_eq!(eval("planar", "S(a)"), "-1 a");
}

#[test]
fn foissy_coproduct_of_ordered_tree() {
    assert_eq!(
        eval("planar", "fΔ(a[a b])"),
        "a[a b]⊗1 + 1⊗a[a b] + a⊗a[b] + b⊗a[a] + a b⊗a"
    );
}

#[test]
fn eval_round_trips_through_its_own_output() {
    let battery_sym = [
        "a * a",
        "a[a] o a a",
        "S(a a a)",
        "2 a[a] - 1/2 a a + S(a)",
        "Δ(a a)",
        "ckΔ(a[a a])",
        "a ⊗ a[a]",
    ];
    for expr in battery_sym {
        let once = eval("symmetric", expr);
        let twice = eval("symmetric", &once);
        assert_eq!(once, twice, "symmetric round trip for {expr:?}");
    }
    let battery_planar = ["a * a", "b[a] * a", "fΔ(a[b a])", "S(a b)", "brace(a[a]; a a)"];
    for expr in battery_planar {
        let once = eval("planar", expr);
        let twice = eval("planar", &once);
        assert_eq!(once, twice, "planar round trip for {expr:?}");
    }
}

#[test]
fn planar_and_symmetric_literals_differ() {
    // unordered literals canonicalize, ordered ones do not
    assert_eq!(eval("symmetric", "a[b a]"), eval("symmetric", "a[a b]"));
    assert_ne!(eval("planar", "a[b a]"), eval("planar", "a[a b]"));
}

#[test]
fn parse_and_usage_errors_exit_two() {
    let (_, stderr, code) = run(&["eval", "a["]);
    assert_eq!(code, 2);
    assert!(stderr.contains("parse error"), "stderr: {stderr}");

    let (_, stderr, code) = run(&["eval", "a )"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("parse error"), "stderr: {stderr}");

    let (_, _, code) = run(&["eval", "--mode", "planar", "a o a"]);
    assert_eq!(code, 2);

    let (_, _, code) = run(&["eval", "ckΔ(a)", "--mode", "planar"]);
    assert_eq!(code, 2);

    let (_, _, code) = run(&["verify", "no-such-suite"]);
    assert_eq!(code, 2);

    let (_, _, code) = run(&["nonsense"]);
    assert_eq!(code, 2);

    let (_, stderr, code) = run(&["eval", "--colors", "a", "a[b]"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("unknown color"), "stderr: {stderr}");
}

#[test]
fn verify_reports_and_exits_zero() {
    let (stdout, _, code) = run(&["verify", "symbrace", "--cap", "2"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("suite symbrace"));
    assert!(stdout.contains("ok"));
    assert!(stdout.lines().last().unwrap().starts_with("PASS"));

    // the seed flag is accepted
    let (_, _, code) = run(&["verify", "symbrace", "--cap", "2", "--seed", "7"]);
    assert_eq!(code, 0);
}

#[test]
fn verify_all_at_default_caps_stays_in_budget() {
    let started = std::time::Instant::now();
    let (stdout, _, code) = run(&["verify", "all"]);
    assert_eq!(code, 0, "stdout: {stdout}");
    assert!(stdout.lines().last().unwrap().starts_with("PASS"));
    assert!(
        started.elapsed() < std::time::Duration::from_secs(180),
        "full verification must fit the tightest acceptance budget"
    );
}

#[test]
fn verify_checks_structure_constant_tables() {
    let dir = std::env::temp_dir();
    let good = dir.join("prelie_table_good.txt");
    let bad = dir.join("prelie_table_bad.txt");
    let malformed = dir.join("prelie_table_malformed.txt");
    std::fs::write(&good, "dim 2\n1 2 1 1\n").unwrap();
    std::fs::write(&bad, "dim 2\n1 1 2 1\n2 1 1 1\n").unwrap();
    std::fs::write(&malformed, "dim 2\n1 2 1\n").unwrap();

    let (stdout, _, code) =
        run(&["verify", "symbrace", "--cap", "2", "--table", good.to_str().unwrap()]);
    assert_eq!(code, 0, "stdout: {stdout}");
    assert!(stdout.contains("pre-Lie identity on all basis triples"));

    let (stdout, _, code) =
        run(&["verify", "symbrace", "--cap", "2", "--table", bad.to_str().unwrap()]);
    assert_eq!(code, 1, "a violating table is a counterexample: {stdout}");
    assert!(stdout.contains("counterexample: e1 ∘ (e1 ∘ e2)"), "stdout: {stdout}");

    let (_, stderr, code) =
        run(&["verify", "symbrace", "--cap", "2", "--table", malformed.to_str().unwrap()]);
    assert_eq!(code, 2, "malformed tables are usage errors");
    assert!(stderr.contains("parse error"), "stderr: {stderr}");
}

#[test]
fn verify_ck_duality_names_the_pairing() {
    let (stdout, _, code) = run(&["verify", "ck-duality", "--cap", "4"]);
    assert_eq!(code, 0, "stdout: {stdout}");
    assert!(
        stdout.contains("symmetry-factor pairing"),
        "the matching pairing variant is reported: {stdout}"
    );
}

#[test]
fn count_matches_known_values() {
    let cases = [
        (["count", "trees", "6", "1"], "20"),
        (["count", "trees", "3", "2"], "14"),
        (["count", "planar", "5", "1"], "14"),
        (["count", "planar", "2", "2"], "4"),
        (["count", "trees", "1", "7"], "7"),
    ];
    for (args, expect) in cases {
        let (stdout, _, code) = run(&args);
        assert_eq!(code, 0);
        assert_eq!(stdout.trim(), expect, "args {args:?}");
    }
}

#[test]
fn dot_renders_each_monomial() {
    let (stdout, _, code) = run(&["dot", "a[a] o a"]);
    assert_eq!(code, 0);
    assert_eq!(stdout.matches("digraph").count(), 2);
    assert_eq!(stdout.matches("// coefficient 1").count(), 2);
    assert!(stdout.contains("rankdir=BT"));

    let (bc, _, _) = run(&["dot", "--mode", "planar", "a[b c]"]);
    let (cb, _, _) = run(&["dot", "--mode", "planar", "a[c b]"]);
    assert_ne!(bc, cb, "planar child order must show in the DOT output");
    assert!(bc.contains("ordering=\"out\""));

    let (_, _, code) = run(&["dot", "Δ(a)"]);
    assert_eq!(code, 2, "tensors have no DOT rendering");
}

#[test]
fn eval_format_dot_equals_dot_subcommand() {
    let (via_flag, _, c1) = run(&["eval", "--format", "dot", "a o a"]);
    let (via_sub, _, c2) = run(&["dot", "a o a"]);
    assert_eq!(c1, 0);
    assert_eq!(c2, 0);
    assert_eq!(via_flag, via_sub);
}
