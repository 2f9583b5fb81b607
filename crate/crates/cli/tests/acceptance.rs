//! The acceptance gate: one test per criterion, each printing a
//! `PASS criterion N` line (visible with `--nocapture`) and enforcing
//! its runtime budget. Everything is checked to exact rational equality
//! over exhaustively enumerated degree-capped bases.

use std::collections::BTreeSet;
use std::process::Command;
use std::time::{Duration, Instant};

use prelie_hopf_core::laws::{self, Check, Suite};
use prelie_hopf_core::planar::enumerate_planar;
use prelie_hopf_core::tree::{enumerate_trees, Color, RootedTree};

fn budget(checks: &[&Check], label: &str, started: Instant, limit: Duration) {
    for c in checks {
        assert!(
            c.passed(),
            "criterion {label} failed at {:?}: {:?}",
            c.name,
            c.failure
        );
        assert!(c.cases > 0, "criterion {label}: check {:?} ran no cases", c.name);
    }
    let elapsed = started.elapsed();
    assert!(
        elapsed < limit,
        "criterion {label} exceeded its budget: {elapsed:?} > {limit:?}"
    );
    let total: usize = checks.iter().map(|c| c.cases).sum();
    println!("PASS criterion {label} ({total} cases in {elapsed:?})");
}

fn suite_checks<'a>(suite: &'a Suite, needle: &str) -> Vec<&'a Check> {
    let found: Vec<&Check> =
        suite.checks.iter().filter(|c| c.name.contains(needle)).collect();
    assert!(!found.is_empty(), "no check matching {needle:?} in suite {}", suite.name);
    found
}

#[test]
fn criterion_01_prelie_law() {
    let started = Instant::now();
    let suite = laws::suite_prelie(8);
    let checks = suite_checks(&suite, "associator symmetry");
    assert_eq!(checks.len(), 2, "one- and two-color associator checks");
    budget(&checks, "1 (pre-Lie associator symmetry)", started, Duration::from_secs(60));
}

#[test]
fn criterion_02_circle_axioms() {
    let started = Instant::now();
    let suite = laws::suite_circle_axioms(6);
    let checks: Vec<&Check> = suite.checks.iter().collect();
    budget(&checks, "2 (circle product axioms)", started, Duration::from_secs(120));
}

#[test]
fn criterion_03_factor_order_independence() {
    let started = Instant::now();
    let suite = laws::suite_circle_axioms(6);
    let checks = suite_checks(&suite, "invariant under factor permutations");
    assert_eq!(checks.len(), 2, "free and one-dimensional instances");
    budget(&checks, "3 (factor-order independence)", started, Duration::from_secs(120));
}

#[test]
fn criterion_04_hopf_laws_on_forests() {
    let started = Instant::now();
    let suite = laws::suite_star_hopf(6);
    let checks: Vec<&Check> = suite.checks.iter().collect();
    budget(&checks, "4 (Hopf laws for the star product)", started, Duration::from_secs(180));
}

#[test]
fn criterion_05_commutator_relation() {
    let started = Instant::now();
    let suite = laws::suite_star_hopf(6);
    let checks = suite_checks(&suite, "commutator equals the pre-Lie bracket");
    budget(&checks, "5 (star commutator relation)", started, Duration::from_secs(60));
}

#[test]
fn criterion_06_recursion_vs_multigrafting() {
    let started = Instant::now();
    let suite = laws::suite_circle_axioms(6);
    let checks = suite_checks(&suite, "multi-grafting");
    budget(&checks, "6 (inductive circle vs multi-grafting)", started, Duration::from_secs(60));
}

#[test]
fn criterion_07_connes_kreimer() {
    let started = Instant::now();
    let suite = laws::suite_ck_duality(6);
    let checks: Vec<&Check> = suite.checks.iter().collect();
    budget(&checks, "7 (Connes-Kreimer coproduct and duality)", started, Duration::from_secs(120));
}

#[test]
fn criterion_08_symmetric_braces() {
    let started = Instant::now();
    let suite = laws::suite_symbrace(3);
    let checks: Vec<&Check> = suite.checks.iter().collect();
    budget(&checks, "8 (symmetric brace identity)", started, Duration::from_secs(60));
}

#[test]
fn criterion_09_sector_combinatorics() {
    let started = Instant::now();
    let suite = laws::suite_planar_brace(7);
    let mut checks = suite_checks(&suite, "sector count is 2v−1");
    checks.extend(suite_checks(&suite, "thirteen sectors"));
    checks.extend(suite_checks(&suite, "total and matches list positions"));
    checks.extend(suite_checks(&suite, "brace term multiplicity"));
    budget(&checks, "9 (planar sector combinatorics)", started, Duration::from_secs(60));
}

#[test]
fn criterion_10_planar_brace_identity() {
    let started = Instant::now();
    let suite = laws::suite_planar_brace(7);
    let checks = suite_checks(&suite, "deconcatenation expansion");
    budget(&checks, "10 (planar brace identity)", started, Duration::from_secs(120));
}

#[test]
fn criterion_11_tensor_hopf_and_foissy() {
    let started = Instant::now();
    let tensor = laws::suite_tensor_hopf(6);
    let foissy = laws::suite_foissy_duality(6);
    let checks: Vec<&Check> =
        tensor.checks.iter().chain(foissy.checks.iter()).collect();
    budget(&checks, "11 (tensor Hopf algebra and its duality)", started, Duration::from_secs(180));
}

// Criterion 12 re-derives both enumerations from scratch so the check
// does not share code with the library enumerators.

fn oracle_unordered_trees(n: usize, palette: &[Color]) -> BTreeSet<RootedTree> {
    let mut out = BTreeSet::new();
    let arrays = {
        // all parent arrays p[i] in 0..i
        let mut acc: Vec<Vec<usize>> = vec![vec![0; n.min(1)]];
        for i in 1..n {
            let mut next = Vec::new();
            for a in &acc {
                for p in 0..i {
                    let mut v = a.clone();
                    v.push(p);
                    next.push(v);
                }
            }
            acc = next;
        }
        acc
    };
    let colorings = {
        let mut acc: Vec<Vec<usize>> = vec![Vec::new()];
        for _ in 0..n {
            let mut next = Vec::new();
            for a in &acc {
                for c in 0..palette.len() {
                    let mut v = a.clone();
                    v.push(c);
                    next.push(v);
                }
            }
            acc = next;
        }
        acc
    };
    for parents in &arrays {
        for coloring in &colorings {
            fn subtree(
                v: usize,
                children_of: &Vec<Vec<usize>>,
                coloring: &[usize],
                palette: &[Color],
            ) -> RootedTree {
                let kids = children_of[v]
                    .iter()
                    .map(|&c| subtree(c, children_of, coloring, palette))
                    .collect();
                RootedTree::new(palette[coloring[v]].clone(), kids)
            }
            let mut children_of = vec![Vec::new(); n];
            for (i, &p) in parents.iter().enumerate().skip(1) {
                children_of[p].push(i);
            }
            out.insert(subtree(0, &children_of, coloring, palette));
        }
    }
    out
}

fn oracle_catalan(m: usize) -> usize {
    // balanced bracket sequences of length 2m by direct scan
    if m == 0 {
        return 1;
    }
    let bits = 2 * m;
    let mut count = 0;
    'mask: for mask in 0u32..(1 << bits) {
        let mut depth: i32 = 0;
        for i in 0..bits {
            depth += if mask & (1 << i) != 0 { 1 } else { -1 };
            if depth < 0 {
                continue 'mask;
            }
        }
        if depth == 0 {
            count += 1;
        }
    }
    count
}

#[test]
fn criterion_12_enumeration_cross_checks() {
    let started = Instant::now();
    let palette = [Color::new("a")];

    let tree_counts: Vec<usize> =
        (1..=6).map(|n| enumerate_trees(n, &palette).len()).collect();
    assert_eq!(tree_counts, vec![1, 1, 2, 4, 9, 20], "unordered tree counts");
    for n in 1..=6 {
        let fast: BTreeSet<RootedTree> = enumerate_trees(n, &palette).into_iter().collect();
        assert_eq!(fast, oracle_unordered_trees(n, &palette), "tree oracle at n = {n}");
    }

    let planar_counts: Vec<usize> =
        (1..=5).map(|n| enumerate_planar(n, &palette).len()).collect();
    assert_eq!(planar_counts, vec![1, 1, 2, 5, 14], "planar tree counts");
    for n in 1..=5 {
        assert_eq!(
            enumerate_planar(n, &palette).len(),
            oracle_catalan(n - 1),
            "planar oracle at n = {n}"
        );
    }

    let elapsed = started.elapsed();
    assert!(elapsed < Duration::from_secs(60));
    println!("PASS criterion 12 (enumeration cross-checks in {elapsed:?})");
}

fn run_cli(args: &[&str]) -> (String, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_prelie-hopf"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        String::from_utf8(out.stdout).expect("utf-8 output"),
        out.status.code().unwrap_or(-1),
    )
}

#[test]
fn criterion_13_cli_end_to_end() {
    let started = Instant::now();

    let (stdout, code) = run_cli(&["eval", "a * a"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "1 a[a] + 1 a a\n");

    let (stdout, code) = run_cli(&["eval", "ckΔ(a[a])"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "a[a]⊗1 + 1⊗a[a] + a⊗a\n");

    let (stdout, code) = run_cli(&["eval", "--mode", "planar", "brace(a[a]; a)"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "2 a[a a] + 1 a[a[a]]\n");

    let elapsed = started.elapsed();
    assert!(elapsed < Duration::from_secs(60));
    println!("PASS criterion 13 (CLI byte-for-byte outputs in {elapsed:?})");
}
