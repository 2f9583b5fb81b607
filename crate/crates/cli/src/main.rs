//! `prelie-hopf`: evaluate expressions in the tree algebras, run the
//! identity suites, count basis elements, and render DOT pictures.
//!
//! Exit codes: 0 on success, 1 when a verification suite finds a
//! counterexample, 2 on usage or parse errors.

mod dot;
mod eval;
mod expr;
mod print;

use std::collections::BTreeSet;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use prelie_hopf_core::laws;
use prelie_hopf_core::planar::enumerate_planar;
use prelie_hopf_core::tree::{enumerate_trees, Color};

use eval::{eval_planar, eval_symmetric, Value};
use print::{render_combination, render_tensor};

#[derive(Parser)]
#[command(
    name = "prelie-hopf",
    about = "Exact computations in the Hopf algebras of rooted and planar trees",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum ModeArg {
    Symmetric,
    Planar,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum FormatArg {
    Text,
    Dot,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum CountKind {
    /// Unordered rooted trees up to isomorphism.
    Trees,
    /// Planar rooted trees (ordered children).
    Planar,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate an expression and print the resulting combination.
    Eval {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        /// Unordered forests (symmetric) or ordered words of planar trees.
        #[arg(long, value_enum, default_value_t = ModeArg::Symmetric)]
        mode: ModeArg,
        /// Restrict the color alphabet, e.g. `--colors a,b`.
        #[arg(long)]
        colors: Option<String>,
        #[arg(long, value_enum, default_value_t = FormatArg::Text)]
        format: FormatArg,
    },
    /// Run an identity suite up to a degree cap; nonzero exit on the
    /// first counterexample.
    Verify {
        /// One of: prelie, circle-axioms, star-hopf, ck-duality,
        /// symbrace, planar-brace, tensor-hopf, foissy-duality, all.
        suite: String,
        /// Degree cap; each suite has a sensible default.
        #[arg(long)]
        cap: Option<usize>,
        /// Accepted for interface stability; the suites are exhaustive
        /// and deterministic, so the seed is unused.
        #[arg(long)]
        seed: Option<u64>,
        /// Also run the pre-Lie check on a structure-constant table
        /// (header `dim n`, then `i j k num/den` lines, 1-based).
        #[arg(long)]
        table: Option<std::path::PathBuf>,
    },
    /// Count basis trees of a given size.
    Count {
        #[arg(value_enum)]
        kind: CountKind,
        /// Vertex count.
        n: usize,
        /// Number of colors.
        colors: usize,
    },
    /// Render an expression's monomials as DOT digraphs.
    Dot {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        #[arg(long, value_enum, default_value_t = ModeArg::Symmetric)]
        mode: ModeArg,
        #[arg(long)]
        colors: Option<String>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Eval { expr, mode, colors, format } => {
            let parsed = parse_and_check(&expr, colors.as_deref())?;
            match (mode, format) {
                (ModeArg::Symmetric, FormatArg::Text) => {
                    match eval_symmetric(&parsed).map_err(|e| e.to_string())? {
                        Value::Element(e) => println!("{}", render_combination(&e)),
                        Value::Tensor(t) => println!("{}", render_tensor(&t)),
                    }
                }
                (ModeArg::Planar, FormatArg::Text) => {
                    match eval_planar(&parsed).map_err(|e| e.to_string())? {
                        Value::Element(e) => println!("{}", render_combination(&e)),
                        Value::Tensor(t) => println!("{}", render_tensor(&t)),
                    }
                }
                (ModeArg::Symmetric, FormatArg::Dot) => {
                    let v = eval_symmetric(&parsed).map_err(|e| e.to_string())?;
                    let monomials =
                        eval::symmetric_monomials(&v).map_err(|e| e.to_string())?;
                    print!("{}", dot::render_symmetric(&sorted_sym(monomials)));
                }
                (ModeArg::Planar, FormatArg::Dot) => {
                    let v = eval_planar(&parsed).map_err(|e| e.to_string())?;
                    let monomials = eval::planar_monomials(&v).map_err(|e| e.to_string())?;
                    print!("{}", dot::render_planar(&sorted_planar(monomials)));
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { suite, cap, seed: _, table } => {
            let suites = laws::run_suites(&suite, cap)
                .ok_or_else(|| format!("unknown suite {suite:?}; try one of {:?}", laws::SUITE_NAMES))?;
            let mut all_ok = true;
            let mut total_checks = 0usize;
            let mut total_cases = 0usize;
            if let Some(path) = table {
                let text = std::fs::read_to_string(&path)
                    .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
                let alg: prelie_hopf_core::prelie::StructureConstantPreLie =
                    text.parse().map_err(|e| format!("{}: {e}", path.display()))?;
                total_checks += 1;
                total_cases += alg.dim().pow(3);
                println!("structure-constant table {} (dim {})", path.display(), alg.dim());
                match alg.check() {
                    Ok(()) => println!("  ok    pre-Lie identity on all basis triples"),
                    Err((i, j, k)) => {
                        all_ok = false;
                        println!("  FAIL  pre-Lie identity");
                        println!(
                            "        counterexample: e{0} ∘ (e{1} ∘ e{2}) - (e{0} ∘ e{1}) ∘ e{2} \
                             ≠ e{0} ∘ (e{2} ∘ e{1}) - (e{0} ∘ e{2}) ∘ e{1}",
                            i + 1,
                            j + 1,
                            k + 1
                        );
                    }
                }
            }
            for s in &suites {
                println!("suite {}", s.name);
                for c in &s.checks {
                    total_checks += 1;
                    total_cases += c.cases;
                    match &c.failure {
                        None => println!("  ok    {}  [{} cases]", c.name, c.cases),
                        Some(counterexample) => {
                            all_ok = false;
                            println!("  FAIL  {}", c.name);
                            println!("        counterexample: {counterexample}");
                        }
                    }
                }
            }
            if all_ok {
                println!("PASS: {total_checks} checks, {total_cases} cases");
                Ok(ExitCode::SUCCESS)
            } else {
                println!("FAIL");
                Ok(ExitCode::from(1))
            }
        }
        Command::Count { kind, n, colors } => {
            if n == 0 {
                return Err("vertex count must be at least 1".to_string());
            }
            let palette = make_palette(colors)?;
            let count = match kind {
                CountKind::Trees => enumerate_trees(n, &palette).len(),
                CountKind::Planar => enumerate_planar(n, &palette).len(),
            };
            println!("{count}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Dot { expr, mode, colors } => {
            let parsed = parse_and_check(&expr, colors.as_deref())?;
            match mode {
                ModeArg::Symmetric => {
                    let v = eval_symmetric(&parsed).map_err(|e| e.to_string())?;
                    let monomials =
                        eval::symmetric_monomials(&v).map_err(|e| e.to_string())?;
                    print!("{}", dot::render_symmetric(&sorted_sym(monomials)));
                }
                ModeArg::Planar => {
                    let v = eval_planar(&parsed).map_err(|e| e.to_string())?;
                    let monomials = eval::planar_monomials(&v).map_err(|e| e.to_string())?;
                    print!("{}", dot::render_planar(&sorted_planar(monomials)));
                }
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn parse_and_check(text: &str, colors: Option<&str>) -> Result<expr::Expr, String> {
    let parsed = expr::parse_expression(text).map_err(|e| e.to_string())?;
    if let Some(allowed) = colors {
        let allowed: BTreeSet<String> = allowed.split(',').map(|c| c.trim().to_string()).collect();
        let mut used = BTreeSet::new();
        eval::collect_colors(&parsed, &mut used);
        for c in &used {
            if !allowed.contains(c) {
                return Err(format!("unknown color {c:?}; allowed: {allowed:?}"));
            }
        }
    }
    Ok(parsed)
}

fn make_palette(count: usize) -> Result<Vec<Color>, String> {
    if count == 0 {
        return Err("at least one color is required".to_string());
    }
    if count > 26 {
        return Err("at most 26 colors are supported".to_string());
    }
    Ok((0..count).map(|i| Color::new(((b'a' + i as u8) as char).to_string())).collect())
}

fn sorted_sym(
    mut monomials: Vec<(prelie_hopf_core::Forest, prelie_hopf_core::Scalar)>,
) -> Vec<(prelie_hopf_core::Forest, prelie_hopf_core::Scalar)> {
    use print::Printable;
    monomials.sort_by_key(|(m, _)| m.graded_key());
    monomials
}

fn sorted_planar(
    mut monomials: Vec<(
        prelie_hopf_core::planar::PlanarForest,
        prelie_hopf_core::Scalar,
    )>,
) -> Vec<(
    prelie_hopf_core::planar::PlanarForest,
    prelie_hopf_core::Scalar,
)> {
    use print::Printable;
    monomials.sort_by_key(|(m, _)| m.graded_key());
    monomials
}
