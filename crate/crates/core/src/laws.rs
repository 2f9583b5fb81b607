//! Executable identity suites. Every algebraic law shipped by this crate
//! is checked here over exhaustively enumerated degree-capped bases, to
//! exact rational equality; a failure reports the first counterexample
//! as a reproducible expression.

use std::cmp::Ordering;

use crate::connes_kreimer::{
    b_minus, b_plus, ck_coproduct, ck_coproduct_cuts, duality_check, tensor_mul, PairingWeight,
};
use crate::linear::{
    componentwise_bilinear, iterate_coproduct, LinearCombination, SMonomial, TensorCombination,
    Word,
};
use crate::planar::{
    enumerate_planar, planar_brace, planar_up_to, planar_words_up_to, sector_compare, sector_list,
    PlanarBraces, PlanarTree,
};
use crate::prelie::{
    circle_extend, corolla_graft, free_circle, lie_bracket, universal_morphism_apply, FreePreLie,
    PreLieAlgebra, StructureConstantPreLie,
};
use crate::scalar::Scalar;
use crate::sym_hopf::{
    antipode, circle, circle_monomials, circle_single, circle_single_seq, counit, counit_element,
    monomial_degree, monomials_up_to, right_action, selement_from_basis, star, star_monomials,
    symmetric_brace_multi, unshuffle, unshuffle_element, SElement,
};
use crate::tensor_hopf::{
    antipode_tensor, b_minus_planar, b_plus_planar, brace_composition_check, deconcat,
    foissy_coproduct, planar_brace_segments, star_tensor, star_words, star_words_closed,
    word_counit, BraceAlgebra, TrivialBraces,
};
use crate::tree::{forests_up_to, trees_up_to, Color, Forest, RootedTree};

/// Outcome of one identity check: how many cases ran and the first
/// counterexample, if any.
#[derive(Clone, Debug)]
pub struct Check {
    pub name: String,
    pub cases: usize,
    pub failure: Option<String>,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

/// A named group of checks, as run by `verify`.
#[derive(Clone, Debug)]
pub struct Suite {
    pub name: String,
    pub checks: Vec<Check>,
}

impl Suite {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.passed())
    }
}

struct Tally {
    cases: usize,
    failure: Option<String>,
}

impl Tally {
    fn new() -> Self {
        Tally { cases: 0, failure: None }
    }

    /// Records one case; returns false once a counterexample is stored so
    /// loops can stop early.
    fn case(&mut self, ok: bool, msg: impl FnOnce() -> String) -> bool {
        if self.failure.is_some() {
            return false;
        }
        self.cases += 1;
        if !ok {
            self.failure = Some(msg());
            return false;
        }
        true
    }

    fn done(self, name: impl Into<String>) -> Check {
        Check { name: name.into(), cases: self.cases, failure: self.failure }
    }
}

fn one_color() -> Vec<Color> {
    vec![Color::new("a")]
}

fn two_colors() -> Vec<Color> {
    vec![Color::new("a"), Color::new("b")]
}

// ---------------------------------------------------------------------
// pre-Lie suite

fn associator_symmetry(colors: &[Color], cap: usize) -> Check {
    let alg = FreePreLie::new(colors.to_vec());
    let trees = trees_up_to(cap.saturating_sub(2).max(1), colors);
    let mut tally = Tally::new();
    'outer: for t1 in &trees {
        for t2 in &trees {
            if t1.vertex_count() + t2.vertex_count() + 1 > cap {
                continue;
            }
            for t3 in &trees {
                if t1.vertex_count() + t2.vertex_count() + t3.vertex_count() > cap {
                    continue;
                }
                let x = LinearCombination::single(t1.clone());
                let y = LinearCombination::single(t2.clone());
                let z = LinearCombination::single(t3.clone());
                let assoc = |a: &_, b: &_, c: &_| {
                    circle_extend(&alg, a, &circle_extend(&alg, b, c))
                        .sub(&circle_extend(&alg, &circle_extend(&alg, a, b), c))
                };
                let ok = assoc(&x, &y, &z) == assoc(&x, &z, &y);
                if !tally.case(ok, || format!("associator not symmetric at ({t1}, {t2}, {t3})")) {
                    break 'outer;
                }
            }
        }
    }
    tally.done(format!(
        "pre-Lie associator symmetry, {} color(s), total vertices <= {cap}",
        colors.len()
    ))
}

fn bracket_laws(cap: usize) -> Check {
    let colors = one_color();
    let alg = FreePreLie::new(colors.clone());
    let trees = trees_up_to(cap.saturating_sub(2).max(1), &colors);
    let mut tally = Tally::new();
    'outer: for t1 in &trees {
        for t2 in &trees {
            let x = LinearCombination::single(t1.clone());
            let y = LinearCombination::single(t2.clone());
            let anti = lie_bracket(&alg, &x, &y) == lie_bracket(&alg, &y, &x).neg();
            if !tally.case(anti, || format!("bracket not antisymmetric at ({t1}, {t2})")) {
                break 'outer;
            }
            if t1.vertex_count() + t2.vertex_count() + 1 > cap {
                continue;
            }
            for t3 in &trees {
                if t1.vertex_count() + t2.vertex_count() + t3.vertex_count() > cap {
                    continue;
                }
                let z = LinearCombination::single(t3.clone());
                let jacobi = lie_bracket(&alg, &x, &lie_bracket(&alg, &y, &z))
                    .add(&lie_bracket(&alg, &y, &lie_bracket(&alg, &z, &x)))
                    .add(&lie_bracket(&alg, &z, &lie_bracket(&alg, &x, &y)));
                if !tally.case(jacobi.is_zero(), || {
                    format!("Jacobi fails at ({t1}, {t2}, {t3})")
                }) {
                    break 'outer;
                }
            }
        }
    }
    tally.done(format!("Lie bracket antisymmetry and Jacobi, total vertices <= {cap}"))
}

fn structure_constant_instances() -> Check {
    let mut tally = Tally::new();
    let line = StructureConstantPreLie::idempotent_line();
    tally.case(line.check().is_ok(), || "idempotent line fails the pre-Lie check".into());
    let skew = StructureConstantPreLie::new(2, [(0, 1, 0, Scalar::one())]);
    tally.case(skew.check().is_ok(), || "e1∘e2 = e1 table fails the pre-Lie check".into());
    let bad = StructureConstantPreLie::new(
        2,
        [(0, 0, 1, Scalar::one()), (1, 0, 0, Scalar::one())],
    );
    tally.case(bad.check() == Err((0, 0, 1)), || {
        "violating table should report its first bad triple".into()
    });
    tally.done("structure-constant pre-Lie check on known tables")
}

fn universal_morphism_identity(cap: usize) -> Check {
    let colors = one_color();
    let alg = FreePreLie::new(colors.clone());
    let mut f = std::collections::BTreeMap::new();
    f.insert(colors[0].clone(), LinearCombination::single(RootedTree::leaf(colors[0].clone())));
    let mut tally = Tally::new();
    for t in trees_up_to(cap, &colors) {
        let img = universal_morphism_apply(&f, &t, &alg).expect("color known");
        if !tally.case(img == LinearCombination::single(t.clone()), || {
            format!("identity morphism moved {t}")
        }) {
            break;
        }
    }
    tally.done(format!("universal morphism with identity generators fixes trees <= {cap}"))
}

fn universal_morphism_respects_circle(cap: usize) -> Check {
    let colors = one_color();
    let free = FreePreLie::new(colors.clone());
    let line = StructureConstantPreLie::idempotent_line();
    let mut to_free = std::collections::BTreeMap::new();
    to_free
        .insert(colors[0].clone(), LinearCombination::single(RootedTree::leaf(colors[0].clone())));
    let mut to_line = std::collections::BTreeMap::new();
    to_line.insert(colors[0].clone(), LinearCombination::single(0usize));

    let trees = trees_up_to(cap - 1, &colors);
    let mut tally = Tally::new();
    'outer: for t1 in &trees {
        for t2 in &trees {
            if t1.vertex_count() + t2.vertex_count() > cap {
                continue;
            }
            let product = free_circle(t1, t2);

            let phi = |t: &RootedTree| universal_morphism_apply(&to_free, t, &free).unwrap();
            let lhs = product.map(|t| phi(t));
            let rhs = circle_extend(&free, &phi(t1), &phi(t2));
            if !tally.case(lhs == rhs, || {
                format!("identity-target morphism breaks ∘ at ({t1}, {t2})")
            }) {
                break 'outer;
            }

            let psi = |t: &RootedTree| universal_morphism_apply(&to_line, t, &line).unwrap();
            let lhs = product.map(|t| psi(t));
            let rhs = circle_extend(&line, &psi(t1), &psi(t2));
            if !tally.case(lhs == rhs, || {
                format!("idempotent-line morphism breaks ∘ at ({t1}, {t2})")
            }) {
                break 'outer;
            }
        }
    }
    tally.done(format!("universal morphism respects ∘, total vertices <= {cap}"))
}

fn derivation_action_matches_grafting(cap: usize) -> Check {
    let colors = one_color();
    let alg = FreePreLie::new(colors.clone());
    let forests = forests_up_to(cap.saturating_sub(1).min(5), &colors);
    let trees = trees_up_to(cap.saturating_sub(1).max(1), &colors);
    let mut tally = Tally::new();
    'outer: for a in &forests {
        for t in &trees {
            if a.degree() + t.vertex_count() > cap {
                continue;
            }
            let action = right_action(&alg, a, t);
            let grafting = corolla_graft(a, std::slice::from_ref(t));
            if !tally.case(action == grafting, || {
                format!("derivation action differs from grafting at ({a}) ∘ {t}")
            }) {
                break 'outer;
            }
        }
    }
    tally.done(format!("derivation action equals one-tree multi-grafting, degree <= {cap}"))
}

pub fn suite_prelie(cap: usize) -> Suite {
    Suite {
        name: "prelie".into(),
        checks: vec![
            associator_symmetry(&one_color(), cap),
            associator_symmetry(&two_colors(), cap.saturating_sub(2).max(3)),
            bracket_laws(cap.saturating_sub(1).max(3)),
            structure_constant_instances(),
            universal_morphism_identity(cap.saturating_sub(3).max(2)),
            universal_morphism_respects_circle(cap.saturating_sub(2).max(2)),
            derivation_action_matches_grafting(cap.saturating_sub(2).max(2)),
        ],
    }
}

// ---------------------------------------------------------------------
// circle-axioms suite

fn law_circle_units<P: PreLieAlgebra>(alg: &P, monomials: &[SMonomial<P::Basis>]) -> (usize, Option<String>) {
    let mut tally = Tally::new();
    let one = SMonomial::one();
    for a in monomials {
        let lhs = circle_monomials(alg, a, &one);
        let ok = lhs == LinearCombination::single(a.clone());
        if !tally.case(ok, || format!("A∘1 ≠ A at A = {a}")) {
            return (tally.cases, tally.failure);
        }
        let lhs = circle_monomials(alg, &one, a);
        let ok = lhs == LinearCombination::term(SMonomial::one(), counit(a));
        if !tally.case(ok, || format!("1∘A ≠ ε(A) at A = {a}")) {
            return (tally.cases, tally.failure);
        }
    }
    (tally.cases, tally.failure)
}

fn law_circle_def_recursion<P: PreLieAlgebra>(
    alg: &P,
    basis: &[P::Basis],
    monomials: &[SMonomial<P::Basis>],
    cap: usize,
) -> (usize, Option<String>) {
    let mut tally = Tally::new();
    for t in basis {
        for a in monomials {
            if a.is_one() || alg.degree(t) + monomial_degree(alg, a) > cap {
                continue;
            }
            let full = circle_single(alg, t, a);
            // peel each distinct factor in turn
            for (x, _) in a.runs() {
                let mut rest = a.factors().to_vec();
                let pos = rest.iter().position(|f| f == x).expect("factor present");
                rest.remove(pos);
                let b = SMonomial::new(rest);
                let t_b = circle_single(alg, t, &b);
                let mut lhs = LinearCombination::zero();
                for (u, c) in t_b.iter() {
                    for (v, k) in alg.circle_basis(u, x).iter() {
                        lhs.add_term(v.clone(), c * k);
                    }
                }
                for (m, c) in right_action(alg, &b, x).iter() {
                    for (v, k) in circle_single(alg, t, m).iter() {
                        lhs.add_term(v.clone(), -&(c * k));
                    }
                }
                if !tally.case(lhs == full, || {
                    format!("T∘BX ≠ (T∘B)∘X − T∘(B∘X) at T = {t}, A = {a}, X = {x}")
                }) {
                    return (tally.cases, tally.failure);
                }
            }
        }
    }
    (tally.cases, tally.failure)
}

fn law_circle_split_multiplicativity<P: PreLieAlgebra>(
    alg: &P,
    monomials: &[SMonomial<P::Basis>],
    cap: usize,
) -> (usize, Option<String>) {
    let mut tally = Tally::new();
    for a in monomials {
        for b in monomials {
            for c in monomials {
                let total =
                    monomial_degree(alg, a) + monomial_degree(alg, b) + monomial_degree(alg, c);
                if total > cap {
                    continue;
                }
                let lhs = circle_monomials(alg, &a.mul(b), c);
                let mut rhs = LinearCombination::zero();
                for (split, k) in unshuffle(c).iter() {
                    let left = circle_monomials(alg, a, &split[0]);
                    let right = circle_monomials(alg, b, &split[1]);
                    for (ml, cl) in left.iter() {
                        for (mr, cr) in right.iter() {
                            rhs.add_term(ml.mul(mr), &(k * cl) * cr);
                        }
                    }
                }
                if !tally.case(lhs == rhs, || {
                    format!("AB∘C ≠ (A∘C')(B∘C'') at A = {a}, B = {b}, C = {c}")
                }) {
                    return (tally.cases, tally.failure);
                }
            }
        }
    }
    (tally.cases, tally.failure)
}

fn law_counit_multiplicative<P: PreLieAlgebra>(
    alg: &P,
    monomials: &[SMonomial<P::Basis>],
    cap: usize,
) -> (usize, Option<String>) {
    let mut tally = Tally::new();
    for a in monomials {
        for b in monomials {
            if monomial_degree(alg, a) + monomial_degree(alg, b) > cap {
                continue;
            }
            let product = circle_monomials(alg, a, b);
            let lhs = counit_element(&product);
            let rhs = &counit(a) * &counit(b);
            if !tally.case(lhs == rhs, || {
                format!("ε(A∘B) ≠ ε(A)ε(B) at A = {a}, B = {b}")
            }) {
                return (tally.cases, tally.failure);
            }
        }
    }
    (tally.cases, tally.failure)
}

fn law_delta_circle_compat<P: PreLieAlgebra>(
    alg: &P,
    monomials: &[SMonomial<P::Basis>],
    cap: usize,
) -> (usize, Option<String>) {
    let mut tally = Tally::new();
    for a in monomials {
        for b in monomials {
            if monomial_degree(alg, a) + monomial_degree(alg, b) > cap {
                continue;
            }
            let lhs = unshuffle_element(&circle_monomials(alg, a, b));
            let rhs = componentwise_bilinear(&unshuffle(a), &unshuffle(b), |x, y| {
                circle_monomials(alg, x, y)
            });
            if !tally.case(lhs == rhs, || {
                format!("Δ(A∘B) ≠ (A'∘B')⊗(A''∘B'') at A = {a}, B = {b}")
            }) {
                return (tally.cases, tally.failure);
            }
        }
    }
    (tally.cases, tally.failure)
}

fn law_circle_element_expansion<P: PreLieAlgebra>(
    alg: &P,
    basis: &[P::Basis],
    monomials: &[SMonomial<P::Basis>],
    cap: usize,
) -> (usize, Option<String>) {
    let mut tally = Tally::new();
    for a in monomials {
        for b in monomials {
            for x in basis {
                let total = monomial_degree(alg, a)
                    + monomial_degree(alg, b)
                    + alg.degree(x);
                if total > cap {
                    continue;
                }
                let bx = b.with_factor(x.clone());
                let lhs = circle_monomials(alg, a, &bx);
                let a_elem = LinearCombination::single(a.clone());
                let a_b = circle_monomials(alg, a, b);
                let first = circle(alg, &a_b, &LinearCombination::single(SMonomial::single(x.clone())));
                let second = circle(alg, &a_elem, &right_action(alg, b, x));
                let rhs = first.sub(&second);
                if !tally.case(lhs == rhs, || {
                    format!("A∘BX ≠ (A∘B)∘X − A∘(B∘X) at A = {a}, B = {b}, X = {x}")
                }) {
                    return (tally.cases, tally.failure);
                }
            }
        }
    }
    (tally.cases, tally.failure)
}

fn law_circle_nested<P: PreLieAlgebra>(
    alg: &P,
    monomials: &[SMonomial<P::Basis>],
    cap: usize,
) -> (usize, Option<String>) {
    let mut tally = Tally::new();
    for a in monomials {
        for b in monomials {
            for c in monomials {
                let total =
                    monomial_degree(alg, a) + monomial_degree(alg, b) + monomial_degree(alg, c);
                if total > cap {
                    continue;
                }
                let lhs = circle(
                    alg,
                    &circle_monomials(alg, a, b),
                    &LinearCombination::single(c.clone()),
                );
                let mut inner = LinearCombination::zero();
                for (split, k) in unshuffle(c).iter() {
                    for (m, cm) in circle_monomials(alg, b, &split[0]).iter() {
                        inner.add_term(m.mul(&split[1]), k * cm);
                    }
                }
                let rhs = circle(alg, &LinearCombination::single(a.clone()), &inner);
                if !tally.case(lhs == rhs, || {
                    format!("(A∘B)∘C ≠ A∘((B∘C')C'') at A = {a}, B = {b}, C = {c}")
                }) {
                    return (tally.cases, tally.failure);
                }
            }
        }
    }
    (tally.cases, tally.failure)
}

fn law_permutation_independence<P: PreLieAlgebra>(
    alg: &P,
    basis: &[P::Basis],
    monomials: &[SMonomial<P::Basis>],
    cap: usize,
    max_len: usize,
) -> (usize, Option<String>) {
    let mut tally = Tally::new();
    for t in basis {
        for a in monomials {
            if a.len() > max_len || alg.degree(t) + monomial_degree(alg, a) > cap {
                continue;
            }
            let reference = circle_single(alg, t, a);
            for perm in permutations(a.factors()) {
                let got = circle_single_seq(alg, t, &perm);
                if !tally.case(got == reference, || {
                    format!("factor order changed T∘A at T = {t}, A = {a}")
                }) {
                    return (tally.cases, tally.failure);
                }
            }
        }
    }
    (tally.cases, tally.failure)
}

fn permutations<T: Clone>(items: &[T]) -> Vec<Vec<T>> {
    if items.is_empty() {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let head = rest.remove(i);
        for mut tail in permutations(&rest) {
            tail.insert(0, head.clone());
            out.push(tail);
        }
    }
    out
}

fn law_recursion_vs_multigrafting(cap: usize) -> Check {
    let colors = one_color();
    let alg = FreePreLie::new(colors.clone());
    let forests = forests_up_to(cap, &colors);
    let mut tally = Tally::new();
    'outer: for a in &forests {
        for b in &forests {
            if a.degree() + b.degree() > cap {
                continue;
            }
            let via_axioms = circle_monomials(&alg, a, b);
            let via_grafting = corolla_graft(a, b.factors());
            if !tally.case(via_axioms == via_grafting, || {
                format!("inductive ∘ differs from multi-grafting at ({a}) ∘ ({b})")
            }) {
                break 'outer;
            }
        }
    }
    tally.done(format!("inductive circle equals multi-grafting sum, degree <= {cap}"))
}

fn circle_axiom_checks<P: PreLieAlgebra>(
    alg: &P,
    label: &str,
    cap: usize,
    perm_len: usize,
) -> Vec<Check> {
    let basis = alg.basis_up_to(cap.saturating_sub(1).max(1));
    let monomials = monomials_up_to(alg, cap);
    let mut out = Vec::new();
    let (cases, failure) = law_circle_units(alg, &monomials);
    out.push(Check { name: format!("[{label}] A∘1 = A and 1∘A = ε(A), degree <= {cap}"), cases, failure });
    let (cases, failure) = law_circle_def_recursion(alg, &basis, &monomials, cap);
    out.push(Check {
        name: format!("[{label}] T∘BX = (T∘B)∘X − T∘(B∘X), degree <= {cap}"),
        cases,
        failure,
    });
    let (cases, failure) = law_circle_split_multiplicativity(alg, &monomials, cap);
    out.push(Check {
        name: format!("[{label}] AB∘C = (A∘C')(B∘C''), degree <= {cap}"),
        cases,
        failure,
    });
    let (cases, failure) = law_counit_multiplicative(alg, &monomials, cap);
    out.push(Check { name: format!("[{label}] ε(A∘B) = ε(A)ε(B), degree <= {cap}"), cases, failure });
    let (cases, failure) = law_delta_circle_compat(alg, &monomials, cap);
    out.push(Check {
        name: format!("[{label}] Δ(A∘B) = (A'∘B')⊗(A''∘B''), degree <= {cap}"),
        cases,
        failure,
    });
    let (cases, failure) = law_circle_element_expansion(alg, &basis, &monomials, cap);
    out.push(Check {
        name: format!("[{label}] A∘BX = (A∘B)∘X − A∘(B∘X), degree <= {cap}"),
        cases,
        failure,
    });
    let (cases, failure) = law_circle_nested(alg, &monomials, cap);
    out.push(Check {
        name: format!("[{label}] (A∘B)∘C = A∘((B∘C')C''), degree <= {cap}"),
        cases,
        failure,
    });
    let (cases, failure) = law_permutation_independence(alg, &basis, &monomials, cap, perm_len);
    out.push(Check {
        name: format!("[{label}] T∘A invariant under factor permutations, length <= {perm_len}"),
        cases,
        failure,
    });
    out
}

pub fn suite_circle_axioms(cap: usize) -> Suite {
    let free = FreePreLie::single_color();
    let line = StructureConstantPreLie::idempotent_line();
    let mut checks = circle_axiom_checks(&free, "trees", cap, 4);
    checks.extend(circle_axiom_checks(&line, "idempotent line", cap, 4));
    checks.push(law_recursion_vs_multigrafting(cap.saturating_sub(1).max(2)));
    Suite { name: "circle-axioms".into(), checks }
}

// ---------------------------------------------------------------------
// star-Hopf suite

fn star_associativity(cap: usize) -> Check {
    let colors = one_color();
    let alg = FreePreLie::new(colors.clone());
    let forests = forests_up_to(cap, &colors);
    let mut tally = Tally::new();
    'outer: for a in &forests {
        for b in &forests {
            if a.degree() + b.degree() > cap {
                continue;
            }
            for c in &forests {
                if a.degree() + b.degree() + c.degree() > cap {
                    continue;
                }
                let ea = LinearCombination::single(a.clone());
                let eb = LinearCombination::single(b.clone());
                let ec = LinearCombination::single(c.clone());
                let lhs = star(&alg, &star(&alg, &ea, &eb), &ec);
                let rhs = star(&alg, &ea, &star(&alg, &eb, &ec));
                if !tally.case(lhs == rhs, || {
                    format!("star not associative at ({a}) * ({b}) * ({c})")
                }) {
                    break 'outer;
                }
            }
        }
    }
    tally.done(format!("star associativity on monomial triples, degree <= {cap}"))
}

fn star_unit(cap: usize) -> Check {
    let colors = one_color();
    let alg = FreePreLie::new(colors.clone());
    let one = LinearCombination::single(Forest::one());
    let mut tally = Tally::new();
    for a in forests_up_to(cap, &colors) {
        let ea = LinearCombination::single(a.clone());
        let ok = star(&alg, &one, &ea) == ea && star(&alg, &ea, &one) == ea;
        if !tally.case(ok, || format!("unit law fails at {a}")) {
            break;
        }
    }
    tally.done(format!("star unit laws, degree <= {cap}"))
}

fn star_coproduct_compat(cap: usize) -> Check {
    let colors = one_color();
    let alg = FreePreLie::new(colors.clone());
    let forests = forests_up_to(cap, &colors);
    let mut tally = Tally::new();
    'outer: for a in &forests {
        for b in &forests {
            if a.degree() + b.degree() > cap {
                continue;
            }
            let product = star_monomials(&alg, a, b);
            let lhs = unshuffle_element(&product);
            let rhs = componentwise_bilinear(&unshuffle(a), &unshuffle(b), |x, y| {
                star_monomials(&alg, x, y)
            });
            if !tally.case(lhs == rhs, || {
                format!("Δ(A*B) ≠ Δ(A)*Δ(B) at A = {a}, B = {b}")
            }) {
                break 'outer;
            }
        }
    }
    tally.done(format!("Δ(A*B) = Δ(A)*Δ(B), degree <= {cap}"))
}

fn unshuffle_coassociativity(cap: usize) -> Check {
    let colors = one_color();
    let mut tally = Tally::new();
    for a in forests_up_to(cap, &colors) {
        let d = unshuffle(&a);
        let left = d.expand_component(0, unshuffle);
        let right = d.expand_component(1, unshuffle);
        if !tally.case(left == right, || format!("unshuffle not coassociative at {a}")) {
            break;
        }
    }
    tally.done(format!("unshuffle coassociativity, degree <= {cap}"))
}

fn unshuffle_counit(cap: usize) -> Check {
    let colors = one_color();
    let mut tally = Tally::new();
    for a in forests_up_to(cap, &colors) {
        let d = unshuffle(&a);
        let mut left = LinearCombination::zero();
        let mut right = LinearCombination::zero();
        for (key, c) in d.iter() {
            left.add_term(key[1].clone(), c * &counit(&key[0]));
            right.add_term(key[0].clone(), c * &counit(&key[1]));
        }
        let expect = LinearCombination::single(a.clone());
        if !tally.case(left == expect && right == expect, || {
            format!("counit law fails at {a}")
        }) {
            break;
        }
    }
    tally.done(format!("unshuffle counit laws, degree <= {cap}"))
}

fn antipode_axioms(cap: usize) -> Check {
    let colors = one_color();
    let alg = FreePreLie::new(colors.clone());
    let mut tally = Tally::new();
    for a in forests_up_to(cap, &colors) {
        let mut left = LinearCombination::zero();
        let mut right = LinearCombination::zero();
        for (split, k) in unshuffle(&a).iter() {
            let s0 = antipode(&alg, &LinearCombination::single(split[0].clone()));
            for (m, c) in star(&alg, &s0, &LinearCombination::single(split[1].clone())).iter() {
                left.add_term(m.clone(), k * c);
            }
            let s1 = antipode(&alg, &LinearCombination::single(split[1].clone()));
            for (m, c) in star(&alg, &LinearCombination::single(split[0].clone()), &s1).iter() {
                right.add_term(m.clone(), k * c);
            }
        }
        let expect = LinearCombination::term(SMonomial::one(), counit(&a));
        if !tally.case(left == expect && right == expect, || {
            format!("antipode axiom fails at {a}")
        }) {
            break;
        }
    }
    tally.done(format!("two-sided antipode axiom, degree <= {cap}"))
}

fn star_filtration(cap: usize) -> Check {
    let colors = one_color();
    let alg = FreePreLie::new(colors.clone());
    let forests = forests_up_to(cap, &colors);
    let mut tally = Tally::new();
    'outer: for a in &forests {
        for b in &forests {
            if a.degree() + b.degree() > cap {
                continue;
            }
            let product = star_monomials(&alg, a, b);
            let top = a.len() + b.len();
            let mut top_part = LinearCombination::zero();
            let mut bounded = true;
            for (m, c) in product.iter() {
                if m.len() > top {
                    bounded = false;
                    break;
                }
                if m.len() == top {
                    top_part.add_term(m.clone(), c.clone());
                }
            }
            let ok = bounded && top_part == LinearCombination::single(a.mul(b));
            if !tally.case(ok, || {
                format!("length filtration / top term fails at ({a}) * ({b})")
            }) {
                break 'outer;
            }
        }
    }
    tally.done(format!("star respects the length filtration with top term AB, degree <= {cap}"))
}

fn star_commutator_is_bracket(cap: usize) -> Check {
    let colors = one_color();
    let alg = FreePreLie::new(colors.clone());
    let trees = trees_up_to(cap.saturating_sub(1).max(1), &colors);
    let mut tally = Tally::new();
    'outer: for t1 in &trees {
        for t2 in &trees {
            if t1.vertex_count() + t2.vertex_count() > cap {
                continue;
            }
            let x: SElement<RootedTree> = LinearCombination::single(Forest::single(t1.clone()));
            let y: SElement<RootedTree> = LinearCombination::single(Forest::single(t2.clone()));
            let lhs = star(&alg, &x, &y).sub(&star(&alg, &y, &x));
            let bracket = free_circle(t1, t2).sub(&free_circle(t2, t1));
            let rhs = selement_from_basis(&bracket);
            if !tally.case(lhs == rhs, || {
                format!("X*Y − Y*X ≠ X∘Y − Y∘X at ({t1}, {t2})")
            }) {
                break 'outer;
            }
        }
    }
    tally.done(format!("star commutator equals the pre-Lie bracket, degree <= {cap}"))
}

pub fn suite_star_hopf(cap: usize) -> Suite {
    Suite {
        name: "star-hopf".into(),
        checks: vec![
            star_unit(cap),
            star_associativity(cap),
            star_coproduct_compat(cap),
            unshuffle_coassociativity(cap),
            unshuffle_counit(cap),
            antipode_axioms(cap),
            star_filtration(cap),
            star_commutator_is_bracket(cap),
        ],
    }
}

// ---------------------------------------------------------------------
// Connes-Kreimer duality suite

fn ck_recursion_vs_cuts(cap: usize) -> Check {
    let colors = one_color();
    let mut tally = Tally::new();
    for f in forests_up_to(cap, &colors) {
        if !tally.case(ck_coproduct(&f) == ck_coproduct_cuts(&f), || {
            format!("recursion and admissible cuts disagree at {f}")
        }) {
            break;
        }
    }
    tally.done(format!("coproduct recursion equals admissible-cut oracle, degree <= {cap}"))
}

fn ck_coassociativity(cap: usize) -> Check {
    let colors = one_color();
    let mut tally = Tally::new();
    for f in forests_up_to(cap, &colors) {
        let d = ck_coproduct(&f);
        let left = d.expand_component(0, ck_coproduct);
        let right = d.expand_component(1, ck_coproduct);
        if !tally.case(left == right, || format!("coproduct not coassociative at {f}")) {
            break;
        }
    }
    tally.done(format!("Connes-Kreimer coassociativity, degree <= {cap}"))
}

fn ck_multiplicativity(cap: usize) -> Check {
    let colors = one_color();
    let forests = forests_up_to(cap, &colors);
    let mut tally = Tally::new();
    'outer: for f in &forests {
        for g in &forests {
            if f.degree() + g.degree() > cap {
                continue;
            }
            let lhs = ck_coproduct(&f.mul(g));
            let rhs = tensor_mul(&ck_coproduct(f), &ck_coproduct(g));
            if !tally.case(lhs == rhs, || {
                format!("Δ(FG) ≠ Δ(F)Δ(G) at F = {f}, G = {g}")
            }) {
                break 'outer;
            }
        }
    }
    tally.done(format!("Connes-Kreimer multiplicativity, degree <= {cap}"))
}

fn ck_counit(cap: usize) -> Check {
    let colors = one_color();
    let mut tally = Tally::new();
    for f in forests_up_to(cap, &colors) {
        let d = ck_coproduct(&f);
        let mut left = LinearCombination::zero();
        let mut right = LinearCombination::zero();
        for (key, c) in d.iter() {
            left.add_term(key[1].clone(), c * &counit(&key[0]));
            right.add_term(key[0].clone(), c * &counit(&key[1]));
        }
        let expect = LinearCombination::single(f.clone());
        if !tally.case(left == expect && right == expect, || {
            format!("counit law fails at {f}")
        }) {
            break;
        }
    }
    tally.done(format!("Connes-Kreimer counit laws, degree <= {cap}"))
}

fn root_removal_star_identity(colors: &[Color], cap: usize) -> Check {
    let alg = FreePreLie::new(colors.to_vec());
    let forests = forests_up_to(cap, colors);
    let mut tally = Tally::new();
    'outer: for a in &forests {
        for b in &forests {
            if a.degree() + b.degree() > cap {
                continue;
            }
            let ea = LinearCombination::single(a.clone());
            let eb = LinearCombination::single(b.clone());
            let product = star(&alg, &ea, &eb);
            for x in colors {
                let lhs = b_minus(&product, x);
                let rhs = b_minus(&eb, x)
                    .scale(&counit(a))
                    .add(&star(&alg, &b_minus(&ea, x), &eb));
                if !tally.case(lhs == rhs, || {
                    format!("B₋(A*B) ≠ ε(A)B₋(B) + B₋(A)*B at A = {a}, B = {b}, color {x}")
                }) {
                    break 'outer;
                }
            }
        }
    }
    tally.done(format!(
        "root removal is a star derivation-like transpose, {} color(s), degree <= {cap}",
        colors.len()
    ))
}

fn pairing_resolution(cap: usize) -> Check {
    let probes = duality_check(cap, &one_color());
    let mut tally = Tally::new();
    let plain = probes.iter().find(|p| p.variant == PairingWeight::Plain).unwrap();
    let sym = probes.iter().find(|p| p.variant == PairingWeight::SymmetryFactor).unwrap();
    tally.cases += plain.cases + sym.cases;
    let ok = sym.passed() && !plain.passed();
    if !ok {
        tally.failure = Some(format!(
            "expected exactly the symmetry-factor pairing to pass; plain: {:?}, symmetry: {:?}",
            plain.counterexample, sym.counterexample
        ));
    }
    tally.done(format!(
        "⟨Δ(C), A⊗B⟩ = ⟨C, B*A⟩ holds for the symmetry-factor pairing only, degree <= {cap}"
    ))
}

fn b_plus_b_minus_inverse(cap: usize) -> Check {
    let colors = one_color();
    let mut tally = Tally::new();
    for f in forests_up_to(cap, &colors) {
        let tree = b_plus(&colors[0], &f);
        let back = b_minus(
            &LinearCombination::single(Forest::single(tree)),
            &colors[0],
        );
        if !tally.case(back == LinearCombination::single(f.clone()), || {
            format!("B₋B₊ ≠ id at {f}")
        }) {
            break;
        }
    }
    tally.done(format!("root removal inverts root attachment, degree <= {cap}"))
}

pub fn suite_ck_duality(cap: usize) -> Suite {
    let sub = cap.saturating_sub(1).max(2);
    Suite {
        name: "ck-duality".into(),
        checks: vec![
            b_plus_b_minus_inverse(sub),
            ck_recursion_vs_cuts(sub.min(5)),
            ck_coassociativity(sub.min(5)),
            ck_multiplicativity(sub.min(5)),
            ck_counit(sub.min(5)),
            root_removal_star_identity(&one_color(), cap),
            root_removal_star_identity(&two_colors(), cap.saturating_sub(2).max(2)),
            pairing_resolution(sub.min(5)),
        ],
    }
}

// ---------------------------------------------------------------------
// symmetric brace suite

fn symmetric_brace_unit(cap: usize) -> Check {
    let colors = one_color();
    let alg = FreePreLie::new(colors.clone());
    let mut tally = Tally::new();
    for t in trees_up_to(cap, &colors) {
        let got = circle_single(&alg, &t, &SMonomial::one());
        if !tally.case(got == LinearCombination::single(t.clone()), || {
            format!("X{{1}} ≠ X at {t}")
        }) {
            break;
        }
    }
    tally.done(format!("X{{1}} = X, degree <= {cap}"))
}

fn symmetric_brace_identity(arg_cap: usize) -> Check {
    let colors = one_color();
    let alg = FreePreLie::new(colors.clone());
    let xs = trees_up_to(2, &colors);
    let ys = trees_up_to(2, &colors);
    let args = forests_up_to(arg_cap, &colors);
    let mut tally = Tally::new();

    let mut inner_words: Vec<Vec<RootedTree>> = vec![Vec::new()];
    for y1 in &ys {
        inner_words.push(vec![y1.clone()]);
        for y2 in &ys {
            inner_words.push(vec![y1.clone(), y2.clone()]);
        }
    }

    'outer: for x in &xs {
        for word in &inner_words {
            for a in &args {
                let n = word.len();
                // X{Y1..Yn}{A}
                let inner = circle_single(&alg, x, &SMonomial::new(word.clone()));
                let mut lhs = LinearCombination::zero();
                for (b, c) in inner.iter() {
                    for (v, k) in circle_single(&alg, b, a).iter() {
                        lhs.add_term(v.clone(), c * k);
                    }
                }
                // X{Y1{A_(1)}, .., Yn{A_(n)}, A_(n+1)}
                let components = iterate_coproduct(
                    unshuffle,
                    &LinearCombination::single(a.clone()),
                    n + 1,
                );
                let mut rhs = LinearCombination::zero();
                for (key, coef) in components.iter() {
                    let mut segs: Vec<LinearCombination<RootedTree>> = Vec::new();
                    for (i, y) in word.iter().enumerate() {
                        segs.push(circle_single(&alg, y, &key[i]));
                    }
                    for factor in key[n].factors() {
                        segs.push(LinearCombination::single(factor.clone()));
                    }
                    let x_elem = LinearCombination::single(x.clone());
                    let term = symmetric_brace_multi(&alg, &x_elem, &segs);
                    for (b, c) in term.iter() {
                        rhs.add_term(b.clone(), coef * c);
                    }
                }
                if !tally.case(lhs == rhs, || {
                    format!(
                        "symmetric brace identity fails at X = {x}, word = {:?}, A = {a}",
                        word
                    )
                }) {
                    break 'outer;
                }
            }
        }
    }
    tally.done(format!(
        "X{{Y⃗}}{{A}} = X{{Y1{{A'}},..,Yn{{A⁽ⁿ⁾}},A⁽ⁿ⁺¹⁾}}, inner length <= 2, deg(A) <= {arg_cap}"
    ))
}

pub fn suite_symbrace(cap: usize) -> Suite {
    Suite {
        name: "symbrace".into(),
        checks: vec![symmetric_brace_unit(4), symmetric_brace_identity(cap)],
    }
}

// ---------------------------------------------------------------------
// planar brace suite

fn sector_count_law(cap: usize) -> Check {
    let colors = one_color();
    let mut tally = Tally::new();
    'outer: for n in 1..=cap {
        for t in enumerate_planar(n, &colors) {
            if !tally.case(sector_list(&t).len() == 2 * n - 1, || {
                format!("sector count ≠ 2v−1 at {t}")
            }) {
                break 'outer;
            }
        }
    }
    tally.done(format!("sector count is 2v−1 for v <= {cap}"))
}

fn reference_tree_sectors() -> Check {
    let t = crate::planar::parse_planar_tree("a[a[a[a] a] a[a]]").expect("literal");
    let mut tally = Tally::new();
    tally.case(sector_list(&t).len() == 13, || {
        "the seven-vertex reference tree should expose thirteen sectors".into()
    });
    tally.done("seven-vertex reference tree has thirteen sectors")
}

fn sector_order_axioms(cap: usize) -> Check {
    let colors = one_color();
    let mut tally = Tally::new();
    'outer: for n in 1..=cap {
        for t in enumerate_planar(n, &colors) {
            let sectors = sector_list(&t);
            for (i, &s1) in sectors.iter().enumerate() {
                for (j, &s2) in sectors.iter().enumerate() {
                    let c12 = sector_compare(&t, s1, s2).expect("valid");
                    let c21 = sector_compare(&t, s2, s1).expect("valid");
                    let consistent = c12 == i.cmp(&j) && c21 == c12.reverse();
                    if !tally.case(consistent, || {
                        format!("order inconsistent at {t}, sectors {i} and {j}")
                    }) {
                        break 'outer;
                    }
                    for &s3 in &sectors {
                        let c23 = sector_compare(&t, s2, s3).expect("valid");
                        let c13 = sector_compare(&t, s1, s3).expect("valid");
                        let transitive = !(c12 != Ordering::Greater
                            && c23 != Ordering::Greater)
                            || c13 != Ordering::Greater;
                        if !tally.case(transitive, || {
                            format!("transitivity fails on {t}")
                        }) {
                            break 'outer;
                        }
                    }
                }
            }
        }
    }
    tally.done(format!("sector order is total and matches list positions, v <= {cap}"))
}

fn words_over<B: Clone>(letters: &[B], max_len: usize) -> Vec<Vec<B>> {
    let mut out: Vec<Vec<B>> = vec![Vec::new()];
    let mut layer: Vec<Vec<B>> = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &layer {
            for l in letters {
                let mut v = w.clone();
                v.push(l.clone());
                next.push(v);
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

fn brace_term_count(tree_cap: usize, word_cap: usize) -> Check {
    let colors = one_color();
    let letters = planar_up_to(2, &colors);
    let words = words_over(&letters, word_cap);
    let mut tally = Tally::new();
    'outer: for t in planar_up_to(tree_cap, &colors) {
        let m = 2 * t.vertex_count() - 1;
        for letters_of_word in &words {
            let n = letters_of_word.len();
            if n == 0 {
                continue;
            }
            let got = planar_brace(&t, &Word::new(letters_of_word.clone()));
            let total: Scalar = got.iter().fold(Scalar::zero(), |acc, (_, c)| acc + c.clone());
            let expect = Scalar::binomial(m + n - 1, n);
            if !tally.case(total == expect, || {
                format!("brace term count off at {t} with {n} arguments")
            }) {
                break 'outer;
            }
        }
    }
    tally.done(format!(
        "brace term multiplicity is C(2v−1+n−1, n), v <= {tree_cap}, n <= {word_cap}"
    ))
}

fn corolla_brace() -> Check {
    let colors = one_color();
    let mut tally = Tally::new();
    for word in planar_words_up_to(4, &colors) {
        let leaf = PlanarTree::leaf(colors[0].clone());
        let got = planar_brace(&leaf, &word);
        let corolla = PlanarTree::new(colors[0].clone(), word.letters().to_vec());
        if !tally.case(got == LinearCombination::single(corolla), || {
            format!("corolla brace has extra terms at word {word}")
        }) {
            break;
        }
    }
    tally.done("brace of a single vertex is the ordered corolla")
}

fn planar_brace_identity(x_cap: usize, arg_cap: usize) -> Check {
    let colors = one_color();
    let xs = planar_up_to(x_cap, &colors);
    let letters = planar_up_to(2, &colors);
    let args = planar_words_up_to(arg_cap, &colors);
    let mut tally = Tally::new();

    let mut inner_words: Vec<Vec<PlanarTree>> = vec![Vec::new()];
    for y1 in &letters {
        inner_words.push(vec![y1.clone()]);
        for y2 in &letters {
            inner_words.push(vec![y1.clone(), y2.clone()]);
        }
    }

    'outer: for x in &xs {
        for word in &inner_words {
            let n = word.len();
            for a in &args {
                // X{Y1..Yn}{A}
                let inner = planar_brace(x, &Word::new(word.clone()));
                let mut lhs = LinearCombination::zero();
                for (b, c) in inner.iter() {
                    for (v, k) in planar_brace(b, a).iter() {
                        lhs.add_term(v.clone(), c * k);
                    }
                }
                // X{A' Y1{A''} A''' ⋯ Yn{A^(2n)} A^(2n+1)}
                let components = iterate_coproduct(
                    |w: &Word<PlanarTree>| deconcat(w),
                    &LinearCombination::single(a.clone()),
                    2 * n + 1,
                );
                let mut rhs = LinearCombination::zero();
                for (key, coef) in components.iter() {
                    let mut segments: Vec<LinearCombination<Word<PlanarTree>>> = Vec::new();
                    segments.push(LinearCombination::single(key[0].clone()));
                    for (i, y) in word.iter().enumerate() {
                        let braced = planar_brace(y, &key[2 * i + 1]);
                        segments.push(braced.map(|t| {
                            LinearCombination::single(Word::single(t.clone()))
                        }));
                        segments.push(LinearCombination::single(key[2 * i + 2].clone()));
                    }
                    let term = planar_brace_segments(x, &segments);
                    for (b, c) in term.iter() {
                        rhs.add_term(b.clone(), coef * c);
                    }
                }
                if !tally.case(lhs == rhs, || {
                    format!("planar brace identity fails at X = {x}, word {word:?}, A = {a}")
                }) {
                    break 'outer;
                }
            }
        }
    }
    tally.done(format!(
        "X{{Y⃗}}{{A}} matches the deconcatenation expansion, |X| <= {x_cap}, deg(A) <= {arg_cap}"
    ))
}

/// DFS index at which trees grafted along `s` land in the current tree.
fn insertion_point(t: &PlanarTree, s: crate::planar::Sector) -> usize {
    fn go(t: &PlanarTree, base: usize, s: crate::planar::Sector) -> Option<usize> {
        if s.vertex == base {
            let mut d = base + 1;
            for (i, c) in t.children().iter().enumerate() {
                if i == s.slot {
                    return Some(d);
                }
                d += c.vertex_count();
            }
            Some(d)
        } else {
            let mut offset = base + 1;
            for c in t.children() {
                if s.vertex < offset + c.vertex_count() {
                    return go(c, offset, s);
                }
                offset += c.vertex_count();
            }
            None
        }
    }
    go(t, 0, s).expect("sector vertex present")
}

/// Grafts fibers one sector at a time in increasing sector order, with
/// every pending sector relocated as earlier insertions displace vertex
/// indices and slots. An independent route for the same composition.
fn graft_fibers_increasing(
    t: &PlanarTree,
    fibers: &[(crate::planar::Sector, Vec<PlanarTree>)],
) -> PlanarTree {
    let sectors = sector_list(t);
    let mut order: Vec<usize> = (0..fibers.len()).collect();
    order.sort_by_key(|&i| {
        sectors.iter().position(|x| *x == fibers[i].0).expect("sector of the base tree")
    });
    let mut current = t.clone();
    let mut tracked: Vec<crate::planar::Sector> = fibers.iter().map(|(s, _)| *s).collect();
    for &i in &order {
        let s = tracked[i];
        let trees = &fibers[i].1;
        let inserted: usize = trees.iter().map(|x| x.vertex_count()).sum();
        let arity_gain = trees.len();
        let d = insertion_point(&current, s);
        current = crate::planar::graft_sector(&current, s, &Word::new(trees.clone()))
            .expect("tracked sector stays valid");
        for (j, pending) in tracked.iter_mut().enumerate() {
            if j == i {
                continue;
            }
            if pending.vertex == s.vertex && pending.slot > s.slot {
                pending.slot += arity_gain;
            }
            if pending.vertex >= d {
                pending.vertex += inserted;
            }
        }
    }
    current
}

fn iterated_vs_simultaneous_grafting(cap: usize) -> Check {
    let colors = one_color();
    let leaf = PlanarTree::leaf(colors[0].clone());
    let chain = crate::planar::parse_planar_tree("a[a]").expect("literal");
    let mut tally = Tally::new();
    'outer: for t in planar_up_to(cap, &colors) {
        let sectors = sector_list(&t);
        for i in 0..sectors.len() {
            for j in 0..sectors.len() {
                if i == j {
                    continue;
                }
                let fibers = vec![
                    (sectors[i], vec![leaf.clone(), chain.clone()]),
                    (sectors[j], vec![chain.clone()]),
                ];
                let decreasing = crate::planar::graft_fibers_iterated(&t, &fibers);
                let increasing = graft_fibers_increasing(&t, &fibers);
                if !tally.case(decreasing == increasing, || {
                    format!("fiber iteration order changes the graft on {t}")
                }) {
                    break 'outer;
                }
            }
        }
    }
    tally.done(format!("iterated fiber grafting is order-consistent, v <= {cap}"))
}

fn planar_brace_route_consistency(tree_cap: usize, word_cap: usize) -> Check {
    let colors = one_color();
    let letters = planar_up_to(2, &colors);
    let words = words_over(&letters, word_cap);
    let mut tally = Tally::new();
    'outer: for t in planar_up_to(tree_cap, &colors) {
        let sectors = sector_list(&t);
        for letters_of_word in &words {
            let n = letters_of_word.len();
            if n == 0 {
                continue;
            }
            // rebuild the brace by explicit non-decreasing assignments
            // evaluated through the increasing-order grafting route
            let mut oracle = LinearCombination::zero();
            let mut assign = vec![0usize; n];
            loop {
                let mut fibers: Vec<(crate::planar::Sector, Vec<PlanarTree>)> = Vec::new();
                for (pos, &sec) in assign.iter().enumerate() {
                    let letter = letters_of_word[pos].clone();
                    match fibers.last_mut() {
                        Some((s, trees)) if *s == sectors[sec] => trees.push(letter),
                        _ => fibers.push((sectors[sec], vec![letter])),
                    }
                }
                oracle.add_term(graft_fibers_increasing(&t, &fibers), Scalar::one());
                let mut done = true;
                for i in (0..n).rev() {
                    if assign[i] + 1 < sectors.len() {
                        let v = assign[i] + 1;
                        for slot in assign.iter_mut().skip(i) {
                            *slot = v;
                        }
                        done = false;
                        break;
                    }
                }
                if done {
                    break;
                }
            }
            let got = planar_brace(&t, &Word::new(letters_of_word.clone()));
            if !tally.case(got == oracle, || {
                format!("brace differs from the assignment-by-assignment route at {t}")
            }) {
                break 'outer;
            }
        }
    }
    tally.done(format!(
        "brace equals per-assignment iterated grafting, v <= {tree_cap}, n <= {word_cap}"
    ))
}

pub fn suite_planar_brace(cap: usize) -> Suite {
    Suite {
        name: "planar-brace".into(),
        checks: vec![
            sector_count_law(cap),
            reference_tree_sectors(),
            sector_order_axioms(cap.saturating_sub(2).max(3)),
            brace_term_count(4, 3),
            corolla_brace(),
            planar_brace_identity(3, 2),
            iterated_vs_simultaneous_grafting(4),
            planar_brace_route_consistency(3, 2),
        ],
    }
}

// ---------------------------------------------------------------------
// tensor Hopf suite

fn deconcat_coassociativity(cap: usize) -> Check {
    let colors = one_color();
    let mut tally = Tally::new();
    for w in planar_words_up_to(cap, &colors) {
        let d = deconcat(&w);
        let left = d.expand_component(0, deconcat);
        let right = d.expand_component(1, deconcat);
        if !tally.case(left == right, || format!("deconcatenation not coassociative at {w}")) {
            break;
        }
    }
    tally.done(format!("deconcatenation coassociativity, degree <= {cap}"))
}

fn tensor_star_unit_assoc(cap: usize) -> Check {
    let colors = one_color();
    let alg = PlanarBraces::new(colors.clone());
    let words = planar_words_up_to(cap, &colors);
    let one: Word<PlanarTree> = Word::one();
    let mut tally = Tally::new();
    'outer: for a in &words {
        let ea = LinearCombination::single(a.clone());
        let ok = star_words(&alg, &one, a) == ea && star_words(&alg, a, &one) == ea;
        if !tally.case(ok, || format!("unit law fails at {a}")) {
            break 'outer;
        }
        for b in &words {
            let dab = degree_of(a) + degree_of(b);
            if dab > cap {
                continue;
            }
            for c in &words {
                if dab + degree_of(c) > cap {
                    continue;
                }
                let eb = LinearCombination::single(b.clone());
                let ec = LinearCombination::single(c.clone());
                let lhs = star_tensor(&alg, &star_tensor(&alg, &ea, &eb), &ec);
                let rhs = star_tensor(&alg, &ea, &star_tensor(&alg, &eb, &ec));
                if !tally.case(lhs == rhs, || {
                    format!("star not associative at ({a}) * ({b}) * ({c})")
                }) {
                    break 'outer;
                }
            }
        }
    }
    tally.done(format!("tensor star unit and associativity, degree <= {cap}"))
}

fn degree_of(w: &Word<PlanarTree>) -> usize {
    crate::planar::planar_forest_degree(w)
}

fn tensor_star_coproduct_compat(cap: usize) -> Check {
    let colors = one_color();
    let alg = PlanarBraces::new(colors.clone());
    let words = planar_words_up_to(cap, &colors);
    let mut tally = Tally::new();
    'outer: for a in &words {
        for b in &words {
            if degree_of(a) + degree_of(b) > cap {
                continue;
            }
            let product = star_words(&alg, a, b);
            let mut lhs = TensorCombination::zero(2);
            for (w, c) in product.iter() {
                for (key, k) in deconcat(w).iter() {
                    lhs.add_term(key.clone(), c * k);
                }
            }
            let rhs = componentwise_bilinear(&deconcat(a), &deconcat(b), |x, y| {
                star_words(&alg, x, y)
            });
            if !tally.case(lhs == rhs, || {
                format!("Δ(A*B) ≠ Δ(A)*Δ(B) at A = {a}, B = {b}")
            }) {
                break 'outer;
            }
        }
    }
    tally.done(format!("Δ(A*B) = Δ(A)*Δ(B) on words, degree <= {cap}"))
}

fn closed_form_vs_recursion(cap: usize) -> Check {
    let colors = one_color();
    let alg = PlanarBraces::new(colors.clone());
    let words = planar_words_up_to(cap, &colors);
    let mut tally = Tally::new();
    'outer: for a in &words {
        for b in &words {
            if degree_of(a) + degree_of(b) > cap {
                continue;
            }
            if !tally.case(star_words(&alg, a, b) == star_words_closed(&alg, a, b), || {
                format!("closed form differs from recursion at ({a}) * ({b})")
            }) {
                break 'outer;
            }
        }
    }
    tally.done(format!("star recursion equals its closed form, degree <= {cap}"))
}

fn concatenation_compatibility(cap: usize) -> Check {
    let colors = one_color();
    let alg = PlanarBraces::new(colors.clone());
    let words = planar_words_up_to(3, &colors);
    let letters = planar_up_to(3, &colors);
    let cs = planar_words_up_to(3, &colors);
    let mut tally = Tally::new();
    'outer: for a in &words {
        for b in &words {
            for y in &letters {
                for c in &cs {
                    let total =
                        degree_of(a) + degree_of(b) + y.vertex_count() + degree_of(c);
                    if total > cap {
                        continue;
                    }
                    let mut letters_ayb = a.letters().to_vec();
                    letters_ayb.push(y.clone());
                    letters_ayb.extend_from_slice(b.letters());
                    let lhs = star_words(&alg, &Word::new(letters_ayb), c);

                    let mut rhs = LinearCombination::zero();
                    for (key, k) in
                        iterate_coproduct(|w: &Word<PlanarTree>| deconcat(w),
                            &LinearCombination::single(c.clone()), 3)
                        .iter()
                    {
                        let left = star_words(&alg, a, &key[0]);
                        let mid = alg.brace(y, key[1].letters());
                        let right = star_words(&alg, b, &key[2]);
                        for (wl, cl) in left.iter() {
                            for (t, ct) in mid.iter() {
                                for (wr, cr) in right.iter() {
                                    let w =
                                        wl.concat(&Word::single(t.clone())).concat(wr);
                                    rhs.add_term(w, &(&(k * cl) * ct) * cr);
                                }
                            }
                        }
                    }
                    if !tally.case(lhs == rhs, || {
                        format!("AYB*C expansion fails at A = {a}, Y = {y}, B = {b}, C = {c}")
                    }) {
                        break 'outer;
                    }
                }
            }
        }
    }
    tally.done(format!("AYB*C = (A*C')Y{{C''}}(B*C'''), degree <= {cap}"))
}

fn brace_composition_law(cap: usize) -> Check {
    let colors = one_color();
    let alg = PlanarBraces::new(colors.clone());
    let xs = planar_up_to(2, &colors);
    let words = planar_words_up_to(2, &colors);
    let mut tally = Tally::new();
    'outer: for x in &xs {
        for b in &words {
            for c in &words {
                if x.vertex_count() + degree_of(b) + degree_of(c) > cap {
                    continue;
                }
                if !tally.case(brace_composition_check(&alg, x, b, c), || {
                    format!("X{{B}}{{C}} ≠ X{{B*C}} at X = {x}, B = {b}, C = {c}")
                }) {
                    break 'outer;
                }
            }
        }
    }
    tally.done(format!("X{{B}}{{C}} = X{{B*C}}, degree <= {cap}"))
}

fn tensor_antipode_axioms(cap: usize) -> Check {
    let colors = one_color();
    let alg = PlanarBraces::new(colors.clone());
    let mut tally = Tally::new();
    for w in planar_words_up_to(cap, &colors) {
        let mut left = LinearCombination::zero();
        let mut right = LinearCombination::zero();
        for (split, k) in deconcat(&w).iter() {
            let s0 = antipode_tensor(&alg, &LinearCombination::single(split[0].clone()));
            for (m, c) in
                star_tensor(&alg, &s0, &LinearCombination::single(split[1].clone())).iter()
            {
                left.add_term(m.clone(), k * c);
            }
            let s1 = antipode_tensor(&alg, &LinearCombination::single(split[1].clone()));
            for (m, c) in
                star_tensor(&alg, &LinearCombination::single(split[0].clone()), &s1).iter()
            {
                right.add_term(m.clone(), k * c);
            }
        }
        let expect = LinearCombination::term(Word::one(), word_counit(&w));
        if !tally.case(left == expect && right == expect, || {
            format!("antipode axiom fails at {w}")
        }) {
            break;
        }
    }
    tally.done(format!("two-sided tensor antipode axiom, degree <= {cap}"))
}

fn trivial_brace_sanity(cap: usize) -> Check {
    let letters: Vec<Color> = two_colors();
    let alg = TrivialBraces::new(letters.clone());
    let mut words: Vec<Word<Color>> = vec![Word::one()];
    for _ in 0..cap {
        let mut next = Vec::new();
        for w in &words {
            for l in &letters {
                let mut v = w.letters().to_vec();
                v.push(l.clone());
                next.push(Word::new(v));
            }
        }
        words.extend(next);
        words.sort();
        words.dedup();
        words.retain(|w| w.len() <= cap);
    }
    let mut tally = Tally::new();
    'outer: for a in &words {
        for b in &words {
            if a.len() + b.len() > cap {
                continue;
            }
            let got = star_words(&alg, a, b);
            let closed = star_words_closed(&alg, a, b);
            if !tally.case(got == closed, || {
                format!("trivial-brace closed form differs at ({a}) * ({b})")
            }) {
                break 'outer;
            }
            // every term keeps all letters: total coefficient is the
            // number of interleavings C(|a|+|b|, |a|)
            let total: Scalar = got.iter().fold(Scalar::zero(), |acc, (_, c)| acc + c.clone());
            let expect = Scalar::binomial(a.len() + b.len(), a.len());
            if !tally.case(total == expect, || {
                format!("trivial-brace star lost interleavings at ({a}) * ({b})")
            }) {
                break 'outer;
            }
        }
    }
    tally.done(format!("degenerate zero-brace instance reduces to interleavings, length <= {cap}"))
}

pub fn suite_tensor_hopf(cap: usize) -> Suite {
    Suite {
        name: "tensor-hopf".into(),
        checks: vec![
            deconcat_coassociativity(cap.min(5)),
            tensor_star_unit_assoc(cap),
            tensor_star_coproduct_compat(cap),
            closed_form_vs_recursion(cap),
            concatenation_compatibility(cap),
            brace_composition_law(cap),
            tensor_antipode_axioms(cap),
            trivial_brace_sanity(4),
        ],
    }
}

// ---------------------------------------------------------------------
// Foissy duality suite

fn foissy_counit(cap: usize) -> Check {
    let colors = one_color();
    let mut tally = Tally::new();
    for w in planar_words_up_to(cap, &colors) {
        let d = foissy_coproduct(&w);
        let mut left = LinearCombination::zero();
        let mut right = LinearCombination::zero();
        for (key, c) in d.iter() {
            left.add_term(key[1].clone(), c * &word_counit(&key[0]));
            right.add_term(key[0].clone(), c * &word_counit(&key[1]));
        }
        let expect = LinearCombination::single(w.clone());
        if !tally.case(left == expect && right == expect, || {
            format!("counit law fails at {w}")
        }) {
            break;
        }
    }
    tally.done(format!("Foissy counit laws, degree <= {cap}"))
}

fn foissy_coassociativity(cap: usize) -> Check {
    let colors = one_color();
    let mut tally = Tally::new();
    for w in planar_words_up_to(cap, &colors) {
        let d = foissy_coproduct(&w);
        let left = d.expand_component(0, foissy_coproduct);
        let right = d.expand_component(1, foissy_coproduct);
        if !tally.case(left == right, || format!("Foissy coproduct not coassociative at {w}")) {
            break;
        }
    }
    tally.done(format!("Foissy coassociativity, degree <= {cap}"))
}

fn foissy_multiplicativity(cap: usize) -> Check {
    let colors = one_color();
    let words = planar_words_up_to(cap, &colors);
    let mut tally = Tally::new();
    'outer: for a in &words {
        for b in &words {
            if degree_of(a) + degree_of(b) > cap {
                continue;
            }
            let lhs = foissy_coproduct(&a.concat(b));
            let rhs = crate::tensor_hopf::tensor_concat(
                &foissy_coproduct(a),
                &foissy_coproduct(b),
            );
            if !tally.case(lhs == rhs, || {
                format!("Δ(AB) ≠ Δ(A)Δ(B) at A = {a}, B = {b}")
            }) {
                break 'outer;
            }
        }
    }
    tally.done(format!("Foissy multiplicativity over concatenation, degree <= {cap}"))
}

fn foissy_b_minus_identity(colors: &[Color], cap: usize) -> Check {
    let alg = PlanarBraces::new(colors.to_vec());
    let words = planar_words_up_to(cap, colors);
    let mut tally = Tally::new();
    'outer: for a in &words {
        for b in &words {
            if degree_of(a) + degree_of(b) > cap {
                continue;
            }
            let ea = LinearCombination::single(a.clone());
            let eb = LinearCombination::single(b.clone());
            let product = star_tensor(&alg, &ea, &eb);
            for x in colors {
                let lhs = b_minus_planar(&product, x);
                let rhs = b_minus_planar(&eb, x)
                    .scale(&word_counit(a))
                    .add(&star_tensor(&alg, &b_minus_planar(&ea, x), &eb));
                if !tally.case(lhs == rhs, || {
                    format!("B₋(A*B) ≠ ε(A)B₋(B) + B₋(A)*B at A = {a}, B = {b}, color {x}")
                }) {
                    break 'outer;
                }
            }
        }
    }
    tally.done(format!(
        "planar root removal duality identity, {} color(s), degree <= {cap}",
        colors.len()
    ))
}

fn foissy_b_inverse(cap: usize) -> Check {
    let colors = one_color();
    let mut tally = Tally::new();
    for w in planar_words_up_to(cap, &colors) {
        let tree = b_plus_planar(&colors[0], &w);
        let back = b_minus_planar(
            &LinearCombination::single(Word::single(tree)),
            &colors[0],
        );
        if !tally.case(back == LinearCombination::single(w.clone()), || {
            format!("B₋B₊ ≠ id at {w}")
        }) {
            break;
        }
    }
    tally.done(format!("planar root removal inverts attachment, degree <= {cap}"))
}

fn foissy_pairing_spot_check(cap: usize) -> Check {
    let colors = one_color();
    let alg = PlanarBraces::new(colors.clone());
    let words = planar_words_up_to(cap, &colors);
    let mut tally = Tally::new();
    'outer: for c in &words {
        let dc = degree_of(c);
        let delta = foissy_coproduct(c);
        for a in &words {
            let da = degree_of(a);
            if da > dc {
                continue;
            }
            for b in &words {
                if degree_of(b) + da != dc {
                    continue;
                }
                let lhs = delta.coefficient(&[a.clone(), b.clone()]);
                let product = star_words(&alg, b, a);
                let rhs = product.coefficient(c);
                if !tally.case(lhs == rhs, || {
                    format!("⟨Δ(C), A⊗B⟩ ≠ ⟨C, B*A⟩ at C = {c}, A = {a}, B = {b}")
                }) {
                    break 'outer;
                }
            }
        }
    }
    tally.done(format!("word pairing duality spot check, degree <= {cap}"))
}

pub fn suite_foissy_duality(cap: usize) -> Suite {
    let sub = cap.saturating_sub(1).max(2);
    Suite {
        name: "foissy-duality".into(),
        checks: vec![
            foissy_b_inverse(sub),
            foissy_counit(sub.min(5)),
            foissy_coassociativity(sub.min(5)),
            foissy_multiplicativity(sub.min(5)),
            foissy_b_minus_identity(&one_color(), cap),
            foissy_b_minus_identity(&two_colors(), cap.saturating_sub(2).max(2)),
            foissy_pairing_spot_check(cap.saturating_sub(2).max(2)),
        ],
    }
}

// ---------------------------------------------------------------------
// dispatch

pub const SUITE_NAMES: &[&str] = &[
    "prelie",
    "circle-axioms",
    "star-hopf",
    "ck-duality",
    "symbrace",
    "planar-brace",
    "tensor-hopf",
    "foissy-duality",
    "all",
];

/// The degree cap each suite runs at when none is given.
pub fn default_cap(suite: &str) -> Option<usize> {
    match suite {
        "prelie" => Some(8),
        "circle-axioms" => Some(6),
        "star-hopf" => Some(6),
        "ck-duality" => Some(6),
        "symbrace" => Some(3),
        "planar-brace" => Some(7),
        "tensor-hopf" => Some(6),
        "foissy-duality" => Some(6),
        _ => None,
    }
}

/// Runs one named suite (or all of them) at the given or default cap.
pub fn run_suites(name: &str, cap: Option<usize>) -> Option<Vec<Suite>> {
    let run_one = |suite: &str| -> Suite {
        let cap = cap.or_else(|| default_cap(suite)).expect("known suite");
        match suite {
            "prelie" => suite_prelie(cap),
            "circle-axioms" => suite_circle_axioms(cap),
            "star-hopf" => suite_star_hopf(cap),
            "ck-duality" => suite_ck_duality(cap),
            "symbrace" => suite_symbrace(cap),
            "planar-brace" => suite_planar_brace(cap),
            "tensor-hopf" => suite_tensor_hopf(cap),
            "foissy-duality" => suite_foissy_duality(cap),
            _ => unreachable!(),
        }
    };
    match name {
        "all" => Some(
            SUITE_NAMES
                .iter()
                .filter(|s| **s != "all")
                .map(|s| run_one(s))
                .collect(),
        ),
        s if SUITE_NAMES.contains(&s) => Some(vec![run_one(s)]),
        _ => None,
    }
}
