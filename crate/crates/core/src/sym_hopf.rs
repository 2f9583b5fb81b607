//! The symmetric coalgebra over a pre-Lie algebra: unshuffle coproduct,
//! the inductive extension of the circle product, the associative
//! Grossman-Larson-style star product, the antipode, and symmetric
//! braces. Everything is generic over the [`PreLieAlgebra`] instance.

use crate::linear::{LinearCombination, SMonomial, TensorCombination};
use crate::prelie::PreLieAlgebra;
use crate::scalar::Scalar;

/// An element of the symmetric algebra: a combination of multiset monomials.
pub type SElement<B> = LinearCombination<SMonomial<B>>;

/// Embeds a basis element as a length-one monomial with coefficient one.
pub fn selement_of<B: Ord + Clone>(b: B) -> SElement<B> {
    LinearCombination::single(SMonomial::single(b))
}

/// Lifts a combination over the basis to a combination of length-one monomials.
pub fn selement_from_basis<B: Ord + Clone>(x: &LinearCombination<B>) -> SElement<B> {
    x.map(|b| selement_of(b.clone()))
}

/// Counit: one on the empty monomial, zero elsewhere.
pub fn counit<B: Ord + Clone>(a: &SMonomial<B>) -> Scalar {
    if a.is_one() {
        Scalar::one()
    } else {
        Scalar::zero()
    }
}

pub fn counit_element<B: Ord + Clone>(a: &SElement<B>) -> Scalar {
    a.coefficient(&SMonomial::one())
}

/// The unshuffle coproduct: `A` splits over every sub-multiset, with the
/// product of per-factor binomial multiplicities.
pub fn unshuffle<B: Ord + Clone>(a: &SMonomial<B>) -> TensorCombination<SMonomial<B>> {
    let runs = a.runs();
    let mut out = TensorCombination::zero(2);
    // odometer over per-run chosen multiplicities
    let mut chosen = vec![0usize; runs.len()];
    loop {
        let mut left = Vec::new();
        let mut right = Vec::new();
        let mut coef = Scalar::one();
        for ((b, mult), take) in runs.iter().zip(chosen.iter()) {
            for _ in 0..*take {
                left.push((*b).clone());
            }
            for _ in 0..(mult - take) {
                right.push((*b).clone());
            }
            coef = coef * Scalar::binomial(*mult, *take);
        }
        out.add_term(vec![SMonomial::new(left), SMonomial::new(right)], coef);

        let mut i = 0;
        loop {
            if i == runs.len() {
                return out;
            }
            chosen[i] += 1;
            if chosen[i] <= runs[i].1 {
                break;
            }
            chosen[i] = 0;
            i += 1;
        }
    }
}

/// Linear extension of [`unshuffle`] to whole elements.
pub fn unshuffle_element<B: Ord + Clone>(a: &SElement<B>) -> TensorCombination<SMonomial<B>> {
    let mut out = TensorCombination::zero(2);
    for (m, c) in a.iter() {
        for (key, k) in unshuffle(m).iter() {
            out.add_term(key.clone(), c * k);
        }
    }
    out
}

/// The derivation action of a basis element on a monomial:
/// `(X_1⋯X_n)∘T = Σ_i X_1⋯(X_i∘T)⋯X_n`, and `1∘T = 0`.
pub fn right_action<P: PreLieAlgebra>(
    alg: &P,
    a: &SMonomial<P::Basis>,
    t: &P::Basis,
) -> SElement<P::Basis> {
    let mut out = LinearCombination::zero();
    for (x, mult) in a.runs() {
        let image = alg.circle_basis(x, t);
        let mult = Scalar::from_u128(mult as u128);
        for (y, c) in image.iter() {
            out.add_term(a.replace_one(x, y.clone()), &mult * c);
        }
    }
    out
}

/// The inductive circle of a basis element with a monomial:
/// `T∘1 = T` and `T∘(BX) = (T∘B)∘X − T∘(B∘X)`.
///
/// The factor peeled off is the canonically largest one; the result does
/// not depend on that choice, which the law suite verifies.
pub fn circle_single<P: PreLieAlgebra>(
    alg: &P,
    t: &P::Basis,
    a: &SMonomial<P::Basis>,
) -> LinearCombination<P::Basis> {
    circle_single_seq(alg, t, a.factors())
}

/// Same recursion evaluated along an explicit factor sequence, peeling
/// from the right of the slice. Exposed so permutation independence can
/// be tested rather than assumed.
pub fn circle_single_seq<P: PreLieAlgebra>(
    alg: &P,
    t: &P::Basis,
    factors: &[P::Basis],
) -> LinearCombination<P::Basis> {
    match factors.split_last() {
        None => LinearCombination::single(t.clone()),
        Some((x, prefix)) => {
            // (T∘B)∘X
            let t_b = circle_single_seq(alg, t, prefix);
            let mut out = LinearCombination::zero();
            for (u, c) in t_b.iter() {
                for (v, k) in alg.circle_basis(u, x).iter() {
                    out.add_term(v.clone(), c * k);
                }
            }
            // − T∘(B∘X)
            let b_x = right_action(alg, &SMonomial::new(prefix.to_vec()), x);
            for (m, c) in b_x.iter() {
                for (v, k) in circle_single(alg, t, m).iter() {
                    out.add_term(v.clone(), -&(c * k));
                }
            }
            out
        }
    }
}

/// Circle of two monomials through the multiplicativity rule
/// `AB∘C = (A∘C')(B∘C'')` over the unshuffle components of `C`.
pub fn circle_monomials<P: PreLieAlgebra>(
    alg: &P,
    a: &SMonomial<P::Basis>,
    c: &SMonomial<P::Basis>,
) -> SElement<P::Basis> {
    match a.factors().split_first() {
        None => LinearCombination::term(SMonomial::one(), counit(c)),
        Some((x, rest)) => {
            let rest = SMonomial::new(rest.to_vec());
            let mut out = LinearCombination::zero();
            for (split, k) in unshuffle(c).iter() {
                let head = circle_single(alg, x, &split[0]);
                if head.is_zero() {
                    continue;
                }
                let tail = circle_monomials(alg, &rest, &split[1]);
                for (u, cu) in head.iter() {
                    for (m, cm) in tail.iter() {
                        out.add_term(m.with_factor(u.clone()), &(k * cu) * cm);
                    }
                }
            }
            out
        }
    }
}

/// The circle product on whole elements of the symmetric algebra.
pub fn circle<P: PreLieAlgebra>(
    alg: &P,
    a: &SElement<P::Basis>,
    b: &SElement<P::Basis>,
) -> SElement<P::Basis> {
    let mut out = LinearCombination::zero();
    for (ma, ca) in a.iter() {
        for (mb, cb) in b.iter() {
            for (m, c) in circle_monomials(alg, ma, mb).iter() {
                out.add_term(m.clone(), &(ca * cb) * c);
            }
        }
    }
    out
}

/// The star product `A*B = (A∘B')B''` over the unshuffle components of `B`.
pub fn star_monomials<P: PreLieAlgebra>(
    alg: &P,
    a: &SMonomial<P::Basis>,
    b: &SMonomial<P::Basis>,
) -> SElement<P::Basis> {
    let mut out = LinearCombination::zero();
    for (split, k) in unshuffle(b).iter() {
        for (m, c) in circle_monomials(alg, a, &split[0]).iter() {
            out.add_term(m.mul(&split[1]), k * c);
        }
    }
    out
}

/// Star on whole elements; associative with the empty monomial as unit.
pub fn star<P: PreLieAlgebra>(
    alg: &P,
    a: &SElement<P::Basis>,
    b: &SElement<P::Basis>,
) -> SElement<P::Basis> {
    let mut out = LinearCombination::zero();
    for (ma, ca) in a.iter() {
        for (mb, cb) in b.iter() {
            for (m, c) in star_monomials(alg, ma, mb).iter() {
                out.add_term(m.clone(), &(ca * cb) * c);
            }
        }
    }
    out
}

/// Antipode of the connected filtered Hopf algebra `(S(L), *, Δ)`, by
/// recursion on monomial length.
pub fn antipode<P: PreLieAlgebra>(alg: &P, a: &SElement<P::Basis>) -> SElement<P::Basis> {
    let mut out = LinearCombination::zero();
    for (m, c) in a.iter() {
        for (k, ck) in antipode_monomial(alg, m).iter() {
            out.add_term(k.clone(), c * ck);
        }
    }
    out
}

fn antipode_monomial<P: PreLieAlgebra>(alg: &P, a: &SMonomial<P::Basis>) -> SElement<P::Basis> {
    if a.is_one() {
        return LinearCombination::single(SMonomial::one());
    }
    // S(A) = −A − Σ S(A')*A'' over the proper unshuffle splits
    let mut out = LinearCombination::term(a.clone(), Scalar::int(-1));
    for (split, k) in unshuffle(a).iter() {
        if split[0].is_one() || split[1].is_one() {
            continue;
        }
        let s_left = antipode_monomial(alg, &split[0]);
        let product = star(alg, &s_left, &LinearCombination::single(split[1].clone()));
        for (m, c) in product.iter() {
            out.add_term(m.clone(), -&(k * c));
        }
    }
    out
}

/// Symmetric brace `X{A}`: the circle of a basis element with a monomial.
pub fn symmetric_brace<P: PreLieAlgebra>(
    alg: &P,
    x: &P::Basis,
    a: &SMonomial<P::Basis>,
) -> LinearCombination<P::Basis> {
    circle_single(alg, x, a)
}

/// Symmetric brace with combination-valued arguments, expanded
/// multilinearly. `args` are multiplied into one monomial per choice of
/// basis element from each argument.
pub fn symmetric_brace_multi<P: PreLieAlgebra>(
    alg: &P,
    x: &LinearCombination<P::Basis>,
    args: &[LinearCombination<P::Basis>],
) -> LinearCombination<P::Basis> {
    let mut stack: Vec<(Vec<P::Basis>, Scalar)> = vec![(Vec::new(), Scalar::one())];
    for arg in args {
        let mut next = Vec::new();
        for (prefix, coef) in &stack {
            for (b, c) in arg.iter() {
                let mut p = prefix.clone();
                p.push(b.clone());
                next.push((p, coef * c));
            }
        }
        stack = next;
    }
    let mut out = LinearCombination::zero();
    for (xb, xc) in x.iter() {
        for (factors, coef) in &stack {
            let m = SMonomial::new(factors.clone());
            for (b, c) in circle_single(alg, xb, &m).iter() {
                out.add_term(b.clone(), &(xc * coef) * c);
            }
        }
    }
    out
}

/// Total degree of a monomial under the instance grading.
pub fn monomial_degree<P: PreLieAlgebra>(alg: &P, m: &SMonomial<P::Basis>) -> usize {
    m.factors().iter().map(|b| alg.degree(b)).sum()
}

/// All monomials of total degree at most `cap` (the empty one included).
pub fn monomials_up_to<P: PreLieAlgebra>(alg: &P, cap: usize) -> Vec<SMonomial<P::Basis>> {
    let basis = alg.basis_up_to(cap);
    let mut out = Vec::new();
    let mut acc: Vec<P::Basis> = Vec::new();
    fn go<P: PreLieAlgebra>(
        alg: &P,
        basis: &[P::Basis],
        start: usize,
        budget: usize,
        acc: &mut Vec<P::Basis>,
        out: &mut Vec<SMonomial<P::Basis>>,
    ) {
        out.push(SMonomial::new(acc.clone()));
        for i in start..basis.len() {
            let d = alg.degree(&basis[i]);
            if d == 0 || d > budget {
                continue;
            }
            acc.push(basis[i].clone());
            go(alg, basis, i, budget - d, acc, out);
            acc.pop();
        }
    }
    go(alg, &basis, 0, cap, &mut acc, &mut out);
    out.sort();
    out.dedup();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::prelie::{corolla_graft, FreePreLie, StructureConstantPreLie};
    use crate::tree::{parse_forest, parse_tree, Forest, RootedTree};

    fn t(s: &str) -> RootedTree {
        parse_tree(s).unwrap()
    }

    fn f(s: &str) -> Forest {
        parse_forest(s).unwrap()
    }

    fn elem(s: &str) -> SElement<RootedTree> {
        LinearCombination::single(f(s))
    }

    #[test]
    fn unshuffle_examples() {
        assert_eq!(unshuffle(&Forest::one()), TensorCombination::pair(Forest::one(), Forest::one()));

        let x = f("a[a]");
        let dx = unshuffle(&x);
        let mut expect = TensorCombination::zero(2);
        expect.add_term(vec![x.clone(), Forest::one()], Scalar::one());
        expect.add_term(vec![Forest::one(), x.clone()], Scalar::one());
        assert_eq!(dx, expect);

        let xx = f("a a");
        let dxx = unshuffle(&xx);
        let mut expect = TensorCombination::zero(2);
        expect.add_term(vec![xx.clone(), Forest::one()], Scalar::one());
        expect.add_term(vec![f("a"), f("a")], Scalar::int(2));
        expect.add_term(vec![Forest::one(), xx.clone()], Scalar::one());
        assert_eq!(dxx, expect);
    }

    #[test]
    fn unshuffle_multiplicities_match_subset_enumeration() {
        // explicit subset count on a 4-factor monomial with repeats
        let m = f("a a a[a] b");
        let d = unshuffle(&m);
        let total: Scalar = d.iter().fold(Scalar::zero(), |acc, (_, c)| acc + c.clone());
        assert_eq!(total, Scalar::int(16));
        assert_eq!(d.coefficient(&[f("a a[a]"), f("a b")]), Scalar::int(2));
    }

    #[test]
    fn right_action_examples() {
        let alg = FreePreLie::single_color();
        let leaf = t("a");
        assert!(right_action(&alg, &Forest::one(), &leaf).is_zero());
        let got = right_action(&alg, &f("a a"), &leaf);
        assert_eq!(got, LinearCombination::term(f("a[a] a"), Scalar::int(2)));
        let single = right_action(&alg, &f("a"), &leaf);
        assert_eq!(single, elem("a[a]"));
    }

    #[test]
    fn circle_single_examples() {
        let alg = FreePreLie::single_color();
        let leaf = t("a");
        assert_eq!(
            circle_single(&alg, &leaf, &Forest::one()),
            LinearCombination::single(leaf.clone())
        );
        // a∘(a·a): the cherry alone, the chains cancel
        let got = circle_single(&alg, &leaf, &f("a a"));
        assert_eq!(got, LinearCombination::single(t("a[a a]")));

        let line = StructureConstantPreLie::idempotent_line();
        let e = 0usize;
        let ee = SMonomial::new(vec![e, e]);
        assert!(circle_single(&line, &e, &ee).is_zero());
    }

    #[test]
    fn circle_single_matches_corolla_formula() {
        let alg = FreePreLie::single_color();
        let leaf = t("a");
        let arg = f("a a");
        let via_recursion = circle_single(&alg, &leaf, &arg);
        let via_grafting = corolla_graft(&Forest::single(leaf.clone()), arg.factors());
        // multi-grafting lands in forests; each monomial is a single tree here
        let flattened = via_grafting.map(|forest| {
            assert_eq!(forest.len(), 1);
            LinearCombination::single(forest.trees()[0].clone())
        });
        assert_eq!(via_recursion, flattened);
    }

    #[test]
    fn circle_element_examples() {
        let alg = FreePreLie::single_color();
        let one = LinearCombination::single(Forest::one());
        let a = elem("a");
        let aa = elem("a a");
        // A∘1 = A
        assert_eq!(circle(&alg, &aa, &one), aa);
        // 1∘A = ε(A)·1
        assert_eq!(circle(&alg, &one, &a), LinearCombination::zero());
        assert_eq!(circle(&alg, &one, &one), one);
        // (a·a)∘a through the multiplicativity rule
        let got = circle(&alg, &aa, &a);
        assert_eq!(got, LinearCombination::term(f("a[a] a"), Scalar::int(2)));
    }

    #[test]
    fn star_examples() {
        let alg = FreePreLie::single_color();
        let a = elem("a");
        let aa = elem("a a");
        let one = LinearCombination::single(Forest::one());

        let got = star(&alg, &a, &a);
        assert_eq!(got, elem("a[a]").add(&elem("a a")));

        assert_eq!(star(&alg, &one, &aa), aa);
        assert_eq!(star(&alg, &aa, &one), aa);

        let got = star(&alg, &aa, &a);
        let expect = LinearCombination::term(f("a[a] a"), Scalar::int(2)).add(&elem("a a a"));
        assert_eq!(got, expect);
    }

    #[test]
    fn antipode_examples() {
        let alg = FreePreLie::single_color();
        let one = LinearCombination::single(Forest::one());
        assert_eq!(antipode(&alg, &one), one);
        assert_eq!(antipode(&alg, &elem("a")), elem("a").neg());
        let got = antipode(&alg, &elem("a a"));
        let expect = elem("a a").add(&elem("a[a]").scale(&Scalar::int(2)));
        assert_eq!(got, expect);
    }

    #[test]
    fn antipode_axiom_small() {
        let alg = FreePreLie::single_color();
        for m in monomials_up_to(&alg, 4) {
            let a = LinearCombination::single(m.clone());
            let mut convolved = LinearCombination::zero();
            for (split, k) in unshuffle(&m).iter() {
                let s_left = antipode(&alg, &LinearCombination::single(split[0].clone()));
                let prod = star(&alg, &s_left, &LinearCombination::single(split[1].clone()));
                for (mm, c) in prod.iter() {
                    convolved.add_term(mm.clone(), k * c);
                }
            }
            let expect = LinearCombination::term(SMonomial::one(), counit_element(&a));
            assert_eq!(convolved, expect, "monomial {m}");
        }
    }

    #[test]
    fn symmetric_brace_examples() {
        let alg = FreePreLie::single_color();
        let leaf = t("a");
        assert_eq!(
            symmetric_brace(&alg, &leaf, &Forest::one()),
            LinearCombination::single(leaf.clone())
        );
        assert_eq!(
            symmetric_brace(&alg, &leaf, &f("a")),
            LinearCombination::single(t("a[a]"))
        );
        assert_eq!(
            symmetric_brace(&alg, &leaf, &f("a a")),
            LinearCombination::single(t("a[a a]"))
        );
    }

    #[test]
    fn idempotent_line_circle_values() {
        let line = StructureConstantPreLie::idempotent_line();
        let e = 0usize;
        for n in 0..=5 {
            let m = SMonomial::new(vec![e; n]);
            let got = circle_single(&line, &e, &m);
            if n <= 1 {
                assert_eq!(got, LinearCombination::single(e));
            } else {
                assert!(got.is_zero(), "e∘e^{n} should vanish");
            }
        }
    }
}
