//! The tensor coalgebra over a brace algebra: deconcatenation coproduct,
//! the recursive star product and its closed form, the antipode, and —
//! for the planar-tree instance — the Foissy coproduct with its root
//! attachment/removal maps.

use crate::linear::{iterate_coproduct, LinearCombination, TensorCombination, Word};
use crate::planar::{planar_brace, PlanarForest, PlanarTree};
use crate::scalar::Scalar;
use crate::tree::Color;

/// A brace algebra presented on its basis: the brace of one element with
/// a word of elements, extended multilinearly everywhere else.
pub trait BraceAlgebra {
    type Basis: Clone + Ord + std::fmt::Debug + std::fmt::Display;

    fn brace(&self, x: &Self::Basis, args: &[Self::Basis]) -> LinearCombination<Self::Basis>;

    fn degree(&self, x: &Self::Basis) -> usize;

    fn basis_up_to(&self, cap: usize) -> Vec<Self::Basis>;
}

/// The brace algebra with every nontrivial brace zero: `X{1} = X` and
/// `X{w} = 0` for nonempty `w`. Its star product degenerates to plain
/// interleavings, which isolates recursion bugs from brace bugs.
pub struct TrivialBraces<B> {
    letters: Vec<B>,
}

impl<B: Clone + Ord + std::fmt::Debug + std::fmt::Display> TrivialBraces<B> {
    pub fn new(letters: Vec<B>) -> Self {
        TrivialBraces { letters }
    }
}

impl<B: Clone + Ord + std::fmt::Debug + std::fmt::Display> BraceAlgebra for TrivialBraces<B> {
    type Basis = B;

    fn brace(&self, x: &B, args: &[B]) -> LinearCombination<B> {
        if args.is_empty() {
            LinearCombination::single(x.clone())
        } else {
            LinearCombination::zero()
        }
    }

    fn degree(&self, _x: &B) -> usize {
        1
    }

    fn basis_up_to(&self, cap: usize) -> Vec<B> {
        if cap == 0 {
            Vec::new()
        } else {
            self.letters.clone()
        }
    }
}

/// An element of the tensor algebra: a combination of words.
pub type TElement<B> = LinearCombination<Word<B>>;

pub fn telement_of<B: Ord + Clone>(letter: B) -> TElement<B> {
    LinearCombination::single(Word::single(letter))
}

/// Deconcatenation: `Δ(X_1⋯X_n) = Σ_i X_1⋯X_i ⊗ X_{i+1}⋯X_n`.
pub fn deconcat<B: Ord + Clone>(w: &Word<B>) -> TensorCombination<Word<B>> {
    let mut out = TensorCombination::zero(2);
    for i in 0..=w.len() {
        let (l, r) = w.split_at(i);
        out.add_term(vec![l, r], Scalar::one());
    }
    out
}

/// The `k`-fold deconcatenation components of a word.
pub fn deconcat_k<B: Ord + Clone>(w: &Word<B>, k: usize) -> TensorCombination<Word<B>> {
    iterate_coproduct(deconcat, &LinearCombination::single(w.clone()), k)
}

/// Counit of the tensor coalgebra: one on the empty word.
pub fn word_counit<B: Ord + Clone>(w: &Word<B>) -> Scalar {
    if w.is_one() {
        Scalar::one()
    } else {
        Scalar::zero()
    }
}

pub fn telement_counit<B: Ord + Clone>(a: &TElement<B>) -> Scalar {
    a.coefficient(&Word::one())
}

/// Word-level star product by the head recursion
/// `1*B = B`, `XA*B = B' X{B''} (A*B''')` over three-fold deconcatenation.
pub fn star_words<V: BraceAlgebra>(
    alg: &V,
    a: &Word<V::Basis>,
    b: &Word<V::Basis>,
) -> TElement<V::Basis> {
    match a.letters().split_first() {
        None => LinearCombination::single(b.clone()),
        Some((x, rest)) => {
            let rest = Word::new(rest.to_vec());
            let mut out = LinearCombination::zero();
            for (split, k) in deconcat_k(b, 3).iter() {
                let braced = alg.brace(x, split[1].letters());
                if braced.is_zero() {
                    continue;
                }
                let tail = star_words(alg, &rest, &split[2]);
                for (mid, cm) in braced.iter() {
                    let prefix = split[0].concat(&Word::single(mid.clone()));
                    for (w, cw) in tail.iter() {
                        out.add_term(prefix.concat(w), &(k * cm) * cw);
                    }
                }
            }
            out
        }
    }
}

/// Star product on whole elements of the tensor algebra.
pub fn star_tensor<V: BraceAlgebra>(
    alg: &V,
    a: &TElement<V::Basis>,
    b: &TElement<V::Basis>,
) -> TElement<V::Basis> {
    let mut out = LinearCombination::zero();
    for (wa, ca) in a.iter() {
        for (wb, cb) in b.iter() {
            for (w, c) in star_words(alg, wa, wb).iter() {
                out.add_term(w.clone(), &(ca * cb) * c);
            }
        }
    }
    out
}

/// Closed form of the same product: `X_1⋯X_n * B` expands over the
/// `2n+1`-fold deconcatenation components of `B`, braces in the even
/// positions. Must agree with [`star_words`].
pub fn star_words_closed<V: BraceAlgebra>(
    alg: &V,
    a: &Word<V::Basis>,
    b: &Word<V::Basis>,
) -> TElement<V::Basis> {
    let n = a.len();
    if n == 0 {
        return LinearCombination::single(b.clone());
    }
    let mut out = LinearCombination::zero();
    for (split, k) in deconcat_k(b, 2 * n + 1).iter() {
        // words at the odd indices pass through, letters brace the evens
        let mut partials: Vec<(Word<V::Basis>, Scalar)> =
            vec![(split[0].clone(), Scalar::one())];
        for (i, x) in a.letters().iter().enumerate() {
            let braced = alg.brace(x, split[2 * i + 1].letters());
            let mut next = Vec::new();
            for (prefix, coef) in &partials {
                for (mid, cm) in braced.iter() {
                    let w = prefix
                        .concat(&Word::single(mid.clone()))
                        .concat(&split[2 * i + 2]);
                    next.push((w, coef * cm));
                }
            }
            partials = next;
            if partials.is_empty() {
                break;
            }
        }
        for (w, c) in partials {
            out.add_term(w, k * &c);
        }
    }
    out
}

/// Brace of a basis element with a whole element, extended linearly.
pub fn brace_element<V: BraceAlgebra>(
    alg: &V,
    x: &V::Basis,
    a: &TElement<V::Basis>,
) -> LinearCombination<V::Basis> {
    let mut out = LinearCombination::zero();
    for (w, c) in a.iter() {
        for (b, k) in alg.brace(x, w.letters()).iter() {
            out.add_term(b.clone(), c * k);
        }
    }
    out
}

/// Verifies `X{B}{C} = X{B*C}` for one instance.
pub fn brace_composition_check<V: BraceAlgebra>(
    alg: &V,
    x: &V::Basis,
    b: &Word<V::Basis>,
    c: &Word<V::Basis>,
) -> bool {
    let inner = alg.brace(x, b.letters());
    let mut lhs = LinearCombination::zero();
    for (y, cy) in inner.iter() {
        for (z, cz) in alg.brace(y, c.letters()).iter() {
            lhs.add_term(z.clone(), cy * cz);
        }
    }
    let rhs = brace_element(alg, x, &star_words(alg, b, c));
    lhs == rhs
}

/// Antipode of the connected filtered Hopf algebra on words, by
/// recursion on word length.
pub fn antipode_tensor<V: BraceAlgebra>(alg: &V, a: &TElement<V::Basis>) -> TElement<V::Basis> {
    let mut out = LinearCombination::zero();
    for (w, c) in a.iter() {
        for (k, ck) in antipode_word(alg, w).iter() {
            out.add_term(k.clone(), c * ck);
        }
    }
    out
}

fn antipode_word<V: BraceAlgebra>(alg: &V, w: &Word<V::Basis>) -> TElement<V::Basis> {
    if w.is_one() {
        return LinearCombination::single(Word::one());
    }
    // S(A) = −A − Σ S(A')*A'' over the proper deconcatenation splits
    let mut out = LinearCombination::term(w.clone(), Scalar::int(-1));
    for i in 1..w.len() {
        let (l, r) = w.split_at(i);
        let s_left = antipode_word(alg, &l);
        let prod = star_tensor(alg, &s_left, &LinearCombination::single(r));
        for (m, c) in prod.iter() {
            out.add_term(m.clone(), -c);
        }
    }
    out
}

/// Attaches an `x`-colored root above an ordered word of planar trees.
pub fn b_plus_planar(x: &Color, w: &PlanarForest) -> PlanarTree {
    PlanarTree::new(x.clone(), w.letters().to_vec())
}

/// Transpose of [`b_plus_planar`]: length-one words whose tree has root
/// color `x` map to the child word, everything else to zero.
pub fn b_minus_planar(
    a: &LinearCombination<PlanarForest>,
    x: &Color,
) -> LinearCombination<PlanarForest> {
    a.map(|w| {
        if w.len() == 1 && w.letters()[0].color() == x {
            LinearCombination::single(w.letters()[0].branch_word())
        } else {
            LinearCombination::zero()
        }
    })
}

/// Componentwise concatenation of two-fold tensors of words.
pub fn tensor_concat(
    a: &TensorCombination<PlanarForest>,
    b: &TensorCombination<PlanarForest>,
) -> TensorCombination<PlanarForest> {
    crate::linear::componentwise_bilinear(a, b, |x, y| LinearCombination::single(x.concat(y)))
}

/// The coproduct of the Hopf algebra of planar rooted trees, by the
/// root-attachment recursion `Δ(B_x⁺ W) = B_x⁺W ⊗ 1 + (1 ⊗ B_x⁺)Δ(W)`,
/// extended multiplicatively over concatenation.
pub fn foissy_coproduct(w: &PlanarForest) -> TensorCombination<PlanarForest> {
    let mut out = TensorCombination::pair(Word::one(), Word::one());
    for tree in w.letters() {
        out = tensor_concat(&out, &foissy_coproduct_tree(tree));
    }
    out
}

fn foissy_coproduct_tree(tree: &PlanarTree) -> TensorCombination<PlanarForest> {
    let mut out = TensorCombination::pair(Word::single(tree.clone()), Word::one());
    let inner = foissy_coproduct(&tree.branch_word());
    let reattached = inner.map_component(1, |right| {
        LinearCombination::single(Word::single(b_plus_planar(tree.color(), right)))
    });
    out = out.add(&reattached);
    out
}

/// Brace with planar trees and whole-word arguments that may themselves
/// be combinations; used to state the brace identity tests.
pub fn planar_brace_segments(
    x: &PlanarTree,
    segments: &[LinearCombination<PlanarForest>],
) -> LinearCombination<PlanarTree> {
    // expand the cartesian product of segment words, concatenate, brace
    let mut stack: Vec<(PlanarForest, Scalar)> = vec![(Word::one(), Scalar::one())];
    for seg in segments {
        let mut next = Vec::new();
        for (prefix, coef) in &stack {
            for (w, c) in seg.iter() {
                next.push((prefix.concat(w), coef * c));
            }
        }
        stack = next;
    }
    let mut out = LinearCombination::zero();
    for (w, coef) in &stack {
        for (t, c) in planar_brace(x, w).iter() {
            out.add_term(t.clone(), coef * c);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::planar::{parse_planar_forest, parse_planar_tree, PlanarBraces};

    fn p(s: &str) -> PlanarTree {
        parse_planar_tree(s).unwrap()
    }

    fn w(s: &str) -> PlanarForest {
        parse_planar_forest(s).unwrap()
    }

    fn elem(s: &str) -> TElement<PlanarTree> {
        LinearCombination::single(w(s))
    }

    #[test]
    fn deconcat_examples() {
        let empty: Word<PlanarTree> = Word::one();
        assert_eq!(deconcat(&empty), TensorCombination::pair(Word::one(), Word::one()));

        let x = w("a");
        let mut expect = TensorCombination::zero(2);
        expect.add_term(vec![x.clone(), Word::one()], Scalar::one());
        expect.add_term(vec![Word::one(), x.clone()], Scalar::one());
        assert_eq!(deconcat(&x), expect);

        let xy = w("a b");
        let d = deconcat(&xy);
        assert_eq!(d.len(), 3);
        assert_eq!(d.coefficient(&[w("a"), w("b")]), Scalar::one());
    }

    #[test]
    fn star_word_examples() {
        let alg = PlanarBraces::single_color();
        let a = elem("a");

        // 1 * B = B
        let empty = LinearCombination::single(Word::<PlanarTree>::one());
        assert_eq!(star_tensor(&alg, &empty, &a), a);
        assert_eq!(star_tensor(&alg, &a, &empty), a);

        // a * a = both interleavings plus the grafting
        let got = star_tensor(&alg, &a, &a);
        let mut expect = LinearCombination::zero();
        expect.add_term(w("a a"), Scalar::int(2));
        expect.add_term(w("a[a]"), Scalar::one());
        assert_eq!(got, expect);
    }

    #[test]
    fn closed_form_matches_recursion() {
        let alg = PlanarBraces::single_color();
        let words = crate::planar::planar_words_up_to(3, &[Color::new("a")]);
        for a in &words {
            for b in &words {
                assert_eq!(
                    star_words(&alg, a, b),
                    star_words_closed(&alg, a, b),
                    "a = {a}, b = {b}"
                );
            }
        }
    }

    #[test]
    fn trivial_braces_star_is_interleaving() {
        let alg = TrivialBraces::new(vec![Color::new("a"), Color::new("b")]);
        let x = Word::single(Color::new("a"));
        let y = Word::single(Color::new("b"));
        let got = star_words(&alg, &x, &y);
        let mut expect = LinearCombination::zero();
        expect.add_term(x.concat(&y), Scalar::one());
        expect.add_term(y.concat(&x), Scalar::one());
        assert_eq!(got, expect);
        assert_eq!(got, star_words_closed(&alg, &x, &y));
    }

    #[test]
    fn brace_composition_small() {
        let alg = PlanarBraces::single_color();
        let x = p("a");
        assert!(brace_composition_check(&alg, &x, &w("a"), &Word::one()));
        assert!(brace_composition_check(&alg, &x, &Word::one(), &w("a")));
        assert!(brace_composition_check(&alg, &x, &w("a"), &w("a")));
    }

    #[test]
    fn antipode_examples() {
        let alg = PlanarBraces::single_color();
        let empty = LinearCombination::single(Word::<PlanarTree>::one());
        assert_eq!(antipode_tensor(&alg, &empty), empty);
        assert_eq!(antipode_tensor(&alg, &elem("a")), elem("a").neg());

        // two-sided antipode axiom on short words
        for word in crate::planar::planar_words_up_to(3, &[Color::new("a")]) {
            let mut left = LinearCombination::zero();
            let mut right = LinearCombination::zero();
            for (split, k) in deconcat(&word).iter() {
                let s0 = antipode_tensor(&alg, &LinearCombination::single(split[0].clone()));
                let prod = star_tensor(&alg, &s0, &LinearCombination::single(split[1].clone()));
                for (m, c) in prod.iter() {
                    left.add_term(m.clone(), k * c);
                }
                let s1 = antipode_tensor(&alg, &LinearCombination::single(split[1].clone()));
                let prod = star_tensor(&alg, &LinearCombination::single(split[0].clone()), &s1);
                for (m, c) in prod.iter() {
                    right.add_term(m.clone(), k * c);
                }
            }
            let expect = LinearCombination::term(Word::one(), word_counit(&word));
            assert_eq!(left, expect, "left antipode axiom at {word}");
            assert_eq!(right, expect, "right antipode axiom at {word}");
        }
    }

    #[test]
    fn b_plus_minus_planar() {
        let x = Color::new("a");
        assert_eq!(b_plus_planar(&x, &w("a b")), p("a[a b]"));
        for word in crate::planar::planar_words_up_to(3, &[Color::new("a")]) {
            let tree = b_plus_planar(&x, &word);
            let back = b_minus_planar(&LinearCombination::single(Word::single(tree)), &x);
            assert_eq!(back, LinearCombination::single(word.clone()));
        }
        assert!(b_minus_planar(&elem("a a"), &x).is_zero());
        assert!(b_minus_planar(&elem("b[a]"), &x).is_zero());
    }

    #[test]
    fn foissy_coproduct_examples() {
        let got = foissy_coproduct(&w("a"));
        let mut expect = TensorCombination::zero(2);
        expect.add_term(vec![w("a"), Word::one()], Scalar::one());
        expect.add_term(vec![Word::one(), w("a")], Scalar::one());
        assert_eq!(got, expect);

        let got = foissy_coproduct(&w("a[a]"));
        let mut expect = TensorCombination::zero(2);
        expect.add_term(vec![w("a[a]"), Word::one()], Scalar::one());
        expect.add_term(vec![Word::one(), w("a[a]")], Scalar::one());
        expect.add_term(vec![w("a"), w("a")], Scalar::one());
        assert_eq!(got, expect);

        // ordered two-child tree: the child word deconcatenates in order
        let got = foissy_coproduct(&w("a[a b]"));
        let mut expect = TensorCombination::zero(2);
        expect.add_term(vec![w("a[a b]"), Word::one()], Scalar::one());
        expect.add_term(vec![Word::one(), w("a[a b]")], Scalar::one());
        expect.add_term(vec![w("a b"), w("a")], Scalar::one());
        expect.add_term(vec![w("a"), w("a[b]")], Scalar::one());
        expect.add_term(vec![w("b"), w("a[a]")], Scalar::one());
        assert_eq!(got, expect);
    }

    #[test]
    fn foissy_is_not_cocommutative() {
        let d = foissy_coproduct(&w("a[a b]"));
        assert_eq!(d.coefficient(&[w("b"), w("a[a]")]), Scalar::one());
        assert_eq!(d.coefficient(&[w("a[a]"), w("b")]), Scalar::zero());
    }
}
