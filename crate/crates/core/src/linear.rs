//! Formal linear combinations over an ordered basis, tensor components,
//! and the two monomial shapes used throughout: commutative multisets
//! (symmetric-algebra monomials) and ordered words (tensor-algebra
//! monomials).

use std::collections::BTreeMap;
use std::fmt;

use crate::scalar::Scalar;

/// A finite formal sum `Σ c_b · b` with nonzero rational coefficients.
///
/// Zero coefficients are never stored, so equality of combinations is
/// term-by-term equality of the underlying maps.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LinearCombination<B: Ord> {
    terms: BTreeMap<B, Scalar>,
}

impl<B: Ord + Clone> Default for LinearCombination<B> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<B: Ord + Clone> LinearCombination<B> {
    pub fn zero() -> Self {
        LinearCombination { terms: BTreeMap::new() }
    }

    /// The basis element `b` with coefficient one.
    pub fn single(b: B) -> Self {
        Self::term(b, Scalar::one())
    }

    pub fn term(b: B, c: Scalar) -> Self {
        let mut lc = Self::zero();
        lc.add_term(b, c);
        lc
    }

    pub fn from_terms(it: impl IntoIterator<Item = (B, Scalar)>) -> Self {
        let mut lc = Self::zero();
        for (b, c) in it {
            lc.add_term(b, c);
        }
        lc
    }

    pub fn add_term(&mut self, b: B, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(b) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += &c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&B, &Scalar)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, b: &B) -> Scalar {
        self.terms.get(b).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LinearCombination {
            terms: self.terms.iter().map(|(b, x)| (b.clone(), x * c)).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        LinearCombination {
            terms: self.terms.iter().map(|(b, x)| (b.clone(), -x)).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (b, c) in other.iter() {
            out.add_term(b.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (b, c) in other.iter() {
            out.add_term(b.clone(), -c);
        }
        out
    }

    /// Linear extension of a basis map `f : B -> combinations over C`.
    pub fn map<C: Ord + Clone>(&self, mut f: impl FnMut(&B) -> LinearCombination<C>) -> LinearCombination<C> {
        let mut out = LinearCombination::zero();
        for (b, c) in self.iter() {
            for (target, k) in f(b).iter() {
                out.add_term(target.clone(), c * k);
            }
        }
        out
    }
}

/// `αA + βB`, with zero terms pruned.
pub fn combine<B: Ord + Clone>(
    alpha: &Scalar,
    a: &LinearCombination<B>,
    beta: &Scalar,
    b: &LinearCombination<B>,
) -> LinearCombination<B> {
    a.scale(alpha).add(&b.scale(beta))
}

/// Bilinear extension of a basis-level product to whole combinations:
/// `Σ_{a,b} A[a]·B[b]·prod(a, b)`.
pub fn bilinear_extend<A, B, C, F>(
    mut prod: F,
    x: &LinearCombination<A>,
    y: &LinearCombination<B>,
) -> LinearCombination<C>
where
    A: Ord + Clone,
    B: Ord + Clone,
    C: Ord + Clone,
    F: FnMut(&A, &B) -> LinearCombination<C>,
{
    let mut out = LinearCombination::zero();
    for (a, ca) in x.iter() {
        for (b, cb) in y.iter() {
            let cab = ca * cb;
            for (c, k) in prod(a, b).iter() {
                out.add_term(c.clone(), &cab * k);
            }
        }
    }
    out
}

/// A finite formal sum over `k`-tuples of basis elements.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TensorCombination<B: Ord> {
    arity: usize,
    terms: BTreeMap<Vec<B>, Scalar>,
}

impl<B: Ord + Clone> TensorCombination<B> {
    pub fn zero(arity: usize) -> Self {
        assert!(arity >= 1, "tensor arity must be at least 1");
        TensorCombination { arity, terms: BTreeMap::new() }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn from_linear(a: &LinearCombination<B>) -> Self {
        let mut t = Self::zero(1);
        for (b, c) in a.iter() {
            t.add_term(vec![b.clone()], c.clone());
        }
        t
    }

    /// A single `l ⊗ r` term with coefficient one.
    pub fn pair(l: B, r: B) -> Self {
        let mut t = Self::zero(2);
        t.add_term(vec![l, r], Scalar::one());
        t
    }

    pub fn add_term(&mut self, key: Vec<B>, c: Scalar) {
        assert_eq!(key.len(), self.arity, "tensor key arity mismatch");
        if c.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += &c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Vec<B>, &Scalar)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, key: &[B]) -> Scalar {
        self.terms.get(key).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Self::zero(self.arity);
        }
        TensorCombination {
            arity: self.arity,
            terms: self.terms.iter().map(|(k, x)| (k.clone(), x * c)).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.arity, other.arity);
        let mut out = self.clone();
        for (k, c) in other.iter() {
            out.add_term(k.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.arity, other.arity);
        let mut out = self.clone();
        for (k, c) in other.iter() {
            out.add_term(k.clone(), -c);
        }
        out
    }

    /// Replaces component `idx` of every term by its two-fold expansion
    /// under `delta`, increasing the arity by one.
    pub fn expand_component(
        &self,
        idx: usize,
        mut delta: impl FnMut(&B) -> TensorCombination<B>,
    ) -> TensorCombination<B> {
        assert!(idx < self.arity);
        let mut out = TensorCombination::zero(self.arity + 1);
        for (key, c) in self.iter() {
            let expansion = delta(&key[idx]);
            assert_eq!(expansion.arity(), 2, "expand_component needs a two-fold coproduct");
            for (split, k) in expansion.iter() {
                let mut new_key = Vec::with_capacity(self.arity + 1);
                new_key.extend_from_slice(&key[..idx]);
                new_key.push(split[0].clone());
                new_key.push(split[1].clone());
                new_key.extend_from_slice(&key[idx + 1..]);
                out.add_term(new_key, c * k);
            }
        }
        out
    }

    /// Applies a linear basis map to component `idx` of every term.
    pub fn map_component(
        &self,
        idx: usize,
        mut f: impl FnMut(&B) -> LinearCombination<B>,
    ) -> TensorCombination<B> {
        assert!(idx < self.arity);
        let mut out = TensorCombination::zero(self.arity);
        for (key, c) in self.iter() {
            for (b, k) in f(&key[idx]).iter() {
                let mut new_key = key.clone();
                new_key[idx] = b.clone();
                out.add_term(new_key, c * k);
            }
        }
        out
    }
}

/// The `k`-fold component expansion of `A` under the coproduct `delta`.
///
/// `k = 1` returns `A` itself; for coassociative `delta` the result is
/// independent of which component gets expanded at each step.
pub fn iterate_coproduct<B, F>(
    delta: F,
    a: &LinearCombination<B>,
    k: usize,
) -> TensorCombination<B>
where
    B: Ord + Clone,
    F: Fn(&B) -> TensorCombination<B>,
{
    assert!(k >= 1, "iterate_coproduct needs k >= 1");
    let mut out = TensorCombination::from_linear(a);
    for _ in 1..k {
        let last = out.arity() - 1;
        out = out.expand_component(last, &delta);
    }
    out
}

/// Componentwise bilinear pairing of two equal-arity tensors:
/// each pair of aligned components is fed to `f` and the resulting
/// combinations are expanded multilinearly back into tensor terms.
pub fn componentwise_bilinear<B, F>(
    x: &TensorCombination<B>,
    y: &TensorCombination<B>,
    mut f: F,
) -> TensorCombination<B>
where
    B: Ord + Clone,
    F: FnMut(&B, &B) -> LinearCombination<B>,
{
    assert_eq!(x.arity(), y.arity(), "componentwise pairing needs equal arity");
    let arity = x.arity();
    let mut out = TensorCombination::zero(arity);
    for (kx, cx) in x.iter() {
        for (ky, cy) in y.iter() {
            let parts: Vec<LinearCombination<B>> =
                kx.iter().zip(ky.iter()).map(|(a, b)| f(a, b)).collect();
            if parts.iter().any(|p| p.is_zero()) {
                continue;
            }
            let mut acc: Vec<(Vec<B>, Scalar)> = vec![(Vec::with_capacity(arity), cx * cy)];
            for part in &parts {
                let mut next = Vec::with_capacity(acc.len() * part.len());
                for (prefix, coef) in &acc {
                    for (b, k) in part.iter() {
                        let mut key = prefix.clone();
                        key.push(b.clone());
                        next.push((key, coef * k));
                    }
                }
                acc = next;
            }
            for (key, coef) in acc {
                out.add_term(key, coef);
            }
        }
    }
    out
}

/// Outer product of two combinations as a two-fold tensor.
pub fn tensor_product<B: Ord + Clone>(
    x: &LinearCombination<B>,
    y: &LinearCombination<B>,
) -> TensorCombination<B> {
    let mut out = TensorCombination::zero(2);
    for (a, ca) in x.iter() {
        for (b, cb) in y.iter() {
            out.add_term(vec![a.clone(), b.clone()], ca * cb);
        }
    }
    out
}

/// A commutative monomial: a finite multiset of basis elements, stored
/// as a sequence sorted by the basis order. The empty monomial is the
/// unit of the symmetric algebra.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct SMonomial<B: Ord> {
    factors: Vec<B>,
}

impl<B: Ord + Clone> SMonomial<B> {
    pub fn one() -> Self {
        SMonomial { factors: Vec::new() }
    }

    pub fn new(mut factors: Vec<B>) -> Self {
        factors.sort();
        SMonomial { factors }
    }

    pub fn single(b: B) -> Self {
        SMonomial { factors: vec![b] }
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn factors(&self) -> &[B] {
        &self.factors
    }

    /// Multiset union.
    pub fn mul(&self, other: &Self) -> Self {
        let mut factors = Vec::with_capacity(self.len() + other.len());
        factors.extend_from_slice(&self.factors);
        factors.extend_from_slice(&other.factors);
        factors.sort();
        SMonomial { factors }
    }

    pub fn with_factor(&self, b: B) -> Self {
        let mut factors = self.factors.clone();
        let pos = factors.partition_point(|x| *x <= b);
        factors.insert(pos, b);
        SMonomial { factors }
    }

    /// Splits off the canonically largest factor.
    pub fn split_largest(&self) -> Option<(SMonomial<B>, &B)> {
        let (last, rest) = self.factors.split_last()?;
        Some((SMonomial { factors: rest.to_vec() }, last))
    }

    /// Runs of equal factors with their multiplicities.
    pub fn runs(&self) -> Vec<(&B, usize)> {
        let mut out: Vec<(&B, usize)> = Vec::new();
        for b in &self.factors {
            match out.last_mut() {
                Some((x, m)) if *x == b => *m += 1,
                _ => out.push((b, 1)),
            }
        }
        out
    }

    /// The monomial with one occurrence of `b` removed, replaced by `sub`.
    pub fn replace_one(&self, b: &B, sub: B) -> Self {
        let mut factors = self.factors.clone();
        let pos = factors.iter().position(|x| x == b).expect("factor not present");
        factors.remove(pos);
        let mut out = SMonomial { factors };
        out = out.with_factor(sub);
        out
    }
}

impl<B: Ord + Clone + fmt::Display> fmt::Display for SMonomial<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        for (i, b) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{b}")?;
        }
        Ok(())
    }
}

/// An ordered word of basis letters: a monomial of the tensor algebra.
/// The empty word is the unit.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Word<B> {
    letters: Vec<B>,
}

impl<B: Clone> Word<B> {
    pub fn one() -> Self {
        Word { letters: Vec::new() }
    }

    pub fn new(letters: Vec<B>) -> Self {
        Word { letters }
    }

    pub fn single(b: B) -> Self {
        Word { letters: vec![b] }
    }

    pub fn is_one(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> &[B] {
        &self.letters
    }

    pub fn concat(&self, other: &Self) -> Self {
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&other.letters);
        Word { letters }
    }

    /// The `(prefix, suffix)` split at position `i`.
    pub fn split_at(&self, i: usize) -> (Word<B>, Word<B>) {
        let (l, r) = self.letters.split_at(i);
        (Word { letters: l.to_vec() }, Word { letters: r.to_vec() })
    }
}

impl<B: Clone + fmt::Display> fmt::Display for Word<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        for (i, b) in self.letters.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{b}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lc(pairs: &[(&str, i64)]) -> LinearCombination<String> {
        LinearCombination::from_terms(
            pairs.iter().map(|(b, c)| (b.to_string(), Scalar::int(*c))),
        )
    }

    #[test]
    fn combine_cancellation() {
        let a = lc(&[("t", 1)]);
        let out = combine(&Scalar::one(), &a, &Scalar::int(-1), &a);
        assert!(out.is_zero());
    }

    #[test]
    fn combine_rational_addition() {
        let half = LinearCombination::term("t".to_string(), Scalar::new(1, 2));
        let out = combine(&Scalar::one(), &half, &Scalar::one(), &half);
        assert_eq!(out, lc(&[("t", 1)]));
    }

    #[test]
    fn combine_scaling() {
        let a = lc(&[("t", 1), ("u", 3)]);
        let b = lc(&[("u", 5)]);
        let out = combine(&Scalar::int(2), &a, &Scalar::zero(), &b);
        assert_eq!(out, lc(&[("t", 2), ("u", 6)]));
    }

    #[test]
    fn bilinear_zero_annihilates() {
        let zero: LinearCombination<String> = LinearCombination::zero();
        let b = lc(&[("b", 4)]);
        let out = bilinear_extend(|x, y| lc(&[(&format!("{x}{y}"), 1)]), &zero, &b);
        assert!(out.is_zero());
    }

    #[test]
    fn bilinear_singletons_and_scalars() {
        let a = lc(&[("a", 2)]);
        let b = lc(&[("b", 3)]);
        let out = bilinear_extend(|x, y| lc(&[(&format!("{x}{y}"), 1)]), &a, &b);
        assert_eq!(out, lc(&[("ab", 6)]));
    }

    fn deconcat_chars(w: &Word<char>) -> TensorCombination<Word<char>> {
        let mut out = TensorCombination::zero(2);
        for i in 0..=w.len() {
            let (l, r) = w.split_at(i);
            out.add_term(vec![l, r], Scalar::one());
        }
        out
    }

    #[test]
    fn iterate_coproduct_identity_at_one() {
        let a = LinearCombination::single(Word::new(vec!['X', 'Y']));
        let t = iterate_coproduct(deconcat_chars, &a, 1);
        assert_eq!(t, TensorCombination::from_linear(&a));
    }

    #[test]
    fn iterate_coproduct_two_fold_word() {
        let xy = Word::new(vec!['X', 'Y']);
        let t = iterate_coproduct(deconcat_chars, &LinearCombination::single(xy.clone()), 2);
        let mut expect = TensorCombination::zero(2);
        expect.add_term(vec![xy.clone(), Word::one()], Scalar::one());
        expect.add_term(vec![Word::single('X'), Word::single('Y')], Scalar::one());
        expect.add_term(vec![Word::one(), xy], Scalar::one());
        assert_eq!(t, expect);
    }

    #[test]
    fn iterate_coproduct_three_fold_letter() {
        let x = Word::single('X');
        let t = iterate_coproduct(deconcat_chars, &LinearCombination::single(x.clone()), 3);
        let one = Word::<char>::one;
        let mut expect = TensorCombination::zero(3);
        expect.add_term(vec![x.clone(), one(), one()], Scalar::one());
        expect.add_term(vec![one(), x.clone(), one()], Scalar::one());
        expect.add_term(vec![one(), one(), x], Scalar::one());
        assert_eq!(t, expect);
    }

    #[test]
    fn expand_component_bracketings_agree() {
        let w = Word::new(vec!['X', 'Y', 'Z']);
        let d = iterate_coproduct(deconcat_chars, &LinearCombination::single(w), 2);
        let left = d.expand_component(0, deconcat_chars);
        let right = d.expand_component(1, deconcat_chars);
        assert_eq!(left, right);
    }

    #[test]
    fn smonomial_sorts_and_multiplies() {
        let m = SMonomial::new(vec!["c".to_string(), "a".to_string(), "b".to_string()]);
        assert_eq!(m.factors(), &["a", "b", "c"]);
        let n = SMonomial::single("b".to_string());
        assert_eq!(m.mul(&n).factors(), &["a", "b", "b", "c"]);
        assert_eq!(m.runs().len(), 3);
    }
}
