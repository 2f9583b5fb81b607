//! The pre-Lie contract and its two shipped instances: the free pre-Lie
//! algebra on colored rooted trees (product = sum of graftings) and
//! finite-dimensional algebras given by structure constants.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::linear::{bilinear_extend, LinearCombination, SMonomial};
use crate::scalar::Scalar;
use crate::sym_hopf::circle_single;
use crate::tree::{trees_up_to, Color, Forest, ParseError, RootedTree};

/// A pre-Lie algebra presented through its basis: a circle product on
/// basis pairs (extended bilinearly everywhere else), a grading, and an
/// enumerable basis for degree-capped verification.
pub trait PreLieAlgebra {
    type Basis: Clone + Ord + fmt::Debug + fmt::Display;

    fn circle_basis(&self, x: &Self::Basis, y: &Self::Basis) -> LinearCombination<Self::Basis>;

    fn degree(&self, x: &Self::Basis) -> usize;

    /// All basis elements of degree at most `max_degree`.
    fn basis_up_to(&self, max_degree: usize) -> Vec<Self::Basis>;
}

/// Bilinear extension of the circle product to whole combinations.
pub fn circle_extend<P: PreLieAlgebra>(
    alg: &P,
    x: &LinearCombination<P::Basis>,
    y: &LinearCombination<P::Basis>,
) -> LinearCombination<P::Basis> {
    bilinear_extend(|a, b| alg.circle_basis(a, b), x, y)
}

/// `[X, Y] = X∘Y − Y∘X`.
pub fn lie_bracket<P: PreLieAlgebra>(
    alg: &P,
    x: &LinearCombination<P::Basis>,
    y: &LinearCombination<P::Basis>,
) -> LinearCombination<P::Basis> {
    circle_extend(alg, x, y).sub(&circle_extend(alg, y, x))
}

/// The free pre-Lie algebra on colored rooted trees.
pub struct FreePreLie {
    colors: Vec<Color>,
}

impl FreePreLie {
    pub fn new(colors: Vec<Color>) -> Self {
        assert!(!colors.is_empty());
        FreePreLie { colors }
    }

    pub fn single_color() -> Self {
        FreePreLie::new(vec![Color::new("a")])
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }
}

impl PreLieAlgebra for FreePreLie {
    type Basis = RootedTree;

    fn circle_basis(&self, x: &RootedTree, y: &RootedTree) -> LinearCombination<RootedTree> {
        free_circle(x, y)
    }

    fn degree(&self, x: &RootedTree) -> usize {
        x.vertex_count()
    }

    fn basis_up_to(&self, max_degree: usize) -> Vec<RootedTree> {
        trees_up_to(max_degree, &self.colors)
    }
}

/// The grafting product: the sum of `t1` with `t2` grafted below each
/// vertex, with multiplicities collected on coinciding canonical forms.
pub fn free_circle(t1: &RootedTree, t2: &RootedTree) -> LinearCombination<RootedTree> {
    let mut out = LinearCombination::zero();
    for v in 0..t1.vertex_count() {
        out.add_term(t1.graft_at(v, t2).expect("vertex in range"), Scalar::one());
    }
    out
}

/// Multi-grafting of a sequence of trees on a forest: the sum over all
/// assignments of each tree to a vertex of `a`.
pub fn corolla_graft(a: &Forest, ts: &[RootedTree]) -> LinearCombination<Forest> {
    let n = ts.len();
    let vertices = a.degree();
    let mut out = LinearCombination::zero();
    if n == 0 {
        out.add_term(a.clone(), Scalar::one());
        return out;
    }
    if vertices == 0 {
        return out;
    }
    let mut choice = vec![0usize; n];
    loop {
        let inserts: Vec<(usize, &RootedTree)> =
            choice.iter().zip(ts.iter()).map(|(&v, t)| (v, t)).collect();
        out.add_term(a.forest_graft_multi(&inserts), Scalar::one());
        // odometer over |a|^n
        let mut i = 0;
        loop {
            if i == n {
                return out;
            }
            choice[i] += 1;
            if choice[i] < vertices {
                break;
            }
            choice[i] = 0;
            i += 1;
        }
    }
}

/// The unique pre-Lie morphism out of the free algebra determined by a
/// map of generators, evaluated on one tree.
///
/// A tree is read as its root color applied to the multiset of branches;
/// the image is `f(root) ∘ φ(branch_1)⋯φ(branch_n)` in the target.
pub fn universal_morphism_apply<P: PreLieAlgebra>(
    f: &BTreeMap<Color, LinearCombination<P::Basis>>,
    t: &RootedTree,
    target: &P,
) -> Result<LinearCombination<P::Basis>, UnknownColor> {
    let root_image = f
        .get(t.color())
        .ok_or_else(|| UnknownColor(t.color().clone()))?
        .clone();
    let branch_images: Vec<LinearCombination<P::Basis>> = t
        .children()
        .iter()
        .map(|b| universal_morphism_apply(f, b, target))
        .collect::<Result<_, _>>()?;

    // expand f(root) and every branch image multilinearly
    let mut out = LinearCombination::zero();
    let mut stack: Vec<(Vec<P::Basis>, Scalar)> = vec![(Vec::new(), Scalar::one())];
    for img in &branch_images {
        let mut next = Vec::new();
        for (prefix, coef) in &stack {
            for (b, c) in img.iter() {
                let mut p = prefix.clone();
                p.push(b.clone());
                next.push((p, coef * c));
            }
        }
        stack = next;
    }
    for (root, rc) in root_image.iter() {
        for (branches, bc) in &stack {
            let arg = SMonomial::new(branches.clone());
            let value = circle_single(target, root, &arg);
            for (b, c) in value.iter() {
                out.add_term(b.clone(), &(rc * bc) * c);
            }
        }
    }
    Ok(out)
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct UnknownColor(pub Color);

impl fmt::Display for UnknownColor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "color {} is not in the domain of the generator map", self.0)
    }
}

impl std::error::Error for UnknownColor {}

/// A finite-dimensional algebra `e_i ∘ e_j = Σ_k c[i][j][k] e_k` given by
/// a dense table of structure constants.
#[derive(Clone, Debug)]
pub struct StructureConstantPreLie {
    dim: usize,
    constants: Vec<Scalar>,
}

impl StructureConstantPreLie {
    pub fn new(dim: usize, entries: impl IntoIterator<Item = (usize, usize, usize, Scalar)>) -> Self {
        assert!(dim >= 1);
        let mut constants = vec![Scalar::zero(); dim * dim * dim];
        for (i, j, k, c) in entries {
            assert!(i < dim && j < dim && k < dim, "structure constant index out of range");
            constants[(i * dim + j) * dim + k] = c;
        }
        StructureConstantPreLie { dim, constants }
    }

    /// The one-dimensional algebra with `e∘e = e`.
    pub fn idempotent_line() -> Self {
        StructureConstantPreLie::new(1, [(0, 0, 0, Scalar::one())])
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn constant(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.constants[(i * self.dim + j) * self.dim + k]
    }

    /// Checks the pre-Lie identity on every basis triple; reports the
    /// first violating `(i, j, k)` if any.
    pub fn check(&self) -> Result<(), (usize, usize, usize)> {
        for i in 0..self.dim {
            for j in 0..self.dim {
                for k in 0..self.dim {
                    let x = LinearCombination::single(i);
                    let y = LinearCombination::single(j);
                    let z = LinearCombination::single(k);
                    let lhs = circle_extend(self, &x, &circle_extend(self, &y, &z))
                        .sub(&circle_extend(self, &circle_extend(self, &x, &y), &z));
                    let rhs = circle_extend(self, &x, &circle_extend(self, &z, &y))
                        .sub(&circle_extend(self, &circle_extend(self, &x, &z), &y));
                    if lhs != rhs {
                        return Err((i, j, k));
                    }
                }
            }
        }
        Ok(())
    }
}

impl PreLieAlgebra for StructureConstantPreLie {
    type Basis = usize;

    fn circle_basis(&self, x: &usize, y: &usize) -> LinearCombination<usize> {
        let mut out = LinearCombination::zero();
        for k in 0..self.dim {
            out.add_term(k, self.constant(*x, *y, k).clone());
        }
        out
    }

    fn degree(&self, _x: &usize) -> usize {
        1
    }

    fn basis_up_to(&self, max_degree: usize) -> Vec<usize> {
        if max_degree == 0 {
            return Vec::new();
        }
        (0..self.dim).collect()
    }
}

/// Reads the plain-text table format: a `dim n` header, then one
/// `i j k num/den` line per nonzero constant (1-based indices).
impl FromStr for StructureConstantPreLie {
    type Err = ParseError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let mut dim: Option<usize> = None;
        let mut entries = Vec::new();
        let mut offset = 0;
        for line in text.lines() {
            let line_start = offset;
            offset += line.len() + 1;
            let trimmed = line.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let fields: Vec<&str> = trimmed.split_whitespace().collect();
            match dim {
                None => {
                    if fields.len() != 2 || fields[0] != "dim" {
                        return Err(ParseError {
                            position: line_start,
                            message: "expected header line: dim <n>".to_string(),
                        });
                    }
                    let n: usize = fields[1].parse().map_err(|_| ParseError {
                        position: line_start,
                        message: format!("bad dimension {:?}", fields[1]),
                    })?;
                    if n == 0 {
                        return Err(ParseError {
                            position: line_start,
                            message: "dimension must be positive".to_string(),
                        });
                    }
                    dim = Some(n);
                }
                Some(n) => {
                    if fields.len() != 4 {
                        return Err(ParseError {
                            position: line_start,
                            message: "expected: i j k num/den".to_string(),
                        });
                    }
                    let parse_idx = |s: &str| -> Result<usize, ParseError> {
                        let v: usize = s.parse().map_err(|_| ParseError {
                            position: line_start,
                            message: format!("bad index {s:?}"),
                        })?;
                        if v == 0 || v > n {
                            return Err(ParseError {
                                position: line_start,
                                message: format!("index {v} out of range 1..={n}"),
                            });
                        }
                        Ok(v - 1)
                    };
                    let i = parse_idx(fields[0])?;
                    let j = parse_idx(fields[1])?;
                    let k = parse_idx(fields[2])?;
                    let c: Scalar = fields[3].parse().map_err(|e| ParseError {
                        position: line_start,
                        message: e,
                    })?;
                    entries.push((i, j, k, c));
                }
            }
        }
        match dim {
            Some(n) => Ok(StructureConstantPreLie::new(n, entries)),
            None => Err(ParseError { position: 0, message: "missing dim header".to_string() }),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tree::parse_tree;

    fn t(s: &str) -> RootedTree {
        parse_tree(s).unwrap()
    }

    fn single(s: &str) -> LinearCombination<RootedTree> {
        LinearCombination::single(t(s))
    }

    #[test]
    fn free_circle_examples() {
        assert_eq!(free_circle(&t("a"), &t("a")), single("a[a]"));
        let got = free_circle(&t("a[a]"), &t("a"));
        let expect = single("a[a a]").add(&single("a[a[a]]"));
        assert_eq!(got, expect);
    }

    #[test]
    fn associator_of_three_leaves() {
        // (a∘a)∘a − a∘(a∘a): the chains cancel, the cherry survives
        let alg = FreePreLie::single_color();
        let leaf = single("a");
        let lhs = circle_extend(&alg, &circle_extend(&alg, &leaf, &leaf), &leaf);
        let rhs = circle_extend(&alg, &leaf, &circle_extend(&alg, &leaf, &leaf));
        assert_eq!(lhs.sub(&rhs), single("a[a a]"));
    }

    #[test]
    fn corolla_graft_examples() {
        let leaf = t("a");
        let single_vertex = Forest::single(leaf.clone());
        let got = corolla_graft(&single_vertex, &[leaf.clone(), leaf.clone()]);
        assert_eq!(got, LinearCombination::single(Forest::single(t("a[a a]"))));

        assert!(corolla_graft(&Forest::one(), std::slice::from_ref(&leaf)).is_zero());

        let pair = Forest::new(vec![leaf.clone(), leaf.clone()]);
        let got = corolla_graft(&pair, std::slice::from_ref(&leaf));
        let expect = LinearCombination::term(
            Forest::new(vec![t("a[a]"), t("a")]),
            Scalar::int(2),
        );
        assert_eq!(got, expect);
    }

    #[test]
    fn bracket_is_alternating_and_two_colored() {
        let alg = FreePreLie::new(vec![Color::new("a"), Color::new("b")]);
        let a = single("a");
        let b = single("b");
        assert!(lie_bracket(&alg, &a, &a).is_zero());
        let got = lie_bracket(&alg, &a, &b);
        let expect = single("a[b]").sub(&single("b[a]"));
        assert_eq!(got, expect);
    }

    #[test]
    fn jacobi_for_a_small_triple() {
        let alg = FreePreLie::single_color();
        let x = single("a");
        let y = single("a[a]");
        let z = single("a");
        let j = lie_bracket(&alg, &x, &lie_bracket(&alg, &y, &z))
            .add(&lie_bracket(&alg, &y, &lie_bracket(&alg, &z, &x)))
            .add(&lie_bracket(&alg, &z, &lie_bracket(&alg, &x, &y)));
        assert!(j.is_zero());
    }

    #[test]
    fn universal_morphism_identity_fixes_trees() {
        let alg = FreePreLie::single_color();
        let mut f = BTreeMap::new();
        f.insert(Color::new("a"), single("a"));
        for tree in trees_up_to(5, &[Color::new("a")]) {
            let img = universal_morphism_apply(&f, &tree, &alg).unwrap();
            assert_eq!(img, LinearCombination::single(tree.clone()), "tree {tree}");
        }
    }

    #[test]
    fn universal_morphism_into_idempotent_line() {
        let alg = StructureConstantPreLie::idempotent_line();
        let mut f = BTreeMap::new();
        f.insert(Color::new("a"), LinearCombination::single(0usize));
        let img = universal_morphism_apply(&f, &t("a[a]"), &alg).unwrap();
        assert_eq!(img, LinearCombination::single(0usize));
        let img = universal_morphism_apply(&f, &t("a[a a]"), &alg).unwrap();
        assert!(img.is_zero());
    }

    #[test]
    fn universal_morphism_unknown_color() {
        let alg = FreePreLie::single_color();
        let f = BTreeMap::new();
        assert!(universal_morphism_apply(&f, &t("a"), &alg).is_err());
    }

    #[test]
    fn structure_constant_checks() {
        assert!(StructureConstantPreLie::idempotent_line().check().is_ok());

        // a commutative associative product is pre-Lie
        let sym = StructureConstantPreLie::new(
            2,
            [
                (0, 0, 0, Scalar::one()),
                (0, 1, 1, Scalar::one()),
                (1, 0, 1, Scalar::one()),
                (1, 1, 0, Scalar::one()),
            ],
        );
        assert!(sym.check().is_ok());

        // e1∘e2 = e1, everything else zero: associator stays symmetric
        let skew = StructureConstantPreLie::new(2, [(0, 1, 0, Scalar::one())]);
        assert!(skew.check().is_ok());

        // e1∘e1 = e2, e2∘e1 = e1 violates the identity
        let bad = StructureConstantPreLie::new(
            2,
            [(0, 0, 1, Scalar::one()), (1, 0, 0, Scalar::one())],
        );
        assert!(bad.check().is_err());
    }

    #[test]
    fn structure_constant_parsing() {
        let text = "dim 2\n1 2 1 1\n2 2 2 -1/2\n";
        let alg: StructureConstantPreLie = text.parse().unwrap();
        assert_eq!(alg.dim(), 2);
        assert_eq!(*alg.constant(0, 1, 0), Scalar::one());
        assert_eq!(*alg.constant(1, 1, 1), Scalar::new(-1, 2));
        assert!("dim 0".parse::<StructureConstantPreLie>().is_err());
        assert!("dim 2\n3 1 1 1".parse::<StructureConstantPreLie>().is_err());
    }
}
