//! Colored planar rooted trees: ordered children, the total order on
//! grafting sectors, grafting along sectors, and the combinatorial brace
//! product (the sum over non-decreasing assignments of the argument word
//! to sectors).

use std::fmt;

use crate::linear::{LinearCombination, Word};
use crate::scalar::Scalar;
use crate::tensor_hopf::BraceAlgebra;
use crate::tree::{is_valid_color, parse_raw_forest, Color, ParseError, RawTree};

/// A planar rooted tree: children order is significant and preserved.
#[derive(Clone)]
pub struct PlanarTree {
    color: Color,
    children: Vec<PlanarTree>,
    enc: String,
    size: usize,
}

impl PlanarTree {
    pub fn new(color: Color, children: Vec<PlanarTree>) -> Self {
        let size = 1 + children.iter().map(|c| c.size).sum::<usize>();
        let enc = {
            if children.is_empty() {
                color.as_str().to_string()
            } else {
                let mut s = String::new();
                s.push_str(color.as_str());
                s.push('[');
                for (i, c) in children.iter().enumerate() {
                    if i > 0 {
                        s.push(' ');
                    }
                    s.push_str(&c.enc);
                }
                s.push(']');
                s
            }
        };
        PlanarTree { color, children, enc, size }
    }

    pub fn leaf(color: Color) -> Self {
        PlanarTree::new(color, Vec::new())
    }

    pub fn color(&self) -> &Color {
        &self.color
    }

    pub fn children(&self) -> &[PlanarTree] {
        &self.children
    }

    pub fn vertex_count(&self) -> usize {
        self.size
    }

    pub fn encoding(&self) -> &str {
        &self.enc
    }

    /// The ordered word of branches below the root.
    pub fn branch_word(&self) -> PlanarForest {
        Word::new(self.children.clone())
    }

    pub fn arity_of(&self, vertex: usize) -> Option<usize> {
        self.locate(vertex).map(|t| t.children.len())
    }

    fn locate(&self, vertex: usize) -> Option<&PlanarTree> {
        if vertex == 0 {
            return Some(self);
        }
        let mut offset = 1;
        for c in &self.children {
            if vertex < offset + c.size {
                return c.locate(vertex - offset);
            }
            offset += c.size;
        }
        None
    }
}

impl PartialEq for PlanarTree {
    fn eq(&self, other: &Self) -> bool {
        self.enc == other.enc
    }
}

impl Eq for PlanarTree {}

impl PartialOrd for PlanarTree {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for PlanarTree {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.enc.cmp(&other.enc)
    }
}

impl std::hash::Hash for PlanarTree {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.enc.hash(state);
    }
}

impl fmt::Display for PlanarTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.enc)
    }
}

impl fmt::Debug for PlanarTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.enc)
    }
}

/// An ordered word of planar trees: a monomial of the tensor algebra.
pub type PlanarForest = Word<PlanarTree>;

pub fn planar_forest_degree(w: &PlanarForest) -> usize {
    w.letters().iter().map(|t| t.vertex_count()).sum()
}

/// A grafting slot of a planar tree. `slot < arity(vertex)` sits
/// immediately left of that child edge; `slot == arity(vertex)` is the
/// slot after all children.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Sector {
    pub vertex: usize,
    pub slot: usize,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct InvalidSector {
    pub sector: Sector,
}

impl fmt::Display for InvalidSector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid sector: vertex {} slot {}", self.sector.vertex, self.sector.slot)
    }
}

impl std::error::Error for InvalidSector {}

fn check_sector(t: &PlanarTree, s: Sector) -> Result<(), InvalidSector> {
    match t.arity_of(s.vertex) {
        Some(arity) if s.slot <= arity => Ok(()),
        _ => Err(InvalidSector { sector: s }),
    }
}

/// All sectors of `t` in their total order; a tree with `v` vertices has
/// exactly `2v − 1` of them.
pub fn sector_list(t: &PlanarTree) -> Vec<Sector> {
    let mut out = Vec::with_capacity(2 * t.vertex_count() - 1);
    fn go(t: &PlanarTree, base: usize, out: &mut Vec<Sector>) {
        let mut offset = base + 1;
        for (i, c) in t.children().iter().enumerate() {
            out.push(Sector { vertex: base, slot: i });
            go(c, offset, out);
            offset += c.vertex_count();
        }
        out.push(Sector { vertex: base, slot: t.children().len() });
    }
    go(t, 0, &mut out);
    out
}

/// Compares two sectors through the rooted-path order: each sector is
/// the path from the root to its slot, paths compare lexicographically
/// with prefixes first and left edges before right edges. Around one
/// vertex the slot left of child `i` precedes the edge to child `i`,
/// and the final slot follows every child.
pub fn sector_compare(
    t: &PlanarTree,
    s1: Sector,
    s2: Sector,
) -> Result<std::cmp::Ordering, InvalidSector> {
    check_sector(t, s1)?;
    check_sector(t, s2)?;
    let p1 = sector_path(t, s1).expect("validated");
    let p2 = sector_path(t, s2).expect("validated");
    Ok(p1.cmp(&p2))
}

/// Edge ranks along the path from the root to the sector slot: the edge
/// to child `i` ranks `2i + 1`, the slot at position `i` ranks `2i`.
fn sector_path(t: &PlanarTree, s: Sector) -> Option<Vec<usize>> {
    fn go(t: &PlanarTree, base: usize, s: Sector, path: &mut Vec<usize>) -> bool {
        if s.vertex == base {
            if s.slot > t.children().len() {
                return false;
            }
            path.push(2 * s.slot);
            return true;
        }
        let mut offset = base + 1;
        for (i, c) in t.children().iter().enumerate() {
            if s.vertex < offset + c.vertex_count() {
                path.push(2 * i + 1);
                return go(c, offset, s, path);
            }
            offset += c.vertex_count();
        }
        false
    }
    let mut path = Vec::new();
    if go(t, 0, s, &mut path) {
        Some(path)
    } else {
        None
    }
}

/// Grafts the word `w` along sector `s`: the trees become consecutive
/// children of the sector's vertex, inserted at the slot position.
pub fn graft_sector(
    t: &PlanarTree,
    s: Sector,
    w: &PlanarForest,
) -> Result<PlanarTree, InvalidSector> {
    check_sector(t, s)?;
    Ok(graft_simultaneous(t, &[(s, w.letters().to_vec())]))
}

/// Grafts several words at pairwise distinct sectors, every sector read
/// on the original tree.
fn graft_simultaneous(t: &PlanarTree, inserts: &[(Sector, Vec<PlanarTree>)]) -> PlanarTree {
    fn go(t: &PlanarTree, base: usize, inserts: &[(Sector, Vec<PlanarTree>)]) -> PlanarTree {
        let arity = t.children().len();
        let mut slots: Vec<Vec<PlanarTree>> = vec![Vec::new(); arity + 1];
        for (s, trees) in inserts {
            if s.vertex == base {
                slots[s.slot].extend(trees.iter().cloned());
            }
        }
        let mut children = Vec::new();
        let mut offset = base + 1;
        for (i, c) in t.children().iter().enumerate() {
            children.append(&mut slots[i]);
            children.push(go(c, offset, inserts));
            offset += c.vertex_count();
        }
        children.append(&mut slots[arity]);
        PlanarTree::new(t.color().clone(), children)
    }
    go(t, 0, inserts)
}

/// Iterated grafting along an assignment of word positions to sectors:
/// fibers are grafted one sector at a time, later sectors first so that
/// earlier vertex indices and slots stay valid on the partially built
/// tree. Used as the cross-check route for [`planar_brace`].
pub fn graft_fibers_iterated(t: &PlanarTree, fibers: &[(Sector, Vec<PlanarTree>)]) -> PlanarTree {
    let mut sorted = fibers.to_vec();
    sorted.sort_by_key(|(s1, _)| sector_path(t, *s1));
    let mut out = t.clone();
    for (s, trees) in sorted.iter().rev() {
        out = graft_sector(&out, *s, &Word::new(trees.clone())).expect("sector stays valid");
    }
    out
}

/// The brace product on planar trees: the sum of graftings of the word
/// over all non-decreasing maps from word positions to the sector list.
pub fn planar_brace(t: &PlanarTree, w: &PlanarForest) -> LinearCombination<PlanarTree> {
    let sectors = sector_list(t);
    let n = w.len();
    let mut out = LinearCombination::zero();
    if n == 0 {
        out.add_term(t.clone(), Scalar::one());
        return out;
    }
    // non-decreasing maps {1..n} -> sectors, as combinations with repetition
    let mut assign = vec![0usize; n];
    loop {
        let mut fibers: Vec<(Sector, Vec<PlanarTree>)> = Vec::new();
        for (pos, &sec) in assign.iter().enumerate() {
            let letter = w.letters()[pos].clone();
            match fibers.last_mut() {
                Some((s, trees)) if *s == sectors[sec] => trees.push(letter),
                _ => fibers.push((sectors[sec], vec![letter])),
            }
        }
        out.add_term(graft_simultaneous(t, &fibers), Scalar::one());

        // next non-decreasing assignment
        let mut i = n;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if assign[i] + 1 < sectors.len() {
                let v = assign[i] + 1;
                for slot in assign.iter_mut().skip(i) {
                    *slot = v;
                }
                break;
            }
        }
    }
}

/// All planar trees with exactly `n` vertices, in encoding order.
pub fn enumerate_planar(n: usize, colors: &[Color]) -> Vec<PlanarTree> {
    assert!(n >= 1);
    assert!(!colors.is_empty());
    let mut out = Vec::new();
    for word in planar_words_of_degree(n - 1, colors) {
        for c in colors {
            out.push(PlanarTree::new(c.clone(), word.letters().to_vec()));
        }
    }
    out.sort();
    out
}

/// All words of planar trees with total vertex count exactly `deg`.
pub fn planar_words_of_degree(deg: usize, colors: &[Color]) -> Vec<PlanarForest> {
    if deg == 0 {
        return vec![Word::one()];
    }
    let mut out = Vec::new();
    for first_size in 1..=deg {
        for first in enumerate_planar(first_size, colors) {
            for rest in planar_words_of_degree(deg - first_size, colors) {
                let mut letters = vec![first.clone()];
                letters.extend_from_slice(rest.letters());
                out.push(Word::new(letters));
            }
        }
    }
    out
}

pub fn planar_up_to(cap: usize, colors: &[Color]) -> Vec<PlanarTree> {
    let mut out = Vec::new();
    for n in 1..=cap {
        out.extend(enumerate_planar(n, colors));
    }
    out
}

pub fn planar_words_up_to(cap: usize, colors: &[Color]) -> Vec<PlanarForest> {
    let mut out = Vec::new();
    for d in 0..=cap {
        out.extend(planar_words_of_degree(d, colors));
    }
    out
}

/// The brace algebra of colored planar rooted trees.
pub struct PlanarBraces {
    colors: Vec<Color>,
}

impl PlanarBraces {
    pub fn new(colors: Vec<Color>) -> Self {
        assert!(!colors.is_empty());
        PlanarBraces { colors }
    }

    pub fn single_color() -> Self {
        PlanarBraces::new(vec![Color::new("a")])
    }
}

impl BraceAlgebra for PlanarBraces {
    type Basis = PlanarTree;

    fn brace(&self, x: &PlanarTree, args: &[PlanarTree]) -> LinearCombination<PlanarTree> {
        planar_brace(x, &Word::new(args.to_vec()))
    }

    fn degree(&self, x: &PlanarTree) -> usize {
        x.vertex_count()
    }

    fn basis_up_to(&self, cap: usize) -> Vec<PlanarTree> {
        planar_up_to(cap, &self.colors)
    }
}

fn raw_to_planar(raw: &RawTree) -> Result<PlanarTree, ParseError> {
    if !is_valid_color(&raw.color) {
        return Err(ParseError { position: 0, message: format!("bad color {:?}", raw.color) });
    }
    let children = raw.children.iter().map(raw_to_planar).collect::<Result<_, _>>()?;
    Ok(PlanarTree::new(Color::new(raw.color.clone()), children))
}

/// Parses a word of planar trees; children keep their written order.
pub fn parse_planar_forest(text: &str) -> Result<PlanarForest, ParseError> {
    let raws = parse_raw_forest(text)?;
    let trees = raws.iter().map(raw_to_planar).collect::<Result<Vec<_>, _>>()?;
    Ok(Word::new(trees))
}

pub fn parse_planar_tree(text: &str) -> Result<PlanarTree, ParseError> {
    let w = parse_planar_forest(text)?;
    if w.len() != 1 {
        return Err(ParseError {
            position: 0,
            message: format!("expected a single tree, got {}", w.len()),
        });
    }
    Ok(w.letters()[0].clone())
}

pub fn format_planar_forest(w: &PlanarForest) -> String {
    w.letters().iter().map(|t| t.encoding().to_string()).collect::<Vec<_>>().join(" ")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> PlanarTree {
        parse_planar_tree(s).unwrap()
    }

    fn w(s: &str) -> PlanarForest {
        parse_planar_forest(s).unwrap()
    }

    /// The seven-vertex reference tree whose thirteen sectors are pinned
    /// below in their listed order.
    fn reference_tree() -> PlanarTree {
        p("a[a[a[a] a] a[a]]")
    }

    #[test]
    fn children_order_is_significant() {
        assert_ne!(p("a[b c]"), p("a[c b]"));
        assert_eq!(w("a[b c]").len(), 1);
    }

    #[test]
    fn sector_list_examples() {
        assert_eq!(sector_list(&p("a")), vec![Sector { vertex: 0, slot: 0 }]);

        let chain = p("a[a]");
        assert_eq!(
            sector_list(&chain),
            vec![
                Sector { vertex: 0, slot: 0 },
                Sector { vertex: 1, slot: 0 },
                Sector { vertex: 0, slot: 1 },
            ]
        );

        let t = reference_tree();
        let sectors = sector_list(&t);
        assert_eq!(sectors.len(), 13);
        let expected = vec![
            Sector { vertex: 0, slot: 0 },
            Sector { vertex: 1, slot: 0 },
            Sector { vertex: 2, slot: 0 },
            Sector { vertex: 3, slot: 0 },
            Sector { vertex: 2, slot: 1 },
            Sector { vertex: 1, slot: 1 },
            Sector { vertex: 4, slot: 0 },
            Sector { vertex: 1, slot: 2 },
            Sector { vertex: 0, slot: 1 },
            Sector { vertex: 5, slot: 0 },
            Sector { vertex: 6, slot: 0 },
            Sector { vertex: 5, slot: 1 },
            Sector { vertex: 0, slot: 2 },
        ];
        assert_eq!(sectors, expected);
    }

    #[test]
    fn sector_counts() {
        for n in 1..=7 {
            for t in enumerate_planar(n, &[Color::new("a")]) {
                assert_eq!(sector_list(&t).len(), 2 * n - 1, "tree {t}");
            }
        }
    }

    #[test]
    fn sector_compare_agrees_with_list() {
        for n in 1..=5 {
            for t in enumerate_planar(n, &[Color::new("a")]) {
                let sectors = sector_list(&t);
                for (i, &s1) in sectors.iter().enumerate() {
                    for (j, &s2) in sectors.iter().enumerate() {
                        let got = sector_compare(&t, s1, s2).unwrap();
                        assert_eq!(got, i.cmp(&j), "tree {t} sectors {s1:?} {s2:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn sector_compare_rejects_invalid() {
        let t = p("a[a]");
        assert!(sector_compare(&t, Sector { vertex: 0, slot: 5 }, Sector { vertex: 0, slot: 0 })
            .is_err());
        assert!(sector_compare(&t, Sector { vertex: 9, slot: 0 }, Sector { vertex: 0, slot: 0 })
            .is_err());
    }

    #[test]
    fn graft_sector_examples() {
        // at the only slot of a leaf, a word becomes the ordered corolla
        let got = graft_sector(&p("a"), Sector { vertex: 0, slot: 0 }, &w("b c")).unwrap();
        assert_eq!(got, p("a[b c]"));

        let got = graft_sector(&p("a[b]"), Sector { vertex: 0, slot: 0 }, &w("c")).unwrap();
        assert_eq!(got, p("a[c b]"));

        let got = graft_sector(&p("a[b]"), Sector { vertex: 0, slot: 1 }, &w("c")).unwrap();
        assert_eq!(got, p("a[b c]"));

        assert!(graft_sector(&p("a"), Sector { vertex: 0, slot: 1 }, &w("c")).is_err());
    }

    #[test]
    fn graft_at_sixth_sector_of_reference_tree() {
        // sector six sits between the two subtrees under the root's first child
        let t = reference_tree();
        let sectors = sector_list(&t);
        let got = graft_sector(&t, sectors[5], &w("b b")).unwrap();
        assert_eq!(got, p("a[a[a[a] b b a] a[a]]"));
    }

    #[test]
    fn planar_brace_examples() {
        // single-vertex base: one term, the ordered corolla
        let got = planar_brace(&p("a"), &w("a[a] b"));
        assert_eq!(got, LinearCombination::single(p("a[a[a] b]")));

        let got = planar_brace(&p("a[a]"), &w("a"));
        let mut expect = LinearCombination::zero();
        expect.add_term(p("a[a a]"), Scalar::int(2));
        expect.add_term(p("a[a[a]]"), Scalar::one());
        assert_eq!(got, expect);

        // number of graftings before merging: C(2*2-1 + 2-1, 2) = 6
        let got = planar_brace(&p("a[a]"), &w("a a"));
        let total: Scalar = got.iter().fold(Scalar::zero(), |acc, (_, c)| acc + c.clone());
        assert_eq!(total, Scalar::int(6));
    }

    #[test]
    fn iterated_grafting_matches_simultaneous() {
        for t in planar_up_to(4, &[Color::new("a")]) {
            let sectors = sector_list(&t);
            let leaf = p("a");
            let extra = p("a[a]");
            for i in 0..sectors.len() {
                for j in (i + 1)..sectors.len() {
                    let fibers = vec![
                        (sectors[i], vec![leaf.clone()]),
                        (sectors[j], vec![extra.clone()]),
                    ];
                    let sim = graft_simultaneous(&t, &fibers);
                    let iter = graft_fibers_iterated(&t, &fibers);
                    assert_eq!(sim, iter, "tree {t} sectors {i} {j}");
                }
            }
        }
    }

    #[test]
    fn enumeration_counts() {
        let one = [Color::new("a")];
        let counts: Vec<usize> = (1..=5).map(|n| enumerate_planar(n, &one).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 5, 14]);

        let trees = enumerate_planar(3, &one);
        assert_eq!(trees, vec![p("a[a a]"), p("a[a[a]]")]);

        let two = [Color::new("a"), Color::new("b")];
        assert_eq!(enumerate_planar(2, &two).len(), 4);
    }

    #[test]
    fn parse_round_trip_preserves_order() {
        let forest = w("a[c b] a");
        assert_eq!(format_planar_forest(&forest), "a[c b] a");
        assert_eq!(parse_planar_forest("").unwrap(), Word::one());
    }
}
