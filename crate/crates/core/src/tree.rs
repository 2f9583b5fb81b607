//! Colored unordered rooted trees and forests.
//!
//! A tree is kept in canonical form: children are stored sorted by their
//! text encoding, so structural equality, ordering and hashing all reduce
//! to comparing encodings. The encoding doubles as the wire format:
//! `color` for a leaf, `color[child child ...]` otherwise, with forests
//! written as whitespace-separated trees.

use std::error::Error;
use std::fmt;

use crate::linear::SMonomial;

/// A vertex color: a nonempty token of letters, digits and underscores.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Color(String);

impl Color {
    /// Panics on an invalid token; parsing untrusted text goes through
    /// [`parse_forest`] instead.
    pub fn new(token: impl Into<String>) -> Self {
        let token = token.into();
        assert!(is_valid_color(&token), "invalid color token: {token:?}");
        Color(token)
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

pub fn is_valid_color(token: &str) -> bool {
    let mut chars = token.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// A colored rooted tree in canonical form.
#[derive(Clone)]
pub struct RootedTree {
    color: Color,
    children: Vec<RootedTree>,
    enc: String,
    size: usize,
}

impl RootedTree {
    /// Canonicalizes: sorts the children by encoding. Children are
    /// canonical already since they can only be built through here.
    pub fn new(color: Color, mut children: Vec<RootedTree>) -> Self {
        children.sort_by(|a, b| a.enc.cmp(&b.enc));
        let size = 1 + children.iter().map(|c| c.size).sum::<usize>();
        let enc = encode(&color, &children);
        RootedTree { color, children, enc, size }
    }

    pub fn leaf(color: Color) -> Self {
        RootedTree::new(color, Vec::new())
    }

    pub fn color(&self) -> &Color {
        &self.color
    }

    pub fn children(&self) -> &[RootedTree] {
        &self.children
    }

    pub fn vertex_count(&self) -> usize {
        self.size
    }

    pub fn encoding(&self) -> &str {
        &self.enc
    }

    /// The multiset of branches hanging off the root.
    pub fn branches(&self) -> Forest {
        SMonomial::new(self.children.clone())
    }

    /// Grafts `sub` below the vertex with depth-first index `v`
    /// (root is 0, children follow in canonical order).
    pub fn graft_at(&self, v: usize, sub: &RootedTree) -> Result<RootedTree, TreeError> {
        if v >= self.size {
            return Err(TreeError::InvalidVertex { index: v, size: self.size });
        }
        Ok(self.graft_inner(v, sub))
    }

    fn graft_inner(&self, v: usize, sub: &RootedTree) -> RootedTree {
        if v == 0 {
            let mut children = self.children.clone();
            children.push(sub.clone());
            return RootedTree::new(self.color.clone(), children);
        }
        let mut offset = 1;
        let mut children = self.children.clone();
        for child in &mut children {
            if v < offset + child.size {
                *child = child.graft_inner(v - offset, sub);
                return RootedTree::new(self.color.clone(), children);
            }
            offset += child.size;
        }
        unreachable!("vertex index checked against size");
    }

    /// Rebuilds the tree with extra children attached at the original
    /// depth-first vertex indices given by `inserts`.
    fn graft_multi(&self, inserts: &[(usize, &RootedTree)]) -> RootedTree {
        fn go(t: &RootedTree, base: usize, inserts: &[(usize, &RootedTree)]) -> RootedTree {
            let mut children: Vec<RootedTree> = Vec::with_capacity(t.children.len());
            let mut offset = base + 1;
            for child in &t.children {
                children.push(go(child, offset, inserts));
                offset += child.size;
            }
            for (v, sub) in inserts {
                if *v == base {
                    children.push((*sub).clone());
                }
            }
            RootedTree::new(t.color.clone(), children)
        }
        go(self, 0, inserts)
    }
}

fn encode(color: &Color, children: &[RootedTree]) -> String {
    if children.is_empty() {
        return color.as_str().to_string();
    }
    let mut s = String::with_capacity(color.as_str().len() + 2 + 4 * children.len());
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

impl PartialEq for RootedTree {
    fn eq(&self, other: &Self) -> bool {
        self.enc == other.enc
    }
}

impl Eq for RootedTree {}

impl PartialOrd for RootedTree {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for RootedTree {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.enc.cmp(&other.enc)
    }
}

impl std::hash::Hash for RootedTree {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.enc.hash(state);
    }
}

impl fmt::Display for RootedTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.enc)
    }
}

impl fmt::Debug for RootedTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.enc)
    }
}

/// A forest: a multiset of rooted trees, the monomial basis of the
/// symmetric algebra over trees. The empty forest is the unit.
pub type Forest = SMonomial<RootedTree>;

impl SMonomial<RootedTree> {
    pub fn trees(&self) -> &[RootedTree] {
        self.factors()
    }

    /// Total vertex count.
    pub fn degree(&self) -> usize {
        self.factors().iter().map(|t| t.vertex_count()).sum()
    }

    /// Grafts `sub` below the vertex with index `v` in the depth-first
    /// traversal of the whole forest (trees in canonical order).
    pub fn forest_graft_at(&self, v: usize, sub: &RootedTree) -> Result<Forest, TreeError> {
        let degree = self.degree();
        if v >= degree {
            return Err(TreeError::InvalidVertex { index: v, size: degree });
        }
        let mut trees = self.factors().to_vec();
        let mut offset = 0;
        for t in &mut trees {
            if v < offset + t.vertex_count() {
                *t = t.graft_at(v - offset, sub)?;
                return Ok(SMonomial::new(trees));
            }
            offset += t.vertex_count();
        }
        unreachable!("vertex index checked against degree");
    }

    /// Attaches every `(vertex, tree)` pair simultaneously; all indices
    /// refer to the original forest.
    pub fn forest_graft_multi(&self, inserts: &[(usize, &RootedTree)]) -> Forest {
        let mut trees = Vec::with_capacity(self.len());
        let mut offset = 0;
        for t in self.factors() {
            let local: Vec<(usize, &RootedTree)> = inserts
                .iter()
                .filter(|(v, _)| *v >= offset && *v < offset + t.vertex_count())
                .map(|(v, sub)| (*v - offset, *sub))
                .collect();
            trees.push(if local.is_empty() { t.clone() } else { t.graft_multi(&local) });
            offset += t.vertex_count();
        }
        SMonomial::new(trees)
    }
}

/// Order of the automorphism group of a forest: color-preserving and
/// root-preserving on each tree, with equal trees free to permute.
pub fn symmetry_factor(forest: &Forest) -> u128 {
    let mut out: u128 = 1;
    for (tree, mult) in forest.runs() {
        out *= factorial_u128(mult) * tree_symmetry(tree).pow(mult as u32);
    }
    out
}

fn tree_symmetry(t: &RootedTree) -> u128 {
    let mut out: u128 = 1;
    let branches = t.branches();
    for (child, mult) in branches.runs() {
        out *= factorial_u128(mult) * tree_symmetry(child).pow(mult as u32);
    }
    out
}

fn factorial_u128(n: usize) -> u128 {
    (2..=n as u128).product::<u128>().max(1)
}

/// All canonical trees with exactly `n` vertices over the given colors,
/// in canonical-encoding order.
pub fn enumerate_trees(n: usize, colors: &[Color]) -> Vec<RootedTree> {
    assert!(n >= 1);
    assert!(!colors.is_empty());
    let mut out = Vec::new();
    for branches in enumerate_forests(n - 1, colors) {
        for c in colors {
            out.push(RootedTree::new(c.clone(), branches.trees().to_vec()));
        }
    }
    out.sort();
    out.dedup();
    out
}

/// All canonical forests of total degree exactly `deg`.
pub fn enumerate_forests(deg: usize, colors: &[Color]) -> Vec<Forest> {
    // trees of each size up to deg, flattened in canonical order
    let mut pool: Vec<RootedTree> = Vec::new();
    for k in 1..=deg {
        pool.extend(enumerate_trees(k, colors));
    }
    pool.sort();
    let mut out = Vec::new();
    let mut acc: Vec<RootedTree> = Vec::new();
    // non-decreasing choice over the pool keeps every multiset unique
    fn go(
        pool: &[RootedTree],
        start: usize,
        remaining: usize,
        acc: &mut Vec<RootedTree>,
        out: &mut Vec<Forest>,
    ) {
        if remaining == 0 {
            out.push(SMonomial::new(acc.clone()));
            return;
        }
        for i in start..pool.len() {
            let sz = pool[i].vertex_count();
            if sz > remaining {
                continue;
            }
            acc.push(pool[i].clone());
            go(pool, i, remaining - sz, acc, out);
            acc.pop();
        }
    }
    go(&pool, 0, deg, &mut acc, &mut out);
    out.sort();
    out
}

/// All forests of total degree `0..=cap`, the empty forest first.
pub fn forests_up_to(cap: usize, colors: &[Color]) -> Vec<Forest> {
    let mut out = Vec::new();
    for d in 0..=cap {
        out.extend(enumerate_forests(d, colors));
    }
    out
}

pub fn trees_up_to(cap: usize, colors: &[Color]) -> Vec<RootedTree> {
    let mut out = Vec::new();
    for n in 1..=cap {
        out.extend(enumerate_trees(n, colors));
    }
    out
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum TreeError {
    InvalidVertex { index: usize, size: usize },
}

impl fmt::Display for TreeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TreeError::InvalidVertex { index, size } => {
                write!(f, "vertex index {index} out of range for {size} vertices")
            }
        }
    }
}

impl Error for TreeError {}

/// A parse failure, with the byte offset it happened at.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

impl ParseError {
    fn new(position: usize, message: impl Into<String>) -> Self {
        ParseError { position, message: message.into() }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at byte {}: {}", self.position, self.message)
    }
}

impl Error for ParseError {}

/// Tree text with child order as written; shared by the unordered and
/// the planar readers.
#[derive(Clone, Debug)]
pub(crate) struct RawTree {
    pub color: String,
    pub children: Vec<RawTree>,
}

pub(crate) fn parse_raw_forest(text: &str) -> Result<Vec<RawTree>, ParseError> {
    let mut parser = RawParser { bytes: text.as_bytes(), pos: 0 };
    let trees = parser.forest()?;
    parser.skip_ws();
    if parser.pos < parser.bytes.len() {
        return Err(ParseError::new(parser.pos, "unexpected trailing input"));
    }
    Ok(trees)
}

struct RawParser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> RawParser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && (self.bytes[self.pos] as char).is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn forest(&mut self) -> Result<Vec<RawTree>, ParseError> {
        let mut out = Vec::new();
        loop {
            self.skip_ws();
            match self.peek() {
                Some(c) if c.is_ascii_alphabetic() || c == b'_' => out.push(self.tree()?),
                _ => return Ok(out),
            }
        }
    }

    fn tree(&mut self) -> Result<RawTree, ParseError> {
        let start = self.pos;
        while let Some(c) = self.peek() {
            if c.is_ascii_alphanumeric() || c == b'_' {
                self.pos += 1;
            } else {
                break;
            }
        }
        let color = std::str::from_utf8(&self.bytes[start..self.pos])
            .expect("color bytes are ascii")
            .to_string();
        let mut children = Vec::new();
        if self.peek() == Some(b'[') {
            self.pos += 1;
            children = self.forest()?;
            self.skip_ws();
            match self.peek() {
                Some(b']') => self.pos += 1,
                Some(c) => {
                    return Err(ParseError::new(
                        self.pos,
                        format!("unexpected character {:?} inside brackets", c as char),
                    ))
                }
                None => return Err(ParseError::new(self.pos, "unclosed bracket")),
            }
        }
        Ok(RawTree { color, children })
    }
}

fn raw_to_canonical(raw: &RawTree) -> RootedTree {
    let children = raw.children.iter().map(raw_to_canonical).collect();
    RootedTree::new(Color::new(raw.color.clone()), children)
}

/// Parses whitespace-separated trees into a canonical forest. The empty
/// string is the empty forest.
pub fn parse_forest(text: &str) -> Result<Forest, ParseError> {
    let raws = parse_raw_forest(text)?;
    Ok(SMonomial::new(raws.iter().map(raw_to_canonical).collect()))
}

pub fn parse_tree(text: &str) -> Result<RootedTree, ParseError> {
    let forest = parse_forest(text)?;
    if forest.len() != 1 {
        return Err(ParseError::new(0, format!("expected a single tree, got {}", forest.len())));
    }
    Ok(forest.trees()[0].clone())
}

/// Canonical wire format: trees in canonical order, space separated;
/// the empty forest prints as the empty string.
pub fn format_forest(forest: &Forest) -> String {
    forest
        .trees()
        .iter()
        .map(|t| t.encoding().to_string())
        .collect::<Vec<_>>()
        .join(" ")
}
