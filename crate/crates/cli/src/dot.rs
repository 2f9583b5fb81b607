//! DOT rendering of combinations of forests: one digraph per monomial,
//! its coefficient in a leading comment, roots on the bottom rank, node
//! labels carrying the colors. Planar mode pins child order through
//! `ordering="out"` and edge emission order.

use prelie_hopf_core::planar::{PlanarForest, PlanarTree};
use prelie_hopf_core::tree::{Forest, RootedTree};
use prelie_hopf_core::Scalar;

pub fn render_symmetric(monomials: &[(Forest, Scalar)]) -> String {
    let mut out = String::new();
    for (idx, (forest, coef)) in monomials.iter().enumerate() {
        out.push_str(&format!("// coefficient {coef}\n"));
        out.push_str(&format!("digraph m{idx} {{\n"));
        out.push_str("  rankdir=BT;\n  node [shape=circle];\n");
        let mut next = 0usize;
        for tree in forest.trees() {
            emit_tree(tree, &mut next, None, &mut out);
        }
        if forest.is_one() {
            out.push_str("  // empty forest\n");
        }
        out.push_str("}\n");
    }
    out
}

fn emit_tree(t: &RootedTree, next: &mut usize, parent: Option<usize>, out: &mut String) {
    let id = *next;
    *next += 1;
    out.push_str(&format!("  v{id} [label=\"{}\"];\n", t.color()));
    if let Some(p) = parent {
        out.push_str(&format!("  v{p} -> v{id};\n"));
    }
    for c in t.children() {
        emit_tree(c, next, Some(id), out);
    }
}

pub fn render_planar(monomials: &[(PlanarForest, Scalar)]) -> String {
    let mut out = String::new();
    for (idx, (word, coef)) in monomials.iter().enumerate() {
        out.push_str(&format!("// coefficient {coef}\n"));
        out.push_str(&format!("digraph m{idx} {{\n"));
        out.push_str("  rankdir=BT;\n  node [shape=circle, ordering=\"out\"];\n");
        let mut next = 0usize;
        for tree in word.letters() {
            emit_planar(tree, &mut next, None, &mut out);
        }
        if word.is_one() {
            out.push_str("  // empty word\n");
        }
        out.push_str("}\n");
    }
    out
}

fn emit_planar(t: &PlanarTree, next: &mut usize, parent: Option<usize>, out: &mut String) {
    let id = *next;
    *next += 1;
    out.push_str(&format!("  v{id} [label=\"{}\"];\n", t.color()));
    if let Some(p) = parent {
        out.push_str(&format!("  v{p} -> v{id};\n"));
    }
    for c in t.children() {
        emit_planar(c, next, Some(id), out);
    }
}
