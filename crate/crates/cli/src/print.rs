//! Canonical text rendering. Terms are ordered by a graded key (total
//! degree, then number of factors, then the wire encoding) so output is
//! stable across runs; two-fold tensors list the `X ⊗ 1` group first,
//! then `1 ⊗ X`, then the mixed terms.

use prelie_hopf_core::linear::{LinearCombination, TensorCombination};
use prelie_hopf_core::planar::{format_planar_forest, planar_forest_degree, PlanarForest};
use prelie_hopf_core::tree::{format_forest, Forest};
use prelie_hopf_core::Scalar;

/// A monomial shape the printer understands: some notion of degree and
/// factor count plus the wire encoding, with the unit printing as `1`.
pub trait Printable: Ord + Clone {
    fn graded_key(&self) -> (usize, usize, String);
    fn body(&self) -> String;
    fn is_unit(&self) -> bool;
}

impl Printable for Forest {
    fn graded_key(&self) -> (usize, usize, String) {
        (self.degree(), self.len(), format_forest(self))
    }

    fn body(&self) -> String {
        if self.is_one() {
            "1".to_string()
        } else {
            format_forest(self)
        }
    }

    fn is_unit(&self) -> bool {
        self.is_one()
    }
}

impl Printable for PlanarForest {
    fn graded_key(&self) -> (usize, usize, String) {
        (planar_forest_degree(self), self.len(), format_planar_forest(self))
    }

    fn body(&self) -> String {
        if self.is_one() {
            "1".to_string()
        } else {
            format_planar_forest(self)
        }
    }

    fn is_unit(&self) -> bool {
        self.is_one()
    }
}

/// Renders a combination as `c1 m1 + c2 m2 - ...`, coefficients always
/// written, the zero combination as `0`.
pub fn render_combination<B: Printable>(c: &LinearCombination<B>) -> String {
    if c.is_zero() {
        return "0".to_string();
    }
    let mut terms: Vec<(&B, &Scalar)> = c.iter().collect();
    terms.sort_by_key(|(b, _)| b.graded_key());
    let mut out = String::new();
    for (i, (b, coef)) in terms.iter().enumerate() {
        if i == 0 {
            if coef.is_negative() {
                out.push('-');
            }
        } else if coef.is_negative() {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        out.push_str(&coef.abs().to_string());
        out.push(' ');
        out.push_str(&b.body());
    }
    out
}

/// Renders a two-fold tensor; unit coefficients are left implicit.
pub fn render_tensor<B: Printable>(t: &TensorCombination<B>) -> String {
    assert_eq!(t.arity(), 2, "only two-fold tensors are printed");
    if t.is_zero() {
        return "0".to_string();
    }
    let mut terms: Vec<(&Vec<B>, &Scalar)> = t.iter().collect();
    let group = |key: &Vec<B>| -> usize {
        if key[1].is_unit() {
            0
        } else if key[0].is_unit() {
            1
        } else {
            2
        }
    };
    terms.sort_by_key(|(key, _)| {
        (group(key), key[0].graded_key(), key[1].graded_key())
    });
    let mut out = String::new();
    for (i, (key, coef)) in terms.iter().enumerate() {
        if i == 0 {
            if coef.is_negative() {
                out.push('-');
            }
        } else if coef.is_negative() {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        let mag = coef.abs();
        if !mag.is_one() {
            out.push_str(&mag.to_string());
            out.push(' ');
        }
        out.push_str(&key[0].body());
        out.push('⊗');
        out.push_str(&key[1].body());
    }
    out
}
