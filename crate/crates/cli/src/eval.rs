//! Mode-specific evaluation of parsed expressions.
//!
//! In symmetric mode values live in the symmetric algebra of unordered
//! forests (circle and star products, unshuffle and Connes-Kreimer
//! coproducts); in planar mode they live in the tensor algebra of words
//! of planar trees (star product, deconcatenation and Foissy
//! coproducts, braces along sectors).

use std::collections::BTreeSet;
use std::fmt;

use prelie_hopf_core::connes_kreimer::{b_plus, ck_coproduct};
use prelie_hopf_core::linear::{tensor_product, LinearCombination, TensorCombination, Word};
use prelie_hopf_core::planar::{parse_planar_forest, planar_brace, PlanarBraces, PlanarForest};
use prelie_hopf_core::prelie::FreePreLie;
use prelie_hopf_core::sym_hopf::{antipode, circle, circle_single, star, unshuffle_element};
use prelie_hopf_core::tensor_hopf::{
    antipode_tensor, b_plus_planar, deconcat, foissy_coproduct, star_tensor,
};
use prelie_hopf_core::tree::{is_valid_color, parse_forest, Color, Forest};
use prelie_hopf_core::Scalar;

use crate::expr::{Expr, Func, ProductOp};

/// An evaluated expression: a combination of monomials or a two-fold
/// tensor of them.
pub enum Value<M: Ord> {
    Element(LinearCombination<M>),
    Tensor(TensorCombination<M>),
}

pub type SymValue = Value<Forest>;
pub type PlanarValue = Value<PlanarForest>;

#[derive(Clone, Debug)]
pub struct EvalError(pub String);

impl fmt::Display for EvalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for EvalError {}

fn err<T>(msg: impl Into<String>) -> Result<T, EvalError> {
    Err(EvalError(msg.into()))
}

fn scan_text(text: &str, out: &mut BTreeSet<String>) {
    let mut token = String::new();
    for c in text.chars().chain(" ".chars()) {
        if c.is_ascii_alphanumeric() || c == '_' {
            token.push(c);
        } else if !token.is_empty() {
            out.insert(std::mem::take(&mut token));
        }
    }
}

/// Colors an expression mentions, for validating against `--colors`.
pub fn collect_colors(expr: &Expr, out: &mut BTreeSet<String>) {
    match expr {
        Expr::Sum(terms) => {
            for (_, e) in terms {
                collect_colors(e, out);
            }
        }
        Expr::Product(a, _, b) => {
            collect_colors(a, out);
            collect_colors(b, out);
        }
        Expr::Call(_, inner) => collect_colors(inner, out),
        Expr::Brace(inner, forest) => {
            collect_colors(inner, out);
            scan_text(forest, out);
        }
        Expr::BPlus(color, forest) => {
            scan_text(color, out);
            scan_text(forest, out);
        }
        Expr::Literal(text) => scan_text(text, out),
        Expr::Unit => {}
    }
}

impl<M: Ord + Clone> Value<M> {
    fn scale_add(self, coef: &Scalar, acc: &mut Option<Value<M>>) -> Result<(), EvalError> {
        let scaled = match self {
            Value::Element(e) => Value::Element(e.scale(coef)),
            Value::Tensor(t) => Value::Tensor(t.scale(coef)),
        };
        match (acc.take(), scaled) {
            (None, v) => *acc = Some(v),
            (Some(Value::Element(a)), Value::Element(b)) => {
                *acc = Some(Value::Element(a.add(&b)))
            }
            (Some(Value::Tensor(a)), Value::Tensor(b)) => *acc = Some(Value::Tensor(a.add(&b))),
            _ => return err("cannot add an element to a tensor"),
        }
        Ok(())
    }
}

pub fn eval_symmetric(expr: &Expr) -> Result<SymValue, EvalError> {
    let alg = FreePreLie::single_color();
    match expr {
        Expr::Unit => Ok(Value::Element(LinearCombination::single(Forest::one()))),
        Expr::Literal(text) => {
            let forest = parse_forest(text).map_err(|e| EvalError(e.to_string()))?;
            Ok(Value::Element(LinearCombination::single(forest)))
        }
        Expr::Sum(terms) => {
            let mut acc: Option<SymValue> = None;
            for (coef, e) in terms {
                eval_symmetric(e)?.scale_add(coef, &mut acc)?;
            }
            acc.map_or_else(|| err("empty expression"), Ok)
        }
        Expr::Product(a, op, b) => {
            let (a, b) = (eval_symmetric(a)?, eval_symmetric(b)?);
            let (a, b) = match (a, b) {
                (Value::Element(a), Value::Element(b)) => (a, b),
                _ => return err("products apply to elements, not tensors"),
            };
            match op {
                ProductOp::Circle => Ok(Value::Element(circle(&alg, &a, &b))),
                ProductOp::Star => Ok(Value::Element(star(&alg, &a, &b))),
                ProductOp::Tensor => Ok(Value::Tensor(tensor_product(&a, &b))),
            }
        }
        Expr::Call(func, inner) => {
            let inner = match eval_symmetric(inner)? {
                Value::Element(e) => e,
                Value::Tensor(_) => return err("coproducts and antipodes apply to elements"),
            };
            match func {
                Func::Unshuffle => Ok(Value::Tensor(unshuffle_element(&inner))),
                Func::CkCoproduct => {
                    let mut out = TensorCombination::zero(2);
                    for (f, c) in inner.iter() {
                        for (key, k) in ck_coproduct(f).iter() {
                            out.add_term(key.clone(), c * k);
                        }
                    }
                    Ok(Value::Tensor(out))
                }
                Func::FoissyCoproduct => err("fΔ needs --mode planar"),
                Func::Antipode => Ok(Value::Element(antipode(&alg, &inner))),
            }
        }
        Expr::Brace(inner, forest_text) => {
            let arg = parse_forest(forest_text).map_err(|e| EvalError(e.to_string()))?;
            let inner = match eval_symmetric(inner)? {
                Value::Element(e) => e,
                Value::Tensor(_) => return err("brace applies to elements"),
            };
            let mut out = LinearCombination::zero();
            for (forest, c) in inner.iter() {
                if forest.len() != 1 {
                    return err(format!(
                        "brace needs single trees on the left, got the monomial {forest}"
                    ));
                }
                let tree = &forest.trees()[0];
                for (t, k) in circle_single(&alg, tree, &arg).iter() {
                    out.add_term(Forest::single(t.clone()), c * k);
                }
            }
            Ok(Value::Element(out))
        }
        Expr::BPlus(color, forest_text) => {
            if !is_valid_color(color) {
                return err(format!("bad color {color:?}"));
            }
            let forest = parse_forest(forest_text).map_err(|e| EvalError(e.to_string()))?;
            let tree = b_plus(&Color::new(color.clone()), &forest);
            Ok(Value::Element(LinearCombination::single(Forest::single(tree))))
        }
    }
}

pub fn eval_planar(expr: &Expr) -> Result<PlanarValue, EvalError> {
    let alg = PlanarBraces::single_color();
    match expr {
        Expr::Unit => Ok(Value::Element(LinearCombination::single(Word::one()))),
        Expr::Literal(text) => {
            let word = parse_planar_forest(text).map_err(|e| EvalError(e.to_string()))?;
            Ok(Value::Element(LinearCombination::single(word)))
        }
        Expr::Sum(terms) => {
            let mut acc: Option<PlanarValue> = None;
            for (coef, e) in terms {
                eval_planar(e)?.scale_add(coef, &mut acc)?;
            }
            acc.map_or_else(|| err("empty expression"), Ok)
        }
        Expr::Product(a, op, b) => {
            let (a, b) = (eval_planar(a)?, eval_planar(b)?);
            let (a, b) = match (a, b) {
                (Value::Element(a), Value::Element(b)) => (a, b),
                _ => return err("products apply to elements, not tensors"),
            };
            match op {
                ProductOp::Circle => err("∘ needs --mode symmetric"),
                ProductOp::Star => Ok(Value::Element(star_tensor(&alg, &a, &b))),
                ProductOp::Tensor => Ok(Value::Tensor(tensor_product(&a, &b))),
            }
        }
        Expr::Call(func, inner) => {
            let inner = match eval_planar(inner)? {
                Value::Element(e) => e,
                Value::Tensor(_) => return err("coproducts and antipodes apply to elements"),
            };
            match func {
                Func::Unshuffle => {
                    let mut out = TensorCombination::zero(2);
                    for (w, c) in inner.iter() {
                        for (key, k) in deconcat(w).iter() {
                            out.add_term(key.clone(), c * k);
                        }
                    }
                    Ok(Value::Tensor(out))
                }
                Func::FoissyCoproduct => {
                    let mut out = TensorCombination::zero(2);
                    for (w, c) in inner.iter() {
                        for (key, k) in foissy_coproduct(w).iter() {
                            out.add_term(key.clone(), c * k);
                        }
                    }
                    Ok(Value::Tensor(out))
                }
                Func::CkCoproduct => err("ckΔ needs --mode symmetric"),
                Func::Antipode => Ok(Value::Element(antipode_tensor(&alg, &inner))),
            }
        }
        Expr::Brace(inner, forest_text) => {
            let arg = parse_planar_forest(forest_text).map_err(|e| EvalError(e.to_string()))?;
            let inner = match eval_planar(inner)? {
                Value::Element(e) => e,
                Value::Tensor(_) => return err("brace applies to elements"),
            };
            let mut out = LinearCombination::zero();
            for (word, c) in inner.iter() {
                if word.len() != 1 {
                    return err(format!(
                        "brace needs single trees on the left, got the word {word}"
                    ));
                }
                let tree = &word.letters()[0];
                for (t, k) in planar_brace(tree, &arg).iter() {
                    out.add_term(Word::single(t.clone()), c * k);
                }
            }
            Ok(Value::Element(out))
        }
        Expr::BPlus(color, forest_text) => {
            if !is_valid_color(color) {
                return err(format!("bad color {color:?}"));
            }
            let word = parse_planar_forest(forest_text).map_err(|e| EvalError(e.to_string()))?;
            let tree = b_plus_planar(&Color::new(color.clone()), &word);
            Ok(Value::Element(LinearCombination::single(Word::single(tree))))
        }
    }
}

/// Used by `dot`: the evaluated monomials with coefficients, symmetric mode.
pub fn symmetric_monomials(v: &SymValue) -> Result<Vec<(Forest, Scalar)>, EvalError> {
    match v {
        Value::Element(e) => {
            Ok(e.iter().map(|(m, c)| (m.clone(), c.clone())).collect())
        }
        Value::Tensor(_) => err("dot renders combinations of forests, not tensors"),
    }
}

pub fn planar_monomials(v: &PlanarValue) -> Result<Vec<(PlanarForest, Scalar)>, EvalError> {
    match v {
        Value::Element(e) => {
            Ok(e.iter().map(|(m, c)| (m.clone(), c.clone())).collect())
        }
        Value::Tensor(_) => err("dot renders combinations of forests, not tensors"),
    }
}
