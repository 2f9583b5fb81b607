//! Exact-arithmetic pre-Lie and Hopf algebra computations on colored
//! rooted trees, with the planar/brace-algebra counterpart on ordered
//! trees.
//!
//! The layers, bottom up:
//!
//! * [`scalar`], [`linear`] — rational coefficients, formal sums, tensor
//!   components, multiset monomials and ordered words;
//! * [`tree`] — canonical unordered colored rooted trees and forests,
//!   grafting, enumeration, symmetry factors, text format;
//! * [`prelie`] — the pre-Lie contract, the free instance on trees,
//!   structure-constant instances, the universal morphism;
//! * [`sym_hopf`] — the symmetric coalgebra over a pre-Lie algebra:
//!   circle and star products, antipode, symmetric braces;
//! * [`connes_kreimer`] — root attachment/removal, the Connes-Kreimer
//!   coproduct with an admissible-cut oracle, and its duality with star;
//! * [`planar`] — planar rooted trees, the sector order, sector grafting,
//!   and the combinatorial brace product;
//! * [`tensor_hopf`] — the tensor coalgebra over a brace algebra: star
//!   product, Foissy coproduct, antipode;
//! * [`laws`] — executable identity suites over degree-capped bases.

pub mod connes_kreimer;
pub mod laws;
pub mod linear;
pub mod planar;
pub mod prelie;
pub mod scalar;
pub mod sym_hopf;
pub mod tensor_hopf;
pub mod tree;

pub use linear::{LinearCombination, SMonomial, TensorCombination, Word};
pub use scalar::Scalar;
pub use tree::{Color, Forest, RootedTree};
