//! A small textual language for describing rings, ideals, modules,
//! homomorphisms and multiplicative sets, with a recursive-descent parser
//! and an evaluator that dispatches to the construction module.

pub mod ast;
pub mod eval;
pub mod parse;

pub use ast::{Ast, AstKind, GenLit, HomSpec, Span};
pub use eval::{eval_ideal_on, eval_ring, eval_set, EvalError, EvalRing, RingShape};
pub use parse::{parse_ideal, parse_ring, parse_set, ParseError};
