//! Evaluation of syntax trees into rings, ideals, modules, homomorphisms
//! and multiplicative sets. Every failure carries the source span of the
//! node that caused it.

use std::sync::Arc;

use thiserror::Error;

use super::ast::{Ast, AstKind, GenLit, HomSpec, Span};
use crate::construct::{
    amalgamation, idealization, localization, product_ring, quotient_ring, ring_as_module,
    truncated_poly, Amalgamation, Idealization, ModuleTable, ProductRing,
};
use crate::elem::{ElemSet, ElementId};
use crate::ideal::{ideal_generated_by, IdealSet, MultSet};
use crate::ring::{make_zn_capped, OrderCaps, Ring, RingHom};

/// Evaluation failure, positioned at the offending node.
#[derive(Debug, Error, Clone)]
#[error("evaluation error at offset {}: {message}", span.start)]
pub struct EvalError {
    pub span: Span,
    pub message: String,
}

impl EvalError {
    fn new(span: Span, message: impl Into<String>) -> EvalError {
        EvalError {
            span,
            message: message.into(),
        }
    }

    /// Renders with line/column against the original source text.
    pub fn render(&self, text: &str) -> String {
        let mut line = 1usize;
        let mut col = 1usize;
        for (i, c) in text.char_indices() {
            if i >= self.span.start {
                break;
            }
            if c == '\n' {
                line += 1;
                col = 1;
            } else {
                col += 1;
            }
        }
        format!("evaluation error at line {line}, column {col}: {}", self.message)
    }
}

/// How an evaluated ring was built; pair-literal resolution and projection
/// homomorphisms need the construction bookkeeping, not just the tables.
#[derive(Clone)]
pub enum RingShape {
    Plain,
    Product(Arc<ProductRing>),
    Idealization(Arc<Idealization>),
    Amalgam(Arc<Amalgamation>),
}

/// A ring produced by the evaluator, with its construction shape.
#[derive(Clone)]
pub struct EvalRing {
    pub ring: Ring,
    pub shape: RingShape,
}

impl std::fmt::Debug for EvalRing {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "EvalRing({})", self.ring.label())
    }
}

/// Evaluates a ring expression under the given order caps.
pub fn eval_ring(ast: &Ast, caps: &OrderCaps) -> Result<EvalRing, EvalError> {
    match &ast.kind {
        AstKind::ZnLit(n) => {
            let ring = make_zn_capped(*n as usize, caps.direct)
                .map_err(|e| EvalError::new(ast.span, e.to_string()))?;
            Ok(EvalRing {
                ring,
                shape: RingShape::Plain,
            })
        }
        AstKind::Product(l, r) => {
            let left = eval_ring(l, caps)?;
            let right = eval_ring(r, caps)?;
            let p = product_ring(&left.ring, &right.ring, caps)
                .map_err(|e| EvalError::new(ast.span, e.to_string()))?;
            Ok(EvalRing {
                ring: Arc::clone(&p.ring),
                shape: RingShape::Product(Arc::new(p)),
            })
        }
        AstKind::Quotient(r, i) => {
            let base = eval_ring(r, caps)?;
            let ideal = eval_ideal_on(i, &base)?;
            let q = quotient_ring(&base.ring, &ideal)
                .map_err(|e| EvalError::new(i.span, e.to_string()))?;
            Ok(EvalRing {
                ring: q.ring,
                shape: RingShape::Plain,
            })
        }
        AstKind::Idealize(r, m) => {
            let base = eval_ring(r, caps)?;
            let module = eval_module(m, &base, caps)?;
            let idl = idealization(&base.ring, &module, caps)
                .map_err(|e| EvalError::new(ast.span, e.to_string()))?;
            Ok(EvalRing {
                ring: Arc::clone(&idl.ring),
                shape: RingShape::Idealization(Arc::new(idl)),
            })
        }
        AstKind::Duplicate(r, j) => {
            let base = eval_ring(r, caps)?;
            let ideal = eval_ideal_on(j, &base)?;
            let am = amalgamation(
                &base.ring,
                &base.ring,
                &RingHom::identity(&base.ring),
                &ideal,
                caps,
            )
            .map_err(|e| EvalError::new(ast.span, e.to_string()))?;
            Ok(EvalRing {
                ring: Arc::clone(&am.ring),
                shape: RingShape::Amalgam(Arc::new(am)),
            })
        }
        AstKind::Amalgam {
            base,
            host,
            hom,
            ideal,
        } => {
            let base_r = eval_ring(base, caps)?;
            let host_r = eval_ring(host, caps)?;
            let f = eval_hom(hom, &base_r, &host_r)?;
            let j = eval_ideal_on(ideal, &host_r)?;
            let am = amalgamation(&base_r.ring, &host_r.ring, &f, &j, caps)
                .map_err(|e| EvalError::new(ast.span, e.to_string()))?;
            Ok(EvalRing {
                ring: Arc::clone(&am.ring),
                shape: RingShape::Amalgam(Arc::new(am)),
            })
        }
        AstKind::Localize(r, s) => {
            let base = eval_ring(r, caps)?;
            let set = eval_set(s, &base.ring)?;
            let loc = localization(&base.ring, &set)
                .map_err(|e| EvalError::new(ast.span, e.to_string()))?;
            Ok(EvalRing {
                ring: loc.ring,
                shape: RingShape::Plain,
            })
        }
        AstKind::TruncPoly(r, k) => {
            if *k < 2 {
                return Err(EvalError::new(ast.span, "truncation degree must be ≥ 2"));
            }
            let base = eval_ring(r, caps)?;
            let p = truncated_poly(&base.ring, *k as usize, caps)
                .map_err(|e| EvalError::new(ast.span, e.to_string()))?;
            Ok(EvalRing {
                ring: p.ring,
                shape: RingShape::Plain,
            })
        }
        _ => Err(EvalError::new(ast.span, "expected a ring expression")),
    }
}

/// Evaluates an ideal literal against an evaluated ring.
pub fn eval_ideal_on(ast: &Ast, ring: &EvalRing) -> Result<IdealSet, EvalError> {
    let AstKind::IdealGen(gens) = &ast.kind else {
        return Err(EvalError::new(ast.span, "expected an ideal literal"));
    };
    let n = ring.ring.order();
    let mut elems: Vec<ElementId> = Vec::with_capacity(gens.len());
    for g in gens {
        match g {
            GenLit::Index(v) => {
                let v = *v as usize;
                if v >= n {
                    return Err(EvalError::new(
                        ast.span,
                        format!("element index {v} out of range for ring of order {n}"),
                    ));
                }
                elems.push(ElementId::new(v));
            }
            GenLit::Pair(a, b) => {
                elems.push(resolve_pair(ast.span, ring, *a as usize, *b as usize)?);
            }
        }
    }
    Ok(ideal_generated_by(&ring.ring, &elems))
}

fn resolve_pair(
    span: Span,
    ring: &EvalRing,
    a: usize,
    b: usize,
) -> Result<ElementId, EvalError> {
    match &ring.shape {
        RingShape::Product(p) => {
            if a >= p.left.order() || b >= p.right.order() {
                return Err(EvalError::new(span, "pair component out of range"));
            }
            Ok(p.element(ElementId::new(a), ElementId::new(b)))
        }
        RingShape::Idealization(idl) => {
            if a >= idl.base.order() || b >= idl.module.order() {
                return Err(EvalError::new(span, "pair component out of range"));
            }
            Ok(idl.element(ElementId::new(a), ElementId::new(b)))
        }
        RingShape::Amalgam(am) => {
            if a >= am.base.order() || b >= am.host.order() {
                return Err(EvalError::new(span, "pair component out of range"));
            }
            am.element(ElementId::new(a), ElementId::new(b))
                .ok_or_else(|| {
                    EvalError::new(span, format!("({a},{b}) is not a member of the amalgamation"))
                })
        }
        RingShape::Plain => Err(EvalError::new(
            span,
            "pair generators require a product, idealization or amalgamation",
        )),
    }
}

/// Evaluates a module expression over the already-evaluated base ring of an
/// idealization. The module's ring expression must match the base
/// syntactically so both share one table object.
fn eval_module(ast: &Ast, base: &EvalRing, _caps: &OrderCaps) -> Result<ModuleTable, EvalError> {
    let AstKind::ModuleRef { ring, order } = &ast.kind else {
        return Err(EvalError::new(ast.span, "expected a module expression"));
    };
    // Structural equality (spans ignored) ties the module to the base ring.
    let base_label = base.ring.label();
    if ring.pretty() != base_label {
        return Err(EvalError::new(
            ring.span,
            format!("module must be over the idealization base ring {base_label}"),
        ));
    }
    match order {
        None => Ok(ring_as_module(&base.ring)),
        Some(m) => crate::construct::zm_over_zn(&base.ring, *m as usize)
            .map_err(|e| EvalError::new(ast.span, e.to_string())),
    }
}

/// Builds the homomorphism named by an `amalg(...)` hom slot.
fn eval_hom(ast: &Ast, base: &EvalRing, host: &EvalRing) -> Result<RingHom, EvalError> {
    let AstKind::HomRef(spec) = &ast.kind else {
        return Err(EvalError::new(ast.span, "expected a homomorphism"));
    };
    let err = |m: String| EvalError::new(ast.span, m);
    match spec {
        HomSpec::Identity => {
            if base.ring.order() != host.ring.order() {
                return Err(err(format!(
                    "identity map needs equal orders, got {} and {}",
                    base.ring.order(),
                    host.ring.order()
                )));
            }
            RingHom::from_fn(&base.ring, &host.ring, |e| e, "id")
                .map_err(|e| err(e.to_string()))
        }
        HomSpec::Mod(m) => {
            let m = *m as usize;
            if m != host.ring.order() {
                return Err(err(format!(
                    "mod{} map must target a ring of order {}",
                    m, m
                )));
            }
            RingHom::from_fn(
                &base.ring,
                &host.ring,
                |e| ElementId::new(e.index() % m),
                format!("mod{m}"),
            )
            .map_err(|e| err(e.to_string()))
        }
        HomSpec::Proj(i) => {
            let RingShape::Product(p) = &base.shape else {
                return Err(err("proj requires a product base ring".into()));
            };
            if *i != 1 && *i != 2 {
                return Err(err("proj coordinate must be 1 or 2".into()));
            }
            let p = Arc::clone(p);
            let first = *i == 1;
            let factor_order = if first {
                p.left.order()
            } else {
                p.right.order()
            };
            if factor_order != host.ring.order() {
                return Err(err(format!(
                    "proj{} must target a ring of order {factor_order}",
                    i
                )));
            }
            RingHom::from_fn(
                &base.ring,
                &host.ring,
                move |e| {
                    let (a, b) = p.parts(e);
                    if first {
                        a
                    } else {
                        b
                    }
                },
                format!("proj{i}"),
            )
            .map_err(|e| err(e.to_string()))
        }
        HomSpec::Table(entries) => {
            if entries.len() != base.ring.order() {
                return Err(err(format!(
                    "table needs {} entries, got {}",
                    base.ring.order(),
                    entries.len()
                )));
            }
            let map: Vec<u16> = entries.iter().map(|&v| v as u16).collect();
            RingHom::validate(&base.ring, &host.ring, map, "table")
                .map_err(|e| err(e.to_string()))
        }
    }
}

/// Evaluates a set literal into a multiplicative-set candidate.
pub fn eval_set(ast: &Ast, ring: &Ring) -> Result<MultSet, EvalError> {
    let AstKind::SetLit(xs) = &ast.kind else {
        return Err(EvalError::new(ast.span, "expected a set literal"));
    };
    let n = ring.order();
    let mut s = ElemSet::empty(n);
    for &v in xs {
        let v = v as usize;
        if v >= n {
            return Err(EvalError::new(
                ast.span,
                format!("element index {v} out of range for ring of order {n}"),
            ));
        }
        s.insert(ElementId::new(v));
    }
    Ok(MultSet::new(Arc::clone(ring), s))
}
