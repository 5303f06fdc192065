//! Syntax tree for the ring-description language.
//!
//! Equality on [`Ast`] ignores source spans so that a pretty-printed and
//! reparsed tree compares equal to the original.

use std::fmt;

/// Byte range in the source text.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Span {
    pub start: usize,
    pub end: usize,
}

impl Span {
    pub fn new(start: usize, end: usize) -> Span {
        Span { start, end }
    }

    pub fn join(self, other: Span) -> Span {
        Span {
            start: self.start.min(other.start),
            end: self.end.max(other.end),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Ast {
    pub kind: AstKind,
    pub span: Span,
}

impl PartialEq for Ast {
    fn eq(&self, other: &Self) -> bool {
        self.kind == other.kind
    }
}

impl Eq for Ast {}

/// A generator literal inside `<...>`: a canonical element index, or a pair
/// for composite rings.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GenLit {
    Index(u32),
    Pair(u32, u32),
}

/// A homomorphism reference inside `amalg(...)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HomSpec {
    Identity,
    Mod(u32),
    Proj(u32),
    Table(Vec<u32>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AstKind {
    ZnLit(u32),
    Product(Box<Ast>, Box<Ast>),
    Quotient(Box<Ast>, Box<Ast>),
    Idealize(Box<Ast>, Box<Ast>),
    Duplicate(Box<Ast>, Box<Ast>),
    Amalgam {
        base: Box<Ast>,
        host: Box<Ast>,
        hom: Box<Ast>,
        ideal: Box<Ast>,
    },
    Localize(Box<Ast>, Box<Ast>),
    TruncPoly(Box<Ast>, u32),
    IdealGen(Vec<GenLit>),
    ModuleRef {
        ring: Box<Ast>,
        order: Option<u32>,
    },
    HomRef(HomSpec),
    SetLit(Vec<u32>),
}

impl Ast {
    pub fn new(kind: AstKind, span: Span) -> Ast {
        Ast { kind, span }
    }

    /// Canonical compact rendering; reparsing it yields an equal tree.
    pub fn pretty(&self) -> String {
        let mut out = String::new();
        self.render(&mut out);
        out
    }

    fn render(&self, out: &mut String) {
        match &self.kind {
            AstKind::ZnLit(n) => {
                out.push('Z');
                out.push_str(&n.to_string());
            }
            AstKind::Product(l, r) => {
                l.render(out);
                out.push('x');
                // A product on the right must be parenthesized to keep the
                // left-associative parse.
                if matches!(r.kind, AstKind::Product(_, _)) {
                    out.push('(');
                    r.render(out);
                    out.push(')');
                } else {
                    r.render(out);
                }
            }
            AstKind::Quotient(r, i) => {
                Self::render_postfix_base(r, out);
                out.push('/');
                i.render(out);
            }
            AstKind::Duplicate(r, i) => {
                Self::render_postfix_base(r, out);
                out.push_str("><");
                i.render(out);
            }
            AstKind::Idealize(r, m) => {
                Self::render_postfix_base(r, out);
                out.push_str("(+)");
                m.render(out);
            }
            AstKind::Amalgam {
                base,
                host,
                hom,
                ideal,
            } => {
                out.push_str("amalg(");
                base.render(out);
                out.push(',');
                host.render(out);
                out.push(',');
                hom.render(out);
                out.push(',');
                ideal.render(out);
                out.push(')');
            }
            AstKind::Localize(r, s) => {
                out.push_str("loc(");
                r.render(out);
                out.push(',');
                s.render(out);
                out.push(')');
            }
            AstKind::TruncPoly(r, k) => {
                out.push_str("poly(");
                r.render(out);
                out.push(',');
                out.push_str(&k.to_string());
                out.push(')');
            }
            AstKind::IdealGen(gens) => {
                out.push('<');
                for (i, g) in gens.iter().enumerate() {
                    if i > 0 {
                        out.push(',');
                    }
                    match g {
                        GenLit::Index(v) => out.push_str(&v.to_string()),
                        GenLit::Pair(a, b) => {
                            out.push('(');
                            out.push_str(&a.to_string());
                            out.push(',');
                            out.push_str(&b.to_string());
                            out.push(')');
                        }
                    }
                }
                out.push('>');
            }
            AstKind::ModuleRef { ring, order } => {
                out.push_str("mod(");
                ring.render(out);
                if let Some(m) = order {
                    out.push(',');
                    out.push_str(&m.to_string());
                }
                out.push(')');
            }
            AstKind::HomRef(h) => match h {
                HomSpec::Identity => out.push_str("id"),
                HomSpec::Mod(m) => {
                    out.push_str("mod");
                    out.push_str(&m.to_string());
                }
                HomSpec::Proj(i) => {
                    out.push_str("proj");
                    out.push_str(&i.to_string());
                }
                HomSpec::Table(t) => {
                    out.push_str("table(");
                    for (i, v) in t.iter().enumerate() {
                        if i > 0 {
                            out.push(',');
                        }
                        out.push_str(&v.to_string());
                    }
                    out.push(')');
                }
            },
            AstKind::SetLit(xs) => {
                out.push('{');
                for (i, v) in xs.iter().enumerate() {
                    if i > 0 {
                        out.push(',');
                    }
                    out.push_str(&v.to_string());
                }
                out.push('}');
            }
        }
    }

    /// Postfix operators (`/`, `><`, `(+)`) bind tighter than `x`, so a
    /// product base needs parentheses.
    fn render_postfix_base(base: &Ast, out: &mut String) {
        if matches!(base.kind, AstKind::Product(_, _)) {
            out.push('(');
            base.render(out);
            out.push(')');
        } else {
            base.render(out);
        }
    }
}

impl fmt::Display for Ast {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.pretty())
    }
}
