//! Lexer and recursive-descent parser for the ring-description language.
//!
//! Grammar (whitespace-insensitive, LL(1)):
//!
//! ```text
//! ring    := term {"x" term}                      -- left-associative
//! term    := atom {"/" ideal | "><" ideal | "(+)" module}
//! atom    := "Z" INT | "amalg(" ring "," ring "," hom "," ideal ")"
//!          | "loc(" ring "," set ")" | "poly(" ring "," INT ")" | "(" ring ")"
//! ideal   := "<" [gen {"," gen}] ">"              -- "<>" is the zero ideal
//! gen     := INT | "(" INT "," INT ")"
//! module  := "mod(" ring ["," INT] ")"
//! hom     := "id" | "mod" INT | "proj" INT | "table(" [INT {"," INT}] ")"
//! set     := "{" INT {"," INT} "}"
//! ```
//!
//! `/`, `><` and `(+)` bind tighter than `x`.

use std::fmt;

use thiserror::Error;

use super::ast::{Ast, AstKind, GenLit, HomSpec, Span};

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(u32),
    KwZ,
    KwX,
    KwId,
    KwMod,
    KwProj,
    KwTable,
    KwAmalg,
    KwLoc,
    KwPoly,
    Slash,
    Join,
    IdealizeOp,
    LParen,
    RParen,
    LAngle,
    RAngle,
    LBrace,
    RBrace,
    Comma,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Int(v) => format!("integer {v}"),
            Tok::KwZ => "'Z'".into(),
            Tok::KwX => "'x'".into(),
            Tok::KwId => "'id'".into(),
            Tok::KwMod => "'mod'".into(),
            Tok::KwProj => "'proj'".into(),
            Tok::KwTable => "'table'".into(),
            Tok::KwAmalg => "'amalg'".into(),
            Tok::KwLoc => "'loc'".into(),
            Tok::KwPoly => "'poly'".into(),
            Tok::Slash => "'/'".into(),
            Tok::Join => "'><'".into(),
            Tok::IdealizeOp => "'(+)'".into(),
            Tok::LParen => "'('".into(),
            Tok::RParen => "')'".into(),
            Tok::LAngle => "'<'".into(),
            Tok::RAngle => "'>'".into(),
            Tok::LBrace => "'{'".into(),
            Tok::RBrace => "'}'".into(),
            Tok::Comma => "','".into(),
        }
    }
}

/// Parse failure with position and the expected-token set.
#[derive(Debug, Error, Clone)]
#[error("syntax error at line {line}, column {col}: found {found}, expected {}", expected.join(" or "))]
pub struct ParseError {
    pub offset: usize,
    pub line: usize,
    pub col: usize,
    pub found: String,
    pub expected: Vec<String>,
}

fn line_col(text: &str, offset: usize) -> (usize, usize) {
    let mut line = 1;
    let mut col = 1;
    for (i, c) in text.char_indices() {
        if i >= offset {
            break;
        }
        if c == '\n' {
            line += 1;
            col = 1;
        } else {
            col += 1;
        }
    }
    (line, col)
}

struct Lexer<'a> {
    text: &'a str,
    bytes: &'a [u8],
    pos: usize,
}

const KEYWORDS: &[(&str, Tok)] = &[
    ("amalg", Tok::KwAmalg),
    ("table", Tok::KwTable),
    ("proj", Tok::KwProj),
    ("poly", Tok::KwPoly),
    ("mod", Tok::KwMod),
    ("loc", Tok::KwLoc),
    ("id", Tok::KwId),
    ("x", Tok::KwX),
    ("Z", Tok::KwZ),
];

impl<'a> Lexer<'a> {
    fn err(&self, at: usize, found: String, expected: &[&str]) -> ParseError {
        let (line, col) = line_col(self.text, at);
        ParseError {
            offset: at,
            line,
            col,
            found,
            expected: expected.iter().map(|s| s.to_string()).collect(),
        }
    }

    fn tokens(mut self) -> Result<Vec<(Tok, Span)>, ParseError> {
        let mut out = Vec::new();
        while self.pos < self.bytes.len() {
            let c = self.bytes[self.pos] as char;
            if c.is_whitespace() {
                self.pos += 1;
                continue;
            }
            let start = self.pos;
            let tok = match c {
                '0'..='9' => {
                    let mut end = self.pos;
                    while end < self.bytes.len() && self.bytes[end].is_ascii_digit() {
                        end += 1;
                    }
                    let v: u32 = self.text[start..end].parse().map_err(|_| {
                        self.err(start, "oversized integer".into(), &["integer"])
                    })?;
                    self.pos = end;
                    Tok::Int(v)
                }
                '(' => {
                    if self.bytes.get(self.pos + 1) == Some(&b'+') {
                        if self.bytes.get(self.pos + 2) == Some(&b')') {
                            self.pos += 3;
                            Tok::IdealizeOp
                        } else {
                            return Err(self.err(
                                start,
                                "malformed operator".into(),
                                &["'(+)'"],
                            ));
                        }
                    } else {
                        self.pos += 1;
                        Tok::LParen
                    }
                }
                ')' => {
                    self.pos += 1;
                    Tok::RParen
                }
                '>' => {
                    if self.bytes.get(self.pos + 1) == Some(&b'<') {
                        self.pos += 2;
                        Tok::Join
                    } else {
                        self.pos += 1;
                        Tok::RAngle
                    }
                }
                '<' => {
                    self.pos += 1;
                    Tok::LAngle
                }
                '{' => {
                    self.pos += 1;
                    Tok::LBrace
                }
                '}' => {
                    self.pos += 1;
                    Tok::RBrace
                }
                ',' => {
                    self.pos += 1;
                    Tok::Comma
                }
                '/' => {
                    self.pos += 1;
                    Tok::Slash
                }
                _ => {
                    let rest = &self.text[self.pos..];
                    match KEYWORDS.iter().find(|(kw, _)| rest.starts_with(kw)) {
                        Some((kw, tok)) => {
                            self.pos += kw.len();
                            tok.clone()
                        }
                        None => {
                            return Err(self.err(
                                start,
                                format!("'{c}'"),
                                &["a keyword", "an operator", "an integer"],
                            ))
                        }
                    }
                }
            };
            out.push((tok, Span::new(start, self.pos)));
        }
        Ok(out)
    }
}

struct Parser<'a> {
    text: &'a str,
    toks: Vec<(Tok, Span)>,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Result<Parser<'a>, ParseError> {
        let toks = Lexer {
            text,
            bytes: text.as_bytes(),
            pos: 0,
        }
        .tokens()?;
        Ok(Parser { text, toks, pos: 0 })
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn here(&self) -> usize {
        self.toks
            .get(self.pos)
            .map(|(_, s)| s.start)
            .unwrap_or(self.text.len())
    }

    fn span(&self) -> Span {
        self.toks
            .get(self.pos)
            .map(|(_, s)| *s)
            .unwrap_or_else(|| Span::new(self.text.len(), self.text.len()))
    }

    fn advance(&mut self) -> Option<(Tok, Span)> {
        let t = self.toks.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn err_here(&self, expected: &[&str]) -> ParseError {
        let at = self.here();
        let (line, col) = line_col(self.text, at);
        ParseError {
            offset: at,
            line,
            col,
            found: self
                .peek()
                .map(|t| t.describe())
                .unwrap_or_else(|| "end of input".into()),
            expected: expected.iter().map(|s| s.to_string()).collect(),
        }
    }

    fn expect(&mut self, tok: Tok, expected: &str) -> Result<Span, ParseError> {
        match self.peek() {
            Some(t) if *t == tok => Ok(self.advance().unwrap().1),
            _ => Err(self.err_here(&[expected])),
        }
    }

    fn expect_int(&mut self, what: &str) -> Result<(u32, Span), ParseError> {
        match self.peek() {
            Some(Tok::Int(_)) => {
                let (tok, span) = self.advance().unwrap();
                if let Tok::Int(v) = tok {
                    Ok((v, span))
                } else {
                    unreachable!()
                }
            }
            _ => Err(self.err_here(&[what])),
        }
    }

    fn at_end(&self) -> bool {
        self.pos >= self.toks.len()
    }

    // ring := term {"x" term}
    fn ring(&mut self) -> Result<Ast, ParseError> {
        let mut node = self.term()?;
        while self.peek() == Some(&Tok::KwX) {
            self.advance();
            let rhs = self.term()?;
            let span = node.span.join(rhs.span);
            node = Ast::new(AstKind::Product(Box::new(node), Box::new(rhs)), span);
        }
        Ok(node)
    }

    // term := atom {postfix}
    fn term(&mut self) -> Result<Ast, ParseError> {
        let mut node = self.atom()?;
        loop {
            match self.peek() {
                Some(Tok::Slash) => {
                    self.advance();
                    let ideal = self.ideal()?;
                    let span = node.span.join(ideal.span);
                    node = Ast::new(AstKind::Quotient(Box::new(node), Box::new(ideal)), span);
                }
                Some(Tok::Join) => {
                    self.advance();
                    let ideal = self.ideal()?;
                    let span = node.span.join(ideal.span);
                    node = Ast::new(AstKind::Duplicate(Box::new(node), Box::new(ideal)), span);
                }
                Some(Tok::IdealizeOp) => {
                    self.advance();
                    let module = self.module()?;
                    let span = node.span.join(module.span);
                    node = Ast::new(AstKind::Idealize(Box::new(node), Box::new(module)), span);
                }
                _ => break,
            }
        }
        Ok(node)
    }

    fn atom(&mut self) -> Result<Ast, ParseError> {
        let start = self.span();
        match self.peek() {
            Some(Tok::KwZ) => {
                self.advance();
                let (n, nspan) = self.expect_int("ring order after 'Z'")?;
                Ok(Ast::new(AstKind::ZnLit(n), start.join(nspan)))
            }
            Some(Tok::KwAmalg) => {
                self.advance();
                self.expect(Tok::LParen, "'('")?;
                let base = self.ring()?;
                self.expect(Tok::Comma, "','")?;
                let host = self.ring()?;
                self.expect(Tok::Comma, "','")?;
                let hom = self.hom()?;
                self.expect(Tok::Comma, "','")?;
                let ideal = self.ideal()?;
                let end = self.expect(Tok::RParen, "')'")?;
                Ok(Ast::new(
                    AstKind::Amalgam {
                        base: Box::new(base),
                        host: Box::new(host),
                        hom: Box::new(hom),
                        ideal: Box::new(ideal),
                    },
                    start.join(end),
                ))
            }
            Some(Tok::KwLoc) => {
                self.advance();
                self.expect(Tok::LParen, "'('")?;
                let ring = self.ring()?;
                self.expect(Tok::Comma, "','")?;
                let set = self.set()?;
                let end = self.expect(Tok::RParen, "')'")?;
                Ok(Ast::new(
                    AstKind::Localize(Box::new(ring), Box::new(set)),
                    start.join(end),
                ))
            }
            Some(Tok::KwPoly) => {
                self.advance();
                self.expect(Tok::LParen, "'('")?;
                let ring = self.ring()?;
                self.expect(Tok::Comma, "','")?;
                let (k, _) = self.expect_int("truncation degree")?;
                let end = self.expect(Tok::RParen, "')'")?;
                Ok(Ast::new(
                    AstKind::TruncPoly(Box::new(ring), k),
                    start.join(end),
                ))
            }
            Some(Tok::LParen) => {
                self.advance();
                let inner = self.ring()?;
                self.expect(Tok::RParen, "')'")?;
                Ok(inner)
            }
            _ => Err(self.err_here(&["'Z'", "'amalg'", "'loc'", "'poly'", "'('"])),
        }
    }

    // ideal := "<" [gen {"," gen}] ">"
    fn ideal(&mut self) -> Result<Ast, ParseError> {
        let start = self.expect(Tok::LAngle, "'<'")?;
        let mut gens = Vec::new();
        if self.peek() != Some(&Tok::RAngle) {
            loop {
                gens.push(self.gen()?);
                if self.peek() == Some(&Tok::Comma) {
                    self.advance();
                } else {
                    break;
                }
            }
        }
        let end = self.expect(Tok::RAngle, "'>'")?;
        Ok(Ast::new(AstKind::IdealGen(gens), start.join(end)))
    }

    fn gen(&mut self) -> Result<GenLit, ParseError> {
        match self.peek() {
            Some(Tok::Int(_)) => {
                let (v, _) = self.expect_int("generator index")?;
                Ok(GenLit::Index(v))
            }
            Some(Tok::LParen) => {
                self.advance();
                let (a, _) = self.expect_int("pair first component")?;
                self.expect(Tok::Comma, "','")?;
                let (b, _) = self.expect_int("pair second component")?;
                self.expect(Tok::RParen, "')'")?;
                Ok(GenLit::Pair(a, b))
            }
            _ => Err(self.err_here(&["generator index", "'(a,b)' pair"])),
        }
    }

    // module := "mod(" ring ["," INT] ")"
    fn module(&mut self) -> Result<Ast, ParseError> {
        let start = self.expect(Tok::KwMod, "'mod'")?;
        self.expect(Tok::LParen, "'('")?;
        let ring = self.ring()?;
        let order = if self.peek() == Some(&Tok::Comma) {
            self.advance();
            let (m, _) = self.expect_int("module order")?;
            Some(m)
        } else {
            None
        };
        let end = self.expect(Tok::RParen, "')'")?;
        Ok(Ast::new(
            AstKind::ModuleRef {
                ring: Box::new(ring),
                order,
            },
            start.join(end),
        ))
    }

    // hom := "id" | "mod" INT | "proj" INT | "table(" [INT {"," INT}] ")"
    fn hom(&mut self) -> Result<Ast, ParseError> {
        let start = self.span();
        match self.peek() {
            Some(Tok::KwId) => {
                self.advance();
                Ok(Ast::new(AstKind::HomRef(HomSpec::Identity), start))
            }
            Some(Tok::KwMod) => {
                self.advance();
                let (m, mspan) = self.expect_int("modulus after 'mod'")?;
                Ok(Ast::new(
                    AstKind::HomRef(HomSpec::Mod(m)),
                    start.join(mspan),
                ))
            }
            Some(Tok::KwProj) => {
                self.advance();
                let (i, ispan) = self.expect_int("coordinate after 'proj'")?;
                Ok(Ast::new(
                    AstKind::HomRef(HomSpec::Proj(i)),
                    start.join(ispan),
                ))
            }
            Some(Tok::KwTable) => {
                self.advance();
                self.expect(Tok::LParen, "'('")?;
                let mut entries = Vec::new();
                if self.peek() != Some(&Tok::RParen) {
                    loop {
                        let (v, _) = self.expect_int("table entry")?;
                        entries.push(v);
                        if self.peek() == Some(&Tok::Comma) {
                            self.advance();
                        } else {
                            break;
                        }
                    }
                }
                let end = self.expect(Tok::RParen, "')'")?;
                Ok(Ast::new(
                    AstKind::HomRef(HomSpec::Table(entries)),
                    start.join(end),
                ))
            }
            _ => Err(self.err_here(&["'id'", "'mod'", "'proj'", "'table'"])),
        }
    }

    // set := "{" INT {"," INT} "}"
    fn set(&mut self) -> Result<Ast, ParseError> {
        let start = self.expect(Tok::LBrace, "'{'")?;
        let mut xs = Vec::new();
        loop {
            let (v, _) = self.expect_int("set element")?;
            xs.push(v);
            if self.peek() == Some(&Tok::Comma) {
                self.advance();
            } else {
                break;
            }
        }
        let end = self.expect(Tok::RBrace, "'}'")?;
        Ok(Ast::new(AstKind::SetLit(xs), start.join(end)))
    }

    fn finish(self, node: Ast) -> Result<Ast, ParseError> {
        if self.at_end() {
            Ok(node)
        } else {
            Err(self.err_here(&["end of input"]))
        }
    }
}

const INPUT_LENGTH_CAP: usize = 64 * 1024;

fn check_len(text: &str) -> Result<(), ParseError> {
    if text.len() > INPUT_LENGTH_CAP {
        return Err(ParseError {
            offset: INPUT_LENGTH_CAP,
            line: 0,
            col: 0,
            found: format!("{} bytes of input", text.len()),
            expected: vec![format!("at most {INPUT_LENGTH_CAP} bytes")],
        });
    }
    Ok(())
}

/// Parses a ring expression.
pub fn parse_ring(text: &str) -> Result<Ast, ParseError> {
    check_len(text)?;
    let mut p = Parser::new(text)?;
    let node = p.ring()?;
    p.finish(node)
}

/// Parses an ideal literal (`<...>` or `<>`).
pub fn parse_ideal(text: &str) -> Result<Ast, ParseError> {
    check_len(text)?;
    let mut p = Parser::new(text)?;
    let node = p.ideal()?;
    p.finish(node)
}

/// Parses a multiplicative-set literal (`{...}`).
pub fn parse_set(text: &str) -> Result<Ast, ParseError> {
    check_len(text)?;
    let mut p = Parser::new(text)?;
    let node = p.set()?;
    p.finish(node)
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.describe())
    }
}
