//! Counterexample search: a small boolean expression language over the
//! classifier's verdict names, evaluated exhaustively and deterministically
//! over corpus instances, plus a dedicated search for amalgamation transfer
//! failures outside the radical guard.

use thiserror::Error;

use crate::classify::{self, Predicate};
use crate::elem::ElementId;
use crate::ideal::{self, IdealSet};

use super::corpus::Corpus;
use super::ctx::RingCtx;

#[derive(Debug, Error, Clone)]
#[error("expression error at offset {offset}: {message}")]
pub struct ExprError {
    pub offset: usize,
    pub message: String,
}

/// Which ideal slot an atom applies to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TargetAtom {
    Single,
    First,
    Second,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CombOp {
    Product,
    Sum,
    Intersect,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Target {
    Slot(TargetAtom),
    Combo(CombOp, TargetAtom, TargetAtom),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PredExpr {
    Atom { pred: Predicate, target: Target },
    Not(Box<PredExpr>),
    And(Box<PredExpr>, Box<PredExpr>),
    Or(Box<PredExpr>, Box<PredExpr>),
}

impl PredExpr {
    /// True when the expression refers to the two-ideal slots.
    pub fn mentions_pair(&self) -> bool {
        match self {
            PredExpr::Atom { target, .. } => !matches!(target, Target::Slot(TargetAtom::Single)),
            PredExpr::Not(e) => e.mentions_pair(),
            PredExpr::And(a, b) | PredExpr::Or(a, b) => a.mentions_pair() || b.mentions_pair(),
        }
    }
}

struct ExprParser<'a> {
    text: &'a str,
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> ExprParser<'a> {
    fn err(&self, message: impl Into<String>) -> ExprError {
        ExprError {
            offset: self.pos,
            message: message.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && (self.bytes[self.pos] as char).is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.bytes.get(self.pos).map(|&b| b as char)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    // expr := and {"|" and}
    fn expr(&mut self) -> Result<PredExpr, ExprError> {
        let mut node = self.and()?;
        while self.eat('|') {
            let rhs = self.and()?;
            node = PredExpr::Or(Box::new(node), Box::new(rhs));
        }
        Ok(node)
    }

    // and := unary {"&" unary}
    fn and(&mut self) -> Result<PredExpr, ExprError> {
        let mut node = self.unary()?;
        while self.eat('&') {
            let rhs = self.unary()?;
            node = PredExpr::And(Box::new(node), Box::new(rhs));
        }
        Ok(node)
    }

    fn unary(&mut self) -> Result<PredExpr, ExprError> {
        if self.eat('!') {
            return Ok(PredExpr::Not(Box::new(self.unary()?)));
        }
        if self.eat('(') {
            let inner = self.expr()?;
            if !self.eat(')') {
                return Err(self.err("expected ')'"));
            }
            return Ok(inner);
        }
        self.atom()
    }

    fn ident(&mut self) -> Result<String, ExprError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() {
            let c = self.bytes[self.pos] as char;
            if c.is_ascii_alphanumeric() {
                self.pos += 1;
            } else {
                break;
            }
        }
        if start == self.pos {
            return Err(self.err("expected a predicate name"));
        }
        Ok(self.text[start..self.pos].to_string())
    }

    fn atom(&mut self) -> Result<PredExpr, ExprError> {
        let name_at = {
            self.skip_ws();
            self.pos
        };
        let name = self.ident()?;
        let pred = Predicate::parse(&name).ok_or(ExprError {
            offset: name_at,
            message: format!("unknown predicate {name:?}"),
        })?;
        let target = if self.eat('(') {
            let t = self.target()?;
            if !self.eat(')') {
                return Err(self.err("expected ')'"));
            }
            t
        } else {
            Target::Slot(TargetAtom::Single)
        };
        Ok(PredExpr::Atom { pred, target })
    }

    fn slot(&mut self) -> Result<TargetAtom, ExprError> {
        let at = {
            self.skip_ws();
            self.pos
        };
        let name = self.ident()?;
        match name.as_str() {
            "I" => Ok(TargetAtom::Single),
            "I1" => Ok(TargetAtom::First),
            "I2" => Ok(TargetAtom::Second),
            other => Err(ExprError {
                offset: at,
                message: format!("expected I, I1 or I2, found {other:?}"),
            }),
        }
    }

    fn target(&mut self) -> Result<Target, ExprError> {
        let first = self.slot()?;
        let op = match self.peek() {
            Some('*') => CombOp::Product,
            Some('+') => CombOp::Sum,
            Some('^') => CombOp::Intersect,
            _ => return Ok(Target::Slot(first)),
        };
        self.pos += 1;
        let second = self.slot()?;
        Ok(Target::Combo(op, first, second))
    }
}

/// Parses a predicate expression such as `weaklyJ & !J` or
/// `weaklyJ(I1) & weaklyJ(I2) & !weaklyJ(I1*I2)`.
pub fn parse_pred_expr(text: &str) -> Result<PredExpr, ExprError> {
    let mut p = ExprParser {
        text,
        bytes: text.as_bytes(),
        pos: 0,
    };
    let node = p.expr()?;
    p.skip_ws();
    if p.pos != text.len() {
        return Err(p.err("trailing input"));
    }
    Ok(node)
}

/// One search result: the ring and the ideal slot assignments, as displays.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchHit {
    pub ring: String,
    pub ideals: Vec<String>,
}

fn resolve_slot(ctx: &RingCtx, slots: &[usize], atom: TargetAtom) -> usize {
    let _ = ctx;
    match atom {
        TargetAtom::Single | TargetAtom::First => slots[0],
        TargetAtom::Second => slots[slots.len() - 1],
    }
}

fn eval_pred(ctx: &RingCtx, pred: Predicate, set: &IdealSet) -> bool {
    let idx = ctx.lattice_index(set.members());
    if !ctx.is_proper(idx) {
        // Improper sets satisfy no ideal-class predicate.
        return false;
    }
    match pred {
        Predicate::WeaklyJ => ctx.weakly_j[idx],
        Predicate::JIdeal => ctx.j_ideal[idx],
        Predicate::QuasiJ => ctx.quasi_j[idx],
        Predicate::WeaklyPrime => ctx.weakly_prime[idx],
        Predicate::Superfluous => ctx.superfluous[idx],
        Predicate::NIdeal => classify::is_n_ideal(&ctx.ring, set).unwrap().holds,
        Predicate::Prime => classify::is_prime(&ctx.ring, set).unwrap().holds,
        Predicate::SPresimplifiableQuotient => {
            classify::is_s_presimplifiable_quotient(&ctx.ring, set)
                .unwrap()
                .holds
        }
        Predicate::InJacobson => set.members().is_subset(ctx.jacobson()),
        Predicate::InNilradical => set.members().is_subset(ctx.ring.nilradical()),
        Predicate::SquareZero => ctx.ideal(ctx.product_index(idx, idx)).is_zero(),
        Predicate::Maximal => ctx.maximal.contains(&idx),
        Predicate::Zero => set.is_zero(),
        Predicate::WeaklyJMultClosed => false, // set-shaped, not ideal-shaped
    }
}

fn eval_expr(ctx: &RingCtx, expr: &PredExpr, slots: &[usize]) -> bool {
    match expr {
        PredExpr::Not(e) => !eval_expr(ctx, e, slots),
        PredExpr::And(a, b) => eval_expr(ctx, a, slots) && eval_expr(ctx, b, slots),
        PredExpr::Or(a, b) => eval_expr(ctx, a, slots) || eval_expr(ctx, b, slots),
        PredExpr::Atom { pred, target } => {
            let set = match target {
                Target::Slot(atom) => ctx.ideal(resolve_slot(ctx, slots, *atom)).clone(),
                Target::Combo(op, a, b) => {
                    let lhs = ctx.ideal(resolve_slot(ctx, slots, *a));
                    let rhs = ctx.ideal(resolve_slot(ctx, slots, *b));
                    match op {
                        CombOp::Product => ideal::product(lhs, rhs).unwrap(),
                        CombOp::Sum => ideal::sum(lhs, rhs).unwrap(),
                        CombOp::Intersect => ideal::intersect(lhs, rhs).unwrap(),
                    }
                }
            };
            eval_pred(ctx, *pred, &set)
        }
    }
}

/// Exhaustive deterministic search over the corpus ring pool. Single-slot
/// expressions range over proper ideals; pair expressions over ordered pairs
/// of proper ideals. Returns up to `limit` hits.
pub fn search(corpus: &Corpus, expr: &PredExpr, limit: usize) -> Vec<SearchHit> {
    let mut hits = Vec::new();
    if limit == 0 {
        return hits;
    }
    let pair_mode = expr.mentions_pair();
    'outer: for ctx in &corpus.rings {
        if pair_mode {
            for &a in &ctx.proper {
                for &b in &ctx.proper {
                    if eval_expr(ctx, expr, &[a, b]) {
                        hits.push(SearchHit {
                            ring: ctx.label().to_string(),
                            ideals: vec![
                                ctx.ideal(a).display_short(),
                                ctx.ideal(b).display_short(),
                            ],
                        });
                        if hits.len() >= limit {
                            break 'outer;
                        }
                    }
                }
            }
        } else {
            for &i in &ctx.proper {
                if eval_expr(ctx, expr, &[i]) {
                    hits.push(SearchHit {
                        ring: ctx.label().to_string(),
                        ideals: vec![ctx.ideal(i).display_short()],
                    });
                    if hits.len() >= limit {
                        break 'outer;
                    }
                }
            }
        }
    }
    hits
}

/// A transfer failure outside the radical guard: `J ⊄ J(S)`, the base ideal
/// is weakly J, yet its join into the amalgamation is not. The stored
/// element pair replays the weakly-J failure inside the amalgamated ring.
#[derive(Clone, Debug)]
pub struct AmalgConverseHit {
    pub amalgamation: String,
    pub base_ideal: String,
    pub witness: (ElementId, ElementId),
}

/// Searches the amalgamation corpus for joined ideals that drop the
/// weakly-J property when `J ⊄ J(S)`.
pub fn search_amalg_converse_failures(corpus: &Corpus, limit: usize) -> Vec<AmalgConverseHit> {
    let mut hits = Vec::new();
    if limit == 0 {
        return hits;
    }
    'outer: for entry in &corpus.amalgams {
        if entry.am.j.members().is_subset(entry.host.jacobson()) {
            continue;
        }
        for &i in &entry.base.proper {
            if !entry.base.weakly_j[i] {
                continue;
            }
            let joined = entry.am.ideal_join(entry.base.ideal(i)).unwrap();
            let idx = entry.ctx.lattice_index(joined.members());
            if entry.ctx.weakly_j[idx] {
                continue;
            }
            let verdict =
                classify::is_weakly_j_ideal(&entry.ctx.ring, entry.ctx.ideal(idx)).unwrap();
            let w = verdict.witness.expect("failing ideal has a witness");
            assert!(
                classify::replay_weakly_j(&entry.ctx.ring, entry.ctx.ideal(idx), w[0], w[1]),
                "witness failed to replay"
            );
            hits.push(AmalgConverseHit {
                amalgamation: entry.ctx.label().to_string(),
                base_ideal: entry.base.ideal(i).display_short(),
                witness: (w[0], w[1]),
            });
            if hits.len() >= limit {
                break 'outer;
            }
        }
    }
    hits
}

#[cfg(test)]
mod tests {
    use super::super::corpus::{build_corpus, CorpusSpec};
    use super::*;

    fn zn_corpus(max: usize) -> Corpus {
        let spec = CorpusSpec {
            zn_max: max,
            product_pairs: Some(vec![]),
            quotient_depth: 0,
            idealizations: Some(vec![]),
            duplication_zn_max: 0,
            ..CorpusSpec::default()
        };
        build_corpus(&spec).0
    }

    #[test]
    fn parses_and_rejects() {
        assert!(parse_pred_expr("weaklyJ & !J").is_ok());
        assert!(parse_pred_expr("weaklyJ(I1) & weaklyJ(I2) & !weaklyJ(I1*I2)").is_ok());
        assert!(parse_pred_expr("(weaklyJ | prime) & !zero").is_ok());
        let err = parse_pred_expr("weaklyX").unwrap_err();
        assert_eq!(err.offset, 0);
        let err = parse_pred_expr("weaklyJ &").unwrap_err();
        assert!(err.offset >= 9);
        let err = parse_pred_expr("weaklyJ(I3)").unwrap_err();
        assert!(err.message.contains("I1"));
    }

    #[test]
    fn first_weakly_j_not_j_witness_is_z6_zero() {
        let corpus = zn_corpus(16);
        let expr = parse_pred_expr("weaklyJ & !J").unwrap();
        let hits = search(&corpus, &expr, 3);
        assert_eq!(
            hits.first(),
            Some(&SearchHit {
                ring: "Z6".into(),
                ideals: vec!["<0>".into()],
            })
        );
    }

    #[test]
    fn weakly_j_not_weakly_prime_includes_z32_16() {
        let corpus = zn_corpus(32);
        let expr = parse_pred_expr("weaklyJ & !weaklyPrime").unwrap();
        let hits = search(&corpus, &expr, 100);
        // First hit is the smallest local ring with a non-prime proper power.
        assert_eq!(hits[0].ring, "Z8");
        assert_eq!(hits[0].ideals, vec!["<4>".to_string()]);
        assert!(hits
            .iter()
            .any(|h| h.ring == "Z32" && h.ideals == vec!["<16>".to_string()]));
    }

    #[test]
    fn quasi_j_without_weakly_j_has_no_finite_witness() {
        // A finite commutative ring is local or decomposable; local rings
        // make every proper ideal weakly J, and decomposable rings admit no
        // J-ideal radicals, so the class is empty here.
        let corpus = zn_corpus(24);
        let expr = parse_pred_expr("quasiJ & !weaklyJ").unwrap();
        assert!(search(&corpus, &expr, 1).is_empty());
    }

    #[test]
    fn limit_zero_returns_nothing() {
        let corpus = zn_corpus(8);
        let expr = parse_pred_expr("weaklyJ").unwrap();
        assert!(search(&corpus, &expr, 0).is_empty());
    }

    #[test]
    fn amalg_converse_failure_is_found() {
        let spec = CorpusSpec {
            zn_max: 6,
            product_pairs: Some(vec![]),
            quotient_depth: 0,
            idealizations: Some(vec![]),
            duplication_zn_max: 6,
            ..CorpusSpec::default()
        };
        let (corpus, _) = build_corpus(&spec);
        let hits = search_amalg_converse_failures(&corpus, 5);
        assert!(!hits.is_empty());
        // First finding: duplicating Z2 along the whole ring makes the
        // zero ideal's join a nonzero ideal of a decomposable ring.
        assert_eq!(hits[0].amalgamation, "Z2><<1>");
        assert_eq!(hits[0].base_ideal, "<0>");
    }
}
