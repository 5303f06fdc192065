//! Machine-checkable encodings of the theorem catalog, corpus generation,
//! sweeps and counterexample searches.
//!
//! Each catalog entry encodes one statement about the weakly-J family of
//! ideal classes as a checker over typed instances. Hypotheses are evaluated
//! first; an instance whose hypotheses all fail is reported as a vacuous
//! pass, and sweep accounting keeps vacuous and substantive passes apart.
//! Converse clauses that hold only under a side condition are separate
//! sub-checks gated on that condition, so failures outside the guard are
//! searchable rather than counted against the theorem.

mod catalog;
mod corpus;
mod ctx;
mod search;
mod sweep;

pub use corpus::{
    build_corpus, instances_for, AmalgCtx, AmalgamationRecipe, Corpus, CorpusSpec,
    IdealizationCtx, IdealizationRecipe, ProductCtx,
};
pub use ctx::{QuotientCtx, RingCtx};
pub use search::{
    parse_pred_expr, search, search_amalg_converse_failures, AmalgConverseHit, ExprError,
    PredExpr, SearchHit,
};
pub use sweep::{sweep, SweepOutcome, SweepStats};

use std::sync::Arc;

use thiserror::Error;

use crate::construct::ModuleTable;
use crate::elem::{ElemSet, ElementId};
use crate::ring::RingHom;

/// Stable catalog names for the theorem suite.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TheoremId {
    TQuasi,
    PJr,
    TSq,
    CNak,
    TEq,
    PQuot,
    PWp,
    CWp2,
    PInt,
    PSum,
    PCart,
    PLoc,
    PHom,
    CQuo,
    PPres,
    CPre,
    PQpres,
    LQp,
    TSpres,
    LSup,
    PMc,
    PMaxs,
    TIdl,
    LMax,
    PPp,
    TAmlI,
    CCj,
    TAmlK,
    C12,
    P13,
}

impl TheoremId {
    pub const ALL: [TheoremId; 30] = [
        TheoremId::TQuasi,
        TheoremId::PJr,
        TheoremId::TSq,
        TheoremId::CNak,
        TheoremId::TEq,
        TheoremId::PQuot,
        TheoremId::PWp,
        TheoremId::CWp2,
        TheoremId::PInt,
        TheoremId::PSum,
        TheoremId::PCart,
        TheoremId::PLoc,
        TheoremId::PHom,
        TheoremId::CQuo,
        TheoremId::PPres,
        TheoremId::CPre,
        TheoremId::PQpres,
        TheoremId::LQp,
        TheoremId::TSpres,
        TheoremId::LSup,
        TheoremId::PMc,
        TheoremId::PMaxs,
        TheoremId::TIdl,
        TheoremId::LMax,
        TheoremId::PPp,
        TheoremId::TAmlI,
        TheoremId::CCj,
        TheoremId::TAmlK,
        TheoremId::C12,
        TheoremId::P13,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TheoremId::TQuasi => "T-QUASI",
            TheoremId::PJr => "P-JR",
            TheoremId::TSq => "T-SQ",
            TheoremId::CNak => "C-NAK",
            TheoremId::TEq => "T-EQ",
            TheoremId::PQuot => "P-QUOT",
            TheoremId::PWp => "P-WP",
            TheoremId::CWp2 => "C-WP2",
            TheoremId::PInt => "P-INT",
            TheoremId::PSum => "P-SUM",
            TheoremId::PCart => "P-CART",
            TheoremId::PLoc => "P-LOC",
            TheoremId::PHom => "P-HOM",
            TheoremId::CQuo => "C-QUO",
            TheoremId::PPres => "P-PRES",
            TheoremId::CPre => "C-PRE",
            TheoremId::PQpres => "P-QPRES",
            TheoremId::LQp => "L-QP",
            TheoremId::TSpres => "T-SPRES",
            TheoremId::LSup => "L-SUP",
            TheoremId::PMc => "P-MC",
            TheoremId::PMaxs => "P-MAXS",
            TheoremId::TIdl => "T-IDL",
            TheoremId::LMax => "L-MAX",
            TheoremId::PPp => "P-PP",
            TheoremId::TAmlI => "T-AML-I",
            TheoremId::CCj => "C-CJ",
            TheoremId::TAmlK => "T-AML-K",
            TheoremId::C12 => "C-12",
            TheoremId::P13 => "P-13",
        }
    }

    /// One-line statement of the encoded claim.
    pub fn describe(self) -> &'static str {
        match self {
            TheoremId::TQuasi => {
                "quasi-local iff all proper ideals J / quasi-J / weakly-J / principal weakly-J"
            }
            TheoremId::PJr => "weakly J iff I inside J(R) and 0!=ab in I forces a in J(I) or b in I",
            TheoremId::TSq => "weakly J but not J forces I^2 = 0",
            TheoremId::CNak => "weakly-J-not-J: I inside N(R), and IM = M forces M = 0",
            TheoremId::TEq => "five residual/ideal-pair characterizations of weakly J agree",
            TheoremId::PQuot => "I and (0:S) weakly J with S not inside I make (I:S) weakly J",
            TheoremId::PWp => "weakly prime inside J(R) is weakly J",
            TheoremId::CWp2 => "maximal for 'I and all (0:a), a outside I, weakly J' is weakly prime",
            TheoremId::PInt => "intersections of weakly J-ideals are weakly J",
            TheoremId::PSum => "sums of weakly J-ideals are weakly J",
            TheoremId::PCart => "in products, nonzero weakly J and J coincide",
            TheoremId::PLoc => "weakly J transfers along S^-1 when J(S^-1 R) = S^-1 J(R)",
            TheoremId::PHom => "mono pullbacks and kernel-containing epi images stay weakly J",
            TheoremId::CQuo => "weakly J passes to and lifts from quotients",
            TheoremId::PPres => "in presimplifiable rings weakly J implies J",
            TheoremId::CPre => "R presimplifiable and I weakly J make R/I presimplifiable",
            TheoremId::PQpres => {
                "R quasi-presimplifiable and I weakly J make R/I quasi-presimplifiable"
            }
            TheoremId::LQp => "quasi J iff I inside J(R) and R/I quasi-presimplifiable",
            TheoremId::TSpres => "nonzero weakly J iff I inside J(R) and SZ(R/I) inside J(R/I)",
            TheoremId::LSup => "weakly J-ideals are superfluous",
            TheoremId::PMc => "I weakly J iff R-I weakly J-multiplicatively closed",
            TheoremId::PMaxs => {
                "ideals maximal-disjoint from a good weakly-J-closed set are weakly J"
            }
            TheoremId::TIdl => "weakly J in R(+)M versus weakly J in R, with the Ann(M) condition",
            TheoremId::LMax => "Max(amalgamation) = lifted base maximals plus bars of host maximals off J",
            TheoremId::PPp => "R quasi-local and J inside J(S): every ideal of the amalgamation is (weakly) J",
            TheoremId::TAmlI => "joined ideal (weakly) J versus I, converse under J inside J(S)",
            TheoremId::CCj => "J-ideals of the amalgamation over 0xJ are exactly the joined ideals",
            TheoremId::TAmlK => "bar ideal (weakly) J versus K, converse under f(J(R)) = J(S)+J",
            TheoremId::C12 => "duplication case of the bar-ideal transfer",
            TheoremId::P13 => "I join-T weakly J forces I weakly J",
        }
    }

    pub fn parse(name: &str) -> Option<TheoremId> {
        TheoremId::ALL.iter().copied().find(|t| t.name() == name)
    }
}

impl std::fmt::Display for TheoremId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Error)]
pub enum TheoremError {
    #[error("unknown theorem id {0:?}")]
    UnknownTheorem(String),
    #[error("{theorem} expects a {expected} instance")]
    InstanceShapeMismatch {
        theorem: TheoremId,
        expected: &'static str,
    },
}

/// A counterexample found by a checker, replay-validated before reporting.
#[derive(Clone, Debug)]
pub struct TheoremWitness {
    pub subcheck: &'static str,
    pub elements: Vec<ElementId>,
    pub detail: String,
}

/// Outcome of one theorem on one instance.
#[derive(Clone, Debug)]
pub struct TheoremVerdict {
    pub theorem: TheoremId,
    pub instance: String,
    pub holds: bool,
    /// True when every substantive hypothesis failed, so nothing was
    /// actually asserted.
    pub vacuous: bool,
    /// Names of the sub-checks whose hypotheses held on this instance.
    pub fired: Vec<&'static str>,
    pub witness: Option<TheoremWitness>,
}

/// Which side of a homomorphism an ideal instance lives on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HomSide {
    SourceIdeal,
    TargetIdeal,
}

/// Typed instances the checkers quantify over. Ideals are lattice indices
/// into the owning context.
#[derive(Clone)]
pub enum Instance {
    Ring {
        ctx: Arc<RingCtx>,
    },
    Ideal {
        ctx: Arc<RingCtx>,
        ideal: usize,
    },
    IdealPair {
        ctx: Arc<RingCtx>,
        first: usize,
        second: usize,
    },
    NestedIdeals {
        ctx: Arc<RingCtx>,
        inner: usize,
        outer: usize,
    },
    IdealWithSubset {
        ctx: Arc<RingCtx>,
        ideal: usize,
        subset: ElemSet,
    },
    IdealWithModule {
        ctx: Arc<RingCtx>,
        ideal: usize,
        module: Arc<ModuleTable>,
    },
    IdealWithMultSet {
        ctx: Arc<RingCtx>,
        ideal: usize,
        set: ElemSet,
    },
    ProductIdeal {
        entry: Arc<ProductCtx>,
        ideal: usize,
    },
    HomIdeal {
        hom: Arc<RingHom>,
        source: Arc<RingCtx>,
        target: Arc<RingCtx>,
        side: HomSide,
        ideal: usize,
    },
    IdealizationIdeal {
        entry: Arc<IdealizationCtx>,
        ideal: usize,
        submodule: ElemSet,
    },
    Amalg {
        entry: Arc<AmalgCtx>,
    },
    AmalgIdeal {
        entry: Arc<AmalgCtx>,
        ideal: usize,
    },
    AmalgHostIdeal {
        entry: Arc<AmalgCtx>,
        ideal: usize,
    },
    AmalgIdealPairT {
        entry: Arc<AmalgCtx>,
        ideal: usize,
        t: usize,
    },
}

impl Instance {
    pub fn describe(&self) -> String {
        match self {
            Instance::Ring { ctx } => ctx.label().to_string(),
            Instance::Ideal { ctx, ideal } => {
                format!("{} I={}", ctx.label(), ctx.ideal(*ideal).display_short())
            }
            Instance::IdealPair { ctx, first, second } => format!(
                "{} I1={} I2={}",
                ctx.label(),
                ctx.ideal(*first).display_short(),
                ctx.ideal(*second).display_short()
            ),
            Instance::NestedIdeals { ctx, inner, outer } => format!(
                "{} K={} inside I={}",
                ctx.label(),
                ctx.ideal(*inner).display_short(),
                ctx.ideal(*outer).display_short()
            ),
            Instance::IdealWithSubset { ctx, ideal, subset } => format!(
                "{} I={} S={:?}",
                ctx.label(),
                ctx.ideal(*ideal).display_short(),
                subset.members()
            ),
            Instance::IdealWithModule { ctx, ideal, module } => format!(
                "{} I={} M={}",
                ctx.label(),
                ctx.ideal(*ideal).display_short(),
                module.label()
            ),
            Instance::IdealWithMultSet { ctx, ideal, set } => format!(
                "{} I={} S={:?}",
                ctx.label(),
                ctx.ideal(*ideal).display_short(),
                set.members()
            ),
            Instance::ProductIdeal { entry, ideal } => format!(
                "{} I={}",
                entry.ctx.label(),
                entry.ctx.ideal(*ideal).display_short()
            ),
            Instance::HomIdeal {
                hom,
                source,
                target,
                side,
                ideal,
            } => {
                let (holder, role) = match side {
                    HomSide::SourceIdeal => (source, "I1"),
                    HomSide::TargetIdeal => (target, "I2"),
                };
                format!(
                    "{}:{}->{} {}={}",
                    hom.label(),
                    source.label(),
                    target.label(),
                    role,
                    holder.ideal(*ideal).display_short()
                )
            }
            Instance::IdealizationIdeal {
                entry,
                ideal,
                submodule,
            } => format!(
                "{} I={} N={:?}",
                entry.ctx.label(),
                entry.base.ideal(*ideal).display_short(),
                submodule.members()
            ),
            Instance::Amalg { entry } => entry.ctx.label().to_string(),
            Instance::AmalgIdeal { entry, ideal } => format!(
                "{} I={}",
                entry.ctx.label(),
                entry.base.ideal(*ideal).display_short()
            ),
            Instance::AmalgHostIdeal { entry, ideal } => format!(
                "{} K={}",
                entry.ctx.label(),
                entry.sub.ideal(*ideal).display_short()
            ),
            Instance::AmalgIdealPairT { entry, ideal, t } => format!(
                "{} I={} T={}",
                entry.ctx.label(),
                entry.base.ideal(*ideal).display_short(),
                entry.sub.ideal(*t).display_short()
            ),
        }
    }
}

/// Runs one catalog theorem on one instance.
pub fn check_theorem(id: TheoremId, instance: &Instance) -> Result<TheoremVerdict, TheoremError> {
    catalog::check(id, instance)
}

/// String-keyed entry point; unknown catalog names are an error.
pub fn check_theorem_named(
    name: &str,
    instance: &Instance,
) -> Result<TheoremVerdict, TheoremError> {
    let id = TheoremId::parse(name).ok_or_else(|| TheoremError::UnknownTheorem(name.into()))?;
    check_theorem(id, instance)
}
