//! Corpus generation: a deterministic pool of rings and derived structures
//! built from a recipe, plus per-theorem instance enumeration.
//!
//! Everything is ordered by construction recipe, then by lattice order, so
//! repeated runs enumerate identical instances.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::construct::{
    duplication, idealization, product_ring, quotient_ring, zero_module, zm_over_zn,
    Amalgamation, Idealization, ModuleTable, ProductRing,
};
use crate::dsl;
use crate::elem::ElemSet;
use crate::ring::{make_zn_capped, OrderCaps, RingHom};

use super::ctx::RingCtx;
use super::{HomSide, Instance, TheoremId};

/// Recipe for one idealization `Z_base (+) Z_module`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealizationRecipe {
    pub base: usize,
    pub module: usize,
}

/// Recipe for one amalgamation, written in the surface language.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AmalgamationRecipe {
    pub base: String,
    pub host: String,
    pub hom: String,
    pub ideal: String,
}

/// Corpus recipe. Construction families left as `None` are generated from
/// the bound fields; the default value reproduces the standard sweep corpus.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct CorpusSpec {
    /// Include `Z_n` for `2 ≤ n ≤ zn_max`.
    pub zn_max: usize,
    /// Explicit product pairs; `None` generates all `a ≤ b` with
    /// `a·b ≤ product_order_max`.
    pub product_pairs: Option<Vec<(usize, usize)>>,
    pub product_order_max: usize,
    /// How many times to close the base pool under quotients by proper
    /// nonzero ideals.
    pub quotient_depth: usize,
    /// Explicit idealizations; `None` generates `m | n`, `m ≥ 2`,
    /// `n·m ≤ idealization_order_max`.
    pub idealizations: Option<Vec<IdealizationRecipe>>,
    pub idealization_order_max: usize,
    /// Duplications `Z_n ⋈ J` over every ideal `J`, for `n ≤ this`.
    pub duplication_zn_max: usize,
    /// Extra amalgamations by recipe.
    pub amalgamations: Vec<AmalgamationRecipe>,
    pub caps: OrderCaps,
}

impl Default for CorpusSpec {
    fn default() -> Self {
        CorpusSpec {
            zn_max: 64,
            product_pairs: None,
            product_order_max: 64,
            quotient_depth: 1,
            idealizations: None,
            idealization_order_max: 144,
            duplication_zn_max: 12,
            amalgamations: Vec::new(),
            caps: OrderCaps::default(),
        }
    }
}

pub struct ProductCtx {
    pub product: Arc<ProductRing>,
    pub ctx: Arc<RingCtx>,
    pub left: Arc<RingCtx>,
    pub right: Arc<RingCtx>,
}

pub struct IdealizationCtx {
    pub idl: Arc<Idealization>,
    pub ctx: Arc<RingCtx>,
    pub base: Arc<RingCtx>,
    pub submodules: Vec<ElemSet>,
}

pub struct AmalgCtx {
    pub am: Arc<Amalgamation>,
    pub ctx: Arc<RingCtx>,
    pub base: Arc<RingCtx>,
    pub host: Arc<RingCtx>,
    /// Context for the materialized subring f(R)+J.
    pub sub: Arc<RingCtx>,
}

pub struct HomEntry {
    pub hom: Arc<RingHom>,
    pub source: Arc<RingCtx>,
    pub target: Arc<RingCtx>,
}

pub struct ModuleEntry {
    pub ctx: Arc<RingCtx>,
    pub module: Arc<ModuleTable>,
}

/// The generated corpus: a flat ring pool for ideal-shaped checks plus the
/// structured entries for construction-aware checks.
pub struct Corpus {
    pub rings: Vec<Arc<RingCtx>>,
    pub products: Vec<Arc<ProductCtx>>,
    pub idealizations: Vec<Arc<IdealizationCtx>>,
    pub amalgams: Vec<Arc<AmalgCtx>>,
    pub homs: Vec<HomEntry>,
    pub modules: Vec<ModuleEntry>,
}

/// Builds the corpus; recoverable recipe problems (caps, invalid recipes)
/// are returned as diagnostics and the rest of the corpus is kept.
pub fn build_corpus(spec: &CorpusSpec) -> (Corpus, Vec<String>) {
    let mut diags = Vec::new();
    let caps = spec.caps;
    let mut rings: Vec<Arc<RingCtx>> = Vec::new();
    let mut products = Vec::new();
    let mut idealizations = Vec::new();
    let mut amalgams = Vec::new();
    let mut homs: Vec<HomEntry> = Vec::new();
    let mut modules: Vec<ModuleEntry> = Vec::new();

    // 1. Base Z_n family. Later stages may add bases beyond zn_max
    // (idealization recipes reach up to half the order bound).
    let top = spec
        .zn_max
        .max(spec.idealization_order_max / 2)
        .max(spec.duplication_zn_max);
    let mut zn_ctx: Vec<Option<Arc<RingCtx>>> = vec![None; top + 1];
    for n in 2..=spec.zn_max {
        match make_zn_capped(n, caps.direct) {
            Ok(ring) => {
                let ctx = RingCtx::new(ring);
                zn_ctx[n] = Some(Arc::clone(&ctx));
                rings.push(ctx);
            }
            Err(e) => diags.push(format!("Z{n}: {e}")),
        }
    }

    // 2. Products.
    let pairs: Vec<(usize, usize)> = match &spec.product_pairs {
        Some(ps) => ps.clone(),
        None => {
            let mut ps = Vec::new();
            for a in 2..=spec.product_order_max / 2 {
                for b in a..=spec.product_order_max {
                    if a * b <= spec.product_order_max {
                        ps.push((a, b));
                    }
                }
            }
            ps
        }
    };
    for (a, b) in pairs {
        let (Some(left), Some(right)) = (
            zn_ctx.get(a).and_then(|c| c.clone()),
            zn_ctx.get(b).and_then(|c| c.clone()),
        ) else {
            diags.push(format!("product Z{a}xZ{b}: factors not in the Z_n pool"));
            continue;
        };
        match product_ring(&left.ring, &right.ring, &caps) {
            Ok(p) => {
                let ctx = RingCtx::new(Arc::clone(&p.ring));
                rings.push(Arc::clone(&ctx));
                products.push(Arc::new(ProductCtx {
                    product: Arc::new(p),
                    ctx,
                    left,
                    right,
                }));
            }
            Err(e) => diags.push(format!("product Z{a}xZ{b}: {e}")),
        }
    }

    // 3. Quotients of the pool so far, by proper nonzero ideals.
    let mut quotient_base: Vec<Arc<RingCtx>> = rings.clone();
    for _ in 0..spec.quotient_depth {
        let mut fresh: Vec<Arc<RingCtx>> = Vec::new();
        for base in &quotient_base {
            for &i in &base.proper {
                if base.ideal(i).is_zero() {
                    continue;
                }
                match quotient_ring(&base.ring, base.ideal(i)) {
                    Ok(q) => {
                        let ctx = RingCtx::new(Arc::clone(&q.ring));
                        homs.push(HomEntry {
                            hom: Arc::new(q.projection),
                            source: Arc::clone(base),
                            target: Arc::clone(&ctx),
                        });
                        fresh.push(ctx);
                    }
                    Err(e) => diags.push(format!("quotient of {}: {e}", base.label())),
                }
            }
        }
        rings.extend(fresh.iter().cloned());
        quotient_base = fresh;
    }

    // 4. Idealizations Z_n (+) Z_m.
    let recipes: Vec<IdealizationRecipe> = match &spec.idealizations {
        Some(rs) => rs.clone(),
        None => {
            let mut rs = Vec::new();
            for n in 2..=spec.idealization_order_max {
                for m in 2..=n {
                    if n % m == 0 && n * m <= spec.idealization_order_max {
                        rs.push(IdealizationRecipe { base: n, module: m });
                    }
                }
            }
            rs
        }
    };
    for r in recipes {
        let base = match zn_ctx.get(r.base).and_then(|c| c.clone()) {
            Some(b) => b,
            // A base beyond zn_max is built on demand and joins the pool.
            None => match make_zn_capped(r.base, caps.direct) {
                Ok(ring) => {
                    let ctx = RingCtx::new(ring);
                    if let Some(slot) = zn_ctx.get_mut(r.base) {
                        *slot = Some(Arc::clone(&ctx));
                    }
                    rings.push(Arc::clone(&ctx));
                    ctx
                }
                Err(e) => {
                    diags.push(format!("idealization Z{}(+)Z{}: {e}", r.base, r.module));
                    continue;
                }
            },
        };
        let module = match zm_over_zn(&base.ring, r.module) {
            Ok(m) => m,
            Err(e) => {
                diags.push(format!("idealization Z{}(+)Z{}: {e}", r.base, r.module));
                continue;
            }
        };
        match idealization(&base.ring, &module, &caps) {
            Ok(idl) => {
                let ctx = RingCtx::new(Arc::clone(&idl.ring));
                rings.push(Arc::clone(&ctx));
                let submodules = crate::construct::submodules(&idl.module);
                idealizations.push(Arc::new(IdealizationCtx {
                    idl: Arc::new(idl),
                    ctx,
                    base,
                    submodules,
                }));
            }
            Err(e) => diags.push(format!("idealization Z{}(+)Z{}: {e}", r.base, r.module)),
        }
    }

    // 5. Duplications Z_n ⋈ J over every ideal J (including 0 and the ring).
    for n in 2..=spec.duplication_zn_max {
        let Some(base) = zn_ctx.get(n).and_then(|c| c.clone()) else {
            continue;
        };
        for idx in 0..base.lattice.len() {
            let j = base.ideal(idx).clone();
            match duplication(&base.ring, &j, &caps) {
                Ok(am) => amalgams.push(make_amalg_ctx(am, &base, &base, &mut rings)),
                Err(e) => diags.push(format!(
                    "duplication {} along {}: {e}",
                    base.label(),
                    j.display_short()
                )),
            }
        }
    }

    // 6. Recipe amalgamations via the surface language.
    for recipe in &spec.amalgamations {
        match build_recipe_amalgam(recipe, &caps) {
            Ok(am) => {
                let base = RingCtx::new(Arc::clone(&am.base));
                let host = RingCtx::new(Arc::clone(&am.host));
                rings.push(Arc::clone(&base));
                if !Arc::ptr_eq(&am.base, &am.host) {
                    rings.push(Arc::clone(&host));
                }
                amalgams.push(make_amalg_ctx(am, &base, &host, &mut rings));
            }
            Err(e) => diags.push(format!("amalgamation recipe {recipe:?}: {e}")),
        }
    }

    // 7. Modules over the Z_n pool for module-shaped checks.
    for n in 2..=spec.zn_max {
        let Some(ctx) = zn_ctx.get(n).and_then(|c| c.clone()) else {
            continue;
        };
        let mut push = |m: ModuleTable| {
            modules.push(ModuleEntry {
                ctx: Arc::clone(&ctx),
                module: Arc::new(m),
            })
        };
        push(zero_module(&ctx.ring));
        for m in 2..=n {
            if n % m == 0 {
                match zm_over_zn(&ctx.ring, m) {
                    Ok(module) => push(module),
                    Err(e) => diags.push(format!("module Z{m} over Z{n}: {e}")),
                }
            }
        }
    }

    // 8. Extra homomorphisms: identities, canonical surjections Z_n → Z_m,
    //    product projections and diagonals.
    for n in 2..=spec.zn_max {
        let Some(ctx) = zn_ctx.get(n).and_then(|c| c.clone()) else {
            continue;
        };
        homs.push(HomEntry {
            hom: Arc::new(RingHom::identity(&ctx.ring)),
            source: Arc::clone(&ctx),
            target: Arc::clone(&ctx),
        });
        for m in 2..n {
            if n % m != 0 {
                continue;
            }
            if let Some(tgt) = zn_ctx.get(m).and_then(|c| c.clone()) {
                let hom = RingHom::from_fn(
                    &ctx.ring,
                    &tgt.ring,
                    |x| crate::elem::ElementId::new(x.index() % m),
                    format!("mod{m}"),
                )
                .expect("canonical surjection");
                homs.push(HomEntry {
                    hom: Arc::new(hom),
                    source: Arc::clone(&ctx),
                    target: tgt,
                });
            }
        }
    }
    for p in &products {
        homs.push(HomEntry {
            hom: Arc::new(p.product.proj_left.clone()),
            source: Arc::clone(&p.ctx),
            target: Arc::clone(&p.left),
        });
        homs.push(HomEntry {
            hom: Arc::new(p.product.proj_right.clone()),
            source: Arc::clone(&p.ctx),
            target: Arc::clone(&p.right),
        });
        if Arc::ptr_eq(&p.left.ring, &p.right.ring) {
            let prod = Arc::clone(&p.product);
            let diag = RingHom::from_fn(
                &p.left.ring,
                &p.ctx.ring,
                move |x| prod.element(x, x),
                "diag",
            )
            .expect("diagonal embedding");
            homs.push(HomEntry {
                hom: Arc::new(diag),
                source: Arc::clone(&p.left),
                target: Arc::clone(&p.ctx),
            });
        }
    }

    (
        Corpus {
            rings,
            products,
            idealizations,
            amalgams,
            homs,
            modules,
        },
        diags,
    )
}

fn make_amalg_ctx(
    am: Amalgamation,
    base: &Arc<RingCtx>,
    host: &Arc<RingCtx>,
    rings: &mut Vec<Arc<RingCtx>>,
) -> Arc<AmalgCtx> {
    let ctx = RingCtx::new(Arc::clone(&am.ring));
    rings.push(Arc::clone(&ctx));
    let sub = RingCtx::new(Arc::clone(&am.image_plus_j.ring));
    Arc::new(AmalgCtx {
        am: Arc::new(am),
        ctx,
        base: Arc::clone(base),
        host: Arc::clone(host),
        sub,
    })
}

fn build_recipe_amalgam(
    recipe: &AmalgamationRecipe,
    caps: &OrderCaps,
) -> Result<Amalgamation, String> {
    let text = format!(
        "amalg({},{},{},{})",
        recipe.base, recipe.host, recipe.hom, recipe.ideal
    );
    let ast = dsl::parse_ring(&text).map_err(|e| e.to_string())?;
    let evaluated = dsl::eval_ring(&ast, caps).map_err(|e| e.render(&text))?;
    match evaluated.shape {
        dsl::RingShape::Amalgam(am) => {
            Arc::try_unwrap(am).map_err(|_| "amalgamation still shared".to_string())
        }
        _ => Err("recipe did not evaluate to an amalgamation".into()),
    }
}

/// Multiplicative-closure candidates for one ring: closures of `{1, u}`
/// that avoid zero, deduplicated, in ascending-seed order, capped.
fn mult_closed_candidates(ctx: &RingCtx, cap: usize) -> Vec<ElemSet> {
    let ring = &ctx.ring;
    let mut out: Vec<ElemSet> = Vec::new();
    for u in ring.elements() {
        let mut s = ElemSet::empty(ring.order());
        s.insert(ring.one());
        let mut frontier = vec![u];
        s.insert(u);
        while let Some(x) = frontier.pop() {
            for y in s.clone().iter() {
                let p = ring.mul(x, y);
                if s.insert(p) {
                    frontier.push(p);
                }
            }
        }
        if s.contains(ring.zero()) {
            continue;
        }
        if !out.contains(&s) {
            out.push(s);
        }
        if out.len() >= cap {
            break;
        }
    }
    out
}

/// Weakly-J-closed candidates for the maximal-disjoint check: complements of
/// proper ideals, plus the unit group and the whole ring.
fn maxs_candidates(ctx: &RingCtx) -> Vec<ElemSet> {
    let mut out: Vec<ElemSet> = Vec::new();
    for &i in &ctx.proper {
        let c = ctx.ideal(i).members().complement();
        if !out.contains(&c) {
            out.push(c);
        }
    }
    let units = ctx.ring.units().clone();
    if !out.contains(&units) {
        out.push(units);
    }
    let full = ElemSet::full(ctx.ring.order());
    if !out.contains(&full) {
        out.push(full);
    }
    out
}

/// Upper bound on ring order for localization instances; the fraction-class
/// construction is quadratic in `|R|·|S|`.
const LOCALIZATION_ORDER_MAX: usize = 64;
const MULT_SET_CAP: usize = 16;

/// Enumerates the instances a theorem quantifies over, in deterministic
/// order.
pub fn instances_for(id: TheoremId, corpus: &Corpus) -> Vec<Instance> {
    let mut out = Vec::new();
    match id {
        TheoremId::TQuasi => {
            for ctx in &corpus.rings {
                out.push(Instance::Ring {
                    ctx: Arc::clone(ctx),
                });
            }
        }
        TheoremId::PJr
        | TheoremId::TSq
        | TheoremId::TEq
        | TheoremId::PWp
        | TheoremId::CWp2
        | TheoremId::PPres
        | TheoremId::CPre
        | TheoremId::PQpres
        | TheoremId::LQp
        | TheoremId::TSpres
        | TheoremId::LSup
        | TheoremId::PMc => {
            for ctx in &corpus.rings {
                for &i in &ctx.proper {
                    out.push(Instance::Ideal {
                        ctx: Arc::clone(ctx),
                        ideal: i,
                    });
                }
            }
        }
        TheoremId::PInt | TheoremId::PSum => {
            for ctx in &corpus.rings {
                for &a in &ctx.proper {
                    for &b in &ctx.proper {
                        out.push(Instance::IdealPair {
                            ctx: Arc::clone(ctx),
                            first: a,
                            second: b,
                        });
                    }
                }
            }
        }
        TheoremId::CQuo => {
            for ctx in &corpus.rings {
                for &inner in &ctx.proper {
                    for &outer in &ctx.proper {
                        if ctx
                            .ideal(inner)
                            .members()
                            .is_subset(ctx.ideal(outer).members())
                        {
                            out.push(Instance::NestedIdeals {
                                ctx: Arc::clone(ctx),
                                inner,
                                outer,
                            });
                        }
                    }
                }
            }
        }
        TheoremId::PQuot => {
            for ctx in &corpus.rings {
                let n = ctx.ring.order();
                for &i in &ctx.proper {
                    for a in ctx.ring.elements() {
                        if ctx.ideal(i).contains(a) {
                            continue;
                        }
                        out.push(Instance::IdealWithSubset {
                            ctx: Arc::clone(ctx),
                            ideal: i,
                            subset: ElemSet::from_indices(n, [a.index()]),
                        });
                    }
                    for &k in &ctx.proper {
                        let subset = ctx.ideal(k).members().clone();
                        if subset.is_subset(ctx.ideal(i).members()) {
                            continue;
                        }
                        out.push(Instance::IdealWithSubset {
                            ctx: Arc::clone(ctx),
                            ideal: i,
                            subset,
                        });
                    }
                }
            }
        }
        TheoremId::CNak => {
            for entry in &corpus.modules {
                for &i in &entry.ctx.proper {
                    out.push(Instance::IdealWithModule {
                        ctx: Arc::clone(&entry.ctx),
                        ideal: i,
                        module: Arc::clone(&entry.module),
                    });
                }
            }
        }
        TheoremId::PCart => {
            for entry in &corpus.products {
                for &i in &entry.ctx.proper {
                    if entry.ctx.ideal(i).is_zero() {
                        continue;
                    }
                    out.push(Instance::ProductIdeal {
                        entry: Arc::clone(entry),
                        ideal: i,
                    });
                }
            }
        }
        TheoremId::PLoc => {
            for ctx in &corpus.rings {
                if ctx.ring.order() > LOCALIZATION_ORDER_MAX {
                    continue;
                }
                for set in mult_closed_candidates(ctx, MULT_SET_CAP) {
                    for &i in &ctx.proper {
                        out.push(Instance::IdealWithMultSet {
                            ctx: Arc::clone(ctx),
                            ideal: i,
                            set: set.clone(),
                        });
                    }
                }
            }
        }
        TheoremId::PMaxs => {
            for ctx in &corpus.rings {
                for set in maxs_candidates(ctx) {
                    for &i in &ctx.proper {
                        if !ctx.ideal(i).members().is_disjoint(&set) {
                            continue;
                        }
                        out.push(Instance::IdealWithMultSet {
                            ctx: Arc::clone(ctx),
                            ideal: i,
                            set: set.clone(),
                        });
                    }
                }
            }
        }
        TheoremId::PHom => {
            for entry in &corpus.homs {
                if entry.hom.is_mono() {
                    for &i in &entry.target.proper {
                        out.push(Instance::HomIdeal {
                            hom: Arc::clone(&entry.hom),
                            source: Arc::clone(&entry.source),
                            target: Arc::clone(&entry.target),
                            side: HomSide::TargetIdeal,
                            ideal: i,
                        });
                    }
                }
                if entry.hom.is_epi() {
                    let kernel = entry.hom.kernel();
                    for &i in &entry.source.proper {
                        if !kernel.is_subset(entry.source.ideal(i).members()) {
                            continue;
                        }
                        out.push(Instance::HomIdeal {
                            hom: Arc::clone(&entry.hom),
                            source: Arc::clone(&entry.source),
                            target: Arc::clone(&entry.target),
                            side: HomSide::SourceIdeal,
                            ideal: i,
                        });
                    }
                }
            }
        }
        TheoremId::TIdl => {
            for entry in &corpus.idealizations {
                for &i in &entry.base.proper {
                    let im =
                        crate::construct::ideal_action_image(entry.base.ideal(i), &entry.idl.module);
                    for n in &entry.submodules {
                        if !im.is_subset(n) {
                            continue;
                        }
                        out.push(Instance::IdealizationIdeal {
                            entry: Arc::clone(entry),
                            ideal: i,
                            submodule: n.clone(),
                        });
                    }
                }
            }
        }
        TheoremId::LMax | TheoremId::PPp | TheoremId::CCj => {
            for entry in &corpus.amalgams {
                out.push(Instance::Amalg {
                    entry: Arc::clone(entry),
                });
            }
        }
        TheoremId::TAmlI => {
            for entry in &corpus.amalgams {
                for &i in &entry.base.proper {
                    out.push(Instance::AmalgIdeal {
                        entry: Arc::clone(entry),
                        ideal: i,
                    });
                }
            }
        }
        TheoremId::TAmlK => {
            for entry in &corpus.amalgams {
                if !entry.am.j.is_maximal() || !entry.am.hom.is_epi() {
                    continue;
                }
                for &k in &entry.sub.proper {
                    out.push(Instance::AmalgHostIdeal {
                        entry: Arc::clone(entry),
                        ideal: k,
                    });
                }
            }
        }
        TheoremId::C12 => {
            for entry in &corpus.amalgams {
                if !entry.am.is_duplication() || !entry.am.j.is_maximal() {
                    continue;
                }
                for &k in &entry.sub.proper {
                    out.push(Instance::AmalgHostIdeal {
                        entry: Arc::clone(entry),
                        ideal: k,
                    });
                }
            }
        }
        TheoremId::P13 => {
            for entry in &corpus.amalgams {
                let j_in_sub: Vec<usize> = entry
                    .sub
                    .lattice
                    .iter()
                    .enumerate()
                    .filter(|(_, t)| {
                        entry
                            .am
                            .image_plus_j
                            .set_to_parent(t.members())
                            .is_subset(entry.am.j.members())
                    })
                    .map(|(idx, _)| idx)
                    .collect();
                for &i in &entry.base.proper {
                    for &t in &j_in_sub {
                        out.push(Instance::AmalgIdealPairT {
                            entry: Arc::clone(entry),
                            ideal: i,
                            t,
                        });
                    }
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_spec_matches_standard_corpus() {
        let spec = CorpusSpec::default();
        assert_eq!(spec.zn_max, 64);
        assert_eq!(spec.product_order_max, 64);
        assert_eq!(spec.idealization_order_max, 144);
        assert_eq!(spec.duplication_zn_max, 12);
    }

    #[test]
    fn tiny_corpus_is_deterministic() {
        let spec = CorpusSpec {
            zn_max: 8,
            product_order_max: 8,
            quotient_depth: 1,
            idealization_order_max: 8,
            duplication_zn_max: 3,
            ..CorpusSpec::default()
        };
        let (c1, d1) = build_corpus(&spec);
        let (c2, d2) = build_corpus(&spec);
        assert_eq!(d1, d2);
        let labels1: Vec<&str> = c1.rings.iter().map(|c| c.label()).collect();
        let labels2: Vec<&str> = c2.rings.iter().map(|c| c.label()).collect();
        assert_eq!(labels1, labels2);
        assert!(!c1.amalgams.is_empty());
        assert!(!c1.products.is_empty());
        assert!(!c1.idealizations.is_empty());
        // Quotients of Z_n and products are present.
        assert!(labels1.iter().any(|l| l.contains('/')));
    }

    #[test]
    fn recipe_amalgamation_is_built() {
        let spec = CorpusSpec {
            zn_max: 6,
            product_order_max: 4,
            quotient_depth: 0,
            idealization_order_max: 4,
            duplication_zn_max: 2,
            amalgamations: vec![AmalgamationRecipe {
                base: "Z6".into(),
                host: "Z2".into(),
                hom: "mod2".into(),
                ideal: "<1>".into(),
            }],
            ..CorpusSpec::default()
        };
        let (corpus, diags) = build_corpus(&spec);
        assert!(diags.is_empty(), "{diags:?}");
        assert!(corpus
            .amalgams
            .iter()
            .any(|a| a.ctx.label().starts_with("amalg(")));
    }

    #[test]
    fn instance_enumeration_is_deterministic() {
        let spec = CorpusSpec {
            zn_max: 6,
            product_order_max: 6,
            quotient_depth: 1,
            idealization_order_max: 8,
            duplication_zn_max: 3,
            ..CorpusSpec::default()
        };
        let (corpus, _) = build_corpus(&spec);
        for id in [TheoremId::TEq, TheoremId::PQuot, TheoremId::TAmlI] {
            let a: Vec<String> = instances_for(id, &corpus)
                .iter()
                .map(|i| i.describe())
                .collect();
            let b: Vec<String> = instances_for(id, &corpus)
                .iter()
                .map(|i| i.describe())
                .collect();
            assert_eq!(a, b);
            assert!(!a.is_empty());
        }
    }
}
