//! The theorem checkers. Each encodes one catalog statement as hypothesis
//! scans plus conclusion checks over a typed instance; guarded converses are
//! separate sub-checks that fire only when their side condition holds.

use std::sync::Arc;

use crate::classify;
use crate::construct::{ideal_in_idealization, localization, module_annihilator};
use crate::elem::{ElemSet, ElementId};
use crate::ideal::{self, IdealSet, MultSet};

use super::{HomSide, Instance, TheoremError, TheoremId, TheoremVerdict, TheoremWitness};

/// Accumulates sub-check outcomes for one instance. The first failure wins;
/// `fired` records which substantive hypotheses held.
struct Check {
    fired: Vec<&'static str>,
    failure: Option<TheoremWitness>,
}

impl Check {
    fn new() -> Check {
        Check {
            fired: Vec::new(),
            failure: None,
        }
    }

    fn mark_fired(&mut self, subcheck: &'static str) {
        if !self.fired.contains(&subcheck) {
            self.fired.push(subcheck);
        }
    }

    fn implication(
        &mut self,
        subcheck: &'static str,
        hypothesis: bool,
        conclusion: impl FnOnce() -> bool,
        witness: impl FnOnce() -> (Vec<ElementId>, String),
    ) {
        if self.failure.is_some() || !hypothesis {
            return;
        }
        self.mark_fired(subcheck);
        if !conclusion() {
            let (elements, detail) = witness();
            self.failure = Some(TheoremWitness {
                subcheck,
                elements,
                detail,
            });
        }
    }

    fn equivalence(
        &mut self,
        subcheck: &'static str,
        lhs: bool,
        rhs: bool,
        witness: impl FnOnce() -> (Vec<ElementId>, String),
    ) {
        if self.failure.is_some() {
            return;
        }
        self.mark_fired(subcheck);
        if lhs != rhs {
            let (elements, detail) = witness();
            self.failure = Some(TheoremWitness {
                subcheck,
                elements,
                detail,
            });
        }
    }

    fn verdict(self, theorem: TheoremId, instance: &Instance) -> TheoremVerdict {
        TheoremVerdict {
            theorem,
            instance: instance.describe(),
            holds: self.failure.is_none(),
            vacuous: self.failure.is_none() && self.fired.is_empty(),
            fired: self.fired,
            witness: self.failure,
        }
    }
}

fn shape_err(theorem: TheoremId, expected: &'static str) -> TheoremError {
    TheoremError::InstanceShapeMismatch { theorem, expected }
}

pub(super) fn check(id: TheoremId, instance: &Instance) -> Result<TheoremVerdict, TheoremError> {
    match id {
        TheoremId::TQuasi => t_quasi(instance),
        TheoremId::PJr => p_jr(instance),
        TheoremId::TSq => t_sq(instance),
        TheoremId::CNak => c_nak(instance),
        TheoremId::TEq => t_eq(instance),
        TheoremId::PQuot => p_quot(instance),
        TheoremId::PWp => p_wp(instance),
        TheoremId::CWp2 => c_wp2(instance),
        TheoremId::PInt => p_int(instance),
        TheoremId::PSum => p_sum(instance),
        TheoremId::PCart => p_cart(instance),
        TheoremId::PLoc => p_loc(instance),
        TheoremId::PHom => p_hom(instance),
        TheoremId::CQuo => c_quo(instance),
        TheoremId::PPres => p_pres(instance),
        TheoremId::CPre => c_pre(instance),
        TheoremId::PQpres => p_qpres(instance),
        TheoremId::LQp => l_qp(instance),
        TheoremId::TSpres => t_spres(instance),
        TheoremId::LSup => l_sup(instance),
        TheoremId::PMc => p_mc(instance),
        TheoremId::PMaxs => p_maxs(instance),
        TheoremId::TIdl => t_idl(instance),
        TheoremId::LMax => l_max(instance),
        TheoremId::PPp => p_pp(instance),
        TheoremId::TAmlI => t_aml_i(instance),
        TheoremId::CCj => c_cj(instance),
        TheoremId::TAmlK => t_aml_k(instance),
        TheoremId::C12 => c_12(instance),
        TheoremId::P13 => p_13(instance),
    }
}

// ---------------------------------------------------------------------------
// Ring-shaped checks

fn t_quasi(instance: &Instance) -> Result<TheoremVerdict, TheoremError> {
    let Instance::Ring { ctx } = instance else {
        return Err(shape_err(TheoremId::TQuasi, "ring"));
    };
    let b1 = ctx.ring.is_quasi_local();
    let b2 = ctx.proper.iter().all(|&i| ctx.j_ideal[i]);
    let b3 = ctx.proper.iter().all(|&i| ctx.quasi_j[i]);
    let b4 = ctx.proper.iter().all(|&i| ctx.weakly_j[i]);
    let b5 = ctx
        .principal_indices()
        .into_iter()
        .filter(|&i| ctx.is_proper(i))
        .all(|i| ctx.weakly_j[i]);
    let mut check = Check::new();
    check.equivalence(
        "five-way-equivalence",
        b1 == b2 && b2 == b3 && b3 == b4 && b4 == b5,
        true,
        || (vec![], format!("clauses evaluated as [{b1},{b2},{b3},{b4},{b5}]")),
    );
    Ok(check.verdict(TheoremId::TQuasi, instance))
}

// ---------------------------------------------------------------------------
// Single-ideal checks

fn p_jr(instance: &Instance) -> Result<TheoremVerdict, TheoremError> {
    let Instance::Ideal { ctx, ideal } = instance else {
        return Err(shape_err(TheoremId::PJr, "ring+ideal"));
    };
    let (ctx, i) = (ctx, *ideal);
    let ring = &ctx.ring;
    let id = ctx.ideal(i);
    let lhs = ctx.weakly_j[i];

    let in_jac = id.members().is_subset(ctx.jacobson());
    let j_of_i = ideal::j_of_ideal(id).expect("proper ideal");
    let mut pair_cond = true;
    let mut bad: Option<(ElementId, ElementId)> = None;
    'outer: for a in ring.elements() {
        for b in ring.elements() {
            let ab = ring.mul(a, b);
            if ab != ring.zero() && id.contains(ab) && !j_of_i.contains(a) && !id.contains(b) {
                pair_cond = false;
                bad = Some((a, b));
                break 'outer;
            }
        }
    }
    let rhs = in_jac && pair_cond;
    let mut check = Check::new();
    check.equivalence("radical-containment-characterization", lhs, rhs, || {
        let elems = bad.map(|(a, b)| vec![a, b]).unwrap_or_default();
        (
            elems,
            format!("weaklyJ={lhs}, I⊆J(R)={in_jac}, pair condition={pair_cond}"),
        )
    });
    Ok(check.verdict(TheoremId::PJr, instance))
}

fn t_sq(instance: &Instance) -> Result<TheoremVerdict, TheoremError> {
    let Instance::Ideal { ctx, ideal } = instance else {
        return Err(shape_err(TheoremId::TSq, "ring+ideal"));
    };
    let i = *ideal;
    let mut check = Check::new();
    check.implication(
        "square-zero",
        ctx.weakly_j[i] && !ctx.j_ideal[i],
        || {
            let sq = ctx.product_index(i, i);
            ctx.ideal(sq).is_zero()
        },
        || {
            let id = ctx.ideal(i);
            let ring = &ctx.ring;
            for x in id.members().iter() {
                for y in id.members().iter() {
                    if ring.mul(x, y) != ring.zero() {
                        return (vec![x, y], "nonzero product inside I".into());
                    }
                }
            }
            (vec![], "I² ≠ 0 with no witness pair".into())
        },
    );
    Ok(check.verdict(TheoremId::TSq, instance))
}

fn c_nak(instance: &Instance) -> Result<TheoremVerdict, TheoremError> {
    let Instance::IdealWithModule { ctx, ideal, module } = instance else {
        return Err(shape_err(TheoremId::CNak, "ring+ideal+module"));
    };
    let i = *ideal;
    let hyp = ctx.weakly_j[i] && !ctx.j_ideal[i];
    let mut check = Check::new();
    check.implication(
        "inside-nilradical",
        hyp,
        || ctx.ideal(i).members().is_subset(ctx.ring.nilradical()),
        || {
            let bad = ctx
                .ideal(i)
                .members()
                .iter()
                .find(|&e| !ctx.ring.nilradical().contains(e))
                .unwrap();
            (vec![bad], "member of I outside N(R)".into())
        },
    );
    let im = crate::construct::ideal_action_image(ctx.ideal(i), module);
    check.implication(
        "im-full-forces-zero-module",
        hyp && im.len() == module.order(),
        || module.order() == 1,
        || (vec![], format!("IM = M but |M| = {}", module.order())),
    );
    Ok(check.verdict(TheoremId::CNak, instance))
}

fn t_eq(instance: &Instance) -> Result<TheoremVerdict, TheoremError> {
    let Instance::Ideal { ctx, ideal } = instance else {
        return Err(shape_err(TheoremId::TEq, "ring+ideal"));
    };
    let i = *ideal;
    let ring = &ctx.ring;
    let id = ctx.ideal(i);
    let jac = ctx.jacobson();
    let n = ring.order();

    // Clause 1: the defining scan (cached).
    let c1 = ctx.weakly_j[i];

    // Clause 2: (I : a) = I ∪ (0 : a) for every a outside J(R).
    let mut c2 = true;
    'c2: for a in ring.elements() {
        if jac.contains(a) {
            continue;
        }
        let single = ElemSet::from_indices(n, [a.index()]);
        let res = ideal::residual(id, &single).unwrap();
        let ann = ideal::annihilator(ring, &single).unwrap();
        let union = id.members().union(ann.members());
        if *res.members() != union {
            c2 = false;
            break 'c2;
        }
    }

    // Clause 3: (I : a) ⊆ J(R) ∪ (0 : a) for every a outside I.
    let mut c3 = true;
    'c3: for a in ring.elements() {
        if id.contains(a) {
            continue;
        }
        let single = ElemSet::from_indices(n, [a.index()]);
        let res = ideal::residual(id, &single).unwrap();
        let ann = ideal::annihilator(ring, &single).unwrap();
        let bound = jac.union(ann.members());
        if !res.members().is_subset(&bound) {
            c3 = false;
            break 'c3;
        }
    }

    // Clause 4: 0 ≠ Ka ⊆ I forces K ⊆ J(R) or a ∈ I.
    let mut c4 = true;
    'c4: for a in ring.elements() {
        for k_idx in 0..ctx.lattice.len() {
            let k = ctx.ideal(k_idx);
            let mut nonzero = false;
            let mut inside = true;
            for x in k.members().iter() {
                let xa = ring.mul(x, a);
                if xa != ring.zero() {
                    nonzero = true;
                }
                if !id.contains(xa) {
                    inside = false;
                    break;
                }
            }
            if nonzero && inside && !k.members().is_subset(jac) && !id.contains(a) {
                c4 = false;
                break 'c4;
            }
        }
    }

    // Clause 5: 0 ≠ KL ⊆ I forces K ⊆ J(R) or L ⊆ I.
    let mut c5 = true;
    'c5: for k_idx in 0..ctx.lattice.len() {
        for l_idx in 0..ctx.lattice.len() {
            let p = ctx.product_index(k_idx, l_idx);
            let prod = ctx.ideal(p);
            if !prod.is_zero()
                && prod.members().is_subset(id.members())
                && !ctx.ideal(k_idx).members().is_subset(jac)
                && !ctx.ideal(l_idx).members().is_subset(id.members())
            {
                c5 = false;
                break 'c5;
            }
        }
    }

    let mut check = Check::new();
    check.equivalence(
        "five-scan-agreement",
        c1 == c2 && c2 == c3 && c3 == c4 && c4 == c5,
        true,
        || (vec![], format!("clauses evaluated as [{c1},{c2},{c3},{c4},{c5}]")),
    );
    Ok(check.verdict(TheoremId::TEq, instance))
}

fn p_quot(instance: &Instance) -> Result<TheoremVerdict, TheoremError> {
    let Instance::IdealWithSubset { ctx, ideal, subset } = instance else {
        return Err(shape_err(TheoremId::PQuot, "ring+ideal+subset"));
    };
    let i = *ideal;
    let id = ctx.ideal(i);
    if subset.is_empty() {
        let check = Check::new();
        return Ok(check.verdict(TheoremId::PQuot, instance));
    }
    let ann = ideal::annihilator(&ctx.ring, subset).unwrap();
    let ann_idx = ctx.lattice_index(ann.members());
    let s_outside = !subset.is_subset(id.members());
    let hyp = ctx.weakly_j[i]
        && ctx.is_proper(ann_idx)
        && ctx.weakly_j[ann_idx]
        && s_outside;
    let mut check = Check::new();
    check.implication(
        "residual-stays-weakly-j",
        hyp,
        || {
            let res = ideal::residual(id, subset).unwrap();
            let idx = ctx.lattice_index(res.members());
            ctx.is_proper(idx) && ctx.weakly_j[idx]
        },
        || (vec![], "(I:S) is not a weakly J-ideal".into()),
    );
    Ok(check.verdict(TheoremId::PQuot, instance))
}

fn p_wp(instance: &Instance) -> Result<TheoremVerdict, TheoremError> {
    let Instance::Ideal { ctx, ideal } = instance else {
        return Err(shape_err(TheoremId::PWp, "ring+ideal"));
    };
    let i = *ideal;
    let mut check = Check::new();
    check.implication(
        "weakly-prime-inside-radical",
        ctx.weakly_prime[i] && ctx.ideal(i).members().is_subset(ctx.jacobson()),
        || ctx.weakly_j[i],
        || (vec![], "weakly prime inside J(R) but not weakly J".into()),
    );
    Ok(check.verdict(TheoremId::PWp, instance))
}

fn c_wp2(instance: &Instance) -> Result<TheoremVerdict, TheoremError> {
    let Instance::Ideal { ctx, ideal } = instance else {
        return Err(shape_err(TheoremId::CWp2, "ring+ideal"));
    };
    let i = *ideal;
    let ann_wj = ctx.annihilator_weakly_j();
    let property = |idx: usize| -> bool {
        ctx.is_proper(idx)
            && ctx.weakly_j[idx]
            && ctx
                .ring
                .elements()
                .all(|c| ctx.ideal(idx).contains(c) || ann_wj[c.index()])
    };
    let maximal_for_property = property(i)
        && (0..ctx.lattice.len()).all(|k| {
            k == i
                || !ctx.ideal(i).members().is_subset(ctx.ideal(k).members())
                || ctx.ideal(i) == ctx.ideal(k)
                || !property(k)
        });
    let mut check = Check::new();
    check.implication(
        "maximal-property-forces-weakly-prime",
        maximal_for_property,
        || ctx.weakly_prime[i],
        || (vec![], "maximal for the annihilator property yet not weakly prime".into()),
    );
    Ok(check.verdict(TheoremId::CWp2, instance))
}

fn p_int(instance: &Instance) -> Result<TheoremVerdict, TheoremError> {
    let Instance::IdealPair { ctx, first, second } = instance else {
        return Err(shape_err(TheoremId::PInt, "ring+ideal pair"));
    };
    let (a, b) = (*first, *second);
    let mut check = Check::new();
    check.implication(
        "intersection-stays-weakly-j",
        ctx.weakly_j[a] && ctx.weakly_j[b],
        || {
            let meet = ctx
                .ideal(a)
                .members()
                .intersect(ctx.ideal(b).members());
            let idx = ctx.lattice_index(&meet);
            ctx.weakly_j[idx]
        },
        || (vec![], "intersection of weakly J-ideals is not weakly J".into()),
    );
    Ok(check.verdict(TheoremId::PInt, instance))
}

fn p_sum(instance: &Instance) -> Result<TheoremVerdict, TheoremError> {
    let Instance::IdealPair { ctx, first, second } = instance else {
        return Err(shape_err(TheoremId::PSum, "ring+ideal pair"));
    };
    let (a, b) = (*first, *second);
    let mut check = Check::new();
    check.implication(
        "sum-stays-weakly-j",
        ctx.weakly_j[a] && ctx.weakly_j[b],
        || {
            let s = ideal::sum(ctx.ideal(a), ctx.ideal(b)).unwrap();
            let idx = ctx.lattice_index(s.members());
            ctx.is_proper(idx) && ctx.weakly_j[idx]
        },
        || (vec![], "sum of weakly J-ideals is not a weakly J-ideal".into()),
    );
    Ok(check.verdict(TheoremId::PSum, instance))
}

fn p_cart(instance: &Instance) -> Result<TheoremVerdict, TheoremError> {
    let Instance::ProductIdeal { entry, ideal } = instance else {
        return Err(shape_err(TheoremId::PCart, "product+ideal"));
    };
    let i = *ideal;
    let ctx = &entry.ctx;
    let id = ctx.ideal(i);
    if id.is_zero() || !ctx.is_proper(i) {
        return Ok(Check::new().verdict(TheoremId::PCart, instance));
    }
    let weakly = ctx.weakly_j[i];
    let j = ctx.j_ideal[i];
    let (l, r) = entry.product.split_ideal(id);
    let l_idx = entry.left.lattice_index(l.members());
    let r_idx = entry.right.lattice_index(r.members());
    let exact_product = entry.product.ideal_from_parts(&l, &r) == *id;
    let form = exact_product
        && ((!r.is_proper() && entry.left.is_proper(l_idx) && entry.left.j_ideal[l_idx])
            || (!l.is_proper() && entry.right.is_proper(r_idx) && entry.right.j_ideal[r_idx]));

    let mut check = Check::new();
    // Nonzero weakly J and J coincide in a decomposable ring; both are in
    // fact impossible, which the equivalence still witnesses.
    check.equivalence("weakly-j-iff-j", weakly, j, || {
        (vec![], format!("weaklyJ={weakly}, J={j}"))
    });
    // A nonzero weakly J-ideal would have to be a full-component form with a
    // J-ideal coordinate.
    check.implication(
        "weakly-j-implies-component-form",
        weakly,
        || form,
        || (vec![], "weakly J without the full-component form".into()),
    );
    Ok(check.verdict(TheoremId::PCart, instance))
}

fn p_loc(instance: &Instance) -> Result<TheoremVerdict, TheoremError> {
    let Instance::IdealWithMultSet { ctx, ideal, set } = instance else {
        return Err(shape_err(TheoremId::PLoc, "ring+ideal+multset"));
    };
    let i = *ideal;
    let ring = &ctx.ring;
    let ms = MultSet::new(Arc::clone(ring), set.clone());
    if !ms.is_valid_for_localization() {
        return Ok(Check::new().verdict(TheoremId::PLoc, instance));
    }
    let loc = localization(ring, &ms).expect("validated multiplicative set");
    // Outer hypothesis: J(S⁻¹R) = S⁻¹J(R).
    let jac_ideal = IdealSet::new_unchecked(Arc::clone(ring), ctx.jacobson().clone());
    let extended_jac = loc.extend_ideal(&jac_ideal);
    if *loc.ring.jacobson_radical() != *extended_jac.members() {
        return Ok(Check::new().verdict(TheoremId::PLoc, instance));
    }

    let id = ctx.ideal(i);
    let ext = loc.extend_ideal(id);
    let ext_weakly = ext.is_proper()
        && classify::is_weakly_j_ideal(&loc.ring, &ext).unwrap().holds;

    let mut check = Check::new();
    check.implication(
        "extension-stays-weakly-j",
        ctx.weakly_j[i] && id.members().is_disjoint(set),
        || ext_weakly,
        || (vec![], "S⁻¹I is not a weakly J-ideal of S⁻¹R".into()),
    );

    let z_r = ring.zero_divisors();
    let z_i = ideal::zi_set(ring, id).expect("proper ideal");
    let z_jac = ideal::zi_set(ring, &jac_ideal).expect("J(R) is proper");
    check.implication(
        "contraction-stays-weakly-j",
        ext_weakly
            && set.is_disjoint(z_r)
            && set.is_disjoint(&z_i)
            && set.is_disjoint(&z_jac),
        || ctx.weakly_j[i],
        || (vec![], "S⁻¹I weakly J with disjointness, yet I is not".into()),
    );
    Ok(check.verdict(TheoremId::PLoc, instance))
}

fn p_hom(instance: &Instance) -> Result<TheoremVerdict, TheoremError> {
    let Instance::HomIdeal {
        hom,
        source,
        target,
        side,
        ideal,
    } = instance
    else {
        return Err(shape_err(TheoremId::PHom, "hom+ideal"));
    };
    let mut check = Check::new();
    match side {
        HomSide::TargetIdeal => {
            let i = *ideal;
            check.implication(
                "mono-preimage-stays-weakly-j",
                hom.is_mono() && target.weakly_j[i],
                || {
                    let pre = hom.preimage_of_set(target.ideal(i).members());
                    let idx = source.lattice_index(&pre);
                    source.is_proper(idx) && source.weakly_j[idx]
                },
                || (vec![], "preimage under a monomorphism lost weakly J".into()),
            );
        }
        HomSide::SourceIdeal => {
            let i = *ideal;
            check.implication(
                "epi-image-stays-weakly-j",
                hom.is_epi()
                    && source.weakly_j[i]
                    && hom.kernel().is_subset(source.ideal(i).members()),
                || {
                    let img = hom.image_of_set(source.ideal(i).members());
                    let idx = target.lattice_index(&img);
                    target.is_proper(idx) && target.weakly_j[idx]
                },
                || (vec![], "image under an epimorphism lost weakly J".into()),
            );
        }
    }
    Ok(check.verdict(TheoremId::PHom, instance))
}

fn c_quo(instance: &Instance) -> Result<TheoremVerdict, TheoremError> {
    let Instance::NestedIdeals { ctx, inner, outer } = instance else {
        return Err(shape_err(TheoremId::CQuo, "ring+nested ideals"));
    };
    let (k, i) = (*inner, *outer);
    debug_assert!(ctx
        .ideal(k)
        .members()
        .is_subset(ctx.ideal(i).members()));
    let q = ctx.quotient(k);
    let image_idx = ctx.image_in_quotient(k, i);
    let image_proper = q.ctx.is_proper(image_idx);
    let image_weakly = image_proper && q.ctx.weakly_j[image_idx];

    let mut check = Check::new();
    check.implication(
        "push-to-quotient",
        ctx.weakly_j[i],
        || image_weakly,
        || (vec![], "I/K lost weakly J in R/K".into()),
    );
    check.implication(
        "lift-j-ideal",
        ctx.j_ideal[k] && image_weakly,
        || ctx.j_ideal[i],
        || (vec![], "K J-ideal and I/K weakly J, but I is not a J-ideal".into()),
    );
    check.implication(
        "lift-weakly-j",
        ctx.weakly_j[k] && image_weakly,
        || ctx.weakly_j[i],
        || (vec![], "K weakly J and I/K weakly J, but I is not weakly J".into()),
    );
    Ok(check.verdict(TheoremId::CQuo, instance))
}

fn p_pres(instance: &Instance) -> Result<TheoremVerdict, TheoremError> {
    let Instance::Ideal { ctx, ideal } = instance else {
        return Err(shape_err(TheoremId::PPres, "ring+ideal"));
    };
    let i = *ideal;
    let mut check = Check::new();
    check.implication(
        "weakly-j-collapses-to-j",
        ctx.ring.is_presimplifiable() && ctx.weakly_j[i],
        || ctx.j_ideal[i],
        || (vec![], "presimplifiable ring with weakly-J-not-J ideal".into()),
    );
    Ok(check.verdict(TheoremId::PPres, instance))
}

fn c_pre(instance: &Instance) -> Result<TheoremVerdict, TheoremError> {
    let Instance::Ideal { ctx, ideal } = instance else {
        return Err(shape_err(TheoremId::CPre, "ring+ideal"));
    };
    let i = *ideal;
    let mut check = Check::new();
    check.implication(
        "quotient-presimplifiable",
        ctx.ring.is_presimplifiable() && ctx.weakly_j[i],
        || ctx.quotient(i).ctx.ring.is_presimplifiable(),
        || (vec![], "R/I is not presimplifiable".into()),
    );
    Ok(check.verdict(TheoremId::CPre, instance))
}

fn p_qpres(instance: &Instance) -> Result<TheoremVerdict, TheoremError> {
    let Instance::Ideal { ctx, ideal } = instance else {
        return Err(shape_err(TheoremId::PQpres, "ring+ideal"));
    };
    let i = *ideal;
    let mut check = Check::new();
    check.implication(
        "quotient-quasi-presimplifiable",
        ctx.ring.is_quasi_presimplifiable() && ctx.weakly_j[i],
        || ctx.quotient(i).ctx.ring.is_quasi_presimplifiable(),
        || (vec![], "R/I is not quasi-presimplifiable".into()),
    );
    Ok(check.verdict(TheoremId::PQpres, instance))
}

fn l_qp(instance: &Instance) -> Result<TheoremVerdict, TheoremError> {
    let Instance::Ideal { ctx, ideal } = instance else {
        return Err(shape_err(TheoremId::LQp, "ring+ideal"));
    };
    let i = *ideal;
    let lhs = ctx.quasi_j[i];
    let rhs = ctx.ideal(i).members().is_subset(ctx.jacobson())
        && ctx.quotient(i).ctx.ring.is_quasi_presimplifiable();
    let mut check = Check::new();
    check.equivalence("quasi-j-characterization", lhs, rhs, || {
        (vec![], format!("quasiJ={lhs}, containment+quotient={rhs}"))
    });
    Ok(check.verdict(TheoremId::LQp, instance))
}

fn t_spres(instance: &Instance) -> Result<TheoremVerdict, TheoremError> {
    let Instance::Ideal { ctx, ideal } = instance else {
        return Err(shape_err(TheoremId::TSpres, "ring+ideal"));
    };
    let i = *ideal;
    if ctx.ideal(i).is_zero() {
        return Ok(Check::new().verdict(TheoremId::TSpres, instance));
    }
    let lhs = ctx.weakly_j[i];
    let s_pres = classify::is_s_presimplifiable_quotient(&ctx.ring, ctx.ideal(i))
        .unwrap()
        .holds;
    let rhs = ctx.ideal(i).members().is_subset(ctx.jacobson()) && s_pres;
    let mut check = Check::new();
    check.equivalence("strong-zero-divisor-characterization", lhs, rhs, || {
        (vec![], format!("weaklyJ={lhs}, I⊆J(R)∧SZ⊆J(R/I)={rhs}"))
    });
    Ok(check.verdict(TheoremId::TSpres, instance))
}

fn l_sup(instance: &Instance) -> Result<TheoremVerdict, TheoremError> {
    let Instance::Ideal { ctx, ideal } = instance else {
        return Err(shape_err(TheoremId::LSup, "ring+ideal"));
    };
    let i = *ideal;
    let mut check = Check::new();
    check.implication(
        "weakly-j-is-superfluous",
        ctx.weakly_j[i],
        || ctx.superfluous[i],
        || (vec![], "weakly J-ideal that is not superfluous".into()),
    );
    Ok(check.verdict(TheoremId::LSup, instance))
}

fn p_mc(instance: &Instance) -> Result<TheoremVerdict, TheoremError> {
    let Instance::Ideal { ctx, ideal } = instance else {
        return Err(shape_err(TheoremId::PMc, "ring+ideal"));
    };
    let i = *ideal;
    let lhs = ctx.weakly_j[i];
    let complement = ctx.ideal(i).members().complement();
    let ms = MultSet::new(Arc::clone(&ctx.ring), complement);
    // A failed precondition (R∖J(R) ⊄ S) means the complement is not a
    // weakly J-multiplicatively closed subset.
    let rhs = matches!(
        classify::is_weakly_j_mult_closed(&ctx.ring, &ms),
        Ok(v) if v.holds
    );
    let mut check = Check::new();
    check.equivalence("complement-duality", lhs, rhs, || {
        (vec![], format!("weaklyJ={lhs}, complement closed={rhs}"))
    });
    Ok(check.verdict(TheoremId::PMc, instance))
}

fn p_maxs(instance: &Instance) -> Result<TheoremVerdict, TheoremError> {
    let Instance::IdealWithMultSet { ctx, ideal, set } = instance else {
        return Err(shape_err(TheoremId::PMaxs, "ring+ideal+multset"));
    };
    let i = *ideal;
    let ring = &ctx.ring;
    let ms = MultSet::new(Arc::clone(ring), set.clone());
    let closed = matches!(
        classify::is_weakly_j_mult_closed(ring, &ms),
        Ok(v) if v.holds
    );
    // S must avoid every annihilator of an element outside J(R).
    let mut ann_union = ElemSet::empty(ring.order());
    for a in ring.elements() {
        if ctx.jacobson().contains(a) {
            continue;
        }
        for x in ring.elements() {
            if ring.mul(a, x) == ring.zero() {
                ann_union.insert(x);
            }
        }
    }
    let avoids = set.is_disjoint(&ann_union);
    let disjoint = ctx.ideal(i).members().is_disjoint(set);
    let maximal_disjoint = disjoint
        && (0..ctx.lattice.len()).all(|k| {
            ctx.ideal(k) == ctx.ideal(i)
                || !ctx.ideal(i).members().is_subset(ctx.ideal(k).members())
                || !ctx.ideal(k).members().is_disjoint(set)
        });
    let mut check = Check::new();
    check.implication(
        "maximal-disjoint-is-weakly-j",
        closed && avoids && maximal_disjoint,
        || ctx.weakly_j[i],
        || (vec![], "maximal disjoint ideal is not weakly J".into()),
    );
    Ok(check.verdict(TheoremId::PMaxs, instance))
}

// ---------------------------------------------------------------------------
// Idealization

fn t_idl(instance: &Instance) -> Result<TheoremVerdict, TheoremError> {
    let Instance::IdealizationIdeal {
        entry,
        ideal,
        submodule,
    } = instance
    else {
        return Err(shape_err(TheoremId::TIdl, "idealization+ideal+submodule"));
    };
    let i = *ideal;
    let idl = &entry.idl;
    let base = &entry.base;
    let big = &entry.ctx;
    let mut check = Check::new();

    if let Ok(pair) = ideal_in_idealization(idl, base.ideal(i), submodule) {
        if pair.is_proper() {
            let pair_idx = big.lattice_index(pair.members());
            check.implication(
                "pair-ideal-projects",
                big.weakly_j[pair_idx],
                || base.weakly_j[i],
                || (vec![], "I(+)N weakly J but I is not".into()),
            );
        }
    }

    // Full-module clause is an equivalence, evaluated on N = M instances.
    if submodule.len() == idl.module.order() {
        let pair = ideal_in_idealization(idl, base.ideal(i), submodule)
            .expect("IM ⊆ M always");
        if pair.is_proper() {
            let pair_idx = big.lattice_index(pair.members());
            let ann = module_annihilator(&idl.module);
            let mut cond = true;
            let mut bad: Option<(ElementId, ElementId)> = None;
            'outer: for x in base.ring.elements() {
                for y in base.ring.elements() {
                    if base.ring.mul(x, y) == base.ring.zero()
                        && !base.jacobson().contains(x)
                        && !base.ideal(i).contains(y)
                        && (!ann.contains(x) || !ann.contains(y))
                    {
                        cond = false;
                        bad = Some((x, y));
                        break 'outer;
                    }
                }
            }
            let lhs = big.weakly_j[pair_idx];
            let rhs = base.weakly_j[i] && cond;
            check.equivalence("full-module-equivalence", lhs, rhs, || {
                let elems = bad.map(|(x, y)| vec![x, y]).unwrap_or_default();
                (elems, format!("I(+)M weaklyJ={lhs}, I weaklyJ ∧ Ann-condition={rhs}"))
            });
        }
    }
    Ok(check.verdict(TheoremId::TIdl, instance))
}

// ---------------------------------------------------------------------------
// Amalgamation family

fn l_max(instance: &Instance) -> Result<TheoremVerdict, TheoremError> {
    let Instance::Amalg { entry } = instance else {
        return Err(shape_err(TheoremId::LMax, "amalgamation"));
    };
    let am = &entry.am;
    let big = &entry.ctx;
    let mut expected: Vec<ElemSet> = Vec::new();
    for &m in &entry.base.maximal {
        let joined = am.ideal_join(entry.base.ideal(m)).unwrap();
        expected.push(joined.members().clone());
    }
    for &q in &entry.host.maximal {
        let q_set = entry.host.ideal(q).members();
        if am.j.members().is_subset(q_set) {
            continue;
        }
        let mut bar = ElemSet::empty(big.ring.order());
        for e in big.ring.elements() {
            let (_, second) = am.parts(e);
            if q_set.contains(second) {
                bar.insert(e);
            }
        }
        if !expected.contains(&bar) {
            expected.push(bar);
        }
    }
    let mut actual: Vec<ElemSet> = big
        .maximal
        .iter()
        .map(|&i| big.ideal(i).members().clone())
        .collect();
    expected.sort_by(|a, b| a.cmp_canonical(b));
    actual.sort_by(|a, b| a.cmp_canonical(b));

    let mut check = Check::new();
    check.equivalence(
        "maximal-spectrum-formula",
        expected == actual,
        true,
        || {
            (
                vec![],
                format!(
                    "formula gives {} maximal ideals, lattice has {}",
                    expected.len(),
                    actual.len()
                ),
            )
        },
    );
    // When J ⊆ J(S), the radical transfers coordinatewise.
    let j_in_host_radical = am.j.members().is_subset(entry.host.jacobson());
    check.implication(
        "radical-transfer",
        j_in_host_radical,
        || {
            let jac_base = IdealSet::new_unchecked(
                Arc::clone(&entry.base.ring),
                entry.base.jacobson().clone(),
            );
            let joined = am.ideal_join(&jac_base).unwrap();
            *big.ring.jacobson_radical() == *joined.members()
        },
        || (vec![], "J(R⋈ᶠJ) ≠ J(R)⋈ᶠJ despite J ⊆ J(S)".into()),
    );
    Ok(check.verdict(TheoremId::LMax, instance))
}

fn p_pp(instance: &Instance) -> Result<TheoremVerdict, TheoremError> {
    let Instance::Amalg { entry } = instance else {
        return Err(shape_err(TheoremId::PPp, "amalgamation"));
    };
    let big = &entry.ctx;
    let mut check = Check::new();
    check.implication(
        "all-ideals-j",
        entry.base.ring.is_quasi_local()
            && entry.am.j.members().is_subset(entry.host.jacobson()),
        || {
            big.proper
                .iter()
                .all(|&i| big.j_ideal[i] && big.weakly_j[i])
        },
        || (vec![], "amalgamation over a quasi-local base has a non-J ideal".into()),
    );
    Ok(check.verdict(TheoremId::PPp, instance))
}

/// The second weakly-J condition of the joined-ideal transfer:
/// whenever `ab = 0`, `a ∉ J(R)`, `b ∉ I`, every `i, j ∈ J` must satisfy
/// `f(a)j + f(b)i + ij = 0`.
fn joined_condition(
    entry: &super::corpus::AmalgCtx,
    ideal: usize,
) -> (bool, Option<Vec<ElementId>>) {
    let am = &entry.am;
    let base_ring = &entry.base.ring;
    let host = &entry.host.ring;
    for a in base_ring.elements() {
        if entry.base.jacobson().contains(a) {
            continue;
        }
        for b in base_ring.elements() {
            if base_ring.mul(a, b) != base_ring.zero()
                || entry.base.ideal(ideal).contains(b)
            {
                continue;
            }
            let (fa, fb) = (am.hom.apply(a), am.hom.apply(b));
            for i in am.j.members().iter() {
                for j in am.j.members().iter() {
                    let v = host.add(
                        host.add(host.mul(fa, j), host.mul(fb, i)),
                        host.mul(i, j),
                    );
                    if v != host.zero() {
                        return (false, Some(vec![a, b, i, j]));
                    }
                }
            }
        }
    }
    (true, None)
}

fn t_aml_i(instance: &Instance) -> Result<TheoremVerdict, TheoremError> {
    let Instance::AmalgIdeal { entry, ideal } = instance else {
        return Err(shape_err(TheoremId::TAmlI, "amalgamation+ideal"));
    };
    let i = *ideal;
    let am = &entry.am;
    let big = &entry.ctx;
    let joined = am.ideal_join(entry.base.ideal(i)).unwrap();
    let joined_idx = big.lattice_index(joined.members());
    let guard = am.j.members().is_subset(entry.host.jacobson());
    let (cond, cond_witness) = joined_condition(entry, i);

    let mut check = Check::new();
    check.implication(
        "j-forward",
        big.j_ideal[joined_idx],
        || entry.base.j_ideal[i],
        || (vec![], "I⋈ᶠJ is a J-ideal but I is not".into()),
    );
    check.implication(
        "j-converse-under-guard",
        guard && entry.base.j_ideal[i],
        || big.j_ideal[joined_idx],
        || (vec![], "I J-ideal with J ⊆ J(S) but I⋈ᶠJ is not".into()),
    );
    check.implication(
        "weakly-forward",
        big.weakly_j[joined_idx],
        || entry.base.weakly_j[i] && cond,
        || {
            (
                cond_witness.clone().unwrap_or_default(),
                "I⋈ᶠJ weakly J but the base data violates the conditions".into(),
            )
        },
    );
    check.implication(
        "weakly-converse-under-guard",
        guard && entry.base.weakly_j[i] && cond,
        || big.weakly_j[joined_idx],
        || (vec![], "conditions met with J ⊆ J(S) but I⋈ᶠJ is not weakly J".into()),
    );
    Ok(check.verdict(TheoremId::TAmlI, instance))
}

fn c_cj(instance: &Instance) -> Result<TheoremVerdict, TheoremError> {
    let Instance::Amalg { entry } = instance else {
        return Err(shape_err(TheoremId::CCj, "amalgamation"));
    };
    let am = &entry.am;
    let big = &entry.ctx;
    let guard = am.j.members().is_subset(entry.host.jacobson());
    let mut check = Check::new();
    check.implication(
        "j-ideals-over-0xJ-are-joins",
        guard,
        || {
            let zero_join = am.ideal_join(&IdealSet::zero(&entry.base.ring)).unwrap();
            let mut lhs: Vec<usize> = big
                .proper
                .iter()
                .copied()
                .filter(|&k| {
                    big.j_ideal[k] && zero_join.members().is_subset(big.ideal(k).members())
                })
                .collect();
            let mut rhs: Vec<usize> = entry
                .base
                .proper
                .iter()
                .copied()
                .filter(|&i| entry.base.j_ideal[i])
                .map(|i| {
                    let joined = am.ideal_join(entry.base.ideal(i)).unwrap();
                    big.lattice_index(joined.members())
                })
                .collect();
            lhs.sort_unstable();
            rhs.sort_unstable();
            rhs.dedup();
            lhs == rhs
        },
        || (vec![], "the J-ideals above 0×J are not exactly the joined J-ideals".into()),
    );
    Ok(check.verdict(TheoremId::CCj, instance))
}

/// Shared body of the bar-ideal transfer (general and duplication cases).
fn bar_transfer(
    theorem: TheoremId,
    instance: &Instance,
    entry: &super::corpus::AmalgCtx,
    k_idx: usize,
    outer_hypothesis: bool,
    converse_guard: bool,
) -> TheoremVerdict {
    let am = &entry.am;
    let big = &entry.ctx;
    let host = &entry.host.ring;
    let mut check = Check::new();
    if !outer_hypothesis {
        return check.verdict(theorem, instance);
    }
    let k = entry.sub.ideal(k_idx);
    let bar = am.ideal_bar(k).unwrap();
    let bar_idx = big.lattice_index(bar.members());
    let k_host = am.image_plus_j.set_to_parent(k.members());

    // Second condition of the weakly-J clause: degenerate products over K̄ᶠ
    // must come from degenerate base products.
    let mut cond = true;
    let mut cond_witness: Option<Vec<ElementId>> = None;
    'outer: for a in entry.base.ring.elements() {
        let fa = am.hom.apply(a);
        for b in entry.base.ring.elements() {
            let fb = am.hom.apply(b);
            for j in am.j.members().iter() {
                let faj = host.add(fa, j);
                if host.jacobson_radical().contains(faj) {
                    continue;
                }
                for kk in am.j.members().iter() {
                    let fbk = host.add(fb, kk);
                    if k_host.contains(fbk) {
                        continue;
                    }
                    if host.mul(faj, fbk) == host.zero()
                        && entry.base.ring.mul(a, b) != entry.base.ring.zero()
                    {
                        cond = false;
                        cond_witness = Some(vec![a, b, j, kk]);
                        break 'outer;
                    }
                }
            }
        }
    }

    check.implication(
        "j-forward",
        big.j_ideal[bar_idx],
        || entry.sub.j_ideal[k_idx],
        || (vec![], "K̄ᶠ is a J-ideal but K is not".into()),
    );
    check.implication(
        "j-converse-under-guard",
        converse_guard && entry.sub.j_ideal[k_idx],
        || big.j_ideal[bar_idx],
        || (vec![], "K J-ideal under the guard but K̄ᶠ is not".into()),
    );
    check.implication(
        "weakly-forward",
        big.weakly_j[bar_idx],
        || entry.sub.weakly_j[k_idx] && cond,
        || {
            (
                cond_witness.clone().unwrap_or_default(),
                "K̄ᶠ weakly J but the host data violates the conditions".into(),
            )
        },
    );
    check.implication(
        "weakly-converse-under-guard",
        converse_guard && entry.sub.weakly_j[k_idx] && cond,
        || big.weakly_j[bar_idx],
        || (vec![], "conditions met under the guard but K̄ᶠ is not weakly J".into()),
    );
    check.verdict(theorem, instance)
}

fn t_aml_k(instance: &Instance) -> Result<TheoremVerdict, TheoremError> {
    let Instance::AmalgHostIdeal { entry, ideal } = instance else {
        return Err(shape_err(TheoremId::TAmlK, "amalgamation+host ideal"));
    };
    let am = &entry.am;
    let j_maximal = am.j.is_maximal();
    let outer = j_maximal && am.hom.is_epi();
    // Converse guard: f(J(R)) = J(S) + J and Ker f ⊆ J(R).
    let f_jac = am.hom.image_of_set(entry.base.jacobson());
    let mut jac_plus_j = ElemSet::empty(entry.host.ring.order());
    for x in entry.host.jacobson().iter() {
        for j in am.j.members().iter() {
            jac_plus_j.insert(entry.host.ring.add(x, j));
        }
    }
    let guard = outer
        && f_jac == jac_plus_j
        && am.hom.kernel().is_subset(entry.base.jacobson());
    Ok(bar_transfer(TheoremId::TAmlK, instance, entry, *ideal, outer, guard))
}

fn c_12(instance: &Instance) -> Result<TheoremVerdict, TheoremError> {
    let Instance::AmalgHostIdeal { entry, ideal } = instance else {
        return Err(shape_err(TheoremId::C12, "duplication+host ideal"));
    };
    let am = &entry.am;
    let outer = am.is_duplication() && am.j.is_maximal();
    let guard = outer && am.j.members().is_subset(entry.base.jacobson());
    Ok(bar_transfer(TheoremId::C12, instance, entry, *ideal, outer, guard))
}

fn p_13(instance: &Instance) -> Result<TheoremVerdict, TheoremError> {
    let Instance::AmalgIdealPairT { entry, ideal, t } = instance else {
        return Err(shape_err(TheoremId::P13, "amalgamation+ideal+T"));
    };
    let (i, t_idx) = (*ideal, *t);
    let am = &entry.am;
    let big = &entry.ctx;
    let mut check = Check::new();
    // The containments f(I)J ⊆ T ⊆ J are the instance precondition; a
    // violation makes the instance vacuous.
    if let Ok(joined) = am.ideal_join_t(entry.base.ideal(i), entry.sub.ideal(t_idx)) {
        if joined.is_proper() {
            let idx = big.lattice_index(joined.members());
            check.implication(
                "join-t-projects",
                big.weakly_j[idx],
                || entry.base.weakly_j[i],
                || (vec![], "I⋈ᶠT weakly J but I is not".into()),
            );
        }
    }
    Ok(check.verdict(TheoremId::P13, instance))
}

// ---------------------------------------------------------------------------
