//! Ideals of a finite ring: generation, lattice enumeration, residuals,
//! radicals, annihilators, and the maximal-ideal spectrum.
//!
//! Ideal enumeration works by closing the set of principal ideals under
//! pairwise sums to a fixpoint. Every ideal of a finite ring is a finite
//! join of principal ideals, so the fixpoint is the full lattice; subset
//! enumeration (2^n candidates) is never attempted.

use std::sync::Arc;

use thiserror::Error;

use crate::elem::{ElemSet, ElementId};
use crate::ring::{Ring, RingTable};

#[derive(Debug, Error)]
pub enum IdealError {
    #[error("operands belong to different rings")]
    RingMismatch,
    #[error("operation requires a proper ideal")]
    ImproperIdeal,
    #[error("subset argument must be non-empty")]
    EmptySet,
    #[error("set is not an ideal: {reason}, witness {witness:?}")]
    NotAnIdeal {
        reason: &'static str,
        witness: Vec<ElementId>,
    },
}

/// A subset of a ring's elements known to be an ideal, tagged with its
/// owning ring.
#[derive(Clone)]
pub struct IdealSet {
    ring: Ring,
    members: ElemSet,
}

impl PartialEq for IdealSet {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.ring, &other.ring) && self.members == other.members
    }
}

impl Eq for IdealSet {}

impl std::fmt::Debug for IdealSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "IdealSet({} in {})", self.display_short(), self.ring.label())
    }
}

impl IdealSet {
    /// Validates `members` as an ideal: contains zero, closed under addition
    /// and absorbs ring multiplication. In a finite ring additive closure of
    /// a non-empty set implies closure under negation.
    pub fn new(ring: Ring, members: ElemSet) -> Result<IdealSet, IdealError> {
        assert_eq!(members.universe(), ring.order(), "set universe mismatch");
        if !members.contains(ring.zero()) {
            return Err(IdealError::NotAnIdeal {
                reason: "missing zero",
                witness: vec![ring.zero()],
            });
        }
        for x in members.iter() {
            for y in members.iter() {
                let s = ring.add(x, y);
                if !members.contains(s) {
                    return Err(IdealError::NotAnIdeal {
                        reason: "not closed under addition",
                        witness: vec![x, y],
                    });
                }
            }
        }
        for r in ring.elements() {
            for x in members.iter() {
                if !members.contains(ring.mul(r, x)) {
                    return Err(IdealError::NotAnIdeal {
                        reason: "does not absorb multiplication",
                        witness: vec![r, x],
                    });
                }
            }
        }
        Ok(IdealSet { ring, members })
    }

    /// Wraps a member set that is an ideal by construction.
    pub(crate) fn new_unchecked(ring: Ring, members: ElemSet) -> IdealSet {
        debug_assert!(members.contains(ring.zero()));
        IdealSet { ring, members }
    }

    pub fn zero(ring: &Ring) -> IdealSet {
        let mut m = ElemSet::empty(ring.order());
        m.insert(ring.zero());
        IdealSet::new_unchecked(Arc::clone(ring), m)
    }

    pub fn whole(ring: &Ring) -> IdealSet {
        IdealSet::new_unchecked(Arc::clone(ring), ElemSet::full(ring.order()))
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn members(&self) -> &ElemSet {
        &self.members
    }

    pub fn contains(&self, e: ElementId) -> bool {
        self.members.contains(e)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        false // an ideal always contains zero
    }

    pub fn is_zero(&self) -> bool {
        self.members.len() == 1
    }

    pub fn is_proper(&self) -> bool {
        self.members.len() < self.ring.order()
    }

    pub fn is_maximal(&self) -> bool {
        let lattice = self.ring.ideal_lattice();
        self.ring
            .maximal_ideal_indices()
            .iter()
            .any(|&i| lattice[i] == self.members)
    }

    /// Compact display: `<g>` when principal with least generator `g`,
    /// otherwise the member list.
    pub fn display_short(&self) -> String {
        if self.is_zero() {
            return "<0>".into();
        }
        if !self.is_proper() {
            return "<1>".into();
        }
        for g in self.members.iter() {
            if principal_set(&self.ring, g) == self.members {
                return format!("<{}>", self.ring.name(g));
            }
        }
        let names: Vec<&str> = self.members.iter().map(|e| self.ring.name(e)).collect();
        format!("{{{}}}", names.join(","))
    }
}

/// Structural ideal check against raw tables; no ring handle required.
pub fn is_ideal_set(ring: &RingTable, members: &ElemSet) -> bool {
    if members.universe() != ring.order() || !members.contains(ring.zero()) {
        return false;
    }
    for x in members.iter() {
        for y in members.iter() {
            if !members.contains(ring.add(x, y)) {
                return false;
            }
        }
        for r in ring.elements() {
            if !members.contains(ring.mul(r, x)) {
                return false;
            }
        }
    }
    true
}

/// Ring that owns both operands, or a mismatch error.
fn same_ring<'a>(a: &'a IdealSet, b: &IdealSet) -> Result<&'a Ring, IdealError> {
    if Arc::ptr_eq(&a.ring, &b.ring) {
        Ok(&a.ring)
    } else {
        Err(IdealError::RingMismatch)
    }
}

/// `{r·g : r ∈ R}` — already an ideal since `r₁g + r₂g = (r₁+r₂)g`.
pub(crate) fn principal_set(ring: &RingTable, g: ElementId) -> ElemSet {
    let mut s = ElemSet::empty(ring.order());
    for r in ring.elements() {
        s.insert(ring.mul(r, g));
    }
    s
}

/// `{i + j : i ∈ a, j ∈ b}` for two ideal member sets; the sum of two ideals
/// is again an ideal, no further closure needed.
fn sum_sets(ring: &RingTable, a: &ElemSet, b: &ElemSet) -> ElemSet {
    let mut s = ElemSet::empty(ring.order());
    for i in a.iter() {
        for j in b.iter() {
            s.insert(ring.add(i, j));
        }
    }
    s
}

/// Smallest ideal containing `gens`: additive closure of `{r·g}`.
pub fn ideal_generated_by(ring: &Ring, gens: &[ElementId]) -> IdealSet {
    let mut acc = ElemSet::empty(ring.order());
    acc.insert(ring.zero());
    for &g in gens {
        assert!(g.index() < ring.order(), "generator out of range");
        acc = sum_sets(ring, &acc, &principal_set(ring, g));
    }
    IdealSet::new_unchecked(Arc::clone(ring), acc)
}

/// Complete ideal lattice of `ring` in canonical order. Principal ideals are
/// closed under pairwise sums to a fixpoint; `{0}` and `R` are always present.
pub(crate) fn compute_lattice(ring: &RingTable) -> Vec<ElemSet> {
    let mut zero_set = ElemSet::empty(ring.order());
    zero_set.insert(ring.zero());

    let mut found: Vec<ElemSet> = vec![zero_set];
    for g in ring.elements() {
        let p = principal_set(ring, g);
        if !found.contains(&p) {
            found.push(p);
        }
    }
    let mut frontier: Vec<usize> = (0..found.len()).collect();
    while !frontier.is_empty() {
        let mut fresh: Vec<usize> = Vec::new();
        for fi in 0..frontier.len() {
            let i = frontier[fi];
            for j in 0..found.len() {
                let s = sum_sets(ring, &found[i], &found[j]);
                if !found.contains(&s) {
                    found.push(s);
                    fresh.push(found.len() - 1);
                }
            }
        }
        frontier = fresh;
    }
    found.sort_by(|a, b| a.cmp_canonical(b));
    found
}

/// All ideals of `ring`, wrapped and canonically ordered.
pub fn all_ideals(ring: &Ring) -> Vec<IdealSet> {
    ring.ideal_lattice()
        .iter()
        .map(|m| IdealSet::new_unchecked(Arc::clone(ring), m.clone()))
        .collect()
}

/// Maximal elements of the proper-ideal poset.
pub fn maximal_ideals(ring: &Ring) -> Vec<IdealSet> {
    let lattice = ring.ideal_lattice();
    ring.maximal_ideal_indices()
        .iter()
        .map(|&i| IdealSet::new_unchecked(Arc::clone(ring), lattice[i].clone()))
        .collect()
}

/// The Jacobson radical as an ideal.
pub fn jacobson_radical(ring: &Ring) -> IdealSet {
    IdealSet::new_unchecked(Arc::clone(ring), ring.jacobson_radical().clone())
}

/// The nilradical as an ideal.
pub fn nilradical(ring: &Ring) -> IdealSet {
    IdealSet::new_unchecked(Arc::clone(ring), ring.nilradical().clone())
}

/// Intersection of all maximal ideals containing the proper ideal `i`.
pub fn j_of_ideal(i: &IdealSet) -> Result<IdealSet, IdealError> {
    if !i.is_proper() {
        return Err(IdealError::ImproperIdeal);
    }
    let ring = &i.ring;
    let lattice = ring.ideal_lattice();
    let mut acc = ElemSet::full(ring.order());
    let mut any = false;
    for &mi in ring.maximal_ideal_indices() {
        if i.members.is_subset(&lattice[mi]) {
            acc = acc.intersect(&lattice[mi]);
            any = true;
        }
    }
    // Every proper ideal of a ring with identity lies in some maximal ideal.
    assert!(any, "proper ideal not contained in any maximal ideal");
    Ok(IdealSet::new_unchecked(Arc::clone(ring), acc))
}

/// `I + K`.
pub fn sum(a: &IdealSet, b: &IdealSet) -> Result<IdealSet, IdealError> {
    let ring = same_ring(a, b)?;
    Ok(IdealSet::new_unchecked(
        Arc::clone(ring),
        sum_sets(ring, &a.members, &b.members),
    ))
}

/// `I · K`: the ideal generated by pairwise products.
pub fn product(a: &IdealSet, b: &IdealSet) -> Result<IdealSet, IdealError> {
    let ring = same_ring(a, b)?;
    // Pairwise products already absorb multiplication; close under addition.
    let mut acc = ElemSet::empty(ring.order());
    acc.insert(ring.zero());
    let mut worklist: Vec<ElementId> = Vec::new();
    for i in a.members.iter() {
        for j in b.members.iter() {
            let p = ring.mul(i, j);
            if acc.insert(p) {
                worklist.push(p);
            }
        }
    }
    // Additive closure by breadth-first joins.
    while let Some(x) = worklist.pop() {
        for y in acc.clone().iter() {
            let s = ring.add(x, y);
            if acc.insert(s) {
                worklist.push(s);
            }
        }
    }
    Ok(IdealSet::new_unchecked(Arc::clone(ring), acc))
}

/// `I ∩ K`.
pub fn intersect(a: &IdealSet, b: &IdealSet) -> Result<IdealSet, IdealError> {
    let ring = same_ring(a, b)?;
    Ok(IdealSet::new_unchecked(
        Arc::clone(ring),
        a.members.intersect(&b.members),
    ))
}

/// Residual `(I : S) = {r : r·s ∈ I for all s ∈ S}` for a non-empty subset `S`.
pub fn residual(i: &IdealSet, s: &ElemSet) -> Result<IdealSet, IdealError> {
    if s.is_empty() {
        return Err(IdealError::EmptySet);
    }
    let ring = &i.ring;
    assert_eq!(s.universe(), ring.order(), "subset universe mismatch");
    let mut out = ElemSet::empty(ring.order());
    for r in ring.elements() {
        if s.iter().all(|x| i.members.contains(ring.mul(r, x))) {
            out.insert(r);
        }
    }
    Ok(IdealSet::new_unchecked(Arc::clone(ring), out))
}

/// Annihilator `(0 : S)`.
pub fn annihilator(ring: &Ring, s: &ElemSet) -> Result<IdealSet, IdealError> {
    residual(&IdealSet::zero(ring), s)
}

/// Radical `√I = {x : x^k ∈ I for some k ≥ 1}`, by power iteration.
pub fn radical(i: &IdealSet) -> IdealSet {
    let ring = &i.ring;
    let mut out = ElemSet::empty(ring.order());
    for x in ring.elements() {
        let mut seen = ElemSet::empty(ring.order());
        let mut p = x;
        loop {
            if i.members.contains(p) {
                out.insert(x);
                break;
            }
            if !seen.insert(p) {
                break;
            }
            p = ring.mul(p, x);
        }
    }
    IdealSet::new_unchecked(Arc::clone(ring), out)
}

/// `Z_I(R) = {r : rs ∈ I for some s ∈ R∖I}`, for proper `I`.
pub fn zi_set(ring: &Ring, i: &IdealSet) -> Result<ElemSet, IdealError> {
    if !Arc::ptr_eq(ring, &i.ring) {
        return Err(IdealError::RingMismatch);
    }
    if !i.is_proper() {
        return Err(IdealError::ImproperIdeal);
    }
    let mut out = ElemSet::empty(ring.order());
    for r in ring.elements() {
        for s in ring.elements() {
            if !i.members.contains(s) && i.members.contains(ring.mul(r, s)) {
                out.insert(r);
                break;
            }
        }
    }
    Ok(out)
}

/// A subset of a ring tagged as a candidate multiplicative set. Closure
/// properties are predicate subjects, not invariants of the type.
#[derive(Clone)]
pub struct MultSet {
    ring: Ring,
    members: ElemSet,
}

impl MultSet {
    pub fn new(ring: Ring, members: ElemSet) -> MultSet {
        assert_eq!(members.universe(), ring.order(), "set universe mismatch");
        MultSet { ring, members }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn members(&self) -> &ElemSet {
        &self.members
    }

    /// Closed under products, contains 1, excludes 0 — the hypotheses of the
    /// localization construction.
    pub fn is_valid_for_localization(&self) -> bool {
        let r = &self.ring;
        self.members.contains(r.one())
            && !self.members.contains(r.zero())
            && self.is_multiplicatively_closed()
    }

    pub fn is_multiplicatively_closed(&self) -> bool {
        let r = &self.ring;
        for a in self.members.iter() {
            for b in self.members.iter() {
                if !self.members.contains(r.mul(a, b)) {
                    return false;
                }
            }
        }
        true
    }
}

impl std::fmt::Debug for MultSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "MultSet({:?} in {})", self.members, self.ring.label())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::make_zn;

    fn e(i: usize) -> ElementId {
        ElementId::new(i)
    }

    fn ideal_of(ring: &Ring, gens: &[usize]) -> IdealSet {
        let gens: Vec<ElementId> = gens.iter().map(|&g| e(g)).collect();
        ideal_generated_by(ring, &gens)
    }

    #[test]
    fn principal_ideals() {
        let z6 = make_zn(6).unwrap();
        assert_eq!(ideal_of(&z6, &[2]).members().members(), vec![e(0), e(2), e(4)]);
        let z32 = make_zn(32).unwrap();
        assert_eq!(ideal_of(&z32, &[16]).members().members(), vec![e(0), e(16)]);
        assert_eq!(ideal_of(&z6, &[]).members().members(), vec![e(0)]);
    }

    #[test]
    fn lattice_of_z6_z32_z2() {
        let z6 = make_zn(6).unwrap();
        let ideals = all_ideals(&z6);
        assert_eq!(ideals.len(), 4);
        let sizes: Vec<usize> = ideals.iter().map(|i| i.len()).collect();
        assert_eq!(sizes, vec![1, 2, 3, 6]);

        let z32 = make_zn(32).unwrap();
        assert_eq!(all_ideals(&z32).len(), 6); // chain <2^k>, k = 0..5

        let z2 = make_zn(2).unwrap();
        assert_eq!(all_ideals(&z2).len(), 2);
    }

    #[test]
    fn maximal_ideals_examples() {
        let z6 = make_zn(6).unwrap();
        let maxs = maximal_ideals(&z6);
        assert_eq!(maxs.len(), 2);
        assert!(maxs.iter().any(|m| m.members().members() == vec![e(0), e(2), e(4)]));
        assert!(maxs.iter().any(|m| m.members().members() == vec![e(0), e(3)]));

        let z32 = make_zn(32).unwrap();
        assert_eq!(maximal_ideals(&z32).len(), 1);

        let z5 = make_zn(5).unwrap();
        let maxs = maximal_ideals(&z5);
        assert_eq!(maxs.len(), 1);
        assert!(maxs[0].is_zero());
    }

    #[test]
    fn j_of_ideal_examples() {
        let z12 = make_zn(12).unwrap();
        let i6 = ideal_of(&z12, &[6]);
        assert_eq!(j_of_ideal(&i6).unwrap(), i6);

        let z6 = make_zn(6).unwrap();
        assert!(j_of_ideal(&IdealSet::zero(&z6)).unwrap().is_zero());

        let z32 = make_zn(32).unwrap();
        let j = j_of_ideal(&ideal_of(&z32, &[16])).unwrap();
        assert_eq!(j, ideal_of(&z32, &[2]));

        assert!(matches!(
            j_of_ideal(&IdealSet::whole(&z12)),
            Err(IdealError::ImproperIdeal)
        ));
    }

    #[test]
    fn sum_product_intersect() {
        let z6 = make_zn(6).unwrap();
        let i2 = ideal_of(&z6, &[2]);
        let i3 = ideal_of(&z6, &[3]);
        assert!(intersect(&i2, &i3).unwrap().is_zero());

        let z12 = make_zn(12).unwrap();
        let s = sum(&ideal_of(&z12, &[4]), &ideal_of(&z12, &[6])).unwrap();
        assert_eq!(s, ideal_of(&z12, &[2]));

        let whole = IdealSet::whole(&z6);
        assert_eq!(product(&i2, &whole).unwrap(), i2);

        let other_z6 = make_zn(6).unwrap();
        assert!(matches!(
            sum(&i2, &IdealSet::zero(&other_z6)),
            Err(IdealError::RingMismatch)
        ));
    }

    #[test]
    fn residual_and_annihilator() {
        let z12 = make_zn(12).unwrap();
        let i6 = ideal_of(&z12, &[6]);
        let s2 = ElemSet::from_indices(12, [2]);
        assert_eq!(residual(&i6, &s2).unwrap(), ideal_of(&z12, &[3]));

        let one = ElemSet::from_indices(12, [1]);
        assert_eq!(residual(&i6, &one).unwrap(), i6);

        let z6 = make_zn(6).unwrap();
        let ann2 = annihilator(&z6, &ElemSet::from_indices(6, [2])).unwrap();
        assert_eq!(ann2.members().members(), vec![e(0), e(3)]);

        assert!(matches!(
            residual(&i6, &ElemSet::empty(12)),
            Err(IdealError::EmptySet)
        ));
    }

    #[test]
    fn radical_examples() {
        let z12 = make_zn(12).unwrap();
        assert_eq!(radical(&ideal_of(&z12, &[4])), ideal_of(&z12, &[2]));
        let whole = IdealSet::whole(&z12);
        assert_eq!(radical(&whole), whole);
        let z32 = make_zn(32).unwrap();
        assert_eq!(radical(&ideal_of(&z32, &[16])), ideal_of(&z32, &[2]));
    }

    #[test]
    fn radical_is_idempotent_and_extensive() {
        for n in [4usize, 6, 8, 12, 16, 18, 24] {
            let r = make_zn(n).unwrap();
            for i in all_ideals(&r) {
                let rad = radical(&i);
                assert!(i.members().is_subset(rad.members()));
                assert_eq!(radical(&rad), rad);
            }
        }
    }

    #[test]
    fn zi_set_examples() {
        let z6 = make_zn(6).unwrap();
        let z = zi_set(&z6, &IdealSet::zero(&z6)).unwrap();
        assert_eq!(z.members(), vec![e(0), e(2), e(3), e(4)]);

        let z5 = make_zn(5).unwrap();
        let z = zi_set(&z5, &IdealSet::zero(&z5)).unwrap();
        assert_eq!(z.members(), vec![e(0)]);

        // Z12 with I = <4>: brute-force value, frozen.
        let z12 = make_zn(12).unwrap();
        let z = zi_set(&z12, &ideal_of(&z12, &[4])).unwrap();
        assert_eq!(z.members(), vec![e(0), e(2), e(4), e(6), e(8), e(10)]);

        assert!(matches!(
            zi_set(&z12, &IdealSet::whole(&z12)),
            Err(IdealError::ImproperIdeal)
        ));
    }

    #[test]
    fn residual_monotonicity() {
        let z12 = make_zn(12).unwrap();
        let i4 = ideal_of(&z12, &[4]);
        let i2 = ideal_of(&z12, &[2]);
        let s = ElemSet::from_indices(12, [2, 6]);
        let small = residual(&i4, &s).unwrap();
        let big = residual(&i2, &s).unwrap();
        assert!(i4.members().is_subset(small.members()));
        assert!(small.members().is_subset(big.members()));

        let s_bigger = ElemSet::from_indices(12, [2, 6, 3]);
        let anti = residual(&i4, &s_bigger).unwrap();
        assert!(anti.members().is_subset(small.members()));
    }

    #[test]
    fn lattice_closed_under_operations() {
        for n in [6usize, 12, 16, 30] {
            let r = make_zn(n).unwrap();
            let ideals = all_ideals(&r);
            for a in &ideals {
                for b in &ideals {
                    for derived in [
                        sum(a, b).unwrap(),
                        product(a, b).unwrap(),
                        intersect(a, b).unwrap(),
                    ] {
                        assert!(
                            ideals.contains(&derived),
                            "lattice of Z{n} not closed"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn ideal_validation_rejects_non_ideals() {
        let z6 = make_zn(6).unwrap();
        // {0, 1} is not closed under multiplication by 2 (absorption fails)
        // nor under addition.
        let err = IdealSet::new(Arc::clone(&z6), ElemSet::from_indices(6, [0, 1])).unwrap_err();
        assert!(matches!(err, IdealError::NotAnIdeal { .. }));
        let err = IdealSet::new(Arc::clone(&z6), ElemSet::from_indices(6, [2, 4])).unwrap_err();
        assert!(matches!(err, IdealError::NotAnIdeal { .. }));
        assert!(IdealSet::new(Arc::clone(&z6), ElemSet::from_indices(6, [0, 2, 4])).is_ok());
    }

    #[test]
    fn display_short_forms() {
        let z6 = make_zn(6).unwrap();
        assert_eq!(IdealSet::zero(&z6).display_short(), "<0>");
        assert_eq!(IdealSet::whole(&z6).display_short(), "<1>");
        assert_eq!(ideal_of(&z6, &[2]).display_short(), "<2>");
    }
}
