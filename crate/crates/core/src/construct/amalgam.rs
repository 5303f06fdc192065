//! Amalgamation of two rings along an ideal: for a homomorphism `f: R → S`
//! and an ideal `J` of `S`, the subring
//! `R ⋈ᶠ J = {(r, f(r)+j) : r ∈ R, j ∈ J}` of `R × S`.
//! The duplication `R ⋈ J` is the `f = id` special case.

use std::collections::HashMap;
use std::sync::Arc;

use crate::construct::ConstructError;
use crate::elem::{ElemSet, ElementId};
use crate::ideal::IdealSet;
use crate::ring::{OrderCaps, Ring, RingHom, RingTable};

/// A subring of `parent` materialized as its own ring table, with index
/// translation in both directions.
pub struct SubringView {
    pub ring: Ring,
    pub parent: Ring,
    /// sub index -> parent element
    embed: Vec<u16>,
    /// parent element -> sub index (u16::MAX when absent)
    locate: Vec<u16>,
}

impl SubringView {
    /// Materializes the subring on `elems` (which must be closed under the
    /// parent's operations and contain 0 and 1).
    fn new(parent: &Ring, elems: &ElemSet, label: String) -> Result<SubringView, ConstructError> {
        let embed: Vec<u16> = elems.iter().map(|e| e.index() as u16).collect();
        let m = embed.len();
        let mut locate = vec![u16::MAX; parent.order()];
        for (i, &p) in embed.iter().enumerate() {
            locate[p as usize] = i as u16;
        }
        let at = |i: usize| ElementId::new(embed[i] as usize);
        let back = |e: ElementId| locate[e.index()] as usize;
        let mut add = vec![0u16; m * m];
        let mut mul = vec![0u16; m * m];
        for i in 0..m {
            for j in 0..m {
                let s = parent.add(at(i), at(j));
                let p = parent.mul(at(i), at(j));
                assert!(
                    locate[s.index()] != u16::MAX && locate[p.index()] != u16::MAX,
                    "subring element set not closed"
                );
                add[i * m + j] = back(s) as u16;
                mul[i * m + j] = back(p) as u16;
            }
        }
        let names = (0..m).map(|i| parent.name(at(i)).to_string()).collect();
        let ring = RingTable::from_construction(
            label,
            m,
            back(parent.zero()),
            back(parent.one()),
            add,
            mul,
            Some(names),
        )?;
        Ok(SubringView {
            ring,
            parent: Arc::clone(parent),
            embed,
            locate,
        })
    }

    #[inline]
    pub fn to_parent(&self, e: ElementId) -> ElementId {
        ElementId::new(self.embed[e.index()] as usize)
    }

    #[inline]
    pub fn from_parent(&self, e: ElementId) -> Option<ElementId> {
        let i = self.locate[e.index()];
        (i != u16::MAX).then(|| ElementId::new(i as usize))
    }

    pub fn set_to_parent(&self, s: &ElemSet) -> ElemSet {
        let mut out = ElemSet::empty(self.parent.order());
        for e in s.iter() {
            out.insert(self.to_parent(e));
        }
        out
    }
}

/// The amalgamated ring with element bookkeeping. Elements are the pairs
/// `(r, f(r)+j)`, enumerated by `r` then by the position of `j` in `J`;
/// a membership index gives O(1) pair lookup during ideal scans.
pub struct Amalgamation {
    pub ring: Ring,
    pub base: Ring,
    pub host: Ring,
    pub hom: RingHom,
    pub j: IdealSet,
    /// f(R)+J as a subring of the host.
    pub image_plus_j: SubringView,
    pairs: Vec<(u16, u16)>,
    index: HashMap<(u16, u16), u16>,
}

impl Amalgamation {
    /// Index of the pair `(r, s)` when it belongs to the amalgamation.
    pub fn element(&self, r: ElementId, s: ElementId) -> Option<ElementId> {
        self.index
            .get(&(r.index() as u16, s.index() as u16))
            .map(|&i| ElementId::new(i as usize))
    }

    #[inline]
    pub fn parts(&self, e: ElementId) -> (ElementId, ElementId) {
        let (r, s) = self.pairs[e.index()];
        (ElementId::new(r as usize), ElementId::new(s as usize))
    }

    pub fn is_duplication(&self) -> bool {
        Arc::ptr_eq(&self.base, &self.host)
            && self.base.elements().all(|e| self.hom.apply(e) == e)
    }

    /// `I ⋈ᶠ J = {(i, f(i)+j) : i ∈ I, j ∈ J}` for an ideal `I` of the base.
    pub fn ideal_join(&self, i: &IdealSet) -> Result<IdealSet, ConstructError> {
        if !Arc::ptr_eq(i.ring(), &self.base) {
            return Err(ConstructError::RingMismatch);
        }
        let mut s = ElemSet::empty(self.ring.order());
        for a in i.members().iter() {
            let fa = self.hom.apply(a);
            for j in self.j.members().iter() {
                let e = self
                    .element(a, self.host.add(fa, j))
                    .expect("pair is a member by construction");
                s.insert(e);
            }
        }
        Ok(IdealSet::new_unchecked(Arc::clone(&self.ring), s))
    }

    /// `K̄ᶠ = {(a, f(a)+j) : f(a)+j ∈ K}` for an ideal `K` of `f(R)+J`.
    pub fn ideal_bar(&self, k: &IdealSet) -> Result<IdealSet, ConstructError> {
        if !Arc::ptr_eq(k.ring(), &self.image_plus_j.ring) {
            return Err(ConstructError::KNotIdealOfImagePlusJ);
        }
        let k_in_host = self.image_plus_j.set_to_parent(k.members());
        let mut s = ElemSet::empty(self.ring.order());
        for (idx, &(_, second)) in self.pairs.iter().enumerate() {
            if k_in_host.contains(ElementId::new(second as usize)) {
                s.insert(ElementId::new(idx));
            }
        }
        Ok(IdealSet::new_unchecked(Arc::clone(&self.ring), s))
    }

    /// `I ⋈ᶠ T = {(i, f(i)+t) : i ∈ I, t ∈ T}` for an ideal `T` of `f(R)+J`
    /// with `f(I)J ⊆ T ⊆ J`.
    pub fn ideal_join_t(&self, i: &IdealSet, t: &IdealSet) -> Result<IdealSet, ConstructError> {
        if !Arc::ptr_eq(i.ring(), &self.base) {
            return Err(ConstructError::RingMismatch);
        }
        if !Arc::ptr_eq(t.ring(), &self.image_plus_j.ring) {
            return Err(ConstructError::KNotIdealOfImagePlusJ);
        }
        let t_in_host = self.image_plus_j.set_to_parent(t.members());
        if !t_in_host.is_subset(self.j.members()) {
            return Err(ConstructError::ContainmentViolation("T ⊄ J"));
        }
        for a in i.members().iter() {
            let fa = self.hom.apply(a);
            for j in self.j.members().iter() {
                if !t_in_host.contains(self.host.mul(fa, j)) {
                    return Err(ConstructError::ContainmentViolation("f(I)J ⊄ T"));
                }
            }
        }
        let mut s = ElemSet::empty(self.ring.order());
        for a in i.members().iter() {
            let fa = self.hom.apply(a);
            for tt in t_in_host.iter() {
                let e = self
                    .element(a, self.host.add(fa, tt))
                    .expect("t ∈ J makes the pair a member");
                s.insert(e);
            }
        }
        // The containment hypotheses make this an ideal; validate in debug.
        debug_assert!(
            IdealSet::new(Arc::clone(&self.ring), s.clone()).is_ok(),
            "join-T set is not an ideal"
        );
        Ok(IdealSet::new_unchecked(Arc::clone(&self.ring), s))
    }
}

/// Builds `R ⋈ᶠ J`.
pub fn amalgamation(
    base: &Ring,
    host: &Ring,
    hom: &RingHom,
    j: &IdealSet,
    caps: &OrderCaps,
) -> Result<Amalgamation, ConstructError> {
    if !Arc::ptr_eq(hom.source(), base) || !Arc::ptr_eq(hom.target(), host) {
        return Err(ConstructError::RingMismatch);
    }
    if !Arc::ptr_eq(j.ring(), host) {
        return Err(ConstructError::RingMismatch);
    }
    let order = base.order() * j.len();
    if order > caps.derived {
        return Err(ConstructError::OrderCapExceeded {
            requested: order,
            cap: caps.derived,
        });
    }

    // Distinct (r, j) give distinct pairs (r, f(r)+j), so the enumeration
    // below is exactly the element set.
    let mut pairs: Vec<(u16, u16)> = Vec::with_capacity(order);
    let mut index: HashMap<(u16, u16), u16> = HashMap::with_capacity(order);
    for r in base.elements() {
        let fr = hom.apply(r);
        for jj in j.members().iter() {
            let s = host.add(fr, jj);
            let key = (r.index() as u16, s.index() as u16);
            index.insert(key, pairs.len() as u16);
            pairs.push(key);
        }
    }

    let at = |i: usize| {
        let (r, s) = pairs[i];
        (ElementId::new(r as usize), ElementId::new(s as usize))
    };
    let mut add = vec![0u16; order * order];
    let mut mul = vec![0u16; order * order];
    let mut names = vec![String::new(); order];
    for i in 0..order {
        let (r1, s1) = at(i);
        names[i] = format!("({},{})", base.name(r1), host.name(s1));
        for k in 0..order {
            let (r2, s2) = at(k);
            let sum_key = (
                base.add(r1, r2).index() as u16,
                host.add(s1, s2).index() as u16,
            );
            let mul_key = (
                base.mul(r1, r2).index() as u16,
                host.mul(s1, s2).index() as u16,
            );
            add[i * order + k] = *index
                .get(&sum_key)
                .expect("amalgamation closed under addition");
            mul[i * order + k] = *index
                .get(&mul_key)
                .expect("amalgamation closed under multiplication");
        }
    }
    let zero = index[&(base.zero().index() as u16, host.zero().index() as u16)] as usize;
    let one = index[&(base.one().index() as u16, host.one().index() as u16)] as usize;
    let label = if hom.label() == "id" && Arc::ptr_eq(base, host) {
        format!("{}><{}", base.label(), j.display_short())
    } else {
        format!(
            "amalg({},{},{},{})",
            base.label(),
            host.label(),
            hom.label(),
            j.display_short()
        )
    };
    let ring = RingTable::from_construction(label, order, zero, one, add, mul, Some(names))?;

    // Materialize f(R)+J in the host so ideals of it are first-class.
    let mut img = hom.image();
    for a in hom.image().iter() {
        for jj in j.members().iter() {
            img.insert(host.add(a, jj));
        }
    }
    let image_plus_j = SubringView::new(
        host,
        &img,
        format!("im({})+{}", hom.label(), j.display_short()),
    )?;

    Ok(Amalgamation {
        ring,
        base: Arc::clone(base),
        host: Arc::clone(host),
        hom: hom.clone(),
        j: j.clone(),
        image_plus_j,
        pairs,
        index,
    })
}

/// The amalgamated duplication `R ⋈ J` (`f = id`).
pub fn duplication(base: &Ring, j: &IdealSet, caps: &OrderCaps) -> Result<Amalgamation, ConstructError> {
    if !Arc::ptr_eq(j.ring(), base) {
        return Err(ConstructError::RingMismatch);
    }
    amalgamation(base, base, &RingHom::identity(base), j, caps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::{ideal_generated_by, maximal_ideals, IdealSet};
    use crate::ring::make_zn;

    fn e(i: usize) -> ElementId {
        ElementId::new(i)
    }

    #[test]
    fn z4_duplicated_along_2_has_order_8() {
        let z4 = make_zn(4).unwrap();
        let j = ideal_generated_by(&z4, &[e(2)]);
        let am = duplication(&z4, &j, &OrderCaps::default()).unwrap();
        assert_eq!(am.ring.order(), 8);
        // All pairs are (r, r+j) with j even.
        for x in am.ring.elements() {
            let (r, s) = am.parts(x);
            let diff = am.host.sub(s, r);
            assert!(j.contains(diff));
        }
        // Subring of Z4 x Z4: single maximal ideal family check.
        assert!(am.ring.is_quasi_local());
    }

    #[test]
    fn duplication_along_zero_matches_base() {
        let z6 = make_zn(6).unwrap();
        let am = duplication(&z6, &IdealSet::zero(&z6), &OrderCaps::default()).unwrap();
        assert_eq!(am.ring.order(), 6);
        for a in z6.elements() {
            for b in z6.elements() {
                assert_eq!(am.ring.add(a, b), z6.add(a, b));
                assert_eq!(am.ring.mul(a, b), z6.mul(a, b));
            }
        }
    }

    #[test]
    fn amalgamation_with_mod2_map() {
        let z6 = make_zn(6).unwrap();
        let z2 = make_zn(2).unwrap();
        let f = RingHom::from_fn(&z6, &z2, |x| e(x.index() % 2), "mod2").unwrap();
        let j = IdealSet::whole(&z2);
        let am = amalgamation(&z6, &z2, &f, &j, &OrderCaps::default()).unwrap();
        assert_eq!(am.ring.order(), 12);
        assert_eq!(am.image_plus_j.ring.order(), 2);
    }

    #[test]
    fn joined_ideal_shapes() {
        let z4 = make_zn(4).unwrap();
        let j = ideal_generated_by(&z4, &[e(2)]);
        let am = duplication(&z4, &j, &OrderCaps::default()).unwrap();

        let i2 = ideal_generated_by(&z4, &[e(2)]);
        let joined = am.ideal_join(&i2).unwrap();
        assert_eq!(joined.len(), 4);
        assert!(IdealSet::new(Arc::clone(&am.ring), joined.members().clone()).is_ok());

        let zero_join = am.ideal_join(&IdealSet::zero(&z4)).unwrap();
        assert_eq!(zero_join.len(), j.len());
        assert!(zero_join
            .members()
            .iter()
            .all(|x| am.parts(x).0 == z4.zero()));

        let whole = am.ideal_join(&IdealSet::whole(&z4)).unwrap();
        assert!(!whole.is_proper());
    }

    #[test]
    fn bar_ideal_shapes() {
        let z4 = make_zn(4).unwrap();
        let j = ideal_generated_by(&z4, &[e(2)]);
        let am = duplication(&z4, &j, &OrderCaps::default()).unwrap();
        let sub = &am.image_plus_j.ring;
        assert_eq!(sub.order(), 4); // id(Z4)+<2> = Z4

        // K = <2> in the subring.
        let k = ideal_generated_by(sub, &[am.image_plus_j.from_parent(e(2)).unwrap()]);
        let bar = am.ideal_bar(&k).unwrap();
        // {(a, a+j) : a+j even} has 4 members.
        assert_eq!(bar.len(), 4);
        assert!(IdealSet::new(Arc::clone(&am.ring), bar.members().clone()).is_ok());

        let whole = am.ideal_bar(&IdealSet::whole(sub)).unwrap();
        assert!(!whole.is_proper());

        let zero_bar = am.ideal_bar(&IdealSet::zero(sub)).unwrap();
        // {(a, 0) : a ∈ -J} = {(0,0), (2,0)}.
        assert_eq!(zero_bar.len(), 2);
    }

    #[test]
    fn join_t_validation() {
        let z4 = make_zn(4).unwrap();
        let j = ideal_generated_by(&z4, &[e(2)]);
        let am = duplication(&z4, &j, &OrderCaps::default()).unwrap();
        let sub = &am.image_plus_j.ring;
        let i2 = ideal_generated_by(&z4, &[e(2)]);

        // T = J reduces to the plain join.
        let t_j = ideal_generated_by(sub, &[am.image_plus_j.from_parent(e(2)).unwrap()]);
        let with_t = am.ideal_join_t(&i2, &t_j).unwrap();
        assert_eq!(with_t, am.ideal_join(&i2).unwrap());

        // T = f(I)J = {0} is the minimal choice and is still an ideal.
        let t0 = IdealSet::zero(sub);
        let minimal = am.ideal_join_t(&i2, &t0).unwrap();
        assert_eq!(minimal.len(), 2);

        // T ⊄ J is rejected.
        let t_whole = IdealSet::whole(sub);
        assert!(matches!(
            am.ideal_join_t(&i2, &t_whole),
            Err(ConstructError::ContainmentViolation("T ⊄ J"))
        ));
    }

    #[test]
    fn maximal_ideals_of_small_duplication() {
        // Z6 >< <2>: maximal ideals of the base lift, plus the bar of any
        // maximal host ideal not containing J.
        let z6 = make_zn(6).unwrap();
        let j = ideal_generated_by(&z6, &[e(2)]);
        let am = duplication(&z6, &j, &OrderCaps::default()).unwrap();
        assert_eq!(am.ring.order(), 18);
        assert_eq!(maximal_ideals(&am.ring).len(), 3);
    }
}
