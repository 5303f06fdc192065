//! Localization at a multiplicatively closed subset, by explicit
//! fraction-class construction.
//!
//! Fractions `a/s` are pairs with `s ∈ S`, identified by
//! `a/s ~ b/t ⟺ ∃u ∈ S, u(at − bs) = 0`. The scaling links
//! `a/s ~ (ua)/(us)` for `u ∈ S` generate the whole relation: if
//! `u(at − bs) = 0` then both sides scale to the identical pair
//! `(uat, uts) = (ubs, ust)`.

use std::sync::Arc;

use crate::construct::ConstructError;
use crate::elem::{ElemSet, ElementId};
use crate::ideal::{IdealSet, MultSet};
use crate::ring::{Ring, RingHom, RingTable};

/// A localized ring `S⁻¹R` with the canonical map `a ↦ a/1`.
pub struct Localization {
    pub ring: Ring,
    pub base: Ring,
    pub canonical: RingHom,
    /// Multiplicative set members, ascending.
    s_elems: Vec<ElementId>,
    /// (a, s-position) -> class index.
    class_of_pair: Vec<u16>,
}

impl Localization {
    /// Class of the fraction `a/s`; `s` must belong to the multiplicative set.
    pub fn class_of(&self, a: ElementId, s: ElementId) -> ElementId {
        let sp = self
            .s_elems
            .iter()
            .position(|&x| x == s)
            .expect("denominator not in the multiplicative set");
        ElementId::new(self.class_of_pair[a.index() * self.s_elems.len() + sp] as usize)
    }

    /// Extension `S⁻¹I = {i/s : i ∈ I, s ∈ S}` — already an ideal.
    pub fn extend_ideal(&self, i: &IdealSet) -> IdealSet {
        assert!(Arc::ptr_eq(i.ring(), &self.base));
        let mut out = ElemSet::empty(self.ring.order());
        for x in i.members().iter() {
            for &s in &self.s_elems {
                out.insert(self.class_of(x, s));
            }
        }
        IdealSet::new_unchecked(Arc::clone(&self.ring), out)
    }
}

pub fn localization(base: &Ring, s: &MultSet) -> Result<Localization, ConstructError> {
    if !Arc::ptr_eq(base, s.ring()) {
        return Err(ConstructError::RingMismatch);
    }
    if !s.members().contains(base.one()) {
        return Err(ConstructError::InvalidMultSet("must contain 1"));
    }
    if s.members().contains(base.zero()) {
        return Err(ConstructError::InvalidMultSet("must not contain 0"));
    }
    if !s.is_multiplicatively_closed() {
        return Err(ConstructError::InvalidMultSet("not closed under products"));
    }

    let n = base.order();
    let s_elems: Vec<ElementId> = s.members().members();
    let k = s_elems.len();
    let spos = |e: ElementId| s_elems.iter().position(|&x| x == e).unwrap();
    let pair_idx = |a: ElementId, s_el: ElementId| a.index() * k + spos(s_el);

    // Union-find over the n·k fraction pairs, linked by scaling.
    let mut parent: Vec<usize> = (0..n * k).collect();
    fn find(parent: &mut Vec<usize>, mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for a in base.elements() {
        for &se in &s_elems {
            let p = pair_idx(a, se);
            for &u in &s_elems {
                let q = pair_idx(base.mul(u, a), base.mul(u, se));
                let (rp, rq) = (find(&mut parent, p), find(&mut parent, q));
                if rp != rq {
                    // Union by least root keeps class numbering stable.
                    let (lo, hi) = if rp < rq { (rp, rq) } else { (rq, rp) };
                    parent[hi] = lo;
                }
            }
        }
    }

    // Classes in ascending order of least pair index.
    let mut class_of_pair = vec![u16::MAX; n * k];
    let mut reps: Vec<usize> = Vec::new();
    for p in 0..n * k {
        let r = find(&mut parent, p);
        if class_of_pair[r] == u16::MAX {
            class_of_pair[r] = reps.len() as u16;
            reps.push(p);
        }
        class_of_pair[p] = class_of_pair[r];
    }
    let order = reps.len();

    let class = |a: ElementId, se: ElementId| class_of_pair[pair_idx(a, se)] as usize;
    let rep = |c: usize| {
        let p = reps[c];
        (ElementId::new(p / k), s_elems[p % k])
    };
    let mut add = vec![0u16; order * order];
    let mut mul = vec![0u16; order * order];
    let mut names = vec![String::new(); order];
    for i in 0..order {
        let (a, sa) = rep(i);
        names[i] = format!("{}/{}", base.name(a), base.name(sa));
        for j in 0..order {
            let (b, sb) = rep(j);
            // a/sa + b/sb = (a·sb + b·sa)/(sa·sb); products componentwise.
            let num = base.add(base.mul(a, sb), base.mul(b, sa));
            add[i * order + j] = class(num, base.mul(sa, sb)) as u16;
            mul[i * order + j] = class(base.mul(a, b), base.mul(sa, sb)) as u16;
        }
    }
    let zero = class(base.zero(), base.one());
    let one = class(base.one(), base.one());
    let set_names: Vec<String> = s_elems.iter().map(|&e| base.name(e).to_string()).collect();
    let label = format!("loc({},{{{}}})", base.label(), set_names.join(","));
    let ring = RingTable::from_construction(label, order, zero, one, add, mul, Some(names))?;

    let canonical = RingHom::from_fn(
        base,
        &ring,
        |a| ElementId::new(class(a, base.one())),
        "a/1",
    )?;
    Ok(Localization {
        ring,
        base: Arc::clone(base),
        canonical,
        s_elems,
        class_of_pair,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::make_zn;

    fn e(i: usize) -> ElementId {
        ElementId::new(i)
    }

    fn mult_set(ring: &Ring, elems: &[usize]) -> MultSet {
        MultSet::new(
            Arc::clone(ring),
            ElemSet::from_indices(ring.order(), elems.iter().copied()),
        )
    }

    #[test]
    fn z6_inverting_3_collapses_to_z2() {
        let z6 = make_zn(6).unwrap();
        let loc = localization(&z6, &mult_set(&z6, &[1, 3])).unwrap();
        assert_eq!(loc.ring.order(), 2);
        // The 3-torsion part dies: 2/1 = 0.
        assert_eq!(loc.class_of(e(2), e(1)), loc.ring.zero());
        assert_eq!(loc.class_of(e(3), e(1)), loc.ring.one());
    }

    #[test]
    fn localizing_at_one_preserves_tables() {
        let z12 = make_zn(12).unwrap();
        let loc = localization(&z12, &mult_set(&z12, &[1])).unwrap();
        assert_eq!(loc.ring.order(), 12);
        for a in z12.elements() {
            for b in z12.elements() {
                assert_eq!(loc.ring.add(a, b), z12.add(a, b));
                assert_eq!(loc.ring.mul(a, b), z12.mul(a, b));
            }
        }
        assert!(loc.canonical.is_mono() && loc.canonical.is_epi());
    }

    #[test]
    fn invalid_sets_rejected() {
        let z6 = make_zn(6).unwrap();
        assert!(matches!(
            localization(&z6, &mult_set(&z6, &[0, 1])),
            Err(ConstructError::InvalidMultSet(_))
        ));
        assert!(matches!(
            localization(&z6, &mult_set(&z6, &[3])),
            Err(ConstructError::InvalidMultSet(_))
        ));
        // {1, 2} is not closed: 2·2 = 4 ∉ S.
        assert!(matches!(
            localization(&z6, &mult_set(&z6, &[1, 2])),
            Err(ConstructError::InvalidMultSet(_))
        ));
    }

    #[test]
    fn localizing_at_units_is_bijective() {
        for n in [4usize, 6, 9, 12] {
            let r = make_zn(n).unwrap();
            let units = MultSet::new(Arc::clone(&r), r.units().clone());
            let loc = localization(&r, &units).unwrap();
            assert!(loc.canonical.is_mono() && loc.canonical.is_epi(), "Z{n}");
        }
    }

    #[test]
    fn extension_of_ideal() {
        let z12 = make_zn(12).unwrap();
        // Invert S = {1, 4, 16 mod 12 = 4, ...} = closure of 4: {1, 4}.
        let loc = localization(&z12, &mult_set(&z12, &[1, 4])).unwrap();
        // 3-part survives, 4-part becomes invertible: S⁻¹Z12 ≅ Z3.
        assert_eq!(loc.ring.order(), 3);
        let i = crate::ideal::ideal_generated_by(&z12, &[e(6)]);
        let ext = loc.extend_ideal(&i);
        // 6/1 = 0 in Z3-like quotient? 6·4 = 24 = 0 mod 12, so 6/1 ~ 0.
        assert!(ext.is_zero());
    }
}
