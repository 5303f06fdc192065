//! Finite modules over a table ring, given by an explicit abelian-group
//! table and an action table.

use std::sync::Arc;

use crate::construct::ConstructError;
use crate::elem::{ElemSet, ElementId};
use crate::ideal::IdealSet;
use crate::ring::Ring;

/// A finite abelian group with a validated `R`-module action.
#[derive(Clone)]
pub struct ModuleTable {
    ring: Ring,
    order: usize,
    add: Vec<u16>,
    neg: Vec<u16>,
    /// n×m table, `(r, x) ↦ r·x`.
    action: Vec<u16>,
    names: Vec<String>,
    label: String,
}

impl std::fmt::Debug for ModuleTable {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "ModuleTable({}, order {})", self.label, self.order)
    }
}

impl ModuleTable {
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    #[inline]
    pub fn zero(&self) -> ElementId {
        ElementId::new(0)
    }

    #[inline]
    pub fn add(&self, x: ElementId, y: ElementId) -> ElementId {
        ElementId::new(self.add[x.index() * self.order + y.index()] as usize)
    }

    #[inline]
    pub fn neg(&self, x: ElementId) -> ElementId {
        ElementId::new(self.neg[x.index()] as usize)
    }

    #[inline]
    pub fn act(&self, r: ElementId, x: ElementId) -> ElementId {
        ElementId::new(self.action[r.index() * self.order + x.index()] as usize)
    }

    pub fn elements(&self) -> impl Iterator<Item = ElementId> {
        (0..self.order).map(ElementId::new)
    }

    pub fn name(&self, x: ElementId) -> &str {
        &self.names[x.index()]
    }

    pub fn is_zero_module(&self) -> bool {
        self.order == 1
    }
}

/// Validates the abelian-group and module axioms for explicit tables.
/// Convention: element 0 of the module is its zero.
pub fn validate_module(
    ring: &Ring,
    order: usize,
    add: Vec<u16>,
    action: Vec<u16>,
    names: Option<Vec<String>>,
    label: impl Into<String>,
) -> Result<ModuleTable, ConstructError> {
    let n = ring.order();
    let m = order;
    let bad = |reason, witness: Vec<usize>| {
        Err(ConstructError::InvalidModule {
            reason,
            witness: witness.into_iter().map(ElementId::new).collect(),
        })
    };
    if m == 0 || add.len() != m * m || action.len() != n * m {
        return bad("table shape mismatch", vec![]);
    }
    if add.iter().any(|&e| (e as usize) >= m) || action.iter().any(|&e| (e as usize) >= m) {
        return bad("table entry out of range", vec![]);
    }
    let a_ = |x: usize, y: usize| add[x * m + y] as usize;
    let act_ = |r: usize, x: usize| action[r * m + x] as usize;
    for x in 0..m {
        if a_(x, 0) != x {
            return bad("zero is not an additive identity", vec![x]);
        }
        for y in 0..m {
            if a_(x, y) != a_(y, x) {
                return bad("addition not commutative", vec![x, y]);
            }
            for z in 0..m {
                if a_(a_(x, y), z) != a_(x, a_(y, z)) {
                    return bad("addition not associative", vec![x, y, z]);
                }
            }
        }
        if !(0..m).any(|y| a_(x, y) == 0) {
            return bad("missing additive inverse", vec![x]);
        }
    }
    for x in 0..m {
        if act_(ring.one().index(), x) != x {
            return bad("identity does not act trivially", vec![x]);
        }
    }
    for r in 0..n {
        for x in 0..m {
            for y in 0..m {
                if act_(r, a_(x, y)) != a_(act_(r, x), act_(r, y)) {
                    return bad("action not additive in the module", vec![r, x, y]);
                }
            }
        }
    }
    for r in 0..n {
        for s in 0..n {
            let rs = ring.mul(ElementId::new(r), ElementId::new(s)).index();
            let radd = ring.add(ElementId::new(r), ElementId::new(s)).index();
            for x in 0..m {
                if act_(rs, x) != act_(r, act_(s, x)) {
                    return bad("action not multiplicative in the ring", vec![r, s, x]);
                }
                if act_(radd, x) != a_(act_(r, x), act_(s, x)) {
                    return bad("action not additive in the ring", vec![r, s, x]);
                }
            }
        }
    }
    let mut neg = vec![0u16; m];
    for x in 0..m {
        neg[x] = (0..m).find(|&y| a_(x, y) == 0).unwrap() as u16;
    }
    let names = names.unwrap_or_else(|| (0..m).map(|i| i.to_string()).collect());
    Ok(ModuleTable {
        ring: Arc::clone(ring),
        order: m,
        add,
        neg,
        action,
        names,
        label: label.into(),
    })
}

/// `R` as a module over itself; the action is ring multiplication.
pub fn ring_as_module(ring: &Ring) -> ModuleTable {
    let n = ring.order();
    let mut add = vec![0u16; n * n];
    let mut action = vec![0u16; n * n];
    // Module element i is ring element i, re-based so that module zero is 0.
    // Ring zero may not be index 0 in exotic tables, so translate.
    let z = ring.zero().index();
    let to_mod = |e: ElementId| if e.index() == z { 0 } else if e.index() == 0 { z } else { e.index() };
    let to_ring = to_mod; // the swap is an involution
    for x in 0..n {
        for y in 0..n {
            let rx = ElementId::new(to_ring(ElementId::new(x)));
            let ry = ElementId::new(to_ring(ElementId::new(y)));
            add[x * n + y] = to_mod(ring.add(rx, ry)) as u16;
            action[x * n + y] = to_mod(ring.mul(ElementId::new(x), ry)) as u16;
        }
    }
    // The action table is indexed by raw ring element in the first slot.
    let names = (0..n)
        .map(|i| ring.name(ElementId::new(to_ring(ElementId::new(i)))).to_string())
        .collect();
    validate_module(
        ring,
        n,
        add,
        action,
        Some(names),
        format!("mod({})", ring.label()),
    )
    .expect("a ring is a module over itself")
}

/// The zero module over `ring`.
pub fn zero_module(ring: &Ring) -> ModuleTable {
    validate_module(
        ring,
        1,
        vec![0],
        vec![0; ring.order()],
        Some(vec!["0".into()]),
        "0",
    )
    .expect("zero module is valid")
}

/// `Z_m` as a module over a canonical `Z_n` ring, for `m | n`; the action is
/// `r·x = (r·x) mod m`. Validation rejects non-canonical base rings.
pub fn zm_over_zn(zn: &Ring, m: usize) -> Result<ModuleTable, ConstructError> {
    let n = zn.order();
    if m == 0 || n % m != 0 {
        return Err(ConstructError::InvalidModule {
            reason: "module order must divide the ring order",
            witness: vec![],
        });
    }
    let mut add = vec![0u16; m * m];
    for x in 0..m {
        for y in 0..m {
            add[x * m + y] = ((x + y) % m) as u16;
        }
    }
    let mut action = vec![0u16; n * m];
    for r in 0..n {
        for x in 0..m {
            action[r * m + x] = ((r * x) % m) as u16;
        }
    }
    validate_module(
        zn,
        m,
        add,
        action,
        None,
        format!("mod({},{})", zn.label(), m),
    )
}

/// `R/K` as an `R`-module with action `r·(x+K) = rx+K`.
pub fn quotient_module(ring: &Ring, k: &IdealSet) -> Result<ModuleTable, ConstructError> {
    if !Arc::ptr_eq(ring, k.ring()) {
        return Err(ConstructError::RingMismatch);
    }
    let q = crate::construct::quotient_ring(ring, k)?;
    let m = q.ring.order();
    let n = ring.order();
    let mut add = vec![0u16; m * m];
    for x in 0..m {
        for y in 0..m {
            add[x * m + y] =
                q.ring.add(ElementId::new(x), ElementId::new(y)).index() as u16;
        }
    }
    let mut action = vec![0u16; n * m];
    for r in ring.elements() {
        let rq = q.projection.apply(r);
        for x in 0..m {
            action[r.index() * m + x] = q.ring.mul(rq, ElementId::new(x)).index() as u16;
        }
    }
    // Quotient ring construction puts the zero coset at index 0 because its
    // representative is the least element of the ideal, namely 0.
    let names = (0..m)
        .map(|i| q.ring.name(ElementId::new(i)).to_string())
        .collect();
    validate_module(
        ring,
        m,
        add,
        action,
        Some(names),
        format!("mod({}/{})", ring.label(), k.display_short()),
    )
}

/// All submodules of `module`, canonically ordered. Cyclic orbits
/// `{r·x : r ∈ R}` are closed under pairwise sums to a fixpoint, mirroring
/// ideal enumeration.
pub fn submodules(module: &ModuleTable) -> Vec<ElemSet> {
    let m = module.order();
    let mut zero = ElemSet::empty(m);
    zero.insert(module.zero());
    let mut found: Vec<ElemSet> = vec![zero];
    for x in module.elements() {
        let mut orbit = ElemSet::empty(m);
        for r in module.ring().elements() {
            orbit.insert(module.act(r, x));
        }
        if !found.contains(&orbit) {
            found.push(orbit);
        }
    }
    let mut frontier: Vec<usize> = (0..found.len()).collect();
    while !frontier.is_empty() {
        let mut fresh = Vec::new();
        for fi in 0..frontier.len() {
            let i = frontier[fi];
            for j in 0..found.len() {
                let mut s = ElemSet::empty(m);
                for x in found[i].iter() {
                    for y in found[j].iter() {
                        s.insert(module.add(x, y));
                    }
                }
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

/// The submodule `IM` generated by `{i·x : i ∈ I, x ∈ M}` (additive closure).
pub fn ideal_action_image(i: &IdealSet, module: &ModuleTable) -> ElemSet {
    assert!(Arc::ptr_eq(i.ring(), module.ring()));
    let m = module.order();
    let mut acc = ElemSet::empty(m);
    acc.insert(module.zero());
    let mut worklist: Vec<ElementId> = Vec::new();
    for r in i.members().iter() {
        for x in module.elements() {
            let p = module.act(r, x);
            if acc.insert(p) {
                worklist.push(p);
            }
        }
    }
    while let Some(x) = worklist.pop() {
        for y in acc.clone().iter() {
            let s = module.add(x, y);
            if acc.insert(s) {
                worklist.push(s);
            }
        }
    }
    acc
}

/// `Ann(M) = {r : r·x = 0 for all x}` as a set of ring elements.
pub fn module_annihilator(module: &ModuleTable) -> ElemSet {
    let mut s = ElemSet::empty(module.ring().order());
    for r in module.ring().elements() {
        if module.elements().all(|x| module.act(r, x) == module.zero()) {
            s.insert(r);
        }
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::ideal_generated_by;
    use crate::ring::make_zn;

    fn e(i: usize) -> ElementId {
        ElementId::new(i)
    }

    #[test]
    fn self_module_and_submodules_match_ideals() {
        let z12 = make_zn(12).unwrap();
        let m = ring_as_module(&z12);
        assert_eq!(m.order(), 12);
        assert_eq!(m.act(e(5), e(7)), e(11));
        // Submodules of R over itself are exactly the ideals.
        let subs = submodules(&m);
        assert_eq!(subs.len(), z12.ideal_lattice().len());
    }

    #[test]
    fn zm_over_zn_requires_divisibility() {
        let z6 = make_zn(6).unwrap();
        let m = zm_over_zn(&z6, 3).unwrap();
        assert_eq!(m.order(), 3);
        assert_eq!(m.act(e(4), e(2)), e(2)); // 4*2 = 8 ≡ 2 (mod 3)
        assert!(zm_over_zn(&z6, 4).is_err());
    }

    #[test]
    fn annihilator_and_action_image() {
        let z6 = make_zn(6).unwrap();
        let m = zm_over_zn(&z6, 3).unwrap();
        // r kills Z3 iff r ≡ 0 (mod 3).
        assert_eq!(module_annihilator(&m).members(), vec![e(0), e(3)]);
        let i2 = ideal_generated_by(&z6, &[e(2)]);
        // 2·Z3 = Z3.
        assert_eq!(ideal_action_image(&i2, &m).len(), 3);
        let i3 = ideal_generated_by(&z6, &[e(3)]);
        assert_eq!(ideal_action_image(&i3, &m).members(), vec![e(0)]);
    }

    #[test]
    fn zero_module_is_annihilated_by_everything() {
        let z4 = make_zn(4).unwrap();
        let m = zero_module(&z4);
        assert!(m.is_zero_module());
        assert_eq!(module_annihilator(&m).len(), 4);
    }

    #[test]
    fn quotient_module_action() {
        let z12 = make_zn(12).unwrap();
        let k = ideal_generated_by(&z12, &[e(4)]);
        let m = quotient_module(&z12, &k).unwrap();
        assert_eq!(m.order(), 4);
        assert_eq!(m.act(e(7), e(2)), e(2)); // 7·2 = 14 ≡ 2 (mod 4)
    }

    #[test]
    fn invalid_action_is_rejected() {
        let z4 = make_zn(4).unwrap();
        // Action of 1 must be the identity; an all-zero action is invalid.
        let err = validate_module(&z4, 2, vec![0, 1, 1, 0], vec![0; 8], None, "bad");
        assert!(matches!(err, Err(ConstructError::InvalidModule { .. })));
    }
}
