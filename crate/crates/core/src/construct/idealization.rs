//! The idealization (trivial extension) `R(+)M`: the ring on `R × M` with
//! `(r₁,m₁)(r₂,m₂) = (r₁r₂, r₁m₂ + r₂m₁)` and identity `(1, 0)`.

use std::sync::Arc;

use crate::construct::module::{ideal_action_image, ModuleTable};
use crate::construct::ConstructError;
use crate::elem::{ElemSet, ElementId};
use crate::ideal::IdealSet;
use crate::ring::{OrderCaps, Ring, RingTable};

/// An idealization ring with its pair indexing: `(r, m) ↦ r·|M| + m`.
pub struct Idealization {
    pub ring: Ring,
    pub base: Ring,
    pub module: ModuleTable,
}

impl Idealization {
    #[inline]
    pub fn element(&self, r: ElementId, m: ElementId) -> ElementId {
        ElementId::new(r.index() * self.module.order() + m.index())
    }

    #[inline]
    pub fn parts(&self, e: ElementId) -> (ElementId, ElementId) {
        let m = self.module.order();
        (ElementId::new(e.index() / m), ElementId::new(e.index() % m))
    }

    /// `0(+)M`, the nilpotent ideal of module vectors.
    pub fn module_ideal(&self) -> IdealSet {
        let mut s = ElemSet::empty(self.ring.order());
        for m in self.module.elements() {
            s.insert(self.element(self.base.zero(), m));
        }
        IdealSet::new_unchecked(Arc::clone(&self.ring), s)
    }
}

/// Builds `R(+)M` and sanity-checks the radical law
/// `J(R(+)M) = J(R)(+)M` by direct computation.
pub fn idealization(
    base: &Ring,
    module: &ModuleTable,
    caps: &OrderCaps,
) -> Result<Idealization, ConstructError> {
    assert!(Arc::ptr_eq(base, module.ring()), "module over a different ring");
    let n = base.order();
    let m = module.order();
    let order = n * m;
    if order > caps.derived {
        return Err(ConstructError::OrderCapExceeded {
            requested: order,
            cap: caps.derived,
        });
    }
    let idx = |r: usize, x: usize| r * m + x;
    let mut add = vec![0u16; order * order];
    let mut mul = vec![0u16; order * order];
    let mut names = vec![String::new(); order];
    for r1 in base.elements() {
        for m1 in module.elements() {
            let i = idx(r1.index(), m1.index());
            names[i] = format!("({},{})", base.name(r1), module.name(m1));
            for r2 in base.elements() {
                for m2 in module.elements() {
                    let j = idx(r2.index(), m2.index());
                    add[i * order + j] =
                        idx(base.add(r1, r2).index(), module.add(m1, m2).index()) as u16;
                    let cross = module.add(module.act(r1, m2), module.act(r2, m1));
                    mul[i * order + j] = idx(base.mul(r1, r2).index(), cross.index()) as u16;
                }
            }
        }
    }
    let zero = idx(base.zero().index(), module.zero().index());
    let one = idx(base.one().index(), module.zero().index());
    let label = format!("{}(+){}", base.label(), module.label());
    let ring = RingTable::from_construction(label, order, zero, one, add, mul, Some(names))?;
    let idl = Idealization {
        ring,
        base: Arc::clone(base),
        module: module.clone(),
    };

    // Radical law: J(R(+)M) = J(R)(+)M. The module part is square-zero, so
    // it lies in every maximal ideal; the check guards the construction.
    let jac = idl.ring.jacobson_radical();
    let mut expected = ElemSet::empty(order);
    for r in base.jacobson_radical().iter() {
        for x in module.elements() {
            expected.insert(idl.element(r, x));
        }
    }
    assert!(
        *jac == expected,
        "idealization radical law failed for {}",
        idl.ring.label()
    );
    Ok(idl)
}

/// `I(+)N` as an ideal of `R(+)M`; requires `IM ⊆ N` and `N` a submodule.
pub fn ideal_in_idealization(
    idl: &Idealization,
    i: &IdealSet,
    n: &ElemSet,
) -> Result<IdealSet, ConstructError> {
    if !Arc::ptr_eq(i.ring(), &idl.base) {
        return Err(ConstructError::RingMismatch);
    }
    assert_eq!(n.universe(), idl.module.order(), "submodule universe mismatch");
    // N must be a submodule: additively closed, zero, closed under action.
    if !n.contains(idl.module.zero()) {
        return Err(ConstructError::InvalidModule {
            reason: "submodule misses zero",
            witness: vec![],
        });
    }
    for x in n.iter() {
        for y in n.iter() {
            if !n.contains(idl.module.add(x, y)) {
                return Err(ConstructError::InvalidModule {
                    reason: "submodule not additively closed",
                    witness: vec![x, y],
                });
            }
        }
        for r in idl.base.elements() {
            if !n.contains(idl.module.act(r, x)) {
                return Err(ConstructError::InvalidModule {
                    reason: "submodule not closed under the action",
                    witness: vec![r, x],
                });
            }
        }
    }
    let im = ideal_action_image(i, &idl.module);
    if !im.is_subset(n) {
        return Err(ConstructError::ContainmentViolation("IM ⊄ N"));
    }
    let mut s = ElemSet::empty(idl.ring.order());
    for r in i.members().iter() {
        for x in n.iter() {
            s.insert(idl.element(r, x));
        }
    }
    Ok(IdealSet::new_unchecked(Arc::clone(&idl.ring), s))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::module::{ring_as_module, zero_module, zm_over_zn};
    use crate::ideal::ideal_generated_by;
    use crate::ring::make_zn;

    fn e(i: usize) -> ElementId {
        ElementId::new(i)
    }

    #[test]
    fn z6_idealized_over_itself() {
        let z6 = make_zn(6).unwrap();
        let m = ring_as_module(&z6);
        let idl = idealization(&z6, &m, &OrderCaps::default()).unwrap();
        assert_eq!(idl.ring.order(), 36);
        // J = 0(+)Z6: exactly the module vectors.
        let jac = idl.ring.jacobson_radical();
        assert_eq!(jac.len(), 6);
        assert!(jac
            .iter()
            .all(|x| idl.parts(x).0 == z6.zero()));
    }

    #[test]
    fn z4_idealized_with_z2_is_quasi_local() {
        let z4 = make_zn(4).unwrap();
        let m = zm_over_zn(&z4, 2).unwrap();
        let idl = idealization(&z4, &m, &OrderCaps::default()).unwrap();
        assert_eq!(idl.ring.order(), 8);
        assert!(idl.ring.is_quasi_local());
    }

    #[test]
    fn idealization_with_zero_module_matches_base() {
        let z6 = make_zn(6).unwrap();
        let m = zero_module(&z6);
        let idl = idealization(&z6, &m, &OrderCaps::default()).unwrap();
        assert_eq!(idl.ring.order(), 6);
        for a in z6.elements() {
            for b in z6.elements() {
                assert_eq!(idl.ring.add(a, b), z6.add(a, b));
                assert_eq!(idl.ring.mul(a, b), z6.mul(a, b));
            }
        }
    }

    #[test]
    fn pair_ideal_requires_containment() {
        let z6 = make_zn(6).unwrap();
        let m = ring_as_module(&z6);
        let idl = idealization(&z6, &m, &OrderCaps::default()).unwrap();

        // I = 0, N = M is always allowed.
        let zero_i = IdealSet::zero(&z6);
        let full_n = ElemSet::full(6);
        let pair = ideal_in_idealization(&idl, &zero_i, &full_n).unwrap();
        assert_eq!(pair.len(), 6);

        // I = <2>, N = 0 violates 2·M ⊄ {0}.
        let i2 = ideal_generated_by(&z6, &[e(2)]);
        let zero_n = ElemSet::from_indices(6, [0]);
        assert!(matches!(
            ideal_in_idealization(&idl, &i2, &zero_n),
            Err(ConstructError::ContainmentViolation(_))
        ));

        // I = R, N = M gives the whole ring.
        let whole = ideal_in_idealization(&idl, &IdealSet::whole(&z6), &full_n).unwrap();
        assert!(!whole.is_proper());
    }

    #[test]
    fn cap_is_enforced() {
        let z32 = make_zn(32).unwrap();
        let m = ring_as_module(&z32);
        let caps = OrderCaps {
            direct: 256,
            derived: 512,
        };
        assert!(matches!(
            idealization(&z32, &m, &caps),
            Err(ConstructError::OrderCapExceeded { .. })
        ));
    }
}
