//! Direct products of two rings with coordinate projections.

use std::sync::Arc;

use crate::construct::ConstructError;
use crate::elem::ElementId;
use crate::ideal::IdealSet;
use crate::ring::{OrderCaps, Ring, RingHom, RingTable};

/// `R₁ × R₂` with componentwise tables, pair display, and the two
/// coordinate projections. Elements are indexed row-major in the first
/// coordinate: `(a, b) ↦ a·|R₂| + b`.
pub struct ProductRing {
    pub ring: Ring,
    pub left: Ring,
    pub right: Ring,
    pub proj_left: RingHom,
    pub proj_right: RingHom,
}

impl ProductRing {
    #[inline]
    pub fn element(&self, a: ElementId, b: ElementId) -> ElementId {
        ElementId::new(a.index() * self.right.order() + b.index())
    }

    #[inline]
    pub fn parts(&self, e: ElementId) -> (ElementId, ElementId) {
        let m = self.right.order();
        (ElementId::new(e.index() / m), ElementId::new(e.index() % m))
    }

    /// `I₁ × I₂` as an ideal of the product.
    pub fn ideal_from_parts(&self, left: &IdealSet, right: &IdealSet) -> IdealSet {
        assert!(Arc::ptr_eq(left.ring(), &self.left) && Arc::ptr_eq(right.ring(), &self.right));
        let mut m = crate::elem::ElemSet::empty(self.ring.order());
        for a in left.members().iter() {
            for b in right.members().iter() {
                m.insert(self.element(a, b));
            }
        }
        IdealSet::new_unchecked(Arc::clone(&self.ring), m)
    }

    /// Decomposes an ideal of the product into its coordinate images.
    /// Every ideal of `R₁ × R₂` is such a product of ideals.
    pub fn split_ideal(&self, i: &IdealSet) -> (IdealSet, IdealSet) {
        assert!(Arc::ptr_eq(i.ring(), &self.ring));
        let mut l = crate::elem::ElemSet::empty(self.left.order());
        let mut r = crate::elem::ElemSet::empty(self.right.order());
        for e in i.members().iter() {
            let (a, b) = self.parts(e);
            l.insert(a);
            r.insert(b);
        }
        (
            IdealSet::new_unchecked(Arc::clone(&self.left), l),
            IdealSet::new_unchecked(Arc::clone(&self.right), r),
        )
    }
}

pub fn product_ring(
    left: &Ring,
    right: &Ring,
    caps: &OrderCaps,
) -> Result<ProductRing, ConstructError> {
    let n = left.order() * right.order();
    if n > caps.derived {
        return Err(ConstructError::OrderCapExceeded {
            requested: n,
            cap: caps.derived,
        });
    }
    let (n1, n2) = (left.order(), right.order());
    let idx = |a: usize, b: usize| a * n2 + b;
    let mut add = vec![0u16; n * n];
    let mut mul = vec![0u16; n * n];
    let mut names = vec![String::new(); n];
    for a1 in left.elements() {
        for b1 in right.elements() {
            let i = idx(a1.index(), b1.index());
            names[i] = format!("({},{})", left.name(a1), right.name(b1));
            for a2 in left.elements() {
                for b2 in right.elements() {
                    let j = idx(a2.index(), b2.index());
                    add[i * n + j] =
                        idx(left.add(a1, a2).index(), right.add(b1, b2).index()) as u16;
                    mul[i * n + j] =
                        idx(left.mul(a1, a2).index(), right.mul(b1, b2).index()) as u16;
                }
            }
        }
    }
    let zero = idx(left.zero().index(), right.zero().index());
    let one = idx(left.one().index(), right.one().index());
    let label = format!("{}x{}", left.label(), right.label());
    let ring = RingTable::from_construction(label, n, zero, one, add, mul, Some(names))?;
    let _ = n1;
    let proj_left = RingHom::from_fn(
        &ring,
        left,
        |e| ElementId::new(e.index() / n2),
        "proj1",
    )?;
    let proj_right = RingHom::from_fn(
        &ring,
        right,
        |e| ElementId::new(e.index() % n2),
        "proj2",
    )?;
    Ok(ProductRing {
        ring,
        left: Arc::clone(left),
        right: Arc::clone(right),
        proj_left,
        proj_right,
    })
}
