//! Quotient rings by a proper ideal, with the canonical projection.

use std::sync::Arc;

use crate::construct::ConstructError;
use crate::elem::ElementId;
use crate::ideal::{IdealError, IdealSet};
use crate::ring::{Ring, RingHom, RingTable};

/// A coset ring together with its canonical projection.
pub struct QuotientRing {
    pub ring: Ring,
    pub projection: RingHom,
}

/// Builds `R/K` for a proper ideal `K`. Cosets are represented by their
/// least element; element order follows representative order, and coset
/// labels are retained for display.
pub fn quotient_ring(base: &Ring, k: &IdealSet) -> Result<QuotientRing, ConstructError> {
    if !Arc::ptr_eq(base, k.ring()) {
        return Err(ConstructError::RingMismatch);
    }
    if !k.is_proper() {
        return Err(ConstructError::Ideal(IdealError::ImproperIdeal));
    }
    let n = base.order();
    // rep[e] = least element of the coset e + K.
    let mut rep = vec![u16::MAX; n];
    let mut reps: Vec<ElementId> = Vec::new();
    for e in base.elements() {
        if rep[e.index()] != u16::MAX {
            continue;
        }
        let least = k
            .members()
            .iter()
            .map(|x| base.add(e, x))
            .min()
            .expect("ideal contains zero");
        debug_assert_eq!(least, e, "elements visited in ascending order");
        reps.push(e);
        for x in k.members().iter() {
            rep[base.add(e, x).index()] = (reps.len() - 1) as u16;
        }
    }
    let m = reps.len();
    let class_of = |e: ElementId| rep[e.index()] as usize;
    let mut add = vec![0u16; m * m];
    let mut mul = vec![0u16; m * m];
    for (i, &a) in reps.iter().enumerate() {
        for (j, &b) in reps.iter().enumerate() {
            add[i * m + j] = class_of(base.add(a, b)) as u16;
            mul[i * m + j] = class_of(base.mul(a, b)) as u16;
        }
    }
    let names = reps.iter().map(|&r| format!("[{}]", base.name(r))).collect();
    let label = format!("{}/{}", base.label(), k.display_short());
    let ring = RingTable::from_construction(
        label,
        m,
        class_of(base.zero()),
        class_of(base.one()),
        add,
        mul,
        Some(names),
    )?;
    let projection = RingHom::from_fn(
        base,
        &ring,
        |e| ElementId::new(class_of(e)),
        format!("proj:{}", k.display_short()),
    )?;
    Ok(QuotientRing { ring, projection })
}
