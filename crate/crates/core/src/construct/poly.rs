//! Truncated polynomial rings `R[x]/(x^k)` with convolution-truncated
//! multiplication — a finite stand-in for power-series arguments.

use std::sync::Arc;

use crate::construct::ConstructError;
use crate::elem::{ElemSet, ElementId};
use crate::ideal::IdealSet;
use crate::ring::{OrderCaps, Ring, RingTable};

/// `R[x]/(x^k)`. Elements are coefficient vectors `(c₀, …, c_{k−1})`
/// indexed by `Σ cᵢ·|R|^i`.
pub struct TruncatedPoly {
    pub ring: Ring,
    pub base: Ring,
    pub degree: usize,
}

impl TruncatedPoly {
    pub fn coeffs(&self, e: ElementId) -> Vec<ElementId> {
        let n = self.base.order();
        let mut rest = e.index();
        (0..self.degree)
            .map(|_| {
                let c = rest % n;
                rest /= n;
                ElementId::new(c)
            })
            .collect()
    }

    pub fn element(&self, coeffs: &[ElementId]) -> ElementId {
        assert_eq!(coeffs.len(), self.degree);
        let n = self.base.order();
        let mut idx = 0usize;
        for c in coeffs.iter().rev() {
            idx = idx * n + c.index();
        }
        ElementId::new(idx)
    }

    /// The constant embedding of a base element.
    pub fn constant(&self, c: ElementId) -> ElementId {
        ElementId::new(c.index())
    }

    /// Contraction of an ideal of the polynomial ring to the constants:
    /// `{a ∈ R : the constant polynomial a lies in I}`.
    pub fn contract_to_constants(&self, i: &IdealSet) -> IdealSet {
        assert!(Arc::ptr_eq(i.ring(), &self.ring));
        let mut out = ElemSet::empty(self.base.order());
        for a in self.base.elements() {
            if i.contains(self.constant(a)) {
                out.insert(a);
            }
        }
        IdealSet::new_unchecked(Arc::clone(&self.base), out)
    }
}

pub fn truncated_poly(
    base: &Ring,
    k: usize,
    caps: &OrderCaps,
) -> Result<TruncatedPoly, ConstructError> {
    assert!(k >= 2, "truncation degree must be at least 2");
    let n = base.order();
    let requested = n.checked_pow(k as u32).unwrap_or(usize::MAX);
    if requested > caps.derived {
        return Err(ConstructError::OrderCapExceeded {
            requested,
            cap: caps.derived,
        });
    }
    let order = requested;

    let decode = |mut e: usize| -> Vec<ElementId> {
        (0..k)
            .map(|_| {
                let c = e % n;
                e /= n;
                ElementId::new(c)
            })
            .collect()
    };
    let encode = |cs: &[ElementId]| -> usize {
        let mut idx = 0usize;
        for c in cs.iter().rev() {
            idx = idx * n + c.index();
        }
        idx
    };

    let mut add = vec![0u16; order * order];
    let mut mul = vec![0u16; order * order];
    let mut names = vec![String::new(); order];
    for i in 0..order {
        let a = decode(i);
        names[i] = poly_name(base, &a);
        for j in 0..order {
            let b = decode(j);
            let sum: Vec<ElementId> = (0..k).map(|d| base.add(a[d], b[d])).collect();
            let mut prod = vec![base.zero(); k];
            for (da, &ca) in a.iter().enumerate() {
                for (db, &cb) in b.iter().enumerate() {
                    if da + db < k {
                        prod[da + db] = base.add(prod[da + db], base.mul(ca, cb));
                    }
                }
            }
            add[i * order + j] = encode(&sum) as u16;
            mul[i * order + j] = encode(&prod) as u16;
        }
    }
    let zero = base.zero().index();
    let one = base.one().index();
    let label = format!("poly({},{})", base.label(), k);
    let ring = RingTable::from_construction(label, order, zero, one, add, mul, Some(names))?;
    Ok(TruncatedPoly {
        ring,
        base: Arc::clone(base),
        degree: k,
    })
}

fn poly_name(base: &Ring, coeffs: &[ElementId]) -> String {
    let mut terms: Vec<String> = Vec::new();
    for (d, &c) in coeffs.iter().enumerate() {
        if c == base.zero() {
            continue;
        }
        let cn = base.name(c);
        let term = match d {
            0 => cn.to_string(),
            1 if cn == "1" => "x".to_string(),
            1 => format!("{cn}x"),
            _ if cn == "1" => format!("x^{d}"),
            _ => format!("{cn}x^{d}"),
        };
        terms.push(term);
    }
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join("+")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::{ideal_generated_by, jacobson_radical};
    use crate::ring::make_zn;

    fn e(i: usize) -> ElementId {
        ElementId::new(i)
    }

    #[test]
    fn z2_truncated_at_2() {
        let z2 = make_zn(2).unwrap();
        let p = truncated_poly(&z2, 2, &OrderCaps::default()).unwrap();
        assert_eq!(p.ring.order(), 4);
        // x = element (0,1) = index 2; x^2 = 0.
        let x = p.element(&[e(0), e(1)]);
        assert_eq!(p.ring.mul(x, x), p.ring.zero());
        assert!(p.ring.is_nilpotent(x));
        assert_eq!(p.ring.name(x), "x");
    }

    #[test]
    fn field_base_gives_local_ring_with_radical_x() {
        for q in [2usize, 3, 5] {
            let f = make_zn(q).unwrap();
            let p = truncated_poly(&f, 2, &OrderCaps::default()).unwrap();
            assert!(p.ring.is_quasi_local(), "Z{q}[x]/(x^2)");
            let x = p.element(&[e(0), e(1)]);
            let jac = jacobson_radical(&p.ring);
            assert_eq!(jac, ideal_generated_by(&p.ring, &[x]));
        }
    }

    #[test]
    fn contraction_of_x_ideal_is_zero() {
        let z2 = make_zn(2).unwrap();
        let p = truncated_poly(&z2, 2, &OrderCaps::default()).unwrap();
        let x = p.element(&[e(0), e(1)]);
        let ix = ideal_generated_by(&p.ring, &[x]);
        assert!(p.contract_to_constants(&ix).is_zero());
    }

    #[test]
    fn cap_is_enforced() {
        let z8 = make_zn(8).unwrap();
        let caps = OrderCaps {
            direct: 256,
            derived: 256,
        };
        assert!(matches!(
            truncated_poly(&z8, 3, &caps),
            Err(ConstructError::OrderCapExceeded { .. })
        ));
    }
}
