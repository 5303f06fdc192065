//! Per-ring analysis context: the ideal lattice with cached class verdicts,
//! plus lazily built quotient contexts. A context is immutable after
//! creation (lazy parts are `OnceLock`-filled) and shared via `Arc`.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock};

use crate::classify;
use crate::elem::ElemSet;
use crate::ideal::{self, IdealSet};
use crate::ring::{Ring, RingHom};

pub struct RingCtx {
    pub ring: Ring,
    /// Canonically ordered ideal lattice.
    pub lattice: Vec<IdealSet>,
    index: HashMap<ElemSet, usize>,
    /// Lattice indices of proper ideals, ascending.
    pub proper: Vec<usize>,
    /// Lattice indices of maximal ideals.
    pub maximal: Vec<usize>,
    pub weakly_j: Vec<bool>,
    pub j_ideal: Vec<bool>,
    pub quasi_j: Vec<bool>,
    pub weakly_prime: Vec<bool>,
    pub superfluous: Vec<bool>,
    /// Lattice index of J(R).
    pub jacobson_idx: usize,
    /// Per-element: is (0 : c) a weakly J-ideal?
    ann_weakly_j: OnceLock<Vec<bool>>,
    /// k×k row-major lattice indices of pairwise product ideals.
    pairwise_products: OnceLock<Vec<usize>>,
    /// Per proper-lattice-index quotient context.
    quotients: Vec<OnceLock<QuotientCtx>>,
}

pub struct QuotientCtx {
    pub ctx: Arc<RingCtx>,
    pub projection: RingHom,
}

impl RingCtx {
    pub fn new(ring: Ring) -> Arc<RingCtx> {
        let lattice = ideal::all_ideals(&ring);
        let k = lattice.len();
        let index: HashMap<ElemSet, usize> = lattice
            .iter()
            .enumerate()
            .map(|(i, s)| (s.members().clone(), i))
            .collect();
        let proper: Vec<usize> = (0..k).filter(|&i| lattice[i].is_proper()).collect();
        let maximal = ring.maximal_ideal_indices().to_vec();
        let mut weakly_j = vec![false; k];
        let mut j_ideal = vec![false; k];
        let mut quasi_j = vec![false; k];
        let mut weakly_prime = vec![false; k];
        let mut superfluous = vec![false; k];
        for &i in &proper {
            let id = &lattice[i];
            weakly_j[i] = classify::is_weakly_j_ideal(&ring, id).unwrap().holds;
            j_ideal[i] = classify::is_j_ideal(&ring, id).unwrap().holds;
            quasi_j[i] = classify::is_quasi_j_ideal(&ring, id).unwrap().holds;
            weakly_prime[i] = classify::is_weakly_prime(&ring, id).unwrap().holds;
            superfluous[i] = classify::is_superfluous(&ring, id).unwrap().holds;
        }
        let jacobson_idx = *index
            .get(ring.jacobson_radical())
            .expect("J(R) is in the lattice");
        Arc::new(RingCtx {
            lattice,
            index,
            proper,
            maximal,
            weakly_j,
            j_ideal,
            quasi_j,
            weakly_prime,
            superfluous,
            jacobson_idx,
            ann_weakly_j: OnceLock::new(),
            pairwise_products: OnceLock::new(),
            quotients: (0..k).map(|_| OnceLock::new()).collect(),
            ring,
        })
    }

    pub fn label(&self) -> &str {
        self.ring.label()
    }

    pub fn ideal(&self, idx: usize) -> &IdealSet {
        &self.lattice[idx]
    }

    /// Lattice index of a member set that is known to be an ideal.
    pub fn lattice_index(&self, set: &ElemSet) -> usize {
        *self
            .index
            .get(set)
            .expect("ideal-operation result missing from the lattice")
    }

    pub fn is_proper(&self, idx: usize) -> bool {
        self.lattice[idx].is_proper()
    }

    pub fn jacobson(&self) -> &ElemSet {
        self.ring.jacobson_radical()
    }

    /// Whether `(0 : c)` is a weakly J-ideal, per element.
    pub fn annihilator_weakly_j(&self) -> &[bool] {
        self.ann_weakly_j.get_or_init(|| {
            self.ring
                .elements()
                .map(|c| {
                    let single = ElemSet::from_indices(self.ring.order(), [c.index()]);
                    let ann = ideal::annihilator(&self.ring, &single).unwrap();
                    let idx = self.lattice_index(ann.members());
                    self.is_proper(idx) && self.weakly_j[idx]
                })
                .collect()
        })
    }

    /// Lattice index of `K·L` for lattice indices `(i, j)`.
    pub fn product_index(&self, i: usize, j: usize) -> usize {
        let k = self.lattice.len();
        let table = self.pairwise_products.get_or_init(|| {
            let mut t = vec![0usize; k * k];
            for a in 0..k {
                for b in a..k {
                    let p = ideal::product(&self.lattice[a], &self.lattice[b]).unwrap();
                    let idx = self.lattice_index(p.members());
                    t[a * k + b] = idx;
                    t[b * k + a] = idx;
                }
            }
            t
        });
        table[i * k + j]
    }

    /// Quotient context at a proper lattice ideal, built on demand.
    pub fn quotient(&self, idx: usize) -> &QuotientCtx {
        assert!(self.is_proper(idx), "quotient by an improper ideal");
        self.quotients[idx].get_or_init(|| {
            let q = crate::construct::quotient_ring(&self.ring, &self.lattice[idx])
                .expect("proper ideal quotients exist");
            QuotientCtx {
                ctx: RingCtx::new(q.ring),
                projection: q.projection,
            }
        })
    }

    /// Lattice index, in the quotient at `inner`, of the image of `outer`.
    pub fn image_in_quotient(&self, inner: usize, outer: usize) -> usize {
        let q = self.quotient(inner);
        let image = q.projection.image_of_set(self.lattice[outer].members());
        q.ctx.lattice_index(&image)
    }

    /// First proper ideal (by lattice order) whose members equal the
    /// principal ideal of `g`, used by principal-only quantifications.
    pub fn principal_indices(&self) -> Vec<usize> {
        let mut seen = Vec::new();
        for g in self.ring.elements() {
            let p = ideal::ideal_generated_by(&self.ring, &[g]);
            let idx = self.lattice_index(p.members());
            if !seen.contains(&idx) {
                seen.push(idx);
            }
        }
        seen.sort_unstable();
        seen
    }
}

impl std::fmt::Debug for RingCtx {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "RingCtx({}, {} ideals)",
            self.ring.label(),
            self.lattice.len()
        )
    }
}

