//! Finite commutative rings with identity, presented by explicit n×n
//! addition and multiplication tables over element indices.
//!
//! A [`RingTable`] owns its tables and display names and is immutable after
//! construction, so it can be shared freely (`Ring = Arc<RingTable>`).
//! Structural data that is expensive to derive (units, nilradical, Jacobson
//! radical, the ideal lattice) is filled into `OnceLock` caches on first use;
//! concurrent fills are idempotent.
//!
//! Ring equality throughout the crate is identity of the table object, not
//! isomorphism.

use std::fmt;
use std::sync::{Arc, OnceLock};

use thiserror::Error;

use crate::elem::{ElemSet, ElementId};

/// Shared handle to an immutable ring.
pub type Ring = Arc<RingTable>;

/// Largest order accepted for directly constructed rings (`Z_n`, raw tables).
pub const DIRECT_ORDER_CAP: usize = 256;
/// Largest order accepted for derived constructions (products, idealizations,
/// amalgamations, localizations, truncated polynomial rings).
pub const DERIVED_ORDER_CAP: usize = 4096;
/// Constructions up to this order get a full axiom scan; larger derived rings
/// are trusted to their construction (the scan is cubic in the order).
const FULL_VALIDATION_MAX_ORDER: usize = 512;

/// Order caps for ring construction. All caps are artifact policy, not
/// mathematical constraints; they keep table sizes at desk scale.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct OrderCaps {
    pub direct: usize,
    pub derived: usize,
}

impl Default for OrderCaps {
    fn default() -> Self {
        OrderCaps {
            direct: DIRECT_ORDER_CAP,
            derived: DERIVED_ORDER_CAP,
        }
    }
}

/// One of the ring axioms scanned by validation, in scan order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RingAxiom {
    NontrivialIdentity,
    AddIdentity,
    AddCommutativity,
    AddInverses,
    AddAssociativity,
    MulIdentity,
    MulCommutativity,
    MulAssociativity,
    Distributivity,
}

impl RingAxiom {
    pub fn name(self) -> &'static str {
        match self {
            RingAxiom::NontrivialIdentity => "nontrivial-identity",
            RingAxiom::AddIdentity => "add-identity",
            RingAxiom::AddCommutativity => "add-commutativity",
            RingAxiom::AddInverses => "add-inverses",
            RingAxiom::AddAssociativity => "add-associativity",
            RingAxiom::MulIdentity => "mul-identity",
            RingAxiom::MulCommutativity => "mul-commutativity",
            RingAxiom::MulAssociativity => "mul-associativity",
            RingAxiom::Distributivity => "distributivity",
        }
    }
}

/// One of the unital homomorphism axioms.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HomAxiom {
    PreservesZero,
    PreservesOne,
    PreservesAdd,
    PreservesMul,
}

impl HomAxiom {
    pub fn name(self) -> &'static str {
        match self {
            HomAxiom::PreservesZero => "preserves-zero",
            HomAxiom::PreservesOne => "preserves-one",
            HomAxiom::PreservesAdd => "preserves-add",
            HomAxiom::PreservesMul => "preserves-mul",
        }
    }
}

#[derive(Debug, Error)]
pub enum RingError {
    #[error("ring order {n} outside supported range [{min}, {max}]")]
    OrderOutOfRange { n: usize, min: usize, max: usize },
    #[error("malformed table: {0}")]
    TableShape(String),
    #[error("ring axiom {} fails at witness {witness:?}", axiom.name())]
    AxiomViolation {
        axiom: RingAxiom,
        witness: Vec<ElementId>,
    },
    #[error("homomorphism axiom {} fails at witness {witness:?}", axiom.name())]
    HomViolation {
        axiom: HomAxiom,
        witness: Vec<ElementId>,
    },
}

#[derive(Default)]
struct Caches {
    units: OnceLock<ElemSet>,
    nilradical: OnceLock<ElemSet>,
    jacobson: OnceLock<ElemSet>,
    zero_divisors: OnceLock<ElemSet>,
    /// Full ideal lattice as raw member sets, in canonical order.
    lattice: OnceLock<Vec<ElemSet>>,
    /// Indices into `lattice` of the maximal ideals.
    maximal: OnceLock<Vec<usize>>,
}

/// A finite commutative ring with non-zero identity.
pub struct RingTable {
    label: String,
    order: usize,
    add: Vec<u16>,
    mul: Vec<u16>,
    neg: Vec<u16>,
    zero: ElementId,
    one: ElementId,
    names: Vec<String>,
    caches: Caches,
}

impl fmt::Debug for RingTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RingTable({}, order {})", self.label, self.order)
    }
}

impl RingTable {
    /// Builds a ring from explicit tables, always running the full axiom scan.
    ///
    /// `add` and `mul` are row-major n×n tables of element indices; `names`
    /// defaults to decimal indices when absent.
    pub fn from_tables(
        label: impl Into<String>,
        order: usize,
        zero: usize,
        one: usize,
        add: Vec<u16>,
        mul: Vec<u16>,
        names: Option<Vec<String>>,
    ) -> Result<Ring, RingError> {
        Self::build(label.into(), order, zero, one, add, mul, names, true)
    }

    /// Construction-internal entry: validates fully only up to
    /// [`FULL_VALIDATION_MAX_ORDER`]; shape checks always run.
    pub(crate) fn from_construction(
        label: String,
        order: usize,
        zero: usize,
        one: usize,
        add: Vec<u16>,
        mul: Vec<u16>,
        names: Option<Vec<String>>,
    ) -> Result<Ring, RingError> {
        let scan = order <= FULL_VALIDATION_MAX_ORDER;
        Self::build(label, order, zero, one, add, mul, names, scan)
    }

    #[allow(clippy::too_many_arguments)]
    fn build(
        label: String,
        order: usize,
        zero: usize,
        one: usize,
        add: Vec<u16>,
        mul: Vec<u16>,
        names: Option<Vec<String>>,
        scan: bool,
    ) -> Result<Ring, RingError> {
        if order < 2 || order > DERIVED_ORDER_CAP {
            return Err(RingError::OrderOutOfRange {
                n: order,
                min: 2,
                max: DERIVED_ORDER_CAP,
            });
        }
        if add.len() != order * order || mul.len() != order * order {
            return Err(RingError::TableShape(format!(
                "expected {0}x{0} tables, got add len {1}, mul len {2}",
                order,
                add.len(),
                mul.len()
            )));
        }
        if zero >= order || one >= order {
            return Err(RingError::TableShape(
                "zero/one index out of range".into(),
            ));
        }
        if let Some(bad) = add.iter().chain(mul.iter()).find(|&&e| (e as usize) >= order) {
            return Err(RingError::TableShape(format!(
                "table entry {bad} out of range for order {order}"
            )));
        }
        let names = match names {
            Some(ns) => {
                if ns.len() != order {
                    return Err(RingError::TableShape(format!(
                        "expected {} element names, got {}",
                        order,
                        ns.len()
                    )));
                }
                ns
            }
            None => (0..order).map(|i| i.to_string()).collect(),
        };

        if scan {
            scan_axioms(order, zero, one, &add, &mul)?;
        } else if zero == one {
            return Err(RingError::AxiomViolation {
                axiom: RingAxiom::NontrivialIdentity,
                witness: vec![ElementId::new(zero)],
            });
        }

        // Additive inverses exist once the scan (or the construction) is
        // trusted; derive the negation table by row search.
        let mut neg = vec![0u16; order];
        for a in 0..order {
            let mut found = None;
            for b in 0..order {
                if add[a * order + b] as usize == zero {
                    found = Some(b as u16);
                    break;
                }
            }
            match found {
                Some(b) => neg[a] = b,
                None => {
                    return Err(RingError::AxiomViolation {
                        axiom: RingAxiom::AddInverses,
                        witness: vec![ElementId::new(a)],
                    })
                }
            }
        }

        Ok(Arc::new(RingTable {
            label,
            order,
            add,
            mul,
            neg,
            zero: ElementId::new(zero),
            one: ElementId::new(one),
            names,
            caches: Caches::default(),
        }))
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
        self.zero
    }

    #[inline]
    pub fn one(&self) -> ElementId {
        self.one
    }

    #[inline]
    pub fn add(&self, a: ElementId, b: ElementId) -> ElementId {
        ElementId::new(self.add[a.index() * self.order + b.index()] as usize)
    }

    #[inline]
    pub fn mul(&self, a: ElementId, b: ElementId) -> ElementId {
        ElementId::new(self.mul[a.index() * self.order + b.index()] as usize)
    }

    #[inline]
    pub fn neg(&self, a: ElementId) -> ElementId {
        ElementId::new(self.neg[a.index()] as usize)
    }

    #[inline]
    pub fn sub(&self, a: ElementId, b: ElementId) -> ElementId {
        self.add(a, self.neg(b))
    }

    pub fn elements(&self) -> impl Iterator<Item = ElementId> {
        (0..self.order).map(ElementId::new)
    }

    pub fn name(&self, e: ElementId) -> &str {
        &self.names[e.index()]
    }

    /// Set of units `{u : ∃v, uv = 1}`.
    pub fn units(&self) -> &ElemSet {
        self.caches.units.get_or_init(|| {
            let mut s = ElemSet::empty(self.order);
            for a in self.elements() {
                if self.elements().any(|b| self.mul(a, b) == self.one) {
                    s.insert(a);
                }
            }
            s
        })
    }

    pub fn is_unit(&self, a: ElementId) -> bool {
        self.units().contains(a)
    }

    /// Nilradical `{x : x^k = 0 for some k ≥ 1}`, by power iteration.
    /// Termination is by pigeonhole on the at most n distinct powers.
    pub fn nilradical(&self) -> &ElemSet {
        self.caches.nilradical.get_or_init(|| {
            let mut s = ElemSet::empty(self.order);
            for a in self.elements() {
                if self.is_nilpotent(a) {
                    s.insert(a);
                }
            }
            s
        })
    }

    pub fn is_nilpotent(&self, a: ElementId) -> bool {
        let mut seen = ElemSet::empty(self.order);
        let mut p = a;
        loop {
            if p == self.zero {
                return true;
            }
            if !seen.insert(p) {
                return false;
            }
            p = self.mul(p, a);
        }
    }

    /// Zero-divisors `Z(R) = {a : ∃b ≠ 0, ab = 0}` (contains 0).
    pub fn zero_divisors(&self) -> &ElemSet {
        self.caches.zero_divisors.get_or_init(|| {
            let mut s = ElemSet::empty(self.order);
            for a in self.elements() {
                for b in self.elements() {
                    if b != self.zero && self.mul(a, b) == self.zero {
                        s.insert(a);
                        break;
                    }
                }
            }
            s
        })
    }

    /// Jacobson radical, computed as the intersection of all maximal ideals
    /// and cross-checked against `{x : 1 − xr is a unit for all r}`.
    pub fn jacobson_radical(&self) -> &ElemSet {
        self.caches.jacobson.get_or_init(|| {
            let lattice = self.ideal_lattice();
            let mut inter = ElemSet::full(self.order);
            for &mi in self.maximal_ideal_indices() {
                inter = inter.intersect(&lattice[mi]);
            }
            // Second oracle: x ∈ J(R) iff 1 − xr is a unit for every r.
            let mut by_units = ElemSet::empty(self.order);
            for x in self.elements() {
                let all_units = self
                    .elements()
                    .all(|r| self.is_unit(self.sub(self.one, self.mul(x, r))));
                if all_units {
                    by_units.insert(x);
                }
            }
            assert!(
                inter == by_units,
                "Jacobson radical oracles disagree on {}",
                self.label
            );
            inter
        })
    }

    /// Full ideal lattice as raw member sets, canonically ordered
    /// (cardinality, then member-wise lexicographic). Cached per ring; a
    /// registered [`LatticeStore`] is consulted first and written back on
    /// recomputation.
    pub fn ideal_lattice(&self) -> &[ElemSet] {
        self.caches.lattice.get_or_init(|| {
            if let Some(store) = lattice_store() {
                if let Some(cached) = store.load(self) {
                    return cached;
                }
                let fresh = crate::ideal::compute_lattice(self);
                store.save(self, &fresh);
                return fresh;
            }
            crate::ideal::compute_lattice(self)
        })
    }

    /// Canonical byte encoding of the tables, suitable for content hashing.
    pub fn content_bytes(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(12 + 4 * self.add.len());
        out.extend_from_slice(&(self.order as u32).to_le_bytes());
        out.extend_from_slice(&(self.zero.index() as u32).to_le_bytes());
        out.extend_from_slice(&(self.one.index() as u32).to_le_bytes());
        for &e in self.add.iter().chain(self.mul.iter()) {
            out.extend_from_slice(&e.to_le_bytes());
        }
        out
    }

    /// Recomputes the ideal lattice from scratch, bypassing every cache —
    /// the reference oracle for cache verification.
    pub fn recompute_lattice(&self) -> Vec<ElemSet> {
        crate::ideal::compute_lattice(self)
    }

    /// Indices into [`Self::ideal_lattice`] of the maximal ideals.
    pub fn maximal_ideal_indices(&self) -> &[usize] {
        self.caches.maximal.get_or_init(|| {
            let lattice = self.ideal_lattice();
            let proper: Vec<usize> = (0..lattice.len())
                .filter(|&i| lattice[i].len() < self.order)
                .collect();
            proper
                .iter()
                .copied()
                .filter(|&i| {
                    !proper
                        .iter()
                        .any(|&j| j != i && lattice[i].is_subset(&lattice[j]))
                })
                .collect()
        })
    }

    /// Exactly one maximal ideal.
    pub fn is_quasi_local(&self) -> bool {
        self.maximal_ideal_indices().len() == 1
    }

    /// `J(R) = 0`.
    pub fn is_semiprimitive(&self) -> bool {
        self.jacobson_radical().len() == 1
    }

    /// Every zero-divisor lies in `J(R)` (equivalently `a = ab ⇒ a = 0` or
    /// `b` is a unit).
    pub fn is_presimplifiable(&self) -> bool {
        self.zero_divisors().is_subset(self.jacobson_radical())
    }

    /// `a = ab ⇒ a ∈ N(R)` or `b` is a unit.
    pub fn is_quasi_presimplifiable(&self) -> bool {
        for a in self.elements() {
            for b in self.elements() {
                if self.mul(a, b) == a && !self.nilradical().contains(a) && !self.is_unit(b) {
                    return false;
                }
            }
        }
        true
    }

    /// Checks that `e` is a valid element index of this ring.
    pub fn check_element(&self, index: usize) -> Option<ElementId> {
        (index < self.order).then(|| ElementId::new(index))
    }
}

fn scan_axioms(
    order: usize,
    zero: usize,
    one: usize,
    add: &[u16],
    mul: &[u16],
) -> Result<(), RingError> {
    let n = order;
    let viol = |axiom, witness: Vec<usize>| {
        Err(RingError::AxiomViolation {
            axiom,
            witness: witness.into_iter().map(ElementId::new).collect(),
        })
    };
    let a_ = |x: usize, y: usize| add[x * n + y] as usize;
    let m_ = |x: usize, y: usize| mul[x * n + y] as usize;

    if zero == one {
        return viol(RingAxiom::NontrivialIdentity, vec![zero]);
    }
    for x in 0..n {
        if a_(x, zero) != x {
            return viol(RingAxiom::AddIdentity, vec![x]);
        }
    }
    for x in 0..n {
        for y in x + 1..n {
            if a_(x, y) != a_(y, x) {
                return viol(RingAxiom::AddCommutativity, vec![x, y]);
            }
        }
    }
    for x in 0..n {
        if !(0..n).any(|y| a_(x, y) == zero) {
            return viol(RingAxiom::AddInverses, vec![x]);
        }
    }
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if a_(a_(x, y), z) != a_(x, a_(y, z)) {
                    return viol(RingAxiom::AddAssociativity, vec![x, y, z]);
                }
            }
        }
    }
    for x in 0..n {
        if m_(x, one) != x {
            return viol(RingAxiom::MulIdentity, vec![x]);
        }
    }
    for x in 0..n {
        for y in x + 1..n {
            if m_(x, y) != m_(y, x) {
                return viol(RingAxiom::MulCommutativity, vec![x, y]);
            }
        }
    }
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if m_(m_(x, y), z) != m_(x, m_(y, z)) {
                    return viol(RingAxiom::MulAssociativity, vec![x, y, z]);
                }
            }
        }
    }
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if m_(x, a_(y, z)) != a_(m_(x, y), m_(x, z)) {
                    return viol(RingAxiom::Distributivity, vec![x, y, z]);
                }
            }
        }
    }
    Ok(())
}

/// Persistence hook for ideal lattices, keyed by table content. A `load`
/// returning `Some` must yield exactly the canonical lattice of the ring.
pub trait LatticeStore: Send + Sync {
    fn load(&self, ring: &RingTable) -> Option<Vec<ElemSet>>;
    fn save(&self, ring: &RingTable, lattice: &[ElemSet]);
}

static LATTICE_STORE: OnceLock<Box<dyn LatticeStore>> = OnceLock::new();

/// Registers a process-wide lattice store; the first registration wins.
pub fn set_lattice_store(store: Box<dyn LatticeStore>) -> bool {
    LATTICE_STORE.set(store).is_ok()
}

fn lattice_store() -> Option<&'static dyn LatticeStore> {
    LATTICE_STORE.get().map(|b| b.as_ref())
}

/// The ring of integers modulo `n`, with canonical residue labels.
pub fn make_zn(n: usize) -> Result<Ring, RingError> {
    make_zn_capped(n, DIRECT_ORDER_CAP)
}

/// `make_zn` with an explicit order cap.
pub fn make_zn_capped(n: usize, cap: usize) -> Result<Ring, RingError> {
    if n < 2 || n > cap {
        return Err(RingError::OrderOutOfRange { n, min: 2, max: cap });
    }
    let mut add = vec![0u16; n * n];
    let mut mul = vec![0u16; n * n];
    for a in 0..n {
        for b in 0..n {
            add[a * n + b] = ((a + b) % n) as u16;
            mul[a * n + b] = ((a * b) % n) as u16;
        }
    }
    RingTable::from_construction(format!("Z{n}"), n, 0, 1, add, mul, None)
}

/// Validates candidate tables, returning the ring or the first violated
/// axiom with a witness.
pub fn validate_ring(
    label: impl Into<String>,
    order: usize,
    zero: usize,
    one: usize,
    add: Vec<u16>,
    mul: Vec<u16>,
    names: Option<Vec<String>>,
) -> Result<Ring, RingError> {
    RingTable::from_tables(label, order, zero, one, add, mul, names)
}

/// A validated unital ring homomorphism between two ring tables.
#[derive(Clone)]
pub struct RingHom {
    source: Ring,
    target: Ring,
    map: Vec<u16>,
    label: String,
}

impl fmt::Debug for RingHom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RingHom({}: {} -> {})", self.label, self.source.label(), self.target.label())
    }
}

impl RingHom {
    /// Validates `map` (one target index per source element) as a unital ring
    /// homomorphism.
    pub fn validate(
        source: &Ring,
        target: &Ring,
        map: Vec<u16>,
        label: impl Into<String>,
    ) -> Result<RingHom, RingError> {
        if map.len() != source.order() {
            return Err(RingError::TableShape(format!(
                "hom map has {} entries for source of order {}",
                map.len(),
                source.order()
            )));
        }
        if let Some(bad) = map.iter().find(|&&e| (e as usize) >= target.order()) {
            return Err(RingError::TableShape(format!(
                "hom image {bad} out of range for target of order {}",
                target.order()
            )));
        }
        let f = |e: ElementId| ElementId::new(map[e.index()] as usize);
        if f(source.zero()) != target.zero() {
            return Err(RingError::HomViolation {
                axiom: HomAxiom::PreservesZero,
                witness: vec![source.zero()],
            });
        }
        if f(source.one()) != target.one() {
            return Err(RingError::HomViolation {
                axiom: HomAxiom::PreservesOne,
                witness: vec![source.one()],
            });
        }
        for a in source.elements() {
            for b in source.elements() {
                if f(source.add(a, b)) != target.add(f(a), f(b)) {
                    return Err(RingError::HomViolation {
                        axiom: HomAxiom::PreservesAdd,
                        witness: vec![a, b],
                    });
                }
                if f(source.mul(a, b)) != target.mul(f(a), f(b)) {
                    return Err(RingError::HomViolation {
                        axiom: HomAxiom::PreservesMul,
                        witness: vec![a, b],
                    });
                }
            }
        }
        Ok(RingHom {
            source: Arc::clone(source),
            target: Arc::clone(target),
            map,
            label: label.into(),
        })
    }

    pub fn from_fn(
        source: &Ring,
        target: &Ring,
        f: impl Fn(ElementId) -> ElementId,
        label: impl Into<String>,
    ) -> Result<RingHom, RingError> {
        let map = source.elements().map(|e| f(e).index() as u16).collect();
        Self::validate(source, target, map, label)
    }

    /// The identity map on `r`.
    pub fn identity(r: &Ring) -> RingHom {
        RingHom {
            source: Arc::clone(r),
            target: Arc::clone(r),
            map: (0..r.order() as u16).collect(),
            label: "id".into(),
        }
    }

    pub fn source(&self) -> &Ring {
        &self.source
    }

    pub fn target(&self) -> &Ring {
        &self.target
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    #[inline]
    pub fn apply(&self, e: ElementId) -> ElementId {
        ElementId::new(self.map[e.index()] as usize)
    }

    pub fn is_mono(&self) -> bool {
        let mut seen = ElemSet::empty(self.target.order());
        self.map
            .iter()
            .all(|&im| seen.insert(ElementId::new(im as usize)))
    }

    pub fn is_epi(&self) -> bool {
        self.image().len() == self.target.order()
    }

    pub fn image(&self) -> ElemSet {
        let mut s = ElemSet::empty(self.target.order());
        for &im in &self.map {
            s.insert(ElementId::new(im as usize));
        }
        s
    }

    pub fn kernel(&self) -> ElemSet {
        let mut s = ElemSet::empty(self.source.order());
        for e in self.source.elements() {
            if self.apply(e) == self.target.zero() {
                s.insert(e);
            }
        }
        s
    }

    pub fn image_of_set(&self, s: &ElemSet) -> ElemSet {
        let mut out = ElemSet::empty(self.target.order());
        for e in s.iter() {
            out.insert(self.apply(e));
        }
        out
    }

    pub fn preimage_of_set(&self, s: &ElemSet) -> ElemSet {
        let mut out = ElemSet::empty(self.source.order());
        for e in self.source.elements() {
            if s.contains(self.apply(e)) {
                out.insert(e);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(i: usize) -> ElementId {
        ElementId::new(i)
    }

    #[test]
    fn zn_basics() {
        let z6 = make_zn(6).unwrap();
        assert_eq!(z6.order(), 6);
        assert_eq!(z6.label(), "Z6");
        assert_eq!(z6.add(e(4), e(5)), e(3));
        assert_eq!(z6.mul(e(4), e(5)), e(2));
        assert_eq!(z6.neg(e(2)), e(4));
    }

    #[test]
    fn zn_rejects_trivial_and_oversize() {
        assert!(matches!(make_zn(1), Err(RingError::OrderOutOfRange { .. })));
        assert!(matches!(make_zn(0), Err(RingError::OrderOutOfRange { .. })));
        assert!(matches!(
            make_zn(257),
            Err(RingError::OrderOutOfRange { .. })
        ));
        assert!(make_zn_capped(300, 4096).is_ok());
    }

    #[test]
    fn units_of_small_rings() {
        let z6 = make_zn(6).unwrap();
        assert_eq!(z6.units().members(), vec![e(1), e(5)]);
        let z2 = make_zn(2).unwrap();
        assert_eq!(z2.units().members(), vec![e(1)]);
        let z32 = make_zn(32).unwrap();
        // All odd residues are invertible mod a power of two.
        assert!(z32.elements().all(|a| z32.units().contains(a) == (a.index() % 2 == 1)));
    }

    #[test]
    fn nilradical_examples() {
        let z6 = make_zn(6).unwrap();
        assert_eq!(z6.nilradical().members(), vec![e(0)]);
        let z8 = make_zn(8).unwrap();
        assert_eq!(z8.nilradical().members(), vec![e(0), e(2), e(4), e(6)]);
        let z5 = make_zn(5).unwrap();
        assert_eq!(z5.nilradical().members(), vec![e(0)]);
    }

    #[test]
    fn jacobson_examples() {
        let z6 = make_zn(6).unwrap();
        assert_eq!(z6.jacobson_radical().members(), vec![e(0)]);
        let z32 = make_zn(32).unwrap();
        let evens: Vec<_> = (0..32).step_by(2).map(e).collect();
        assert_eq!(z32.jacobson_radical().members(), evens);
        let z2 = make_zn(2).unwrap();
        assert_eq!(z2.jacobson_radical().members(), vec![e(0)]);
    }

    #[test]
    fn structural_predicates() {
        let z32 = make_zn(32).unwrap();
        assert!(z32.is_quasi_local());
        assert!(z32.is_presimplifiable());
        assert!(z32.is_quasi_presimplifiable());
        assert!(!z32.is_semiprimitive());

        let z6 = make_zn(6).unwrap();
        assert!(!z6.is_quasi_local());
        assert!(z6.is_semiprimitive());
        assert!(!z6.is_presimplifiable());
        assert!(!z6.is_quasi_presimplifiable());

        let z7 = make_zn(7).unwrap();
        assert!(z7.is_quasi_local());
        assert!(z7.is_semiprimitive());
        assert!(z7.is_presimplifiable());
        assert!(z7.is_quasi_presimplifiable());
    }

    #[test]
    fn presimplifiable_implies_quasi_presimplifiable() {
        for n in 2..=32 {
            let r = make_zn(n).unwrap();
            if r.is_presimplifiable() {
                assert!(r.is_quasi_presimplifiable(), "Z{n}");
            }
        }
    }

    #[test]
    fn validate_detects_broken_table() {
        let z4 = make_zn(4).unwrap();
        let n = 4;
        let add: Vec<u16> = (0..n)
            .flat_map(|a| (0..n).map(move |b| ((a + b) % n) as u16))
            .collect();
        let mut mul: Vec<u16> = (0..n)
            .flat_map(|a| (0..n).map(move |b| ((a * b) % n) as u16))
            .collect();
        // Intact tables validate.
        assert!(validate_ring("Z4", 4, 0, 1, add.clone(), mul.clone(), None).is_ok());
        // Damaging 2*2 breaks associativity or distributivity.
        mul[2 * 4 + 2] = 1;
        let err = validate_ring("Z4bad", 4, 0, 1, add.clone(), mul, None).unwrap_err();
        match err {
            RingError::AxiomViolation { axiom, .. } => assert!(
                axiom == RingAxiom::MulAssociativity
                    || axiom == RingAxiom::Distributivity
                    || axiom == RingAxiom::MulCommutativity
            ),
            other => panic!("unexpected error {other:?}"),
        }
        // zero == one is rejected up front.
        let err = validate_ring("bad", 4, 0, 0, add, vec![0; 16], None).unwrap_err();
        assert!(matches!(
            err,
            RingError::AxiomViolation {
                axiom: RingAxiom::NontrivialIdentity,
                ..
            }
        ));
        let _ = z4;
    }

    #[test]
    fn hom_validation_and_classification() {
        let z12 = make_zn(12).unwrap();
        let z4 = make_zn(4).unwrap();
        let proj = RingHom::from_fn(&z12, &z4, |x| e(x.index() % 4), "mod4").unwrap();
        assert!(proj.is_epi());
        assert!(!proj.is_mono());
        assert_eq!(proj.kernel().members(), vec![e(0), e(4), e(8)]);

        let z6 = make_zn(6).unwrap();
        let id = RingHom::identity(&z6);
        assert!(id.is_mono() && id.is_epi());

        let bad = RingHom::from_fn(&z4, &z4, |x| e((x.index() * 2) % 4), "x2");
        match bad {
            Err(RingError::HomViolation { axiom, .. }) => {
                assert_eq!(axiom, HomAxiom::PreservesOne)
            }
            other => panic!("expected hom violation, got {other:?}"),
        }
    }
}
