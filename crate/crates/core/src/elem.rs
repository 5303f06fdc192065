//! Element identifiers and dense bit-sets over a ring's element range.

use std::fmt;

/// Index of an element inside a specific ring's (or module's) tables.
///
/// An `ElementId` is only meaningful relative to the structure of order `n`
/// it was produced by; it carries no back-reference to that structure.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElementId(u16);

impl ElementId {
    #[inline]
    pub fn new(index: usize) -> Self {
        debug_assert!(index <= u16::MAX as usize, "element index overflows u16");
        ElementId(index as u16)
    }

    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Debug for ElementId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}", self.0)
    }
}

impl fmt::Display for ElementId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Dense bit-set over the element range `[0, n)` of one structure.
///
/// Unused tail bits of the last word are kept zero so that derived `Eq` and
/// `Hash` agree with set equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ElemSet {
    n: usize,
    words: Box<[u64]>,
}

impl ElemSet {
    pub fn empty(n: usize) -> Self {
        ElemSet {
            n,
            words: vec![0u64; n.div_ceil(64)].into_boxed_slice(),
        }
    }

    pub fn full(n: usize) -> Self {
        let mut s = ElemSet::empty(n);
        for i in 0..n {
            s.insert(ElementId::new(i));
        }
        s
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(n: usize, iter: I) -> Self {
        let mut s = ElemSet::empty(n);
        for i in iter {
            assert!(i < n, "index {i} out of range for universe of size {n}");
            s.insert(ElementId::new(i));
        }
        s
    }

    /// Size of the universe `[0, n)` this set ranges over (not the cardinality).
    #[inline]
    pub fn universe(&self) -> usize {
        self.n
    }

    /// Inserts `e`; returns true when it was not already present.
    #[inline]
    pub fn insert(&mut self, e: ElementId) -> bool {
        let i = e.index();
        debug_assert!(i < self.n);
        let w = &mut self.words[i / 64];
        let bit = 1u64 << (i % 64);
        let fresh = *w & bit == 0;
        *w |= bit;
        fresh
    }

    #[inline]
    pub fn remove(&mut self, e: ElementId) {
        let i = e.index();
        debug_assert!(i < self.n);
        self.words[i / 64] &= !(1u64 << (i % 64));
    }

    #[inline]
    pub fn contains(&self, e: ElementId) -> bool {
        let i = e.index();
        debug_assert!(i < self.n);
        self.words[i / 64] & (1u64 << (i % 64)) != 0
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Ascending iterator over members.
    pub fn iter(&self) -> impl Iterator<Item = ElementId> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut bits = w;
            std::iter::from_fn(move || {
                if bits == 0 {
                    None
                } else {
                    let tz = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    Some(ElementId::new(wi * 64 + tz))
                }
            })
        })
    }

    pub fn members(&self) -> Vec<ElementId> {
        self.iter().collect()
    }

    pub fn first(&self) -> Option<ElementId> {
        self.iter().next()
    }

    pub fn union(&self, other: &ElemSet) -> ElemSet {
        assert_eq!(self.n, other.n);
        let words = self
            .words
            .iter()
            .zip(other.words.iter())
            .map(|(a, b)| a | b)
            .collect();
        ElemSet { n: self.n, words }
    }

    pub fn intersect(&self, other: &ElemSet) -> ElemSet {
        assert_eq!(self.n, other.n);
        let words = self
            .words
            .iter()
            .zip(other.words.iter())
            .map(|(a, b)| a & b)
            .collect();
        ElemSet { n: self.n, words }
    }

    pub fn complement(&self) -> ElemSet {
        let mut out = ElemSet::full(self.n);
        for (o, s) in out.words.iter_mut().zip(self.words.iter()) {
            *o &= !s;
        }
        out
    }

    pub fn is_subset(&self, other: &ElemSet) -> bool {
        assert_eq!(self.n, other.n);
        self.words
            .iter()
            .zip(other.words.iter())
            .all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &ElemSet) -> bool {
        assert_eq!(self.n, other.n);
        self.words
            .iter()
            .zip(other.words.iter())
            .all(|(a, b)| a & b == 0)
    }

    /// Deterministic ordering: by cardinality, then member-wise lexicographic.
    pub fn cmp_canonical(&self, other: &ElemSet) -> std::cmp::Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.iter().cmp(other.iter()))
    }
}

impl fmt::Debug for ElemSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn insert_contains_iter() {
        let mut s = ElemSet::empty(130);
        assert!(s.insert(ElementId::new(0)));
        assert!(s.insert(ElementId::new(129)));
        assert!(!s.insert(ElementId::new(0)));
        assert!(s.contains(ElementId::new(129)));
        assert!(!s.contains(ElementId::new(64)));
        assert_eq!(s.members(), vec![ElementId::new(0), ElementId::new(129)]);
        assert_eq!(s.len(), 2);
    }

    #[test]
    fn set_algebra() {
        let a = ElemSet::from_indices(10, [1, 2, 3]);
        let b = ElemSet::from_indices(10, [3, 4]);
        assert_eq!(a.union(&b).len(), 4);
        assert_eq!(a.intersect(&b).members(), vec![ElementId::new(3)]);
        assert!(a.intersect(&b).is_subset(&a));
        assert!(!a.is_subset(&b));
        assert_eq!(a.complement().len(), 7);
        assert!(a.is_disjoint(&ElemSet::from_indices(10, [0, 9])));
    }

    #[test]
    fn canonical_order_is_by_size_then_lex() {
        let a = ElemSet::from_indices(8, [0, 5]);
        let b = ElemSet::from_indices(8, [1, 2]);
        let c = ElemSet::from_indices(8, [7]);
        assert_eq!(a.cmp_canonical(&b), std::cmp::Ordering::Less);
        assert_eq!(c.cmp_canonical(&a), std::cmp::Ordering::Less);
    }
}
