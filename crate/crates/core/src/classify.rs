//! Ideal-class predicates with witnesses.
//!
//! Every predicate scans its defining implication directly over the tables.
//! Negative verdicts carry the lexicographically least falsifying tuple,
//! which is replayed against the definition before the verdict is returned;
//! a witness that fails to replay is a bug, not a result.

use std::sync::Arc;

use thiserror::Error;

use crate::construct::{quotient_ring, ConstructError, QuotientRing};
use crate::elem::{ElemSet, ElementId};
use crate::ideal::{self, IdealSet, MultSet};
use crate::ring::Ring;

#[derive(Debug, Error)]
pub enum ClassifyError {
    #[error("predicate requires a proper ideal")]
    ImproperIdeal,
    #[error("ideal belongs to a different ring")]
    RingMismatch,
    #[error("definition precondition violated: R∖J(R) ⊄ S")]
    DefinitionPreconditionViolated,
    #[error(transparent)]
    Construct(#[from] ConstructError),
}

/// The ideal classes and containment facts decided by this module.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Predicate {
    WeaklyJ,
    JIdeal,
    QuasiJ,
    NIdeal,
    Prime,
    WeaklyPrime,
    Superfluous,
    SPresimplifiableQuotient,
    WeaklyJMultClosed,
    InJacobson,
    InNilradical,
    SquareZero,
    Maximal,
    Zero,
}

impl Predicate {
    pub fn name(self) -> &'static str {
        match self {
            Predicate::WeaklyJ => "weaklyJ",
            Predicate::JIdeal => "J",
            Predicate::QuasiJ => "quasiJ",
            Predicate::NIdeal => "nIdeal",
            Predicate::Prime => "prime",
            Predicate::WeaklyPrime => "weaklyPrime",
            Predicate::Superfluous => "superfluous",
            Predicate::SPresimplifiableQuotient => "sPresimpl",
            Predicate::WeaklyJMultClosed => "weaklyJMultClosed",
            Predicate::InJacobson => "inJacobson",
            Predicate::InNilradical => "inNilradical",
            Predicate::SquareZero => "squareZero",
            Predicate::Maximal => "maximal",
            Predicate::Zero => "zero",
        }
    }

    pub fn parse(name: &str) -> Option<Predicate> {
        use Predicate::*;
        Some(match name {
            "weaklyJ" => WeaklyJ,
            "J" => JIdeal,
            "quasiJ" => QuasiJ,
            "nIdeal" => NIdeal,
            "prime" => Prime,
            "weaklyPrime" => WeaklyPrime,
            "superfluous" => Superfluous,
            "sPresimpl" => SPresimplifiableQuotient,
            "inJacobson" => InJacobson,
            "inNilradical" => InNilradical,
            "squareZero" => SquareZero,
            "maximal" => Maximal,
            "zero" => Zero,
            _ => return None,
        })
    }
}

/// Outcome of one predicate on one instance. A witness is present exactly
/// when the predicate fails, and replaying it against the definition must
/// reproduce the failure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PredicateVerdict {
    pub predicate: Predicate,
    pub holds: bool,
    pub witness: Option<Vec<ElementId>>,
}

impl PredicateVerdict {
    fn pass(predicate: Predicate) -> Self {
        PredicateVerdict {
            predicate,
            holds: true,
            witness: None,
        }
    }

    fn fail(predicate: Predicate, witness: Vec<ElementId>) -> Self {
        PredicateVerdict {
            predicate,
            holds: false,
            witness: Some(witness),
        }
    }
}

fn check_pair(r: &Ring, i: &IdealSet) -> Result<(), ClassifyError> {
    if !Arc::ptr_eq(r, i.ring()) {
        return Err(ClassifyError::RingMismatch);
    }
    if !i.is_proper() {
        return Err(ClassifyError::ImproperIdeal);
    }
    Ok(())
}

/// Weakly J-ideal: `0 ≠ ab ∈ I ∧ a ∉ J(R) ⇒ b ∈ I`.
pub fn is_weakly_j_ideal(r: &Ring, i: &IdealSet) -> Result<PredicateVerdict, ClassifyError> {
    check_pair(r, i)?;
    let jac = r.jacobson_radical();
    for a in r.elements() {
        if jac.contains(a) {
            continue;
        }
        for b in r.elements() {
            let ab = r.mul(a, b);
            if ab != r.zero() && i.contains(ab) && !i.contains(b) {
                debug_assert!(replay_weakly_j(r, i, a, b));
                return Ok(PredicateVerdict::fail(Predicate::WeaklyJ, vec![a, b]));
            }
        }
    }
    Ok(PredicateVerdict::pass(Predicate::WeaklyJ))
}

/// Replays a weakly-J witness against the definition.
pub fn replay_weakly_j(r: &Ring, i: &IdealSet, a: ElementId, b: ElementId) -> bool {
    let ab = r.mul(a, b);
    ab != r.zero() && i.contains(ab) && !r.jacobson_radical().contains(a) && !i.contains(b)
}

/// J-ideal: `ab ∈ I ∧ a ∉ J(R) ⇒ b ∈ I` (no `ab ≠ 0` guard).
pub fn is_j_ideal(r: &Ring, i: &IdealSet) -> Result<PredicateVerdict, ClassifyError> {
    check_pair(r, i)?;
    let jac = r.jacobson_radical();
    for a in r.elements() {
        if jac.contains(a) {
            continue;
        }
        for b in r.elements() {
            if i.contains(r.mul(a, b)) && !i.contains(b) {
                return Ok(PredicateVerdict::fail(Predicate::JIdeal, vec![a, b]));
            }
        }
    }
    Ok(PredicateVerdict::pass(Predicate::JIdeal))
}

/// Quasi J-ideal: `√I` is a J-ideal.
pub fn is_quasi_j_ideal(r: &Ring, i: &IdealSet) -> Result<PredicateVerdict, ClassifyError> {
    check_pair(r, i)?;
    // √I is proper whenever I is: 1^k ∈ I would force 1 ∈ I.
    let rad = ideal::radical(i);
    let inner = is_j_ideal(r, &rad)?;
    Ok(PredicateVerdict {
        predicate: Predicate::QuasiJ,
        holds: inner.holds,
        witness: inner.witness,
    })
}

/// n-ideal: `ab ∈ I ∧ a ∉ N(R) ⇒ b ∈ I`.
pub fn is_n_ideal(r: &Ring, i: &IdealSet) -> Result<PredicateVerdict, ClassifyError> {
    check_pair(r, i)?;
    let nil = r.nilradical();
    for a in r.elements() {
        if nil.contains(a) {
            continue;
        }
        for b in r.elements() {
            if i.contains(r.mul(a, b)) && !i.contains(b) {
                return Ok(PredicateVerdict::fail(Predicate::NIdeal, vec![a, b]));
            }
        }
    }
    Ok(PredicateVerdict::pass(Predicate::NIdeal))
}

/// Prime: `ab ∈ I ⇒ a ∈ I ∨ b ∈ I`.
pub fn is_prime(r: &Ring, i: &IdealSet) -> Result<PredicateVerdict, ClassifyError> {
    check_pair(r, i)?;
    for a in r.elements() {
        if i.contains(a) {
            continue;
        }
        for b in r.elements() {
            if !i.contains(b) && i.contains(r.mul(a, b)) {
                return Ok(PredicateVerdict::fail(Predicate::Prime, vec![a, b]));
            }
        }
    }
    Ok(PredicateVerdict::pass(Predicate::Prime))
}

/// Weakly prime: `0 ≠ ab ∈ I ⇒ a ∈ I ∨ b ∈ I`.
pub fn is_weakly_prime(r: &Ring, i: &IdealSet) -> Result<PredicateVerdict, ClassifyError> {
    check_pair(r, i)?;
    for a in r.elements() {
        if i.contains(a) {
            continue;
        }
        for b in r.elements() {
            let ab = r.mul(a, b);
            if ab != r.zero() && !i.contains(b) && i.contains(ab) {
                return Ok(PredicateVerdict::fail(Predicate::WeaklyPrime, vec![a, b]));
            }
        }
    }
    Ok(PredicateVerdict::pass(Predicate::WeaklyPrime))
}

/// Superfluous: `I + K = R ⇒ K = R`, scanned over the ideal lattice.
/// A failing witness lists the members of the offending `K`.
pub fn is_superfluous(r: &Ring, i: &IdealSet) -> Result<PredicateVerdict, ClassifyError> {
    check_pair(r, i)?;
    let lattice = r.ideal_lattice();
    for k in lattice {
        if k.len() == r.order() {
            continue;
        }
        let k_ideal = IdealSet::new_unchecked(Arc::clone(r), k.clone());
        let s = ideal::sum(i, &k_ideal).expect("same ring");
        if !s.is_proper() {
            return Ok(PredicateVerdict::fail(
                Predicate::Superfluous,
                k.members(),
            ));
        }
    }
    Ok(PredicateVerdict::pass(Predicate::Superfluous))
}

/// Strong zero divisors of `R/I` plus the quotient they live in.
pub struct StrongZeroDivisors {
    pub quotient: QuotientRing,
    /// Cosets, as elements of the quotient ring.
    pub cosets: ElemSet,
}

/// `SZ(R/I)`: cosets `a+I` admitting `b ∉ I` with `ab ∈ I` and `ab ≠ 0`
/// for some representative `a` of the coset. For `I = 0` the set is empty.
pub fn strong_zero_divisors(r: &Ring, i: &IdealSet) -> Result<StrongZeroDivisors, ClassifyError> {
    check_pair(r, i)?;
    let quotient = quotient_ring(r, i)?;
    let mut cosets = ElemSet::empty(quotient.ring.order());
    for a in r.elements() {
        let coset = quotient.projection.apply(a);
        if cosets.contains(coset) {
            continue;
        }
        for b in r.elements() {
            if i.contains(b) {
                continue;
            }
            let ab = r.mul(a, b);
            if ab != r.zero() && i.contains(ab) {
                cosets.insert(coset);
                break;
            }
        }
    }
    Ok(StrongZeroDivisors { quotient, cosets })
}

/// `R/I` is S-presimplifiable: `SZ(R/I) ⊆ J(R/I)`.
pub fn is_s_presimplifiable_quotient(
    r: &Ring,
    i: &IdealSet,
) -> Result<PredicateVerdict, ClassifyError> {
    let sz = strong_zero_divisors(r, i)?;
    let jac_q = sz.quotient.ring.jacobson_radical();
    for c in sz.cosets.iter() {
        if !jac_q.contains(c) {
            return Ok(PredicateVerdict::fail(
                Predicate::SPresimplifiableQuotient,
                vec![c],
            ));
        }
    }
    Ok(PredicateVerdict::pass(Predicate::SPresimplifiableQuotient))
}

/// Weakly J-multiplicatively closed: requires `R∖J(R) ⊆ S` (a checked
/// precondition, not part of the truth value), then
/// `ab ∈ S ∨ ab = 0` for all `a ∈ R∖J(R)`, `b ∈ S`.
pub fn is_weakly_j_mult_closed(r: &Ring, s: &MultSet) -> Result<PredicateVerdict, ClassifyError> {
    if !Arc::ptr_eq(r, s.ring()) {
        return Err(ClassifyError::RingMismatch);
    }
    let jac = r.jacobson_radical();
    let outside: ElemSet = jac.complement();
    if !outside.is_subset(s.members()) {
        return Err(ClassifyError::DefinitionPreconditionViolated);
    }
    for a in outside.iter() {
        for b in s.members().iter() {
            let ab = r.mul(a, b);
            if ab != r.zero() && !s.members().contains(ab) {
                return Ok(PredicateVerdict::fail(
                    Predicate::WeaklyJMultClosed,
                    vec![a, b],
                ));
            }
        }
    }
    Ok(PredicateVerdict::pass(Predicate::WeaklyJMultClosed))
}

/// The full predicate bundle on one `(R, I)` instance.
#[derive(Clone, Debug)]
pub struct IdealReport {
    pub ideal_display: String,
    pub verdicts: Vec<PredicateVerdict>,
}

impl IdealReport {
    pub fn get(&self, p: Predicate) -> &PredicateVerdict {
        self.verdicts
            .iter()
            .find(|v| v.predicate == p)
            .expect("predicate present in bundle")
    }
}

/// Evaluates every ideal-class predicate plus the containment facts
/// `I ⊆ J(R)`, `I ⊆ N(R)`, `I² = 0` and structural facts.
pub fn ideal_report(r: &Ring, i: &IdealSet) -> Result<IdealReport, ClassifyError> {
    check_pair(r, i)?;
    let mut verdicts = vec![
        is_weakly_j_ideal(r, i)?,
        is_j_ideal(r, i)?,
        is_quasi_j_ideal(r, i)?,
        is_n_ideal(r, i)?,
        is_prime(r, i)?,
        is_weakly_prime(r, i)?,
        is_superfluous(r, i)?,
        is_s_presimplifiable_quotient(r, i)?,
    ];
    let contain = |pred, holds: bool, witness: Option<Vec<ElementId>>| PredicateVerdict {
        predicate: pred,
        holds,
        witness,
    };
    let jac = r.jacobson_radical();
    let in_jac = i.members().is_subset(jac);
    verdicts.push(contain(
        Predicate::InJacobson,
        in_jac,
        (!in_jac).then(|| vec![i.members().iter().find(|&e| !jac.contains(e)).unwrap()]),
    ));
    let nil = r.nilradical();
    let in_nil = i.members().is_subset(nil);
    verdicts.push(contain(
        Predicate::InNilradical,
        in_nil,
        (!in_nil).then(|| vec![i.members().iter().find(|&e| !nil.contains(e)).unwrap()]),
    ));
    // I² = {0}; for I = {0} the empty product convention gives {0}.
    let square = ideal::product(i, i).expect("same ring");
    verdicts.push(contain(
        Predicate::SquareZero,
        square.is_zero(),
        (!square.is_zero()).then(|| {
            for x in i.members().iter() {
                for y in i.members().iter() {
                    if r.mul(x, y) != r.zero() {
                        return vec![x, y];
                    }
                }
            }
            unreachable!("nonzero product ideal has a nonzero generator pair")
        }),
    ));
    verdicts.push(contain(Predicate::Maximal, i.is_maximal(), None));
    verdicts.push(contain(Predicate::Zero, i.is_zero(), None));
    Ok(IdealReport {
        ideal_display: i.display_short(),
        verdicts,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::{all_ideals, ideal_generated_by, IdealSet};
    use crate::ring::make_zn;

    fn e(i: usize) -> ElementId {
        ElementId::new(i)
    }

    fn ideal_of(r: &Ring, gens: &[usize]) -> IdealSet {
        let gens: Vec<ElementId> = gens.iter().map(|&g| e(g)).collect();
        ideal_generated_by(r, &gens)
    }

    #[test]
    fn zero_ideal_of_z6_weakly_j_but_not_j() {
        let z6 = make_zn(6).unwrap();
        let zero = IdealSet::zero(&z6);
        assert!(is_weakly_j_ideal(&z6, &zero).unwrap().holds);
        let j = is_j_ideal(&z6, &zero).unwrap();
        assert!(!j.holds);
        assert_eq!(j.witness, Some(vec![e(2), e(3)]));
    }

    #[test]
    fn ideal_16_in_z32() {
        let z32 = make_zn(32).unwrap();
        let i16 = ideal_of(&z32, &[16]);
        assert!(is_weakly_j_ideal(&z32, &i16).unwrap().holds);
        assert!(is_j_ideal(&z32, &i16).unwrap().holds);
        assert!(is_quasi_j_ideal(&z32, &i16).unwrap().holds);
        let wp = is_weakly_prime(&z32, &i16).unwrap();
        assert!(!wp.holds);
        assert_eq!(wp.witness, Some(vec![e(2), e(8)]));
        // Nonzero weakly J makes the quotient S-presimplifiable.
        assert!(is_s_presimplifiable_quotient(&z32, &i16).unwrap().holds);
        // Every proper ideal of the local ring Z32 is a J-ideal.
        for i in all_ideals(&z32) {
            if i.is_proper() {
                assert!(is_j_ideal(&z32, &i).unwrap().holds);
            }
        }
    }

    #[test]
    fn z6_nonzero_ideals_are_not_weakly_j() {
        let z6 = make_zn(6).unwrap();
        let v2 = is_weakly_j_ideal(&z6, &ideal_of(&z6, &[2])).unwrap();
        assert!(!v2.holds);
        assert_eq!(v2.witness, Some(vec![e(2), e(1)]));
        let v3 = is_weakly_j_ideal(&z6, &ideal_of(&z6, &[3])).unwrap();
        assert!(!v3.holds);
        assert!(!is_j_ideal(&z6, &ideal_of(&z6, &[3])).unwrap().holds);
    }

    #[test]
    fn quasi_j_examples() {
        let z6 = make_zn(6).unwrap();
        assert!(!is_quasi_j_ideal(&z6, &IdealSet::zero(&z6)).unwrap().holds);
        // In a quasi-local ring every proper ideal is quasi J.
        let z27 = make_zn(27).unwrap();
        for i in all_ideals(&z27) {
            if i.is_proper() {
                assert!(is_quasi_j_ideal(&z27, &i).unwrap().holds);
            }
        }
    }

    #[test]
    fn prime_and_weakly_prime_examples() {
        let z6 = make_zn(6).unwrap();
        assert!(is_prime(&z6, &ideal_of(&z6, &[2])).unwrap().holds);
        assert!(is_weakly_prime(&z6, &IdealSet::zero(&z6)).unwrap().holds);
        let z4 = make_zn(4).unwrap();
        assert!(!is_prime(&z4, &IdealSet::zero(&z4)).unwrap().holds);
    }

    #[test]
    fn superfluous_examples() {
        let z6 = make_zn(6).unwrap();
        let v = is_superfluous(&z6, &ideal_of(&z6, &[2])).unwrap();
        assert!(!v.holds);
        // Witness is the members of K = <3>.
        assert_eq!(v.witness, Some(vec![e(0), e(3)]));
        assert!(is_superfluous(&z6, &IdealSet::zero(&z6)).unwrap().holds);
        let z32 = make_zn(32).unwrap();
        assert!(is_superfluous(&z32, &ideal_of(&z32, &[16])).unwrap().holds);
    }

    #[test]
    fn strong_zero_divisors_fixture_z8_mod_4() {
        // Brute-force value: cosets of 0 and 2 both admit a representative
        // product that is nonzero yet lands in <4> (4·1 = 4 and 2·2 = 4).
        let z8 = make_zn(8).unwrap();
        let i4 = ideal_of(&z8, &[4]);
        let sz = strong_zero_divisors(&z8, &i4).unwrap();
        assert_eq!(sz.cosets.members(), vec![e(0), e(2)]);
        // They lie in J(Z8/<4>) = <[2]>, so the quotient is S-presimplifiable.
        assert!(is_s_presimplifiable_quotient(&z8, &i4).unwrap().holds);
    }

    #[test]
    fn strong_zero_divisors_empty_for_zero_ideal() {
        let z7 = make_zn(7).unwrap();
        let sz = strong_zero_divisors(&z7, &IdealSet::zero(&z7)).unwrap();
        assert!(sz.cosets.is_empty());
        let z12 = make_zn(12).unwrap();
        let sz = strong_zero_divisors(&z12, &IdealSet::zero(&z12)).unwrap();
        assert!(sz.cosets.is_empty());
    }

    #[test]
    fn weakly_j_mult_closed_cases() {
        let z32 = make_zn(32).unwrap();
        let i16 = ideal_of(&z32, &[16]);
        let s = MultSet::new(
            Arc::clone(&z32),
            i16.members().complement(),
        );
        assert!(is_weakly_j_mult_closed(&z32, &s).unwrap().holds);

        // Whole ring is trivially closed.
        let full = MultSet::new(Arc::clone(&z32), ElemSet::full(32));
        assert!(is_weakly_j_mult_closed(&z32, &full).unwrap().holds);

        // Complement of <2> in Z6 misses 2 ∈ R∖J(R): checked precondition.
        let z6 = make_zn(6).unwrap();
        let s = MultSet::new(
            Arc::clone(&z6),
            ideal_of(&z6, &[2]).members().complement(),
        );
        assert!(matches!(
            is_weakly_j_mult_closed(&z6, &s),
            Err(ClassifyError::DefinitionPreconditionViolated)
        ));
    }

    #[test]
    fn report_bundles_everything() {
        let z32 = make_zn(32).unwrap();
        let rep = ideal_report(&z32, &ideal_of(&z32, &[16])).unwrap();
        assert!(rep.get(Predicate::WeaklyJ).holds);
        assert!(rep.get(Predicate::JIdeal).holds);
        assert!(rep.get(Predicate::QuasiJ).holds);
        assert!(!rep.get(Predicate::WeaklyPrime).holds);
        assert!(rep.get(Predicate::InJacobson).holds);
        assert!(rep.get(Predicate::InNilradical).holds);
        assert!(rep.get(Predicate::SquareZero).holds);

        let z6 = make_zn(6).unwrap();
        let rep = ideal_report(&z6, &IdealSet::zero(&z6)).unwrap();
        assert!(rep.get(Predicate::WeaklyJ).holds);
        assert!(!rep.get(Predicate::JIdeal).holds);
        let rep = ideal_report(&z6, &ideal_of(&z6, &[2])).unwrap();
        assert!(!rep.get(Predicate::WeaklyJ).holds);
        assert!(!rep.get(Predicate::JIdeal).holds);
        assert!(!rep.get(Predicate::QuasiJ).holds);
    }

    #[test]
    fn improper_ideal_is_rejected() {
        let z6 = make_zn(6).unwrap();
        let whole = IdealSet::whole(&z6);
        assert!(matches!(
            is_weakly_j_ideal(&z6, &whole),
            Err(ClassifyError::ImproperIdeal)
        ));
        assert!(matches!(
            ideal_report(&z6, &whole),
            Err(ClassifyError::ImproperIdeal)
        ));
    }

    #[test]
    fn implication_lattice_over_small_corpus() {
        for n in 2..=36usize {
            let r = make_zn(n).unwrap();
            for i in all_ideals(&r) {
                if !i.is_proper() {
                    continue;
                }
                let rep = ideal_report(&r, &i).unwrap();
                let weakly = rep.get(Predicate::WeaklyJ).holds;
                let j = rep.get(Predicate::JIdeal).holds;
                let n_id = rep.get(Predicate::NIdeal).holds;
                if n_id {
                    assert!(j, "n-ideal must be a J-ideal (Z{n}, {})", i.display_short());
                }
                if j {
                    assert!(weakly, "J-ideal must be weakly J (Z{n})");
                }
                if weakly {
                    assert!(rep.get(Predicate::InJacobson).holds, "weakly J ⊆ J(R) (Z{n})");
                }
                // weakly J but not J forces a square-zero ideal inside N(R).
                if weakly && !j {
                    assert!(rep.get(Predicate::SquareZero).holds);
                    assert!(rep.get(Predicate::InNilradical).holds);
                }
                // Reduced ring: nonzero weakly J coincides with J.
                if r.nilradical().len() == 1 && !i.is_zero() && weakly {
                    assert!(j);
                }
                // Semiprimitive ring: only the zero ideal is weakly J.
                if r.is_semiprimitive() && weakly {
                    assert!(i.is_zero());
                }
            }
        }
    }
}
