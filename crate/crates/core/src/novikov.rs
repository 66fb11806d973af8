//! Exact arithmetic for Novikov-type coefficient rings.
//!
//! A completed ring with "finitely many terms below any energy bound"
//! is represented through its truncations: every series carries a
//! mandatory cutoff and stores only terms of energy strictly below it.
//! Exponents are exact rationals, so equality of energies is decidable.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::field::{rat_gcd, Rat, Scalar};
use crate::groupcoh::FiniteGroup;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum NovikovError {
    #[error("series cutoffs differ")]
    CutoffMismatch,
    #[error("coset tags present but no quotient-group law supplied")]
    MissingTagLaw,
}

/// A truncated formal sum `Σ aᵢ T^{λᵢ}` with strictly increasing exact
/// rational exponents, all below the cutoff. Zero coefficients are
/// never stored.
#[derive(Debug, Clone, PartialEq)]
pub struct NovikovSeries<F: Scalar = Rat> {
    terms: BTreeMap<Rat, F>,
    cutoff: Rat,
}

impl<F: Scalar> NovikovSeries<F> {
    pub fn zero(cutoff: Rat) -> Self {
        NovikovSeries {
            terms: BTreeMap::new(),
            cutoff,
        }
    }

    pub fn one(cutoff: Rat) -> Self {
        Self::from_terms(vec![(Rat::zero(), F::one())], cutoff)
    }

    /// Build from (exponent, coefficient) pairs; merges duplicates,
    /// drops zeros and terms at or above the cutoff.
    pub fn from_terms(terms: Vec<(Rat, F)>, cutoff: Rat) -> Self {
        let mut map: BTreeMap<Rat, F> = BTreeMap::new();
        for (e, c) in terms {
            if e >= cutoff || c.is_zero() {
                continue;
            }
            let entry = map.entry(e).or_insert_with(F::zero);
            *entry = entry.clone() + c;
        }
        map.retain(|_, c| !c.is_zero());
        NovikovSeries { terms: map, cutoff }
    }

    pub fn monomial(exponent: Rat, coefficient: F, cutoff: Rat) -> Self {
        Self::from_terms(vec![(exponent, coefficient)], cutoff)
    }

    pub fn cutoff(&self) -> &Rat {
        &self.cutoff
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Rat, &F)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, exponent: &Rat) -> F {
        self.terms.get(exponent).cloned().unwrap_or_else(F::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Re-truncate to a smaller (or equal) cutoff.
    pub fn truncate(&self, cutoff: Rat) -> Self {
        let terms = self
            .terms
            .iter()
            .filter(|(e, _)| **e < cutoff)
            .map(|(e, c)| (e.clone(), c.clone()))
            .collect();
        NovikovSeries { terms, cutoff }
    }

    pub fn add(&self, other: &Self) -> Result<Self, NovikovError> {
        if self.cutoff != other.cutoff {
            return Err(NovikovError::CutoffMismatch);
        }
        let mut terms = self.terms.clone();
        for (e, c) in &other.terms {
            let entry = terms.entry(e.clone()).or_insert_with(F::zero);
            *entry = entry.clone() + c.clone();
        }
        terms.retain(|_, c| !c.is_zero());
        Ok(NovikovSeries {
            terms,
            cutoff: self.cutoff.clone(),
        })
    }

    pub fn neg(&self) -> Self {
        NovikovSeries {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), -c.clone()))
                .collect(),
            cutoff: self.cutoff.clone(),
        }
    }

    /// Convolution of exponent sums, truncated at the cutoff.
    pub fn mul(&self, other: &Self) -> Result<Self, NovikovError> {
        if self.cutoff != other.cutoff {
            return Err(NovikovError::CutoffMismatch);
        }
        let mut terms: BTreeMap<Rat, F> = BTreeMap::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e = e1 + e2;
                if e >= self.cutoff {
                    break; // other.terms ascend, later ones only larger
                }
                let entry = terms.entry(e).or_insert_with(F::zero);
                *entry = entry.clone() + c1.clone() * c2.clone();
            }
        }
        terms.retain(|_, c| !c.is_zero());
        Ok(NovikovSeries {
            terms,
            cutoff: self.cutoff.clone(),
        })
    }

    pub fn scale(&self, s: &F) -> Self {
        let mut terms: BTreeMap<Rat, F> = BTreeMap::new();
        for (e, c) in &self.terms {
            let v = c.clone() * s.clone();
            if !v.is_zero() {
                terms.insert(e.clone(), v);
            }
        }
        NovikovSeries {
            terms,
            cutoff: self.cutoff.clone(),
        }
    }
}

/// The free abelian weight datum of a group-ring generator: energy,
/// Maslov index, spin class, and an optional coset tag in `G/G_α`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WeightedGroupElement {
    pub energy: Rat,
    pub maslov: i64,
    pub sp: u8,
    pub label: Option<usize>,
}

impl WeightedGroupElement {
    pub fn new(energy: Rat, maslov: i64, sp: u8, label: Option<usize>) -> Self {
        WeightedGroupElement {
            energy,
            maslov,
            sp: sp & 1,
            label,
        }
    }

    /// Weights add: energies and Maslov indices in `Q × Z`, sp mod 2,
    /// tags via the supplied quotient-group law.
    fn combine(&self, other: &Self, tag_law: Option<&FiniteGroup>) -> Result<Self, NovikovError> {
        let label = match (self.label, other.label) {
            (None, None) => None,
            (Some(a), Some(b)) => match tag_law {
                Some(q) => Some(q.mul(a, b)),
                None => return Err(NovikovError::MissingTagLaw),
            },
            _ => return Err(NovikovError::MissingTagLaw),
        };
        Ok(WeightedGroupElement {
            energy: &self.energy + &other.energy,
            maslov: self.maslov + other.maslov,
            sp: self.sp ^ other.sp,
            label,
        })
    }
}

/// An element of a completed weighted group ring: finitely many terms,
/// all of energy below the cutoff.
#[derive(Debug, Clone, PartialEq)]
pub struct GroupRingElement {
    terms: BTreeMap<WeightedGroupElement, Rat>,
    cutoff: Rat,
}

impl GroupRingElement {
    pub fn zero(cutoff: Rat) -> Self {
        GroupRingElement {
            terms: BTreeMap::new(),
            cutoff,
        }
    }

    pub fn from_terms(terms: Vec<(WeightedGroupElement, Rat)>, cutoff: Rat) -> Self {
        let mut map: BTreeMap<WeightedGroupElement, Rat> = BTreeMap::new();
        for (w, a) in terms {
            if w.energy >= cutoff || a.is_zero() {
                continue;
            }
            let entry = map.entry(w).or_insert_with(Rat::zero);
            *entry = entry.clone() + a;
        }
        map.retain(|_, a| !a.is_zero());
        GroupRingElement { terms: map, cutoff }
    }

    pub fn cutoff(&self) -> &Rat {
        &self.cutoff
    }

    pub fn terms(&self) -> impl Iterator<Item = (&WeightedGroupElement, &Rat)> {
        self.terms.iter()
    }

    /// Re-truncate to a smaller (or equal) cutoff.
    pub fn truncate(&self, cutoff: Rat) -> Self {
        let terms = self
            .terms
            .iter()
            .filter(|(w, _)| w.energy < cutoff)
            .map(|(w, a)| (w.clone(), a.clone()))
            .collect();
        GroupRingElement { terms, cutoff }
    }

    pub fn add(&self, other: &Self) -> Result<Self, NovikovError> {
        if self.cutoff != other.cutoff {
            return Err(NovikovError::CutoffMismatch);
        }
        let mut terms = self.terms.clone();
        for (w, a) in &other.terms {
            let entry = terms.entry(w.clone()).or_insert_with(Rat::zero);
            *entry = entry.clone() + a.clone();
        }
        terms.retain(|_, a| !a.is_zero());
        Ok(GroupRingElement {
            terms,
            cutoff: self.cutoff.clone(),
        })
    }

    /// Product without coset tags.
    pub fn mul(&self, other: &Self) -> Result<Self, NovikovError> {
        self.mul_impl(other, None)
    }

    /// Product of tagged elements; `quotient` supplies the `G/G_α`
    /// group law for the tags.
    pub fn mul_in(&self, other: &Self, quotient: &FiniteGroup) -> Result<Self, NovikovError> {
        self.mul_impl(other, Some(quotient))
    }

    fn mul_impl(
        &self,
        other: &Self,
        tag_law: Option<&FiniteGroup>,
    ) -> Result<Self, NovikovError> {
        if self.cutoff != other.cutoff {
            return Err(NovikovError::CutoffMismatch);
        }
        let mut terms: BTreeMap<WeightedGroupElement, Rat> = BTreeMap::new();
        for (w1, a1) in &self.terms {
            for (w2, a2) in &other.terms {
                let w = w1.combine(w2, tag_law)?;
                if w.energy >= self.cutoff {
                    continue;
                }
                let entry = terms.entry(w).or_insert_with(Rat::zero);
                *entry = entry.clone() + a1 * a2;
            }
        }
        terms.retain(|_, a| !a.is_zero());
        Ok(GroupRingElement {
            terms,
            cutoff: self.cutoff.clone(),
        })
    }
}

/// Push-forward to the universal Novikov ring: each term
/// `(E, μ, sp, tag) ↦ (-1)^{sp} · a · T^E`, with equal energies merged.
/// Terms that are equivalent except for their sp value cancel in pairs.
pub fn push_to_universal(x: &GroupRingElement) -> NovikovSeries<Rat> {
    let terms = x
        .terms
        .iter()
        .map(|(w, a)| {
            let signed = if w.sp == 1 { -a.clone() } else { a.clone() };
            (w.energy.clone(), signed)
        })
        .collect();
    NovikovSeries::from_terms(terms, x.cutoff.clone())
}

/// Push-forward split by Maslov grading: one series per Maslov index.
pub fn push_by_maslov(x: &GroupRingElement) -> BTreeMap<i64, NovikovSeries<Rat>> {
    let mut groups: BTreeMap<i64, Vec<(Rat, Rat)>> = BTreeMap::new();
    for (w, a) in &x.terms {
        let signed = if w.sp == 1 { -a.clone() } else { a.clone() };
        groups
            .entry(w.maslov)
            .or_default()
            .push((w.energy.clone(), signed));
    }
    groups
        .into_iter()
        .map(|(k, terms)| (k, NovikovSeries::from_terms(terms, x.cutoff.clone())))
        .filter(|(_, s)| !s.is_zero())
        .collect()
}

/// The subgroup `gZ ⊆ Q` generated by a finite set of rational weights;
/// `g = 0` for the empty set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PeriodLattice {
    generator: Rat,
}

impl PeriodLattice {
    pub fn from_weights<'a>(weights: impl IntoIterator<Item = &'a Rat>) -> Self {
        let mut generator = Rat::zero();
        for w in weights {
            generator = rat_gcd(&generator, w);
        }
        PeriodLattice { generator }
    }

    pub fn generator(&self) -> &Rat {
        &self.generator
    }

    /// Is `v` an integer multiple of the generator?
    pub fn contains(&self, v: &Rat) -> bool {
        if self.generator.is_zero() {
            return v.is_zero();
        }
        let q = v / &self.generator;
        q.denom().is_one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::rat;
    use proptest::prelude::*;

    fn series(terms: Vec<(Rat, Rat)>, cutoff: Rat) -> NovikovSeries<Rat> {
        NovikovSeries::from_terms(terms, cutoff)
    }

    #[test]
    fn add_examples() {
        let cutoff = rat(3, 1);
        let a = series(vec![(rat(0, 1), rat(1, 1)), (rat(1, 1), rat(1, 1))], cutoff.clone());
        let b = series(vec![(rat(0, 1), rat(-1, 1)), (rat(1, 1), rat(1, 1))], cutoff.clone());
        let sum = a.add(&b).unwrap();
        assert_eq!(sum, series(vec![(rat(1, 1), rat(2, 1))], cutoff.clone()));
        // identity
        let zero = NovikovSeries::zero(cutoff.clone());
        assert_eq!(a.add(&zero).unwrap(), a);
        // T^{1/3} + T^{1/3} = 2 T^{1/3}
        let third = series(vec![(rat(1, 3), rat(1, 1))], rat(1, 1));
        assert_eq!(
            third.add(&third).unwrap(),
            series(vec![(rat(1, 3), rat(2, 1))], rat(1, 1))
        );
        // mismatched cutoffs
        assert_eq!(
            a.add(&NovikovSeries::zero(rat(5, 1))),
            Err(NovikovError::CutoffMismatch)
        );
    }

    #[test]
    fn mul_examples() {
        let cutoff = rat(3, 1);
        let a = series(vec![(rat(0, 1), rat(1, 1)), (rat(1, 1), rat(1, 1))], cutoff.clone());
        let b = series(vec![(rat(0, 1), rat(1, 1)), (rat(1, 1), rat(-1, 1))], cutoff.clone());
        // (1+T)(1-T) = 1 - T²
        assert_eq!(
            a.mul(&b).unwrap(),
            series(
                vec![(rat(0, 1), rat(1, 1)), (rat(2, 1), rat(-1, 1))],
                cutoff.clone()
            )
        );
        // exponent overflow: 1/2 + 2/3 = 7/6 ≥ 1
        let x = series(vec![(rat(1, 2), rat(1, 1))], rat(1, 1));
        let y = series(vec![(rat(2, 3), rat(1, 1))], rat(1, 1));
        assert!(x.mul(&y).unwrap().is_zero());
        // multiplicative identity
        let one = NovikovSeries::one(cutoff.clone());
        assert_eq!(one.mul(&a).unwrap(), a);
    }

    #[test]
    fn push_examples() {
        let cutoff = rat(10, 1);
        let w = |sp: u8| WeightedGroupElement::new(rat(1, 1), 0, sp, None);
        let x = GroupRingElement::from_terms(vec![(w(0), rat(1, 1))], cutoff.clone());
        assert_eq!(
            push_to_universal(&x),
            series(vec![(rat(1, 1), rat(1, 1))], cutoff.clone())
        );
        let y = GroupRingElement::from_terms(vec![(w(1), rat(1, 1))], cutoff.clone());
        assert_eq!(
            push_to_universal(&y),
            series(vec![(rat(1, 1), rat(-1, 1))], cutoff.clone())
        );
        // Γ-equivalent but not spin-Γ-equivalent terms cancel
        let both = x.add(&y).unwrap();
        assert!(push_to_universal(&both).is_zero());
    }

    #[test]
    fn push_respects_maslov_grading() {
        let cutoff = rat(10, 1);
        let x = GroupRingElement::from_terms(
            vec![
                (WeightedGroupElement::new(rat(1, 2), 0, 0, None), rat(1, 1)),
                (WeightedGroupElement::new(rat(1, 2), 2, 1, None), rat(3, 1)),
            ],
            cutoff.clone(),
        );
        let graded = push_by_maslov(&x);
        assert_eq!(graded.len(), 2);
        assert_eq!(
            graded[&0],
            series(vec![(rat(1, 2), rat(1, 1))], cutoff.clone())
        );
        assert_eq!(
            graded[&2],
            series(vec![(rat(1, 2), rat(-3, 1))], cutoff.clone())
        );
    }

    #[test]
    fn period_lattice_examples() {
        let empty = PeriodLattice::from_weights([]);
        assert_eq!(empty.generator(), &rat(0, 1));
        assert!(empty.contains(&rat(0, 1)));
        assert!(!empty.contains(&rat(1, 2)));

        let l = PeriodLattice::from_weights(&[rat(2, 3), rat(1, 2)]);
        assert_eq!(l.generator(), &rat(1, 6));
        assert!(l.contains(&rat(1, 2)));
        assert!(!l.contains(&rat(1, 4)));

        let unit = PeriodLattice::from_weights(&[rat(1, 1)]);
        assert_eq!(unit.generator(), &rat(1, 1));
    }

    #[test]
    fn tagged_multiplication_needs_a_law() {
        let cutoff = rat(10, 1);
        let quotient = FiniteGroup::cyclic(3);
        let t = |tag: usize| {
            GroupRingElement::from_terms(
                vec![(
                    WeightedGroupElement::new(rat(1, 1), 0, 0, Some(tag)),
                    rat(1, 1),
                )],
                cutoff.clone(),
            )
        };
        assert_eq!(t(1).mul(&t(2)), Err(NovikovError::MissingTagLaw));
        let prod = t(1).mul_in(&t(2), &quotient).unwrap();
        let (w, _) = prod.terms().next().unwrap();
        assert_eq!(w.label, Some(0));
        assert_eq!(w.energy, rat(2, 1));
    }

    fn arb_rat() -> impl Strategy<Value = Rat> {
        (-6i64..=6, 1i64..=4).prop_map(|(n, d)| rat(n, d))
    }

    fn arb_series(cutoff: i64) -> impl Strategy<Value = NovikovSeries<Rat>> {
        prop::collection::vec(((0i64..=5, 1i64..=3), arb_rat()), 0..5).prop_map(move |terms| {
            NovikovSeries::from_terms(
                terms
                    .into_iter()
                    .map(|((n, d), c)| (rat(n, d), c))
                    .collect(),
                rat(cutoff, 1),
            )
        })
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_series(4), b in arb_series(4), c in arb_series(4)) {
            // commutativity
            prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
            prop_assert_eq!(a.add(&b).unwrap(), b.add(&a).unwrap());
            // associativity
            prop_assert_eq!(
                a.mul(&b).unwrap().mul(&c).unwrap(),
                a.mul(&b.mul(&c).unwrap()).unwrap()
            );
            // distributivity
            prop_assert_eq!(
                a.mul(&b.add(&c).unwrap()).unwrap(),
                a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap()
            );
        }

        #[test]
        fn truncation_coherence(a in arb_series(8), b in arb_series(8)) {
            // truncate-then-multiply equals multiply-then-truncate
            let small = rat(4, 1);
            let lhs = a.truncate(small.clone()).mul(&b.truncate(small.clone())).unwrap();
            let rhs = a.mul(&b).unwrap().truncate(small);
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn push_is_a_ring_homomorphism(
            t1 in prop::collection::vec(((0i64..=3, 1i64..=2), 0i64..3, 0u8..2, arb_rat()), 0..4),
            t2 in prop::collection::vec(((0i64..=3, 1i64..=2), 0i64..3, 0u8..2, arb_rat()), 0..4),
        ) {
            let cutoff = rat(5, 1);
            let build = |ts: Vec<((i64, i64), i64, u8, Rat)>| {
                GroupRingElement::from_terms(
                    ts.into_iter()
                        .map(|((n, d), m, sp, a)| {
                            (WeightedGroupElement::new(rat(n, d), m, sp, None), a)
                        })
                        .collect(),
                    cutoff.clone(),
                )
            };
            let x = build(t1);
            let y = build(t2);
            // additive
            prop_assert_eq!(
                push_to_universal(&x.add(&y).unwrap()),
                push_to_universal(&x).add(&push_to_universal(&y)).unwrap()
            );
            // multiplicative: the sp signs multiply because sp adds mod 2
            prop_assert_eq!(
                push_to_universal(&x.mul(&y).unwrap()),
                push_to_universal(&x).mul(&push_to_universal(&y)).unwrap()
            );
        }

        #[test]
        fn lattice_generator_stable(ws in prop::collection::vec((0i64..=8, 1i64..=6), 0..6)) {
            let weights: Vec<Rat> = ws.iter().map(|&(n, d)| rat(n, d)).collect();
            let l = PeriodLattice::from_weights(&weights);
            // order-insensitive
            let mut rev = weights.clone();
            rev.reverse();
            let reversed = PeriodLattice::from_weights(&rev);
            prop_assert_eq!(reversed.generator(), l.generator());
            // adding generator multiples changes nothing
            let mut extended = weights.clone();
            extended.push(l.generator() * rat(3, 1));
            let widened = PeriodLattice::from_weights(&extended);
            prop_assert_eq!(widened.generator(), l.generator());
            // every weight is a lattice member
            for w in &weights {
                prop_assert!(l.contains(w));
            }
        }
    }
}
