//! Ideals as membership bitmasks over a ring's element indices, plus the
//! ideal algebra: span, sum, intersection, product, power, colon.

use crate::bitset::BitSet;
use crate::ring::FiniteRing;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum IdealError {
    #[error("operands belong to different rings")]
    RingMismatch,
}

/// An ideal of a specific ring: the member set as a bitmask.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Ideal {
    pub ring_id: u64,
    pub members: BitSet,
}

impl Ideal {
    pub fn contains(&self, elem: usize) -> bool {
        self.members.contains(elem)
    }

    pub fn count(&self) -> usize {
        self.members.count()
    }

    pub fn is_zero(&self) -> bool {
        self.members.count() == 1
    }

    /// Proper means not the whole ring.
    pub fn is_proper(&self, ring: &FiniteRing) -> bool {
        self.members.count() < ring.order()
    }

    pub fn is_subset(&self, other: &Ideal) -> bool {
        self.members.is_subset(&other.members)
    }

    pub fn elements(&self) -> Vec<usize> {
        self.members.iter().collect()
    }
}

fn check_ring(ring: &FiniteRing, ideals: &[&Ideal]) -> Result<(), IdealError> {
    if ideals.iter().any(|i| i.ring_id != ring.id()) {
        return Err(IdealError::RingMismatch);
    }
    Ok(())
}

pub fn zero_ideal(ring: &FiniteRing) -> Ideal {
    Ideal {
        ring_id: ring.id(),
        members: BitSet::singleton(ring.order(), ring.zero()),
    }
}

pub fn unit_ideal(ring: &FiniteRing) -> Ideal {
    Ideal {
        ring_id: ring.id(),
        members: BitSet::full(ring.order()),
    }
}

/// Closes a subset of the additive group under addition. In a finite group
/// closure under the operation already yields a subgroup, so negation needs
/// no separate pass.
pub fn additive_closure(ring: &FiniteRing, seed: &BitSet) -> BitSet {
    let mut set = seed.clone();
    set.insert(ring.zero());
    let mut work: Vec<usize> = set.iter().collect();
    while let Some(x) = work.pop() {
        for y in set.iter().collect::<Vec<_>>() {
            let s = ring.add(x, y);
            if !set.contains(s) {
                set.insert(s);
                work.push(s);
            }
        }
    }
    set
}

/// The principal ideal Ra = {r*a : r in R}. Already additively closed.
pub fn principal_ideal(ring: &FiniteRing, a: usize) -> Ideal {
    let mut members = BitSet::empty(ring.order());
    for r in 0..ring.order() {
        members.insert(ring.mul(r, a));
    }
    Ideal {
        ring_id: ring.id(),
        members,
    }
}

/// Least ideal containing the given generators.
pub fn ideal_span(ring: &FiniteRing, gens: &[usize]) -> Ideal {
    let mut seed = BitSet::singleton(ring.order(), ring.zero());
    for &g in gens {
        seed.union_with(&principal_ideal(ring, g).members);
    }
    // The union of multiple-sets is closed under ring multiplication, and
    // additive closure preserves that.
    Ideal {
        ring_id: ring.id(),
        members: additive_closure(ring, &seed),
    }
}

pub fn ideal_sum(ring: &FiniteRing, a: &Ideal, b: &Ideal) -> Result<Ideal, IdealError> {
    check_ring(ring, &[a, b])?;
    let seed = a.members.union(&b.members);
    Ok(Ideal {
        ring_id: ring.id(),
        members: additive_closure(ring, &seed),
    })
}

pub fn ideal_intersect(ring: &FiniteRing, a: &Ideal, b: &Ideal) -> Result<Ideal, IdealError> {
    check_ring(ring, &[a, b])?;
    Ok(Ideal {
        ring_id: ring.id(),
        members: a.members.intersection(&b.members),
    })
}

pub fn ideal_product(ring: &FiniteRing, a: &Ideal, b: &Ideal) -> Result<Ideal, IdealError> {
    check_ring(ring, &[a, b])?;
    let mut seed = BitSet::singleton(ring.order(), ring.zero());
    for x in a.members.iter() {
        for y in b.members.iter() {
            seed.insert(ring.mul(x, y));
        }
    }
    Ok(Ideal {
        ring_id: ring.id(),
        members: additive_closure(ring, &seed),
    })
}

/// I^n, with I^0 = R by convention.
pub fn ideal_power(ring: &FiniteRing, i: &Ideal, n: u32) -> Result<Ideal, IdealError> {
    check_ring(ring, &[i])?;
    if n == 0 {
        return Ok(unit_ideal(ring));
    }
    let mut acc = i.clone();
    for _ in 1..n {
        acc = ideal_product(ring, &acc, i)?;
    }
    Ok(acc)
}

/// (I : J) = {r : r*J is contained in I}.
pub fn ideal_colon(ring: &FiniteRing, i: &Ideal, j: &Ideal) -> Result<Ideal, IdealError> {
    check_ring(ring, &[i, j])?;
    let mut members = BitSet::empty(ring.order());
    'outer: for r in 0..ring.order() {
        for y in j.members.iter() {
            if !i.members.contains(ring.mul(r, y)) {
                continue 'outer;
            }
        }
        members.insert(r);
    }
    Ok(Ideal {
        ring_id: ring.id(),
        members,
    })
}

/// Ann(I) = (0 : I).
pub fn annihilator(ring: &FiniteRing, i: &Ideal) -> Result<Ideal, IdealError> {
    ideal_colon(ring, &zero_ideal(ring), i)
}

/// Binary lattice operation selector mirroring the public contract.
pub enum Combine<'a> {
    Sum(&'a Ideal),
    Intersect(&'a Ideal),
    Product(&'a Ideal),
    Power(u32),
}

pub fn combine(ring: &FiniteRing, i: &Ideal, op: Combine<'_>) -> Result<Ideal, IdealError> {
    match op {
        Combine::Sum(j) => ideal_sum(ring, i, j),
        Combine::Intersect(j) => ideal_intersect(ring, i, j),
        Combine::Product(j) => ideal_product(ring, i, j),
        Combine::Power(n) => ideal_power(ring, i, n),
    }
}

/// Full membership check: nonempty, additively closed, and absorbs
/// multiplication by every ring element.
pub fn is_ideal_mask(ring: &FiniteRing, mask: &BitSet) -> bool {
    if !mask.contains(ring.zero()) {
        return false;
    }
    let members: Vec<usize> = mask.iter().collect();
    for &a in &members {
        for &b in &members {
            if !mask.contains(ring.add(a, b)) {
                return false;
            }
        }
        for s in 0..ring.order() {
            if !mask.contains(ring.mul(s, a)) {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::make_zmod;

    fn members(i: &Ideal) -> Vec<usize> {
        i.elements()
    }

    #[test]
    fn principal_examples() {
        let z12 = make_zmod(12).unwrap();
        assert_eq!(members(&principal_ideal(&z12, 8)), vec![0, 4, 8]);
        assert!(principal_ideal(&z12, 0).is_zero());
        assert_eq!(principal_ideal(&z12, 1).count(), 12);
    }

    #[test]
    fn span_examples() {
        let z12 = make_zmod(12).unwrap();
        assert_eq!(
            members(&ideal_span(&z12, &[4, 6])),
            vec![0, 2, 4, 6, 8, 10]
        );
        assert!(ideal_span(&z12, &[]).is_zero());
    }

    #[test]
    fn combine_examples() {
        let z12 = make_zmod(12).unwrap();
        let i4 = principal_ideal(&z12, 4);
        let i6 = principal_ideal(&z12, 6);
        let sum = ideal_sum(&z12, &i4, &i6).unwrap();
        assert_eq!(sum, principal_ideal(&z12, 2));
        let i2 = principal_ideal(&z12, 2);
        let i3 = principal_ideal(&z12, 3);
        let meet = ideal_intersect(&z12, &i2, &i3).unwrap();
        assert_eq!(meet, principal_ideal(&z12, 6));

        let z6 = make_zmod(6).unwrap();
        let p = ideal_product(
            &z6,
            &principal_ideal(&z6, 2),
            &principal_ideal(&z6, 3),
        )
        .unwrap();
        assert!(p.is_zero());

        let z8 = make_zmod(8).unwrap();
        let sq = ideal_power(&z8, &principal_ideal(&z8, 2), 2).unwrap();
        assert_eq!(sq, principal_ideal(&z8, 4));
        let zeroth = ideal_power(&z8, &principal_ideal(&z8, 2), 0).unwrap();
        assert_eq!(zeroth, unit_ideal(&z8));
    }

    #[test]
    fn colon_examples() {
        let z12 = make_zmod(12).unwrap();
        let i4 = principal_ideal(&z12, 4);
        let i2 = principal_ideal(&z12, 2);
        assert_eq!(ideal_colon(&z12, &i4, &i2).unwrap(), i2);
        // (I : R) = I.
        assert_eq!(ideal_colon(&z12, &i4, &unit_ideal(&z12)).unwrap(), i4);

        let z6 = make_zmod(6).unwrap();
        let ann = annihilator(&z6, &principal_ideal(&z6, 2)).unwrap();
        assert_eq!(ann, principal_ideal(&z6, 3));
    }

    #[test]
    fn colon_superset_and_unit_cases() {
        let z12 = make_zmod(12).unwrap();
        let i4 = principal_ideal(&z12, 4);
        let i2 = principal_ideal(&z12, 2);
        let c = ideal_colon(&z12, &i2, &i4).unwrap();
        assert!(i2.is_subset(&c));
        // (I : J) = R exactly when J is inside I.
        assert_eq!(c, unit_ideal(&z12));
    }

    #[test]
    fn mismatch_rejected() {
        let a = make_zmod(4).unwrap();
        let b = make_zmod(4).unwrap();
        let ia = principal_ideal(&a, 2);
        let ib = principal_ideal(&b, 2);
        assert_eq!(
            ideal_sum(&a, &ia, &ib).unwrap_err(),
            IdealError::RingMismatch
        );
    }

    #[test]
    fn mask_validation() {
        let z6 = make_zmod(6).unwrap();
        assert!(is_ideal_mask(&z6, &principal_ideal(&z6, 2).members));
        let mut bad = BitSet::empty(6);
        bad.insert(0);
        bad.insert(1);
        assert!(!is_ideal_mask(&z6, &bad));
    }
}
