//! Quotient rings with their canonical surjections, ideal transport along
//! those maps, and localization at a maximal ideal via the saturation
//! kernel.

use crate::bitset::BitSet;
use crate::ideal::{is_ideal_mask, Ideal, IdealError};
use crate::lattice::{ideal_label, IdealLattice};
use crate::ring::FiniteRing;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum QuotientError {
    #[error("the given member set is not an ideal")]
    NotAnIdeal,
    #[error("ideal does not belong to this ring")]
    RingMismatch,
    #[error("ideal is not maximal")]
    NotMaximal,
}

/// A surjective ring homomorphism; only quotient maps are constructed.
#[derive(Debug, Clone)]
pub struct RingHom {
    pub source: FiniteRing,
    pub target: FiniteRing,
    /// Source element index to target element index.
    pub map: Vec<usize>,
    pub kernel: Ideal,
}

impl RingHom {
    pub fn apply(&self, e: usize) -> usize {
        self.map[e]
    }

    /// Full check that the stored map is a unital ring homomorphism with
    /// the stored kernel.
    pub fn verify(&self) -> bool {
        let s = &self.source;
        let t = &self.target;
        if self.map[s.zero()] != t.zero() || self.map[s.one()] != t.one() {
            return false;
        }
        for a in 0..s.order() {
            for b in 0..s.order() {
                if self.map[s.add(a, b)] != t.add(self.map[a], self.map[b]) {
                    return false;
                }
                if self.map[s.mul(a, b)] != t.mul(self.map[a], self.map[b]) {
                    return false;
                }
            }
        }
        (0..s.order()).all(|e| self.kernel.contains(e) == (self.map[e] == t.zero()))
    }
}

/// R/J with cosets ordered by least representative index; the returned map
/// is the canonical surjection.
pub fn make_quotient(ring: &FiniteRing, j: &Ideal) -> Result<(FiniteRing, RingHom), QuotientError> {
    if j.ring_id != ring.id() {
        return Err(QuotientError::RingMismatch);
    }
    if !is_ideal_mask(ring, &j.members) {
        return Err(QuotientError::NotAnIdeal);
    }
    let m = ring.order();
    // Least member of each coset e + J.
    let mut coset_rep = vec![usize::MAX; m];
    for e in 0..m {
        let mut rep = usize::MAX;
        for k in j.members.iter() {
            rep = rep.min(ring.add(e, k));
        }
        coset_rep[e] = rep;
    }
    let mut reps: Vec<usize> = (0..m).filter(|&e| coset_rep[e] == e).collect();
    reps.sort_unstable();
    let mut target_index = vec![usize::MAX; m];
    for (qi, &rep) in reps.iter().enumerate() {
        target_index[rep] = qi;
    }
    let q = reps.len();
    let mut add = Vec::with_capacity(q * q);
    let mut mul = Vec::with_capacity(q * q);
    for &a in &reps {
        for &b in &reps {
            add.push(target_index[coset_rep[ring.add(a, b)]] as u32);
            mul.push(target_index[coset_rep[ring.mul(a, b)]] as u32);
        }
    }
    let names = reps.iter().map(|&r| ring.name(r).to_string()).collect();
    let zero = target_index[coset_rep[ring.zero()]];
    let one = target_index[coset_rep[ring.one()]];
    let provenance = format!("{}/{}", ring.provenance(), ideal_label(ring, &j.members));
    let target = FiniteRing::from_parts(q, add, mul, zero, one, names, provenance)
        .expect("quotient construction produced malformed tables");
    let map: Vec<usize> = (0..m).map(|e| target_index[coset_rep[e]]).collect();
    let hom = RingHom {
        source: ring.clone(),
        target: target.clone(),
        map,
        kernel: j.clone(),
    };
    Ok((target, hom))
}

/// Elementwise image of an ideal; an ideal of the target because the map is
/// surjective.
pub fn hom_image(hom: &RingHom, i: &Ideal) -> Result<Ideal, IdealError> {
    if i.ring_id != hom.source.id() {
        return Err(IdealError::RingMismatch);
    }
    let mut members = BitSet::empty(hom.target.order());
    for e in i.members.iter() {
        members.insert(hom.map[e]);
    }
    Ok(Ideal {
        ring_id: hom.target.id(),
        members,
    })
}

pub fn hom_preimage(hom: &RingHom, j: &Ideal) -> Result<Ideal, IdealError> {
    if j.ring_id != hom.target.id() {
        return Err(IdealError::RingMismatch);
    }
    let mut members = BitSet::empty(hom.source.order());
    for e in 0..hom.source.order() {
        if j.members.contains(hom.map[e]) {
            members.insert(e);
        }
    }
    Ok(Ideal {
        ring_id: hom.source.id(),
        members,
    })
}

/// Nonunits closed under addition: the defining property of a local ring,
/// checked directly on the tables.
fn is_local_ring(ring: &FiniteRing) -> bool {
    let nonunits: Vec<usize> = (0..ring.order()).filter(|&e| !ring.is_unit(e)).collect();
    for &a in &nonunits {
        for &b in &nonunits {
            if ring.is_unit(ring.add(a, b)) {
                return false;
            }
        }
    }
    true
}

/// Localization at a maximal ideal, realized as the quotient by the
/// saturation kernel {r : s*r = 0 for some s outside M}. On a finite ring
/// this agrees with the fraction construction.
pub fn localize_at_maximal(
    lat: &IdealLattice,
    m_idx: usize,
) -> Result<(FiniteRing, RingHom), QuotientError> {
    if !lat.classification(m_idx).is_maximal {
        return Err(QuotientError::NotMaximal);
    }
    let ring = lat.ring();
    let m_mask = &lat.ideal(m_idx).members;
    let outside: Vec<usize> = (0..ring.order()).filter(|&s| !m_mask.contains(s)).collect();
    let mut kernel = BitSet::empty(ring.order());
    for r in 0..ring.order() {
        if outside.iter().any(|&s| ring.mul(s, r) == ring.zero()) {
            kernel.insert(r);
        }
    }
    debug_assert!(kernel.is_subset(m_mask), "saturation kernel escaped M");
    let k = Ideal {
        ring_id: ring.id(),
        members: kernel,
    };
    let base_prov = ring.provenance().to_string();
    let (target, mut hom) = make_quotient(ring, &k)?;
    assert!(
        is_local_ring(&target),
        "localization postcondition failed: quotient by the saturation kernel is not local"
    );
    // Relabel: the construction is a localization, not a plain quotient.
    let prov = format!("{}_{}", base_prov, ideal_label(ring, m_mask));
    let relabeled = rename(&target, prov);
    hom.target = relabeled.clone();
    hom.kernel = k;
    Ok((relabeled, hom))
}

/// Same tables under a new provenance string.
fn rename(ring: &FiniteRing, provenance: String) -> FiniteRing {
    let m = ring.order();
    let mut add = Vec::with_capacity(m * m);
    let mut mul = Vec::with_capacity(m * m);
    for a in 0..m {
        for b in 0..m {
            add.push(ring.add(a, b) as u32);
            mul.push(ring.mul(a, b) as u32);
        }
    }
    FiniteRing::from_parts(
        m,
        add,
        mul,
        ring.zero(),
        ring.one(),
        ring.names().to_vec(),
        provenance,
    )
    .expect("renaming preserved tables")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::{principal_ideal, unit_ideal, zero_ideal};
    use crate::lattice::enumerate_ideals;
    use crate::ring::{make_zmod, RingError};

    #[test]
    fn quotient_z12_by_4_is_z4() {
        let z12 = make_zmod(12).unwrap();
        let (q, hom) = make_quotient(&z12, &principal_ideal(&z12, 4)).unwrap();
        assert_eq!(q.order(), 4);
        assert_eq!(q.table_digest(), make_zmod(4).unwrap().table_digest());
        assert_eq!(q.provenance(), "Z/12/(4)");
        assert!(hom.verify());
        assert_eq!(hom.apply(7), 3);
    }

    #[test]
    fn quotient_by_zero_is_identity() {
        let z6 = make_zmod(6).unwrap();
        let (q, hom) = make_quotient(&z6, &zero_ideal(&z6)).unwrap();
        assert_eq!(q.order(), 6);
        let ident: Vec<usize> = (0..6).collect();
        assert_eq!(hom.map, ident);
        assert!(hom.verify());
    }

    #[test]
    fn quotient_by_ring_is_zero_ring() {
        let z6 = make_zmod(6).unwrap();
        let (q, _) = make_quotient(&z6, &unit_ideal(&z6)).unwrap();
        assert_eq!(q.order(), 1);
        assert_eq!(q.zero(), q.one());
    }

    #[test]
    fn non_ideal_rejected() {
        let z6 = make_zmod(6).unwrap();
        let mut bad = BitSet::empty(6);
        bad.insert(0);
        bad.insert(1);
        let i = Ideal {
            ring_id: z6.id(),
            members: bad,
        };
        assert_eq!(
            make_quotient(&z6, &i).unwrap_err(),
            QuotientError::NotAnIdeal
        );
    }

    #[test]
    fn image_and_preimage() {
        let z12 = make_zmod(12).unwrap();
        let (q, hom) = make_quotient(&z12, &principal_ideal(&z12, 4)).unwrap();
        let two = principal_ideal(&z12, 2);
        let img = hom_image(&hom, &two).unwrap();
        assert_eq!(img.count(), 2);
        assert_eq!(img, principal_ideal(&q, 2));
        let back = hom_preimage(&hom, &img).unwrap();
        assert_eq!(back, two);

        let ker_img = hom_image(&hom, &hom.kernel).unwrap();
        assert!(ker_img.is_zero());
        let full_img = hom_image(&hom, &unit_ideal(&z12)).unwrap();
        assert_eq!(full_img.count(), 4);
        let zero_pre = hom_preimage(&hom, &zero_ideal(&q)).unwrap();
        assert_eq!(zero_pre, hom.kernel);
        let full_pre = hom_preimage(&hom, &unit_ideal(&q)).unwrap();
        assert_eq!(full_pre.count(), 12);
    }

    #[test]
    fn localize_z12() {
        let z12 = make_zmod(12).unwrap();
        let lat = enumerate_ideals(&z12);
        let two = lat.index_of(&principal_ideal(&z12, 2)).unwrap();
        let (r2, hom2) = localize_at_maximal(&lat, two).unwrap();
        assert_eq!(r2.order(), 4);
        assert_eq!(hom2.kernel, principal_ideal(&z12, 4));
        assert_eq!(r2.provenance(), "Z/12_(2)");

        let three = lat.index_of(&principal_ideal(&z12, 3)).unwrap();
        let (r3, hom3) = localize_at_maximal(&lat, three).unwrap();
        assert_eq!(r3.order(), 3);
        assert_eq!(hom3.kernel, principal_ideal(&z12, 3));
        assert!(r3.is_domain());

        // Component orders multiply back to the ring order.
        assert_eq!(r2.order() * r3.order(), 12);
    }

    #[test]
    fn localize_local_ring_is_identity_copy() {
        let z8 = make_zmod(8).unwrap();
        let lat = enumerate_ideals(&z8);
        let two = lat.index_of(&principal_ideal(&z8, 2)).unwrap();
        let (r, hom) = localize_at_maximal(&lat, two).unwrap();
        assert_eq!(r.order(), 8);
        assert!(hom.kernel.is_zero());
        assert_eq!(r.table_digest(), z8.table_digest());
    }

    #[test]
    fn localize_rejects_non_maximal() {
        let z12 = make_zmod(12).unwrap();
        let lat = enumerate_ideals(&z12);
        let four = lat.index_of(&principal_ideal(&z12, 4)).unwrap();
        assert_eq!(
            localize_at_maximal(&lat, four).unwrap_err(),
            QuotientError::NotMaximal
        );
    }

    #[test]
    fn zero_ring_quotient_validates() {
        let z2 = make_zmod(2).unwrap();
        let (q, _) = make_quotient(&z2, &unit_ideal(&z2)).unwrap();
        assert_eq!(q.validate(), Ok::<(), RingError>(()));
    }
}
