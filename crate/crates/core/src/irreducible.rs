//! Irreducibility predicates: strong irreducibility by pair scan, the
//! family-quantified variant by the dual escape-meet criterion, complete
//! irreducibility by cover count, and waists.

use crate::lattice::IdealLattice;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IrreducibilityProfile {
    /// Lattice index of the ideal.
    pub ideal: usize,
    /// Proper, and A meet B inside K forces A or B inside K (pair scan).
    pub is_si: bool,
    /// Proper, and the meet of all ideals escaping K itself escapes K.
    /// Computed independently of the pair scan; the two agree on finite
    /// lattices.
    pub is_csi: bool,
    /// Proper with a unique cover.
    pub is_ci: bool,
    /// Comparable to every ideal.
    pub is_waist: bool,
}

fn si_scan(lat: &IdealLattice, k: usize) -> bool {
    let n = lat.len();
    for a in 0..n {
        if lat.le(a, k) {
            continue;
        }
        for b in a..n {
            if lat.le(b, k) {
                continue;
            }
            if lat.le(lat.meet_idx(a, b), k) {
                return false;
            }
        }
    }
    true
}

pub fn irreducibility_profile_idx(lat: &IdealLattice, k: usize) -> IrreducibilityProfile {
    assert!(k < lat.len());
    let proper = k != lat.ring_index();
    let is_si = proper && si_scan(lat, k);

    // Meet of every ideal not inside K; the empty meet is R.
    let mut delta = lat.ring_index();
    for j in 0..lat.len() {
        if !lat.le(j, k) {
            delta = lat.meet_idx(delta, j);
        }
    }
    let is_csi = proper && !lat.le(delta, k);
    debug_assert_eq!(is_si, is_csi, "finite-lattice equivalence broke");

    let is_ci = proper && lat.covers(k).len() == 1;
    let is_waist = (0..lat.len()).all(|j| lat.le(k, j) || lat.le(j, k));

    IrreducibilityProfile {
        ideal: k,
        is_si,
        is_csi,
        is_ci,
        is_waist,
    }
}

pub fn all_irreducibility_profiles(lat: &IdealLattice) -> Vec<IrreducibilityProfile> {
    (0..lat.len())
        .map(|k| irreducibility_profile_idx(lat, k))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::enumerate_ideals;
    use crate::ring::make_zmod;

    fn idx(lat: &IdealLattice, label: &str) -> usize {
        lat.labels().iter().position(|l| l == label).unwrap()
    }

    #[test]
    fn z6_zero_not_si() {
        let lat = enumerate_ideals(&make_zmod(6).unwrap());
        let p0 = irreducibility_profile_idx(&lat, 0);
        assert!(!p0.is_si && !p0.is_csi && !p0.is_ci);
        assert!(p0.is_waist);
    }

    #[test]
    fn z8_four_fully_irreducible() {
        let lat = enumerate_ideals(&make_zmod(8).unwrap());
        let p = irreducibility_profile_idx(&lat, idx(&lat, "(4)"));
        assert!(p.is_si && p.is_csi && p.is_ci && p.is_waist);
    }

    #[test]
    fn z6_two_si_not_waist() {
        let lat = enumerate_ideals(&make_zmod(6).unwrap());
        let p = irreducibility_profile_idx(&lat, idx(&lat, "(2)"));
        assert!(p.is_si && p.is_csi && p.is_ci);
        assert!(!p.is_waist);
    }

    #[test]
    fn whole_ring_excluded() {
        let lat = enumerate_ideals(&make_zmod(8).unwrap());
        let p = irreducibility_profile_idx(&lat, lat.ring_index());
        assert!(!p.is_si && !p.is_csi && !p.is_ci);
        assert!(p.is_waist);
    }

    #[test]
    fn census_sizes_match_hollow_census() {
        use crate::hollow::all_hollow_profiles;
        for n in [6usize, 8, 12, 16, 24] {
            let lat = enumerate_ideals(&make_zmod(n).unwrap());
            let csh = all_hollow_profiles(&lat)
                .iter()
                .filter(|p| p.is_csh)
                .count();
            let csi = all_irreducibility_profiles(&lat)
                .iter()
                .filter(|p| p.is_csi)
                .count();
            assert_eq!(csh, csi, "census mismatch for Z/{n}");
        }
    }
}
