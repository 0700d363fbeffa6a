//! Hollowness predicates: the pair-scan strong-hollowness test, the gamma
//! ideal and its colon partner, the finite-ring criterion for the
//! family-quantified variant, and the escape searches.

use crate::ideal::{ideal_colon, Ideal};
use crate::lattice::IdealLattice;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum HollowError {
    #[error("ideal is not a member of this lattice")]
    UnknownIdeal,
    #[error("first ideal is not contained in the second")]
    NotASubmodule,
    #[error("escape search is undefined for the zero ideal")]
    ZeroIdealUndefined,
}

/// Which branch of the trichotomy a strongly hollow ideal lands in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ShClass {
    /// Exactly one maximal ideal fails to contain I.
    UniqueEscapedMaximal { maximal: usize },
    /// I lies in every power of every maximal ideal.
    InAllMaximalPowers,
    /// Exactly one maximal has a power not containing I; `exponent` is the
    /// least such power.
    UniqueShallowMaximal { maximal: usize, exponent: u32 },
    NotSh,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HollowProfile {
    /// Lattice index of the ideal.
    pub ideal: usize,
    /// Lattice index of the sum of all ideals not containing this one.
    pub gamma: usize,
    /// Lattice index of (gamma : ideal).
    pub l_ideal: usize,
    /// Pair-scan verdict with the zero ideal excluded by convention.
    pub is_sh: bool,
    /// Family criterion: nonzero and not inside gamma.
    pub is_csh: bool,
    /// Raw pair-scan verdict before the zero-ideal convention.
    pub is_sh_raw: bool,
    pub classification_case: ShClass,
}

/// Pair scan: I inside A+B forces I inside A or inside B, over all lattice
/// pairs.
fn sh_scan(lat: &IdealLattice, i: usize) -> bool {
    let n = lat.len();
    for a in 0..n {
        if lat.le(i, a) {
            continue;
        }
        for b in a..n {
            if lat.le(i, b) {
                continue;
            }
            if lat.le(i, lat.join_idx(a, b)) {
                return false;
            }
        }
    }
    true
}

pub fn hollow_profile_idx(lat: &IdealLattice, i: usize) -> HollowProfile {
    assert!(i < lat.len());
    let is_sh_raw = sh_scan(lat, i);
    let is_sh = i != lat.zero_index() && is_sh_raw;

    let mut gamma = lat.zero_index();
    for j in 0..lat.len() {
        if !lat.le(i, j) {
            gamma = lat.join_idx(gamma, j);
        }
    }
    let l_mask = ideal_colon(lat.ring(), lat.ideal(gamma), lat.ideal(i)).unwrap();
    let l_ideal = lat.index_of(&l_mask).expect("colon left the lattice");
    let is_csh = i != lat.zero_index() && !lat.le(i, gamma);

    let classification_case = if !is_sh {
        ShClass::NotSh
    } else {
        let escaped: Vec<usize> = lat
            .maximals()
            .iter()
            .copied()
            .filter(|&m| !lat.le(i, m))
            .collect();
        if escaped.len() == 1 {
            ShClass::UniqueEscapedMaximal {
                maximal: escaped[0],
            }
        } else {
            assert!(
                escaped.is_empty(),
                "strongly hollow ideal escapes two maximal ideals"
            );
            // Which maximals have a power not containing I? Powers stop
            // changing at the stable end of the chain, so the chain scan is
            // exhaustive.
            let mut shallow: Vec<(usize, u32)> = Vec::new();
            for &m in lat.maximals() {
                let chain = lat.power_chain(m);
                if let Some(pos) = chain.iter().position(|&p| !lat.le(i, p)) {
                    shallow.push((m, pos as u32 + 1));
                }
            }
            match shallow.as_slice() {
                [] => ShClass::InAllMaximalPowers,
                [(m, n)] => ShClass::UniqueShallowMaximal {
                    maximal: *m,
                    exponent: *n,
                },
                _ => panic!("strongly hollow ideal is shallow at two maximal ideals"),
            }
        }
    };

    HollowProfile {
        ideal: i,
        gamma,
        l_ideal,
        is_sh,
        is_csh,
        is_sh_raw,
        classification_case,
    }
}

pub fn hollow_profile(lat: &IdealLattice, ideal: &Ideal) -> Result<HollowProfile, HollowError> {
    let i = lat.index_of(ideal).ok_or(HollowError::UnknownIdeal)?;
    Ok(hollow_profile_idx(lat, i))
}

pub fn all_hollow_profiles(lat: &IdealLattice) -> Vec<HollowProfile> {
    (0..lat.len()).map(|i| hollow_profile_idx(lat, i)).collect()
}

/// N is small in H: every L inside H with N+L = H must already be H.
pub fn is_small_in(lat: &IdealLattice, n: usize, h: usize) -> Result<bool, HollowError> {
    if !lat.le(n, h) {
        return Err(HollowError::NotASubmodule);
    }
    for l in lat.subsets_row(h).iter() {
        if lat.join_idx(n, l) == h && l != h {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Inclusion-maximal members of {K inside I : K strongly hollow}.
pub fn maximal_sh_under(
    lat: &IdealLattice,
    profiles: &[HollowProfile],
    i: usize,
) -> Vec<usize> {
    let below: Vec<usize> = lat
        .subsets_row(i)
        .iter()
        .filter(|&k| profiles[k].is_sh)
        .collect();
    below
        .iter()
        .copied()
        .filter(|&k| !below.iter().any(|&k2| k2 != k && lat.lt(k, k2)))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum LeastEscape {
    Least(usize),
    /// Antichain of minimal escapes when no unique minimum exists.
    NoLeast(Vec<usize>),
    AllContained,
}

/// The least ideal not contained in K, when it exists. Every member of a
/// finite poset sits above some minimal member, so a unique minimal escape
/// is the minimum.
pub fn least_not_contained_in(lat: &IdealLattice, k: usize) -> LeastEscape {
    let escapes: Vec<usize> = (0..lat.len()).filter(|&j| !lat.le(j, k)).collect();
    if escapes.is_empty() {
        return LeastEscape::AllContained;
    }
    let minimal: Vec<usize> = escapes
        .iter()
        .copied()
        .filter(|&j| !escapes.iter().any(|&j2| j2 != j && lat.lt(j2, j)))
        .collect();
    if minimal.len() == 1 {
        LeastEscape::Least(minimal[0])
    } else {
        LeastEscape::NoLeast(minimal)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum GreatestEscape {
    Greatest(usize),
    /// Antichain of maximal non-containers when no unique maximum exists.
    NoGreatest(Vec<usize>),
}

/// The greatest ideal not containing I, when it exists; it then equals
/// gamma. Undefined for the zero ideal, which every ideal contains.
pub fn greatest_not_containing(
    lat: &IdealLattice,
    i: usize,
) -> Result<GreatestEscape, HollowError> {
    if i == lat.zero_index() {
        return Err(HollowError::ZeroIdealUndefined);
    }
    let escapes: Vec<usize> = (0..lat.len()).filter(|&j| !lat.le(i, j)).collect();
    let maximal: Vec<usize> = escapes
        .iter()
        .copied()
        .filter(|&j| !escapes.iter().any(|&j2| j2 != j && lat.lt(j, j2)))
        .collect();
    if maximal.len() == 1 {
        Ok(GreatestEscape::Greatest(maximal[0]))
    } else {
        Ok(GreatestEscape::NoGreatest(maximal))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::enumerate_ideals;
    use crate::ring::{make_structure_constants, make_zmod, FiniteRing};

    fn f2xy() -> FiniteRing {
        let z = vec![0, 0, 0];
        let e1 = vec![1, 0, 0];
        let e2 = vec![0, 1, 0];
        let e3 = vec![0, 0, 1];
        let prods = vec![
            vec![e1.clone(), e2.clone(), e3.clone()],
            vec![e2.clone(), z.clone(), z.clone()],
            vec![e3.clone(), z.clone(), z.clone()],
        ];
        make_structure_constants(
            &[2, 2, 2],
            &prods,
            &[1, 0, 0],
            Some(&["1", "x", "y"]),
            "F2[x,y]/(x,y)^2",
        )
        .unwrap()
    }

    fn idx(lat: &IdealLattice, label: &str) -> usize {
        lat.labels().iter().position(|l| l == label).unwrap()
    }

    #[test]
    fn z6_profiles() {
        let lat = enumerate_ideals(&make_zmod(6).unwrap());
        let p2 = hollow_profile_idx(&lat, idx(&lat, "(2)"));
        assert!(p2.is_sh && p2.is_csh);
        assert_eq!(lat.label(p2.gamma), "(3)");
        assert_eq!(lat.label(p2.l_ideal), "(3)");
        assert!(matches!(
            p2.classification_case,
            ShClass::UniqueEscapedMaximal { maximal } if lat.label(maximal) == "(3)"
        ));

        let p1 = hollow_profile_idx(&lat, lat.ring_index());
        assert!(!p1.is_sh && !p1.is_sh_raw);
        assert_eq!(p1.classification_case, ShClass::NotSh);

        let p0 = hollow_profile_idx(&lat, 0);
        assert!(!p0.is_sh && p0.is_sh_raw && !p0.is_csh);
        assert_eq!(p0.gamma, 0);

        let census: Vec<&str> = all_hollow_profiles(&lat)
            .iter()
            .filter(|p| p.is_sh)
            .map(|p| lat.label(p.ideal))
            .collect();
        assert_eq!(census, vec!["(3)", "(2)"]);
    }

    #[test]
    fn z8_profiles() {
        let lat = enumerate_ideals(&make_zmod(8).unwrap());
        let p2 = hollow_profile_idx(&lat, idx(&lat, "(2)"));
        assert!(p2.is_sh && p2.is_csh);
        assert_eq!(lat.label(p2.gamma), "(4)");
        assert_eq!(lat.label(p2.l_ideal), "(2)");
        assert!(matches!(
            p2.classification_case,
            ShClass::UniqueShallowMaximal { maximal, exponent: 2 }
                if lat.label(maximal) == "(2)"
        ));

        // The whole ring scans as strongly hollow in a local ring.
        let pr = hollow_profile_idx(&lat, lat.ring_index());
        assert!(pr.is_sh && pr.is_csh);
        assert_eq!(lat.label(pr.gamma), "(2)");
        assert!(matches!(
            pr.classification_case,
            ShClass::UniqueEscapedMaximal { .. }
        ));
    }

    #[test]
    fn small_in_examples() {
        let lat = enumerate_ideals(&make_zmod(8).unwrap());
        let two = idx(&lat, "(2)");
        let four = idx(&lat, "(4)");
        assert_eq!(is_small_in(&lat, four, two), Ok(true));
        assert_eq!(is_small_in(&lat, 0, two), Ok(true));
        assert_eq!(is_small_in(&lat, two, two), Ok(false));
        assert_eq!(
            is_small_in(&lat, two, four),
            Err(HollowError::NotASubmodule)
        );
    }

    #[test]
    fn maximal_sh_examples() {
        let lat6 = enumerate_ideals(&make_zmod(6).unwrap());
        let profs6 = all_hollow_profiles(&lat6);
        let tops = maximal_sh_under(&lat6, &profs6, lat6.ring_index());
        let labels: Vec<&str> = tops.iter().map(|&i| lat6.label(i)).collect();
        assert_eq!(labels, vec!["(3)", "(2)"]);

        let lat8 = enumerate_ideals(&make_zmod(8).unwrap());
        let profs8 = all_hollow_profiles(&lat8);
        assert_eq!(
            maximal_sh_under(&lat8, &profs8, idx(&lat8, "(2)")),
            vec![idx(&lat8, "(2)")]
        );

        let latf = enumerate_ideals(&f2xy());
        let profsf = all_hollow_profiles(&latf);
        assert!(maximal_sh_under(&latf, &profsf, idx(&latf, "(x,y)")).is_empty());
    }

    #[test]
    fn least_escape_examples() {
        let lat6 = enumerate_ideals(&make_zmod(6).unwrap());
        assert_eq!(
            least_not_contained_in(&lat6, idx(&lat6, "(3)")),
            LeastEscape::Least(idx(&lat6, "(2)"))
        );
        assert_eq!(
            least_not_contained_in(&lat6, lat6.ring_index()),
            LeastEscape::AllContained
        );

        let latf = enumerate_ideals(&f2xy());
        match least_not_contained_in(&latf, idx(&latf, "(x)")) {
            LeastEscape::NoLeast(set) => {
                let labels: Vec<&str> = set.iter().map(|&i| latf.label(i)).collect();
                assert_eq!(labels, vec!["(y)", "(x+y)"]);
            }
            other => panic!("expected antichain, got {other:?}"),
        }
    }

    #[test]
    fn greatest_escape_examples() {
        let lat6 = enumerate_ideals(&make_zmod(6).unwrap());
        assert_eq!(
            greatest_not_containing(&lat6, idx(&lat6, "(2)")),
            Ok(GreatestEscape::Greatest(idx(&lat6, "(3)")))
        );
        match greatest_not_containing(&lat6, lat6.ring_index()).unwrap() {
            GreatestEscape::NoGreatest(set) => {
                let labels: Vec<&str> = set.iter().map(|&i| lat6.label(i)).collect();
                assert_eq!(labels, vec!["(3)", "(2)"]);
            }
            other => panic!("expected antichain, got {other:?}"),
        }
        let lat8 = enumerate_ideals(&make_zmod(8).unwrap());
        assert_eq!(
            greatest_not_containing(&lat8, idx(&lat8, "(2)")),
            Ok(GreatestEscape::Greatest(idx(&lat8, "(4)")))
        );
        assert_eq!(
            greatest_not_containing(&lat8, 0),
            Err(HollowError::ZeroIdealUndefined)
        );
    }

    #[test]
    fn csh_matches_sh_on_small_rings() {
        for n in 2..=16 {
            let lat = enumerate_ideals(&make_zmod(n).unwrap());
            for p in all_hollow_profiles(&lat) {
                if p.ideal != 0 {
                    assert_eq!(p.is_sh, p.is_csh, "Z/{n} ideal {}", lat.label(p.ideal));
                }
            }
        }
    }
}
