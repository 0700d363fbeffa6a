//! Complete ideal lattices of finite rings: enumeration to a fixpoint,
//! containment structure, Hasse covers, join/meet tables, classical
//! classification flags, and a brute-force oracle for small orders.

use crate::bitset::BitSet;
use crate::ideal::{additive_closure, ideal_product, is_ideal_mask, principal_ideal, Ideal};
use crate::ring::FiniteRing;
use serde::{Deserialize, Serialize};
use std::cmp::Ordering;
use std::collections::HashSet;

/// Canonical lattice order: popcount ascending, then numeric mask value.
pub fn lattice_cmp(a: &BitSet, b: &BitSet) -> Ordering {
    a.count().cmp(&b.count()).then_with(|| a.numeric_cmp(b))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealClassification {
    pub is_prime: bool,
    pub is_maximal: bool,
    pub is_primary: bool,
    /// Lattice index of the radical.
    pub radical: usize,
    pub is_minimal_prime: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeSummary {
    /// Lattice index of the Jacobson radical (intersection of maximals).
    pub jacobson: usize,
    /// Lattice index of the nilradical (set of nilpotent elements).
    pub nilradical: usize,
    pub maximals: Vec<usize>,
    pub is_local: bool,
    pub is_field: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RingFlags {
    /// Ideal lattice is distributive.
    pub is_arithmetical: bool,
    /// Every ideal is principal.
    pub is_bezout: bool,
}

#[derive(Debug, Clone)]
pub struct IdealLattice {
    ring: FiniteRing,
    ideals: Vec<Ideal>,
    /// Row i: indices j with ideals[i] a subset of ideals[j].
    supersets: Vec<BitSet>,
    /// Row i: indices j with ideals[j] a subset of ideals[i].
    subsets: Vec<BitSet>,
    /// (lower, upper) cover pairs, lexicographic.
    hasse_edges: Vec<(usize, usize)>,
    join: Vec<u32>,
    meet: Vec<u32>,
    labels: Vec<String>,
    classification: Vec<IdealClassification>,
    is_principal: Vec<bool>,
    /// Per ideal: [I, I^2, ...] as lattice indices, ending at the first
    /// stable power (chain last squared stays put).
    power_chain: Vec<Vec<usize>>,
    summary: LatticeSummary,
    flags: RingFlags,
}

/// Serializable lattice payload for the on-disk cache; ring ids are
/// reattached on load.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LatticeData {
    pub masks: Vec<BitSet>,
    pub supersets: Vec<BitSet>,
    pub subsets: Vec<BitSet>,
    pub hasse_edges: Vec<(usize, usize)>,
    pub join: Vec<u32>,
    pub meet: Vec<u32>,
    pub labels: Vec<String>,
    pub classification: Vec<IdealClassification>,
    pub is_principal: Vec<bool>,
    pub power_chain: Vec<Vec<usize>>,
    pub summary: LatticeSummary,
    pub flags: RingFlags,
}

impl IdealLattice {
    pub fn ring(&self) -> &FiniteRing {
        &self.ring
    }

    pub fn len(&self) -> usize {
        self.ideals.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn ideal(&self, i: usize) -> &Ideal {
        &self.ideals[i]
    }

    pub fn ideals(&self) -> &[Ideal] {
        &self.ideals
    }

    /// Index 0 by construction.
    pub fn zero_index(&self) -> usize {
        0
    }

    /// Last index by construction.
    pub fn ring_index(&self) -> usize {
        self.ideals.len() - 1
    }

    pub fn index_of(&self, ideal: &Ideal) -> Option<usize> {
        if ideal.ring_id != self.ring.id() {
            return None;
        }
        self.index_of_mask(&ideal.members)
    }

    pub fn index_of_mask(&self, mask: &BitSet) -> Option<usize> {
        self.ideals
            .binary_search_by(|probe| lattice_cmp(&probe.members, mask))
            .ok()
    }

    pub fn le(&self, i: usize, j: usize) -> bool {
        self.supersets[i].contains(j)
    }

    pub fn lt(&self, i: usize, j: usize) -> bool {
        i != j && self.le(i, j)
    }

    pub fn supersets_row(&self, i: usize) -> &BitSet {
        &self.supersets[i]
    }

    pub fn subsets_row(&self, i: usize) -> &BitSet {
        &self.subsets[i]
    }

    pub fn join_idx(&self, i: usize, j: usize) -> usize {
        self.join[i * self.ideals.len() + j] as usize
    }

    pub fn meet_idx(&self, i: usize, j: usize) -> usize {
        self.meet[i * self.ideals.len() + j] as usize
    }

    pub fn hasse_edges(&self) -> &[(usize, usize)] {
        &self.hasse_edges
    }

    /// Upper covers of ideal i.
    pub fn covers(&self, i: usize) -> Vec<usize> {
        self.hasse_edges
            .iter()
            .filter(|&&(lo, _)| lo == i)
            .map(|&(_, hi)| hi)
            .collect()
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn classification(&self, i: usize) -> &IdealClassification {
        &self.classification[i]
    }

    pub fn is_principal(&self, i: usize) -> bool {
        self.is_principal[i]
    }

    pub fn power_chain(&self, i: usize) -> &[usize] {
        &self.power_chain[i]
    }

    /// Index of the stable power of ideal i.
    pub fn stable_power(&self, i: usize) -> usize {
        *self.power_chain[i].last().unwrap()
    }

    pub fn summary(&self) -> &LatticeSummary {
        &self.summary
    }

    pub fn flags(&self) -> RingFlags {
        self.flags
    }

    pub fn maximals(&self) -> &[usize] {
        &self.summary.maximals
    }

    pub fn proper_indices(&self) -> impl Iterator<Item = usize> + '_ {
        0..self.ideals.len() - 1
    }

    pub fn to_data(&self) -> LatticeData {
        LatticeData {
            masks: self.ideals.iter().map(|i| i.members.clone()).collect(),
            supersets: self.supersets.clone(),
            subsets: self.subsets.clone(),
            hasse_edges: self.hasse_edges.clone(),
            join: self.join.clone(),
            meet: self.meet.clone(),
            labels: self.labels.clone(),
            classification: self.classification.clone(),
            is_principal: self.is_principal.clone(),
            power_chain: self.power_chain.clone(),
            summary: self.summary.clone(),
            flags: self.flags,
        }
    }

    pub fn from_data(ring: FiniteRing, data: LatticeData) -> IdealLattice {
        let ideals = data
            .masks
            .into_iter()
            .map(|members| Ideal {
                ring_id: ring.id(),
                members,
            })
            .collect();
        IdealLattice {
            ring,
            ideals,
            supersets: data.supersets,
            subsets: data.subsets,
            hasse_edges: data.hasse_edges,
            join: data.join,
            meet: data.meet,
            labels: data.labels,
            classification: data.classification,
            is_principal: data.is_principal,
            power_chain: data.power_chain,
            summary: data.summary,
            flags: data.flags,
        }
    }
}

/// Enumerates every ideal: seed with principal ideals, close under pairwise
/// sum to a fixpoint, then derive the full lattice structure.
pub fn enumerate_ideals(ring: &FiniteRing) -> IdealLattice {
    let order = ring.order();
    let mut principal_masks: HashSet<BitSet> = HashSet::new();
    let mut masks: Vec<BitSet> = Vec::new();
    let mut seen: HashSet<BitSet> = HashSet::new();
    for a in 0..order {
        let m = principal_ideal(ring, a).members;
        principal_masks.insert(m.clone());
        if seen.insert(m.clone()) {
            masks.push(m);
        }
    }
    let mut qi = 0;
    while qi < masks.len() {
        for j in 0..qi {
            let union = masks[qi].union(&masks[j]);
            let sum = additive_closure(ring, &union);
            if seen.insert(sum.clone()) {
                masks.push(sum);
            }
        }
        qi += 1;
    }
    masks.sort_by(lattice_cmp);
    let n = masks.len();
    let ideals: Vec<Ideal> = masks
        .iter()
        .map(|m| Ideal {
            ring_id: ring.id(),
            members: m.clone(),
        })
        .collect();

    let mut supersets = vec![BitSet::empty(n); n];
    let mut subsets = vec![BitSet::empty(n); n];
    for i in 0..n {
        for j in 0..n {
            if masks[i].is_subset(&masks[j]) {
                supersets[i].insert(j);
                subsets[j].insert(i);
            }
        }
    }

    let mut hasse_edges = Vec::new();
    for i in 0..n {
        for j in supersets[i].iter() {
            if j == i {
                continue;
            }
            // j covers i when nothing sits strictly between.
            let between = supersets[i]
                .intersection(&subsets[j])
                .iter()
                .any(|k| k != i && k != j);
            if !between {
                hasse_edges.push((i, j));
            }
        }
    }

    let mut join = vec![0u32; n * n];
    let mut meet = vec![0u32; n * n];
    for i in 0..n {
        for j in 0..n {
            let common_up = supersets[i].intersection(&supersets[j]);
            // Sorted by popcount: the least common superset is the join.
            join[i * n + j] = common_up.min().unwrap() as u32;
            let common_dn = subsets[i].intersection(&subsets[j]);
            meet[i * n + j] = common_dn.iter().last().unwrap() as u32;
        }
    }

    let index_of_mask = |mask: &BitSet| -> usize {
        masks
            .binary_search_by(|probe| lattice_cmp(probe, mask))
            .expect("ideal operation left the lattice")
    };

    let maximals: Vec<usize> = (0..n - 1)
        .filter(|&i| supersets[i].count() == 2)
        .collect();
    let jacobson = if maximals.is_empty() {
        n - 1
    } else {
        let mut acc = masks[n - 1].clone();
        for &m in &maximals {
            acc.intersect_with(&masks[m]);
        }
        index_of_mask(&acc)
    };
    let mut nil_mask = BitSet::empty(order);
    for r in 0..order {
        let mut p = r;
        for _ in 0..order {
            if p == ring.zero() {
                nil_mask.insert(r);
                break;
            }
            p = ring.mul(p, r);
        }
    }
    let nilradical = index_of_mask(&nil_mask);
    let summary = LatticeSummary {
        jacobson,
        nilradical,
        maximals: maximals.clone(),
        is_local: maximals.len() == 1,
        is_field: order >= 2 && n == 2,
    };

    let mut classification = Vec::with_capacity(n);
    for i in 0..n {
        let mask = &masks[i];
        let proper = mask.count() < order;
        let mut radical_mask = BitSet::empty(order);
        for r in 0..order {
            let mut p = ring.one();
            for _ in 0..order {
                p = ring.mul(p, r);
                if mask.contains(p) {
                    radical_mask.insert(r);
                    break;
                }
            }
        }
        let radical = index_of_mask(&radical_mask);
        let mut is_prime = proper;
        'prime: for a in 0..order {
            for b in 0..order {
                if mask.contains(ring.mul(a, b)) && !mask.contains(a) && !mask.contains(b) {
                    is_prime = false;
                    break 'prime;
                }
            }
        }
        let mut is_primary = proper;
        'primary: for a in 0..order {
            if mask.contains(a) {
                continue;
            }
            for b in 0..order {
                if mask.contains(ring.mul(a, b)) && !radical_mask.contains(b) {
                    is_primary = false;
                    break 'primary;
                }
            }
        }
        let is_maximal = proper && supersets[i].count() == 2;
        classification.push(IdealClassification {
            is_prime,
            is_maximal,
            is_primary,
            radical,
            is_minimal_prime: false,
        });
    }
    let prime_indices: Vec<usize> = (0..n).filter(|&i| classification[i].is_prime).collect();
    for &p in &prime_indices {
        let has_smaller = prime_indices
            .iter()
            .any(|&q| q != p && subsets[p].contains(q));
        classification[p].is_minimal_prime = !has_smaller;
    }

    let is_principal: Vec<bool> = masks.iter().map(|m| principal_masks.contains(m)).collect();

    let mut power_chain = Vec::with_capacity(n);
    for i in 0..n {
        let mut chain = vec![i];
        loop {
            let cur = *chain.last().unwrap();
            let next = ideal_product(ring, &ideals[cur], &ideals[i]).unwrap();
            let next_idx = index_of_mask(&next.members);
            if next_idx == cur {
                break;
            }
            chain.push(next_idx);
        }
        power_chain.push(chain);
    }

    let labels: Vec<String> = masks.iter().map(|m| ideal_label(ring, m)).collect();

    let is_bezout = is_principal.iter().all(|&p| p);
    let mut is_arithmetical = true;
    'arith: for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let lhs = meet[i * n + join[j * n + k] as usize];
                let rhs = join[(meet[i * n + j] as usize) * n + meet[i * n + k] as usize];
                if lhs != rhs {
                    is_arithmetical = false;
                    break 'arith;
                }
            }
        }
    }
    let flags = RingFlags {
        is_arithmetical,
        is_bezout,
    };

    IdealLattice {
        ring: ring.clone(),
        ideals,
        supersets,
        subsets,
        hasse_edges,
        join,
        meet,
        labels,
        classification,
        is_principal,
        power_chain,
        summary,
        flags,
    }
}

/// Greedy generating set: repeatedly adjoin the least member outside the
/// span so far. Empty for the zero ideal.
pub fn ideal_generators(ring: &FiniteRing, mask: &BitSet) -> Vec<usize> {
    let mut gens: Vec<usize> = Vec::new();
    let mut span = BitSet::singleton(ring.order(), ring.zero());
    while span != *mask {
        let next = mask
            .iter()
            .find(|&e| !span.contains(e))
            .expect("span exceeded the ideal");
        gens.push(next);
        let mut seed = span.clone();
        seed.union_with(&principal_ideal(ring, next).members);
        span = additive_closure(ring, &seed);
    }
    gens
}

/// Greedy minimal generator label, e.g. "(2)" or "(x,y)". The zero and unit
/// ideals are written "(0)" and "(1)".
pub fn ideal_label(ring: &FiniteRing, mask: &BitSet) -> String {
    if mask.count() == 1 {
        return "(0)".to_string();
    }
    if mask.count() == ring.order() {
        return "(1)".to_string();
    }
    let names: Vec<&str> = ideal_generators(ring, mask)
        .iter()
        .map(|&g| ring.name(g))
        .collect();
    format!("({})", names.join(","))
}

/// All multiplication-closed additive subgroups by direct subset scan.
/// Exponential; guarded to order <= 20.
pub fn brute_force_ideals(ring: &FiniteRing) -> Vec<BitSet> {
    let m = ring.order();
    assert!(m <= 20, "brute-force oracle is limited to order 20");
    let mut add = vec![0u32; m * m];
    let mut mul = vec![0u32; m * m];
    for a in 0..m {
        for b in 0..m {
            add[a * m + b] = ring.add(a, b) as u32;
            mul[a * m + b] = ring.mul(a, b) as u32;
        }
    }
    let zero_bit = 1u32 << ring.zero();
    let mut found: Vec<u32> = Vec::new();
    'mask: for cand in 0u32..(1u32 << m) {
        if cand & zero_bit == 0 {
            continue;
        }
        let mut rest = cand;
        while rest != 0 {
            let a = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let mut rest_b = cand;
            while rest_b != 0 {
                let b = rest_b.trailing_zeros() as usize;
                rest_b &= rest_b - 1;
                if cand & (1u32 << add[a * m + b]) == 0 {
                    continue 'mask;
                }
            }
            for s in 0..m {
                if cand & (1u32 << mul[s * m + a]) == 0 {
                    continue 'mask;
                }
            }
        }
        found.push(cand);
    }
    let mut out: Vec<BitSet> = found
        .into_iter()
        .map(|cand| {
            let mut bs = BitSet::empty(m);
            for e in 0..m {
                if cand & (1u32 << e) != 0 {
                    bs.insert(e);
                }
            }
            bs
        })
        .collect();
    out.sort_by(lattice_cmp);
    out
}

/// Cross-check helper: every lattice member really is an ideal.
pub fn lattice_masks_are_ideals(lattice: &IdealLattice) -> bool {
    lattice
        .ideals()
        .iter()
        .all(|i| is_ideal_mask(lattice.ring(), &i.members))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::{ideal_intersect, ideal_sum, unit_ideal, zero_ideal};
    use crate::ring::{make_product, make_structure_constants, make_zmod};

    pub(crate) fn f2xy_mod_square() -> FiniteRing {
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

    #[test]
    fn ideal_counts() {
        assert_eq!(enumerate_ideals(&make_zmod(6).unwrap()).len(), 4);
        assert_eq!(enumerate_ideals(&make_zmod(12).unwrap()).len(), 6);
        let r2 = make_zmod(2).unwrap();
        let r3 = make_zmod(3).unwrap();
        assert_eq!(enumerate_ideals(&make_product(&[r2, r3]).unwrap()).len(), 4);
        let r2a = make_zmod(2).unwrap();
        let r2b = make_zmod(2).unwrap();
        assert_eq!(
            enumerate_ideals(&make_product(&[r2a, r2b]).unwrap()).len(),
            4
        );
        assert_eq!(enumerate_ideals(&f2xy_mod_square()).len(), 6);
    }

    #[test]
    fn lattice_ordering_and_lookup() {
        let z12 = make_zmod(12).unwrap();
        let lat = enumerate_ideals(&z12);
        assert_eq!(
            lat.labels(),
            &["(0)", "(6)", "(4)", "(3)", "(2)", "(1)"]
        );
        assert!(lat.ideal(0).is_zero());
        assert_eq!(lat.ideal(lat.ring_index()).count(), 12);
        let four = principal_ideal(&z12, 4);
        assert_eq!(lat.index_of(&four), Some(2));
    }

    #[test]
    fn hasse_counts() {
        let lat6 = enumerate_ideals(&make_zmod(6).unwrap());
        assert_eq!(lat6.hasse_edges().len(), 4);
        let lat12 = enumerate_ideals(&make_zmod(12).unwrap());
        assert_eq!(lat12.hasse_edges().len(), 7);
        let f4 = crate::poly::make_poly_quotient(2, &[1, 1, 1]).unwrap();
        assert_eq!(enumerate_ideals(&f4).hasse_edges().len(), 1);
    }

    #[test]
    fn join_meet_agree_with_ideal_algebra() {
        for ring in [make_zmod(12).unwrap(), f2xy_mod_square()] {
            let lat = enumerate_ideals(&ring);
            for i in 0..lat.len() {
                for j in 0..lat.len() {
                    let sum = ideal_sum(&ring, lat.ideal(i), lat.ideal(j)).unwrap();
                    assert_eq!(lat.index_of(&sum), Some(lat.join_idx(i, j)));
                    let inter = ideal_intersect(&ring, lat.ideal(i), lat.ideal(j)).unwrap();
                    assert_eq!(lat.index_of(&inter), Some(lat.meet_idx(i, j)));
                }
            }
        }
    }

    #[test]
    fn summary_z12() {
        let z12 = make_zmod(12).unwrap();
        let lat = enumerate_ideals(&z12);
        let s = lat.summary();
        let six = lat.index_of(&principal_ideal(&z12, 6)).unwrap();
        assert_eq!(s.jacobson, six);
        assert_eq!(s.nilradical, six);
        let max_labels: Vec<&str> = s.maximals.iter().map(|&i| lat.label(i)).collect();
        assert_eq!(max_labels, vec!["(3)", "(2)"]);
        assert!(!s.is_local);
        assert!(!s.is_field);
    }

    #[test]
    fn summary_z8_local() {
        let z8 = make_zmod(8).unwrap();
        let lat = enumerate_ideals(&z8);
        let s = lat.summary();
        assert!(s.is_local);
        let two = lat.index_of(&principal_ideal(&z8, 2)).unwrap();
        assert_eq!(s.jacobson, two);
        assert_eq!(s.nilradical, two);
    }

    #[test]
    fn summary_field() {
        let z5 = make_zmod(5).unwrap();
        let lat = enumerate_ideals(&z5);
        assert!(lat.summary().is_field);
        assert_eq!(lat.summary().jacobson, 0);
        assert_eq!(lat.summary().nilradical, 0);
    }

    #[test]
    fn classification_examples() {
        let z12 = make_zmod(12).unwrap();
        let lat = enumerate_ideals(&z12);
        let two = lat.index_of(&principal_ideal(&z12, 2)).unwrap();
        let c2 = lat.classification(two);
        assert!(c2.is_prime && c2.is_maximal && c2.is_primary);
        assert_eq!(c2.radical, two);
        let four = lat.index_of(&principal_ideal(&z12, 4)).unwrap();
        let c4 = lat.classification(four);
        assert!(!c4.is_prime && c4.is_primary);
        assert_eq!(c4.radical, two);

        let z6 = make_zmod(6).unwrap();
        let lat6 = enumerate_ideals(&z6);
        assert!(!lat6.classification(0).is_primary);
        // In a reduced ring the zero ideal is not prime here, but (2),(3) are
        // minimal primes.
        let m2 = lat6.index_of(&principal_ideal(&z6, 2)).unwrap();
        assert!(lat6.classification(m2).is_minimal_prime);

        // R itself: flags false, radical = R.
        let top = lat6.ring_index();
        let ct = lat6.classification(top);
        assert!(!ct.is_prime && !ct.is_maximal && !ct.is_primary);
        assert_eq!(ct.radical, top);
    }

    #[test]
    fn flags_examples() {
        let lat12 = enumerate_ideals(&make_zmod(12).unwrap());
        assert!(lat12.flags().is_arithmetical);
        assert!(lat12.flags().is_bezout);
        let latf = enumerate_ideals(&f2xy_mod_square());
        assert!(!latf.flags().is_arithmetical);
        assert!(!latf.flags().is_bezout);
        let lat5 = enumerate_ideals(&make_zmod(5).unwrap());
        assert!(lat5.flags().is_arithmetical && lat5.flags().is_bezout);
    }

    #[test]
    fn power_chains() {
        let z8 = make_zmod(8).unwrap();
        let lat = enumerate_ideals(&z8);
        let two = lat.index_of(&principal_ideal(&z8, 2)).unwrap();
        let chain = lat.power_chain(two);
        let labels: Vec<&str> = chain.iter().map(|&i| lat.label(i)).collect();
        assert_eq!(labels, vec!["(2)", "(4)", "(0)"]);
        assert_eq!(lat.stable_power(two), 0);
        assert_eq!(lat.power_chain(lat.ring_index()), &[lat.ring_index()]);
    }

    #[test]
    fn oracle_agreement_small() {
        for ring in [
            make_zmod(6).unwrap(),
            make_zmod(12).unwrap(),
            make_zmod(16).unwrap(),
            f2xy_mod_square(),
        ] {
            let lat = enumerate_ideals(&ring);
            let oracle = brute_force_ideals(&ring);
            let got: Vec<BitSet> = lat.ideals().iter().map(|i| i.members.clone()).collect();
            assert_eq!(got, oracle, "lattice mismatch for {}", ring.provenance());
            assert!(lattice_masks_are_ideals(&lat));
        }
    }

    #[test]
    fn f2xy_labels() {
        let ring = f2xy_mod_square();
        let lat = enumerate_ideals(&ring);
        let labels: Vec<&str> = lat.labels().iter().map(|s| s.as_str()).collect();
        assert_eq!(labels, vec!["(0)", "(x)", "(y)", "(x+y)", "(x,y)", "(1)"]);
    }

    #[test]
    fn zero_and_unit_ideals_present() {
        let z6 = make_zmod(6).unwrap();
        let lat = enumerate_ideals(&z6);
        assert_eq!(lat.index_of(&zero_ideal(&z6)), Some(0));
        assert_eq!(lat.index_of(&unit_ideal(&z6)), Some(lat.ring_index()));
    }
}
