//! The pairing between completely-strongly-hollow and
//! completely-strongly-irreducible ideals: forward by the gamma ideal,
//! backward by the least escape.

use crate::hollow::{least_not_contained_in, HollowProfile, LeastEscape};
use crate::ideal::{ideal_colon, ideal_product};
use crate::irreducible::IrreducibilityProfile;
use crate::lattice::IdealLattice;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BijectionReport {
    /// (hollow ideal, its gamma), ascending by lattice index.
    pub forward: Vec<(usize, usize)>,
    /// (irreducible ideal, its least escape), ascending by lattice index.
    /// The escape entry is None when no unique least escape exists.
    pub backward: Vec<(usize, Option<usize>)>,
    pub forward_lands_in_csi: bool,
    pub backward_lands_in_csh: bool,
    pub mutually_inverse: bool,
    pub order_preserving: bool,
    /// On local rings: gamma equals the product with the maximal ideal and
    /// the ideal is recovered as (gamma : M). None for non-local rings.
    pub local_form_ok: Option<bool>,
}

pub fn bijection_maps(
    lat: &IdealLattice,
    hollow: &[HollowProfile],
    irr: &[IrreducibilityProfile],
) -> BijectionReport {
    let csh: Vec<usize> = (0..lat.len()).filter(|&i| hollow[i].is_csh).collect();
    let csi: Vec<usize> = (0..lat.len()).filter(|&k| irr[k].is_csi).collect();

    let forward: Vec<(usize, usize)> = csh.iter().map(|&i| (i, hollow[i].gamma)).collect();
    let backward: Vec<(usize, Option<usize>)> = csi
        .iter()
        .map(|&k| {
            let b = match least_not_contained_in(lat, k) {
                LeastEscape::Least(m) => Some(m),
                _ => None,
            };
            (k, b)
        })
        .collect();

    let forward_lands_in_csi = forward.iter().all(|&(_, g)| irr[g].is_csi);
    let backward_lands_in_csh = backward
        .iter()
        .all(|&(_, b)| matches!(b, Some(m) if hollow[m].is_csh));

    let mut mutually_inverse = forward_lands_in_csi && backward_lands_in_csh;
    if mutually_inverse {
        for &(i, g) in &forward {
            match least_not_contained_in(lat, g) {
                LeastEscape::Least(m) if m == i => {}
                _ => {
                    mutually_inverse = false;
                    break;
                }
            }
        }
        for &(k, b) in &backward {
            if b.map(|m| hollow[m].gamma) != Some(k) {
                mutually_inverse = false;
                break;
            }
        }
    }

    let mut order_preserving = true;
    'order: for &(i1, g1) in &forward {
        for &(i2, g2) in &forward {
            if lat.le(i1, i2) != lat.le(g1, g2) {
                order_preserving = false;
                break 'order;
            }
        }
    }
    if order_preserving {
        'order2: for &(k1, b1) in &backward {
            for &(k2, b2) in &backward {
                if let (Some(m1), Some(m2)) = (b1, b2) {
                    if lat.le(k1, k2) != lat.le(m1, m2) {
                        order_preserving = false;
                        break 'order2;
                    }
                }
            }
        }
    }

    let local_form_ok = if lat.summary().is_local {
        let m = lat.maximals()[0];
        let mut ok = true;
        for &(i, g) in &forward {
            let prod_mask = ideal_product(lat.ring(), lat.ideal(i), lat.ideal(m)).unwrap();
            if lat.index_of(&prod_mask) != Some(g) {
                ok = false;
                break;
            }
            let colon = ideal_colon(lat.ring(), lat.ideal(g), lat.ideal(m)).unwrap();
            if lat.index_of(&colon) != Some(i) {
                ok = false;
                break;
            }
        }
        Some(ok)
    } else {
        None
    };

    BijectionReport {
        forward,
        backward,
        forward_lands_in_csi,
        backward_lands_in_csh,
        mutually_inverse,
        order_preserving,
        local_form_ok,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hollow::all_hollow_profiles;
    use crate::irreducible::all_irreducibility_profiles;
    use crate::lattice::enumerate_ideals;
    use crate::ring::make_zmod;

    fn report(n: usize) -> (IdealLattice, BijectionReport) {
        let lat = enumerate_ideals(&make_zmod(n).unwrap());
        let h = all_hollow_profiles(&lat);
        let irr = all_irreducibility_profiles(&lat);
        let rep = bijection_maps(&lat, &h, &irr);
        (lat, rep)
    }

    #[test]
    fn z8_table() {
        let (lat, rep) = report(8);
        let table: Vec<(String, String)> = rep
            .forward
            .iter()
            .map(|&(i, g)| (lat.label(i).to_string(), lat.label(g).to_string()))
            .collect();
        assert_eq!(
            table,
            vec![
                ("(4)".to_string(), "(0)".to_string()),
                ("(2)".to_string(), "(4)".to_string()),
                ("(1)".to_string(), "(2)".to_string()),
            ]
        );
        assert!(rep.forward_lands_in_csi);
        assert!(rep.backward_lands_in_csh);
        assert!(rep.mutually_inverse);
        assert!(rep.order_preserving);
        assert_eq!(rep.local_form_ok, Some(true));
    }

    #[test]
    fn z6_table() {
        let (lat, rep) = report(6);
        let table: Vec<(String, String)> = rep
            .forward
            .iter()
            .map(|&(i, g)| (lat.label(i).to_string(), lat.label(g).to_string()))
            .collect();
        assert_eq!(
            table,
            vec![
                ("(3)".to_string(), "(2)".to_string()),
                ("(2)".to_string(), "(3)".to_string()),
            ]
        );
        assert!(rep.mutually_inverse && rep.order_preserving);
        assert_eq!(rep.local_form_ok, None);
    }

    #[test]
    fn field_table() {
        let (lat, rep) = report(5);
        assert_eq!(rep.forward, vec![(lat.ring_index(), 0)]);
        assert!(rep.mutually_inverse && rep.order_preserving);
        assert_eq!(rep.local_form_ok, Some(true));
    }
}
