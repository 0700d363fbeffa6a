//! Lattice export: Graphviz DOT for the Hasse diagram and a JSON dump of
//! the whole lattice with predicate flags.

use serde_json::json;

use crate::bitset::BitSet;
use crate::hollow::HollowProfile;
use crate::irreducible::IrreducibilityProfile;
use crate::lattice::IdealLattice;

/// Little-endian byte hex of the member mask: bit i set means element i is
/// in the ideal.
fn mask_hex(mask: &BitSet) -> String {
    let mut bytes = vec![0u8; mask.nbits().div_ceil(8)];
    for i in mask.iter() {
        bytes[i / 8] |= 1 << (i % 8);
    }
    hex::encode(bytes)
}

fn flag_line(hp: &HollowProfile, ip: &IrreducibilityProfile) -> String {
    let mut parts = Vec::new();
    if hp.is_sh {
        parts.push("SH");
    }
    if hp.is_csh {
        parts.push("CSH");
    }
    if ip.is_si {
        parts.push("SI");
    }
    if ip.is_csi {
        parts.push("CSI");
    }
    parts.join(" ")
}

/// Hasse diagram in DOT, lower ideals at the bottom. One node per ideal,
/// labeled with its generators and the predicates it satisfies; one edge
/// per covering pair.
pub fn export_dot(
    lat: &IdealLattice,
    hp: &[HollowProfile],
    ip: &[IrreducibilityProfile],
) -> String {
    let mut out = String::new();
    out.push_str("digraph ideals {\n");
    out.push_str("  rankdir=BT;\n");
    out.push_str("  node [shape=box];\n");
    for i in 0..lat.len() {
        let flags = flag_line(&hp[i], &ip[i]);
        let label = if flags.is_empty() {
            lat.label(i).to_string()
        } else {
            format!("{}\\n{}", lat.label(i), flags)
        };
        out.push_str(&format!("  n{i} [label=\"{label}\"];\n"));
    }
    for &(lo, hi) in lat.hasse_edges() {
        out.push_str(&format!("  n{lo} -> n{hi};\n"));
    }
    out.push_str("}\n");
    out
}

/// Full lattice dump: ring data, per-ideal masks, labels, flags, and the
/// hollow invariants, plus the Hasse relation and the lattice summary.
pub fn export_json(
    lat: &IdealLattice,
    hp: &[HollowProfile],
    ip: &[IrreducibilityProfile],
) -> String {
    let ring = lat.ring();
    let s = lat.summary();
    let ideals: Vec<serde_json::Value> = (0..lat.len())
        .map(|i| {
            let cls = lat.classification(i);
            json!({
                "index": i,
                "label": lat.label(i),
                "mask": mask_hex(&lat.ideal(i).members),
                "size": lat.ideal(i).count(),
                "generator_names": crate::lattice::ideal_generators(ring, &lat.ideal(i).members)
                    .iter().map(|&g| ring.name(g)).collect::<Vec<_>>(),
                "gamma": hp[i].gamma,
                "l_ideal": hp[i].l_ideal,
                "flags": {
                    "sh": hp[i].is_sh,
                    "csh": hp[i].is_csh,
                    "si": ip[i].is_si,
                    "csi": ip[i].is_csi,
                    "waist": ip[i].is_waist,
                    "principal": lat.is_principal(i),
                    "prime": cls.is_prime,
                    "maximal": cls.is_maximal,
                    "primary": cls.is_primary,
                },
            })
        })
        .collect();
    let doc = json!({
        "ring": ring.provenance(),
        "order": ring.order(),
        "elements": ring.names(),
        "ideal_count": lat.len(),
        "ideals": ideals,
        "hasse": lat.hasse_edges(),
        "summary": {
            "jacobson": s.jacobson,
            "nilradical": s.nilradical,
            "maximals": s.maximals,
            "is_local": s.is_local,
            "is_field": s.is_field,
        },
    });
    serde_json::to_string_pretty(&doc).expect("lattice document serializes")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hollow::all_hollow_profiles;
    use crate::irreducible::all_irreducibility_profiles;
    use crate::lattice::enumerate_ideals;
    use crate::ring::make_zmod;

    fn dot_for(n: usize) -> (String, usize, usize) {
        let r = make_zmod(n).unwrap();
        let lat = enumerate_ideals(&r);
        let hp = all_hollow_profiles(&lat);
        let ip = all_irreducibility_profiles(&lat);
        let dot = export_dot(&lat, &hp, &ip);
        let nodes = dot.lines().filter(|l| l.contains("[label=")).count();
        let edges = dot.lines().filter(|l| l.contains("->")).count();
        (dot, nodes, edges)
    }

    #[test]
    fn dot_counts() {
        let (dot, nodes, edges) = dot_for(6);
        assert_eq!((nodes, edges), (4, 4));
        assert!(dot.contains("rankdir=BT"));
        assert!(dot.contains("(2)\\nSH CSH"));
        let (_, nodes, edges) = dot_for(12);
        assert_eq!((nodes, edges), (6, 7));
        let (_, nodes, edges) = dot_for(5);
        assert_eq!((nodes, edges), (2, 1));
    }

    #[test]
    fn json_parses_back() {
        let r = make_zmod(6).unwrap();
        let lat = enumerate_ideals(&r);
        let hp = all_hollow_profiles(&lat);
        let ip = all_irreducibility_profiles(&lat);
        let doc: serde_json::Value =
            serde_json::from_str(&export_json(&lat, &hp, &ip)).unwrap();
        assert_eq!(doc["ring"], "Z/6");
        assert_eq!(doc["ideal_count"], 4);
        let ideals = doc["ideals"].as_array().unwrap();
        assert_eq!(ideals.len(), 4);
        // (2) = {0, 2, 4}: bits 0, 2, 4 set in the first byte.
        let two = ideals.iter().find(|i| i["label"] == "(2)").unwrap();
        assert_eq!(two["mask"], "15");
        assert_eq!(two["flags"]["sh"], true);
        assert_eq!(doc["summary"]["is_local"], false);
    }
}
