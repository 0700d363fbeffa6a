//! The standard ring corpus: modular rings, two-factor products, polynomial
//! quotients over prime fields, and a few hand-picked structure-constant
//! presets. Generation order is deterministic so reports and caches line up
//! across runs.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::poly::{find_irreducible_poly, is_prime, make_poly_quotient};
use crate::ring::{
    make_product, make_structure_constants, make_zmod, FiniteRing, RingError,
};

/// Orders above this are refused outright; lattice work is quadratic in the
/// order and the corpus is meant to stay interactive.
pub const ORDER_CAP: usize = 64;

#[derive(Debug, Error)]
pub enum CorpusError {
    #[error("requested order {0} exceeds the corpus cap {ORDER_CAP}")]
    OrderCapExceeded(usize),
    #[error("duplicate ring provenance {0:?}")]
    DuplicateProvenance(String),
    #[error(transparent)]
    Ring(#[from] RingError),
}

/// An extra ring given directly by structure constants, in the same shape
/// `make_structure_constants` takes.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ExtraRing {
    pub label: String,
    pub divisors: Vec<u32>,
    pub gen_products: Vec<Vec<Vec<u32>>>,
    pub one: Vec<u32>,
    #[serde(default)]
    pub gen_names: Option<Vec<String>>,
}

fn default_max_order() -> usize {
    32
}

fn default_true() -> bool {
    true
}

/// Which families to generate and how far. A JSON config file deserializes
/// straight into this; absent fields take the defaults.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CorpusSpec {
    #[serde(default = "default_max_order")]
    pub max_order: usize,
    #[serde(default = "default_true")]
    pub zmods: bool,
    /// Products of two modular rings.
    #[serde(default = "default_true")]
    pub products: bool,
    /// F_p[x]/(f) for prime p and degree 2..=3: the field (first irreducible
    /// f) and the chain ring x^d.
    #[serde(default = "default_true")]
    pub poly_quotients: bool,
    #[serde(default = "default_true")]
    pub presets: bool,
    #[serde(default)]
    pub extra: Vec<ExtraRing>,
}

impl Default for CorpusSpec {
    fn default() -> Self {
        CorpusSpec {
            max_order: default_max_order(),
            zmods: true,
            products: true,
            poly_quotients: true,
            presets: true,
            extra: Vec::new(),
        }
    }
}

/// F_2[x,y]/(x,y)^2: order 8, local, cotangent dimension 2. The smallest
/// ring whose maximal ideal is not principal.
pub fn preset_f2xy_mod_square() -> FiniteRing {
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
    .expect("preset tables are consistent")
}

/// Z/4[x]/(x^2-2, 2x): order 8, a local chain ring of characteristic 4
/// whose maximal ideal (x) has square (2) strictly between (0) and itself.
pub fn preset_z4_sqrt2() -> FiniteRing {
    let e1 = vec![1, 0];
    let e2 = vec![0, 1];
    let prods = vec![
        vec![e1.clone(), e2.clone()],
        vec![e2.clone(), vec![2, 0]],
    ];
    make_structure_constants(
        &[4, 2],
        &prods,
        &[1, 0],
        Some(&["1", "x"]),
        "Z4[x]/(x^2-2,2x)",
    )
    .expect("preset tables are consistent")
}

/// F_2[x,y]/(x^2, y^2): order 16, local with one-dimensional socle (xy)
/// sitting under every nonzero ideal.
pub fn preset_f2xy_mod_squares() -> FiniteRing {
    let z = vec![0, 0, 0, 0];
    let e1 = vec![1, 0, 0, 0];
    let e2 = vec![0, 1, 0, 0];
    let e3 = vec![0, 0, 1, 0];
    let e4 = vec![0, 0, 0, 1];
    let prods = vec![
        vec![e1.clone(), e2.clone(), e3.clone(), e4.clone()],
        vec![e2.clone(), z.clone(), e4.clone(), z.clone()],
        vec![e3.clone(), e4.clone(), z.clone(), z.clone()],
        vec![e4.clone(), z.clone(), z.clone(), z.clone()],
    ];
    make_structure_constants(
        &[2, 2, 2, 2],
        &prods,
        &[1, 0, 0, 0],
        Some(&["1", "x", "y", "xy"]),
        "F2[x,y]/(x^2,y^2)",
    )
    .expect("preset tables are consistent")
}

/// F_2[x,y]/((x,y)^3, x^2+y^2): order 32 with basis 1, x, y, x^2, xy and
/// y^2 = x^2. Both Rx and Ry sit minimally over (x^2, xy), so the element
/// pair (x^2, xy) has no unique gcd and the star condition is undefined
/// here.
pub fn preset_f2xy_cubic() -> FiniteRing {
    let z = vec![0, 0, 0, 0, 0];
    let e1 = vec![1, 0, 0, 0, 0];
    let e2 = vec![0, 1, 0, 0, 0];
    let e3 = vec![0, 0, 1, 0, 0];
    let e4 = vec![0, 0, 0, 1, 0];
    let e5 = vec![0, 0, 0, 0, 1];
    let prods = vec![
        vec![e1.clone(), e2.clone(), e3.clone(), e4.clone(), e5.clone()],
        vec![e2.clone(), e4.clone(), e5.clone(), z.clone(), z.clone()],
        vec![e3.clone(), e5.clone(), e4.clone(), z.clone(), z.clone()],
        vec![e4.clone(), z.clone(), z.clone(), z.clone(), z.clone()],
        vec![e5.clone(), z.clone(), z.clone(), z.clone(), z.clone()],
    ];
    make_structure_constants(
        &[2, 2, 2, 2, 2],
        &prods,
        &[1, 0, 0, 0, 0],
        Some(&["1", "x", "y", "x^2", "xy"]),
        "F2[x,y]/((x,y)^3,x^2+y^2)",
    )
    .expect("preset tables are consistent")
}

/// The four preset rings, in corpus order.
pub fn presets() -> Vec<FiniteRing> {
    vec![
        preset_f2xy_mod_square(),
        preset_z4_sqrt2(),
        preset_f2xy_mod_squares(),
        preset_f2xy_cubic(),
    ]
}

fn build_extra(ex: &ExtraRing) -> Result<FiniteRing, CorpusError> {
    let names: Option<Vec<&str>> = ex
        .gen_names
        .as_ref()
        .map(|ns| ns.iter().map(String::as_str).collect());
    Ok(make_structure_constants(
        &ex.divisors,
        &ex.gen_products,
        &ex.one,
        names.as_deref(),
        &ex.label,
    )?)
}

/// Generate the corpus in deterministic order: modular rings ascending,
/// then products, then polynomial quotients, then presets, then extras.
/// Presets are fixed rings and ignore `max_order`; everything is held to
/// the hard cap.
pub fn build_corpus(spec: &CorpusSpec) -> Result<Vec<FiniteRing>, CorpusError> {
    if spec.max_order > ORDER_CAP {
        return Err(CorpusError::OrderCapExceeded(spec.max_order));
    }
    let mut rings: Vec<FiniteRing> = Vec::new();
    if spec.zmods {
        for n in 2..=spec.max_order {
            rings.push(make_zmod(n)?);
        }
    }
    if spec.products {
        for a in 2..=spec.max_order {
            if a * a > spec.max_order {
                break;
            }
            for b in a..=spec.max_order / a {
                rings.push(make_product(&[make_zmod(a)?, make_zmod(b)?])?);
            }
        }
    }
    if spec.poly_quotients {
        for p in 2..=spec.max_order as u64 {
            if !is_prime(p) {
                continue;
            }
            for d in 2..=3u32 {
                if (p as usize).pow(d) > spec.max_order {
                    break;
                }
                rings.push(make_poly_quotient(
                    p as u32,
                    &find_irreducible_poly(p as u32, d)?,
                )?);
                let mut chain = vec![0u32; d as usize + 1];
                chain[d as usize] = 1;
                rings.push(make_poly_quotient(p as u32, &chain)?);
            }
        }
    }
    if spec.presets {
        rings.extend(presets());
    }
    for ex in &spec.extra {
        rings.push(build_extra(ex)?);
    }
    for r in &rings {
        if r.order() > ORDER_CAP {
            return Err(CorpusError::OrderCapExceeded(r.order()));
        }
    }
    let mut seen = HashSet::new();
    for r in &rings {
        if !seen.insert(r.provenance().to_string()) {
            return Err(CorpusError::DuplicateProvenance(
                r.provenance().to_string(),
            ));
        }
    }
    Ok(rings)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_corpus_contents() {
        let rings = build_corpus(&CorpusSpec::default()).unwrap();
        let names: Vec<&str> = rings.iter().map(|r| r.provenance()).collect();
        for expected in [
            "Z/2",
            "Z/32",
            "Z/2 x Z/3",
            "F2[x]/(x^2+x+1)",
            "F2[x]/(x^2)",
            "F3[x]/(x^3)",
            "F2[x,y]/(x,y)^2",
            "Z4[x]/(x^2-2,2x)",
            "F2[x,y]/(x^2,y^2)",
            "F2[x,y]/((x,y)^3,x^2+y^2)",
        ] {
            assert!(names.contains(&expected), "missing {expected}");
        }
        assert!(!names.contains(&"Z/33"));
        // Zmods ascending first, products next, quotients, then presets.
        let z32 = names.iter().position(|&n| n == "Z/32").unwrap();
        let prod = names.iter().position(|&n| n == "Z/2 x Z/2").unwrap();
        let f4 = names.iter().position(|&n| n == "F2[x]/(x^2+x+1)").unwrap();
        let preset = names.iter().position(|&n| n == "F2[x,y]/(x,y)^2").unwrap();
        assert!(z32 < prod && prod < f4 && f4 < preset);
        assert_eq!(names.len(), 75);
    }

    #[test]
    fn zmod_only_small() {
        let spec = CorpusSpec {
            max_order: 8,
            products: false,
            poly_quotients: false,
            presets: false,
            ..CorpusSpec::default()
        };
        let rings = build_corpus(&spec).unwrap();
        let names: Vec<&str> = rings.iter().map(|r| r.provenance()).collect();
        assert_eq!(names, ["Z/2", "Z/3", "Z/4", "Z/5", "Z/6", "Z/7", "Z/8"]);
    }

    #[test]
    fn cap_enforced() {
        let spec = CorpusSpec {
            max_order: 100,
            ..CorpusSpec::default()
        };
        assert!(matches!(
            build_corpus(&spec),
            Err(CorpusError::OrderCapExceeded(100))
        ));
    }

    #[test]
    fn duplicate_provenance_rejected() {
        let clash = ExtraRing {
            label: "Z/4".into(),
            divisors: vec![4],
            gen_products: vec![vec![vec![1]]],
            one: vec![1],
            gen_names: None,
        };
        let spec = CorpusSpec {
            max_order: 8,
            products: false,
            poly_quotients: false,
            presets: false,
            extra: vec![clash],
            ..CorpusSpec::default()
        };
        assert!(matches!(
            build_corpus(&spec),
            Err(CorpusError::DuplicateProvenance(p)) if p == "Z/4"
        ));
    }

    #[test]
    fn extra_ring_built_from_config_json() {
        let json = r#"{
            "max_order": 4,
            "products": false,
            "poly_quotients": false,
            "presets": false,
            "extra": [{
                "label": "F2[e]/(e^2)",
                "divisors": [2, 2],
                "gen_products": [[[1,0],[0,1]],[[0,1],[0,0]]],
                "one": [1, 0],
                "gen_names": ["1", "e"]
            }]
        }"#;
        let spec: CorpusSpec = serde_json::from_str(json).unwrap();
        assert!(spec.zmods, "absent toggles default on");
        let rings = build_corpus(&spec).unwrap();
        let last = rings.last().unwrap();
        assert_eq!(last.provenance(), "F2[e]/(e^2)");
        assert_eq!(last.order(), 4);
        assert_eq!(last.units().len(), 2);
    }

    #[test]
    fn presets_validate_and_have_expected_orders() {
        let ps = presets();
        assert_eq!(
            ps.iter().map(|r| r.order()).collect::<Vec<_>>(),
            [8, 8, 16, 32]
        );
        for r in &ps {
            r.validate().unwrap();
        }
        // The square-root-of-two ring is a chain ring: x generates the
        // maximal ideal and x^2 = 2.
        let r = &ps[1];
        let x = r.element_by_name("x").unwrap();
        let two = r.element_by_name("2").unwrap();
        assert_eq!(r.mul(x, x), two);
        let zero = r.zero();
        assert_eq!(r.add(x, x), zero);
    }
}
