//! Greatest common divisors realized through the principal-ideal order:
//! the gcd of x and y is a generator of the unique minimal principal ideal
//! containing Rx + Ry, when that minimum exists.

use crate::ideal::ideal_span;
use crate::lattice::IdealLattice;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum StarError {
    #[error("some element pair has no unique gcd in this ring")]
    NotGcdRing,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum GcdStatus {
    /// Element index of the canonical generator (least element generating
    /// the minimal principal ideal).
    Gcd(usize),
    /// The only principal ideal containing Rx + Ry is R itself.
    Unit,
    NoUniqueGcd,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GcdOutcome {
    pub status: GcdStatus,
    /// Lattice indices of the minimal principal ideals over Rx + Ry;
    /// a singleton except in the NoUniqueGcd case.
    pub witness: Vec<usize>,
}

/// Minimal principal ideals containing Rx + Ry, resolved to a gcd when
/// unique. A unique minimal candidate is the minimum: every candidate has
/// some minimal candidate below it.
pub fn gcd_ideal(lat: &IdealLattice, x: usize, y: usize) -> GcdOutcome {
    let ring = lat.ring();
    let span = ideal_span(ring, &[x, y]);
    let span_idx = lat.index_of(&span).expect("span left the lattice");
    let candidates: Vec<usize> = lat
        .supersets_row(span_idx)
        .iter()
        .filter(|&p| lat.is_principal(p))
        .collect();
    let minimal: Vec<usize> = candidates
        .iter()
        .copied()
        .filter(|&p| !candidates.iter().any(|&p2| p2 != p && lat.lt(p2, p)))
        .collect();
    if minimal.len() != 1 {
        return GcdOutcome {
            status: GcdStatus::NoUniqueGcd,
            witness: minimal,
        };
    }
    let p = minimal[0];
    if p == lat.ring_index() {
        return GcdOutcome {
            status: GcdStatus::Unit,
            witness: vec![p],
        };
    }
    let target = &lat.ideal(p).members;
    let gen = (0..ring.order())
        .find(|&g| crate::ideal::principal_ideal(ring, g).members == *target)
        .expect("principal lattice member has a generator");
    GcdOutcome {
        status: GcdStatus::Gcd(gen),
        witness: vec![p],
    }
}

/// Gcd outcomes for every ordered element pair, flattened row-major.
pub fn gcd_table(lat: &IdealLattice) -> Vec<GcdOutcome> {
    let m = lat.ring().order();
    let mut table = Vec::with_capacity(m * m);
    for x in 0..m {
        for y in 0..m {
            table.push(gcd_ideal(lat, x, y));
        }
    }
    table
}

/// The divisor-closure condition on an ideal: whenever I lies inside the
/// principal ideal of gcd(x, y), it lies inside Rx or inside Ry. Requires
/// every pair to have a gcd.
pub fn satisfies_star(
    lat: &IdealLattice,
    table: &[GcdOutcome],
    i: usize,
) -> Result<bool, StarError> {
    let ring = lat.ring();
    let m = ring.order();
    assert_eq!(table.len(), m * m);
    if table
        .iter()
        .any(|o| o.status == GcdStatus::NoUniqueGcd)
    {
        return Err(StarError::NotGcdRing);
    }
    for x in 0..m {
        let rx = lat
            .index_of(&crate::ideal::principal_ideal(ring, x))
            .unwrap();
        for y in 0..m {
            let gcd_principal = table[x * m + y].witness[0];
            if !lat.le(i, gcd_principal) {
                continue;
            }
            let ry = lat
                .index_of(&crate::ideal::principal_ideal(ring, y))
                .unwrap();
            if !lat.le(i, rx) && !lat.le(i, ry) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
