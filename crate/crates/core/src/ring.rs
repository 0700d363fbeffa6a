//! Finite commutative rings with identity, represented by dense operation
//! tables over element indices `0..order`.

use sha2::{Digest, Sha256};
use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Arc;
use thiserror::Error;

static NEXT_RING_ID: AtomicU64 = AtomicU64::new(1);

/// Ring axiom names used in validation failure reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RingAxiom {
    TableRange,
    AddCommutative,
    AddAssociative,
    ZeroIdentity,
    AdditiveInverse,
    MulCommutative,
    MulAssociative,
    OneIdentity,
    Distributive,
}

impl fmt::Display for RingAxiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            RingAxiom::TableRange => "table entry out of range",
            RingAxiom::AddCommutative => "addition commutativity",
            RingAxiom::AddAssociative => "addition associativity",
            RingAxiom::ZeroIdentity => "zero identity",
            RingAxiom::AdditiveInverse => "additive inverse",
            RingAxiom::MulCommutative => "multiplication commutativity",
            RingAxiom::MulAssociative => "multiplication associativity",
            RingAxiom::OneIdentity => "one identity",
            RingAxiom::Distributive => "distributivity",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RingError {
    #[error("modulus must be at least 1")]
    InvalidModulus,
    #[error("product requires at least one factor")]
    EmptyProduct,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("invalid polynomial: {0}")]
    InvalidPolynomial(String),
    #[error("tables do not define a commutative ring: {axiom} fails at {witness:?}")]
    NotARing {
        axiom: RingAxiom,
        witness: (usize, usize, usize),
    },
    #[error("structure constants malformed: {0}")]
    BadStructure(String),
}

struct RingInner {
    id: u64,
    order: usize,
    add: Vec<u32>,
    mul: Vec<u32>,
    neg: Vec<u32>,
    zero: usize,
    one: usize,
    names: Vec<String>,
    provenance: String,
}

/// A finite commutative ring. Cheap to clone; all state is shared.
#[derive(Clone)]
pub struct FiniteRing {
    inner: Arc<RingInner>,
}

impl fmt::Debug for FiniteRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "FiniteRing({}, order {})",
            self.inner.provenance, self.inner.order
        )
    }
}

impl PartialEq for FiniteRing {
    fn eq(&self, other: &Self) -> bool {
        self.inner.id == other.inner.id
    }
}
impl Eq for FiniteRing {}

/// An element of a specific ring, carried as (ring id, index).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RingElement {
    pub ring_id: u64,
    pub index: usize,
}

impl FiniteRing {
    /// Builds a ring from raw tables. The caller vouches for the axioms;
    /// `validate` performs the full scan when that is in doubt.
    pub(crate) fn from_parts(
        order: usize,
        add: Vec<u32>,
        mul: Vec<u32>,
        zero: usize,
        one: usize,
        names: Vec<String>,
        provenance: String,
    ) -> Result<Self, RingError> {
        assert!(order >= 1);
        assert_eq!(add.len(), order * order);
        assert_eq!(mul.len(), order * order);
        assert_eq!(names.len(), order);
        for &v in add.iter().chain(mul.iter()) {
            if v as usize >= order {
                return Err(RingError::NotARing {
                    axiom: RingAxiom::TableRange,
                    witness: (v as usize, 0, 0),
                });
            }
        }
        let mut neg = vec![u32::MAX; order];
        for a in 0..order {
            for b in 0..order {
                if add[a * order + b] as usize == zero {
                    neg[a] = b as u32;
                    break;
                }
            }
            if neg[a] == u32::MAX {
                return Err(RingError::NotARing {
                    axiom: RingAxiom::AdditiveInverse,
                    witness: (a, 0, 0),
                });
            }
        }
        Ok(FiniteRing {
            inner: Arc::new(RingInner {
                id: NEXT_RING_ID.fetch_add(1, Ordering::Relaxed),
                order,
                add,
                mul,
                neg,
                zero,
                one,
                names,
                provenance,
            }),
        })
    }

    pub fn id(&self) -> u64 {
        self.inner.id
    }

    pub fn order(&self) -> usize {
        self.inner.order
    }

    pub fn zero(&self) -> usize {
        self.inner.zero
    }

    pub fn one(&self) -> usize {
        self.inner.one
    }

    pub fn provenance(&self) -> &str {
        &self.inner.provenance
    }

    pub fn name(&self, i: usize) -> &str {
        &self.inner.names[i]
    }

    pub fn names(&self) -> &[String] {
        &self.inner.names
    }

    pub fn element(&self, i: usize) -> RingElement {
        assert!(i < self.inner.order);
        RingElement {
            ring_id: self.inner.id,
            index: i,
        }
    }

    pub fn element_by_name(&self, name: &str) -> Option<usize> {
        let want = name.trim();
        self.inner.names.iter().position(|n| n == want)
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.inner.add[a * self.inner.order + b] as usize
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.inner.mul[a * self.inner.order + b] as usize
    }

    #[inline]
    pub fn neg(&self, a: usize) -> usize {
        self.inner.neg[a] as usize
    }

    pub fn pow(&self, a: usize, n: u32) -> usize {
        let mut acc = self.inner.one;
        for _ in 0..n {
            acc = self.mul(acc, a);
        }
        acc
    }

    /// Full axiom scan over all element triples.
    pub fn validate(&self) -> Result<(), RingError> {
        let m = self.inner.order;
        let fail = |axiom, witness| Err(RingError::NotARing { axiom, witness });
        for a in 0..m {
            if self.add(self.inner.zero, a) != a {
                return fail(RingAxiom::ZeroIdentity, (a, 0, 0));
            }
            if self.mul(self.inner.one, a) != a {
                return fail(RingAxiom::OneIdentity, (a, 0, 0));
            }
            for b in 0..m {
                if self.add(a, b) != self.add(b, a) {
                    return fail(RingAxiom::AddCommutative, (a, b, 0));
                }
                if self.mul(a, b) != self.mul(b, a) {
                    return fail(RingAxiom::MulCommutative, (a, b, 0));
                }
                for c in 0..m {
                    if self.add(self.add(a, b), c) != self.add(a, self.add(b, c)) {
                        return fail(RingAxiom::AddAssociative, (a, b, c));
                    }
                    if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                        return fail(RingAxiom::MulAssociative, (a, b, c));
                    }
                    if self.mul(a, self.add(b, c)) != self.add(self.mul(a, b), self.mul(a, c)) {
                        return fail(RingAxiom::Distributive, (a, b, c));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn inverse(&self, a: usize) -> Option<usize> {
        (0..self.inner.order).find(|&b| self.mul(a, b) == self.inner.one)
    }

    pub fn is_unit(&self, a: usize) -> bool {
        self.inverse(a).is_some()
    }

    pub fn units(&self) -> Vec<usize> {
        (0..self.inner.order).filter(|&a| self.is_unit(a)).collect()
    }

    /// True when the ring has no zero divisors and 0 != 1.
    pub fn is_domain(&self) -> bool {
        let z = self.inner.zero;
        if self.inner.order < 2 {
            return false;
        }
        for a in 0..self.inner.order {
            if a == z {
                continue;
            }
            for b in 0..self.inner.order {
                if b != z && self.mul(a, b) == z {
                    return false;
                }
            }
        }
        true
    }

    /// Content hash of the operation tables; identical tables hash alike
    /// regardless of provenance.
    pub fn table_digest(&self) -> String {
        let mut h = Sha256::new();
        h.update((self.inner.order as u64).to_le_bytes());
        h.update((self.inner.zero as u64).to_le_bytes());
        h.update((self.inner.one as u64).to_le_bytes());
        for &v in &self.inner.add {
            h.update(v.to_le_bytes());
        }
        for &v in &self.inner.mul {
            h.update(v.to_le_bytes());
        }
        hex::encode(h.finalize())
    }
}

/// The ring of integers modulo `n`. `n = 1` yields the zero ring.
pub fn make_zmod(n: usize) -> Result<FiniteRing, RingError> {
    if n == 0 {
        return Err(RingError::InvalidModulus);
    }
    let mut add = Vec::with_capacity(n * n);
    let mut mul = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            add.push(((a + b) % n) as u32);
            mul.push(((a * b) % n) as u32);
        }
    }
    let names = (0..n).map(|a| a.to_string()).collect();
    let one = if n == 1 { 0 } else { 1 };
    FiniteRing::from_parts(n, add, mul, 0, one, names, format!("Z/{n}"))
}

/// Componentwise product of the given rings.
pub fn make_product(factors: &[FiniteRing]) -> Result<FiniteRing, RingError> {
    if factors.is_empty() {
        return Err(RingError::EmptyProduct);
    }
    let order: usize = factors.iter().map(|r| r.order()).product();
    let k = factors.len();
    // Mixed-radix index, first factor slowest.
    let decode = |mut idx: usize| -> Vec<usize> {
        let mut coords = vec![0; k];
        for j in (0..k).rev() {
            let m = factors[j].order();
            coords[j] = idx % m;
            idx /= m;
        }
        coords
    };
    let encode = |coords: &[usize]| -> usize {
        let mut idx = 0;
        for (j, &c) in coords.iter().enumerate() {
            idx = idx * factors[j].order() + c;
        }
        idx
    };
    let mut add = Vec::with_capacity(order * order);
    let mut mul = Vec::with_capacity(order * order);
    let coords: Vec<Vec<usize>> = (0..order).map(decode).collect();
    for a in 0..order {
        for b in 0..order {
            let sa: Vec<usize> = (0..k)
                .map(|j| factors[j].add(coords[a][j], coords[b][j]))
                .collect();
            let sm: Vec<usize> = (0..k)
                .map(|j| factors[j].mul(coords[a][j], coords[b][j]))
                .collect();
            add.push(encode(&sa) as u32);
            mul.push(encode(&sm) as u32);
        }
    }
    let names = coords
        .iter()
        .map(|c| {
            let parts: Vec<&str> = (0..k).map(|j| factors[j].name(c[j])).collect();
            format!("({})", parts.join(","))
        })
        .collect();
    let zero = encode(&factors.iter().map(|r| r.zero()).collect::<Vec<_>>());
    let one = encode(&factors.iter().map(|r| r.one()).collect::<Vec<_>>());
    let provenance = factors
        .iter()
        .map(|r| {
            let p = r.provenance();
            if p.contains(" x ") {
                format!("({p})")
            } else {
                p.to_string()
            }
        })
        .collect::<Vec<_>>()
        .join(" x ");
    FiniteRing::from_parts(order, add, mul, zero, one, names, provenance)
}

/// A ring presented by structure constants: the additive group is
/// `Z/d_1 x ... x Z/d_k` with standard generators `e_1..e_k`, and
/// `gen_products[i][j]` gives the coordinates of `e_i * e_j`. Multiplication
/// extends bilinearly; the full axiom scan runs before the ring is returned.
///
/// `gen_names`, when given, names elements as linear combinations of the
/// generators instead of coordinate tuples. `label` becomes the provenance.
pub fn make_structure_constants(
    divisors: &[u32],
    gen_products: &[Vec<Vec<u32>>],
    one: &[u32],
    gen_names: Option<&[&str]>,
    label: &str,
) -> Result<FiniteRing, RingError> {
    let k = divisors.len();
    if k == 0 {
        return Err(RingError::BadStructure("no divisors".into()));
    }
    if divisors.iter().any(|&d| d == 0) {
        return Err(RingError::BadStructure("zero divisor entry".into()));
    }
    if gen_products.len() != k
        || gen_products.iter().any(|row| row.len() != k)
        || gen_products
            .iter()
            .flatten()
            .any(|coords| coords.len() != k)
    {
        return Err(RingError::BadStructure(
            "generator product table must be k x k coordinate tuples".into(),
        ));
    }
    if one.len() != k {
        return Err(RingError::BadStructure("one must have k coordinates".into()));
    }
    if let Some(names) = gen_names {
        if names.len() != k {
            return Err(RingError::BadStructure("need one name per generator".into()));
        }
    }

    let order: usize = divisors.iter().map(|&d| d as usize).product();
    // Mixed-radix, first coordinate fastest, so (1,0,..,0) has index 1.
    let decode = |mut idx: usize| -> Vec<u32> {
        let mut c = vec![0u32; k];
        for (j, &d) in divisors.iter().enumerate() {
            c[j] = (idx % d as usize) as u32;
            idx /= d as usize;
        }
        c
    };
    let encode = |c: &[u32]| -> usize {
        let mut idx = 0usize;
        for j in (0..k).rev() {
            idx = idx * divisors[j] as usize + c[j] as usize;
        }
        idx
    };
    let coords: Vec<Vec<u32>> = (0..order).map(decode).collect();
    let add_coords = |a: &[u32], b: &[u32]| -> Vec<u32> {
        (0..k).map(|j| (a[j] + b[j]) % divisors[j]).collect()
    };

    let e_prod: Vec<Vec<usize>> = gen_products
        .iter()
        .map(|row| row.iter().map(|c| encode(c)).collect())
        .collect();
    let mut add = Vec::with_capacity(order * order);
    for a in 0..order {
        for b in 0..order {
            add.push(encode(&add_coords(&coords[a], &coords[b])) as u32);
        }
    }
    let add_idx = |x: usize, y: usize| add[x * order + y] as usize;
    let mut mul = Vec::with_capacity(order * order);
    for a in 0..order {
        for b in 0..order {
            let mut acc = 0usize; // index of the zero tuple
            for i in 0..k {
                for j in 0..k {
                    let reps = coords[a][i] as u64 * coords[b][j] as u64;
                    for _ in 0..reps {
                        acc = add_idx(acc, e_prod[i][j]);
                    }
                }
            }
            mul.push(acc as u32);
        }
    }

    let names: Vec<String> = match gen_names {
        Some(gn) => coords.iter().map(|c| combo_name(c, gn)).collect(),
        None => coords
            .iter()
            .map(|c| {
                let parts: Vec<String> = c.iter().map(|v| v.to_string()).collect();
                format!("({})", parts.join(","))
            })
            .collect(),
    };
    let one_idx = encode(one);
    let ring = FiniteRing::from_parts(order, add, mul, 0, one_idx, names, label.to_string())?;
    ring.validate()?;
    Ok(ring)
}

/// Renders a coordinate tuple as a sum of named generators, e.g. `1+x+2y`.
fn combo_name(coords: &[u32], gen_names: &[&str]) -> String {
    let mut terms = Vec::new();
    for (c, name) in coords.iter().zip(gen_names) {
        match c {
            0 => {}
            1 if *name == "1" => terms.push("1".to_string()),
            1 => terms.push(name.to_string()),
            c if *name == "1" => terms.push(c.to_string()),
            c => terms.push(format!("{c}{name}")),
        }
    }
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join("+")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zmod_basics() {
        let r = make_zmod(6).unwrap();
        assert_eq!(r.order(), 6);
        assert_eq!(r.add(4, 5), 3);
        assert_eq!(r.mul(4, 5), 2);
        assert_eq!(r.neg(2), 4);
        assert!(r.validate().is_ok());
        assert_eq!(r.units(), vec![1, 5], "unit count of Z/6 is 2");
        assert_eq!(r.element_by_name("4"), Some(4));
    }

    #[test]
    fn zmod_zero_rejected() {
        assert_eq!(make_zmod(0).unwrap_err(), RingError::InvalidModulus);
    }

    #[test]
    fn zmod_one_is_zero_ring() {
        let r = make_zmod(1).unwrap();
        assert_eq!(r.order(), 1);
        assert_eq!(r.zero(), r.one());
        assert!(r.validate().is_ok());
    }

    #[test]
    fn product_of_z2_z3() {
        let r2 = make_zmod(2).unwrap();
        let r3 = make_zmod(3).unwrap();
        let p = make_product(&[r2, r3]).unwrap();
        assert_eq!(p.order(), 6);
        assert_eq!(p.provenance(), "Z/2 x Z/3");
        assert!(p.validate().is_ok());
        // (1,1) is the identity and generates everything additively.
        let one = p.one();
        assert_eq!(p.name(one), "(1,1)");
        let mut seen = vec![false; 6];
        let mut cur = p.zero();
        for _ in 0..6 {
            seen[cur] = true;
            cur = p.add(cur, one);
        }
        assert!(seen.iter().all(|&s| s));
    }

    #[test]
    fn empty_product_rejected() {
        assert_eq!(make_product(&[]).unwrap_err(), RingError::EmptyProduct);
    }

    #[test]
    fn structure_constants_dual_numbers() {
        // F_2[x,y]/(x,y)^2: e1 = 1, e2 = x, e3 = y, all degree-2 products vanish.
        let z = vec![0, 0, 0];
        let e2 = vec![0, 1, 0];
        let e3 = vec![0, 0, 1];
        let e1 = vec![1, 0, 0];
        let prods = vec![
            vec![e1.clone(), e2.clone(), e3.clone()],
            vec![e2.clone(), z.clone(), z.clone()],
            vec![e3.clone(), z.clone(), z.clone()],
        ];
        let r = make_structure_constants(
            &[2, 2, 2],
            &prods,
            &[1, 0, 0],
            Some(&["1", "x", "y"]),
            "F2[x,y]/(x,y)^2",
        )
        .unwrap();
        assert_eq!(r.order(), 8);
        let x = r.element_by_name("x").unwrap();
        let y = r.element_by_name("y").unwrap();
        assert_eq!(r.mul(x, x), r.zero());
        assert_eq!(r.mul(x, y), r.zero());
        assert_eq!(r.name(r.add(x, y)), "x+y");
        assert_eq!(r.units().len(), 4);
    }

    #[test]
    fn structure_constants_bad_mult_rejected() {
        // e2 * e2 = e1 with e2 of additive order 2 and e1 of order 4 breaks
        // distributivity: (e2 + e2) * e2 = 0 but e2*e2 + e2*e2 = 2*e1 != 0.
        let e1 = vec![1, 0];
        let e2 = vec![0, 1];
        let prods = vec![vec![e1.clone(), e2.clone()], vec![e2.clone(), e1.clone()]];
        let err = make_structure_constants(&[4, 2], &prods, &[1, 0], None, "bad").unwrap_err();
        match err {
            RingError::NotARing { .. } => {}
            other => panic!("expected axiom failure, got {other:?}"),
        }
    }

    #[test]
    fn domain_detection() {
        assert!(make_zmod(5).unwrap().is_domain());
        assert!(!make_zmod(6).unwrap().is_domain());
        assert!(!make_zmod(1).unwrap().is_domain());
    }

    #[test]
    fn digest_ignores_provenance() {
        let a = make_zmod(4).unwrap();
        let b = make_zmod(4).unwrap();
        assert_ne!(a.id(), b.id());
        assert_eq!(a.table_digest(), b.table_digest());
    }
}
