//! Finite vector spaces over residue fields: the cotangent space M/M^2 with
//! its surjection from M, abstract spaces over prime fields, subspace
//! enumeration, and the line/hyperplane splitting construction.

use crate::bitset::BitSet;
use crate::ideal::ideal_product;
use crate::lattice::{lattice_cmp, IdealLattice};
use crate::quotient::make_quotient;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum VsError {
    #[error("splitting needs dimension at least 2")]
    DimensionTooSmall,
    #[error("subspace must be nonzero and proper")]
    ImproperSubspace,
    #[error("ideal is not maximal")]
    NotMaximal,
}

/// Surjection from the elements of M onto vector indices of M/M^2.
#[derive(Debug, Clone)]
pub struct Surjection {
    pub ring_id: u64,
    /// Ring element index to vector index; None outside M.
    pub map: Vec<Option<usize>>,
}

/// A finite vector space of dimension `dim` over a field of order `q`.
/// Vectors are indexed by their little-endian base-q coordinate tuples, so
/// index 0 is the origin and coordinates are scalar indices.
#[derive(Debug, Clone)]
pub struct FinVectorSpace {
    q: usize,
    dim: usize,
    scalar_add: Vec<u32>,
    scalar_mul: Vec<u32>,
    surjection: Option<Surjection>,
}

impl FinVectorSpace {
    /// Space over the prime field Z/q.
    pub fn prime(q: usize, dim: usize) -> FinVectorSpace {
        assert!(crate::poly::is_prime(q as u64), "scalar order must be prime");
        let mut scalar_add = Vec::with_capacity(q * q);
        let mut scalar_mul = Vec::with_capacity(q * q);
        for a in 0..q {
            for b in 0..q {
                scalar_add.push(((a + b) % q) as u32);
                scalar_mul.push(((a * b) % q) as u32);
            }
        }
        FinVectorSpace {
            q,
            dim,
            scalar_add,
            scalar_mul,
            surjection: None,
        }
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Number of vectors, q^dim.
    pub fn len(&self) -> usize {
        self.q.pow(self.dim as u32)
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn surjection(&self) -> Option<&Surjection> {
        self.surjection.as_ref()
    }

    #[inline]
    fn sadd(&self, a: usize, b: usize) -> usize {
        self.scalar_add[a * self.q + b] as usize
    }

    #[inline]
    fn smul(&self, a: usize, b: usize) -> usize {
        self.scalar_mul[a * self.q + b] as usize
    }

    pub fn coords(&self, mut v: usize) -> Vec<usize> {
        let mut c = vec![0; self.dim];
        for slot in c.iter_mut() {
            *slot = v % self.q;
            v /= self.q;
        }
        c
    }

    pub fn encode(&self, coords: &[usize]) -> usize {
        let mut v = 0;
        for &c in coords.iter().rev() {
            v = v * self.q + c;
        }
        v
    }

    pub fn vadd(&self, u: usize, v: usize) -> usize {
        let (cu, cv) = (self.coords(u), self.coords(v));
        let sum: Vec<usize> = cu
            .iter()
            .zip(&cv)
            .map(|(&a, &b)| self.sadd(a, b))
            .collect();
        self.encode(&sum)
    }

    pub fn vscale(&self, s: usize, v: usize) -> usize {
        let cv = self.coords(v);
        let out: Vec<usize> = cv.iter().map(|&c| self.smul(s, c)).collect();
        self.encode(&out)
    }

    /// Least subspace containing the generators. Seeding with every scalar
    /// multiple makes additive closure suffice.
    pub fn span(&self, gens: &[usize]) -> BitSet {
        let mut set = BitSet::empty(self.len());
        set.insert(0);
        let mut work = Vec::new();
        for &g in gens {
            for s in 0..self.q {
                let m = self.vscale(s, g);
                if !set.contains(m) {
                    set.insert(m);
                    work.push(m);
                }
            }
        }
        while let Some(x) = work.pop() {
            for y in set.iter().collect::<Vec<_>>() {
                let s = self.vadd(x, y);
                if !set.contains(s) {
                    set.insert(s);
                    work.push(s);
                }
            }
        }
        set
    }

    pub fn is_subspace(&self, mask: &BitSet) -> bool {
        if !mask.contains(0) {
            return false;
        }
        let members: Vec<usize> = mask.iter().collect();
        for &a in &members {
            for &b in &members {
                if !mask.contains(self.vadd(a, b)) {
                    return false;
                }
            }
            for s in 0..self.q {
                if !mask.contains(self.vscale(s, a)) {
                    return false;
                }
            }
        }
        true
    }

    /// Every subspace, each generated exactly once from its reduced
    /// row-echelon basis; sorted by (size, numeric mask).
    pub fn all_subspaces(&self) -> Vec<BitSet> {
        let n = self.dim;
        let mut out = Vec::new();
        let mut zero = BitSet::empty(self.len());
        zero.insert(0);
        out.push(zero);
        for k in 1..=n {
            for pivots in combinations(n, k) {
                // Free cells: row i, column j with j > pivots[i] and j not
                // itself a pivot column.
                let mut free: Vec<(usize, usize)> = Vec::new();
                for (i, &p) in pivots.iter().enumerate() {
                    for j in p + 1..n {
                        if !pivots.contains(&j) {
                            free.push((i, j));
                        }
                    }
                }
                let count = self.q.pow(free.len() as u32);
                for mut assignment in 0..count {
                    let mut rows = vec![vec![0usize; n]; k];
                    for (i, &p) in pivots.iter().enumerate() {
                        rows[i][p] = 1;
                    }
                    for &(i, j) in &free {
                        rows[i][j] = assignment % self.q;
                        assignment /= self.q;
                    }
                    let gens: Vec<usize> = rows.iter().map(|r| self.encode(r)).collect();
                    out.push(self.span(&gens));
                }
            }
        }
        out.sort_by(lattice_cmp);
        out
    }
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// The cotangent space M/M^2 as a vector space over R/M, with the
/// projection from M recorded.
pub fn m_mod_m2(lat: &IdealLattice, m_idx: usize) -> Result<FinVectorSpace, VsError> {
    if !lat.classification(m_idx).is_maximal {
        return Err(VsError::NotMaximal);
    }
    let ring = lat.ring();
    let m_ideal = lat.ideal(m_idx);
    let (field, field_hom) =
        make_quotient(ring, m_ideal).expect("maximal ideal failed the quotient");
    let q = field.order();
    assert_eq!(field.zero(), 0, "residue field zero must sit at index 0");
    assert_eq!(field.one(), 1, "residue field one must sit at index 1");
    // Least lift of each scalar.
    let mut lift = vec![usize::MAX; q];
    for e in (0..ring.order()).rev() {
        lift[field_hom.apply(e)] = e;
    }

    let m2 = ideal_product(ring, m_ideal, m_ideal).unwrap();
    // Coset of e modulo M^2, by least representative.
    let rep = |e: usize| -> usize {
        m2.members
            .iter()
            .map(|k| ring.add(e, k))
            .min()
            .expect("empty ideal")
    };

    let cosets = m_ideal.count() / m2.count();
    let dim = if cosets == 1 {
        0
    } else {
        let mut d = 0u32;
        let mut c = cosets;
        while c > 1 {
            assert_eq!(c % q, 0, "coset count must be a power of the field order");
            c /= q;
            d += 1;
        }
        d as usize
    };

    // Greedy basis over the members of M in ascending element order,
    // tracking the coordinates of every spanned coset.
    let mut coord_of: std::collections::HashMap<usize, Vec<usize>> =
        std::collections::HashMap::new();
    coord_of.insert(rep(ring.zero()), vec![0; dim]);
    let mut basis: Vec<usize> = Vec::new();
    for e in m_ideal.members.iter() {
        let r = rep(e);
        if coord_of.contains_key(&r) {
            continue;
        }
        let j = basis.len();
        basis.push(e);
        let snapshot: Vec<(usize, Vec<usize>)> =
            coord_of.iter().map(|(k, v)| (*k, v.clone())).collect();
        for (s_rep, s_coords) in snapshot {
            for c in 1..q {
                let shifted = rep(ring.add(s_rep, ring.mul(lift[c], e)));
                let mut coords = s_coords.clone();
                coords[j] = c;
                coord_of.entry(shifted).or_insert(coords);
            }
        }
    }
    assert_eq!(basis.len(), dim, "basis size disagrees with the dimension");
    assert_eq!(coord_of.len(), cosets, "span missed a coset");

    let mut scalar_add = Vec::with_capacity(q * q);
    let mut scalar_mul = Vec::with_capacity(q * q);
    for a in 0..q {
        for b in 0..q {
            scalar_add.push(field.add(a, b) as u32);
            scalar_mul.push(field.mul(a, b) as u32);
        }
    }
    let space = FinVectorSpace {
        q,
        dim,
        scalar_add,
        scalar_mul,
        surjection: None,
    };
    let mut map = vec![None; ring.order()];
    for e in m_ideal.members.iter() {
        let coords = &coord_of[&rep(e)];
        map[e] = Some(space.encode(coords));
    }
    Ok(FinVectorSpace {
        surjection: Some(Surjection {
            ring_id: ring.id(),
            map,
        }),
        ..space
    })
}

/// Output of the splitting construction: the chosen line, the hyperplane,
/// and the witnesses behind them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VsSplit {
    /// Least vector outside W.
    pub u_gen: usize,
    /// Coefficient tuple of the chosen functional, encoded like a vector.
    pub functional: usize,
    pub u: BitSet,
    pub h: BitSet,
}

/// Splits V as a line plus a hyperplane, neither containing W: take the
/// least vector u outside W, then the least linear functional sending u to
/// 1 without vanishing on W; the line is span(u) and the hyperplane its
/// kernel.
pub fn vs_split(v: &FinVectorSpace, w: &BitSet) -> Result<VsSplit, VsError> {
    if v.dim < 2 {
        return Err(VsError::DimensionTooSmall);
    }
    let total = v.len();
    assert!(v.is_subspace(w), "splitting requires a subspace");
    if w.count() <= 1 || w.count() == total {
        return Err(VsError::ImproperSubspace);
    }
    let u_gen = (0..total)
        .find(|&x| !w.contains(x))
        .expect("proper subspace misses some vector");
    let u = v.span(&[u_gen]);

    let apply = |a: usize, x: usize| -> usize {
        let (ca, cx) = (v.coords(a), v.coords(x));
        let mut acc = 0;
        for (i, &ai) in ca.iter().enumerate() {
            acc = v.sadd(acc, v.smul(ai, cx[i]));
        }
        acc
    };
    let w_members: Vec<usize> = w.iter().collect();
    let functional = (1..total)
        .find(|&a| apply(a, u_gen) == 1 && w_members.iter().any(|&x| apply(a, x) != 0))
        .expect("a functional separating u from W always exists");
    let mut h = BitSet::empty(total);
    for x in 0..total {
        if apply(functional, x) == 0 {
            h.insert(x);
        }
    }
    Ok(VsSplit {
        u_gen,
        functional,
        u,
        h,
    })
}

/// The four contract conditions of the split, checked directly.
pub fn split_postconditions_hold(
    v: &FinVectorSpace,
    w: &BitSet,
    split: &VsSplit,
) -> bool {
    let line = split.u.count() == v.q;
    let hyper = split.h.count() == v.len() / v.q;
    let meet_trivial = split.u.intersection(&split.h).count() == 1;
    // A line and a hyperplane meeting only at 0 span everything.
    let direct = line && hyper && meet_trivial;
    let w_not_in_u = !w.is_subset(&split.u);
    let w_not_in_h = !w.is_subset(&split.h);
    direct && w_not_in_u && w_not_in_h
}
