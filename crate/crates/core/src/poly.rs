//! Polynomials over prime fields and quotient rings `F_p[x]/(f)`.
//!
//! Coefficient vectors are ascending: index `i` holds the coefficient of
//! `x^i`. Elements of a quotient of degree `d` are encoded as
//! `sum c_i * p^i`, so index 0 is the zero polynomial and index `p` is `x`.

use crate::ring::{FiniteRing, RingError};

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn trim(mut v: Vec<u32>) -> Vec<u32> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn poly_mul(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u32; a.len() + b.len() - 1];
    for (i, &ai) in a.iter().enumerate() {
        for (j, &bj) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + ai * bj) % p;
        }
    }
    trim(out)
}

fn poly_add(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let n = a.len().max(b.len());
    let mut out = vec![0u32; n];
    for i in 0..n {
        let ai = a.get(i).copied().unwrap_or(0);
        let bi = b.get(i).copied().unwrap_or(0);
        out[i] = (ai + bi) % p;
    }
    trim(out)
}

/// Remainder of `num` modulo monic `den`.
fn poly_rem(num: &[u32], den: &[u32], p: u32) -> Vec<u32> {
    debug_assert_eq!(den.last(), Some(&1));
    let d = den.len() - 1;
    let mut r: Vec<u32> = num.to_vec();
    while r.len() > d {
        let lead = *r.last().unwrap();
        let shift = r.len() - 1 - d;
        if lead != 0 {
            for (i, &c) in den.iter().enumerate() {
                let idx = shift + i;
                r[idx] = (r[idx] + p * p - (lead * c) % p) % p;
            }
        }
        r.pop();
    }
    trim(r)
}

fn divides(den: &[u32], num: &[u32], p: u32) -> bool {
    poly_rem(num, den, p).is_empty()
}

/// Renders an ascending coefficient vector in descending powers,
/// e.g. `[1, 1, 1]` becomes `x^2+x+1`.
pub fn poly_name(coeffs: &[u32]) -> String {
    let mut terms = Vec::new();
    for (k, &c) in coeffs.iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        terms.push(match (k, c) {
            (0, c) => c.to_string(),
            (1, 1) => "x".to_string(),
            (1, c) => format!("{c}x"),
            (k, 1) => format!("x^{k}"),
            (k, c) => format!("{c}x^{k}"),
        });
    }
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join("+")
    }
}

fn decode_poly(mut idx: usize, p: u32, d: usize) -> Vec<u32> {
    let mut c = vec![0u32; d];
    for slot in c.iter_mut() {
        *slot = (idx % p as usize) as u32;
        idx /= p as usize;
    }
    c
}

fn encode_poly(coeffs: &[u32], p: u32) -> usize {
    let mut idx = 0usize;
    for &c in coeffs.iter().rev() {
        idx = idx * p as usize + c as usize;
    }
    idx
}

/// First monic irreducible of degree `d` over `F_p`, in ascending order of
/// the base-`p` encoding of the non-leading coefficients.
pub fn find_irreducible_poly(p: u32, d: u32) -> Result<Vec<u32>, RingError> {
    if !is_prime(p as u64) {
        return Err(RingError::NotPrime(p as u64));
    }
    if d == 0 {
        return Err(RingError::InvalidPolynomial("degree must be positive".into()));
    }
    let d = d as usize;
    let count = (p as usize).pow(d as u32);
    'cand: for low in 0..count {
        let mut f = decode_poly(low, p, d);
        f.push(1);
        // Trial division by every monic polynomial of degree 1..=d/2.
        for gd in 1..=d / 2 {
            for glow in 0..(p as usize).pow(gd as u32) {
                let mut g = decode_poly(glow, p, gd);
                g.push(1);
                if divides(&g, &f, p) {
                    continue 'cand;
                }
            }
        }
        // Any nontrivial factorization has a factor of degree <= d/2, so the
        // first survivor is irreducible. For d == 1 the divisor loop is empty
        // and the first candidate, x itself, is returned.
        return Ok(f);
    }
    unreachable!("an irreducible of every degree exists over F_p")
}

/// The quotient `F_p[x]/(f)` for monic `f` of positive degree.
pub fn make_poly_quotient(p: u32, f: &[u32]) -> Result<FiniteRing, RingError> {
    if !is_prime(p as u64) {
        return Err(RingError::NotPrime(p as u64));
    }
    if f.len() < 2 {
        return Err(RingError::InvalidPolynomial(
            "modulus must have degree at least 1".into(),
        ));
    }
    if *f.last().unwrap() != 1 {
        return Err(RingError::InvalidPolynomial("modulus must be monic".into()));
    }
    if f.iter().any(|&c| c >= p) {
        return Err(RingError::InvalidPolynomial(format!(
            "coefficients must lie below {p}"
        )));
    }
    let d = f.len() - 1;
    let order = (p as usize).pow(d as u32);
    let polys: Vec<Vec<u32>> = (0..order).map(|i| decode_poly(i, p, d)).collect();
    let mut add = Vec::with_capacity(order * order);
    let mut mul = Vec::with_capacity(order * order);
    for a in &polys {
        for b in &polys {
            add.push(encode_poly(&poly_add(a, b, p), p) as u32);
            let prod = poly_rem(&poly_mul(a, b, p), f, p);
            mul.push(encode_poly(&prod, p) as u32);
        }
    }
    let names = polys.iter().map(|c| poly_name(c)).collect();
    let provenance = format!("F{p}[x]/({})", poly_name(f));
    FiniteRing::from_parts(order, add, mul, 0, 1, names, provenance)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes() {
        let got: Vec<u64> = (0..20).filter(|&n| is_prime(n)).collect();
        assert_eq!(got, vec![2, 3, 5, 7, 11, 13, 17, 19]);
    }

    #[test]
    fn first_irreducibles() {
        // Over F_2: x^2+x+1 is the unique irreducible quadratic.
        assert_eq!(find_irreducible_poly(2, 2).unwrap(), vec![1, 1, 1]);
        // Over F_2 the first cubic by encoding is x^3+x+1 (low part 011 -> 3).
        assert_eq!(find_irreducible_poly(2, 3).unwrap(), vec![1, 1, 0, 1]);
        // Over F_3: x^2+1 has no root mod 3.
        assert_eq!(find_irreducible_poly(3, 2).unwrap(), vec![1, 0, 1]);
        assert_eq!(find_irreducible_poly(4, 2).unwrap_err(), RingError::NotPrime(4));
    }

    #[test]
    fn f4_is_a_field() {
        let f = find_irreducible_poly(2, 2).unwrap();
        let r = make_poly_quotient(2, &f).unwrap();
        assert_eq!(r.order(), 4);
        assert!(r.validate().is_ok());
        assert!(r.is_domain());
        assert_eq!(r.units().len(), 3);
        assert_eq!(r.provenance(), "F2[x]/(x^2+x+1)");
        let x = r.element_by_name("x").unwrap();
        assert_eq!(r.name(r.mul(x, x)), "x+1");
    }

    #[test]
    fn chain_ring_x_squared() {
        let r = make_poly_quotient(2, &[0, 0, 1]).unwrap();
        assert_eq!(r.provenance(), "F2[x]/(x^2)");
        assert!(r.validate().is_ok());
        let x = r.element_by_name("x").unwrap();
        assert_eq!(r.mul(x, x), r.zero());
        assert_eq!(r.units().len(), 2);
    }

    #[test]
    fn malformed_moduli_rejected() {
        assert!(matches!(
            make_poly_quotient(2, &[1]),
            Err(RingError::InvalidPolynomial(_))
        ));
        assert!(matches!(
            make_poly_quotient(2, &[1, 2, 1]),
            Err(RingError::InvalidPolynomial(_))
        ));
        assert!(matches!(
            make_poly_quotient(2, &[1, 1, 0]),
            Err(RingError::InvalidPolynomial(_))
        ));
        assert!(matches!(
            make_poly_quotient(6, &[1, 1]),
            Err(RingError::NotPrime(6))
        ));
    }

    #[test]
    fn name_rendering() {
        assert_eq!(poly_name(&[]), "0");
        assert_eq!(poly_name(&[2]), "2");
        assert_eq!(poly_name(&[0, 1]), "x");
        assert_eq!(poly_name(&[1, 2, 1]), "x^2+2x+1");
    }
}
