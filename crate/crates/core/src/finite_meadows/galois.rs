//! `GF(p^m)` as polynomials over `Z/p` of degree `< m`, reduced modulo the
//! least monic irreducible polynomial of degree `m`.

use crate::arith::is_prime;
use crate::error::{Error, Result};
use crate::structures::{check_size, Elem, FiniteStructure, DEFAULT_CARRIER_BOUND};

// Polynomials are coefficient vectors, lowest degree first, without
// trailing zeros (the zero polynomial is empty).
type Poly = Vec<u64>;

fn trim(mut a: Poly) -> Poly {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn inv_mod(a: u64, p: u64) -> u64 {
    // p is prime and a != 0 mod p.
    let mut acc = 1;
    let (mut base, mut exp) = (a % p, p - 2);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

fn sub(a: &[u64], b: &[u64], p: u64) -> Poly {
    let n = a.len().max(b.len());
    trim(
        (0..n)
            .map(|i| (a.get(i).unwrap_or(&0) + p - b.get(i).unwrap_or(&0) % p) % p)
            .collect(),
    )
}

fn mul(a: &[u64], b: &[u64], p: u64) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    trim(out)
}

fn divmod(a: &[u64], d: &[u64], p: u64) -> (Poly, Poly) {
    let d = trim(d.to_vec());
    assert!(!d.is_empty(), "division by the zero polynomial");
    let lead_inv = inv_mod(*d.last().expect("non-empty"), p);
    let mut rem = trim(a.to_vec());
    let mut quot = vec![0; rem.len().saturating_sub(d.len()) + 1];
    while rem.len() >= d.len() {
        let shift = rem.len() - d.len();
        let c = rem.last().expect("non-empty") * lead_inv % p;
        quot[shift] = c;
        for (i, &di) in d.iter().enumerate() {
            rem[shift + i] = (rem[shift + i] + p - c * di % p) % p;
        }
        rem = trim(rem);
    }
    (trim(quot), rem)
}

fn decode(mut idx: u64, p: u64, m: u32) -> Poly {
    let mut c = Vec::with_capacity(m as usize);
    for _ in 0..m {
        c.push(idx % p);
        idx /= p;
    }
    trim(c)
}

fn encode(a: &[u64], p: u64) -> Elem {
    a.iter().rev().fold(0u64, |acc, &c| acc * p + c) as Elem
}

/// Monic polynomial of degree `d` whose lower coefficients spell `idx` in base `p`.
fn monic(idx: u64, p: u64, d: u32) -> Poly {
    let mut c: Poly = (0..d)
        .scan(idx, |r, _| {
            let digit = *r % p;
            *r /= p;
            Some(digit)
        })
        .collect();
    c.push(1);
    c
}

fn is_irreducible(f: &[u64], p: u64, m: u32) -> bool {
    (1..=m / 2).all(|d| (0..p.pow(d)).all(|g| !divmod(f, &monic(g, p, d), p).1.is_empty()))
}

/// The least monic irreducible polynomial of degree `m` over `Z/p`, ordered
/// by its coefficients from the highest degree down. Returned lowest
/// degree first, including the leading `1`.
pub fn least_irreducible(p: u64, m: u32) -> Result<Vec<u64>> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if m == 0 {
        return Err(Error::InvalidStructure("GF(p^m) needs m >= 1".into()));
    }
    let count = p.checked_pow(m).ok_or(Error::SizeOverflow {
        requested: u128::MAX,
        bound: DEFAULT_CARRIER_BOUND,
    })?;
    (0..count)
        .map(|r| monic(r, p, m))
        .find(|f| is_irreducible(f, p, m))
        .ok_or_else(|| Error::InvalidStructure(format!("no irreducible of degree {m} over Z/{p}")))
}

fn poly_inverse(a: &[u64], f: &[u64], p: u64) -> Poly {
    // Extended Euclid: s*a = r (mod f) throughout.
    let (mut r0, mut r1) = (f.to_vec(), trim(a.to_vec()));
    let (mut s0, mut s1): (Poly, Poly) = (Vec::new(), vec![1]);
    while !r1.is_empty() {
        let (q, r) = divmod(&r0, &r1, p);
        let s = sub(&s0, &mul(&q, &s1, p), p);
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
    }
    // r0 is a non-zero constant because f is irreducible and a != 0.
    let c = inv_mod(r0[0], p);
    divmod(&mul(&s0, &[c], p), f, p).1
}

/// `GF(p^m)` with `0^-1 = 0`. Element `i` is the polynomial whose
/// coefficients are the base-`p` digits of `i`, lowest degree first.
pub fn build_galois_field(p: u64, m: u32) -> Result<FiniteStructure> {
    let modulus = least_irreducible(p, m)?;
    let n = p.pow(m);
    check_size(n as u128, DEFAULT_CARRIER_BOUND)?;
    let polys: Vec<Poly> = (0..n).map(|i| decode(i, p, m)).collect();
    let add = |a: Elem, b: Elem| {
        let (mut x, mut y, mut out, mut place) = (a as u64, b as u64, 0u64, 1u64);
        for _ in 0..m {
            out += ((x % p + y % p) % p) * place;
            x /= p;
            y /= p;
            place *= p;
        }
        out as Elem
    };
    let neg = |a: Elem| {
        let (mut x, mut out, mut place) = (a as u64, 0u64, 1u64);
        for _ in 0..m {
            out += ((p - x % p) % p) * place;
            x /= p;
            place *= p;
        }
        out as Elem
    };
    let mul_elems = |a: Elem, b: Elem| {
        let prod = mul(&polys[a as usize], &polys[b as usize], p);
        encode(&divmod(&prod, &modulus, p).1, p)
    };
    let inv = |a: Elem| {
        if a == 0 {
            0
        } else {
            encode(&poly_inverse(&polys[a as usize], &modulus, p), p)
        }
    };
    let one = if n == 1 { 0 } else { 1 };
    FiniteStructure::from_fns(
        format!("GF({p}^{m})"),
        n as usize,
        0,
        one,
        add,
        mul_elems,
        neg,
        Some(&inv),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finite_meadows::build_prime_field;
    use crate::logic::AxiomSet;
    use crate::structures::check_axiom_set;

    #[test]
    fn least_moduli() {
        assert_eq!(least_irreducible(2, 1).unwrap(), vec![0, 1]);
        // x^2 + x + 1 and x^3 + x + 1.
        assert_eq!(least_irreducible(2, 2).unwrap(), vec![1, 1, 1]);
        assert_eq!(least_irreducible(2, 3).unwrap(), vec![1, 1, 0, 1]);
        // x^2 + 1 over Z/3.
        assert_eq!(least_irreducible(3, 2).unwrap(), vec![1, 0, 1]);
        assert_eq!(least_irreducible(4, 2), Err(Error::NotPrime(4)));
    }

    #[test]
    fn degree_one_is_prime_field() {
        assert!(build_galois_field(2, 1)
            .unwrap()
            .same_tables(&build_prime_field(2).unwrap()));
        assert!(build_galois_field(3, 1)
            .unwrap()
            .same_tables(&build_prime_field(3).unwrap()));
    }

    #[test]
    fn gf4_inverse_is_square() {
        let gf4 = build_galois_field(2, 2).unwrap();
        for x in gf4.elements() {
            assert_eq!(gf4.mul(gf4.mul(x, x), gf4.mul(x, x)), x);
            assert_eq!(gf4.inv(x).unwrap(), gf4.mul(x, x));
        }
    }

    #[test]
    fn fields_are_meadows() {
        for (p, m) in [(2, 2), (2, 3), (3, 2), (5, 2), (2, 4)] {
            let f = build_galois_field(p, m).unwrap();
            assert!(
                check_axiom_set(&f, AxiomSet::Md).unwrap().all_hold(),
                "{}",
                f.name()
            );
            assert!(f.is_zero_totalized_field());
        }
    }

    #[test]
    fn overflow() {
        assert!(matches!(
            build_galois_field(2, 40),
            Err(Error::SizeOverflow { .. })
        ));
    }
}
