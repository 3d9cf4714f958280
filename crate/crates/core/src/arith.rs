//! Exact integer helpers shared by the group model, the reduction engine and
//! the oracle.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Prime factorization by trial division, primes ascending.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p.saturating_mul(p) <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && factorize(n) == [(n, 1)]
}

pub fn big_pow(p: u64, e: u32) -> BigUint {
    num_traits::pow(BigUint::from(p), e as usize)
}

/// Exponent of `p` in a nonzero `x`.
pub fn valuation(x: &BigUint, p: u64) -> u32 {
    debug_assert!(!x.is_zero());
    let p = BigUint::from(p);
    let mut x = x.clone();
    let mut v = 0;
    loop {
        let (q, r) = x.div_rem(&p);
        if !r.is_zero() {
            return v;
        }
        x = q;
        v += 1;
    }
}

/// Exponent of `p` in a nonzero signed `x`.
pub fn valuation_signed(x: &BigInt, p: u64) -> u32 {
    valuation(x.magnitude(), p)
}

/// Inverse of `a` modulo `m`, if `gcd(a, m) = 1`.
pub fn mod_inverse(a: &BigUint, m: &BigUint) -> Option<BigUint> {
    if m.is_one() {
        return Some(BigUint::zero());
    }
    let a = BigInt::from(a % m);
    let m = BigInt::from(m.clone());
    let e = a.extended_gcd(&m);
    if !e.gcd.is_one() {
        return None;
    }
    e.x.mod_floor(&m).to_biguint()
}

/// Reduce a signed integer into `[0, m)`.
pub fn reduce_signed(x: &BigInt, m: &BigUint) -> BigUint {
    let m = BigInt::from(m.clone());
    x.mod_floor(&m)
        .to_biguint()
        .expect("mod_floor is nonnegative")
}

/// Solve `x ≡ r_i (mod m_i)` for pairwise coprime moduli; returns the
/// residue in `[0, Π m_i)`.
pub fn crt(residues: &[(BigUint, BigUint)]) -> BigUint {
    let mut acc = BigUint::zero();
    let mut modulus = BigUint::one();
    for (r, m) in residues {
        // acc + modulus * t ≡ r (mod m)
        let inv = mod_inverse(&(&modulus % m), m).expect("moduli must be pairwise coprime");
        let diff = reduce_signed(&(BigInt::from(r.clone()) - BigInt::from(acc.clone())), m);
        let t = (diff * inv) % m;
        acc += &modulus * t;
        modulus *= m;
    }
    acc
}

pub fn gcd_signed(values: &[BigInt]) -> BigUint {
    values
        .iter()
        .fold(BigInt::zero(), |g, v| g.gcd(v))
        .abs()
        .to_biguint()
        .expect("gcd is nonnegative")
}
