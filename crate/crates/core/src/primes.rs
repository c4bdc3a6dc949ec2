//! Small number-theoretic helpers: primality, lcm over slices, and CRT
//! lifting for coprime moduli.

use num::bigint::BigUint;
use num::Integer;

/// Deterministic primality test for `u64` via trial division.
///
/// All primes this crate handles are desk scale (family primes, hard-instance
/// base primes), so trial division by 6k +- 1 is plenty.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    if n % 3 == 0 {
        return n == 3;
    }
    let mut d = 5u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 || n % (d + 2) == 0 {
            return false;
        }
        d += 6;
    }
    true
}

/// The first `count` primes, ascending.
pub fn first_primes(count: usize) -> Vec<u64> {
    let mut out = Vec::with_capacity(count);
    let mut n = 2u64;
    while out.len() < count {
        if is_prime(n) {
            out.push(n);
        }
        n += 1;
    }
    out
}

/// The first `count` primes that are >= `from`, ascending.
pub fn primes_from(from: u64, count: usize) -> Vec<u64> {
    let mut out = Vec::with_capacity(count);
    let mut n = from.max(2);
    while out.len() < count {
        if is_prime(n) {
            out.push(n);
        }
        n += 1;
    }
    out
}

/// lcm of a nonempty slice as a big integer.
pub fn lcm_slice(values: &[u64]) -> BigUint {
    debug_assert!(!values.is_empty());
    let mut acc = BigUint::from(1u32);
    for &v in values {
        acc = acc.lcm(&BigUint::from(v));
    }
    acc
}

/// Smallest non-negative residue `r` with `r = r1 (mod m1)` and
/// `r = r2 (mod m2)`, for coprime `m1`, `m2`.
pub fn crt_pair(r1: u64, m1: u64, r2: u64, m2: u64) -> u64 {
    debug_assert!(m1 >= 1 && m2 >= 1);
    debug_assert_eq!(num::integer::gcd(m1, m2), 1, "crt_pair needs coprime moduli");
    // r = r1 + m1 * t where t = (r2 - r1) * m1^{-1} mod m2.
    let m1_inv = mod_inverse(m1 % m2, m2);
    let diff = ((r2 % m2) + m2 - (r1 % m2)) % m2;
    let t = (u128::from(diff) * u128::from(m1_inv) % u128::from(m2)) as u64;
    r1 + m1 * t
}

/// Modular inverse of `a` modulo `m` (gcd(a, m) = 1) by extended Euclid.
fn mod_inverse(a: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let (mut old_r, mut r) = (i128::from(a), i128::from(m));
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    debug_assert_eq!(old_r, 1, "mod_inverse needs gcd(a, m) = 1");
    old_s.rem_euclid(i128::from(m)) as u64
}
