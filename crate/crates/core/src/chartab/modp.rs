//! Arithmetic in `F_ℓ` for word-sized primes `ℓ < 2^32`.

use crate::catalog::is_prime;
use crate::error::CharTableError;

/// Moduli are kept below this bound so products fit in `u64`.
pub const MODULUS_SEARCH_BOUND: u64 = 1 << 32;

#[inline]
pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    a * b % m
}

#[inline]
pub fn add_mod(a: u64, b: u64, m: u64) -> u64 {
    let s = a + b;
    if s >= m {
        s - m
    } else {
        s
    }
}

#[inline]
pub fn sub_mod(a: u64, b: u64, m: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + m - b
    }
}

pub fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Inverse of a nonzero residue modulo a prime.
pub fn inv_mod(a: u64, p: u64) -> u64 {
    debug_assert!(!a.is_multiple_of(p));
    pow_mod(a, p - 2, p)
}

/// Square root modulo an odd prime by Tonelli–Shanks. Returns `None` for
/// non-residues.
pub fn sqrt_mod(a: u64, p: u64) -> Option<u64> {
    let a = a % p;
    if a == 0 {
        return Some(0);
    }
    if p == 2 {
        return Some(a);
    }
    if pow_mod(a, (p - 1) / 2, p) != 1 {
        return None;
    }
    // p - 1 = q * 2^s with q odd
    let mut q = p - 1;
    let mut s = 0u32;
    while q.is_multiple_of(2) {
        q /= 2;
        s += 1;
    }
    if s == 1 {
        return Some(pow_mod(a, (p + 1) / 4, p));
    }
    let z = (2..p)
        .find(|&z| pow_mod(z, (p - 1) / 2, p) == p - 1)
        .expect("odd prime has a non-residue");
    let mut m = s;
    let mut c = pow_mod(z, q, p);
    let mut t = pow_mod(a, q, p);
    let mut r = pow_mod(a, q.div_ceil(2), p);
    while t != 1 {
        // least i with t^(2^i) = 1
        let mut i = 0;
        let mut t2 = t;
        while t2 != 1 {
            t2 = mul_mod(t2, t2, p);
            i += 1;
        }
        let b = pow_mod(c, 1 << (m - i - 1), p);
        m = i;
        c = mul_mod(b, b, p);
        t = mul_mod(t, c, p);
        r = mul_mod(r, b, p);
    }
    Some(r)
}

/// Smallest prime `ℓ ≡ 1 (mod exponent)` with `ℓ > 2·⌈√order⌉`.
pub fn choose_modulus(exponent: u64, order: u64) -> Result<u64, CharTableError> {
    let floor = 2 * ceil_sqrt(order);
    let mut ell = exponent + 1;
    while ell <= floor {
        ell += exponent;
    }
    while ell < MODULUS_SEARCH_BOUND {
        if is_prime(ell) {
            return Ok(ell);
        }
        ell += exponent;
    }
    Err(CharTableError::NoModulus(MODULUS_SEARCH_BOUND))
}

pub fn floor_sqrt(n: u64) -> u64 {
    let mut r = (n as f64).sqrt() as u64;
    while r * r > n {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    r
}

pub fn ceil_sqrt(n: u64) -> u64 {
    let r = floor_sqrt(n);
    if r * r == n {
        r
    } else {
        r + 1
    }
}
