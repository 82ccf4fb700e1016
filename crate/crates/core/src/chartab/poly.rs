//! Dense polynomials over `F_ℓ` and deterministic extraction of their
//! distinct roots.
//!
//! Coefficients are stored lowest degree first and kept trimmed.

use super::modp::{add_mod, inv_mod, mul_mod, sub_mod};

fn trim(p: &mut Vec<u64>) {
    while p.last() == Some(&0) {
        p.pop();
    }
}

fn degree(p: &[u64]) -> Option<usize> {
    if p.is_empty() {
        None
    } else {
        Some(p.len() - 1)
    }
}

fn make_monic(p: &mut [u64], m: u64) {
    if let Some(&lead) = p.last() {
        let inv = inv_mod(lead, m);
        for c in p.iter_mut() {
            *c = mul_mod(*c, inv, m);
        }
    }
}

fn rem(a: &[u64], b: &[u64], m: u64) -> Vec<u64> {
    let mut r = a.to_vec();
    trim(&mut r);
    let db = degree(b).expect("division by zero polynomial");
    let inv_lead = inv_mod(b[db], m);
    while let Some(dr) = degree(&r) {
        if dr < db {
            break;
        }
        let factor = mul_mod(r[dr], inv_lead, m);
        let shift = dr - db;
        for (i, &bc) in b.iter().enumerate() {
            r[shift + i] = sub_mod(r[shift + i], mul_mod(factor, bc, m), m);
        }
        trim(&mut r);
    }
    r
}

fn div_exact(a: &[u64], b: &[u64], m: u64) -> Vec<u64> {
    let mut r = a.to_vec();
    trim(&mut r);
    let db = degree(b).unwrap();
    let inv_lead = inv_mod(b[db], m);
    let da = degree(&r).unwrap_or(0);
    if da < db {
        return Vec::new();
    }
    let mut q = vec![0u64; da - db + 1];
    for d in (db..=da).rev() {
        let factor = mul_mod(r[d], inv_lead, m);
        q[d - db] = factor;
        if factor != 0 {
            for (i, &bc) in b.iter().enumerate() {
                r[d - db + i] = sub_mod(r[d - db + i], mul_mod(factor, bc, m), m);
            }
        }
    }
    trim(&mut q);
    q
}

fn mul(a: &[u64], b: &[u64], m: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = add_mod(out[i + j], mul_mod(x, y, m), m);
        }
    }
    trim(&mut out);
    out
}

fn gcd(a: &[u64], b: &[u64], m: u64) -> Vec<u64> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    trim(&mut x);
    trim(&mut y);
    while !y.is_empty() {
        let r = rem(&x, &y, m);
        x = y;
        y = r;
    }
    make_monic(&mut x, m);
    x
}

/// `base^e mod modulus`.
fn pow_mod_poly(base: &[u64], mut e: u64, modulus: &[u64], m: u64) -> Vec<u64> {
    let mut acc = vec![1u64];
    let mut b = rem(base, modulus, m);
    while e > 0 {
        if e & 1 == 1 {
            acc = rem(&mul(&acc, &b, m), modulus, m);
        }
        b = rem(&mul(&b, &b, m), modulus, m);
        e >>= 1;
    }
    acc
}

pub fn eval(p: &[u64], x: u64, m: u64) -> u64 {
    p.iter()
        .rev()
        .fold(0u64, |acc, &c| add_mod(mul_mod(acc, x, m), c, m))
}

/// Distinct roots of `f` in `F_m` (`m` an odd prime), ascending.
///
/// The product of the distinct linear factors is `gcd(f, x^m - x)`; it is
/// split by `gcd(g, (x + a)^((m-1)/2) - 1)` for `a = 0, 1, 2, ...`.
pub fn distinct_roots(f: &[u64], m: u64) -> Vec<u64> {
    let mut f = f.to_vec();
    trim(&mut f);
    match degree(&f) {
        None | Some(0) => return Vec::new(),
        _ => {}
    }
    make_monic(&mut f, m);
    let x = vec![0u64, 1];
    let mut xm = pow_mod_poly(&x, m, &f, m);
    // x^m - x
    if xm.len() < 2 {
        xm.resize(2, 0);
    }
    xm[1] = sub_mod(xm[1], 1, m);
    trim(&mut xm);
    let g = gcd(&f, &xm, m);
    let mut roots = Vec::new();
    split(&g, m, 0, &mut roots);
    roots.sort_unstable();
    roots
}

fn split(g: &[u64], m: u64, mut shift: u64, roots: &mut Vec<u64>) {
    match degree(g) {
        None | Some(0) => {}
        Some(1) => {
            // monic x + c -> root -c
            roots.push(sub_mod(0, g[0], m));
        }
        Some(d) => {
            if m < 64 {
                // tiny fields: evaluate everywhere
                roots.extend((0..m).filter(|&x| eval(g, x, m) == 0));
                return;
            }
            loop {
                let base = vec![shift % m, 1];
                let mut h = pow_mod_poly(&base, (m - 1) / 2, g, m);
                if h.is_empty() {
                    h.push(0);
                }
                h[0] = sub_mod(h[0], 1, m);
                trim(&mut h);
                let factor = gcd(g, &h, m);
                shift += 1;
                if let Some(df) = degree(&factor) {
                    if df > 0 && df < d {
                        let other = div_exact(g, &factor, m);
                        split(&factor, m, shift, roots);
                        split(&other, m, shift, roots);
                        return;
                    }
                }
                assert!(shift < m, "no splitting shift found");
            }
        }
    }
}
