//! Dense polynomials over the prime field F_p.
//!
//! Coefficients are stored in ascending order (constant term first) and kept
//! trimmed: the zero polynomial is the empty vector.

use alloc::vec;
use alloc::vec::Vec;

use super::prime::{inv_mod, mul_mod};

/// Remove trailing zero coefficients.
pub fn trim(mut a: Vec<u32>) -> Vec<u32> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

/// Degree of `a`, `None` for the zero polynomial.
pub fn degree(a: &[u32]) -> Option<usize> {
    a.iter().rposition(|&c| c != 0)
}

fn reduce_coeffs(p: u32, a: &[u32]) -> Vec<u32> {
    trim(a.iter().map(|&c| c % p).collect())
}

pub fn add(p: u32, a: &[u32], b: &[u32]) -> Vec<u32> {
    let len = a.len().max(b.len());
    let mut out = vec![0u32; len];
    for (i, o) in out.iter_mut().enumerate() {
        let x = a.get(i).copied().unwrap_or(0) as u64;
        let y = b.get(i).copied().unwrap_or(0) as u64;
        *o = ((x + y) % p as u64) as u32;
    }
    trim(out)
}

pub fn sub(p: u32, a: &[u32], b: &[u32]) -> Vec<u32> {
    let len = a.len().max(b.len());
    let mut out = vec![0u32; len];
    for (i, o) in out.iter_mut().enumerate() {
        let x = a.get(i).copied().unwrap_or(0) as u64;
        let y = b.get(i).copied().unwrap_or(0) as u64 % p as u64;
        *o = ((x + p as u64 - y) % p as u64) as u32;
    }
    trim(out)
}

pub fn mul(p: u32, a: &[u32], b: &[u32]) -> Vec<u32> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + mul_mod(x, y, p) as u64) % p as u64;
        }
    }
    trim(out.into_iter().map(|c| c as u32).collect())
}

/// Quotient and remainder of `a / b`. Panics if `b` is zero.
pub fn div_rem(p: u32, a: &[u32], b: &[u32]) -> (Vec<u32>, Vec<u32>) {
    let b = reduce_coeffs(p, b);
    let db = degree(&b).expect("division by the zero polynomial");
    let mut r = reduce_coeffs(p, a);
    let lead_inv = inv_mod(b[db], p);
    let mut q = vec![0u32; r.len().saturating_sub(db).max(1)];
    while let Some(dr) = degree(&r) {
        if dr < db {
            break;
        }
        let coef = mul_mod(r[dr], lead_inv, p);
        let shift = dr - db;
        q[shift] = coef;
        for (i, &bc) in b.iter().enumerate() {
            let t = mul_mod(coef, bc, p);
            r[i + shift] = (r[i + shift] + p - t) % p;
        }
        r = trim(r);
    }
    (trim(q), r)
}

pub fn rem(p: u32, a: &[u32], b: &[u32]) -> Vec<u32> {
    div_rem(p, a, b).1
}

/// Scale so that the leading coefficient is 1. The zero polynomial is returned unchanged.
pub fn monic(p: u32, a: &[u32]) -> Vec<u32> {
    let a = reduce_coeffs(p, a);
    match degree(&a) {
        None => a,
        Some(d) => {
            let inv = inv_mod(a[d], p);
            a.iter().map(|&c| mul_mod(c, inv, p)).collect()
        }
    }
}

/// Monic greatest common divisor over F_p (Euclid).
///
/// `gcd(0, 0)` is the zero polynomial.
pub fn gcd(p: u32, a: &[u32], b: &[u32]) -> Vec<u32> {
    let mut x = reduce_coeffs(p, a);
    let mut y = reduce_coeffs(p, b);
    while !y.is_empty() {
        let r = rem(p, &x, &y);
        x = y;
        y = r;
    }
    monic(p, &x)
}

/// `base^e mod modulus`.
pub fn pow_mod(p: u32, base: &[u32], mut e: u64, modulus: &[u32]) -> Vec<u32> {
    let mut result = rem(p, &[1], modulus);
    let mut b = rem(p, base, modulus);
    while e > 0 {
        if e & 1 == 1 {
            result = rem(p, &mul(p, &result, &b), modulus);
        }
        b = rem(p, &mul(p, &b, &b), modulus);
        e >>= 1;
    }
    result
}

/// `x^(p^k) mod modulus`, computed by `k` successive p-th powers.
pub fn x_pow_p_pow(p: u32, k: u32, modulus: &[u32]) -> Vec<u32> {
    let mut h = rem(p, &[0, 1], modulus);
    for _ in 0..k {
        h = pow_mod(p, &h, p as u64, modulus);
    }
    h
}

/// `x^n - 1` over F_p.
pub fn x_pow_minus_one(p: u32, n: usize) -> Vec<u32> {
    let mut v = vec![0u32; n + 1];
    v[0] = p - 1;
    v[n] = 1;
    if n == 0 {
        return Vec::new();
    }
    v
}
