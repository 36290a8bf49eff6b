//! Scalar arithmetic in F_p and small integer number theory.

use alloc::vec::Vec;

use super::FieldError;

#[inline]
pub fn mul_mod(a: u32, b: u32, p: u32) -> u32 {
    ((a as u64 * b as u64) % p as u64) as u32
}

#[inline]
pub fn add_mod(a: u32, b: u32, p: u32) -> u32 {
    ((a as u64 + b as u64) % p as u64) as u32
}

#[inline]
pub fn sub_mod(a: u32, b: u32, p: u32) -> u32 {
    ((a as u64 + p as u64 - (b % p) as u64) % p as u64) as u32
}

pub fn pow_mod(mut base: u64, mut e: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = ((acc as u128 * base as u128) % m as u128) as u64;
        }
        base = ((base as u128 * base as u128) % m as u128) as u64;
        e >>= 1;
    }
    acc
}

/// Inverse of a nonzero residue modulo the prime `p`.
pub fn inv_mod(a: u32, p: u32) -> u32 {
    let a = a % p;
    assert!(a != 0, "inverse of zero in F_{p}");
    pow_mod(a as u64, p as u64 - 2, p as u64) as u32
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Distinct prime factors of `n` by trial division, ascending.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

/// Euler's criterion: is the nonzero residue `a` a square modulo the odd prime `p`?
pub fn is_square_mod_p(p: u32, a: u32) -> Result<bool, FieldError> {
    if p == 2 {
        return Err(FieldError::EvenCharacteristic);
    }
    if !is_prime(p as u64) {
        return Err(FieldError::NotPrime(p as u64));
    }
    let a = a % p;
    if a == 0 {
        return Err(FieldError::ZeroScalar);
    }
    Ok(pow_mod(a as u64, (p as u64 - 1) / 2, p as u64) == 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn squares_mod_small_primes() {
        assert_eq!(is_square_mod_p(3, 1), Ok(true));
        assert_eq!(is_square_mod_p(3, 2), Ok(false));
        // squares mod 7 by enumeration: {1, 2, 4}
        let squares: Vec<u32> = (1..7u32).map(|x| x * x % 7).collect();
        assert!(!squares.contains(&3));
        assert_eq!(is_square_mod_p(7, 3), Ok(false));
        for a in 1..7 {
            assert_eq!(is_square_mod_p(7, a), Ok(squares.contains(&a)));
        }
        assert_eq!(is_square_mod_p(2, 1), Err(FieldError::EvenCharacteristic));
        assert_eq!(is_square_mod_p(5, 0), Err(FieldError::ZeroScalar));
    }

    #[test]
    fn factoring() {
        assert_eq!(prime_factors(63), [3, 7]);
        assert_eq!(prime_factors(80), [2, 5]);
        assert_eq!(prime_factors(26), [2, 13]);
        assert!(is_prime(3) && is_prime(2) && !is_prime(1) && !is_prime(91));
    }
}
