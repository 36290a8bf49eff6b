//! Exact arithmetic in Z[eps_p] = Z[x]/Phi_p(x).
//!
//! A [`CycInt`] stores the coefficients of `1, eps, ..., eps^(p-2)`; the
//! power `eps^(p-1)` is eliminated through `1 + eps + ... + eps^(p-1) = 0`,
//! which makes the representation unique. For `p = 2` this is a single
//! integer (`eps_2 = -1`).
//!
//! Moduli are never taken as real numbers. A coefficient `w` has modulus
//! `p^(m/2)` exactly when `w * conj(G)^m = sigma * p^m * eps^t` for the
//! quadratic Gauss sum `G`, a sign `sigma` and some `t`, and that identity is
//! checked inside the ring.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CycError {
    MixedP { left: u32, right: u32 },
    /// The operation needs an odd prime.
    EvenPrime,
    /// The value does not have modulus `p^(m/2)`.
    NotBentCoefficient,
    Overflow,
}

impl fmt::Display for CycError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CycError::MixedP { left, right } => {
                write!(f, "cannot combine elements of Z[eps_{left}] and Z[eps_{right}]")
            }
            CycError::EvenPrime => write!(f, "operation requires an odd prime"),
            CycError::NotBentCoefficient => write!(f, "value is not a unit multiple of p^(m/2)"),
            CycError::Overflow => write!(f, "integer overflow in Z[eps_p] arithmetic"),
        }
    }
}

impl core::error::Error for CycError {}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CycInt {
    p: u32,
    coeffs: Vec<i64>,
}

#[inline]
fn width(p: u32) -> usize {
    (p as usize - 1).max(1)
}

impl CycInt {
    pub fn zero(p: u32) -> Self {
        CycInt { p, coeffs: vec![0; width(p)] }
    }

    pub fn from_int(p: u32, c: i64) -> Self {
        let mut z = Self::zero(p);
        z.coeffs[0] = c;
        z
    }

    pub fn one(p: u32) -> Self {
        Self::from_int(p, 1)
    }

    /// `eps_p^k`.
    pub fn eps_pow(p: u32, k: u64) -> Self {
        let mut counts = vec![0i64; p as usize];
        counts[(k % p as u64) as usize] = 1;
        Self::from_exponent_counts(p, &counts)
    }

    /// `sum_j counts[j] * eps^j` for a length-`p` vector (an element of
    /// Z[x]/(x^p - 1)), reduced modulo Phi_p.
    pub fn from_exponent_counts(p: u32, counts: &[i64]) -> Self {
        debug_assert_eq!(counts.len(), p as usize);
        let top = counts[p as usize - 1];
        let coeffs = counts[..width(p)]
            .iter()
            .map(|&c| c - top)
            .collect::<Vec<_>>();
        CycInt { p, coeffs }
    }

    /// Canonical coefficients of `1, eps, ..., eps^(p-2)` (a single entry for p = 2).
    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn from_coeffs(p: u32, coeffs: &[i64]) -> Option<Self> {
        (coeffs.len() == width(p)).then(|| CycInt { p, coeffs: coeffs.to_vec() })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// The rational integer this element equals, if it is one.
    pub fn as_integer(&self) -> Option<i64> {
        self.coeffs[1..].iter().all(|&c| c == 0).then_some(self.coeffs[0])
    }

    /// Length-`p` unreduced form with a zero `eps^(p-1)` slot.
    fn spread(&self) -> Vec<i64> {
        let mut v = vec![0i64; self.p as usize];
        if self.p == 2 {
            v[0] = self.coeffs[0];
        } else {
            v[..self.coeffs.len()].copy_from_slice(&self.coeffs);
        }
        v
    }

    fn check_p(&self, other: &CycInt) -> Result<(), CycError> {
        if self.p == other.p {
            Ok(())
        } else {
            Err(CycError::MixedP { left: self.p, right: other.p })
        }
    }

    pub fn checked_add(&self, other: &CycInt) -> Result<CycInt, CycError> {
        self.check_p(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(&a, &b)| a.checked_add(b).ok_or(CycError::Overflow))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(CycInt { p: self.p, coeffs })
    }

    pub fn checked_sub(&self, other: &CycInt) -> Result<CycInt, CycError> {
        self.check_p(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(&a, &b)| a.checked_sub(b).ok_or(CycError::Overflow))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(CycInt { p: self.p, coeffs })
    }

    pub fn checked_mul(&self, other: &CycInt) -> Result<CycInt, CycError> {
        self.check_p(other)?;
        let p = self.p as usize;
        let (a, b) = (self.spread(), other.spread());
        let mut acc = vec![0i64; p];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                let t = x.checked_mul(y).ok_or(CycError::Overflow)?;
                let slot = &mut acc[(i + j) % p];
                *slot = slot.checked_add(t).ok_or(CycError::Overflow)?;
            }
        }
        Ok(Self::from_exponent_counts(self.p, &acc))
    }

    pub fn scale(&self, c: i64) -> CycInt {
        CycInt {
            p: self.p,
            coeffs: self.coeffs.iter().map(|&x| x.checked_mul(c).expect("overflow in Z[eps_p]")).collect(),
        }
    }

    /// `self * eps^k`.
    pub fn rotate(&self, k: u64) -> CycInt {
        let p = self.p as usize;
        let v = self.spread();
        let mut out = vec![0i64; p];
        for (j, &c) in v.iter().enumerate() {
            out[(j + (k % p as u64) as usize) % p] = c;
        }
        Self::from_exponent_counts(self.p, &out)
    }

    /// Complex conjugation `eps -> eps^(-1)`.
    pub fn conj(&self) -> CycInt {
        let p = self.p as usize;
        let v = self.spread();
        let mut out = vec![0i64; p];
        for (j, &c) in v.iter().enumerate() {
            out[(p - j) % p] = c;
        }
        Self::from_exponent_counts(self.p, &out)
    }

    /// `self * conj(self)`, the squared modulus (a real element).
    pub fn norm_sq(&self) -> CycInt {
        self * &self.conj()
    }

    pub fn pow(&self, mut e: u32) -> CycInt {
        let mut acc = CycInt::one(self.p);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Evaluate at `eps = exp(2 pi i / p)` given `cos`/`sin` tables of the
    /// p-th roots of unity. Kept table-driven so this crate needs no libm.
    pub fn embed_with(&self, cos: &[f64], sin: &[f64]) -> (f64, f64) {
        self.spread()
            .iter()
            .enumerate()
            .fold((0.0, 0.0), |(re, im), (j, &c)| (re + c as f64 * cos[j], im + c as f64 * sin[j]))
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl<'a> $trait<&'a CycInt> for &'a CycInt {
            type Output = CycInt;
            fn $method(self, rhs: &'a CycInt) -> CycInt {
                self.$checked(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl $trait for CycInt {
            type Output = CycInt;
            fn $method(self, rhs: CycInt) -> CycInt {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);

impl Neg for &CycInt {
    type Output = CycInt;
    fn neg(self) -> CycInt {
        self.scale(-1)
    }
}

impl Neg for CycInt {
    type Output = CycInt;
    fn neg(self) -> CycInt {
        self.scale(-1)
    }
}

/// The quadratic Gauss sum `G = sum_{c in F_p} eps^(c^2)`.
pub fn gauss_sum(p: u32) -> Result<CycInt, CycError> {
    if p == 2 {
        return Err(CycError::EvenPrime);
    }
    let mut counts = vec![0i64; p as usize];
    for c in 0..p as u64 {
        counts[(c * c % p as u64) as usize] += 1;
    }
    Ok(CycInt::from_exponent_counts(p, &counts))
}

/// A fourth root of unity, reported symbolically.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Unit {
    One,
    MinusOne,
    I,
    MinusI,
}

impl Unit {
    pub fn is_real(self) -> bool {
        matches!(self, Unit::One | Unit::MinusOne)
    }

    /// `+1` for `1` and `i`, `-1` for `-1` and `-i`.
    pub fn sign(self) -> i8 {
        match self {
            Unit::One | Unit::I => 1,
            Unit::MinusOne | Unit::MinusI => -1,
        }
    }

    pub fn times_sign(self, s: i8) -> Unit {
        if s >= 0 {
            self
        } else {
            match self {
                Unit::One => Unit::MinusOne,
                Unit::MinusOne => Unit::One,
                Unit::I => Unit::MinusI,
                Unit::MinusI => Unit::I,
            }
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Unit::One => "+1",
            Unit::MinusOne => "-1",
            Unit::I => "+i",
            Unit::MinusI => "-i",
        }
    }
}

impl fmt::Display for Unit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

/// The unit `u` with `G^m = u * p^(m/2)`: `G = sqrt(p)` for `p = 1 mod 4`
/// and `G = i sqrt(p)` for `p = 3 mod 4`.
pub fn gauss_unit(p: u32, m: u32) -> Unit {
    if p % 4 == 1 {
        return Unit::One;
    }
    match m % 4 {
        0 => Unit::One,
        1 => Unit::I,
        2 => Unit::MinusOne,
        _ => Unit::MinusI,
    }
}

/// Decomposition of a coefficient of modulus `p^(m/2)`.
///
/// With `u = gauss_unit(p, m)`, the coefficient equals
/// `sigma * u * p^(m/2) * eps^eps_exp`. The displayed form
/// `display_sign * [i] * p^(m/2) * eps^eps_exp` folds the sign of `u` into
/// `display_sign`, so `i` appears exactly when `u` is imaginary.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NormalizedCoeff {
    pub sigma: i8,
    pub eps_exp: u32,
    pub unit: Unit,
}

impl NormalizedCoeff {
    pub fn display_sign(&self) -> i8 {
        self.sigma * self.unit.sign()
    }

    /// The per-coefficient unit `zeta_b = sigma * u`.
    pub fn zeta(&self) -> Unit {
        self.unit.times_sign(self.sigma)
    }
}

/// Classify `w` as `sigma * u(p,m) * p^(m/2) * eps^t` by checking
/// `w * conj(G)^m = sigma * p^m * eps^t` exactly (p odd).
pub fn normalize_coeff(w: &CycInt, m: u32) -> Result<NormalizedCoeff, CycError> {
    let p = w.p();
    let g = gauss_sum(p)?;
    let scaled = w.checked_mul(&g.conj().pow(m))?;
    let pm = (p as i64).checked_pow(m).ok_or(CycError::Overflow)?;
    let c = scaled.coeffs();
    let unit = gauss_unit(p, m);
    let nonzero: Vec<(usize, i64)> = c.iter().copied().enumerate().filter(|&(_, x)| x != 0).collect();
    // eps^t for t < p-1 is a basis vector; eps^(p-1) = -(1 + ... + eps^(p-2))
    if let [(t, v)] = nonzero.as_slice() {
        if v.abs() == pm {
            return Ok(NormalizedCoeff { sigma: v.signum() as i8, eps_exp: *t as u32, unit });
        }
    }
    if nonzero.len() == c.len() && c.iter().all(|&x| x == c[0]) && c[0].abs() == pm {
        return Ok(NormalizedCoeff { sigma: -c[0].signum() as i8, eps_exp: p - 1, unit });
    }
    Err(CycError::NotBentCoefficient)
}

/// Sort key and rendering data for spectrum values.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum ValueClass {
    /// `sign * [i] * p^(m/2) * eps^t`.
    Normalized { sign: i8, m: u32, eps_exp: u32 },
    Zero,
    Raw(Vec<i64>),
}

fn exact_log(p: u32, mut v: i64) -> Option<u32> {
    if v <= 0 {
        return None;
    }
    let mut m = 0;
    while v % p as i64 == 0 {
        v /= p as i64;
        m += 1;
    }
    (v == 1).then_some(m)
}

/// Determine how a value renders: by its exact modulus `p^(m/2)` when it
/// has one.
pub fn value_class(w: &CycInt) -> ValueClass {
    if w.is_zero() {
        return ValueClass::Zero;
    }
    let p = w.p();
    if p == 2 {
        let v = w.coeffs()[0];
        return match exact_log(2, v.abs()) {
            Some(half) => ValueClass::Normalized { sign: v.signum() as i8, m: 2 * half, eps_exp: 0 },
            None => ValueClass::Raw(w.coeffs().to_vec()),
        };
    }
    let m = w.norm_sq().as_integer().and_then(|nrm| exact_log(p, nrm));
    match m.map(|m| (m, normalize_coeff(w, m))) {
        Some((m, Ok(nc))) => ValueClass::Normalized { sign: nc.display_sign(), m, eps_exp: nc.eps_exp },
        _ => ValueClass::Raw(w.coeffs().to_vec()),
    }
}

/// Canonical display string, e.g. `-8`, `-9*eps^1`, `3^{3/2}*i`,
/// `-3^{3/2}*i*eps^2`; values without such a form print their raw
/// coefficient vector.
pub fn render_value(w: &CycInt) -> String {
    render_class(w.p(), &value_class(w))
}

pub fn render_class(p: u32, class: &ValueClass) -> String {
    match class {
        ValueClass::Zero => String::from("0"),
        ValueClass::Raw(c) => format!("{c:?}").replace(' ', ""),
        ValueClass::Normalized { sign, m, eps_exp } => {
            let mut s = String::new();
            if *sign < 0 {
                s.push('-');
            }
            if m % 2 == 0 {
                s.push_str(&format!("{}", (p as i64).pow(m / 2)));
            } else {
                s.push_str(&format!("{p}^{{{m}/2}}"));
            }
            if p != 2 && !gauss_unit(p, *m).is_real() {
                s.push_str("*i");
            }
            if *eps_exp != 0 {
                s.push_str(&format!("*eps^{eps_exp}"));
            }
            s
        }
    }
}
