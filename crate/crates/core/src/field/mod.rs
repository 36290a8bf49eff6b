//! Arithmetic in GF(p^n).
//!
//! Elements are coordinate vectors in the polynomial basis `1, g, ..., g^(n-1)`
//! where `g` is the class of `x` modulo a primitive polynomial. A [`FElem`]
//! packs those coordinates into one integer, least significant digit first,
//! so the packed value doubles as a dense table index and `F_p` embeds as
//! the packed values `0..p`.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

pub mod linalg;
pub mod poly;
pub mod prime;
mod subspace;

pub use prime::is_square_mod_p;
pub use subspace::{kernel_of_linearized, orthogonal_complement, InnerProduct, Subspace};

use prime::{add_mod, is_prime, mul_mod, prime_factors, sub_mod};

/// Largest field for which discrete log/exp tables are built.
pub const TABLE_LIMIT: u64 = 1 << 20;

/// Largest supported field order.
pub const MAX_FIELD_ORDER: u64 = 1 << 32;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FieldError {
    NotPrime(u64),
    /// The defining polynomial is not monic of the requested degree.
    BadPolynomial,
    NotIrreducible,
    /// Irreducible, but its root does not generate the multiplicative group.
    NotPrimitive,
    TooLarge,
    EvenCharacteristic,
    ZeroScalar,
}

impl fmt::Display for FieldError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldError::NotPrime(p) => write!(f, "{p} is not prime"),
            FieldError::BadPolynomial => {
                write!(f, "defining polynomial must be monic with length n + 1")
            }
            FieldError::NotIrreducible => write!(f, "defining polynomial is not irreducible"),
            FieldError::NotPrimitive => write!(f, "defining polynomial is not primitive"),
            FieldError::TooLarge => write!(f, "field order exceeds 2^32"),
            FieldError::EvenCharacteristic => write!(f, "operation requires odd characteristic"),
            FieldError::ZeroScalar => write!(f, "scalar must be nonzero"),
        }
    }
}

impl core::error::Error for FieldError {}

/// A field element as packed base-p coordinates.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FElem(pub u32);

impl FElem {
    pub const ZERO: FElem = FElem(0);
    pub const ONE: FElem = FElem(1);

    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

/// The fields used by the worked examples, as `(name, p, n, primitive polynomial)`.
pub const NAMED_FIELDS: &[(&str, u32, u32, &[u32])] = &[
    // x^6 + x^4 + x^3 + x + 1
    ("ex1", 2, 6, &[1, 1, 0, 1, 1, 0, 1]),
    // x^4 + 2x^3 + 2
    ("ex2", 3, 4, &[2, 0, 0, 2, 1]),
    // x^3 + 2x + 1
    ("ex3", 3, 3, &[1, 2, 0, 1]),
];

/// The ambient field F_{p^n} with its primitive element `g`.
#[derive(Clone, Debug)]
pub struct FieldCtx {
    p: u32,
    n: u32,
    q: u64,
    prim_poly: Vec<u32>,
    exp: Vec<u32>,
    log: Vec<u32>,
    trace_basis: Vec<u32>,
}

impl PartialEq for FieldCtx {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.n == other.n && self.prim_poly == other.prim_poly
    }
}

impl Eq for FieldCtx {}

impl FieldCtx {
    /// Validates `prim_poly` (ascending coefficients, monic of degree `n`) and
    /// builds the context.
    pub fn new(p: u32, n: u32, prim_poly: &[u32]) -> Result<Self, FieldError> {
        if !is_prime(p as u64) {
            return Err(FieldError::NotPrime(p as u64));
        }
        if n == 0 || prim_poly.len() != n as usize + 1 || prim_poly[n as usize] != 1 {
            return Err(FieldError::BadPolynomial);
        }
        if prim_poly.iter().any(|&c| c >= p) {
            return Err(FieldError::BadPolynomial);
        }
        let q = (p as u64)
            .checked_pow(n)
            .filter(|&q| q <= MAX_FIELD_ORDER)
            .ok_or(FieldError::TooLarge)?;
        if !is_irreducible(p, n, prim_poly) {
            return Err(FieldError::NotIrreducible);
        }
        if !root_is_primitive(p, q, prim_poly) {
            return Err(FieldError::NotPrimitive);
        }
        let mut ctx = FieldCtx {
            p,
            n,
            q,
            prim_poly: prim_poly.to_vec(),
            exp: Vec::new(),
            log: Vec::new(),
            trace_basis: Vec::new(),
        };
        if q <= TABLE_LIMIT {
            ctx.build_tables();
        }
        ctx.trace_basis = (0..n)
            .map(|j| {
                let e = ctx.basis_elem(j as usize);
                let mut acc = FElem::ZERO;
                let mut y = e;
                for _ in 0..n {
                    acc = ctx.add(acc, y);
                    y = ctx.pow(y, p as u64);
                }
                debug_assert!(acc.0 < p);
                acc.0
            })
            .collect();
        Ok(ctx)
    }

    /// One of the [`NAMED_FIELDS`].
    pub fn named(name: &str) -> Option<Self> {
        NAMED_FIELDS
            .iter()
            .find(|(nm, ..)| *nm == name)
            .map(|&(_, p, n, poly)| FieldCtx::new(p, n, poly).expect("named fields are primitive"))
    }

    /// The first primitive polynomial of degree `n` over F_p, searching monic
    /// polynomials by their packed lower coefficients in ascending order.
    pub fn with_default_poly(p: u32, n: u32) -> Result<Self, FieldError> {
        if !is_prime(p as u64) {
            return Err(FieldError::NotPrime(p as u64));
        }
        let q = (p as u64)
            .checked_pow(n)
            .filter(|&q| q <= MAX_FIELD_ORDER)
            .ok_or(FieldError::TooLarge)?;
        if n == 0 {
            return Err(FieldError::BadPolynomial);
        }
        for packed in 1..q {
            let mut poly = vec![0u32; n as usize + 1];
            let mut v = packed;
            for c in poly.iter_mut().take(n as usize) {
                *c = (v % p as u64) as u32;
                v /= p as u64;
            }
            poly[n as usize] = 1;
            if poly[0] == 0 {
                continue;
            }
            if is_irreducible(p, n, &poly) && root_is_primitive(p, q, &poly) {
                return FieldCtx::new(p, n, &poly);
            }
        }
        unreachable!("primitive polynomials exist for every degree")
    }

    fn build_tables(&mut self) {
        let order = (self.q - 1) as usize;
        let mut exp = Vec::with_capacity(order);
        let mut log = vec![u32::MAX; self.q as usize];
        let mut x = FElem::ONE;
        for k in 0..order {
            exp.push(x.0);
            log[x.index()] = k as u32;
            x = self.times_generator(x);
        }
        debug_assert_eq!(x, FElem::ONE);
        self.exp = exp;
        self.log = log;
    }

    #[inline]
    pub fn p(&self) -> u32 {
        self.p
    }

    #[inline]
    pub fn n(&self) -> u32 {
        self.n
    }

    /// Field order p^n.
    #[inline]
    pub fn order(&self) -> u64 {
        self.q
    }

    /// Field order as a table length.
    #[inline]
    pub fn size(&self) -> usize {
        self.q as usize
    }

    pub fn prim_poly(&self) -> &[u32] {
        &self.prim_poly
    }

    pub fn has_tables(&self) -> bool {
        !self.exp.is_empty()
    }

    /// All elements in packed (lexicographic coordinate) order.
    pub fn elements(&self) -> impl Iterator<Item = FElem> {
        (0..self.q as u32).map(FElem)
    }

    /// Embeds `c mod p` from the prime field.
    #[inline]
    pub fn scalar(&self, c: u32) -> FElem {
        FElem(c % self.p)
    }

    /// `g^j` for `j < n`: the j-th polynomial basis vector.
    pub fn basis_elem(&self, j: usize) -> FElem {
        debug_assert!(j < self.n as usize);
        FElem((self.p as u64).pow(j as u32) as u32)
    }

    pub fn coords(&self, x: FElem) -> Vec<u32> {
        let mut v = x.0 as u64;
        (0..self.n)
            .map(|_| {
                let d = (v % self.p as u64) as u32;
                v /= self.p as u64;
                d
            })
            .collect()
    }

    pub fn from_coords(&self, coords: &[u32]) -> FElem {
        let mut acc = 0u64;
        for &c in coords.iter().take(self.n as usize).rev() {
            acc = acc * self.p as u64 + (c % self.p) as u64;
        }
        FElem(acc as u32)
    }

    pub fn add(&self, a: FElem, b: FElem) -> FElem {
        if self.p == 2 {
            return FElem(a.0 ^ b.0);
        }
        let p = self.p as u64;
        let (mut x, mut y) = (a.0 as u64, b.0 as u64);
        let (mut acc, mut place) = (0u64, 1u64);
        while x != 0 || y != 0 {
            acc += ((x % p + y % p) % p) * place;
            x /= p;
            y /= p;
            place *= p;
        }
        FElem(acc as u32)
    }

    pub fn neg(&self, a: FElem) -> FElem {
        if self.p == 2 {
            return a;
        }
        let p = self.p as u64;
        let mut x = a.0 as u64;
        let (mut acc, mut place) = (0u64, 1u64);
        while x != 0 {
            acc += ((p - x % p) % p) * place;
            x /= p;
            place *= p;
        }
        FElem(acc as u32)
    }

    pub fn sub(&self, a: FElem, b: FElem) -> FElem {
        self.add(a, self.neg(b))
    }

    /// `c * a` for a prime-field scalar `c`.
    pub fn scale(&self, c: u32, a: FElem) -> FElem {
        let c = c % self.p;
        match c {
            0 => FElem::ZERO,
            1 => a,
            _ => {
                let coords: Vec<u32> = self.coords(a).iter().map(|&d| mul_mod(d, c, self.p)).collect();
                self.from_coords(&coords)
            }
        }
    }

    fn times_generator(&self, a: FElem) -> FElem {
        let c = self.coords(a);
        let n = self.n as usize;
        let top = c[n - 1];
        let mut out = vec![0u32; n];
        for i in (1..n).rev() {
            out[i] = c[i - 1];
        }
        for (i, o) in out.iter_mut().enumerate() {
            *o = sub_mod(*o, mul_mod(top, self.prim_poly[i], self.p), self.p);
        }
        self.from_coords(&out)
    }

    fn mul_schoolbook(&self, a: FElem, b: FElem) -> FElem {
        let prod = poly::mul(self.p, &self.coords(a), &self.coords(b));
        let r = poly::rem(self.p, &prod, &self.prim_poly);
        self.from_coords(&r)
    }

    pub fn mul(&self, a: FElem, b: FElem) -> FElem {
        if a.is_zero() || b.is_zero() {
            return FElem::ZERO;
        }
        if self.has_tables() {
            let order = self.q - 1;
            let k = (self.log[a.index()] as u64 + self.log[b.index()] as u64) % order;
            FElem(self.exp[k as usize])
        } else {
            self.mul_schoolbook(a, b)
        }
    }

    pub fn pow(&self, a: FElem, e: u64) -> FElem {
        if e == 0 {
            return FElem::ONE;
        }
        if a.is_zero() {
            return FElem::ZERO;
        }
        let order = self.q - 1;
        if self.has_tables() {
            let k = (self.log[a.index()] as u128 * (e % order) as u128 % order as u128) as usize;
            return FElem(self.exp[k]);
        }
        let mut e = e % order;
        let mut base = a;
        let mut acc = FElem::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: FElem) -> Option<FElem> {
        if a.is_zero() {
            return None;
        }
        Some(self.pow(a, self.q - 2))
    }

    /// `a^(p^k)`.
    pub fn frobenius(&self, a: FElem, k: u32) -> FElem {
        self.pow(a, (self.p as u64).pow(k % self.n))
    }

    /// The primitive element `g`.
    pub fn generator(&self) -> FElem {
        self.times_generator(FElem::ONE)
    }

    /// `g^k`.
    pub fn exp(&self, k: u64) -> FElem {
        if self.has_tables() {
            FElem(self.exp[(k % (self.q - 1)) as usize])
        } else {
            self.pow(self.generator(), k)
        }
    }

    /// Discrete logarithm to base `g`; `None` for zero or when tables are absent.
    pub fn log(&self, a: FElem) -> Option<u32> {
        if a.is_zero() || !self.has_tables() {
            return None;
        }
        Some(self.log[a.index()])
    }

    /// Absolute trace to F_p.
    pub fn trace(&self, a: FElem) -> u32 {
        let p = self.p as u64;
        let mut v = a.0 as u64;
        let mut acc = 0u64;
        for &t in &self.trace_basis {
            acc += (v % p) * t as u64;
            v /= p;
        }
        (acc % p) as u32
    }

    /// Trace by the defining sum `a + a^p + ... + a^(p^(n-1))`.
    pub fn trace_by_definition(&self, a: FElem) -> FElem {
        let mut acc = FElem::ZERO;
        let mut y = a;
        for _ in 0..self.n {
            acc = self.add(acc, y);
            y = self.pow(y, self.p as u64);
        }
        acc
    }

    /// `Tr(delta * u * v)`.
    pub fn inner(&self, ip: &InnerProduct, u: FElem, v: FElem) -> u32 {
        self.trace(self.mul(ip.delta(), self.mul(u, v)))
    }

    /// Coefficient vector of the functional `x -> Tr(delta * u * x)` in the
    /// polynomial basis.
    pub fn functional(&self, ip: &InnerProduct, u: FElem) -> Vec<u32> {
        let du = self.mul(ip.delta(), u);
        (0..self.n as usize)
            .map(|j| self.trace(self.mul(du, self.basis_elem(j))))
            .collect()
    }

    /// `true` when the elements are linearly independent over F_p.
    pub fn independent(&self, elems: &[FElem]) -> bool {
        let rows: Vec<Vec<u32>> = elems.iter().map(|&e| self.coords(e)).collect();
        linalg::rank(self.p, &rows, self.n as usize) == elems.len()
    }

    /// Dot product of prime-field vectors.
    pub(crate) fn dot(&self, a: &[u32], b: &[u32]) -> u32 {
        a.iter()
            .zip(b)
            .fold(0u32, |acc, (&x, &y)| add_mod(acc, mul_mod(x, y, self.p), self.p))
    }
}

fn is_irreducible(p: u32, n: u32, f: &[u32]) -> bool {
    if n == 1 {
        return true;
    }
    // Rabin: x^(p^n) = x mod f, and gcd(x^(p^(n/l)) - x, f) = 1 for primes l | n.
    let x = vec![0u32, 1];
    if poly::sub(p, &poly::x_pow_p_pow(p, n, f), &poly::rem(p, &x, f)) != Vec::<u32>::new() {
        return false;
    }
    for l in prime_factors(n as u64) {
        let h = poly::sub(p, &poly::x_pow_p_pow(p, n / l as u32, f), &x);
        if poly::degree(&poly::gcd(p, &h, f)) != Some(0) {
            return false;
        }
    }
    true
}

fn root_is_primitive(p: u32, q: u64, f: &[u32]) -> bool {
    let order = q - 1;
    let x = [0u32, 1];
    let one = poly::rem(p, &[1], f);
    if poly::pow_mod(p, &x, order, f) != one {
        return false;
    }
    prime_factors(order)
        .into_iter()
        .all(|l| poly::pow_mod(p, &x, order / l, f) != one)
}
