//! Exact Fourier transforms `f^(b) = sum_x eps^(f(x) - <b,x>)`.
//!
//! [`walsh_naive`] is the double-loop definition and serves as an oracle.
//! [`walsh_fast`] runs a p-ary butterfly on the coordinate cube: for the
//! polynomial basis `e_j` with Gram matrix `M = (Tr(delta e_i e_j))`,
//! `<b, x> = (M b) . x`, so the coordinate transform evaluated at `M b` is
//! `f^(b)`. The same reasoning with the restricted Gram matrix gives the
//! transform on a subspace, even when the restricted form is degenerate.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::cyclotomic::{render_class, value_class, CycInt, ValueClass};
use crate::field::linalg::mat_vec;
use crate::field::{FElem, FieldCtx, InnerProduct, Subspace};
use crate::function::FpFunction;

/// Domain guard for the quadratic-time oracle.
pub const NAIVE_MAX_DOMAIN: u64 = 4096;
/// Domain guard for subspace transforms.
pub const SUBSPACE_MAX_DOMAIN: u64 = 1 << 15;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WalshError {
    DomainTooLarge { size: u64, limit: u64 },
}

impl fmt::Display for WalshError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WalshError::DomainTooLarge { size, limit } => {
                write!(f, "domain of size {size} exceeds the limit {limit}")
            }
        }
    }
}

impl core::error::Error for WalshError {}

/// Fourier coefficients over a domain (the whole field or a subspace),
/// with respect to `<u, v> = Tr(delta u v)`. Entries are sorted by element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WalshSpectrum {
    p: u32,
    delta: FElem,
    domain: Subspace,
    entries: Vec<(FElem, CycInt)>,
}

impl WalshSpectrum {
    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn delta(&self) -> FElem {
        self.delta
    }

    pub fn domain(&self) -> &Subspace {
        &self.domain
    }

    pub fn entries(&self) -> &[(FElem, CycInt)] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn values(&self) -> impl Iterator<Item = &CycInt> {
        self.entries.iter().map(|(_, v)| v)
    }

    pub fn get(&self, b: FElem) -> Option<&CycInt> {
        self.entries
            .binary_search_by_key(&b, |(e, _)| *e)
            .ok()
            .map(|i| &self.entries[i].1)
    }

    /// `sum_b f^(b) conj(f^(b))`; equals `|domain|^2` by Parseval.
    pub fn parseval_sum(&self) -> CycInt {
        self.values().fold(CycInt::zero(self.p), |acc, w| acc + w.norm_sq())
    }

    pub fn support(&self) -> Vec<FElem> {
        self.entries.iter().filter(|(_, w)| !w.is_zero()).map(|(b, _)| *b).collect()
    }

    /// `s` such that every `|f^(b)|^2` is `0` or `p^(d+s)`, `d` the domain
    /// dimension. `s = 0` is bent, `s = 1` near-bent.
    pub fn plateau_order(&self) -> Option<u32> {
        plateau_of_values(self.p, self.domain.dim() as u32, self.values())
    }

    /// Value classes with multiplicities, ordered by sign, magnitude and eps
    /// exponent, then zero, then raw coefficient vectors.
    pub fn classes(&self) -> BTreeMap<ValueClass, usize> {
        let mut m = BTreeMap::new();
        for w in self.values() {
            *m.entry(value_class(w)).or_insert(0) += 1;
        }
        m
    }
}

/// `s` such that every `|w|^2` is `0` or `p^(d+s)`.
pub fn plateau_of_values<'a>(p: u32, d: u32, values: impl IntoIterator<Item = &'a CycInt>) -> Option<u32> {
    let mut level: Option<i64> = None;
    for w in values {
        let nrm = w.norm_sq().as_integer()?;
        if nrm == 0 {
            continue;
        }
        match level {
            None => level = Some(nrm),
            Some(l) if l != nrm => return None,
            _ => {}
        }
    }
    let mut v = level?;
    let mut e = 0u32;
    while v % p as i64 == 0 {
        v /= p as i64;
        e += 1;
    }
    (v == 1 && e >= d).then(|| e - d)
}

/// Sorted `(rendered value, multiplicity)` pairs.
pub fn spectrum_multiset(s: &WalshSpectrum) -> Vec<(String, usize)> {
    s.classes()
        .into_iter()
        .map(|(c, k)| (render_class(s.p(), &c), k))
        .collect()
}

/// Images of all packed vectors under a linear map on F_p^d given by the
/// packed images of the unit vectors.
fn linear_images(ctx_p: u32, d: usize, unit_images: &[u32], add: impl Fn(u32, u32) -> u32) -> Vec<u32> {
    let p = ctx_p as usize;
    let size = p.pow(d as u32);
    let mut out = vec![0u32; size];
    for idx in 1..size {
        let mut rest = idx;
        let mut digit = 0;
        while rest % p == 0 {
            rest /= p;
            digit += 1;
        }
        let step = p.pow(digit as u32);
        out[idx] = add(out[idx - step], unit_images[digit]);
    }
    out
}

/// `out[beta] = sum_xi eps^(table[xi] - beta . xi)` over F_p^d, as length-p
/// exponent-count vectors laid out contiguously.
fn coordinate_butterfly(p: u32, d: usize, table: &[u32]) -> Vec<i64> {
    let p = p as usize;
    let size = p.pow(d as u32);
    debug_assert_eq!(table.len(), size);
    let mut data = vec![0i64; size * p];
    for (x, &v) in table.iter().enumerate() {
        data[x * p + v as usize] = 1;
    }
    let mut tmp = vec![0i64; p * p];
    let mut stride = 1;
    for _ in 0..d {
        for block in (0..size).step_by(stride * p) {
            for off in 0..stride {
                let base = block + off;
                tmp.iter_mut().for_each(|t| *t = 0);
                for k in 0..p {
                    let src = (base + k * stride) * p;
                    for b in 0..p {
                        // multiply by eps^(-b k)
                        let shift = (p - (b * k) % p) % p;
                        let dst = b * p;
                        for e in 0..p {
                            let to = if e + shift >= p { e + shift - p } else { e + shift };
                            tmp[dst + to] += data[src + e];
                        }
                    }
                }
                for b in 0..p {
                    let dst = (base + b * stride) * p;
                    data[dst..dst + p].copy_from_slice(&tmp[b * p..b * p + p]);
                }
            }
        }
        stride *= p;
    }
    data
}

fn transform_on(ctx: &FieldCtx, f: &FpFunction, domain: &Subspace, ip: &InnerProduct) -> WalshSpectrum {
    let p = ctx.p();
    let d = domain.dim();
    let elems = domain.elements(ctx);
    let table: Vec<u32> = elems.iter().map(|&x| f.value(x)).collect();
    let data = coordinate_butterfly(p, d, &table);

    // the index of b's functional in domain coordinates is gram * coords(b)
    let gram = domain.gram(ctx, ip);
    let unit_images: Vec<u32> = (0..d)
        .map(|j| {
            let mut e = vec![0u32; d];
            e[j] = 1;
            pack(p, &mat_vec(p, &gram, &e))
        })
        .collect();
    let images = linear_images(p, d, &unit_images, |a, b| pack_add(p, a, b));

    let mut entries: Vec<(FElem, CycInt)> = elems
        .iter()
        .zip(&images)
        .map(|(&b, &beta)| {
            let at = beta as usize * p as usize;
            (b, CycInt::from_exponent_counts(p, &data[at..at + p as usize]))
        })
        .collect();
    entries.sort_by_key(|(b, _)| *b);
    WalshSpectrum {
        p,
        delta: ip.delta(),
        domain: domain.clone(),
        entries,
    }
}

fn pack(p: u32, v: &[u32]) -> u32 {
    v.iter().rev().fold(0u32, |acc, &c| acc * p + c)
}

fn pack_add(p: u32, a: u32, b: u32) -> u32 {
    if p == 2 {
        return a ^ b;
    }
    let (mut x, mut y, mut acc, mut place) = (a, b, 0u32, 1u32);
    while x != 0 || y != 0 {
        acc += ((x % p + y % p) % p) * place;
        x /= p;
        y /= p;
        place = place.wrapping_mul(p);
    }
    acc
}

/// Transform of `f` restricted to `w` with respect to the dot product of
/// coordinates in the basis of `w`: entry `beta` (packed coordinates) is
/// `sum_xi eps^(f(xi) - beta . xi)`. Plateau orders and bentness do not
/// depend on which non-degenerate pairing is used, so this serves for
/// restrictions where `Tr(delta u v)` degenerates on `w`.
pub fn coordinate_spectrum(ctx: &FieldCtx, f: &FpFunction, w: &Subspace) -> Result<Vec<CycInt>, WalshError> {
    let size = w.size(ctx) as u64;
    if size > SUBSPACE_MAX_DOMAIN {
        return Err(WalshError::DomainTooLarge { size, limit: SUBSPACE_MAX_DOMAIN });
    }
    let p = ctx.p();
    let table: Vec<u32> = w.elements(ctx).iter().map(|&x| f.value(x)).collect();
    let data = coordinate_butterfly(p, w.dim(), &table);
    Ok(data
        .chunks(p as usize)
        .map(|c| CycInt::from_exponent_counts(p, c))
        .collect())
}

/// Fast transform over the whole field.
pub fn walsh_fast(ctx: &FieldCtx, f: &FpFunction, ip: &InnerProduct) -> WalshSpectrum {
    transform_on(ctx, f, &Subspace::full(ctx), ip)
}

/// Transform of `f` restricted to `w`, for `b` ranging over `w`.
pub fn walsh_on_subspace(
    ctx: &FieldCtx,
    f: &FpFunction,
    w: &Subspace,
    ip: &InnerProduct,
) -> Result<WalshSpectrum, WalshError> {
    walsh_on_subspace_bounded(ctx, f, w, ip, SUBSPACE_MAX_DOMAIN)
}

pub fn walsh_on_subspace_bounded(
    ctx: &FieldCtx,
    f: &FpFunction,
    w: &Subspace,
    ip: &InnerProduct,
    limit: u64,
) -> Result<WalshSpectrum, WalshError> {
    let size = w.size(ctx) as u64;
    if size > limit {
        return Err(WalshError::DomainTooLarge { size, limit });
    }
    Ok(transform_on(ctx, f, w, ip))
}

/// The defining double sum, guarded to `p^n <= NAIVE_MAX_DOMAIN`.
pub fn walsh_naive(ctx: &FieldCtx, f: &FpFunction, ip: &InnerProduct) -> Result<WalshSpectrum, WalshError> {
    walsh_naive_bounded(ctx, f, ip, NAIVE_MAX_DOMAIN)
}

pub fn walsh_naive_bounded(
    ctx: &FieldCtx,
    f: &FpFunction,
    ip: &InnerProduct,
    limit: u64,
) -> Result<WalshSpectrum, WalshError> {
    if ctx.order() > limit {
        return Err(WalshError::DomainTooLarge { size: ctx.order(), limit });
    }
    let p = ctx.p();
    let coords: Vec<Vec<u32>> = ctx.elements().map(|x| ctx.coords(x)).collect();
    let entries = ctx
        .elements()
        .map(|b| {
            let w = ctx.functional(ip, b);
            let mut counts = vec![0i64; p as usize];
            for x in ctx.elements() {
                let bx = ctx.dot(&w, &coords[x.index()]);
                counts[((f.value(x) + p - bx) % p) as usize] += 1;
            }
            (b, CycInt::from_exponent_counts(p, &counts))
        })
        .collect();
    Ok(WalshSpectrum {
        p,
        delta: ip.delta(),
        domain: Subspace::full(ctx),
        entries,
    })
}
