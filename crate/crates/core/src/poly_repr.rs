//! Univariate polynomial representation of functions GF(p^n) -> F_p.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::field::{FElem, FieldCtx};
use crate::function::FpFunction;

/// Largest field order accepted by [`interpolate`].
pub const INTERPOLATION_MAX_DOMAIN: u64 = 1 << 16;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PolyError {
    DomainTooLarge { size: u64, limit: u64 },
}

impl fmt::Display for PolyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PolyError::DomainTooLarge { size, limit } => {
                write!(f, "field of order {size} exceeds the interpolation limit {limit}")
            }
        }
    }
}

impl core::error::Error for PolyError {}

/// `sum c_e x^e` with `e < p^n`, zero coefficients omitted.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct UnivariatePoly {
    terms: BTreeMap<u64, FElem>,
}

impl UnivariatePoly {
    pub fn zero() -> Self {
        UnivariatePoly::default()
    }

    /// Builds from `(exponent, coefficient)` pairs, adding repeated exponents.
    pub fn from_terms(ctx: &FieldCtx, terms: impl IntoIterator<Item = (u64, FElem)>) -> Self {
        let mut map = BTreeMap::new();
        for (e, c) in terms {
            let slot = map.entry(e).or_insert(FElem::ZERO);
            *slot = ctx.add(*slot, c);
        }
        map.retain(|_, c| !c.is_zero());
        UnivariatePoly { terms: map }
    }

    pub fn coeff(&self, e: u64) -> FElem {
        self.terms.get(&e).copied().unwrap_or(FElem::ZERO)
    }

    /// Terms by descending exponent.
    pub fn terms(&self) -> impl Iterator<Item = (u64, FElem)> + '_ {
        self.terms.iter().rev().map(|(&e, &c)| (e, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn evaluate(&self, ctx: &FieldCtx, x: FElem) -> FElem {
        self.terms
            .iter()
            .fold(FElem::ZERO, |acc, (&e, &c)| ctx.add(acc, ctx.mul(c, ctx.pow(x, e))))
    }

    /// Largest base-p digit sum of an exponent; 0 for constants.
    pub fn algebraic_degree(&self, ctx: &FieldCtx) -> u32 {
        let p = ctx.p() as u64;
        self.terms
            .keys()
            .map(|&e| {
                let (mut e, mut s) = (e, 0u64);
                while e > 0 {
                    s += e % p;
                    e /= p;
                }
                s as u32
            })
            .max()
            .unwrap_or(0)
    }

    /// Text form such as `g^51*x^56 + x^42 + 2*x^15 + g*x`: coefficients in
    /// the prime field print as integers, others as powers of the generator.
    pub fn render(&self, ctx: &FieldCtx) -> String {
        if self.terms.is_empty() {
            return String::from("0");
        }
        let parts: Vec<String> = self
            .terms()
            .map(|(e, c)| {
                let coef = render_coeff(ctx, c);
                let mono = match e {
                    0 => String::new(),
                    1 => String::from("x"),
                    _ => format!("x^{e}"),
                };
                match (coef.as_str(), mono.is_empty()) {
                    (_, true) => coef,
                    ("1", false) => mono,
                    _ => format!("{coef}*{mono}"),
                }
            })
            .collect();
        parts.join(" + ")
    }
}

fn render_coeff(ctx: &FieldCtx, c: FElem) -> String {
    if (c.0 as u64) < ctx.p() as u64 {
        return format!("{}", c.0);
    }
    match ctx.log(c) {
        Some(1) => String::from("g"),
        Some(k) => format!("g^{k}"),
        None => format!("{:?}", ctx.coords(c)).replace(' ', ""),
    }
}

/// The unique polynomial of degree below `p^n` agreeing with `f`:
/// `c_0 = f(0)`, `c_j = -sum_{x != 0} f(x) x^(-j)` for `0 < j < q - 1`, and
/// `c_(q-1) = -sum_x f(x)`. Since `f` is F_p-valued, `c_(jp) = c_j^p`, so
/// only one exponent per cyclotomic coset is summed.
pub fn interpolate(ctx: &FieldCtx, f: &FpFunction) -> Result<UnivariatePoly, PolyError> {
    interpolate_bounded(ctx, f, INTERPOLATION_MAX_DOMAIN)
}

/// [`interpolate`] with a caller-chosen limit on the field order.
pub fn interpolate_bounded(ctx: &FieldCtx, f: &FpFunction, limit: u64) -> Result<UnivariatePoly, PolyError> {
    let q = ctx.order();
    if q > limit {
        return Err(PolyError::DomainTooLarge { size: q, limit });
    }
    let p = ctx.p() as u64;
    let qm1 = q - 1;
    let mut coeffs = alloc::vec![FElem::ZERO; q as usize];
    coeffs[0] = ctx.scalar(f.value(FElem::ZERO));

    // nonzero points grouped by log: value f(g^k)
    let values: Vec<u32> = (0..qm1).map(|k| f.value(ctx.exp(k))).collect();
    let mut done = alloc::vec![false; q as usize];
    for j in 1..qm1 {
        if done[j as usize] {
            continue;
        }
        let mut acc = FElem::ZERO;
        for (k, &v) in values.iter().enumerate() {
            if v != 0 {
                let e = (qm1 - (j * k as u64) % qm1) % qm1;
                acc = ctx.add(acc, ctx.scale(v, ctx.exp(e)));
            }
        }
        let mut c = ctx.neg(acc);
        let mut jj = j;
        while !done[jj as usize] {
            done[jj as usize] = true;
            coeffs[jj as usize] = c;
            c = ctx.frobenius(c, 1);
            jj = jj * p % qm1;
        }
    }
    let total = ctx.elements().fold(0u32, |acc, x| (acc + f.value(x)) % ctx.p());
    coeffs[qm1 as usize] = ctx.neg(ctx.scalar(total));
    Ok(UnivariatePoly::from_terms(
        ctx,
        coeffs.into_iter().enumerate().map(|(e, c)| (e as u64, c)),
    ))
}
