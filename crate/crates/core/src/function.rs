//! Functions GF(p^n) -> F_p stored as value tables.

use alloc::vec::Vec;
use core::fmt;

use crate::field::{FElem, FieldCtx, InnerProduct};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FunctionError {
    WrongLength { expected: usize, got: usize },
    ValueOutOfRange { index: usize, value: u32 },
}

impl fmt::Display for FunctionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FunctionError::WrongLength { expected, got } => {
                write!(f, "value table has {got} entries, field has {expected} elements")
            }
            FunctionError::ValueOutOfRange { index, value } => {
                write!(f, "table entry {index} = {value} is not in F_p")
            }
        }
    }
}

impl core::error::Error for FunctionError {}

/// A total map GF(p^n) -> F_p, indexed by [`FElem::index`].
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FpFunction {
    p: u32,
    values: Vec<u32>,
}

impl fmt::Debug for FpFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FpFunction")
            .field("p", &self.p)
            .field("len", &self.values.len())
            .finish()
    }
}

impl FpFunction {
    pub fn from_fn(ctx: &FieldCtx, mut f: impl FnMut(FElem) -> u32) -> Self {
        let p = ctx.p();
        FpFunction {
            p,
            values: ctx.elements().map(|x| f(x) % p).collect(),
        }
    }

    pub fn from_values(ctx: &FieldCtx, values: Vec<u32>) -> Result<Self, FunctionError> {
        if values.len() != ctx.size() {
            return Err(FunctionError::WrongLength { expected: ctx.size(), got: values.len() });
        }
        if let Some((index, &value)) = values.iter().enumerate().find(|(_, &v)| v >= ctx.p()) {
            return Err(FunctionError::ValueOutOfRange { index, value });
        }
        Ok(FpFunction { p: ctx.p(), values })
    }

    pub fn constant(ctx: &FieldCtx, c: u32) -> Self {
        Self::from_fn(ctx, |_| c)
    }

    /// `x -> Tr(sum_i c_i x^(e_i))` for `terms = [(c_i, e_i)]`.
    pub fn trace_form(ctx: &FieldCtx, terms: &[(FElem, u64)]) -> Self {
        Self::from_fn(ctx, |x| {
            let y = terms
                .iter()
                .fold(FElem::ZERO, |acc, &(c, e)| ctx.add(acc, ctx.mul(c, ctx.pow(x, e))));
            ctx.trace(y)
        })
    }

    /// `x -> <c, x> = Tr(delta c x)`.
    pub fn linear(ctx: &FieldCtx, ip: &InnerProduct, c: FElem) -> Self {
        let w = ctx.functional(ip, c);
        Self::from_fn(ctx, |x| ctx.dot(&w, &ctx.coords(x)))
    }

    #[inline]
    pub fn p(&self) -> u32 {
        self.p
    }

    #[inline]
    pub fn value(&self, x: FElem) -> u32 {
        self.values[x.index()]
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Pointwise sum.
    pub fn plus(&self, other: &FpFunction) -> FpFunction {
        assert_eq!(self.p, other.p);
        FpFunction {
            p: self.p,
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(&a, &b)| (a + b) % self.p)
                .collect(),
        }
    }

    /// Pointwise `c * f`.
    pub fn scaled(&self, c: u32) -> FpFunction {
        let p = self.p as u64;
        FpFunction {
            p: self.p,
            values: self.values.iter().map(|&a| (a as u64 * c as u64 % p) as u32).collect(),
        }
    }

    /// `f - f(0)`.
    pub fn centered(&self) -> FpFunction {
        let f0 = self.values[0];
        FpFunction {
            p: self.p,
            values: self.values.iter().map(|&a| (a + self.p - f0) % self.p).collect(),
        }
    }
}
