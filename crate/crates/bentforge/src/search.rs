//! Parameter sweeps over the ingredient families, written as JSON lines.

use bentforge_core::analysis::{classify_spectrum, linear_space, BentKind};
use bentforge_core::construction::{
    binomial_build, binomial_kernel, monomial_is_2plateaued, nwr_build, nwr_defaults, NwrParams,
};
use bentforge_core::field::{FieldCtx, InnerProduct};
use bentforge_core::function::FpFunction;
use bentforge_core::walsh::walsh_fast;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::CliError;
use crate::spec::{check_domain, ElemSpec};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Monomial,
    Binomial,
    Nwr,
}

/// One catalog line.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "family", rename_all = "lowercase")]
pub enum Row {
    Monomial {
        p: u32,
        n: u32,
        r: u32,
        c: u64,
        predicted: bool,
        measured_s: Option<u32>,
        agree: bool,
    },
    Binomial {
        p: u32,
        n: u32,
        kappa: u32,
        predicted_dim2: bool,
        kernel_dim: usize,
        measured_dim: usize,
        agree: bool,
    },
    Nwr {
        p: u32,
        n: u32,
        kappa: u32,
        a: Vec<u32>,
        c: Vec<u32>,
        beta1: ElemSpec,
        beta2: ElemSpec,
        delta: ElemSpec,
        big_gamma: ElemSpec,
        has_nonsquare: bool,
        kind: String,
        agree: bool,
    },
}

impl Row {
    pub fn agree(&self) -> bool {
        match self {
            Row::Monomial { agree, .. } | Row::Binomial { agree, .. } | Row::Nwr { agree, .. } => *agree,
        }
    }
}

/// Every `(r, c)` with `1 <= r < n`, `0 <= c < p^n - 1`.
pub fn monomial_sweep(p: u32, n: u32, limit: u64) -> Result<Vec<Row>, CliError> {
    let ctx = FieldCtx::with_default_poly(p, n)?;
    check_domain(&ctx, limit)?;
    let ip = InnerProduct::standard();
    let cells: Vec<(u32, u64)> = (1..n).flat_map(|r| (0..ctx.order() - 1).map(move |c| (r, c))).collect();
    Ok(cells
        .par_iter()
        .map(|&(r, c)| {
            let e = (p as u64).pow(r) + 1;
            let f = FpFunction::trace_form(&ctx, &[(ctx.exp(c), e)]);
            let measured_s = walsh_fast(&ctx, &f, &ip).plateau_order();
            let predicted = monomial_is_2plateaued(p as u64, n as u64, r as u64, c);
            Row::Monomial { p, n, r, c, predicted, measured_s, agree: predicted == (measured_s == Some(2)) }
        })
        .collect())
}

pub fn binomial_sweep(p: u32, ns: &[u32], kappas: &[u32], limit: u64) -> Result<Vec<Row>, CliError> {
    let mut rows = Vec::new();
    for &n in ns {
        let ctx = FieldCtx::with_default_poly(p, n)?;
        check_domain(&ctx, limit)?;
        let part: Result<Vec<Row>, CliError> = kappas
            .par_iter()
            .map(|&kappa| {
                let (f, predicted_dim2) = binomial_build(&ctx, kappa)?;
                let measured_dim = linear_space(&ctx, &f).space.dim();
                Ok(Row::Binomial {
                    p,
                    n,
                    kappa,
                    predicted_dim2,
                    kernel_dim: binomial_kernel(&ctx, kappa).dim(),
                    measured_dim,
                    agree: predicted_dim2 == (measured_dim == 2),
                })
            })
            .collect();
        rows.extend(part?);
    }
    Ok(rows)
}

/// All multiplier vectors `a` with `a_0 = 1`, in lexicographic order.
pub fn multiplier_vectors(p: u32) -> Vec<Vec<u32>> {
    let mut out = vec![vec![1u32]];
    for _ in 1..p {
        out = out
            .into_iter()
            .flat_map(|v| {
                (1..p).map(move |x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    out
}

pub fn nwr_row(ctx: &FieldCtx, kappa: u32, a: &[u32]) -> Result<Row, CliError> {
    let (b1, b2, ip, big_gamma) = nwr_defaults(ctx)?;
    let params = NwrParams::new(ctx, kappa, a, b2, &ip, big_gamma)?;
    let f = nwr_build(ctx, &params, b1, b2, &ip, big_gamma)?;
    let kind = classify_spectrum(ctx, &walsh_fast(ctx, &f, &ip)).kind;
    let has_nonsquare = params.has_nonsquare(ctx.p());
    Ok(Row::Nwr {
        p: ctx.p(),
        n: ctx.n(),
        kappa,
        a: params.a.clone(),
        c: params.c.clone(),
        beta1: ElemSpec::of(ctx, b1),
        beta2: ElemSpec::of(ctx, b2),
        delta: ElemSpec::of(ctx, ip.delta()),
        big_gamma: ElemSpec::of(ctx, big_gamma),
        has_nonsquare,
        kind: kind.name().to_string(),
        agree: kind.is_bent() && has_nonsquare == (kind == BentKind::NotWeaklyRegular),
    })
}

pub fn nwr_sweep(p: u32, n: u32, kappa: u32, limit: u64) -> Result<Vec<Row>, CliError> {
    let ctx = FieldCtx::with_default_poly(p, n)?;
    check_domain(&ctx, limit)?;
    multiplier_vectors(p).par_iter().map(|a| nwr_row(&ctx, kappa, a)).collect()
}

pub struct Summary {
    pub cells: usize,
    pub agree: usize,
}

pub fn summarize(rows: &[Row]) -> Summary {
    Summary { cells: rows.len(), agree: rows.iter().filter(|r| r.agree()).count() }
}
