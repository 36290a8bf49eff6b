//! Bent functions from p partially bent functions sharing a 2-dimensional
//! linear space, and the monomial / binomial ingredient families.

use alloc::vec::Vec;
use core::fmt;

use crate::analysis::{classify_spectrum, is_partially_bent, linear_space, BentClassification};
use crate::field::prime::{gcd_u64, inv_mod, is_square_mod_p};
use crate::field::{kernel_of_linearized, orthogonal_complement, FElem, FieldCtx, InnerProduct, Subspace};
use crate::function::FpFunction;
use crate::walsh::{walsh_fast, walsh_on_subspace_bounded, WalshError, WalshSpectrum, SUBSPACE_MAX_DOMAIN};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mode {
    /// `Tr(delta b1 b2) = 0`, `Tr(delta b1^2) != 0`, `Tr(delta b2^2) != 0`.
    Strict,
    /// Only the first two conditions; the pairing with `b2` comes from a
    /// separate direction `Gamma`.
    Relaxed,
}

impl Mode {
    pub fn name(self) -> &'static str {
        match self {
            Mode::Strict => "strict",
            Mode::Relaxed => "relaxed",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConstructionError {
    WrongCount { expected: usize, got: usize },
    DependentBetas,
    IngredientNotNormalized { index: usize },
    IngredientNotPartiallyBent { index: usize },
    WrongLinearSpace { index: usize },
    DeltaNotFound,
    BadDelta(&'static str),
    NoGammaCandidate,
    BadGamma { index: usize, reason: &'static str },
    NotNearBent { index: usize },
    SupportsOverlap { first: usize, second: usize },
    MergedNotBent,
    BadN { n: u32 },
    EvenCharacteristic,
    PreconditionViolated(&'static str),
    Walsh(WalshError),
}

impl fmt::Display for ConstructionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use ConstructionError::*;
        match self {
            WrongCount { expected, got } => write!(f, "expected {expected} ingredient functions, got {got}"),
            DependentBetas => f.write_str("beta1 and beta2 are linearly dependent"),
            IngredientNotNormalized { index } => write!(f, "f_{index}(0) is not 0"),
            IngredientNotPartiallyBent { index } => write!(f, "f_{index} is not partially bent"),
            WrongLinearSpace { index } => write!(f, "the linear space of f_{index} is not <beta1, beta2>"),
            DeltaNotFound => f.write_str("no admissible delta found"),
            BadDelta(reason) => write!(f, "delta rejected: {reason}"),
            NoGammaCandidate => f.write_str("no element of <beta1>^perp pairs non-trivially with beta2"),
            BadGamma { index, reason } => write!(f, "gamma_{index} rejected: {reason}"),
            NotNearBent { index } => write!(f, "g_{index} restricted to V_(n-1) is not near-bent"),
            SupportsOverlap { first, second } => {
                write!(f, "restricted spectra of g_{first} and g_{second} have overlapping supports")
            }
            MergedNotBent => f.write_str("merged function is not bent"),
            BadN { n } => write!(f, "n = {n} is not admissible here"),
            EvenCharacteristic => f.write_str("odd characteristic required"),
            PreconditionViolated(reason) => write!(f, "precondition violated: {reason}"),
            Walsh(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for ConstructionError {}

impl From<WalshError> for ConstructionError {
    fn from(e: WalshError) -> Self {
        ConstructionError::Walsh(e)
    }
}

/// Every parameter of a merge, sufficient to rebuild the output.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstructionRecipe {
    pub mode: Mode,
    pub fks: Vec<FpFunction>,
    pub beta1: FElem,
    pub beta2: FElem,
    pub delta: FElem,
    /// `<b1, b1>`.
    pub ell: u32,
    /// The direction whose multiples give the `gamma_k`, with `t = <Gamma, b2>`.
    pub big_gamma: Option<FElem>,
    pub t: Option<u32>,
    pub gammas: Vec<FElem>,
    /// `gamma = ell^-1 b1`.
    pub gamma_merge: FElem,
}

fn admissible(ctx: &FieldCtx, ip: &InnerProduct, b1: FElem, b2: FElem, mode: Mode) -> Result<(), &'static str> {
    if ctx.inner(ip, b1, b2) != 0 {
        return Err("<beta1, beta2> is not 0");
    }
    if ctx.inner(ip, b1, b1) == 0 {
        return Err("<beta1, beta1> is 0");
    }
    if mode == Mode::Strict && ctx.inner(ip, b2, b2) == 0 {
        return Err("<beta2, beta2> is 0");
    }
    Ok(())
}

/// First `delta = g^k` (ascending `k`) meeting the conditions of `mode`.
pub fn find_delta(ctx: &FieldCtx, b1: FElem, b2: FElem, mode: Mode) -> Result<InnerProduct, ConstructionError> {
    find_delta_bounded(ctx, b1, b2, mode, ctx.order() - 1)
}

/// [`find_delta`] scanning only `k < max_log`.
pub fn find_delta_bounded(
    ctx: &FieldCtx,
    b1: FElem,
    b2: FElem,
    mode: Mode,
    max_log: u64,
) -> Result<InnerProduct, ConstructionError> {
    if !ctx.independent(&[b1, b2]) {
        return Err(ConstructionError::DependentBetas);
    }
    (0..max_log.min(ctx.order() - 1))
        .filter_map(|k| InnerProduct::new(ctx.exp(k)))
        .find(|ip| admissible(ctx, ip, b1, b2, mode).is_ok())
        .ok_or(ConstructionError::DeltaNotFound)
}

/// The direction `Gamma` in `<b1>^perp` and `t = <Gamma, b2> != 0`: `b2` itself
/// in strict mode, otherwise the element of smallest discrete log.
pub fn select_direction(
    ctx: &FieldCtx,
    ip: &InnerProduct,
    b1: FElem,
    b2: FElem,
    mode: Mode,
) -> Result<(FElem, u32), ConstructionError> {
    if mode == Mode::Strict {
        let t = ctx.inner(ip, b2, b2);
        if t != 0 && ctx.inner(ip, b1, b2) == 0 {
            return Ok((b2, t));
        }
    }
    (0..ctx.order() - 1)
        .map(|k| ctx.exp(k))
        .find(|&x| ctx.inner(ip, x, b1) == 0 && ctx.inner(ip, x, b2) != 0)
        .map(|x| (x, ctx.inner(ip, x, b2)))
        .ok_or(ConstructionError::NoGammaCandidate)
}

/// `gamma_k = m_k Gamma` with `m_k = t^-1 (k - f_k(b2) + f_0(b2))`.
pub fn select_gammas(ctx: &FieldCtx, fks: &[FpFunction], b2: FElem, big_gamma: FElem, t: u32) -> Vec<FElem> {
    let p = ctx.p();
    let tinv = inv_mod(t, p);
    let f0 = fks[0].value(b2);
    fks.iter()
        .enumerate()
        .map(|(k, f)| {
            let m = (k as u32 % p + p - f.value(b2) + f0) % p * tinv % p;
            ctx.scale(m, big_gamma)
        })
        .collect()
}

/// Checks `f_k(b2) + <gamma_k, b2> = f_0(b2) + k` and `gamma_k` in `<b1>^perp`.
pub fn validate_gammas(
    ctx: &FieldCtx,
    ip: &InnerProduct,
    fks: &[FpFunction],
    b1: FElem,
    b2: FElem,
    gammas: &[FElem],
) -> Result<(), ConstructionError> {
    let p = ctx.p();
    if gammas.len() != fks.len() {
        return Err(ConstructionError::WrongCount { expected: fks.len(), got: gammas.len() });
    }
    let f0 = fks[0].value(b2);
    for (k, (f, &gk)) in fks.iter().zip(gammas).enumerate() {
        if ctx.inner(ip, gk, b1) != 0 {
            return Err(ConstructionError::BadGamma { index: k, reason: "not orthogonal to beta1" });
        }
        if (f.value(b2) + ctx.inner(ip, gk, b2)) % p != (f0 + k as u32) % p {
            return Err(ConstructionError::BadGamma { index: k, reason: "f_k(beta2) + <gamma_k, beta2> != f_0(beta2) + k" });
        }
    }
    Ok(())
}

/// `g(x) = f(x) + <gamma, x>`.
pub fn build_gk(ctx: &FieldCtx, f: &FpFunction, gamma: FElem, ip: &InnerProduct) -> FpFunction {
    f.plus(&FpFunction::linear(ctx, ip, gamma))
}

/// `F(x) = -sum_k prod_(j != k) (<gamma, x> - j) g_k(x)`.
pub fn merge_indicator(ctx: &FieldCtx, gs: &[FpFunction], gamma: FElem, ip: &InnerProduct) -> FpFunction {
    let p = ctx.p();
    let sel = FpFunction::linear(ctx, ip, gamma);
    FpFunction::from_fn(ctx, |x| {
        let c = sel.value(x);
        let sum = gs.iter().enumerate().fold(0u32, |acc, (k, g)| {
            let prod = (0..p)
                .filter(|&j| j != k as u32)
                .fold(1u32, |pr, j| pr * ((c + p - j) % p) % p);
            (acc + prod * g.value(x)) % p
        });
        (p - sum) % p
    })
}

/// `F(x) = g_c(x)` with `c = <gamma, x>`.
pub fn merge_branch(ctx: &FieldCtx, gs: &[FpFunction], gamma: FElem, ip: &InnerProduct) -> FpFunction {
    let sel = FpFunction::linear(ctx, ip, gamma);
    FpFunction::from_fn(ctx, |x| gs[sel.value(x) as usize].value(x))
}

/// Whether `Tr(g^c x^(p^r + 1))` is 2-plateaued according to the closed-form
/// criterion. For odd `p`, `y(p^2 - 1) + c(p^r - 1) = (p^n - 1)/2` is read
/// modulo `p^n - 1`.
pub fn monomial_is_2plateaued(p: u64, n: u64, r: u64, c: u64) -> bool {
    if p == 2 {
        return (n.is_multiple_of(4) && r % 2 == 1 && c.is_multiple_of(3)) || (n % 4 == 2 && (r.is_multiple_of(2) || c.is_multiple_of(3)));
    }
    if !n.is_multiple_of(2) || r.is_multiple_of(2) {
        return false;
    }
    let q1 = (p as u128).pow(n as u32) - 1;
    let pr1 = (p as u128).pow(r as u32) - 1;
    let target = (q1 / 2 + q1 - (c as u128 % q1) * (pr1 % q1) % q1) % q1;
    let g = gcd_u64(p * p - 1, q1 as u64) as u128;
    target.is_multiple_of(g)
}

/// `Tr((p+1)/2 x^2 + x^(p^r + 1))` with `r = 2^kappa`.
pub fn binomial_function(ctx: &FieldCtx, kappa: u32) -> FpFunction {
    let half = ctx.scalar(ctx.p().div_ceil(2));
    let r = 1u32 << kappa;
    FpFunction::from_fn(ctx, |x| {
        let y = ctx.add(ctx.mul(half, ctx.mul(x, x)), ctx.mul(ctx.frobenius(x, r % ctx.n()), x));
        ctx.trace(y)
    })
}

/// `dim = 2` iff `kappa = 0` or `n` odd.
pub fn binomial_predicts_dim2(n: u32, kappa: u32) -> bool {
    kappa == 0 || n % 2 == 1
}

/// Kernel of `x^(p^2r) + x^(p^r) + x`.
pub fn binomial_kernel(ctx: &FieldCtx, kappa: u32) -> Subspace {
    let r = 1u32 << kappa;
    kernel_of_linearized(ctx, &[(FElem::ONE, 2 * r), (FElem::ONE, r), (FElem::ONE, 0)])
}

/// The binomial and whether its linear space is predicted to be 2-dimensional.
pub fn binomial_build(ctx: &FieldCtx, kappa: u32) -> Result<(FpFunction, bool), ConstructionError> {
    if ctx.p() == 2 {
        return Err(ConstructionError::EvenCharacteristic);
    }
    if !ctx.n().is_multiple_of(3) {
        return Err(ConstructionError::BadN { n: ctx.n() });
    }
    Ok((binomial_function(ctx, kappa), binomial_predicts_dim2(ctx.n(), kappa)))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NwrParams {
    pub kappa: u32,
    /// `a_0 = 1`, all nonzero.
    pub a: Vec<u32>,
    /// `c_0 = 0`, `c_k = t^-1 ((1 - a_k) Delta + k)`.
    pub c: Vec<u32>,
    /// `Tr((p+1)/2 b2^2 + b2^(p^r + 1))`.
    pub big_delta: u32,
}

impl NwrParams {
    pub fn new(
        ctx: &FieldCtx,
        kappa: u32,
        a: &[u32],
        b2: FElem,
        ip: &InnerProduct,
        big_gamma: FElem,
    ) -> Result<Self, ConstructionError> {
        let p = ctx.p();
        if a.len() != p as usize {
            return Err(ConstructionError::WrongCount { expected: p as usize, got: a.len() });
        }
        if a[0] % p != 1 {
            return Err(ConstructionError::PreconditionViolated("a_0 must be 1"));
        }
        if a.iter().any(|&v| v % p == 0) {
            return Err(ConstructionError::PreconditionViolated("a_k must be nonzero"));
        }
        let t = ctx.inner(ip, big_gamma, b2);
        if t == 0 {
            return Err(ConstructionError::PreconditionViolated("Tr(delta Gamma beta2) is 0"));
        }
        let big_delta = binomial_function(ctx, kappa).value(b2);
        let tinv = inv_mod(t, p);
        let c = (0..p)
            .map(|k| {
                if k == 0 {
                    0
                } else {
                    let one_minus = (1 + p - a[k as usize] % p) % p;
                    (one_minus * big_delta + k) % p * tinv % p
                }
            })
            .collect();
        Ok(NwrParams { kappa, a: a.iter().map(|v| v % p).collect(), c, big_delta })
    }

    /// Some `a_k` is a nonsquare in F_p.
    pub fn has_nonsquare(&self, p: u32) -> bool {
        self.a.iter().any(|&v| !is_square_mod_p(p, v).unwrap_or(true))
    }
}

/// `F(x) = a_k Tr((p+1)/2 x^2 + x^(p^r+1)) + c_k Tr(delta Gamma x)`, with the
/// branch `k = <gamma, x>` for `gamma = ell^-1 b1`.
pub fn nwr_build(
    ctx: &FieldCtx,
    params: &NwrParams,
    b1: FElem,
    b2: FElem,
    ip: &InnerProduct,
    big_gamma: FElem,
) -> Result<FpFunction, ConstructionError> {
    let p = ctx.p();
    if p == 2 {
        return Err(ConstructionError::EvenCharacteristic);
    }
    if ctx.n().is_multiple_of(2) || !ctx.n().is_multiple_of(3) {
        return Err(ConstructionError::BadN { n: ctx.n() });
    }
    if params.kappa == 0 {
        return Err(ConstructionError::PreconditionViolated("kappa must be at least 1"));
    }
    if !ctx.independent(&[b1, b2]) {
        return Err(ConstructionError::DependentBetas);
    }
    let kernel = kernel_of_linearized(ctx, &[(FElem::ONE, 2), (FElem::ONE, 1), (FElem::ONE, 0)]);
    if !kernel.contains(ctx, b1) || !kernel.contains(ctx, b2) {
        return Err(ConstructionError::PreconditionViolated("beta1, beta2 must solve x^(p^2) + x^p + x = 0"));
    }
    let ell = ctx.inner(ip, b1, b1);
    if ell == 0 {
        return Err(ConstructionError::PreconditionViolated("Tr(delta beta1^2) is 0"));
    }
    if ctx.inner(ip, b1, b2) != 0 {
        return Err(ConstructionError::PreconditionViolated("Tr(delta beta1 beta2) is not 0"));
    }
    if ctx.inner(ip, big_gamma, b2) == 0 {
        return Err(ConstructionError::PreconditionViolated("Tr(delta Gamma beta2) is 0"));
    }
    if params.a.len() != p as usize || params.a[0] != 1 || params.a.contains(&0) {
        return Err(ConstructionError::PreconditionViolated("a_0 must be 1 and every a_k nonzero"));
    }
    let f = binomial_function(ctx, params.kappa);
    let lin = FpFunction::linear(ctx, ip, big_gamma);
    let gamma = ctx.scale(inv_mod(ell, p), b1);
    let sel = FpFunction::linear(ctx, ip, gamma);
    Ok(FpFunction::from_fn(ctx, |x| {
        let k = sel.value(x) as usize;
        (params.a[k] * f.value(x) + params.c[k] * lin.value(x)) % p
    }))
}

/// A basis `b1, b2` of the solutions of `x^(p^2) + x^p + x`, ordered so that a
/// relaxed-mode `delta` exists, with that `delta` and the direction `Gamma`.
pub fn nwr_defaults(ctx: &FieldCtx) -> Result<(FElem, FElem, InnerProduct, FElem), ConstructionError> {
    let kernel = kernel_of_linearized(ctx, &[(FElem::ONE, 2), (FElem::ONE, 1), (FElem::ONE, 0)]);
    let [u, v] = kernel.basis() else {
        return Err(ConstructionError::PreconditionViolated("x^(p^2) + x^p + x must have a 2-dimensional kernel"));
    };
    for (b1, b2) in [(*u, *v), (*v, *u)] {
        if let Ok(ip) = find_delta(ctx, b1, b2, Mode::Relaxed) {
            let (big_gamma, _) = select_direction(ctx, &ip, b1, b2, Mode::Relaxed)?;
            return Ok((b1, b2, ip, big_gamma));
        }
    }
    Err(ConstructionError::DeltaNotFound)
}

/// Explicit choices that replace the scans.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PipelineOptions {
    pub delta: Option<FElem>,
    pub big_gamma: Option<FElem>,
    pub gammas: Option<Vec<FElem>>,
    /// Largest restricted domain transformed during verification.
    pub subspace_limit: Option<u64>,
}

#[derive(Clone, Debug)]
pub struct PipelineOutput {
    pub recipe: ConstructionRecipe,
    pub gs: Vec<FpFunction>,
    pub f: FpFunction,
    pub spectrum: WalshSpectrum,
    pub classification: BentClassification,
}

/// Validates the ingredients, fixes `delta` and the `gamma_k`, merges, and
/// re-verifies the near-bent restrictions, their disjoint supports and the
/// bentness of the result.
pub fn run_pipeline(
    ctx: &FieldCtx,
    fks: &[FpFunction],
    b1: FElem,
    b2: FElem,
    mode: Mode,
    options: &PipelineOptions,
) -> Result<PipelineOutput, ConstructionError> {
    let p = ctx.p();
    if fks.len() != p as usize {
        return Err(ConstructionError::WrongCount { expected: p as usize, got: fks.len() });
    }
    if !ctx.independent(&[b1, b2]) {
        return Err(ConstructionError::DependentBetas);
    }
    let lambda = Subspace::span(ctx, &[b1, b2]);
    for (index, f) in fks.iter().enumerate() {
        if f.value(FElem::ZERO) != 0 {
            return Err(ConstructionError::IngredientNotNormalized { index });
        }
        if linear_space(ctx, f).space != lambda {
            return Err(ConstructionError::WrongLinearSpace { index });
        }
        if !is_partially_bent(ctx, f) {
            return Err(ConstructionError::IngredientNotPartiallyBent { index });
        }
    }

    let ip = match options.delta {
        Some(d) => {
            let ip = InnerProduct::new(d).ok_or(ConstructionError::BadDelta("delta is 0"))?;
            admissible(ctx, &ip, b1, b2, mode).map_err(ConstructionError::BadDelta)?;
            ip
        }
        None => find_delta(ctx, b1, b2, mode)?,
    };
    let ell = ctx.inner(&ip, b1, b1);

    let direction = match options.big_gamma {
        Some(g) => {
            let t = ctx.inner(&ip, g, b2);
            if t == 0 || ctx.inner(&ip, g, b1) != 0 {
                return Err(ConstructionError::BadGamma { index: 0, reason: "Gamma must be orthogonal to beta1 and pair with beta2" });
            }
            Some((g, t))
        }
        None => select_direction(ctx, &ip, b1, b2, mode).ok(),
    };
    let gammas = match (&options.gammas, direction) {
        (Some(gs), _) => gs.clone(),
        (None, Some((g, t))) => select_gammas(ctx, fks, b2, g, t),
        (None, None) => return Err(ConstructionError::NoGammaCandidate),
    };
    validate_gammas(ctx, &ip, fks, b1, b2, &gammas)?;

    let gs: Vec<FpFunction> = fks.iter().zip(&gammas).map(|(f, &g)| build_gk(ctx, f, g, &ip)).collect();
    let gamma_merge = ctx.scale(inv_mod(ell, p), b1);
    let merged = merge_branch(ctx, &gs, gamma_merge, &ip);

    let v = orthogonal_complement(ctx, &ip, &Subspace::span(ctx, &[b1]));
    let mut supports: Vec<Vec<FElem>> = Vec::with_capacity(gs.len());
    for (index, g) in gs.iter().enumerate() {
        let s = walsh_on_subspace_bounded(ctx, g, &v, &ip, options.subspace_limit.unwrap_or(SUBSPACE_MAX_DOMAIN))?;
        if s.plateau_order() != Some(1) {
            return Err(ConstructionError::NotNearBent { index });
        }
        supports.push(s.support());
    }
    for j in 0..supports.len() {
        for k in j + 1..supports.len() {
            if supports[j].iter().any(|b| supports[k].binary_search(b).is_ok()) {
                return Err(ConstructionError::SupportsOverlap { first: j, second: k });
            }
        }
    }

    let spectrum = walsh_fast(ctx, &merged, &ip);
    let classification = classify_spectrum(ctx, &spectrum);
    if !classification.kind.is_bent() {
        return Err(ConstructionError::MergedNotBent);
    }
    let recipe = ConstructionRecipe {
        mode,
        fks: fks.to_vec(),
        beta1: b1,
        beta2: b2,
        delta: ip.delta(),
        ell,
        big_gamma: direction.map(|d| d.0),
        t: direction.map(|d| d.1),
        gammas,
        gamma_merge,
    };
    Ok(PipelineOutput { recipe, gs, f: merged, spectrum, classification })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::BentKind;
    use crate::cyclotomic::{value_class, ValueClass};
    use crate::walsh::spectrum_multiset;
    use alloc::string::String;
    use alloc::vec;

    fn ex1(ctx: &FieldCtx) -> Vec<FpFunction> {
        vec![
            FpFunction::trace_form(ctx, &[(ctx.exp(1), 5)]),
            FpFunction::trace_form(ctx, &[(ctx.exp(22), 5)]),
        ]
    }

    fn ex3(ctx: &FieldCtx) -> Vec<FpFunction> {
        let f0 = FpFunction::trace_form(ctx, &[(ctx.scalar(2), 2), (FElem::ONE, 10)]);
        let f1 = FpFunction::trace_form(ctx, &[(ctx.scalar(2), 2), (FElem::ONE, 4)]);
        vec![f0, f1.clone(), f1]
    }

    fn ms(v: &[(&str, usize)]) -> Vec<(String, usize)> {
        v.iter().map(|&(s, k)| (String::from(s), k)).collect()
    }

    #[test]
    fn delta_scan() {
        let ctx = FieldCtx::named("ex1").unwrap();
        let ip = find_delta(&ctx, ctx.exp(25), ctx.exp(46), Mode::Strict).unwrap();
        assert_eq!(ip.delta(), FElem::ONE);

        let ctx = FieldCtx::named("ex3").unwrap();
        let (b1, b2) = (ctx.generator(), FElem::ONE);
        assert_eq!(find_delta(&ctx, b1, b2, Mode::Relaxed).unwrap().delta(), FElem::ONE);
        let strict = find_delta(&ctx, b1, b2, Mode::Strict).unwrap();
        assert_ne!(strict.delta(), FElem::ONE);
        // first hit in log order, checked against direct trace evaluation
        let k = ctx.log(strict.delta()).unwrap();
        for j in 0..=k {
            let d = ctx.exp(j as u64);
            let ok = ctx.trace(ctx.mul(d, ctx.mul(b1, b2))) == 0
                && ctx.trace(ctx.mul(d, ctx.mul(b1, b1))) != 0
                && ctx.trace(ctx.mul(d, ctx.mul(b2, b2))) != 0;
            assert_eq!(ok, j == k);
        }
        assert_eq!(
            find_delta_bounded(&ctx, b1, b2, Mode::Strict, k as u64),
            Err(ConstructionError::DeltaNotFound)
        );
        assert_eq!(find_delta(&ctx, b1, ctx.scale(2, b1), Mode::Strict), Err(ConstructionError::DependentBetas));
    }

    #[test]
    fn gammas_for_equal_inputs_vanish() {
        let ctx = FieldCtx::named("ex2").unwrap();
        let f = FpFunction::trace_form(&ctx, &[(ctx.exp(4), 28)]);
        let fks = vec![f.clone(), f.clone(), f];
        let b2 = ctx.from_coords(&[1, 2, 0, 1]);
        let gs = select_gammas(&ctx, &fks, b2, b2, 1);
        assert_eq!(gs[0], FElem::ZERO);
    }

    #[test]
    fn example_gammas_satisfy_the_equations() {
        let ctx = FieldCtx::named("ex1").unwrap();
        let ip = InnerProduct::standard();
        let fks = ex1(&ctx);
        validate_gammas(&ctx, &ip, &fks, ctx.exp(25), ctx.exp(46), &[FElem::ZERO, ctx.exp(3)]).unwrap();

        let ctx = FieldCtx::named("ex3").unwrap();
        let fks = ex3(&ctx);
        let g2 = ctx.exp(2);
        let gammas = [FElem::ZERO, ctx.scale(2, g2), g2];
        validate_gammas(&ctx, &ip, &fks, ctx.generator(), FElem::ONE, &gammas).unwrap();
        let bad = [FElem::ZERO, g2, g2];
        assert!(matches!(
            validate_gammas(&ctx, &ip, &fks, ctx.generator(), FElem::ONE, &bad),
            Err(ConstructionError::BadGamma { index: 1, .. })
        ));
    }

    #[test]
    fn merges_agree() {
        for name in ["ex1", "ex2", "ex3"] {
            let ctx = FieldCtx::named(name).unwrap();
            let p = ctx.p();
            let ip = InnerProduct::new(ctx.exp(3)).unwrap();
            let gs: Vec<FpFunction> = (0..p)
                .map(|k| FpFunction::trace_form(&ctx, &[(ctx.exp(k as u64 + 1), 2), (ctx.exp(7 * k as u64), 1)]))
                .collect();
            for gl in [1u64, 5, 9] {
                let gamma = ctx.exp(gl);
                assert_eq!(merge_indicator(&ctx, &gs, gamma, &ip), merge_branch(&ctx, &gs, gamma, &ip));
            }
            let same = vec![gs[0].clone(); p as usize];
            assert_eq!(merge_indicator(&ctx, &same, ctx.exp(2), &ip), gs[0]);
        }
    }

    #[test]
    fn example_one_pipeline() {
        let ctx = FieldCtx::named("ex1").unwrap();
        let opts = PipelineOptions {
            gammas: Some(vec![FElem::ZERO, ctx.exp(3)]),
            ..Default::default()
        };
        let out = run_pipeline(&ctx, &ex1(&ctx), ctx.exp(25), ctx.exp(46), Mode::Strict, &opts).unwrap();
        assert_eq!(spectrum_multiset(&out.spectrum), ms(&[("-8", 28), ("8", 36)]));
        assert_eq!(out.classification.kind, BentKind::Regular);
        assert_eq!(out.recipe.gamma_merge, ctx.exp(25));

        // the scan's own gamma choice is also bent
        let auto = run_pipeline(&ctx, &ex1(&ctx), ctx.exp(25), ctx.exp(46), Mode::Strict, &Default::default()).unwrap();
        assert!(auto.classification.kind.is_bent());
    }

    #[test]
    fn example_three_relaxed() {
        let ctx = FieldCtx::named("ex3").unwrap();
        let (b1, b2) = (ctx.generator(), FElem::ONE);
        let fks = ex3(&ctx);
        let out = run_pipeline(&ctx, &fks, b1, b2, Mode::Relaxed, &Default::default()).unwrap();
        assert_eq!(out.recipe.delta, FElem::ONE);
        assert_eq!(out.recipe.gamma_merge, ctx.scale(2, b1));
        assert_eq!(out.classification.kind, BentKind::WeaklyRegular);
        assert!(matches!(
            run_pipeline(&ctx, &fks, b1, b2, Mode::Strict, &PipelineOptions { delta: Some(FElem::ONE), ..Default::default() }),
            Err(ConstructionError::BadDelta(_))
        ));
    }

    #[test]
    fn pipeline_validation() {
        let ctx = FieldCtx::named("ex3").unwrap();
        let (b1, b2) = (ctx.generator(), FElem::ONE);
        let mut fks = ex3(&ctx);
        assert_eq!(
            run_pipeline(&ctx, &fks[..2], b1, b2, Mode::Relaxed, &Default::default()).unwrap_err(),
            ConstructionError::WrongCount { expected: 3, got: 2 }
        );
        assert_eq!(
            run_pipeline(&ctx, &fks, b1, b1, Mode::Relaxed, &Default::default()).unwrap_err(),
            ConstructionError::DependentBetas
        );
        fks[2] = FpFunction::trace_form(&ctx, &[(FElem::ONE, 2)]);
        assert_eq!(
            run_pipeline(&ctx, &fks, b1, b2, Mode::Relaxed, &Default::default()).unwrap_err(),
            ConstructionError::WrongLinearSpace { index: 2 }
        );
        fks[2] = fks[1].plus(&FpFunction::constant(&ctx, 1));
        assert_eq!(
            run_pipeline(&ctx, &fks, b1, b2, Mode::Relaxed, &Default::default()).unwrap_err(),
            ConstructionError::IngredientNotNormalized { index: 2 }
        );
    }

    #[test]
    fn monomial_predicate_examples() {
        assert!(monomial_is_2plateaued(2, 6, 2, 1));
        assert!(monomial_is_2plateaued(2, 6, 2, 22));
        assert!(monomial_is_2plateaued(3, 4, 3, 4));
        assert!(!monomial_is_2plateaued(3, 3, 1, 4));
        let ctx = FieldCtx::named("ex1").unwrap();
        let f = FpFunction::trace_form(&ctx, &[(ctx.exp(22), 5)]);
        assert_eq!(walsh_fast(&ctx, &f, &InnerProduct::standard()).plateau_order(), Some(2));
    }

    #[test]
    fn binomial_examples() {
        let ctx = FieldCtx::named("ex3").unwrap();
        let (f, two) = binomial_build(&ctx, 1).unwrap();
        assert!(two);
        assert_eq!(f, FpFunction::trace_form(&ctx, &[(ctx.scalar(2), 2), (FElem::ONE, 10)]));
        assert_eq!(linear_space(&ctx, &f).space, Subspace::span(&ctx, &[ctx.generator(), FElem::ONE]));
        let (f, _) = binomial_build(&ctx, 0).unwrap();
        assert_eq!(f, FpFunction::trace_form(&ctx, &[(ctx.scalar(2), 2), (FElem::ONE, 4)]));

        let ctx = FieldCtx::with_default_poly(3, 6).unwrap();
        let (f, two) = binomial_build(&ctx, 1).unwrap();
        assert!(!two);
        let dim = linear_space(&ctx, &f).space.dim();
        assert!(dim > 2);
        assert_eq!(binomial_kernel(&ctx, 1).dim(), dim);

        let ctx = FieldCtx::named("ex2").unwrap();
        assert_eq!(binomial_build(&ctx, 1).unwrap_err(), ConstructionError::BadN { n: 4 });
    }

    #[test]
    fn nonsquare_multiplier_flips_signs() {
        let ctx = FieldCtx::named("ex3").unwrap();
        let ip = InnerProduct::standard();
        let f = binomial_function(&ctx, 1);
        let a = walsh_fast(&ctx, &f, &ip);
        let b = walsh_fast(&ctx, &f.scaled(2), &ip);
        let mut nonzero = 0;
        for ((_, wa), (_, wb)) in a.entries().iter().zip(b.entries()) {
            match (value_class(wa), value_class(wb)) {
                (ValueClass::Zero, ValueClass::Zero) => {}
                (ValueClass::Normalized { sign: sa, .. }, ValueClass::Normalized { sign: sb, .. }) => {
                    assert_eq!(sa, -sb);
                    nonzero += 1;
                }
                other => panic!("unexpected classes {other:?}"),
            }
        }
        assert_eq!(nonzero, 3);
    }

    #[test]
    fn nwr_examples() {
        let ctx = FieldCtx::named("ex3").unwrap();
        let (b1, b2, ip, big_gamma) = nwr_defaults(&ctx).unwrap();
        assert_eq!(Subspace::span(&ctx, &[b1, b2]), Subspace::span(&ctx, &[ctx.generator(), FElem::ONE]));
        for (a, nwr) in [([1u32, 1, 1], false), ([1, 2, 2], true)] {
            let params = NwrParams::new(&ctx, 1, &a, b2, &ip, big_gamma).unwrap();
            assert_eq!(params.has_nonsquare(3), nwr);
            let f = nwr_build(&ctx, &params, b1, b2, &ip, big_gamma).unwrap();
            let kind = classify_spectrum(&ctx, &walsh_fast(&ctx, &f, &ip)).kind;
            assert_eq!(kind == BentKind::NotWeaklyRegular, nwr);
            assert!(kind.is_bent());
        }
        assert!(matches!(
            NwrParams::new(&ctx, 1, &[1, 0, 2], b2, &ip, big_gamma),
            Err(ConstructionError::PreconditionViolated(_))
        ));
    }
}
