//! Input formats: field descriptors, elements, functions and recipes.

use bentforge_core::construction::{run_pipeline, Mode, PipelineOptions, PipelineOutput};
use bentforge_core::field::{FElem, FieldCtx};
use bentforge_core::function::FpFunction;
use serde::{Deserialize, Serialize};

use crate::error::CliError;

/// Default limit on `p^n` for every command.
pub const DEFAULT_MAX_DOMAIN: u64 = 1 << 16;

/// The domain guard, overridable through `BENTFORGE_MAX_DOMAIN`.
pub fn max_domain() -> u64 {
    std::env::var("BENTFORGE_MAX_DOMAIN")
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_MAX_DOMAIN)
}

pub fn check_domain(ctx: &FieldCtx, limit: u64) -> Result<(), CliError> {
    if ctx.order() > limit {
        return Err(CliError::RangeTooLarge { size: ctx.order(), limit });
    }
    Ok(())
}

/// A named field (`"ex1"`) or `{"p":..,"n":..,"prim_poly":[c0,..,cn]}`;
/// without `prim_poly` the first primitive polynomial is used.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum FieldSpec {
    Named(String),
    Explicit {
        p: u32,
        n: u32,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        prim_poly: Option<Vec<u32>>,
    },
}

impl FieldSpec {
    pub fn build(&self) -> Result<FieldCtx, CliError> {
        match self {
            FieldSpec::Named(name) => {
                FieldCtx::named(name).ok_or_else(|| CliError::Validation(format!("unknown field name {name:?}")))
            }
            FieldSpec::Explicit { p, n, prim_poly: Some(poly) } => Ok(FieldCtx::new(*p, *n, poly)?),
            FieldSpec::Explicit { p, n, prim_poly: None } => Ok(FieldCtx::with_default_poly(*p, *n)?),
        }
    }

    pub fn describe(ctx: &FieldCtx) -> Self {
        FieldSpec::Explicit { p: ctx.p(), n: ctx.n(), prim_poly: Some(ctx.prim_poly().to_vec()) }
    }
}

/// A field element: a prime-field integer, `{"log":k}` for `g^k`, or
/// `{"coords":[c0,..]}` in the polynomial basis.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ElemSpec {
    Scalar(u32),
    Log { log: u64 },
    Coords { coords: Vec<u32> },
}

impl ElemSpec {
    pub fn resolve(&self, ctx: &FieldCtx) -> Result<FElem, CliError> {
        match self {
            ElemSpec::Scalar(c) if *c < ctx.p() => Ok(ctx.scalar(*c)),
            ElemSpec::Scalar(c) => Err(CliError::Validation(format!("{c} is not an element of F_{}", ctx.p()))),
            ElemSpec::Log { log } => Ok(ctx.exp(*log)),
            ElemSpec::Coords { coords } => {
                if coords.len() != ctx.n() as usize || coords.iter().any(|&c| c >= ctx.p()) {
                    return Err(CliError::Validation(format!("bad coordinate vector {coords:?}")));
                }
                Ok(ctx.from_coords(coords))
            }
        }
    }

    /// Canonical form: zero as `0`, otherwise `{"log":k}` when logs are tabulated.
    pub fn of(ctx: &FieldCtx, x: FElem) -> Self {
        if x.is_zero() {
            return ElemSpec::Scalar(0);
        }
        match ctx.log(x) {
            Some(k) => ElemSpec::Log { log: k as u64 },
            None => ElemSpec::Coords { coords: ctx.coords(x) },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermSpec {
    pub coef: ElemSpec,
    pub exp: u64,
}

/// `x -> Tr(sum coef x^exp) + Tr(linear x)`, or an explicit value table
/// indexed by packed coordinates.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct FunctionBody {
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub terms: Vec<TermSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub linear: Option<ElemSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub table: Option<Vec<u32>>,
}

impl FunctionBody {
    pub fn build(&self, ctx: &FieldCtx) -> Result<FpFunction, CliError> {
        if let Some(table) = &self.table {
            if !self.terms.is_empty() || self.linear.is_some() {
                return Err(CliError::Validation("a value table excludes terms and linear".into()));
            }
            return Ok(FpFunction::from_values(ctx, table.clone())?);
        }
        let mut terms = Vec::with_capacity(self.terms.len() + 1);
        for t in &self.terms {
            if t.exp >= ctx.order() {
                return Err(CliError::Validation(format!("exponent {} is not below p^n = {}", t.exp, ctx.order())));
            }
            terms.push((t.coef.resolve(ctx)?, t.exp));
        }
        if let Some(c) = &self.linear {
            terms.push((c.resolve(ctx)?, 1));
        }
        Ok(FpFunction::trace_form(ctx, &terms))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FunctionSpec {
    pub field: FieldSpec,
    #[serde(flatten)]
    pub body: FunctionBody,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ModeSpec {
    Strict,
    Relaxed,
}

impl From<ModeSpec> for Mode {
    fn from(m: ModeSpec) -> Self {
        match m {
            ModeSpec::Strict => Mode::Strict,
            ModeSpec::Relaxed => Mode::Relaxed,
        }
    }
}

/// A merge recipe. `delta`, `big_gamma` and `gammas` replace the scans when
/// present; `ell`, `t` and `gamma_merge` are derived and, when present, must
/// agree with the derived values.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RecipeFile {
    pub field: FieldSpec,
    pub mode: ModeSpec,
    pub fks: Vec<FunctionBody>,
    pub beta1: ElemSpec,
    pub beta2: ElemSpec,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub delta: Option<ElemSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub big_gamma: Option<ElemSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gammas: Option<Vec<ElemSpec>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ell: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub t: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gamma_merge: Option<ElemSpec>,
}

pub struct RecipeRun {
    pub ctx: FieldCtx,
    pub output: PipelineOutput,
    /// The input recipe with every derived field filled in.
    pub resolved: RecipeFile,
}

impl RecipeFile {
    pub fn run(&self, limit: u64) -> Result<RecipeRun, CliError> {
        let ctx = self.field.build()?;
        check_domain(&ctx, limit)?;
        let fks = self.fks.iter().map(|f| f.build(&ctx)).collect::<Result<Vec<_>, _>>()?;
        let b1 = self.beta1.resolve(&ctx)?;
        let b2 = self.beta2.resolve(&ctx)?;
        let options = PipelineOptions {
            delta: self.delta.as_ref().map(|d| d.resolve(&ctx)).transpose()?,
            big_gamma: self.big_gamma.as_ref().map(|d| d.resolve(&ctx)).transpose()?,
            gammas: self
                .gammas
                .as_ref()
                .map(|gs| gs.iter().map(|g| g.resolve(&ctx)).collect::<Result<Vec<_>, _>>())
                .transpose()?,
            subspace_limit: Some(limit),
        };
        let output = run_pipeline(&ctx, &fks, b1, b2, self.mode.into(), &options)?;
        let r = &output.recipe;
        if self.ell.is_some_and(|ell| ell != r.ell) {
            return Err(CliError::Validation(format!("ell is {} for this recipe", r.ell)));
        }
        if self.t.is_some() && self.t != r.t {
            return Err(CliError::Validation(format!("t is {:?} for this recipe", r.t)));
        }
        if let Some(gm) = &self.gamma_merge {
            if gm.resolve(&ctx)? != r.gamma_merge {
                return Err(CliError::Validation("gamma_merge differs from ell^-1 beta1".into()));
            }
        }
        let resolved = RecipeFile {
            field: self.field.clone(),
            mode: self.mode,
            fks: self.fks.clone(),
            beta1: ElemSpec::of(&ctx, r.beta1),
            beta2: ElemSpec::of(&ctx, r.beta2),
            delta: Some(ElemSpec::of(&ctx, r.delta)),
            big_gamma: r.big_gamma.map(|g| ElemSpec::of(&ctx, g)),
            gammas: Some(r.gammas.iter().map(|&g| ElemSpec::of(&ctx, g)).collect()),
            ell: Some(r.ell),
            t: r.t,
            gamma_merge: Some(ElemSpec::of(&ctx, r.gamma_merge)),
        };
        Ok(RecipeRun { ctx, output, resolved })
    }
}
