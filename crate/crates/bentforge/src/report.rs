//! The analyze, construct and reproduce commands.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::Path;

use bentforge_core::analysis::{classify_spectrum, is_balanced, is_partially_bent, linear_space};
use bentforge_core::field::{FieldCtx, InnerProduct, TABLE_LIMIT};
use bentforge_core::function::FpFunction;
use bentforge_core::poly_repr::interpolate_bounded;
use bentforge_core::walsh::{walsh_fast, NAIVE_MAX_DOMAIN};
use serde::{Deserialize, Serialize};

use crate::error::CliError;
use crate::format::{multiset_text, ClassificationJson, MultisetEntry, PolynomialJson, SpectrumJson};
use crate::spec::{check_domain, ElemSpec, FieldSpec, FunctionBody, FunctionSpec, RecipeFile};

#[derive(Clone, Debug, Serialize)]
pub struct LinearSpaceJson {
    pub dim: usize,
    pub basis: Vec<ElemSpec>,
    pub restricted_linear: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct AnalysisReport {
    pub field: FieldSpec,
    pub plateau_s: Option<u32>,
    pub linear_space: LinearSpaceJson,
    /// Only decided for fields up to the naive-transform size.
    pub partially_bent: Option<bool>,
    pub balanced: bool,
    pub classification: ClassificationJson,
    pub spectrum: SpectrumJson,
    pub algebraic_degree: Option<u32>,
    pub polynomial: Option<PolynomialJson>,
    pub polynomial_text: Option<String>,
}

struct PolyInfo {
    degree: Option<u32>,
    json: Option<PolynomialJson>,
    text: Option<String>,
}

fn poly_info(ctx: &FieldCtx, f: &FpFunction, limit: u64) -> PolyInfo {
    match interpolate_bounded(ctx, f, limit.min(TABLE_LIMIT)) {
        Ok(poly) => PolyInfo {
            degree: Some(poly.algebraic_degree(ctx)),
            json: Some(PolynomialJson::new(ctx, &poly)),
            text: Some(poly.render(ctx)),
        },
        Err(_) => PolyInfo { degree: None, json: None, text: None },
    }
}

pub fn analyze(spec: &FunctionSpec, delta: Option<&ElemSpec>, limit: u64) -> Result<AnalysisReport, CliError> {
    let ctx = spec.field.build()?;
    check_domain(&ctx, limit)?;
    let f = spec.body.build(&ctx)?;
    let ip = match delta {
        Some(d) => InnerProduct::new(d.resolve(&ctx)?).ok_or_else(|| CliError::Validation("delta must be nonzero".into()))?,
        None => InnerProduct::standard(),
    };
    let spectrum = walsh_fast(&ctx, &f, &ip);
    let plateau_s = spectrum.plateau_order();
    let ls = linear_space(&ctx, &f);
    let poly = poly_info(&ctx, &f, limit);
    Ok(AnalysisReport {
        field: FieldSpec::describe(&ctx),
        plateau_s,
        linear_space: LinearSpaceJson {
            dim: ls.space.dim(),
            basis: ls.space.basis().iter().map(|&b| ElemSpec::of(&ctx, b)).collect(),
            restricted_linear: ls.restricted_linear,
        },
        partially_bent: (ctx.order() <= NAIVE_MAX_DOMAIN).then(|| is_partially_bent(&ctx, &f)),
        balanced: is_balanced(&f),
        classification: ClassificationJson::new(&classify_spectrum(&ctx, &spectrum), plateau_s),
        spectrum: SpectrumJson::new(&ctx, &spectrum, true),
        algebraic_degree: poly.degree,
        polynomial: poly.json,
        polynomial_text: poly.text,
    })
}

impl AnalysisReport {
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "plateau order: {}", opt(self.plateau_s));
        let _ = writeln!(s, "linear space dim: {}", self.linear_space.dim);
        let _ = writeln!(s, "linear space basis: {}", serde_json::to_string(&self.linear_space.basis).unwrap_or_default());
        let _ = writeln!(s, "partially bent: {}", opt(self.partially_bent));
        let _ = writeln!(s, "balanced: {}", self.balanced);
        write_classification(&mut s, &self.classification);
        let _ = writeln!(s, "spectrum: {}", multiset_text(&self.spectrum.multiset));
        let _ = writeln!(s, "algebraic degree: {}", opt(self.algebraic_degree));
        if let Some(text) = &self.polynomial_text {
            let _ = writeln!(s, "polynomial: {text}");
        }
        s
    }
}

fn opt<T: std::fmt::Display>(v: Option<T>) -> String {
    v.map_or_else(|| "-".to_string(), |v| v.to_string())
}

fn write_classification(s: &mut String, c: &ClassificationJson) {
    let _ = writeln!(s, "classification: {}", c.kind);
    let _ = writeln!(s, "unit: {}", c.unit.as_deref().unwrap_or("-"));
    let counts: Vec<String> = c.sign_counts.iter().map(|(k, v)| format!("{k}: {v}")).collect();
    let _ = writeln!(s, "sign counts: {}", counts.join(", "));
}

#[derive(Clone, Debug, Serialize)]
pub struct ConstructionReport {
    pub recipe: RecipeFile,
    pub classification: ClassificationJson,
    pub spectrum: SpectrumJson,
    pub algebraic_degree: Option<u32>,
    pub polynomial: Option<PolynomialJson>,
    pub polynomial_text: Option<String>,
}

/// Artifacts of a construction run.
pub struct Construction {
    pub report: ConstructionReport,
    pub spectrum: SpectrumJson,
    pub function: FunctionSpec,
}

pub fn construct(recipe: &RecipeFile, limit: u64) -> Result<Construction, CliError> {
    let run = recipe.run(limit)?;
    let ctx = &run.ctx;
    let out = &run.output;
    let plateau_s = out.spectrum.plateau_order();
    let poly = poly_info(ctx, &out.f, limit);
    let report = ConstructionReport {
        recipe: run.resolved.clone(),
        classification: ClassificationJson::new(&out.classification, plateau_s),
        spectrum: SpectrumJson::new(ctx, &out.spectrum, false),
        algebraic_degree: poly.degree,
        polynomial: poly.json,
        polynomial_text: poly.text,
    };
    let function = FunctionSpec {
        field: FieldSpec::describe(ctx),
        body: FunctionBody { table: Some(out.f.values().to_vec()), ..Default::default() },
    };
    Ok(Construction { report, spectrum: SpectrumJson::new(ctx, &out.spectrum, true), function })
}

impl Construction {
    /// Writes `recipe.json`, `report.json`, `spectrum.json` and `function.json`.
    pub fn write_to(&self, dir: &Path) -> Result<(), CliError> {
        std::fs::create_dir_all(dir)?;
        write_json(dir, "recipe.json", &self.report.recipe)?;
        write_json(dir, "report.json", &self.report)?;
        write_json(dir, "spectrum.json", &self.spectrum)?;
        write_json(dir, "function.json", &self.function)
    }
}

fn write_json<T: Serialize>(dir: &Path, name: &str, value: &T) -> Result<(), CliError> {
    std::fs::write(dir.join(name), serde_json::to_string_pretty(value)? + "\n")?;
    Ok(())
}

impl ConstructionReport {
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "delta: {}", serde_json::to_string(&self.recipe.delta).unwrap_or_default());
        let _ = writeln!(s, "gammas: {}", serde_json::to_string(&self.recipe.gammas).unwrap_or_default());
        let _ = writeln!(s, "gamma: {}", serde_json::to_string(&self.recipe.gamma_merge).unwrap_or_default());
        write_classification(&mut s, &self.classification);
        let _ = writeln!(s, "spectrum: {}", multiset_text(&self.spectrum.multiset));
        let _ = writeln!(s, "algebraic degree: {}", opt(self.algebraic_degree));
        if let Some(text) = &self.polynomial_text {
            let _ = writeln!(s, "polynomial: {text}");
        }
        s
    }
}

/// Expected values for a reproduced example; absent fields are not checked.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Golden {
    pub name: String,
    pub multiset: Vec<MultisetEntry>,
    pub kind: String,
    #[serde(default)]
    pub unit: Option<String>,
    #[serde(default)]
    pub sign_counts: Option<BTreeMap<String, usize>>,
    #[serde(default)]
    pub algebraic_degree: Option<u32>,
    #[serde(default)]
    pub polynomial: Option<PolynomialJson>,
}

impl Golden {
    /// Field-by-field differences between the golden and a report.
    pub fn diff(&self, r: &ConstructionReport) -> Vec<String> {
        let mut d = Vec::new();
        if self.multiset != r.spectrum.multiset {
            d.push(format!(
                "spectrum: expected {}, got {}",
                multiset_text(&self.multiset),
                multiset_text(&r.spectrum.multiset)
            ));
        }
        if self.kind != r.classification.kind {
            d.push(format!("classification: expected {}, got {}", self.kind, r.classification.kind));
        }
        if self.unit.is_some() && self.unit != r.classification.unit {
            d.push(format!("unit: expected {:?}, got {:?}", self.unit, r.classification.unit));
        }
        if let Some(sc) = &self.sign_counts {
            if sc != &r.classification.sign_counts {
                d.push(format!("sign counts: expected {sc:?}, got {:?}", r.classification.sign_counts));
            }
        }
        if self.algebraic_degree.is_some() && self.algebraic_degree != r.algebraic_degree {
            d.push(format!("algebraic degree: expected {:?}, got {:?}", self.algebraic_degree, r.algebraic_degree));
        }
        if let Some(p) = &self.polynomial {
            match &r.polynomial {
                Some(q) if q == p => {}
                Some(q) => {
                    let want: Vec<_> = p.terms.iter().map(|t| (t.exp, t.coef_log)).collect();
                    let got: Vec<_> = q.terms.iter().map(|t| (t.exp, t.coef_log)).collect();
                    let missing: Vec<_> = want.iter().filter(|t| !got.contains(t)).collect();
                    let extra: Vec<_> = got.iter().filter(|t| !want.contains(t)).collect();
                    d.push(format!(
                        "polynomial: {} terms expected, {} found; missing (exp, log) {missing:?}; unexpected {extra:?}",
                        want.len(),
                        got.len()
                    ));
                }
                None => d.push("polynomial: not computed".into()),
            }
        }
        d
    }
}

/// Names accepted by `reproduce`.
pub const EXAMPLES: [&str; 4] = ["ex1", "ex2", "ex3a", "ex3b"];

pub fn fixture(name: &str) -> Option<(RecipeFile, Golden)> {
    let (recipe, golden) = match name {
        "ex1" => (include_str!("../data/ex1.recipe.json"), include_str!("../data/ex1.golden.json")),
        "ex2" => (include_str!("../data/ex2.recipe.json"), include_str!("../data/ex2.golden.json")),
        "ex3a" => (include_str!("../data/ex3a.recipe.json"), include_str!("../data/ex3a.golden.json")),
        "ex3b" => (include_str!("../data/ex3b.recipe.json"), include_str!("../data/ex3b.golden.json")),
        _ => return None,
    };
    let recipe = serde_json::from_str(recipe).expect("bundled recipe parses");
    let golden = serde_json::from_str(golden).expect("bundled golden parses");
    Some((recipe, golden))
}

pub struct Reproduction {
    pub report: ConstructionReport,
    pub diffs: Vec<String>,
}

pub fn reproduce(name: &str, limit: u64) -> Result<Reproduction, CliError> {
    let (recipe, golden) = fixture(name).ok_or_else(|| {
        CliError::Validation(format!("unknown example {name:?}; expected one of {}", EXAMPLES.join(", ")))
    })?;
    let report = construct(&recipe, limit)?.report;
    let diffs = golden.diff(&report);
    Ok(Reproduction { report, diffs })
}
