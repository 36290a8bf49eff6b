//! Output documents: spectra, classifications and polynomials.

use std::collections::BTreeMap;

use bentforge_core::analysis::BentClassification;
use bentforge_core::cyclotomic::{render_value, CycInt};
use bentforge_core::field::FieldCtx;
use bentforge_core::poly_repr::UnivariatePoly;
use bentforge_core::walsh::{spectrum_multiset, WalshSpectrum};
use serde::{Deserialize, Serialize};

use crate::spec::ElemSpec;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycValue {
    pub coeffs: Vec<i64>,
    pub p: u32,
}

impl From<&CycInt> for CycValue {
    fn from(w: &CycInt) -> Self {
        CycValue { coeffs: w.coeffs().to_vec(), p: w.p() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectrumEntry {
    pub b: ElemSpec,
    pub value: CycValue,
    pub render: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultisetEntry {
    pub value: String,
    pub count: usize,
}

pub fn multiset_entries(s: &WalshSpectrum) -> Vec<MultisetEntry> {
    spectrum_multiset(s)
        .into_iter()
        .map(|(value, count)| MultisetEntry { value, count })
        .collect()
}

/// `{(-8)^28, (8)^36}`.
pub fn multiset_text(ms: &[MultisetEntry]) -> String {
    let parts: Vec<String> = ms.iter().map(|e| format!("({})^{}", e.value, e.count)).collect();
    format!("{{{}}}", parts.join(", "))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectrumJson {
    pub delta: ElemSpec,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub entries: Vec<SpectrumEntry>,
    pub multiset: Vec<MultisetEntry>,
}

impl SpectrumJson {
    pub fn new(ctx: &FieldCtx, s: &WalshSpectrum, with_entries: bool) -> Self {
        let entries = if with_entries {
            s.entries()
                .iter()
                .map(|(b, w)| SpectrumEntry { b: ElemSpec::of(ctx, *b), value: w.into(), render: render_value(w) })
                .collect()
        } else {
            Vec::new()
        };
        SpectrumJson { delta: ElemSpec::of(ctx, s.delta()), entries, multiset: multiset_entries(s) }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationJson {
    pub kind: String,
    pub unit: Option<String>,
    pub sign_counts: BTreeMap<String, usize>,
    pub plateau_s: Option<u32>,
}

impl ClassificationJson {
    pub fn new(c: &BentClassification, plateau_s: Option<u32>) -> Self {
        let (plus, minus) = c.sign_counts();
        ClassificationJson {
            kind: c.kind.name().to_string(),
            unit: c.unit.map(|u| u.symbol().to_string()),
            sign_counts: BTreeMap::from([("+1".to_string(), plus), ("-1".to_string(), minus)]),
            plateau_s,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub coef_log: u64,
    pub exp: u64,
}

/// Terms by descending exponent, coefficients as discrete logs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolynomialJson {
    pub terms: Vec<TermJson>,
}

impl PolynomialJson {
    pub fn new(ctx: &FieldCtx, poly: &UnivariatePoly) -> Self {
        PolynomialJson {
            terms: poly
                .terms()
                .map(|(exp, c)| TermJson {
                    coef_log: ctx.log(c).expect("interpolation only runs on tabulated fields") as u64,
                    exp,
                })
                .collect(),
        }
    }

    pub fn to_poly(&self, ctx: &FieldCtx) -> UnivariatePoly {
        UnivariatePoly::from_terms(ctx, self.terms.iter().map(|t| (t.exp, ctx.exp(t.coef_log))))
    }
}
