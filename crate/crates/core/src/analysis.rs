//! Derivatives, linear structures, plateau orders and the bent / regular
//! classification.

use alloc::vec::Vec;

use crate::cyclotomic::{normalize_coeff, Unit};
use crate::field::{FElem, FieldCtx, InnerProduct, Subspace};
use crate::function::FpFunction;
use crate::walsh::{coordinate_spectrum, plateau_of_values, walsh_fast, WalshError, WalshSpectrum};

/// `x -> f(x + a) - f(x)`.
pub fn derivative(ctx: &FieldCtx, f: &FpFunction, a: FElem) -> FpFunction {
    let p = ctx.p();
    FpFunction::from_fn(ctx, |x| (f.value(ctx.add(x, a)) + p - f.value(x)) % p)
}

/// Every value of F_p is taken equally often.
pub fn is_balanced(h: &FpFunction) -> bool {
    let p = h.p() as usize;
    if !h.len().is_multiple_of(p) {
        return false;
    }
    let mut counts = alloc::vec![0usize; p];
    for &v in h.values() {
        counts[v as usize] += 1;
    }
    counts.iter().all(|&c| c == h.len() / p)
}

fn derivative_is_constant(ctx: &FieldCtx, f: &FpFunction, a: FElem) -> bool {
    let p = ctx.p();
    let c = (f.value(a) + p - f.value(FElem::ZERO)) % p;
    ctx.elements()
        .all(|x| (f.value(ctx.add(x, a)) + p - f.value(x)) % p == c)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearSpaceReport {
    /// The linear structures of `f`.
    pub space: Subspace,
    /// `f - f(0)` is additive on `space`.
    pub restricted_linear: bool,
}

/// The subspace of linear structures `a` (those with `D_a f` constant).
///
/// Every element outside the current span is tested, stopping at the first
/// point where the derivative differs from `f(a) - f(0)`; once a structure is
/// found its whole span is skipped.
pub fn linear_space(ctx: &FieldCtx, f: &FpFunction) -> LinearSpaceReport {
    let mut space = Subspace::zero();
    let mut seen = alloc::vec![false; ctx.size()];
    seen[0] = true;
    for a in ctx.elements() {
        if seen[a.index()] {
            continue;
        }
        if derivative_is_constant(ctx, f, a) {
            space = space.sum(ctx, &Subspace::span(ctx, &[a]));
            for x in space.elements(ctx) {
                seen[x.index()] = true;
            }
        }
    }
    let g = f.centered();
    let elems = space.elements(ctx);
    let restricted_linear = elems.iter().all(|&u| {
        space
            .basis()
            .iter()
            .all(|&v| g.value(ctx.add(u, v)) == (g.value(u) + g.value(v)) % ctx.p())
    });
    LinearSpaceReport { space, restricted_linear }
}

/// Every derivative is balanced or constant.
pub fn is_partially_bent(ctx: &FieldCtx, f: &FpFunction) -> bool {
    ctx.elements().skip(1).all(|a| {
        let d = derivative(ctx, f, a);
        is_balanced(&d) || d.values().iter().all(|&v| v == d.values()[0])
    })
}

/// `f` is bent iff every nonzero derivative is balanced.
pub fn is_bent_by_derivatives(ctx: &FieldCtx, f: &FpFunction) -> bool {
    ctx.elements().skip(1).all(|a| is_balanced(&derivative(ctx, f, a)))
}

/// `s` with `|f^(b)|^2` in `{0, p^(n+s)}` for all `b`.
pub fn plateau_order(ctx: &FieldCtx, f: &FpFunction, ip: &InnerProduct) -> Option<u32> {
    walsh_fast(ctx, f, ip).plateau_order()
}

/// Plateau order of `f` restricted to `w`.
pub fn restricted_plateau_order(ctx: &FieldCtx, f: &FpFunction, w: &Subspace) -> Result<Option<u32>, WalshError> {
    let values = coordinate_spectrum(ctx, f, w)?;
    Ok(plateau_of_values(ctx.p(), w.dim() as u32, &values))
}

/// Whether `a` is a linear structure of `f` restricted to `w` (`a` in `w`).
pub fn is_linear_structure_on(ctx: &FieldCtx, f: &FpFunction, w: &Subspace, a: FElem) -> bool {
    let p = ctx.p();
    let elems = w.elements(ctx);
    let c = (f.value(ctx.add(elems[0], a)) + p - f.value(elems[0])) % p;
    elems.iter().all(|&x| (f.value(ctx.add(x, a)) + p - f.value(x)) % p == c)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BentKind {
    NotBent,
    Regular,
    WeaklyRegular,
    NotWeaklyRegular,
}

impl BentKind {
    pub fn name(self) -> &'static str {
        match self {
            BentKind::NotBent => "NotBent",
            BentKind::Regular => "Regular",
            BentKind::WeaklyRegular => "WeaklyRegular",
            BentKind::NotWeaklyRegular => "NotWeaklyRegular",
        }
    }

    pub fn is_bent(self) -> bool {
        self != BentKind::NotBent
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BentClassification {
    pub kind: BentKind,
    /// The common `zeta` with `f^(b) = zeta p^(n/2) eps^(f*(b))` when weakly regular.
    pub unit: Option<Unit>,
    /// `f*` when bent and the spectrum covers the whole field.
    pub dual: Option<FpFunction>,
    /// Sign in front of each coefficient as rendered, i.e. `sigma(b)` times
    /// the sign of the Gauss-sum unit, sorted by `b`.
    pub sign_profile: Vec<(FElem, i8)>,
}

impl BentClassification {
    /// Counts of `+1` and `-1` in the sign profile.
    pub fn sign_counts(&self) -> (usize, usize) {
        let plus = self.sign_profile.iter().filter(|(_, s)| *s > 0).count();
        (plus, self.sign_profile.len() - plus)
    }

    fn not_bent() -> Self {
        BentClassification {
            kind: BentKind::NotBent,
            unit: None,
            dual: None,
            sign_profile: Vec::new(),
        }
    }
}

pub fn classify(ctx: &FieldCtx, f: &FpFunction, ip: &InnerProduct) -> BentClassification {
    classify_spectrum(ctx, &walsh_fast(ctx, f, ip))
}

/// Classification from an already computed spectrum.
pub fn classify_spectrum(ctx: &FieldCtx, s: &WalshSpectrum) -> BentClassification {
    let p = s.p();
    let m = s.domain().dim() as u32;
    let mut signs = Vec::with_capacity(s.len());
    let mut zetas = Vec::with_capacity(s.len());
    let mut dual = Vec::with_capacity(s.len());
    for (b, w) in s.entries() {
        if p == 2 {
            let v = w.coeffs()[0];
            if v.unsigned_abs().checked_pow(2) != 1u64.checked_shl(m) {
                return BentClassification::not_bent();
            }
            let sign = v.signum() as i8;
            signs.push((*b, sign));
            zetas.push(Unit::One);
            dual.push(if sign > 0 { 0 } else { 1 });
        } else {
            match normalize_coeff(w, m) {
                Ok(nc) => {
                    signs.push((*b, nc.display_sign()));
                    zetas.push(nc.zeta());
                    dual.push(nc.eps_exp);
                }
                Err(_) => return BentClassification::not_bent(),
            }
        }
    }
    let unit = zetas.windows(2).all(|w| w[0] == w[1]).then(|| zetas[0]);
    let kind = match unit {
        Some(Unit::One) => BentKind::Regular,
        Some(_) => BentKind::WeaklyRegular,
        None => BentKind::NotWeaklyRegular,
    };
    let dual = s
        .domain()
        .is_full(ctx)
        .then(|| FpFunction::from_values(ctx, dual).expect("one dual value per element"));
    BentClassification { kind, unit, dual, sign_profile: signs }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::orthogonal_complement;

    fn digit_sum(p: u64, mut e: u64) -> u64 {
        let mut s = 0;
        while e > 0 {
            s += e % p;
            e /= p;
        }
        s
    }

    #[test]
    fn derivatives() {
        let ctx = FieldCtx::named("ex3").unwrap();
        let f = FpFunction::trace_form(&ctx, &[(ctx.scalar(2), 2), (FElem::ONE, 10)]);
        assert!(derivative(&ctx, &f, FElem::ZERO).values().iter().all(|&v| v == 0));
        let d = derivative(&ctx, &f, ctx.generator());
        assert!(d.values().iter().all(|&v| v == d.values()[0]));

        let c = ctx.exp(7);
        let lin = FpFunction::trace_form(&ctx, &[(c, 1)]);
        for a in ctx.elements() {
            let d = derivative(&ctx, &lin, a);
            assert!(d.values().iter().all(|&v| v == ctx.trace(ctx.mul(c, a))));
        }
    }

    #[test]
    fn balance() {
        let ctx = FieldCtx::named("ex2").unwrap();
        assert!(is_balanced(&FpFunction::trace_form(&ctx, &[(ctx.exp(3), 1)])));
        assert!(!is_balanced(&FpFunction::constant(&ctx, 0)));
    }

    #[test]
    fn linear_spaces_of_examples() {
        let ctx = FieldCtx::named("ex1").unwrap();
        let r = linear_space(&ctx, &FpFunction::trace_form(&ctx, &[(ctx.generator(), 5)]));
        assert_eq!(r.space, Subspace::span(&ctx, &[ctx.exp(25), ctx.exp(46)]));
        assert!(r.restricted_linear);

        let ctx = FieldCtx::named("ex3").unwrap();
        let f = FpFunction::trace_form(&ctx, &[(ctx.scalar(2), 2), (FElem::ONE, 10)]);
        let r = linear_space(&ctx, &f);
        assert_eq!(r.space, Subspace::span(&ctx, &[ctx.generator(), FElem::ONE]));
        for a in ctx.elements() {
            let constant = derivative(&ctx, &f, a).values().windows(2).all(|w| w[0] == w[1]);
            assert_eq!(constant, r.space.contains(&ctx, a));
        }
    }

    #[test]
    fn bent_function_has_trivial_linear_space() {
        let ctx = FieldCtx::named("ex3").unwrap();
        let f = FpFunction::trace_form(&ctx, &[(FElem::ONE, 2)]);
        assert_eq!(linear_space(&ctx, &f).space.dim(), 0);
        assert_eq!(plateau_order(&ctx, &f, &InnerProduct::standard()), Some(0));
    }

    #[test]
    fn partially_bent() {
        let ctx = FieldCtx::named("ex2").unwrap();
        assert!(is_partially_bent(&ctx, &FpFunction::trace_form(&ctx, &[(ctx.exp(4), 28)])));
        assert!(is_partially_bent(&ctx, &FpFunction::trace_form(&ctx, &[(ctx.exp(9), 1)])));

        let ctx = FieldCtx::named("ex3").unwrap();
        let found = (1..26u64)
            .filter(|&e| digit_sum(3, e) == 3)
            .flat_map(|e| (0..26u64).map(move |k| (k, e)))
            .map(|(k, e)| FpFunction::trace_form(&ctx, &[(ctx.exp(k), e)]))
            .find(|f| !is_partially_bent(&ctx, f));
        assert!(found.is_some());
    }

    #[test]
    fn plateau_orders() {
        let ctx = FieldCtx::named("ex1").unwrap();
        let ip = InnerProduct::standard();
        let f0 = FpFunction::trace_form(&ctx, &[(ctx.generator(), 5)]);
        assert_eq!(plateau_order(&ctx, &f0, &ip), Some(2));
        assert_eq!(plateau_order(&ctx, &FpFunction::trace_form(&ctx, &[(FElem::ONE, 1)]), &ip), Some(6));

        let ctx = FieldCtx::named("ex2").unwrap();
        let f = FpFunction::trace_form(&ctx, &[(ctx.exp(4), 28)]);
        assert_eq!(plateau_order(&ctx, &f, &ip), Some(2));
        assert_eq!(linear_space(&ctx, &f).space.dim(), 2);
    }

    #[test]
    fn restriction_to_complement_is_bent() {
        let ctx = FieldCtx::named("ex3").unwrap();
        let ip = InnerProduct::standard();
        let f = FpFunction::trace_form(&ctx, &[(ctx.scalar(2), 2), (FElem::ONE, 10)]);
        let lambda = linear_space(&ctx, &f).space;
        assert_eq!(restricted_plateau_order(&ctx, &f, &lambda.complement(&ctx)).unwrap(), Some(0));

        // near-bent on <b2> + complement, with b2 = 1 a linear structure there
        let b1 = ctx.generator();
        let v = orthogonal_complement(&ctx, &ip, &Subspace::span(&ctx, &[b1]));
        assert_eq!(restricted_plateau_order(&ctx, &f, &v).unwrap(), Some(1));
        assert!(is_linear_structure_on(&ctx, &f, &v, FElem::ONE));
    }

    #[test]
    fn support_on_linear_space() {
        // b in supp iff f(z) = <b, z> on the linear space (f(0) = 0)
        let ctx = FieldCtx::named("ex2").unwrap();
        let ip = InnerProduct::new(ctx.exp(11)).unwrap();
        let f = FpFunction::trace_form(&ctx, &[(ctx.exp(4), 28)]);
        let lambda = linear_space(&ctx, &f).space;
        let s = walsh_fast(&ctx, &f, &ip);
        for (b, w) in s.entries() {
            let agrees = lambda
                .elements(&ctx)
                .iter()
                .all(|&z| f.value(z) == ctx.inner(&ip, *b, z));
            assert_eq!(!w.is_zero(), agrees);
        }
        assert_eq!(s.support().len(), 81 / 9);
    }

    #[test]
    fn classification_of_simple_functions() {
        let ip = InnerProduct::standard();
        let ctx = FieldCtx::named("ex2").unwrap();
        let c = classify(&ctx, &FpFunction::trace_form(&ctx, &[(ctx.exp(4), 28)]), &ip);
        assert_eq!(c.kind, BentKind::NotBent);

        // Tr(x^2) over F_81: coefficients are Gauss-sum products, regular iff zeta = 1
        let f = FpFunction::trace_form(&ctx, &[(FElem::ONE, 2)]);
        let c = classify(&ctx, &f, &ip);
        assert!(c.kind.is_bent());
        assert!(c.unit.is_some());
        assert!(is_bent_by_derivatives(&ctx, &f));

        let ctx = FieldCtx::named("ex1").unwrap();
        let f = FpFunction::from_fn(&ctx, |x| {
            let c = ctx.coords(x);
            (c[0] * c[1] + c[2] * c[3] + c[4] * c[5]) % 2
        });
        let c = classify(&ctx, &f, &ip);
        assert_eq!(c.kind, BentKind::Regular);
        assert_eq!(c.unit, Some(Unit::One));
        assert_eq!(c.sign_counts().0 + c.sign_counts().1, 64);
    }

    #[test]
    fn dual_reconstructs_coefficients() {
        use crate::cyclotomic::{gauss_sum, CycInt};
        let ctx = FieldCtx::named("ex3").unwrap();
        let ip = InnerProduct::standard();
        let f = FpFunction::trace_form(&ctx, &[(ctx.exp(5), 2)]);
        let s = walsh_fast(&ctx, &f, &ip);
        let c = classify_spectrum(&ctx, &s);
        let dual = c.dual.unwrap();
        let unit = c.unit.unwrap();
        // f^(b) conj(G)^3 = zeta u^{-1} 27 eps^{f*(b)}; compare the scaled values
        let g3 = gauss_sum(3).unwrap().conj().pow(3);
        let sign = unit.sign() as i64 * crate::cyclotomic::gauss_unit(3, 3).sign() as i64;
        for (b, w) in s.entries() {
            let expected = CycInt::eps_pow(3, dual.value(*b) as u64).scale(27 * sign);
            assert_eq!(w.clone() * g3.clone(), expected);
        }
    }
}
