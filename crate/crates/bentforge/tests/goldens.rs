use bentforge::report::{construct, fixture, reproduce, EXAMPLES};
use bentforge::spec::DEFAULT_MAX_DOMAIN;
use bentforge_core::field::FieldCtx;

#[test]
fn ex1_ex2_ex3a_reproduce() {
    for name in ["ex1", "ex2", "ex3a"] {
        let r = reproduce(name, DEFAULT_MAX_DOMAIN).unwrap();
        assert!(r.diffs.is_empty(), "{name}: {:?}", r.diffs);
    }
}

#[test]
fn ex3b_differs_only_in_the_printed_polynomial() {
    let r = reproduce("ex3b", DEFAULT_MAX_DOMAIN).unwrap();
    assert_eq!(r.diffs.len(), 1, "{:?}", r.diffs);
    assert!(r.diffs[0].starts_with("polynomial:"));
    assert_eq!(r.report.algebraic_degree, Some(4));
    assert_eq!(r.report.classification.kind, "NotWeaklyRegular");
}

/// An F_p-valued function has `c_(pe mod q-1) = c_e^p` and prime-field
/// coefficients on fixed exponents; the printed 22-term polynomial breaks both.
#[test]
fn printed_ex3b_polynomial_is_not_fp_valued() {
    let (_, golden) = fixture("ex3b").unwrap();
    let printed = golden.polynomial.unwrap();
    let ctx = FieldCtx::named("ex3").unwrap();
    let poly = printed.to_poly(&ctx);
    assert_eq!(poly.len(), 22);
    let q1 = ctx.order() - 1;
    let broken = poly
        .terms()
        .filter(|&(e, c)| e > 0 && e < q1 && poly.coeff(e * 3 % q1) != ctx.pow(c, 3))
        .count();
    assert!(broken > 0);
    assert!(ctx.elements().any(|x| poly.evaluate(&ctx, x).0 >= 3));

    let built = reproduce("ex3b", DEFAULT_MAX_DOMAIN).unwrap().report.polynomial.unwrap().to_poly(&ctx);
    assert!(built.terms().all(|(e, c)| built.coeff(e * 3 % q1) == ctx.pow(c, 3) || e == q1));
    assert!(ctx.elements().all(|x| built.evaluate(&ctx, x).0 < 3));
}

#[test]
fn resolved_recipes_reproduce_themselves() {
    for name in EXAMPLES {
        let (recipe, _) = fixture(name).unwrap();
        let first = construct(&recipe, DEFAULT_MAX_DOMAIN).unwrap();
        let again = construct(&first.report.recipe, DEFAULT_MAX_DOMAIN).unwrap();
        assert_eq!(first.report.recipe, again.report.recipe, "{name}");
        assert_eq!(
            serde_json::to_string(&first.report).unwrap(),
            serde_json::to_string(&again.report).unwrap(),
            "{name}"
        );
        assert_eq!(first.function, again.function);
    }
}

#[test]
fn recipes_without_overrides_still_build_bent_functions() {
    for name in ["ex1", "ex2"] {
        let (mut recipe, golden) = fixture(name).unwrap();
        recipe.delta = None;
        recipe.gammas = None;
        let c = construct(&recipe, DEFAULT_MAX_DOMAIN).unwrap();
        assert_ne!(c.report.classification.kind, "NotBent");
        let total: usize = c.report.spectrum.multiset.iter().map(|e| e.count).sum();
        assert_eq!(total, golden.multiset.iter().map(|e| e.count).sum::<usize>());
    }
}
