//! Exact spectra checked against floating-point character sums.

use std::f64::consts::TAU;

use bentforge_core::construction::{binomial_function, nwr_build, nwr_defaults, NwrParams};
use bentforge_core::field::{FieldCtx, InnerProduct};
use bentforge_core::function::FpFunction;
use bentforge_core::walsh::{walsh_fast, walsh_on_subspace};
use bentforge_core::field::Subspace;

fn tables(p: u32) -> (Vec<f64>, Vec<f64>) {
    let angle = |k: u32| TAU * k as f64 / p as f64;
    ((0..p).map(|k| angle(k).cos()).collect(), (0..p).map(|k| angle(k).sin()).collect())
}

/// `sum_x exp(2 pi i (f(x) - <b,x>) / p)` in floating point.
fn direct(ctx: &FieldCtx, f: &FpFunction, ip: &InnerProduct, b: bentforge_core::field::FElem) -> (f64, f64) {
    let p = ctx.p();
    ctx.elements().fold((0.0, 0.0), |(re, im), x| {
        let e = (f.value(x) + p - ctx.inner(ip, b, x)) % p;
        let a = TAU * e as f64 / p as f64;
        (re + a.cos(), im + a.sin())
    })
}

fn xorshift(seed: u64) -> impl FnMut() -> u64 {
    let mut s = seed | 1;
    move || {
        s ^= s << 13;
        s ^= s >> 7;
        s ^= s << 17;
        s
    }
}

fn check(ctx: &FieldCtx, f: &FpFunction, ip: &InnerProduct) {
    let (cos, sin) = tables(ctx.p());
    let tol = 1e-9 * ctx.order() as f64;
    for (b, w) in walsh_fast(ctx, f, ip).entries() {
        let (re, im) = w.embed_with(&cos, &sin);
        let (dre, dim) = direct(ctx, f, ip, *b);
        assert!((re - dre).abs() < tol && (im - dim).abs() < tol, "b = {b:?}: exact {re}+{im}i, direct {dre}+{dim}i");
    }
}

#[test]
fn random_functions_match_character_sums() {
    for (p, n) in [(2, 6), (3, 4), (5, 3), (7, 2)] {
        let ctx = FieldCtx::with_default_poly(p, n).unwrap();
        let mut rng = xorshift(0x9e37_79b9 ^ (p * 31 + n) as u64);
        for round in 0..3 {
            let f = FpFunction::from_fn(&ctx, |_| (rng() % p as u64) as u32);
            let delta = ctx.exp(round * 5 + 1);
            check(&ctx, &f, &InnerProduct::new(delta).unwrap());
        }
    }
}

#[test]
fn bent_magnitudes_in_floating_point() {
    let ctx = FieldCtx::named("ex3").unwrap();
    let (b1, b2, ip, big_gamma) = nwr_defaults(&ctx).unwrap();
    let params = NwrParams::new(&ctx, 1, &[1, 2, 2], b2, &ip, big_gamma).unwrap();
    let f = nwr_build(&ctx, &params, b1, b2, &ip, big_gamma).unwrap();
    check(&ctx, &f, &ip);
    let (cos, sin) = tables(3);
    for w in walsh_fast(&ctx, &f, &ip).values() {
        let (re, im) = w.embed_with(&cos, &sin);
        assert!((re * re + im * im - 27.0).abs() < 1e-9);
    }
}

#[test]
fn subspace_transform_matches_character_sums() {
    let ctx = FieldCtx::with_default_poly(3, 5).unwrap();
    let ip = InnerProduct::standard();
    let f = binomial_function(&ctx, 1);
    let v = Subspace::span(&ctx, &[ctx.exp(3), ctx.exp(7), ctx.exp(11)]);
    let (cos, sin) = tables(3);
    let points = v.elements(&ctx);
    let s = walsh_on_subspace(&ctx, &f, &v, &ip).unwrap();
    for (b, w) in s.entries() {
        let (re, im) = w.embed_with(&cos, &sin);
        let (dre, dim) = points.iter().fold((0.0, 0.0), |(r, i), &x| {
            let a = TAU * ((f.value(x) + 3 - ctx.inner(&ip, *b, x)) % 3) as f64 / 3.0;
            (r + a.cos(), i + a.sin())
        });
        assert!((re - dre).abs() < 1e-9 && (im - dim).abs() < 1e-9);
    }
}
