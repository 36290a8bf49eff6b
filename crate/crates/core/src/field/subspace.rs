//! F_p-subspaces of GF(p^n), inner products `Tr(delta u v)`, and kernels of
//! linearized maps.

use alloc::vec::Vec;

use super::linalg;
use super::{FElem, FieldCtx};

/// The bilinear form `(u, v) -> Tr(delta u v)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct InnerProduct {
    delta: FElem,
}

impl InnerProduct {
    /// `None` when `delta` is zero (the form would be degenerate).
    pub fn new(delta: FElem) -> Option<Self> {
        (!delta.is_zero()).then_some(InnerProduct { delta })
    }

    /// `<u, v> = Tr(uv)`.
    pub fn standard() -> Self {
        InnerProduct { delta: FElem::ONE }
    }

    pub fn delta(&self) -> FElem {
        self.delta
    }
}

/// A subspace held by its reduced echelon basis (pivots ascending), so two
/// equal subspaces always have identical bases.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Subspace {
    basis: Vec<FElem>,
}

impl Subspace {
    pub fn zero() -> Self {
        Subspace { basis: Vec::new() }
    }

    pub fn full(ctx: &FieldCtx) -> Self {
        Subspace {
            basis: (0..ctx.n() as usize).map(|j| ctx.basis_elem(j)).collect(),
        }
    }

    pub fn span(ctx: &FieldCtx, gens: &[FElem]) -> Self {
        let mut rows: Vec<Vec<u32>> = gens.iter().map(|&g| ctx.coords(g)).collect();
        linalg::rref(ctx.p(), &mut rows, ctx.n() as usize);
        Subspace {
            basis: rows.iter().map(|r| ctx.from_coords(r)).collect(),
        }
    }

    pub fn basis(&self) -> &[FElem] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Number of elements, `p^dim`.
    pub fn size(&self, ctx: &FieldCtx) -> usize {
        (ctx.p() as usize).pow(self.dim() as u32)
    }

    pub fn is_full(&self, ctx: &FieldCtx) -> bool {
        self.dim() == ctx.n() as usize
    }

    pub fn contains(&self, ctx: &FieldCtx, x: FElem) -> bool {
        self.coordinates(ctx, x).is_some()
    }

    /// Coordinates of `x` with respect to [`Subspace::basis`], if `x` lies in the span.
    pub fn coordinates(&self, ctx: &FieldCtx, x: FElem) -> Option<Vec<u32>> {
        let xc = ctx.coords(x);
        let coeffs: Vec<u32> = self
            .basis
            .iter()
            .map(|&b| {
                let bc = ctx.coords(b);
                let pivot = bc.iter().position(|&c| c != 0).expect("basis vectors are nonzero");
                xc[pivot]
            })
            .collect();
        (self.combine(ctx, &coeffs) == x).then_some(coeffs)
    }

    /// `sum coeffs[i] * basis[i]`.
    pub fn combine(&self, ctx: &FieldCtx, coeffs: &[u32]) -> FElem {
        self.basis
            .iter()
            .zip(coeffs)
            .fold(FElem::ZERO, |acc, (&b, &c)| ctx.add(acc, ctx.scale(c, b)))
    }

    /// All elements, enumerated by coefficient vectors with the first basis
    /// coefficient varying fastest.
    pub fn elements(&self, ctx: &FieldCtx) -> Vec<FElem> {
        let mut out = Vec::with_capacity(self.size(ctx));
        out.push(FElem::ZERO);
        for &b in &self.basis {
            let prev = out.len();
            let mut step = b;
            for _ in 1..ctx.p() {
                for i in 0..prev {
                    out.push(ctx.add(out[i], step));
                }
                step = ctx.add(step, b);
            }
        }
        out
    }

    pub fn sum(&self, ctx: &FieldCtx, other: &Subspace) -> Subspace {
        let mut gens = self.basis.clone();
        gens.extend_from_slice(&other.basis);
        Subspace::span(ctx, &gens)
    }

    pub fn intersects_trivially(&self, ctx: &FieldCtx, other: &Subspace) -> bool {
        self.sum(ctx, other).dim() == self.dim() + other.dim()
    }

    /// The complement spanned by the coordinate vectors at non-pivot positions.
    pub fn complement(&self, ctx: &FieldCtx) -> Subspace {
        let pivots: Vec<usize> = self
            .basis
            .iter()
            .map(|&b| ctx.coords(b).iter().position(|&c| c != 0).unwrap())
            .collect();
        let gens: Vec<FElem> = (0..ctx.n() as usize)
            .filter(|j| !pivots.contains(j))
            .map(|j| ctx.basis_elem(j))
            .collect();
        Subspace::span(ctx, &gens)
    }

    /// Gram matrix `Tr(delta w_i w_j)` of the basis.
    pub fn gram(&self, ctx: &FieldCtx, ip: &InnerProduct) -> Vec<Vec<u32>> {
        self.basis
            .iter()
            .map(|&u| self.basis.iter().map(|&v| ctx.inner(ip, u, v)).collect())
            .collect()
    }

    /// Whether the form restricted to this subspace is non-degenerate.
    pub fn form_is_nondegenerate(&self, ctx: &FieldCtx, ip: &InnerProduct) -> bool {
        linalg::rank(ctx.p(), &self.gram(ctx, ip), self.dim()) == self.dim()
    }
}

/// Kernel of `x -> sum a_i x^(p^i)` over F_p, for `terms = [(a_i, i)]`.
pub fn kernel_of_linearized(ctx: &FieldCtx, terms: &[(FElem, u32)]) -> Subspace {
    let n = ctx.n() as usize;
    let images: Vec<Vec<u32>> = (0..n)
        .map(|j| {
            let e = ctx.basis_elem(j);
            let y = terms.iter().fold(FElem::ZERO, |acc, &(a, i)| {
                ctx.add(acc, ctx.mul(a, ctx.frobenius(e, i)))
            });
            ctx.coords(y)
        })
        .collect();
    // images are columns; transpose into rows
    let rows: Vec<Vec<u32>> = (0..n).map(|r| images.iter().map(|col| col[r]).collect()).collect();
    let null = linalg::null_space(ctx.p(), &rows, n);
    let gens: Vec<FElem> = null.iter().map(|v| ctx.from_coords(v)).collect();
    Subspace::span(ctx, &gens)
}

/// `{x : Tr(delta s x) = 0 for all s in span}`.
pub fn orthogonal_complement(ctx: &FieldCtx, ip: &InnerProduct, span: &Subspace) -> Subspace {
    let rows: Vec<Vec<u32>> = span.basis().iter().map(|&s| ctx.functional(ip, s)).collect();
    let null = linalg::null_space(ctx.p(), &rows, ctx.n() as usize);
    let gens: Vec<FElem> = null.iter().map(|v| ctx.from_coords(v)).collect();
    Subspace::span(ctx, &gens)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::poly;

    fn brute_kernel_size(ctx: &FieldCtx, terms: &[(FElem, u32)]) -> usize {
        ctx.elements()
            .filter(|&x| {
                terms
                    .iter()
                    .fold(FElem::ZERO, |acc, &(a, i)| ctx.add(acc, ctx.mul(a, ctx.frobenius(x, i))))
                    .is_zero()
            })
            .count()
    }

    #[test]
    fn frobenius_fixed_field() {
        for name in ["ex1", "ex2", "ex3"] {
            let ctx = FieldCtx::named(name).unwrap();
            let minus_one = ctx.neg(FElem::ONE);
            let k = kernel_of_linearized(&ctx, &[(FElem::ONE, 1), (minus_one, 0)]);
            assert_eq!(k.dim(), 1);
            assert!(k.contains(&ctx, FElem::ONE));
        }
    }

    #[test]
    fn trinomial_kernel_in_f27_is_span_of_g_and_1() {
        let ctx = FieldCtx::named("ex3").unwrap();
        let terms = [(FElem::ONE, 2), (FElem::ONE, 1), (FElem::ONE, 0)];
        let k = kernel_of_linearized(&ctx, &terms);
        assert_eq!(k.dim(), 2);
        assert_eq!(k, Subspace::span(&ctx, &[ctx.generator(), FElem::ONE]));
    }

    #[test]
    fn trinomial_kernel_in_f81_matches_enumeration() {
        let ctx = FieldCtx::named("ex2").unwrap();
        let terms = [(FElem::ONE, 2), (FElem::ONE, 1), (FElem::ONE, 0)];
        let k = kernel_of_linearized(&ctx, &terms);
        assert_eq!(k.size(&ctx), brute_kernel_size(&ctx, &terms));
    }

    #[test]
    fn kernel_dim_matches_associate_gcd() {
        // L(x) = x^(p^2r) + x^(p^r) + x  <->  A(x) = x^2r + x^r + 1
        for (p, n, r) in [(5u32, 6u32, 2u32), (3, 6, 1), (3, 6, 2), (5, 3, 1), (7, 3, 1), (2, 8, 1)] {
            let ctx = FieldCtx::with_default_poly(p, n).unwrap();
            let terms = [(FElem::ONE, 2 * r), (FElem::ONE, r), (FElem::ONE, 0)];
            let k = kernel_of_linearized(&ctx, &terms);
            let mut assoc = alloc::vec![0u32; 2 * r as usize + 1];
            assoc[0] = 1;
            assoc[r as usize] = 1;
            assoc[2 * r as usize] = 1;
            let g = poly::gcd(p, &poly::x_pow_minus_one(p, n as usize), &assoc);
            assert_eq!(poly::degree(&g), Some(k.dim()), "p={p} n={n} r={r}");
            assert_eq!(k.size(&ctx), brute_kernel_size(&ctx, &terms));
        }
    }

    #[test]
    fn orthogonal_complements() {
        let ctx = FieldCtx::named("ex1").unwrap();
        let ip = InnerProduct::standard();
        assert!(orthogonal_complement(&ctx, &ip, &Subspace::zero()).is_full(&ctx));

        let b1 = ctx.exp(25);
        let v5 = orthogonal_complement(&ctx, &ip, &Subspace::span(&ctx, &[b1]));
        assert_eq!(v5.dim(), 5);
        assert!(!v5.contains(&ctx, b1));
        assert!(v5.contains(&ctx, ctx.exp(46)));
        for x in v5.elements(&ctx) {
            assert_eq!(ctx.inner(&ip, b1, x), 0);
        }
    }

    #[test]
    fn span_enumeration_and_coordinates() {
        let ctx = FieldCtx::named("ex2").unwrap();
        let s = Subspace::span(&ctx, &[ctx.exp(2), ctx.exp(5), ctx.add(ctx.exp(2), ctx.exp(5))]);
        assert_eq!(s.dim(), 2);
        let elems = s.elements(&ctx);
        assert_eq!(elems.len(), 9);
        let mut sorted = elems.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), 9);
        for (i, &x) in elems.iter().enumerate() {
            let c = s.coordinates(&ctx, x).unwrap();
            assert_eq!(c, alloc::vec![(i % 3) as u32, (i / 3) as u32]);
        }
        let comp = s.complement(&ctx);
        assert_eq!(comp.dim(), 2);
        assert!(s.intersects_trivially(&ctx, &comp));
    }
}
