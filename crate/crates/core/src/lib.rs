//! Exact arithmetic for p-ary bent functions on GF(p^n).
//!
//! Everything here is pure and allocation-only: finite field arithmetic,
//! the ring Z[eps_p] holding Fourier coefficients, Walsh transforms,
//! structural analysis (linear spaces, plateau order, weak regularity),
//! the merge construction with its monomial/binomial ingredient families,
//! and univariate polynomial representation.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod field;
pub mod cyclotomic;
pub mod function;
pub mod walsh;
pub mod analysis;
pub mod poly_repr;
pub mod construction;
