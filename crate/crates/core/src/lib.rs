//! First Steklov-Dirichlet Laplacian eigenvalue on annular domains.
//!
//! An annular domain is `Ω = Ω₀ \ B̄_{R₁}`: a convex outer body with a
//! concentric spherical hole carrying a homogeneous Dirichlet condition,
//! while the Steklov condition `∂u/∂ν = σu` lives on the outer boundary.
//! The crate provides
//!
//! * [`shell`]: closed-form eigenpairs on spherical shells in any
//!   dimension, the explicit volume upper bound, the critical radius
//!   `r̄` and the convexity window `[α₋, α₊]` of the associated profile
//!   function;
//! * [`geometry`]: convex star-shaped planar bodies represented by
//!   truncated Fourier radial functions, with spectrally accurate
//!   boundary quadrature, support functions, Hausdorff distance and a
//!   seeded random convex body generator;
//! * [`eigensolver`]: a Rayleigh-Ritz solver for `σ₁` on 2D annular
//!   domains using exactly harmonic trial functions vanishing on the
//!   inner circle, so only boundary integrals are ever discretized;
//! * [`harness`]: every inequality of the comparison theory as an
//!   executable check: the shell isoperimetric comparison, its proof
//!   chain, the explicit bounds, and the perimeter-constraint
//!   counterexample.
//!
//! The crate is `no_std` (with `alloc`); all floating-point math goes
//! through `libm` so results are identical across platforms.

#![cfg_attr(not(test), no_std)]
// `!(x > 0.0)` deliberately rejects NaN along with the sign violation
#![allow(clippy::neg_cmp_op_on_partial_ord)]
// index loops mirror the matrix algebra
#![allow(clippy::needless_range_loop)]
// (index + 1) / 2 is the basis order map, not a ceiling computation
#![allow(clippy::manual_div_ceil)]
#![allow(clippy::manual_is_multiple_of)]

extern crate alloc;

pub mod eigensolver;
mod error;
pub mod geometry;
pub mod harness;
pub mod linalg;
mod math;
pub mod shell;

pub use error::{Error, Result};
