//! Forward and inverse spectral maps for Jacobi matrices that are
//! exponentially close to the free matrix `J₀` (`aₙ ≡ 1`, `bₙ ≡ 0`).
//!
//! * [`forward`]: Jacobi parameters → Jost function `u(z)`, Jost solutions,
//!   `M(z)`, perturbation determinant `L(z) = u(z)/u(0)`, bound states and
//!   Sturm counts.
//! * [`inverse`]: Jost function + bound-state weights → Jacobi parameters by
//!   coefficient stripping, with canonical-weight analysis and decay-rate
//!   estimation.
//! * [`opuc`]: Szegő recursion, Schur algorithm, Szegő function and the
//!   relative Szegő function on the unit circle.
//! * [`numerics`]: series, circle grids, quadrature and root finding.
//! * [`cli`]: file formats and the `jost` command-line driver.

// Negated comparisons like `!(x > 0.0)` are used on purpose: they reject NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod cli;
pub mod error;
pub mod forward;
pub mod inverse;
pub mod numerics;
pub mod opuc;

pub use error::{Error, Result};
pub use num_complex::Complex64;
