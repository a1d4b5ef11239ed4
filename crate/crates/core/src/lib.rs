//! Numerical toolkit for α-harmonic mappings on the unit disc: series
//! solutions of T_α(f) = 0, Wirtinger-derivative and dilation computations,
//! Poisson-type integrals, quadrature extraction of coefficients with the
//! associated estimates, Landau-type univalence and schlicht radii, and a
//! sampled verification harness.

// Guards are written as `!(x > 0.0)` so that NaN arguments fall into the
// rejecting branch.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod alphamap;
pub mod coefficients;
pub mod error;
pub mod landau;
pub mod specialfns;
pub mod verify;

pub use error::{Error, Result};
