//! Error type shared by every module of the crate.

use thiserror::Error;

/// Errors produced by the numerical routines.
///
/// `Domain` covers violated preconditions (arguments outside the range a
/// routine is defined on); `Accuracy` reports a series that failed to meet
/// its tail-control target within the term cap and carries the partial sum
/// so callers can inspect how far summation got.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("accuracy error: series did not converge within {terms} terms (partial sum {partial_sum:e})")]
    Accuracy { partial_sum: f64, terms: usize },

    #[error("degenerate extraction: G_k(r, alpha) vanishes for k = {k}, alpha = {alpha} (alpha = 0 or alpha = 2k)")]
    DegenerateExtraction { k: u32, alpha: f64 },

    #[error("aliasing error: extraction of index {k} needs at least {needed} quadrature points, got {got}")]
    Aliasing { k: u32, needed: usize, got: usize },

    #[error("boundary error: no sign change of phi before x = {ceiling} (phi there = {phi_at_ceiling:e}); root pushed against 1")]
    RootAtBoundary { ceiling: f64, phi_at_ceiling: f64 },

    #[error("internal invariant violated: {0}")]
    Invariant(String),

    #[error("admissible map construction failed after {attempts} attempts")]
    Construction { attempts: u32 },
}

pub type Result<T> = std::result::Result<T, Error>;
