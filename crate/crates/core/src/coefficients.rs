//! Coefficient machinery: the factor G_k(r, α) multiplying c_{±k} in the
//! derivative series, quadrature extraction of c_{±k} from the Wirtinger
//! derivatives on a circle, the resulting coefficient estimate
//!
//!   α|2k−α|/(2(k+1)) · F(1−α/2, k+1−α/2; k+2; 1) · (|c_k| + |c_{−k}|) ≤ Λ,
//!
//! its closed-form rearrangement
//!
//!   |c_k| + |c_{−k}| ≤ 2Λ Γ(1+α/2) Γ(k+1+α/2) / (k! Γ(α+1) |2k−α|),
//!
//! and the per-term series bound used on the way to the Landau radius.

use num_complex::Complex64;

use crate::alphamap::{AlphaHarmonicMap, WirtingerPair};
use crate::error::{Error, Result};
use crate::specialfns::{gamma, hyp2f1, hyp2f1_at_one, HypParams};

/// Result of extracting the pair (c_k, c_{−k}) on a circle of the given
/// radius with the given number of quadrature points.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ExtractionResult {
    pub k: u32,
    pub c_plus: Complex64,
    pub c_minus: Complex64,
    pub radius: f64,
    pub quadrature_points: usize,
}

fn g_prefactor(k: u32, alpha: f64) -> f64 {
    -alpha / 2.0 * (k as f64 - alpha / 2.0) / (k as f64 + 1.0)
}

fn g_params(k: u32, alpha: f64) -> HypParams {
    HypParams {
        a: -alpha / 2.0 + 1.0,
        b: k as f64 - alpha / 2.0 + 1.0,
        c: k as f64 + 2.0,
    }
}

/// G_k(r, α) = (−α/2)(k−α/2)/(k+1) · F(1−α/2, k+1−α/2; k+2; r²).
///
/// At r = 1 the closed form of the series at argument 1 is used (its
/// parameter excess is exactly α, so this needs α > 0; α = 0 short-circuits
/// to zero through the prefactor). Negative for α ∈ (0, 2), k ≥ 1.
pub fn g_factor(k: u32, alpha: f64, r: f64) -> Result<f64> {
    if k == 0 {
        return Err(Error::Domain("g_factor requires k >= 1".into()));
    }
    if !(alpha > -1.0) {
        return Err(Error::Domain(format!(
            "g_factor requires alpha > -1, got {alpha}"
        )));
    }
    if !(0.0..=1.0).contains(&r) {
        return Err(Error::Domain(format!(
            "g_factor radius must lie in [0, 1], got {r}"
        )));
    }
    let pre = g_prefactor(k, alpha);
    if pre == 0.0 {
        return Ok(0.0);
    }
    let f = if r == 1.0 {
        hyp2f1_at_one(g_params(k, alpha))?
    } else {
        hyp2f1(g_params(k, alpha), r * r)?
    };
    Ok(pre * f)
}

/// Default quadrature resolution for a spectrum with maximal index K:
/// max(256, 8(K+2)).
pub fn default_extraction_points(max_index: u32) -> usize {
    256usize.max(8 * (max_index as usize + 2))
}

/// Recovers (c_k, c_{−k}) from a pointwise Wirtinger source by the circle
/// integrals
///
///   c_{−k} r^{k+1} G_k(r, α) = (1/2π) ∫ f_z(re^{iθ}) e^{i(k+1)θ} dθ,
///   c_{ k} r^{k+1} G_k(r, α) = (1/2π) ∫ f_z̄(re^{iθ}) e^{−i(k+1)θ} dθ,
///
/// by the trapezoidal rule. Exact up to rounding for finitely supported
/// spectra once the point count resolves every frequency present.
pub fn extract<F>(
    mut source: F,
    k: u32,
    alpha: f64,
    r: f64,
    n_points: usize,
) -> Result<ExtractionResult>
where
    F: FnMut(Complex64) -> Result<WirtingerPair>,
{
    if k == 0 {
        return Err(Error::Domain("extraction index k must be >= 1".into()));
    }
    if !(r > 0.0 && r < 1.0) {
        return Err(Error::Domain(format!(
            "extraction radius must lie in (0, 1), got {r}"
        )));
    }
    let needed = 4 * (k as usize + 2);
    if n_points < needed {
        return Err(Error::Aliasing {
            k,
            needed,
            got: n_points,
        });
    }
    if alpha == 0.0 || alpha == 2.0 * k as f64 {
        return Err(Error::DegenerateExtraction { k, alpha });
    }
    let g = g_factor(k, alpha, r)?;
    if g == 0.0 {
        return Err(Error::DegenerateExtraction { k, alpha });
    }

    let mut sum_z = Complex64::ZERO;
    let mut sum_zbar = Complex64::ZERO;
    for j in 0..n_points {
        let theta = 2.0 * std::f64::consts::PI * j as f64 / n_points as f64;
        let pair = source(Complex64::from_polar(r, theta))?;
        let phase = Complex64::from_polar(1.0, (k as f64 + 1.0) * theta);
        sum_z += pair.dz * phase;
        sum_zbar += pair.dzbar * phase.conj();
    }
    let scale = n_points as f64 * r.powi(k as i32 + 1) * g;
    Ok(ExtractionResult {
        k,
        c_plus: sum_zbar / scale,
        c_minus: sum_z / scale,
        radius: r,
        quadrature_points: n_points,
    })
}

/// Convenience wrapper extracting from a map's own Wirtinger derivatives.
pub fn extract_from_map(
    map: &AlphaHarmonicMap,
    k: u32,
    r: f64,
    n_points: usize,
) -> Result<ExtractionResult> {
    extract(|z| map.wirtinger(z), k, map.alpha(), r, n_points)
}

/// Left-hand side of the coefficient estimate:
/// α|2k−α|/(2(k+1)) · F(1−α/2, k+1−α/2; k+2; 1) · (|c_k| + |c_{−k}|).
///
/// The estimate asserts this is ≤ Λ whenever Λ_f ≤ Λ. Well-defined (zero)
/// at α = 2k.
pub fn theorem21_lhs(k: u32, alpha: f64, c_plus_abs: f64, c_minus_abs: f64) -> Result<f64> {
    if k == 0 {
        return Err(Error::Domain("coefficient estimate requires k >= 1".into()));
    }
    if !(alpha > 0.0) {
        return Err(Error::Domain(format!(
            "coefficient estimate requires alpha > 0, got {alpha}"
        )));
    }
    if c_plus_abs < 0.0 || c_minus_abs < 0.0 {
        return Err(Error::Domain(
            "coefficient moduli must be nonnegative".into(),
        ));
    }
    let factor = alpha * (2.0 * k as f64 - alpha).abs() / (2.0 * (k as f64 + 1.0));
    let f_at_one = hyp2f1_at_one(g_params(k, alpha))?;
    Ok(factor * f_at_one * (c_plus_abs + c_minus_abs))
}

fn is_even_integer(x: f64) -> bool {
    x == x.floor() && (x as i64) % 2 == 0
}

/// Closed-form bound 2Λ Γ(1+α/2) Γ(k+1+α/2) / (k! Γ(α+1) |2k−α|) on
/// |c_k| + |c_{−k}| for maps with Λ_f ≤ Λ. Requires α > 0 and α not an
/// even integer (α = 2k would put a zero in the denominator).
pub fn corollary22_bound(k: u32, alpha: f64, lambda_bound: f64) -> Result<f64> {
    if k == 0 {
        return Err(Error::Domain("coefficient bound requires k >= 1".into()));
    }
    if !(alpha > 0.0) {
        return Err(Error::Domain(format!(
            "coefficient bound requires alpha > 0, got {alpha}"
        )));
    }
    if is_even_integer(alpha) {
        return Err(Error::Domain(format!(
            "coefficient bound requires alpha not an even integer, got {alpha}"
        )));
    }
    if !(lambda_bound > 0.0) {
        return Err(Error::Domain(format!(
            "coefficient bound requires Lambda > 0, got {lambda_bound}"
        )));
    }
    let kf = k as f64;
    let numerator = 2.0 * lambda_bound * gamma(1.0 + alpha / 2.0)? * gamma(kf + 1.0 + alpha / 2.0)?;
    let denominator = gamma(kf + 1.0)? * gamma(alpha + 1.0)? * (2.0 * kf - alpha).abs();
    Ok(numerator / denominator)
}

/// Both sides of the per-term series bound
///
///   |(−α/2)_n (k−α/2)_n / ((k+1)_n n!)|
///     ≤ 1 − Γ(k+1) Γ(1+α) / (Γ(k+1+α/2) Γ(1+α/2)),
///
/// for k ≥ 1, α ∈ (0, 2), n ≥ 1. The left side is accumulated as a product
/// of per-index ratios to avoid overflow.
pub fn longwang_term_bound(k: u32, alpha: f64, n: u32) -> Result<(f64, f64)> {
    if k == 0 || n == 0 {
        return Err(Error::Domain("term bound requires k >= 1 and n >= 1".into()));
    }
    if !(alpha > 0.0 && alpha < 2.0) {
        return Err(Error::Domain(format!(
            "term bound requires alpha in (0, 2), got {alpha}"
        )));
    }
    let kf = k as f64;
    let mut lhs: f64 = 1.0;
    for i in 0..n {
        let idx = i as f64;
        lhs *= (-alpha / 2.0 + idx) * (kf - alpha / 2.0 + idx)
            / ((kf + 1.0 + idx) * (1.0 + idx));
    }
    let rhs = 1.0
        - gamma(kf + 1.0)? * gamma(1.0 + alpha)?
            / (gamma(kf + 1.0 + alpha / 2.0)? * gamma(1.0 + alpha / 2.0)?);
    Ok((lhs.abs(), rhs))
}
