//! α-harmonic mappings on the unit disc: the two-sided coefficient series
//!
//! f(z) = Σ_{k≥0} c_k F(−α/2, k−α/2; k+1; |z|²) z^k
//!      + Σ_{k≥1} c_{−k} F(−α/2, k−α/2; k+1; |z|²) z̄^k,
//!
//! its Wirtinger derivatives and dilation quantities, the kernel
//! K_α(z) = c_α (1−|z|²)^{α+1} / |1−z|^{α+2}, the Poisson-type integral for
//! sampled boundary data, and a finite-difference residual check of the
//! defining equation T_α(f) = 0.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::specialfns::{gamma, hyp2f1, hyp2f1_derivative, HypParams};

/// Evaluation is refused beyond this modulus: the hypergeometric factors
/// converge slowly as |z|² → 1, and the cap keeps term counts bounded.
pub const EVAL_RADIUS_CAP: f64 = 0.999;

/// Finitely supported two-sided coefficient sequence {c_k}, k ∈ ℤ.
///
/// Entries are keyed by the integer index k (k = 0 is the constant term,
/// negative k multiply powers of z̄). Indices are unique; the growth
/// condition lim sup |c_k|^{1/|k|} ≤ 1 holds vacuously for finite support.
#[derive(Clone, Debug, PartialEq)]
pub struct CoefficientSpectrum {
    entries: Vec<(i32, Complex64)>,
}

impl CoefficientSpectrum {
    /// Builds a spectrum from (index, value) pairs; rejects duplicate indices.
    pub fn new(mut entries: Vec<(i32, Complex64)>) -> Result<Self> {
        entries.sort_by_key(|&(k, _)| k);
        for pair in entries.windows(2) {
            if pair[0].0 == pair[1].0 {
                return Err(Error::Domain(format!(
                    "duplicate spectrum index k = {}",
                    pair[0].0
                )));
            }
        }
        Ok(CoefficientSpectrum { entries })
    }

    pub fn entries(&self) -> &[(i32, Complex64)] {
        &self.entries
    }

    pub fn coefficient(&self, k: i32) -> Complex64 {
        self.entries
            .iter()
            .find(|&&(i, _)| i == k)
            .map_or(Complex64::ZERO, |&(_, c)| c)
    }

    /// Largest |k| carrying a coefficient (0 for an empty or constant map).
    pub fn max_abs_index(&self) -> u32 {
        self.entries
            .iter()
            .map(|&(k, _)| k.unsigned_abs())
            .max()
            .unwrap_or(0)
    }

    pub fn scaled(&self, factor: f64) -> CoefficientSpectrum {
        CoefficientSpectrum {
            entries: self
                .entries
                .iter()
                .map(|&(k, c)| (k, c * factor))
                .collect(),
        }
    }
}

/// Pair of Wirtinger derivatives (∂f/∂z, ∂f/∂z̄) at a point.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct WirtingerPair {
    pub dz: Complex64,
    pub dzbar: Complex64,
}

/// Dilation quantities derived from a Wirtinger pair:
/// Λ = |f_z| + |f_z̄|, λ = ||f_z| − |f_z̄||, J = |f_z|² − |f_z̄|².
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Dilations {
    pub lambda_max: f64,
    pub lambda_min: f64,
    pub jacobian: f64,
}

impl WirtingerPair {
    pub fn dilations(&self) -> Dilations {
        let p = self.dz.norm();
        let q = self.dzbar.norm();
        Dilations {
            lambda_max: p + q,
            lambda_min: (p - q).abs(),
            jacobian: p * p - q * q,
        }
    }
}

/// Polar sampling grid used to estimate sup Λ_f over the disc.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SamplingGrid {
    radial: usize,
    angular: usize,
    r_max: f64,
}

impl SamplingGrid {
    pub fn new(radial: usize, angular: usize, r_max: f64) -> Result<Self> {
        if radial < 8 || angular < 16 {
            return Err(Error::Domain(format!(
                "sampling grid needs at least 8 radii and 16 angles, got {radial}x{angular}"
            )));
        }
        if !(r_max > 0.0 && r_max < 1.0) {
            return Err(Error::Domain(format!(
                "sampling grid r_max must lie in (0, 1), got {r_max}"
            )));
        }
        Ok(SamplingGrid {
            radial,
            angular,
            r_max,
        })
    }

    pub fn radial(&self) -> usize {
        self.radial
    }

    pub fn angular(&self) -> usize {
        self.angular
    }

    pub fn r_max(&self) -> f64 {
        self.r_max
    }

    /// Same radii twice as dense in both directions; used to re-check
    /// hypotheses established on the coarser grid.
    pub fn refined(&self) -> SamplingGrid {
        SamplingGrid {
            radial: self.radial * 2,
            angular: self.angular * 2,
            r_max: self.r_max,
        }
    }
}

impl Default for SamplingGrid {
    fn default() -> Self {
        SamplingGrid {
            radial: 64,
            angular: 256,
            r_max: EVAL_RADIUS_CAP,
        }
    }
}

/// A coefficient spectrum paired with the parameter α > −1; the series
/// solution of T_α(f) = 0 it determines.
#[derive(Clone, Debug, PartialEq)]
pub struct AlphaHarmonicMap {
    alpha: f64,
    spectrum: CoefficientSpectrum,
}

/// Hypergeometric factor F(−α/2, m−α/2; m+1; t) and its t-derivative,
/// shared by every point of a circle |z|² = t.
#[derive(Clone, Copy)]
struct RadialFactor {
    f: f64,
    df: f64,
}

impl AlphaHarmonicMap {
    pub fn new(alpha: f64, spectrum: CoefficientSpectrum) -> Result<Self> {
        if !(alpha > -1.0) {
            return Err(Error::Domain(format!(
                "alpha-harmonic maps require alpha > -1, got {alpha}"
            )));
        }
        Ok(AlphaHarmonicMap { alpha, spectrum })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn spectrum(&self) -> &CoefficientSpectrum {
        &self.spectrum
    }

    pub fn scaled(&self, factor: f64) -> AlphaHarmonicMap {
        AlphaHarmonicMap {
            alpha: self.alpha,
            spectrum: self.spectrum.scaled(factor),
        }
    }

    fn check_radius(&self, z: Complex64) -> Result<()> {
        let r = z.norm();
        if r >= 1.0 {
            return Err(Error::Domain(format!(
                "evaluation point must lie inside the unit disc, got |z| = {r}"
            )));
        }
        if r > EVAL_RADIUS_CAP {
            return Err(Error::Domain(format!(
                "evaluation is capped at |z| <= {EVAL_RADIUS_CAP}, got |z| = {r}"
            )));
        }
        Ok(())
    }

    fn series_params(&self, m: u32) -> HypParams {
        // c = m + 1 >= 1, always a valid denominator parameter.
        HypParams {
            a: -self.alpha / 2.0,
            b: m as f64 - self.alpha / 2.0,
            c: m as f64 + 1.0,
        }
    }

    fn radial_factor(&self, m: u32, t: f64) -> Result<RadialFactor> {
        let p = self.series_params(m);
        Ok(RadialFactor {
            f: hyp2f1(p, t)?,
            df: hyp2f1_derivative(p, t)?,
        })
    }

    fn radial_factors(&self, t: f64) -> Result<Vec<RadialFactor>> {
        self.spectrum
            .entries
            .iter()
            .map(|&(k, _)| self.radial_factor(k.unsigned_abs(), t))
            .collect()
    }

    /// Series value at z, |z| ≤ 0.999.
    pub fn evaluate(&self, z: Complex64) -> Result<Complex64> {
        self.check_radius(z)?;
        let t = z.norm_sqr();
        let mut sum = Complex64::ZERO;
        for &(k, c) in &self.spectrum.entries {
            let m = k.unsigned_abs();
            let f = hyp2f1(self.series_params(m), t)?;
            let power = if k >= 0 { z.powu(m) } else { z.conj().powu(m) };
            sum += c * f * power;
        }
        Ok(sum)
    }

    /// Wirtinger derivatives (∂f/∂z, ∂f/∂z̄) at z from the term-by-term
    /// closed forms: with t = |z|² and F_m' the derivative of the
    /// hypergeometric factor,
    ///
    ///   ∂/∂z [F_m(t) z^m]  = F_m'(t) z̄ z^m + m F_m(t) z^{m−1},
    ///   ∂/∂z̄ [F_m(t) z^m]  = F_m'(t) z^{m+1},
    ///
    /// and conjugate-symmetrically for z̄^m terms.
    pub fn wirtinger(&self, z: Complex64) -> Result<WirtingerPair> {
        self.check_radius(z)?;
        let factors = self.radial_factors(z.norm_sqr())?;
        Ok(self.wirtinger_with_factors(&factors, z))
    }

    fn wirtinger_with_factors(&self, factors: &[RadialFactor], z: Complex64) -> WirtingerPair {
        let mut dz = Complex64::ZERO;
        let mut dzbar = Complex64::ZERO;
        for (&(k, c), fac) in self.spectrum.entries.iter().zip(factors) {
            let m = k.unsigned_abs();
            if k >= 0 {
                let zm = z.powu(m);
                dz += c * fac.df * z.conj() * zm;
                if m > 0 {
                    dz += c * fac.f * m as f64 * z.powu(m - 1);
                }
                dzbar += c * fac.df * z * zm;
            } else {
                let zbm = z.conj().powu(m);
                dzbar += c * fac.df * z * zbm;
                if m > 0 {
                    dzbar += c * fac.f * m as f64 * z.conj().powu(m - 1);
                }
                dz += c * fac.df * z.conj() * zbm;
            }
        }
        WirtingerPair { dz, dzbar }
    }

    /// Maximum of Λ_f over the polar sampling grid; a lower estimate of
    /// sup Λ_f. Radial factors are shared across each circle.
    pub fn sup_lambda(&self, grid: &SamplingGrid) -> Result<f64> {
        let mut sup: f64 = 0.0;
        for j in 0..grid.radial {
            let r = grid.r_max * j as f64 / (grid.radial - 1) as f64;
            let factors = self.radial_factors(r * r)?;
            for i in 0..grid.angular {
                let theta = 2.0 * std::f64::consts::PI * i as f64 / grid.angular as f64;
                let z = Complex64::from_polar(r, theta);
                let pair = self.wirtinger_with_factors(&factors, z);
                sup = sup.max(pair.dilations().lambda_max);
            }
        }
        Ok(sup)
    }

    /// |T_α(f)(z)| with every derivative replaced by its order-2 central
    /// difference (5-point stencil for the Laplacian). Requires
    /// |z| + 2h < 1 and h ∈ [1e-6, 1e-2].
    pub fn t_alpha_residual(&self, z: Complex64, h: f64) -> Result<f64> {
        if !(1e-6..=1e-2).contains(&h) {
            return Err(Error::Domain(format!(
                "finite-difference step must lie in [1e-6, 1e-2], got {h}"
            )));
        }
        if z.norm() + 2.0 * h >= 1.0 {
            return Err(Error::Domain(format!(
                "stencil leaves the unit disc: |z| + 2h = {}",
                z.norm() + 2.0 * h
            )));
        }
        let f0 = self.evaluate(z)?;
        let fpx = self.evaluate(z + h)?;
        let fmx = self.evaluate(z - h)?;
        let fpy = self.evaluate(z + Complex64::new(0.0, h))?;
        let fmy = self.evaluate(z - Complex64::new(0.0, h))?;

        let fx = (fpx - fmx) / (2.0 * h);
        let fy = (fpy - fmy) / (2.0 * h);
        let i = Complex64::I;
        let fz = (fx - i * fy) / 2.0;
        let fzbar = (fx + i * fy) / 2.0;
        // Difference-first grouping keeps the cancellation exact for
        // polynomial maps.
        let lap = (((fpx - f0) + (fmx - f0)) + ((fpy - f0) + (fmy - f0))) / (h * h);

        let alpha = self.alpha;
        let s = 1.0 - z.norm_sqr();
        let w = s.powf(-alpha - 1.0);
        let t_f = -alpha * alpha / 4.0 * w * f0
            + alpha / 2.0 * w * (z * fz + z.conj() * fzbar)
            + 0.25 * s.powf(-alpha) * lap;
        Ok(t_f.norm())
    }
}

/// Normalization constant c_α = Γ(α/2+1)² / Γ(1+α) of the kernel.
pub fn kernel_constant(alpha: f64) -> Result<f64> {
    if !(alpha > -1.0) {
        return Err(Error::Domain(format!(
            "kernel requires alpha > -1, got {alpha}"
        )));
    }
    let g_half = gamma(alpha / 2.0 + 1.0)?;
    Ok(g_half * g_half / gamma(1.0 + alpha)?)
}

/// Poisson-type kernel K_α(z) = c_α (1−|z|²)^{α+1} / |1−z|^{α+2}, |z| < 1.
pub fn kernel(alpha: f64, z: Complex64) -> Result<f64> {
    let c_alpha = kernel_constant(alpha)?;
    let r2 = z.norm_sqr();
    if r2 >= 1.0 {
        return Err(Error::Domain(format!(
            "kernel argument must lie inside the unit disc, got |z| = {}",
            z.norm()
        )));
    }
    let denom = (Complex64::ONE - z).norm().powf(alpha + 2.0);
    Ok(c_alpha * (1.0 - r2).powf(alpha + 1.0) / denom)
}

/// Circle average (1/2π) ∫ K_α(r e^{−iτ}) dτ by the trapezoidal rule.
///
/// Matches c_α F(−α/2, −α/2; 1; r²); kept quadrature-based so it can serve
/// as an independent cross-check of that identity.
pub fn kernel_mean(alpha: f64, r: f64, n_points: usize) -> Result<f64> {
    if !(0.0..1.0).contains(&r) {
        return Err(Error::Domain(format!(
            "kernel_mean radius must lie in [0, 1), got {r}"
        )));
    }
    if n_points < 4 {
        return Err(Error::Domain(format!(
            "kernel_mean needs at least 4 quadrature points, got {n_points}"
        )));
    }
    let mut sum = 0.0;
    for j in 0..n_points {
        let tau = 2.0 * std::f64::consts::PI * j as f64 / n_points as f64;
        sum += kernel(alpha, Complex64::from_polar(r, -tau))?;
    }
    Ok(sum / n_points as f64)
}

/// Boundary samples at the N equispaced angles τ_j = 2πj/N on ∂𝔻.
#[derive(Clone, Debug, PartialEq)]
pub struct BoundaryData {
    samples: Vec<Complex64>,
}

impl BoundaryData {
    pub fn new(samples: Vec<Complex64>) -> Result<Self> {
        if samples.len() < 4 {
            return Err(Error::Domain(format!(
                "boundary data needs at least 4 samples, got {}",
                samples.len()
            )));
        }
        Ok(BoundaryData { samples })
    }

    pub fn samples(&self) -> &[Complex64] {
        &self.samples
    }
}

/// Poisson-type integral f(z) = (1/2π) ∫ K_α(z e^{−iτ}) f*(e^{iτ}) dτ,
/// evaluated by the trapezoidal rule over the equispaced samples
/// (spectrally accurate for smooth periodic data).
pub fn poisson_solve(alpha: f64, data: &BoundaryData, z: Complex64) -> Result<Complex64> {
    if z.norm() >= 1.0 {
        return Err(Error::Domain(format!(
            "Poisson integral target must lie inside the unit disc, got |z| = {}",
            z.norm()
        )));
    }
    let n = data.samples.len();
    let mut sum = Complex64::ZERO;
    for (j, sample) in data.samples.iter().enumerate() {
        let tau = 2.0 * std::f64::consts::PI * j as f64 / n as f64;
        let k = kernel(alpha, z * Complex64::from_polar(1.0, -tau))?;
        sum += k * sample;
    }
    Ok(sum / n as f64)
}

// ── JSON file formats ──────────────────────────────────────────────────

/// On-disk spectrum format:
/// `{"alpha": number, "coefficients": [{"k": int, "re": number, "im": number}, …]}`.
/// Unknown fields are rejected.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpectrumFile {
    pub alpha: f64,
    pub coefficients: Vec<CoefficientEntry>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CoefficientEntry {
    pub k: i32,
    pub re: f64,
    pub im: f64,
}

impl SpectrumFile {
    pub fn from_map(map: &AlphaHarmonicMap) -> SpectrumFile {
        SpectrumFile {
            alpha: map.alpha(),
            coefficients: map
                .spectrum()
                .entries()
                .iter()
                .map(|&(k, c)| CoefficientEntry {
                    k,
                    re: c.re,
                    im: c.im,
                })
                .collect(),
        }
    }

    pub fn into_map(self) -> Result<AlphaHarmonicMap> {
        let entries = self
            .coefficients
            .into_iter()
            .map(|e| (e.k, Complex64::new(e.re, e.im)))
            .collect();
        AlphaHarmonicMap::new(self.alpha, CoefficientSpectrum::new(entries)?)
    }
}

/// Parses the spectrum JSON schema into a validated map.
pub fn spectrum_from_json(text: &str) -> Result<AlphaHarmonicMap> {
    let file: SpectrumFile =
        serde_json::from_str(text).map_err(|e| Error::Domain(format!("spectrum file: {e}")))?;
    file.into_map()
}

/// Canonical JSON serialization of a map (used for content digests).
pub fn spectrum_to_json(map: &AlphaHarmonicMap) -> String {
    serde_json::to_string(&SpectrumFile::from_map(map)).expect("spectrum serialization")
}

/// On-disk boundary data: `{"samples": [{"re": number, "im": number}, …]}`,
/// interpreted at angles 2πj/N. Unknown fields are rejected.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BoundaryFile {
    pub samples: Vec<BoundarySample>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BoundarySample {
    pub re: f64,
    pub im: f64,
}

pub fn boundary_from_json(text: &str) -> Result<BoundaryData> {
    let file: BoundaryFile =
        serde_json::from_str(text).map_err(|e| Error::Domain(format!("boundary file: {e}")))?;
    BoundaryData::new(
        file.samples
            .into_iter()
            .map(|s| Complex64::new(s.re, s.im))
            .collect(),
    )
}
