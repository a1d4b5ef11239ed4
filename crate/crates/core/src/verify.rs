//! Desk-scale falsification harness: seeded construction of maps meeting
//! the radius-theorem hypotheses, sampled injectivity inside the computed
//! disc, schlicht coverage around f(0), and a deterministic JSON report.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::alphamap::{AlphaHarmonicMap, CoefficientSpectrum, SamplingGrid};
use crate::error::{Error, Result};
use crate::landau::{solve_rho0, LandauInput};

/// SplitMix64: tiny, seedable, and stable bit-for-bit across platforms.
/// All randomness in the harness flows through this type.
#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E3779B97F4A7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D049BB133111EB);
        z ^ (z >> 31)
    }

    /// Uniform in [0, 1) with 53 random bits.
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }
}

const GENERATOR_ATTEMPTS: u32 = 100;
/// Inflation applied to the grid estimate of sup Λ_f when higher-order
/// terms are present, so the denser re-check grid cannot push the scaled
/// map over its Λ budget.
const SUP_SAFETY: f64 = 1.002;

/// Draws a map satisfying f(0) = 0, λ_f(0) = β and (on the sampling grid)
/// Λ_f ≤ Λ.
///
/// The draw puts c₁ = 1, sprinkles decaying random coefficients on
/// 2 ≤ |k| ≤ max_index, and scales the whole spectrum by β; the attempt is
/// accepted once the scaled grid estimate of sup Λ_f fits under Λ. Each
/// retry halves the higher-order amplitude, so the draws approach the pure
/// c₁ map, which always fits. Identical seeds give identical spectra.
pub fn random_admissible_map(
    alpha: f64,
    beta: f64,
    lambda_bound: f64,
    max_index: u32,
    seed: u64,
) -> Result<AlphaHarmonicMap> {
    if !(alpha > 0.0 && alpha < 2.0) {
        return Err(Error::Domain(format!(
            "admissible map generation requires alpha in (0, 2), got {alpha}"
        )));
    }
    if !(beta > 0.0) {
        return Err(Error::Domain(format!(
            "admissible map generation requires beta > 0, got {beta}"
        )));
    }
    if beta > lambda_bound {
        return Err(Error::Domain(format!(
            "beta <= Lambda is necessary (lambda_f(0) <= Lambda_f(0)), got beta = {beta}, Lambda = {lambda_bound}"
        )));
    }
    if max_index < 1 {
        return Err(Error::Domain("max_index must be >= 1".into()));
    }

    let grid = SamplingGrid::default();
    let mut rng = SplitMix64::new(seed);
    for attempt in 0..GENERATOR_ATTEMPTS {
        let amp = if max_index == 1 || attempt >= 50 {
            0.0
        } else {
            0.35 * 0.5f64.powi(attempt as i32)
        };
        let mut entries = vec![(1, Complex64::ONE)];
        if amp > 0.0 {
            for k in 2..=max_index as i32 {
                for idx in [k, -k] {
                    let magnitude = amp * rng.next_f64() / (k * k) as f64;
                    let phase = 2.0 * std::f64::consts::PI * rng.next_f64();
                    entries.push((idx, Complex64::from_polar(magnitude, phase)));
                }
            }
        }
        let map = AlphaHarmonicMap::new(alpha, CoefficientSpectrum::new(entries)?)?;
        let sup = map.sup_lambda(&grid)?;
        let margin = if amp == 0.0 { 1.0 } else { SUP_SAFETY };
        // λ_f(0) = 1 before scaling, so scaling by β meets the β hypothesis
        // exactly; the Λ hypothesis needs β · sup to fit under Λ.
        if beta * sup * margin <= lambda_bound {
            return Ok(map.scaled(beta));
        }
    }
    Err(Error::Construction {
        attempts: GENERATOR_ATTEMPTS,
    })
}

/// Outcome of the sampled injectivity experiment.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct InjectivityCheck {
    /// min |f(z_i)−f(z_j)| / |z_i−z_j| over the checked pairs; diagnostic
    /// only, no theorem-backed threshold.
    pub min_pair_separation: f64,
    /// Pairs with |f(z_i)−f(z_j)| < 1e-12 despite |z_i−z_j| > 1e-6.
    pub collisions: usize,
}

const PAIR_CAP: usize = 2_000_000;
const IMAGE_COLLISION_TOL: f64 = 1e-12;
const DOMAIN_SEPARATION_TOL: f64 = 1e-6;

/// Quasi-uniform samples of 𝔻_ρ: concentric rings with area-uniform,
/// seed-jittered radii and an exact angular lattice per ring. Keeping the
/// angles on the exact lattice preserves mirror pairs e^{±iθ}, which is
/// what lets degenerate maps such as 2 Re z produce detectable image
/// collisions.
fn sample_disc(rho: f64, n_samples: usize, rng: &mut SplitMix64) -> Vec<Complex64> {
    let rings = ((n_samples as f64 / (2.0 * std::f64::consts::PI)).sqrt().round() as usize).max(1);
    let mut per_ring = n_samples.div_ceil(rings);
    if per_ring % 2 == 1 {
        per_ring += 1;
    }
    let mut points = Vec::with_capacity(n_samples);
    'outer: for j in 0..rings {
        let jitter = 0.25 + 0.5 * rng.next_f64();
        let r = rho * ((j as f64 + jitter) / rings as f64).sqrt();
        for i in 0..per_ring {
            let theta = 2.0 * std::f64::consts::PI * i as f64 / per_ring as f64;
            points.push(Complex64::from_polar(r, theta));
            if points.len() == n_samples {
                break 'outer;
            }
        }
    }
    points
}

/// Samples n points of 𝔻_{ρ₀} and checks all pairs (subsampled beyond
/// 2·10⁶ pairs) for image collisions; a univalent map must produce none.
pub fn check_injectivity(
    map: &AlphaHarmonicMap,
    rho0: f64,
    n_samples: usize,
    seed: u64,
) -> Result<InjectivityCheck> {
    if !(rho0 > 0.0 && rho0 < 1.0) {
        return Err(Error::Domain(format!(
            "injectivity radius must lie in (0, 1), got {rho0}"
        )));
    }
    if n_samples < 2 {
        return Err(Error::Domain("need at least 2 samples".into()));
    }
    let mut rng = SplitMix64::new(seed);
    let points = sample_disc(rho0, n_samples, &mut rng);
    let images: Vec<Complex64> = points
        .iter()
        .map(|&z| map.evaluate(z))
        .collect::<Result<_>>()?;

    let mut min_ratio = f64::INFINITY;
    let mut collisions = 0usize;
    let consider = |i: usize, j: usize, min_ratio: &mut f64, collisions: &mut usize| {
        let dz = (points[i] - points[j]).norm();
        let df = (images[i] - images[j]).norm();
        if dz > 1e-12 {
            let ratio = df / dz;
            if ratio < *min_ratio {
                *min_ratio = ratio;
            }
        }
        if df < IMAGE_COLLISION_TOL && dz > DOMAIN_SEPARATION_TOL {
            *collisions += 1;
        }
    };

    let total_pairs = n_samples * (n_samples - 1) / 2;
    if total_pairs <= PAIR_CAP {
        for i in 0..n_samples {
            for j in (i + 1)..n_samples {
                consider(i, j, &mut min_ratio, &mut collisions);
            }
        }
    } else {
        let mut drawn = 0usize;
        while drawn < PAIR_CAP {
            let i = (rng.next_u64() % n_samples as u64) as usize;
            let j = (rng.next_u64() % n_samples as u64) as usize;
            if i == j {
                continue;
            }
            consider(i, j, &mut min_ratio, &mut collisions);
            drawn += 1;
        }
    }

    Ok(InjectivityCheck {
        min_pair_separation: min_ratio,
        collisions,
    })
}

/// Evaluates f on n equispaced points of |z| = ρ₀(1−10⁻⁹) — just inside
/// the open disc the theorem speaks about — and counts boundary images
/// closer to f(0) than r0. A non-positive r0 makes the check vacuous.
pub fn check_schlicht(
    map: &AlphaHarmonicMap,
    rho0: f64,
    r0: f64,
    n_boundary: usize,
) -> Result<usize> {
    if !(rho0 > 0.0 && rho0 < 1.0) {
        return Err(Error::Domain(format!(
            "schlicht radius must lie in (0, 1), got {rho0}"
        )));
    }
    if r0 <= 0.0 {
        return Ok(0);
    }
    if n_boundary == 0 {
        return Err(Error::Domain("need at least one boundary point".into()));
    }
    let center = map.evaluate(Complex64::ZERO)?;
    let r = rho0 * (1.0 - 1e-9);
    let mut misses = 0usize;
    for j in 0..n_boundary {
        let theta = 2.0 * std::f64::consts::PI * j as f64 / n_boundary as f64;
        let fz = map.evaluate(Complex64::from_polar(r, theta))?;
        if (fz - center).norm() < r0 {
            misses += 1;
        }
    }
    Ok(misses)
}

/// JSON report of one verification run; deterministic given
/// (map, seed, n_samples).
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct VerificationReport {
    pub v: u32,
    pub map_digest: String,
    pub rho0: f64,
    pub r0: f64,
    pub n_samples: usize,
    pub min_pair_separation: f64,
    pub coverage_misses: usize,
    pub hypothesis_ok: bool,
    pub seed: u64,
}

pub fn digest_hex(bytes: &[u8]) -> String {
    let digest = Sha256::digest(bytes);
    digest.iter().map(|b| format!("{b:02x}")).collect()
}

/// Solves the radii for (α, β, Λ), runs both sampling experiments and the
/// hypothesis re-check (λ_f(0) ≥ β exactly; Λ_f ≤ Λ on a grid twice as
/// dense as the generator's, which still only bounds the true sup from
/// below), and assembles the report.
pub fn run_verification(
    map: &AlphaHarmonicMap,
    digest_source: &[u8],
    beta: f64,
    lambda_bound: f64,
    n_samples: usize,
    n_boundary: usize,
    seed: u64,
) -> Result<VerificationReport> {
    let input = LandauInput::new(map.alpha(), beta, lambda_bound)?;
    let landau = solve_rho0(&input)?;
    let injectivity = check_injectivity(map, landau.rho0, n_samples, seed)?;
    let coverage_misses = check_schlicht(map, landau.rho0, landau.r0_lower, n_boundary)?;

    let lambda_at_origin = map.wirtinger(Complex64::ZERO)?.dilations().lambda_min;
    let dense = SamplingGrid::default().refined();
    let hypothesis_ok = lambda_at_origin >= beta && map.sup_lambda(&dense)? <= lambda_bound;

    Ok(VerificationReport {
        v: 1,
        map_digest: digest_hex(digest_source),
        rho0: landau.rho0,
        r0: landau.r0_lower,
        n_samples,
        min_pair_separation: injectivity.min_pair_separation,
        coverage_misses,
        hypothesis_ok,
        seed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn splitmix_is_deterministic() {
        let mut a = SplitMix64::new(42);
        let mut b = SplitMix64::new(42);
        for _ in 0..100 {
            assert_eq!(a.next_u64(), b.next_u64());
        }
        let x = SplitMix64::new(1).next_u64();
        let y = SplitMix64::new(2).next_u64();
        assert_ne!(x, y);
    }

    #[test]
    fn generator_pure_linear_case() {
        let map = random_admissible_map(1.0, 0.7, 2.0, 1, 12345).unwrap();
        let entries = map.spectrum().entries();
        assert_eq!(entries.len(), 1);
        assert_eq!(entries[0].0, 1);
        assert_eq!(entries[0].1, c(0.7, 0.0));
        // f(0) = 0 is enforced by the absence of a constant term.
        assert_eq!(map.evaluate(Complex64::ZERO).unwrap(), Complex64::ZERO);
    }

    #[test]
    fn generator_is_bit_for_bit_deterministic() {
        let a = random_admissible_map(1.5, 0.5, 2.0, 4, 777).unwrap();
        let b = random_admissible_map(1.5, 0.5, 2.0, 4, 777).unwrap();
        assert_eq!(a, b);
        let c = random_admissible_map(1.5, 0.5, 2.0, 4, 778).unwrap();
        assert_ne!(a, c);
    }

    #[test]
    fn generator_rejects_beta_above_lambda() {
        assert!(matches!(
            random_admissible_map(1.0, 2.0, 1.0, 3, 0),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn identity_map_has_unit_separation_and_no_collisions() {
        let map = AlphaHarmonicMap::new(
            0.0,
            CoefficientSpectrum::new(vec![(1, Complex64::ONE)]).unwrap(),
        )
        .unwrap();
        let check = check_injectivity(&map, 0.8, 300, 9).unwrap();
        assert_eq!(check.collisions, 0);
        assert!((check.min_pair_separation - 1.0).abs() < 1e-12);
    }

    #[test]
    fn degenerate_projection_map_produces_collisions() {
        // f = z + z̄ = 2 Re z collapses vertical lines; the harness must be
        // able to fail on it.
        let map = AlphaHarmonicMap::new(
            0.0,
            CoefficientSpectrum::new(vec![(1, Complex64::ONE), (-1, Complex64::ONE)]).unwrap(),
        )
        .unwrap();
        let check = check_injectivity(&map, 0.5, 500, 33).unwrap();
        assert!(check.collisions > 0, "harness failed to flag 2 Re z");
    }

    #[test]
    fn schlicht_check_on_identity_map() {
        let map = AlphaHarmonicMap::new(
            0.0,
            CoefficientSpectrum::new(vec![(1, Complex64::ONE)]).unwrap(),
        )
        .unwrap();
        assert_eq!(check_schlicht(&map, 0.5, 0.4, 128).unwrap(), 0);
        // Deliberate failure: asking for more coverage than the image has.
        assert_eq!(check_schlicht(&map, 0.5, 0.6, 128).unwrap(), 128);
        // Vacuous for non-positive r0.
        assert_eq!(check_schlicht(&map, 0.5, -1.0, 128).unwrap(), 0);
    }

    #[test]
    fn report_round_trips_and_is_deterministic() {
        use crate::alphamap::spectrum_to_json;
        let map = random_admissible_map(1.0, 0.5, 1.5, 3, 5).unwrap();
        let bytes = spectrum_to_json(&map).into_bytes();
        let r1 = run_verification(&map, &bytes, 0.5, 1.5, 200, 64, 11).unwrap();
        let r2 = run_verification(&map, &bytes, 0.5, 1.5, 200, 64, 11).unwrap();
        assert_eq!(r1, r2);
        assert!(r1.hypothesis_ok);
        assert_eq!(r1.v, 1);
        assert_eq!(r1.map_digest.len(), 64);

        let json = serde_json::to_string(&r1).unwrap();
        let parsed: VerificationReport = serde_json::from_str(&json).unwrap();
        assert_eq!(parsed, r1);
    }
}
