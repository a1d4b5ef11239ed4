//! Landau-type radii: the Gamma-ratio constant a, the strictly decreasing
//! function φ whose unique root ρ₀ bounds the univalence radius, the
//! schlicht-disc radius lower bound R₀, the Jacobian-normalized variant,
//! and the classical minimum m of (3−r²)/(r(1−r²)).

use crate::error::{Error, Result};
use crate::specialfns::gamma;

/// Hypotheses (α, β, Λ): α ∈ (0, 2), a lower bound β > 0 on λ_f(0) and an
/// upper bound Λ > 0 on Λ_f over the disc.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LandauInput {
    alpha: f64,
    beta: f64,
    lambda_bound: f64,
}

impl LandauInput {
    pub fn new(alpha: f64, beta: f64, lambda_bound: f64) -> Result<Self> {
        if !(alpha > 0.0 && alpha < 2.0) {
            return Err(Error::Domain(format!(
                "Landau radius requires alpha in (0, 2), got {alpha}"
            )));
        }
        if !(beta > 0.0) {
            return Err(Error::Domain(format!(
                "Landau radius requires beta > 0, got {beta}"
            )));
        }
        if !(lambda_bound > 0.0) {
            return Err(Error::Domain(format!(
                "Landau radius requires Lambda > 0, got {lambda_bound}"
            )));
        }
        Ok(LandauInput {
            alpha,
            beta,
            lambda_bound,
        })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    pub fn lambda_bound(&self) -> f64 {
        self.lambda_bound
    }
}

/// Solved radii for one input. `r0_lower` may be non-positive; it is
/// reported as computed rather than clamped, so callers can see when the
/// schlicht bound is vacuous.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LandauResult {
    pub a: f64,
    pub rho0: f64,
    pub r0_lower: f64,
    pub phi_residual: f64,
    pub iterations: u32,
}

/// a = Γ(1+α/2) / Γ(1+α).
///
/// Always above 1/2 on (0, 2) (which is what the monotonicity of φ rests
/// on), but not below 1 throughout: Γ decreases on (1, 1.4616…), so the
/// ratio exceeds 1 for α below ≈ 0.62, peaking near 1.0397 at α ≈ 0.29.
/// It tends to 1 as α → 0⁺ and to 1/2 as α → 2⁻.
pub fn a_constant(alpha: f64) -> Result<f64> {
    if !(alpha > 0.0 && alpha < 2.0) {
        return Err(Error::Domain(format!(
            "a-constant requires alpha in (0, 2), got {alpha}"
        )));
    }
    Ok(gamma(1.0 + alpha / 2.0)? / gamma(1.0 + alpha)?)
}

fn phi_with_a(input: &LandauInput, a: f64, x: f64) -> f64 {
    let alpha = input.alpha;
    let bracket = (2.0 - alpha) * x * x / (1.0 - x) + 2.0 * a / (1.0 - x).powi(3) - 2.0 * a
        + (2.0 * a - 1.0) * x * x / (1.0 - x * x);
    input.beta - 2.0 * input.lambda_bound / (2.0 - alpha) * bracket
}

/// φ(x) = β − (2Λ/(2−α)) ((2−α) x²/(1−x) + 2a/(1−x)³ − 2a + (2a−1) x²/(1−x²))
/// for x ∈ [0, 1); φ(0) = β and φ is strictly decreasing.
pub fn phi(input: &LandauInput, x: f64) -> Result<f64> {
    if !(0.0..1.0).contains(&x) {
        return Err(Error::Domain(format!(
            "phi argument must lie in [0, 1), got {x}"
        )));
    }
    Ok(phi_with_a(input, a_constant(input.alpha)?, x))
}

/// Ceiling 1 − 2⁻⁴⁰ for the root search; φ overflows as x → 1.
pub const RHO_CEILING: f64 = 1.0 - 1.0 / (1u64 << 40) as f64;

const BRACKET_SCAN_POINTS: usize = 4096;

/// Bisection for the unique root ρ₀ of φ on (0, RHO_CEILING].
///
/// The initial bracket is [0, u] with u the smallest scan-grid point where
/// φ(u) < 0. Bisection then runs to the floating-point floor (no midpoint
/// strictly inside the bracket remains), which leaves the bracket width
/// well under 1e-14 and the residual |φ(ρ₀)| at the rounding level of φ.
pub fn solve_rho0(input: &LandauInput) -> Result<LandauResult> {
    let a = a_constant(input.alpha)?;
    let phi0 = phi_with_a(input, a, 0.0);
    if !(phi0 > 0.0) {
        return Err(Error::Invariant(format!(
            "phi(0) = beta must be positive, got {phi0}"
        )));
    }

    let mut upper = None;
    for i in 1..=BRACKET_SCAN_POINTS {
        let u = RHO_CEILING * i as f64 / BRACKET_SCAN_POINTS as f64;
        if phi_with_a(input, a, u) < 0.0 {
            upper = Some(u);
            break;
        }
    }
    let Some(mut hi) = upper else {
        return Err(Error::RootAtBoundary {
            ceiling: RHO_CEILING,
            phi_at_ceiling: phi_with_a(input, a, RHO_CEILING),
        });
    };

    let mut lo = 0.0f64;
    let mut iterations = 0u32;
    loop {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        iterations += 1;
        if phi_with_a(input, a, mid) > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }

    // Report whichever bracket end has the smaller residual.
    let (phi_lo, phi_hi) = (phi_with_a(input, a, lo), phi_with_a(input, a, hi));
    let (rho0, phi_residual) = if phi_lo.abs() <= phi_hi.abs() {
        (lo, phi_lo.abs())
    } else {
        (hi, phi_hi.abs())
    };

    Ok(LandauResult {
        a,
        rho0,
        r0_lower: r0_lower_bound_with_a(input, a, rho0),
        phi_residual,
        iterations,
    })
}

fn r0_lower_bound_with_a(input: &LandauInput, a: f64, rho0: f64) -> f64 {
    let alpha = input.alpha;
    let bracket = (2.0 - alpha) / (1.0 - rho0) * rho0 * rho0 / 3.0
        + 2.0 * a / (1.0 - rho0).powi(3)
        - 2.0 * a
        + (2.0 * a - 1.0) / (1.0 - rho0 * rho0) * rho0 * rho0 / 3.0;
    rho0 * (input.beta - 2.0 * input.lambda_bound / (2.0 - alpha) * bracket)
}

/// Schlicht-disc radius lower bound
/// R₀ ≥ ρ₀ (β − (2Λ/(2−α)) ((2−α)/(1−ρ₀) ρ₀²/3 + 2a/(1−ρ₀)³ − 2a + (2a−1)/(1−ρ₀²) ρ₀²/3)),
/// evaluated at the computed root. Can be non-positive; reported as-is.
pub fn r0_lower_bound(input: &LandauInput, rho0: f64) -> Result<f64> {
    Ok(r0_lower_bound_with_a(input, a_constant(input.alpha)?, rho0))
}

/// Jacobian-normalized variant: with β read as |J_f(0)|, the hypothesis
/// λ_f(0) ≥ β/Λ follows from |J_f(0)| = Λ_f(0) λ_f(0) ≤ Λ λ_f(0), so the
/// radii are those of the base problem with β replaced by β/Λ.
pub fn corollary33(input: &LandauInput) -> Result<LandauResult> {
    let reduced = LandauInput::new(
        input.alpha,
        input.beta / input.lambda_bound,
        input.lambda_bound,
    )?;
    solve_rho0(&reduced)
}

/// Golden-section minimum of (3−r²)/(r(1−r²)) on (0, 1); the classical
/// constant m ≈ 6.85 with its minimizer.
pub fn classical_m_constant() -> (f64, f64) {
    fn objective(r: f64) -> f64 {
        (3.0 - r * r) / (r * (1.0 - r * r))
    }
    let inv_phi = 0.5 * (5.0f64.sqrt() - 1.0);
    let mut lo = 1e-6;
    let mut hi = 1.0 - 1e-6;
    let mut x1 = hi - inv_phi * (hi - lo);
    let mut x2 = lo + inv_phi * (hi - lo);
    let mut f1 = objective(x1);
    let mut f2 = objective(x2);
    while hi - lo > 1e-10 {
        if f1 <= f2 {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = objective(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = objective(x2);
        }
    }
    let r_star = 0.5 * (lo + hi);
    (r_star, objective(r_star))
}
