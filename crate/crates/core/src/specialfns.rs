//! Real-argument special functions: Gamma, Pochhammer symbols and the Gauss
//! hypergeometric function ₂F₁ on [0, 1), with the Gamma-ratio closed form
//! at argument 1.
//!
//! Everything here works on positive real Gamma arguments and series
//! arguments in [0, 1); that is the full range the rest of the crate needs.

use crate::error::{Error, Result};

/// Lanczos coefficients, g = 10.900511 ("An Analysis of the Lanczos Gamma
/// Approximation", G. R. Pugh, 2004, p. 116).
#[allow(clippy::excessive_precision)]
const LANCZOS_DK: [f64; 11] = [
    2.48574089138753565546e-5,
    1.05142378581721974210,
    -3.45687097222016235469,
    4.51227709466894823700,
    -2.98285225323576655721,
    1.05639711577126713077,
    -1.95428773191645869583e-1,
    1.70970543404441224307e-2,
    -5.71926117404305781283e-4,
    4.63399473359905636708e-6,
    -2.71994908488607703910e-9,
];

const LANCZOS_R: f64 = 10.900511;
const TWO_SQRT_E_OVER_PI: f64 = 1.8603827342052657;

/// Gamma function for positive real arguments.
///
/// Relative error stays below 1e-13 on (0, 50], which leaves headroom for
/// the 1e-10 tolerances used by the Gamma-ratio formulas downstream.
pub fn gamma(s: f64) -> Result<f64> {
    if !(s > 0.0) {
        return Err(Error::Domain(format!(
            "gamma requires a positive argument, got {s}"
        )));
    }
    Ok(gamma_unchecked(s))
}

fn gamma_unchecked(s: f64) -> f64 {
    if s < 0.5 {
        // Reflection into the main branch; only reached for s in (0, 0.5).
        let mut sum = LANCZOS_DK[0];
        for (i, dk) in LANCZOS_DK.iter().enumerate().skip(1) {
            sum += dk / (i as f64 - s);
        }
        std::f64::consts::PI
            / ((std::f64::consts::PI * s).sin()
                * sum
                * TWO_SQRT_E_OVER_PI
                * ((0.5 - s + LANCZOS_R) / std::f64::consts::E).powf(0.5 - s))
    } else if s > 8.0 {
        // The big power loses accuracy as its exponent grows; pull the
        // argument into (7, 8] by the recurrence, where each multiply
        // costs half an ulp.
        let mut factor = 1.0;
        let mut t = s;
        while t > 8.0 {
            t -= 1.0;
            factor *= t;
        }
        factor * gamma_unchecked(t)
    } else {
        let mut sum = LANCZOS_DK[0];
        for (i, dk) in LANCZOS_DK.iter().enumerate().skip(1) {
            sum += dk / (s + i as f64 - 1.0);
        }
        sum * TWO_SQRT_E_OVER_PI * ((s - 0.5 + LANCZOS_R) / std::f64::consts::E).powf(s - 0.5)
    }
}

/// Pochhammer symbol (a)_n = a (a+1) ⋯ (a+n−1), with (a)_0 = 1.
///
/// Evaluated by the recurrence (a)_{n+1} = (a)_n (a+n) in that exact order.
pub fn pochhammer(a: f64, n: u32) -> f64 {
    let mut product = 1.0;
    for i in 0..n {
        product *= a + i as f64;
    }
    product
}

/// Parameter triple (a, b; c) of the Gauss hypergeometric series.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct HypParams {
    pub a: f64,
    pub b: f64,
    pub c: f64,
}

impl HypParams {
    /// Rejects c = 0, -1, -2, ... where a series denominator (c)_n vanishes.
    pub fn new(a: f64, b: f64, c: f64) -> Result<Self> {
        if is_nonpositive_integer(c) {
            return Err(Error::Domain(format!(
                "hypergeometric parameter c must not be zero or a negative integer, got {c}"
            )));
        }
        Ok(HypParams { a, b, c })
    }
}

fn is_nonpositive_integer(x: f64) -> bool {
    x <= 0.0 && x == x.floor()
}

/// Polynomial degree when a or b is a non-positive integer, i.e. the series
/// terminates exactly.
fn terminating_degree(p: HypParams) -> Option<u32> {
    let mut degree: Option<u32> = None;
    for v in [p.a, p.b] {
        if is_nonpositive_integer(v) && -v <= u32::MAX as f64 {
            let d = (-v) as u32;
            degree = Some(degree.map_or(d, |cur| cur.min(d)));
        }
    }
    degree
}

const TERM_CAP: usize = 100_000;
const TAIL_EPS: f64 = 1e-16;
const TAIL_RUN: u32 = 3;

/// F(a, b; c; x) = Σ (a)_n (b)_n / (c)_n · xⁿ/n! for 0 ≤ x < 1.
///
/// Direct summation with tail control: stops once the absolute term drops
/// below 1e-16 · (|running sum| + 1) for three consecutive terms, with a
/// hard cap of 100 000 terms. A non-positive integer a or b truncates the
/// sum at the exact polynomial degree.
pub fn hyp2f1(p: HypParams, x: f64) -> Result<f64> {
    if !(0.0..1.0).contains(&x) {
        return Err(Error::Domain(format!(
            "hyp2f1 series argument must lie in [0, 1), got {x}"
        )));
    }

    if let Some(degree) = terminating_degree(p) {
        let mut sum = 1.0;
        let mut term = 1.0;
        for n in 0..degree {
            let nf = n as f64;
            term *= (p.a + nf) * (p.b + nf) / (p.c + nf) * x / (nf + 1.0);
            sum += term;
        }
        return Ok(sum);
    }

    let mut sum = 1.0;
    let mut term = 1.0;
    let mut small_run = 0u32;
    for n in 0..TERM_CAP {
        let nf = n as f64;
        term *= (p.a + nf) * (p.b + nf) / (p.c + nf) * x / (nf + 1.0);
        sum += term;
        if term.abs() < TAIL_EPS * (sum.abs() + 1.0) {
            small_run += 1;
            if small_run >= TAIL_RUN {
                return Ok(sum);
            }
        } else {
            small_run = 0;
        }
    }
    Err(Error::Accuracy {
        partial_sum: sum,
        terms: TERM_CAP,
    })
}

/// Gamma continued to negative non-integers by reflection; poles at the
/// non-positive integers stay errors. Internal helper for the Gamma-ratio
/// closed form, whose factors Γ(c−a), Γ(c−b) can land below zero even when
/// the formula itself is fine (e.g. terminating series).
fn gamma_signed(s: f64) -> Result<f64> {
    if s > 0.0 {
        return Ok(gamma_unchecked(s));
    }
    if s == s.floor() || !s.is_finite() {
        return Err(Error::Domain(format!(
            "gamma pole or invalid argument at {s}"
        )));
    }
    // Γ(s) = π / (sin(πs) Γ(1−s)).
    Ok(std::f64::consts::PI / ((std::f64::consts::PI * s).sin() * gamma_unchecked(1.0 - s)))
}

/// Gauss summation: F(a, b; c; 1) = Γ(c) Γ(c−a−b) / (Γ(c−a) Γ(c−b)),
/// valid for c − a − b > 0.
pub fn hyp2f1_at_one(p: HypParams) -> Result<f64> {
    let s = p.c - p.a - p.b;
    if !(s > 0.0) {
        return Err(Error::Domain(format!(
            "Gauss summation requires c - a - b > 0, got {s}"
        )));
    }
    Ok(gamma_signed(p.c)? * gamma(s)? / (gamma_signed(p.c - p.a)? * gamma_signed(p.c - p.b)?))
}

/// Derivative of the series in its argument:
/// d/dx F(a, b; c; x) = (ab/c) F(a+1, b+1; c+1; x).
pub fn hyp2f1_derivative(p: HypParams, x: f64) -> Result<f64> {
    let shifted = HypParams::new(p.a + 1.0, p.b + 1.0, p.c + 1.0)?;
    Ok(p.a * p.b / p.c * hyp2f1(shifted, x)?)
}
