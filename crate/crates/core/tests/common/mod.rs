//! Shared test-support code: a fixed-precision big-float built on BigInt
//! (for high-precision series oracles kept independent of the production
//! path), a Kahan-compensated reference summation, adaptive Simpson
//! quadrature, and finite-difference Wirtinger derivatives.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::ToPrimitive;

use alpha_harmonic::alphamap::{AlphaHarmonicMap, WirtingerPair};

/// Working precision of the oracle arithmetic: 700 bits ≈ 210 decimal
/// digits.
const PREC_BITS: u64 = 700;

/// Sign-magnitude binary float `mant · 2^exp` truncated to PREC_BITS.
#[derive(Clone, Debug)]
pub struct BigFloat {
    mant: BigInt,
    exp: i64,
}

impl BigFloat {
    pub fn zero() -> Self {
        BigFloat {
            mant: BigInt::from(0),
            exp: 0,
        }
    }

    pub fn one() -> Self {
        BigFloat {
            mant: BigInt::from(1),
            exp: 0,
        }
    }

    pub fn from_i64(n: i64) -> Self {
        BigFloat {
            mant: BigInt::from(n),
            exp: 0,
        }
    }

    /// Exact conversion: every finite f64 is a small integer times a power
    /// of two.
    pub fn from_f64(x: f64) -> Self {
        assert!(x.is_finite(), "oracle input must be finite");
        if x == 0.0 {
            return Self::zero();
        }
        let bits = x.to_bits();
        let negative = bits >> 63 == 1;
        let exp_raw = ((bits >> 52) & 0x7ff) as i64;
        let frac = bits & 0x000f_ffff_ffff_ffff;
        let (mant, exp) = if exp_raw == 0 {
            (frac, -1074)
        } else {
            (frac | (1u64 << 52), exp_raw - 1075)
        };
        let mut m = BigInt::from(mant);
        if negative {
            m = -m;
        }
        BigFloat { mant: m, exp }
    }

    fn normalized(mut self) -> Self {
        let bits = self.mant.bits();
        if bits > PREC_BITS {
            let shift = bits - PREC_BITS;
            self.mant >>= shift;
            self.exp += shift as i64;
        }
        self
    }

    pub fn is_zero(&self) -> bool {
        self.mant == BigInt::from(0)
    }

    pub fn neg(&self) -> Self {
        BigFloat {
            mant: -&self.mant,
            exp: self.exp,
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let (hi, lo) = if self.exp >= other.exp {
            (self, other)
        } else {
            (other, self)
        };
        let shift = (hi.exp - lo.exp) as u64;
        if shift > PREC_BITS + 64 {
            // The smaller operand is beyond the working precision.
            return hi.clone().normalized();
        }
        BigFloat {
            mant: (&hi.mant << shift) + &lo.mant,
            exp: lo.exp,
        }
        .normalized()
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        BigFloat {
            mant: &self.mant * &other.mant,
            exp: self.exp + other.exp,
        }
        .normalized()
    }

    pub fn div(&self, other: &Self) -> Self {
        assert!(!other.is_zero(), "oracle division by zero");
        if self.is_zero() {
            return Self::zero();
        }
        let scale = PREC_BITS + 16;
        BigFloat {
            mant: (&self.mant << scale) / &other.mant,
            exp: self.exp - other.exp - scale as i64,
        }
        .normalized()
    }

    /// floor(log2 |x|); i64::MIN for zero.
    pub fn magnitude_exp(&self) -> i64 {
        if self.is_zero() {
            i64::MIN
        } else {
            self.exp + self.mant.bits() as i64 - 1
        }
    }

    pub fn to_f64(&self) -> f64 {
        if self.is_zero() {
            return 0.0;
        }
        let bits = self.mant.bits();
        if bits > 64 {
            let shift = bits - 64;
            let head = (&self.mant >> shift).to_f64().expect("bigint head");
            head * 2f64.powi((self.exp + shift as i64) as i32)
        } else {
            self.mant.to_f64().expect("bigint") * 2f64.powi(self.exp as i32)
        }
    }
}

/// Complex number with BigFloat components.
#[derive(Clone, Debug)]
pub struct BigComplex {
    pub re: BigFloat,
    pub im: BigFloat,
}

impl BigComplex {
    pub fn from_c64(z: Complex64) -> Self {
        BigComplex {
            re: BigFloat::from_f64(z.re),
            im: BigFloat::from_f64(z.im),
        }
    }

    pub fn zero() -> Self {
        BigComplex {
            re: BigFloat::zero(),
            im: BigFloat::zero(),
        }
    }

    pub fn one() -> Self {
        BigComplex {
            re: BigFloat::one(),
            im: BigFloat::zero(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        BigComplex {
            re: self.re.add(&other.re),
            im: self.im.add(&other.im),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        BigComplex {
            re: self.re.mul(&other.re).sub(&self.im.mul(&other.im)),
            im: self.re.mul(&other.im).add(&self.im.mul(&other.re)),
        }
    }

    pub fn mul_real(&self, s: &BigFloat) -> Self {
        BigComplex {
            re: self.re.mul(s),
            im: self.im.mul(s),
        }
    }

    pub fn conj(&self) -> Self {
        BigComplex {
            re: self.re.clone(),
            im: self.im.neg(),
        }
    }

    pub fn to_c64(&self) -> Complex64 {
        Complex64::new(self.re.to_f64(), self.im.to_f64())
    }
}

/// Direct high-precision summation of F(a, b; c; x) at the exact f64
/// inputs; truncation and rounding both sit far below 2⁻⁶⁷⁰.
pub fn hyp2f1_oracle(a: f64, b: f64, c: f64, x: f64) -> BigFloat {
    let (a, b, c, x) = (
        BigFloat::from_f64(a),
        BigFloat::from_f64(b),
        BigFloat::from_f64(c),
        BigFloat::from_f64(x),
    );
    let one = BigFloat::one();
    let mut term = BigFloat::one();
    let mut sum = BigFloat::one();
    let mut n = BigFloat::zero();
    for _ in 0..1_000_000usize {
        term = term
            .mul(&a.add(&n))
            .mul(&b.add(&n))
            .mul(&x)
            .div(&c.add(&n))
            .div(&n.add(&one));
        if term.is_zero() {
            break;
        }
        sum = sum.add(&term);
        if term.magnitude_exp() < sum.magnitude_exp() - 680 {
            break;
        }
        n = n.add(&one);
    }
    sum
}

/// High-precision evaluation of the two-sided coefficient series at the
/// exact f64 point z; big arithmetic end to end, including |z|².
pub fn evaluate_oracle(map: &AlphaHarmonicMap, z: Complex64) -> Complex64 {
    let alpha = map.alpha();
    let zb = BigComplex::from_c64(z);
    let t = zb.re.mul(&zb.re).add(&zb.im.mul(&zb.im));
    let mut sum = BigComplex::zero();
    for &(k, coeff) in map.spectrum().entries() {
        let m = k.unsigned_abs();
        let f = hyp2f1_oracle_big(-alpha / 2.0, m as f64 - alpha / 2.0, m as f64 + 1.0, &t);
        let base = if k >= 0 { zb.clone() } else { zb.conj() };
        let mut power = BigComplex::one();
        for _ in 0..m {
            power = power.mul(&base);
        }
        sum = sum.add(&power.mul(&BigComplex::from_c64(coeff)).mul_real(&f));
    }
    sum.to_c64()
}

/// Series oracle with a BigFloat argument (used when the argument itself is
/// a derived high-precision quantity like |z|²).
pub fn hyp2f1_oracle_big(a: f64, b: f64, c: f64, x: &BigFloat) -> BigFloat {
    let (a, b, c) = (
        BigFloat::from_f64(a),
        BigFloat::from_f64(b),
        BigFloat::from_f64(c),
    );
    let one = BigFloat::one();
    let mut term = BigFloat::one();
    let mut sum = BigFloat::one();
    let mut n = BigFloat::zero();
    for _ in 0..1_000_000usize {
        term = term
            .mul(&a.add(&n))
            .mul(&b.add(&n))
            .mul(x)
            .div(&c.add(&n))
            .div(&n.add(&one));
        if term.is_zero() {
            break;
        }
        sum = sum.add(&term);
        if term.magnitude_exp() < sum.magnitude_exp() - 680 {
            break;
        }
        n = n.add(&one);
    }
    sum
}

/// Kahan-compensated f64 summation of the same series with the same tail
/// rule as the production path; checks accumulation error independently.
pub fn hyp2f1_kahan(a: f64, b: f64, c: f64, x: f64) -> f64 {
    let mut sum = 1.0f64;
    let mut comp = 0.0f64;
    let mut term = 1.0f64;
    let mut run = 0u32;
    for n in 0..200_000usize {
        let nf = n as f64;
        term *= (a + nf) * (b + nf) / (c + nf) * x / (nf + 1.0);
        let y = term - comp;
        let t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        if term.abs() < 1e-16 * (sum.abs() + 1.0) {
            run += 1;
            if run >= 3 {
                break;
            }
        } else {
            run = 0;
        }
    }
    sum
}

/// Adaptive Simpson quadrature with Richardson acceptance.
pub fn adaptive_simpson<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, tol: f64) -> f64 {
    fn simpson<F: Fn(f64) -> f64>(f: &F, a: f64, m: f64, b: f64) -> f64 {
        (b - a) / 6.0 * (f(a) + 4.0 * f(m) + f(b))
    }
    fn recurse<F: Fn(f64) -> f64>(
        f: &F,
        a: f64,
        b: f64,
        whole: f64,
        tol: f64,
        depth: u32,
    ) -> f64 {
        let m = 0.5 * (a + b);
        let left = simpson(f, a, 0.5 * (a + m), m);
        let right = simpson(f, m, 0.5 * (m + b), b);
        let refined = left + right;
        if depth == 0 || (refined - whole).abs() <= 15.0 * tol {
            return refined + (refined - whole) / 15.0;
        }
        recurse(f, a, m, left, tol / 2.0, depth - 1)
            + recurse(f, m, b, right, tol / 2.0, depth - 1)
    }
    let m = 0.5 * (a + b);
    recurse(f, a, b, simpson(f, a, m, b), tol, 40)
}

/// Central finite differences of `evaluate`, converted to Wirtinger form.
pub fn wirtinger_fd(map: &AlphaHarmonicMap, z: Complex64, h: f64) -> WirtingerPair {
    let fpx = map.evaluate(z + h).unwrap();
    let fmx = map.evaluate(z - h).unwrap();
    let fpy = map.evaluate(z + Complex64::new(0.0, h)).unwrap();
    let fmy = map.evaluate(z - Complex64::new(0.0, h)).unwrap();
    let fx = (fpx - fmx) / (2.0 * h);
    let fy = (fpy - fmy) / (2.0 * h);
    let i = Complex64::I;
    WirtingerPair {
        dz: (fx - i * fy) / 2.0,
        dzbar: (fx + i * fy) / 2.0,
    }
}

pub fn rel_err(got: f64, want: f64) -> f64 {
    (got - want).abs() / want.abs().max(1e-300)
}

#[test]
fn bigfloat_arithmetic_sanity() {
    let third = BigFloat::one().div(&BigFloat::from_i64(3));
    let one = third.add(&third).add(&third);
    let err = one.sub(&BigFloat::one());
    assert!(err.is_zero() || err.magnitude_exp() < -690);

    assert_eq!(BigFloat::from_f64(1.5).to_f64(), 1.5);
    assert_eq!(BigFloat::from_f64(-0.999).to_f64(), -0.999);
    let product = BigFloat::from_f64(1e-8).mul(&BigFloat::from_f64(1e8));
    assert!((product.to_f64() - 1.0).abs() < 1e-15);

    // Geometric series check of the oracle: F(1,1;1;1/2) = 2.
    let two = hyp2f1_oracle(1.0, 1.0, 1.0, 0.5);
    assert!((two.to_f64() - 2.0).abs() < 1e-15);
}
