//! Complex log-gamma and the gamma-magnitude closed forms.
//!
//! `ln_gamma` shifts the argument upward with the recurrence until Re z >= 10
//! and then applies the Stirling series. The logarithms of the shift factors
//! are summed one by one, which keeps the result on the analytic branch that
//! is real on the positive axis (branch cut along the negative real axis).

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};

const LN_SQRT_2PI: f64 = 0.918_938_533_204_672_741_780_329_736_406;
const STIRLING_SHIFT: f64 = 10.0;

/// B_{2j} / (2j (2j - 1)) for j = 1..=10.
const STIRLING_COEFFS: [f64; 10] = [
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360_360.0,
    1.0 / 156.0,
    -3617.0 / 122_400.0,
    43_867.0 / 244_188.0,
    -174_611.0 / 125_400.0,
];

/// Largest argument for which the exact factorial products are used.
const EXACT_PRODUCT_LIMIT: f64 = 170.0;

pub(crate) fn is_nonpositive_integer(z: Complex64) -> bool {
    z.im == 0.0 && z.re <= 0.0 && z.re.fract() == 0.0
}

fn stirling(w: Complex64) -> Complex64 {
    let inv = w.inv();
    let inv2 = inv * inv;
    let mut series = Complex64::new(0.0, 0.0);
    let mut pow = inv;
    for c in STIRLING_COEFFS {
        series += pow * c;
        pow *= inv2;
    }
    (w - 0.5) * w.ln() - w + LN_SQRT_2PI + series
}

/// Principal-branch log Γ(z).
///
/// For Re z < -20 the reflection formula is used and the imaginary part is
/// only meaningful modulo 2π.
pub fn ln_gamma(z: Complex64) -> Result<Complex64> {
    if !(z.re.is_finite() && z.im.is_finite()) {
        return Err(Error::NonFinite("ln_gamma argument"));
    }
    if is_nonpositive_integer(z) {
        return Err(Error::GammaPole { re: z.re, im: z.im });
    }
    if z.re < -20.0 {
        // Γ(z) Γ(1 - z) = π / sin(πz)
        let s = (z * PI).sin();
        return Ok(Complex64::new(PI.ln(), 0.0) - s.ln() - ln_gamma(Complex64::new(1.0, 0.0) - z)?);
    }
    let mut w = z;
    let mut shift = Complex64::new(0.0, 0.0);
    while w.re < STIRLING_SHIFT {
        shift += w.ln();
        w += 1.0;
    }
    Ok(stirling(w) - shift)
}

/// Γ(z) for complex z.
pub fn gamma(z: Complex64) -> Result<Complex64> {
    if z.im == 0.0 {
        return gamma_real(z.re).map(|g| Complex64::new(g, 0.0));
    }
    let v = ln_gamma(z)?.exp();
    finite(v, "gamma")
}

/// 1/Γ(z), which is entire: zero at the poles of Γ.
pub fn rgamma(z: Complex64) -> Result<Complex64> {
    if is_nonpositive_integer(z) {
        return Ok(Complex64::new(0.0, 0.0));
    }
    if z.im == 0.0 {
        return Ok(Complex64::new(1.0 / gamma_real(z.re)?, 0.0));
    }
    finite((-ln_gamma(z)?).exp(), "rgamma")
}

/// Γ(x) for real x. Integer and half-integer arguments up to 170 use exact
/// products so that factorials and double factorials are reproduced to the ulp.
pub fn gamma_real(x: f64) -> Result<f64> {
    if !x.is_finite() {
        return Err(Error::NonFinite("gamma_real argument"));
    }
    if x <= 0.0 && x.fract() == 0.0 {
        return Err(Error::GammaPole { re: x, im: 0.0 });
    }
    if x > 0.0 && x <= EXACT_PRODUCT_LIMIT {
        if x.fract() == 0.0 {
            let mut p = 1.0;
            let mut j = 2.0;
            while j < x {
                p *= j;
                j += 1.0;
            }
            return Ok(p);
        }
        if x.fract() == 0.5 {
            let mut p = PI.sqrt();
            let mut j = 0.5;
            while j < x {
                p *= j;
                j += 1.0;
            }
            return Ok(p);
        }
    }
    let v = ln_gamma(Complex64::new(x, 0.0))?.exp();
    finite(v, "gamma_real").map(|v| v.re)
}

/// ln|Γ(x)| for real x > 0.
pub fn ln_gamma_real(x: f64) -> Result<f64> {
    if x <= 0.0 {
        return Err(Error::Domain(format!("ln_gamma_real requires x > 0, got {x}")));
    }
    if x <= EXACT_PRODUCT_LIMIT && (x.fract() == 0.0 || x.fract() == 0.5) {
        return Ok(gamma_real(x)?.ln());
    }
    Ok(ln_gamma(Complex64::new(x, 0.0))?.re)
}

/// Argument forms for [`gamma_magnitude_sq`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum GammaArg {
    /// |Γ(1/2 + ix)|² = π / cosh(πx)
    HalfPlusImag(f64),
    /// |Γ(ix)|² = π / (x sinh(πx))
    Imag(f64),
    /// |Γ(z)|² through the log-gamma kernel.
    General(Complex64),
}

/// |Γ(·)|², using the closed forms where they apply.
pub fn gamma_magnitude_sq(arg: GammaArg) -> Result<f64> {
    match arg {
        GammaArg::HalfPlusImag(x) => {
            let c = (PI * x).cosh();
            Ok(PI / c)
        }
        GammaArg::Imag(x) => {
            if x == 0.0 {
                return Err(Error::GammaPole { re: 0.0, im: 0.0 });
            }
            Ok(PI / (x * (PI * x).sinh()))
        }
        GammaArg::General(z) => {
            if z.im == 0.0 {
                let g = gamma_real(z.re)?;
                return Ok(g * g);
            }
            Ok((2.0 * ln_gamma(z)?.re).exp())
        }
    }
}

/// (2k-1)!! / (2k)!! continued to real k > -1/2 as Γ(k + 1/2) / (√π Γ(k + 1)).
///
/// Equals (2/π) ∫₀^∞ sech^{2k+1}(x) dx.
pub fn generalized_double_factorial_ratio(k: f64) -> Result<f64> {
    if !(k.is_finite() && k > -0.5) {
        return Err(Error::Domain(format!(
            "double-factorial ratio requires k > -1/2, got {k}"
        )));
    }
    if k + 1.0 <= EXACT_PRODUCT_LIMIT {
        return Ok(gamma_real(k + 0.5)? / (PI.sqrt() * gamma_real(k + 1.0)?));
    }
    Ok((ln_gamma_real(k + 0.5)? - ln_gamma_real(k + 1.0)?).exp() / PI.sqrt())
}

fn finite(v: Complex64, what: &'static str) -> Result<Complex64> {
    if v.re.is_finite() && v.im.is_finite() {
        Ok(v)
    } else {
        Err(Error::NonFinite(what))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn rel(a: f64, b: f64) -> f64 {
        (a - b).abs() / b.abs().max(f64::MIN_POSITIVE)
    }

    #[test]
    fn ln_gamma_at_one_and_two() {
        assert!(ln_gamma(c(1.0, 0.0)).unwrap().norm() < 1e-15);
        assert!(ln_gamma(c(2.0, 0.0)).unwrap().norm() < 1e-15);
    }

    #[test]
    fn poles_are_errors() {
        for z in [0.0, -1.0, -7.0] {
            assert!(matches!(ln_gamma(c(z, 0.0)), Err(Error::GammaPole { .. })));
            assert!(gamma_real(z).is_err());
        }
        assert_eq!(rgamma(c(-3.0, 0.0)).unwrap(), c(0.0, 0.0));
        assert!(gamma_magnitude_sq(GammaArg::Imag(0.0)).is_err());
    }

    #[test]
    fn real_values() {
        assert_eq!(gamma_real(5.0).unwrap(), 24.0);
        assert!(rel(gamma_real(0.5).unwrap(), PI.sqrt()) < 1e-16);
        assert!(rel(gamma_real(-0.5).unwrap(), -2.0 * PI.sqrt()) < 1e-14);
        // Γ(0.3) = 2.991568987687590...
        assert!(rel(gamma_real(0.3).unwrap(), 2.991_568_987_687_590_8) < 1e-14);
        // ln Γ(200.5)
        let lg = ln_gamma_real(200.5).unwrap();
        assert!(rel(lg, 860.582_203_509_782_5) < 1e-14);
    }

    #[test]
    fn magnitude_closed_forms() {
        // |Γ(i)|² = π/sinh π
        let v = gamma_magnitude_sq(GammaArg::Imag(1.0)).unwrap();
        assert!(rel(v, 0.272_029_054_982_133) < 1e-12);
        let g = gamma_magnitude_sq(GammaArg::General(c(0.0, 1.0))).unwrap();
        assert!(rel(g, v) < 1e-13);
        let h = gamma_magnitude_sq(GammaArg::HalfPlusImag(1.0)).unwrap();
        assert!(rel(h, PI / PI.cosh()) < 1e-15);
        assert!(rel(h, 0.271_014_951_399_418_3) < 1e-14);
        assert!(rel(gamma_magnitude_sq(GammaArg::HalfPlusImag(0.0)).unwrap(), PI) < 1e-16);
        assert_eq!(gamma_magnitude_sq(GammaArg::General(c(3.0, 0.0))).unwrap(), 4.0);
        // π/(2 sinh 2π), evaluated independently with mpmath
        let v2 = gamma_magnitude_sq(GammaArg::Imag(2.0)).unwrap();
        assert!(rel(v2, 0.005_866_764_826_350_946) < 1e-12);
    }

    #[test]
    fn complex_reference_value() {
        // ln Γ(3 + 4i) = -1.7566267846037841 + 4.7426644380346579i (mpmath loggamma)
        let v = ln_gamma(c(3.0, 4.0)).unwrap();
        assert!((v - c(-1.756_626_784_603_784_1, 4.742_664_438_034_658)).norm() < 1e-13);
        // loggamma(-2.5 + 0.5i) = -0.9350856212982775 - 8.8709628852474592i
        let v = ln_gamma(c(-2.5, 0.5)).unwrap();
        assert!((v - c(-0.935_085_621_298_277_5, -8.870_962_885_247_459)).norm() < 1e-12);
    }

    #[test]
    fn double_factorial_ratio() {
        assert_eq!(generalized_double_factorial_ratio(0.0).unwrap(), 1.0);
        assert!(rel(generalized_double_factorial_ratio(1.0).unwrap(), 0.5) < 1e-16);
        assert!(rel(generalized_double_factorial_ratio(2.0).unwrap(), 3.0 / 8.0) < 1e-15);
        assert!(rel(generalized_double_factorial_ratio(0.5).unwrap(), 2.0 / PI) < 1e-15);
        assert!(generalized_double_factorial_ratio(-0.5).is_err());
    }
}
