//! Supplementary series, obtained from the principal-series forms at λ = -iγ.
//! The functions are not normalizable and are returned with unit constant.

use std::f64::consts::PI;

use num_complex::Complex64;

use super::{Parity, SupplementarySpec};
use crate::discrete::ln_cosh;
use crate::error::{Error, Result};
use crate::numerics::{gamma_real, gauss_2f1_at, Hyp2F1Params};
use crate::options::EvalOptions;

fn offsets(parity: Parity) -> (f64, f64) {
    match parity {
        Parity::Even => (0.5, PI.sqrt()),
        Parity::Odd => (1.5, 0.5 * PI.sqrt()),
    }
}

/// e^{imφ} cosh^{-(1/2+γ)}τ ₂F₁(½(m+½+γ), ½(-m+½+γ); ½; tanh²τ), or the odd analogue
/// with tanh τ and c = 3/2.
pub fn y_supplementary(spec: &SupplementarySpec, tau: f64, phi: f64, opts: &EvalOptions) -> Result<Complex64> {
    spec.validate()?;
    if !tau.is_finite() {
        return Err(Error::NonFinite("tau"));
    }
    let (g, m) = (spec.gamma, spec.m as f64);
    let (s, _) = offsets(spec.parity);
    let lc = ln_cosh(tau);
    let t = tau.tanh();
    let p = Hyp2F1Params::real(0.5 * (m + s + g), 0.5 * (-m + s + g), s, t * t);
    let f = gauss_2f1_at(p, (-2.0 * lc).exp(), opts)?;
    let mut radial = f * (-(0.5 + g) * lc).exp();
    if spec.parity == Parity::Odd {
        radial *= t;
    }
    Ok(Complex64::from_polar(1.0, m * phi) * radial)
}

/// Â₁(γ) or Ā₁(γ); the second coefficient is the same expression at -γ.
fn amplitude(parity: Parity, m: f64, g: f64) -> Result<f64> {
    let (s, pre) = offsets(parity);
    Ok(pre * gamma_real(-g)? / (gamma_real(0.5 * (-m + s - g))? * gamma_real(0.5 * (m + s - g))?))
}

/// Large-|τ| form cosh^{-1/2}τ [B(γ) e^{-γ|τ|} + B(-γ) e^{γ|τ|}] of the radial profile,
/// with B(±γ) = A₁(±γ) 2^{±γ}; odd functions carry the sign of τ.
pub fn supplementary_asymptotic(spec: &SupplementarySpec, tau: f64) -> Result<f64> {
    spec.validate()?;
    let (g, m) = (spec.gamma, spec.m as f64);
    let b1 = amplitude(spec.parity, m, g)? * 2f64.powf(g);
    let b2 = amplitude(spec.parity, m, -g)? * 2f64.powf(-g);
    let at = tau.abs();
    let v = (-0.5 * ln_cosh(at)).exp() * (b1 * (-g * at).exp() + b2 * (g * at).exp());
    Ok(match spec.parity {
        Parity::Odd if tau < 0.0 => -v,
        _ => v,
    })
}
