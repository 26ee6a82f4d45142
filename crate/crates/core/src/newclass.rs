//! Solutions with m = ±k of the separated equation, outside the unitary series:
//!
//! ```text
//! f'' + tanh τ f' - (k² tanh²τ + k) f = 0,      f(τ) = g_k(tanh τ)
//! g_k(x) = (1-x²)^{-k/2} [α + β ∫(1-x²)^{k-1/2} dx]
//! ```
//!
//! The antiderivative is closed form for integer k:
//!
//! ```text
//! ∫(1-x²)^{k-1/2} dx = x√(1-x²)/(2k) [(1-x²)^{k-1} + (2k-1)!!/(2^k (k-1)! (1-x²)) Σ_{r=1}^{k-1} 2^r (r-1)!/(2r-1)!! (1-x²)^r]
//!                     + (2k-1)!!/(2^k k!) arcsin x
//! ```
//!
//! The constant of integration is chosen so the antiderivative vanishes at 0.

use std::f64::consts::FRAC_PI_2;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::discrete::ln_cosh;
use crate::error::{domain, Error, Result};
use crate::operators::{central_d1, central_d2};
use crate::options::EvalOptions;

/// Beyond this |τ| the Gudermannian is taken as 2 arctan e^τ - π/2.
const GD_SWITCH: f64 = 20.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum WeightSign {
    /// Y^k_k, weight +k
    Plus,
    /// Ỹ^{-k}_k, weight -k
    Minus,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct NewClassSpec {
    pub k: u32,
    pub alpha: f64,
    pub beta: f64,
    pub sign: WeightSign,
}

impl NewClassSpec {
    /// Defaults to (α, β) = (0, 1), the non-constant branch.
    pub fn new(k: u32) -> Self {
        Self { k, alpha: 0.0, beta: 1.0, sign: WeightSign::Plus }
    }

    pub fn with_constants(mut self, alpha: f64, beta: f64) -> Self {
        self.alpha = alpha;
        self.beta = beta;
        self
    }

    pub fn with_sign(mut self, sign: WeightSign) -> Self {
        self.sign = sign;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.alpha.is_finite() && self.beta.is_finite()) {
            return Err(domain("alpha and beta must be finite"));
        }
        Ok(())
    }

    pub fn weight(&self) -> f64 {
        match self.sign {
            WeightSign::Plus => self.k as f64,
            WeightSign::Minus => -(self.k as f64),
        }
    }

    /// k(k+1), the value of the Casimir on these functions.
    pub fn casimir_eigenvalue(&self) -> f64 {
        let k = self.k as f64;
        k * (k + 1.0)
    }
}

/// arcsin(tanh τ), the Gudermannian function.
///
/// `tanh τ` rounds toward ±1 quickly and arcsin is ill-conditioned there, so the
/// angle is taken from (tanh τ, sech τ) directly.
pub fn arcsin_tanh(tau: f64) -> f64 {
    if tau.abs() > GD_SWITCH {
        2.0 * tau.exp().atan() - FRAC_PI_2
    } else {
        tau.tanh().atan2(1.0 / tau.cosh())
    }
}

/// (2k-1)!! / (2^k k!)
fn arcsin_coefficient(k: u32) -> f64 {
    let mut c = 1.0;
    for j in 1..=k {
        c *= (2 * j - 1) as f64 / (2 * j) as f64;
    }
    c
}

/// ∫₀^x (1-t²)^{k-1/2} dt written with x = tanh τ, s = sech τ and gd = arcsin x.
fn antiderivative(k: u32, x: f64, s: f64, gd: f64) -> f64 {
    match k {
        0 => gd,
        1 => 0.5 * (x * s + gd),
        _ => {
            let kf = k as f64;
            let s2 = s * s;
            // (2k-1)!! / (2^k (k-1)!) = k · (2k-1)!!/(2^k k!)
            let lead = kf * arcsin_coefficient(k);
            let mut sum = 0.0;
            let mut a_r = 1.0;
            let mut s2r = 1.0;
            for r in 1..k {
                // a_r = 2^r (r-1)!/(2r-1)!!
                a_r *= if r == 1 { 2.0 } else { 2.0 * (r - 1) as f64 / (2 * r - 1) as f64 };
                // (1-x²)^{r-1}
                sum += a_r * s2r;
                s2r *= s2;
            }
            x * s / (2.0 * kf) * (s2.powi(k as i32 - 1) + lead * sum) + arcsin_coefficient(k) * gd
        }
    }
}

/// g_k(x) on |x| < 1.
pub fn g_k(spec: &NewClassSpec, x: f64) -> Result<f64> {
    spec.validate()?;
    if !(x.abs() < 1.0) {
        return Err(domain(format!("g_k requires |x| < 1, got {x}")));
    }
    let s2 = (1.0 - x) * (1.0 + x);
    let s = s2.sqrt();
    let i = antiderivative(spec.k, x, s, x.asin());
    Ok(s2.powf(-(spec.k as f64) / 2.0) * (spec.alpha + spec.beta * i))
}

/// Real τ-profile f^k_k(τ) = g_k(tanh τ).
pub fn newclass_profile(spec: &NewClassSpec, tau: f64) -> Result<f64> {
    spec.validate()?;
    if !tau.is_finite() {
        return Err(Error::NonFinite("tau"));
    }
    let lc = ln_cosh(tau);
    let s = (-lc).exp();
    let i = antiderivative(spec.k, tau.tanh(), s, arcsin_tanh(tau));
    let v = (spec.k as f64 * lc).exp() * (spec.alpha + spec.beta * i);
    if v.is_finite() {
        Ok(v)
    } else {
        Err(Error::NonFinite("new-class profile"))
    }
}

/// e^{±ikφ} g_k(tanh τ).
pub fn y_newclass(spec: &NewClassSpec, tau: f64, phi: f64) -> Result<Complex64> {
    let f = newclass_profile(spec, tau)?;
    Ok(Complex64::from_polar(f, spec.weight() * phi))
}

/// Residual of f'' + tanh τ f' - (k² tanh²τ + k) f by central differences with
/// `opts.fd_step`, divided by max(1, Σ|term|).
pub fn ode_residual_newclass(spec: &NewClassSpec, tau: f64, opts: &EvalOptions) -> Result<f64> {
    let f = |t: f64| newclass_profile(spec, t);
    let h = opts.fd_step;
    let k = spec.k as f64;
    let t = tau.tanh();
    let terms = [central_d2(f, tau, h)?, t * central_d1(f, tau, h)?, -(k * k * t * t + k) * f(tau)?];
    let scale = terms.iter().map(|x| x.abs()).sum::<f64>().max(1.0);
    Ok(terms.iter().sum::<f64>().abs() / scale)
}
