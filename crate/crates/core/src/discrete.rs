//! Discrete series D± on the one-sheet hyperboloid.
//!
//! For D+ the weight runs over m = k+1, k+2, … and
//!
//! ```text
//! Y^m_k(τ, φ) = N^m_k e^{imφ} P^m_k(sinh τ),   N^m_k = √((2k+1) / (2π² (m-k-1)! (m+k)!))
//! P^m_k(x) = 2^k n! (1+x²)^{-(k+1)/2} Σ_r (-1)^r (m-r-1)! / (r! (n-2r)!) (2x/√(1+x²))^{n-2r}
//! ```
//!
//! with n = m-k-1. Factorials are Γ-continued so half-integer k works unchanged.
//! D- functions carry weights m <= -(k+1) and are built from P^{-m}_k.

use std::f64::consts::{LN_2, PI};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};
use crate::numerics::{gamma_real, gauss_2f1_at, generalized_double_factorial_ratio, ln_gamma_real, Hyp2F1Params};
use crate::options::EvalOptions;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum DiscreteSeries {
    DPlus,
    DMinus,
}

/// Representation label k and weight m of a discrete-series function.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DiscreteSpec {
    pub k: f64,
    pub m: f64,
    pub series: DiscreteSeries,
}

impl DiscreteSpec {
    pub fn new(k: f64, m: f64, series: DiscreteSeries) -> Result<Self> {
        let s = Self { k, m, series };
        s.validate()?;
        Ok(s)
    }

    pub fn dplus(k: f64, m: f64) -> Result<Self> {
        Self::new(k, m, DiscreteSeries::DPlus)
    }

    pub fn dminus(k: f64, m: f64) -> Result<Self> {
        Self::new(k, m, DiscreteSeries::DMinus)
    }

    pub fn validate(&self) -> Result<()> {
        validate_k(self.k)?;
        let d = self.m - self.k;
        if !self.m.is_finite() || d.fract() != 0.0 {
            return Err(domain(format!("m - k must be an integer, got k = {}, m = {}", self.k, self.m)));
        }
        match self.series {
            DiscreteSeries::DPlus if self.m < self.k + 1.0 => {
                Err(domain(format!("D+ requires m >= k+1, got k = {}, m = {}", self.k, self.m)))
            }
            DiscreteSeries::DMinus if self.m > -(self.k + 1.0) => {
                Err(domain(format!("D- requires m <= -(k+1), got k = {}, m = {}", self.k, self.m)))
            }
            _ => Ok(()),
        }
    }

    /// n = |m| - k - 1, the number of ladder steps from the extremal weight.
    pub fn steps(&self) -> usize {
        (self.m.abs() - self.k - 1.0) as usize
    }

    pub fn evaluate(&self, tau: f64, phi: f64) -> Result<Complex64> {
        match self.series {
            DiscreteSeries::DPlus => y_dplus(self.k, self.m, tau, phi),
            DiscreteSeries::DMinus => y_dminus(self.k, self.m, tau, phi),
        }
    }
}

/// k must be one of -1/2, 0, 1/2, 1, ...
pub fn validate_k(k: f64) -> Result<()> {
    if !k.is_finite() || (2.0 * k).fract() != 0.0 || k < -0.5 {
        return Err(domain(format!("k must be one of -1/2, 0, 1/2, 1, ..., got {k}")));
    }
    Ok(())
}

fn check_dplus(k: f64, m: f64) -> Result<usize> {
    Ok(DiscreteSpec::dplus(k, m)?.steps())
}

fn check_normalizable(k: f64) -> Result<()> {
    if k == -0.5 {
        return Err(domain("k = -1/2 carries the factor 2k+1 = 0; the discrete-series function is not normalizable"));
    }
    Ok(())
}

/// c_k of the lowest-weight function c_k cosh^{-(k+1)}τ, fixed by unit norm.
///
/// c_k = (1/(√2 π)) √((2k)!!/(2k-1)!!), continued through Γ for half-integer k.
pub fn lowest_weight_norm(k: f64) -> Result<f64> {
    validate_k(k)?;
    check_normalizable(k)?;
    if k.fract() == 0.0 && k <= 60.0 {
        // exact double-factorial ratio
        let mut ratio = 1.0;
        let mut j = 1.0;
        while j <= k {
            ratio *= (2.0 * j) / (2.0 * j - 1.0);
            j += 1.0;
        }
        return Ok(ratio.sqrt() / (2f64.sqrt() * PI));
    }
    let r = generalized_double_factorial_ratio(k)?;
    Ok((1.0 / r).sqrt() / (2f64.sqrt() * PI))
}

/// ln cosh τ without overflow.
pub(crate) fn ln_cosh(tau: f64) -> f64 {
    let a = tau.abs();
    a + (-2.0 * a).exp().ln_1p() - LN_2
}

/// Coefficients d_r = c_r / c_0 of the sum, c_r = (-1)^r (m-r-1)! / (r! (n-2r)!).
fn sum_coefficients(n: usize, m: f64) -> Vec<f64> {
    let mut d = Vec::with_capacity(n / 2 + 1);
    d.push(1.0);
    for r in 1..=n / 2 {
        let rf = r as f64;
        let nf = (n - 2 * r) as f64;
        let prev = d[r - 1];
        d.push(-prev * (nf + 2.0) * (nf + 1.0) / (rf * (m - rf)));
    }
    d
}

/// Σ_r d_r v^{n-2r}, Horner in v².
fn sum_value(d: &[f64], n: usize, v: f64) -> f64 {
    let v2 = v * v;
    let mut acc = 0.0;
    for &c in d {
        acc = acc * v2 + c;
    }
    acc * v.powi((n - 2 * (d.len() - 1)) as i32)
}

/// i-th derivative in v of Σ_r d_r v^{n-2r}.
fn sum_derivative(d: &[f64], n: usize, v: f64, order: usize) -> f64 {
    let mut acc = 0.0;
    for (r, &c) in d.iter().enumerate() {
        let p = n - 2 * r;
        if p < order {
            continue;
        }
        let mut f = 1.0;
        for j in 0..order {
            f *= (p - j) as f64;
        }
        acc += c * f * v.powi((p - order) as i32);
    }
    acc
}

/// P^m_k(x) by the finite sum.
pub fn assoc_p(k: f64, m: f64, x: f64) -> Result<f64> {
    assoc_p_deriv(k, m, x, 0)
}

/// d^order/dx^order P^m_k(x) for order <= 2, differentiating the finite sum analytically.
pub fn assoc_p_deriv(k: f64, m: f64, x: f64, order: usize) -> Result<f64> {
    let n = check_dplus(k, m)?;
    if !x.is_finite() {
        return Err(Error::NonFinite("assoc_p argument"));
    }
    if order > 2 {
        return Err(domain(format!("assoc_p_deriv supports order <= 2, got {order}")));
    }
    let d = sum_coefficients(n, m);
    let q = 1.0 + x * x;
    let sq = q.sqrt();
    let v = 2.0 * x / sq;
    // A(x) = 2^k Γ(m) (1+x²)^{-(k+1)/2}
    let a = ((k * LN_2) + ln_gamma_real(m)? - 0.5 * (k + 1.0) * (x * x).ln_1p()).exp();
    let s0 = sum_value(&d, n, v);
    if order == 0 {
        return Ok(a * s0);
    }
    let s1 = sum_derivative(&d, n, v, 1);
    let a1 = -(k + 1.0) * x / q * a;
    let v1 = 2.0 / (q * sq);
    if order == 1 {
        return Ok(a1 * s0 + a * s1 * v1);
    }
    let s2 = sum_derivative(&d, n, v, 2);
    let kp = k + 1.0;
    let a2 = a * (-kp * (1.0 - x * x) / (q * q) + (kp * x / q).powi(2));
    let v2 = -6.0 * x / (q * q * sq);
    Ok(a2 * s0 + 2.0 * a1 * s1 * v1 + a * (s2 * v1 * v1 + s1 * v2))
}

/// Real τ-profile f^m_k(τ) of the normalized D+ function, Y = e^{imφ} f.
pub fn dplus_profile(k: f64, m: f64, tau: f64) -> Result<f64> {
    let n = check_dplus(k, m)?;
    check_normalizable(k)?;
    if !tau.is_finite() {
        return Err(Error::NonFinite("tau"));
    }
    let d = sum_coefficients(n, m);
    let v = 2.0 * tau.tanh();
    let s = sum_value(&d, n, v);
    let ln_mag = 0.5 * ((2.0 * k + 1.0).ln() - (2.0 * PI * PI).ln() - ln_gamma_real(n as f64 + 1.0)?
        - ln_gamma_real(m + k + 1.0)?)
        + k * LN_2
        + ln_gamma_real(m)?
        - (k + 1.0) * ln_cosh(tau);
    Ok(ln_mag.exp() * s)
}

/// Normalized D+ function Y^m_k(τ, φ).
pub fn y_dplus(k: f64, m: f64, tau: f64, phi: f64) -> Result<Complex64> {
    let f = dplus_profile(k, m, tau)?;
    Ok(Complex64::from_polar(f, m * phi))
}

/// Normalized D- function Ỹ^m_k(τ, φ) = (-1)^{m+k+1} N e^{imφ} P^{-m}_k(sinh τ), m <= -(k+1).
pub fn y_dminus(k: f64, m: f64, tau: f64, phi: f64) -> Result<Complex64> {
    let spec = DiscreteSpec::dminus(k, m)?;
    let sign = if spec.steps() % 2 == 0 { 1.0 } else { -1.0 };
    let f = dplus_profile(k, -m, tau)?;
    Ok(Complex64::from_polar(sign * f, m * phi))
}

/// D+ function through the terminating hypergeometric forms.
///
/// For m-k odd:  (-1)^{(m-k-1)/2} √(...) e^{imφ} cosh^{-(k+1)}τ ₂F₁(½(m+k+1), ½(-m+k+1); ½; tanh²τ);
/// for m-k even: (-1)^{(m-k-2)/2} √(...) e^{imφ} cosh^{-(k+1)}τ tanh τ ₂F₁(½(m+k+2), ½(-m+k+2); 3/2; tanh²τ).
pub fn y_dplus_hypergeometric(k: f64, m: f64, tau: f64, phi: f64, opts: &EvalOptions) -> Result<Complex64> {
    let n = check_dplus(k, m)?;
    check_normalizable(k)?;
    let t = tau.tanh();
    let sech = (-ln_cosh(tau)).exp();
    let z = t * t;
    let w = sech * sech;
    let g = |x: f64| gamma_real(x);
    let (phase, norm, f) = if n % 2 == 0 {
        let phase = if (n / 2) % 2 == 0 { 1.0 } else { -1.0 };
        let norm = ((2.0 * k + 1.0) * g(0.5 * (m - k))? * g(0.5 * (m + k + 1.0))?
            / (4.0 * PI * PI * g(0.5 * (m - k + 1.0))? * g(0.5 * (m + k + 2.0))?))
        .sqrt();
        let p = Hyp2F1Params::real(0.5 * (m + k + 1.0), 0.5 * (-m + k + 1.0), 0.5, z);
        (phase, norm, gauss_2f1_at(p, w, opts)?)
    } else {
        let phase = if ((n - 1) / 2) % 2 == 0 { 1.0 } else { -1.0 };
        let norm = ((2.0 * k + 1.0) * g(0.5 * (m - k + 1.0))? * g(0.5 * (m + k + 2.0))?
            / (PI * PI * g(0.5 * (m - k))? * g(0.5 * (m + k + 1.0))?))
        .sqrt();
        let p = Hyp2F1Params::real(0.5 * (m + k + 2.0), 0.5 * (-m + k + 2.0), 1.5, z);
        (phase, norm * t, gauss_2f1_at(p, w, opts)?)
    };
    let radial = phase * norm * (-(k + 1.0) * ln_cosh(tau)).exp();
    Ok(Complex64::from_polar(1.0, m * phi) * f * radial)
}

/// Volume function p^m_k(a) = a^k Y^m_k(τ, φ), harmonic for the Laplace-Beltrami operator.
pub fn volume_function(k: f64, m: f64, a: f64, tau: f64, phi: f64) -> Result<Complex64> {
    if !(a.is_finite() && a > 0.0) {
        return Err(domain(format!("volume function requires a > 0, got {a}")));
    }
    Ok(y_dplus(k, m, tau, phi)? * a.powf(k))
}

/// The six recurrences satisfied by P^m_k.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Recurrence {
    /// (1+x²)P'' + 2xP' + [-k(k+1) + m²/(1+x²)]P = 0
    A1,
    /// (1+x²)P' = -√(1+x²)P^{m+1} + mxP
    A2,
    /// P^{m+2} - 2(m+1)x/√(1+x²) P^{m+1} + (m-k)(m+k+1)P^m = 0
    A3,
    /// (1+x²)P' = (m+k)(m-k-1)√(1+x²)P^{m-1} - mxP
    A4,
    /// 2k P^m_{k-1} = √(1+x²)P^{m+1}_k - 2(m-k)xP^m_k + √(1+x²)(m-k)(m-k-1)P^{m-1}_k
    A5,
    /// P^m_{k-1} - xP^m_k = (k-m+1)√(1+x²)P^{m-1}_k
    A6,
}

impl Recurrence {
    pub const ALL: [Recurrence; 6] =
        [Recurrence::A1, Recurrence::A2, Recurrence::A3, Recurrence::A4, Recurrence::A5, Recurrence::A6];

    /// Whether every P^m_k index with a nonzero coefficient is D+-valid.
    pub fn admissible(self, k: f64, m: f64) -> bool {
        if DiscreteSpec::dplus(k, m).is_err() {
            return false;
        }
        match self {
            Recurrence::A5 | Recurrence::A6 => k >= 0.5,
            _ => true,
        }
    }
}

/// Signed terms of a recurrence written as Σ terms = 0.
#[derive(Debug, Clone, PartialEq)]
pub struct RecurrenceCheck {
    pub terms: Vec<f64>,
}

impl RecurrenceCheck {
    pub fn absolute(&self) -> f64 {
        self.terms.iter().sum::<f64>().abs()
    }

    /// |LHS - RHS| / Σ|term|, or 0 when every term vanishes.
    pub fn relative(&self) -> f64 {
        let scale: f64 = self.terms.iter().map(|t| t.abs()).sum();
        if scale == 0.0 {
            0.0
        } else {
            self.absolute() / scale
        }
    }
}

/// P^m_k, or 0 when the coefficient multiplying it vanishes and the index is out of range.
fn p_or_zero(coeff: f64, k: f64, m: f64, x: f64) -> Result<f64> {
    if coeff == 0.0 {
        Ok(0.0)
    } else {
        Ok(coeff * assoc_p(k, m, x)?)
    }
}

pub fn recurrence_check(id: Recurrence, k: f64, m: f64, x: f64) -> Result<RecurrenceCheck> {
    check_dplus(k, m)?;
    if !id.admissible(k, m) {
        return Err(domain(format!("{id:?} needs P^m_(k-1), which requires k >= 1/2; got k = {k}")));
    }
    let q = 1.0 + x * x;
    let sq = q.sqrt();
    let p = assoc_p(k, m, x)?;
    let terms = match id {
        Recurrence::A1 => vec![
            q * assoc_p_deriv(k, m, x, 2)?,
            2.0 * x * assoc_p_deriv(k, m, x, 1)?,
            (-k * (k + 1.0) + m * m / q) * p,
        ],
        Recurrence::A2 => vec![q * assoc_p_deriv(k, m, x, 1)?, sq * assoc_p(k, m + 1.0, x)?, -m * x * p],
        Recurrence::A3 => vec![
            assoc_p(k, m + 2.0, x)?,
            -2.0 * (m + 1.0) * x / sq * assoc_p(k, m + 1.0, x)?,
            (m - k) * (m + k + 1.0) * p,
        ],
        Recurrence::A4 => vec![
            q * assoc_p_deriv(k, m, x, 1)?,
            -p_or_zero((m + k) * (m - k - 1.0) * sq, k, m - 1.0, x)?,
            m * x * p,
        ],
        Recurrence::A5 => vec![
            2.0 * k * assoc_p(k - 1.0, m, x)?,
            -sq * assoc_p(k, m + 1.0, x)?,
            2.0 * (m - k) * x * p,
            -p_or_zero(sq * (m - k) * (m - k - 1.0), k, m - 1.0, x)?,
        ],
        Recurrence::A6 => vec![
            assoc_p(k - 1.0, m, x)?,
            -x * p,
            -p_or_zero((k - m + 1.0) * sq, k, m - 1.0, x)?,
        ],
    };
    Ok(RecurrenceCheck { terms })
}

/// |LHS - RHS| of the chosen recurrence.
pub fn recurrence_residual(id: Recurrence, k: f64, m: f64, x: f64) -> Result<f64> {
    Ok(recurrence_check(id, k, m, x)?.absolute())
}
