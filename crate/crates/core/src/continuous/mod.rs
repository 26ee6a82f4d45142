//! Continuous series: the principal series k = -1/2 + iλ and the supplementary
//! series k = γ - 1/2 with 0 < γ < 1/2.
//!
//! Principal-series functions come in an even and an odd family,
//!
//! ```text
//! Ŷ^m_λ = ĉ_m |ĉ_{mλ}| e^{imφ} cosh^{-(1/2+iλ)}τ ₂F₁(½(m+½+iλ), ½(-m+½+iλ); ½; tanh²τ)
//! Ȳ^m_λ = c̄_m |c̄_{mλ}| e^{imφ} cosh^{-(1/2+iλ)}τ tanh τ ₂F₁(½(m+3/2+iλ), ½(-m+3/2+iλ); 3/2; tanh²τ)
//! ```
//!
//! and K+ alternates between them, so the ladder built on m = 0 (or m = 1/2)
//! yields two sequences Y₁ (starting even) and Y₂ (starting odd).

mod half;
mod principal;
mod supplementary;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::discrete::ln_cosh;
use crate::error::{domain, Result};
use crate::options::EvalOptions;

pub use half::{legendre_t, legendre_u, y_half, z_factor_half};
pub use principal::{
    asymptotic_amplitude, legendre_p1, legendre_p2, norm_even, norm_odd, phase_even, phase_odd, y_principal_negative,
    y_principal_raw, y_seq, z_factor, z_factor_ratio,
};
pub use supplementary::{supplementary_asymptotic, y_supplementary};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Parity {
    Even,
    Odd,
}

/// Which of the two ladder sequences.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Sequence {
    /// starts from the even vacuum
    One,
    /// starts from the odd vacuum
    Two,
}

impl Sequence {
    /// Parity of the member with weight m, where `steps` = ⌊|m|⌋.
    pub fn parity_at(self, steps: u32) -> Parity {
        match (self, steps % 2 == 0) {
            (Sequence::One, true) | (Sequence::Two, false) => Parity::Even,
            _ => Parity::Odd,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PrincipalFamily {
    Seq1,
    Seq2,
    EvenRaw,
    OddRaw,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PrincipalSpec {
    pub lambda: f64,
    pub m: f64,
    pub family: PrincipalFamily,
}

impl PrincipalSpec {
    pub fn new(lambda: f64, m: f64, family: PrincipalFamily) -> Result<Self> {
        let s = Self { lambda, m, family };
        s.validate()?;
        Ok(s)
    }

    pub fn validate(&self) -> Result<()> {
        check_lambda(self.lambda)?;
        check_weight(self.m)
    }

    /// k(k+1) at k = -1/2 + iλ.
    pub fn casimir_eigenvalue(&self) -> f64 {
        -(0.25 + self.lambda * self.lambda)
    }

    pub fn evaluate(&self, tau: f64, phi: f64, opts: &EvalOptions) -> Result<Complex64> {
        self.validate()?;
        let seq = match self.family {
            PrincipalFamily::EvenRaw => return y_principal_raw(Parity::Even, self.m, self.lambda, tau, phi, opts),
            PrincipalFamily::OddRaw => return y_principal_raw(Parity::Odd, self.m, self.lambda, tau, phi, opts),
            PrincipalFamily::Seq1 => Sequence::One,
            PrincipalFamily::Seq2 => Sequence::Two,
        };
        if self.m < 0.0 {
            y_principal_negative(seq, self.m, self.lambda, tau, phi, opts)
        } else if self.m.fract() == 0.0 {
            y_seq(seq, self.m as u32, self.lambda, tau, phi, opts)
        } else {
            y_half(seq, self.m as u32, self.lambda, tau, phi)
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SupplementarySpec {
    pub gamma: f64,
    pub m: i64,
    pub parity: Parity,
}

impl SupplementarySpec {
    pub fn new(gamma: f64, m: i64, parity: Parity) -> Result<Self> {
        let s = Self { gamma, m, parity };
        s.validate()?;
        Ok(s)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.gamma > 0.0 && self.gamma < 0.5) {
            return Err(domain(format!("supplementary series requires 0 < gamma < 1/2, got {}", self.gamma)));
        }
        Ok(())
    }

    /// k(k+1) at k = γ - 1/2.
    pub fn casimir_eigenvalue(&self) -> f64 {
        self.gamma * self.gamma - 0.25
    }
}

fn check_lambda(lambda: f64) -> Result<()> {
    if !(lambda.is_finite() && lambda > 0.0) {
        return Err(domain(format!("principal series requires lambda > 0, got {lambda}")));
    }
    Ok(())
}

fn check_weight(m: f64) -> Result<()> {
    if !m.is_finite() || (2.0 * m).fract() != 0.0 {
        return Err(domain(format!("m must be an integer or half-integer, got {m}")));
    }
    Ok(())
}

fn nonneg_integer(m: f64) -> Result<u32> {
    if !(m.is_finite() && m >= 0.0 && m.fract() == 0.0) {
        return Err(domain(format!("m must be a nonnegative integer, got {m}")));
    }
    Ok(m as u32)
}

/// cosh^{-(1/2 + iλ)} τ
fn cosh_factor(tau: f64, lambda: f64) -> Complex64 {
    let lc = ln_cosh(tau);
    Complex64::from_polar((-0.5 * lc).exp(), -lambda * lc)
}

fn sign(n: u32) -> f64 {
    if n % 2 == 0 {
        1.0
    } else {
        -1.0
    }
}
