//! One type covering every implemented family, so that operators, quadrature,
//! verification and the command line can treat them uniformly.

use std::fmt;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::continuous::{y_supplementary, Parity, PrincipalFamily, PrincipalSpec, SupplementarySpec};
use crate::discrete::{DiscreteSeries, DiscreteSpec};
use crate::error::Result;
use crate::newclass::{y_newclass, NewClassSpec, WeightSign};
use crate::operators::SurfaceFunction;
use crate::options::EvalOptions;

/// A point (τ, φ) of the unit hyperboloid in biharmonic coordinates,
/// x = (cosh τ cos φ, cosh τ sin φ, sinh τ).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct HyperPoint {
    pub tau: f64,
    pub phi: f64,
}

impl HyperPoint {
    pub fn new(tau: f64, phi: f64) -> Self {
        Self { tau, phi }
    }

    pub fn cartesian(&self, a: f64) -> [f64; 3] {
        let c = self.tau.cosh();
        [a * c * self.phi.cos(), a * c * self.phi.sin(), a * self.tau.sinh()]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum SeriesSpec {
    Discrete(DiscreteSpec),
    Principal(PrincipalSpec),
    Supplementary(SupplementarySpec),
    NewClass(NewClassSpec),
}

impl From<DiscreteSpec> for SeriesSpec {
    fn from(s: DiscreteSpec) -> Self {
        Self::Discrete(s)
    }
}

impl From<PrincipalSpec> for SeriesSpec {
    fn from(s: PrincipalSpec) -> Self {
        Self::Principal(s)
    }
}

impl From<SupplementarySpec> for SeriesSpec {
    fn from(s: SupplementarySpec) -> Self {
        Self::Supplementary(s)
    }
}

impl From<NewClassSpec> for SeriesSpec {
    fn from(s: NewClassSpec) -> Self {
        Self::NewClass(s)
    }
}

impl fmt::Display for SeriesSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SeriesSpec::Discrete(s) => {
                let name = match s.series {
                    DiscreteSeries::DPlus => "D+",
                    DiscreteSeries::DMinus => "D-",
                };
                write!(f, "{name} k={} m={}", s.k, s.m)
            }
            SeriesSpec::Principal(s) => {
                let name = match s.family {
                    PrincipalFamily::Seq1 => "principal seq1",
                    PrincipalFamily::Seq2 => "principal seq2",
                    PrincipalFamily::EvenRaw => "principal even",
                    PrincipalFamily::OddRaw => "principal odd",
                };
                write!(f, "{name} lambda={} m={}", s.lambda, s.m)
            }
            SeriesSpec::Supplementary(s) => {
                let p = match s.parity {
                    Parity::Even => "even",
                    Parity::Odd => "odd",
                };
                write!(f, "supplementary {p} gamma={} m={}", s.gamma, s.m)
            }
            SeriesSpec::NewClass(s) => {
                let sign = match s.sign {
                    WeightSign::Plus => "+",
                    WeightSign::Minus => "-",
                };
                write!(f, "new-class k={} sign={sign} alpha={} beta={}", s.k, s.alpha, s.beta)
            }
        }
    }
}

impl SeriesSpec {
    pub fn validate(&self) -> Result<()> {
        match self {
            SeriesSpec::Discrete(s) => s.validate(),
            SeriesSpec::Principal(s) => s.validate(),
            SeriesSpec::Supplementary(s) => s.validate(),
            SeriesSpec::NewClass(s) => s.validate(),
        }
    }

    pub fn evaluate(&self, tau: f64, phi: f64, opts: &EvalOptions) -> Result<Complex64> {
        match self {
            SeriesSpec::Discrete(s) => s.evaluate(tau, phi),
            SeriesSpec::Principal(s) => s.evaluate(tau, phi, opts),
            SeriesSpec::Supplementary(s) => y_supplementary(s, tau, phi, opts),
            SeriesSpec::NewClass(s) => y_newclass(s, tau, phi),
        }
    }

    pub fn evaluate_at(&self, p: HyperPoint, opts: &EvalOptions) -> Result<Complex64> {
        self.evaluate(p.tau, p.phi, opts)
    }

    /// Eigenvalue m of K3.
    pub fn weight(&self) -> f64 {
        match self {
            SeriesSpec::Discrete(s) => s.m,
            SeriesSpec::Principal(s) => s.m,
            SeriesSpec::Supplementary(s) => s.m as f64,
            SeriesSpec::NewClass(s) => s.weight(),
        }
    }

    /// Eigenvalue k(k+1) of C2.
    pub fn casimir_eigenvalue(&self) -> f64 {
        match self {
            SeriesSpec::Discrete(s) => s.k * (s.k + 1.0),
            SeriesSpec::Principal(s) => s.casimir_eigenvalue(),
            SeriesSpec::Supplementary(s) => s.casimir_eigenvalue(),
            SeriesSpec::NewClass(s) => s.casimir_eigenvalue(),
        }
    }

    /// p in |F| ~ cosh^{-p}τ for large |τ|; negative for growing functions.
    pub fn decay(&self) -> f64 {
        match self {
            SeriesSpec::Discrete(s) => s.k + 1.0,
            SeriesSpec::Principal(_) => 0.5,
            SeriesSpec::Supplementary(s) => 0.5 - s.gamma,
            SeriesSpec::NewClass(s) => -(s.k as f64),
        }
    }

    /// The function as a [`SurfaceFunction`] with declared weight and decay.
    pub fn surface(&self, opts: EvalOptions) -> SurfaceFunction {
        let s = *self;
        SurfaceFunction::new(move |t, p| s.evaluate(t, p, &opts)).with_weight(self.weight()).with_decay(self.decay())
    }

    /// The member of weight m+1 and the coefficient c with K+ F_m = c F_{m+1}.
    ///
    /// `None` where the ladder is not defined on this family or the step leaves it.
    pub fn raised(&self) -> Option<(SeriesSpec, f64)> {
        match *self {
            SeriesSpec::Discrete(s) => {
                let c = ((s.m - s.k) * (s.m + s.k + 1.0)).sqrt();
                let next = DiscreteSpec::new(s.k, s.m + 1.0, s.series).ok()?;
                Some((next.into(), c))
            }
            SeriesSpec::Principal(s) => {
                if !matches!(s.family, PrincipalFamily::Seq1 | PrincipalFamily::Seq2) || s.m == -0.5 {
                    return None;
                }
                let c = ((s.m + 0.5).powi(2) + s.lambda * s.lambda).sqrt();
                Some((PrincipalSpec { m: s.m + 1.0, ..s }.into(), c))
            }
            _ => None,
        }
    }

    /// The member of weight m-1 and the coefficient c with K- F_m = c F_{m-1}.
    pub fn lowered(&self) -> Option<(SeriesSpec, f64)> {
        match *self {
            SeriesSpec::Discrete(s) => {
                let c = ((s.m + s.k) * (s.m - s.k - 1.0)).sqrt();
                let next = DiscreteSpec::new(s.k, s.m - 1.0, s.series).ok()?;
                Some((next.into(), c))
            }
            SeriesSpec::Principal(s) => {
                if !matches!(s.family, PrincipalFamily::Seq1 | PrincipalFamily::Seq2) || s.m == 0.5 {
                    return None;
                }
                let c = ((s.m - 0.5).powi(2) + s.lambda * s.lambda).sqrt();
                Some((PrincipalSpec { m: s.m - 1.0, ..s }.into(), c))
            }
            _ => None,
        }
    }
}
