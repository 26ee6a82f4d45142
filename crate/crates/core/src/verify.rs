//! The relation catalog: every identity the library relies on, as a named check
//! producing a [`VerifyReport`].
//!
//! Relation ids:
//!
//! | id | parameters |
//! |----|------------|
//! | `eigen-C2`, `eigen-K3` | spec, point |
//! | `ladder-raise`, `ladder-lower` | spec, point |
//! | `ladder-crossing` | spec (principal sequence member at m = 1/2), point |
//! | `annihilate-lowest`, `annihilate-highest` | k, point |
//! | `recurrence-A1` .. `recurrence-A6` | k, m, x |
//! | `orthonormality` | spec, other |
//! | `lowest-weight-norm` | k |
//! | `route-dplus-hypergeometric` | k, m, point |
//! | `route-principal-raw` | spec, point |
//! | `route-legendre` | spec, point |
//! | `route-ladder` | spec, steps, point |
//! | `half-vacuum-even`, `half-vacuum-odd` | lambda, point |
//! | `tu-identity-cos`, `tu-identity-sin` | lambda, point |
//! | `norm-identity`, `asymptotic-principal` | spec |
//! | `asymptotic-supplementary`, `divergence` | spec |
//! | `newclass-ode` | spec, point |
//! | `gudermannian` | point |
//! | `newclass-joining-lower`, `newclass-joining-raise` | none |
//! | `gamma-half-imag`, `gamma-imag` | x |
//! | `hyp2f1-quadratic`, `hyp2f1-derivative` | a, x (as z), steps (derivative order) |
//! | `hyp2f1-continuation`, `hyp2f1-pfaff` | a, b, c, x (as z) |
//! | `z-factor` | m, lambda |

use std::f64::consts::{FRAC_PI_2, PI};
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::continuous::{
    asymptotic_amplitude, legendre_p1, legendre_p2, legendre_t, legendre_u, norm_even, norm_odd, supplementary_asymptotic,
    y_principal_raw, y_seq, y_supplementary, z_factor, z_factor_ratio, Parity, PrincipalFamily, PrincipalSpec, Sequence,
    SupplementarySpec,
};
use crate::discrete::{
    lowest_weight_norm, recurrence_check, y_dminus, y_dplus, y_dplus_hypergeometric, DiscreteSpec, Recurrence,
};
use crate::error::{domain, Error, Result};
use crate::newclass::{arcsin_tanh, ode_residual_newclass, NewClassSpec, WeightSign};
use crate::numerics::{
    gamma_magnitude_sq, gauss_2f1_continued, gauss_2f1_deriv, gauss_2f1_pfaff, gauss_2f1_series, GammaArg, Hyp2F1Params,
};
use crate::operators::{apply_casimir, apply_k3, apply_kminus, apply_kplus, inner_product, truncated_norm};
use crate::options::EvalOptions;
use crate::series::{HyperPoint, SeriesSpec};

/// Outcome of one relation check.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub name: String,
    pub expected: Complex64,
    pub observed: Complex64,
    pub residual: f64,
    pub tolerance: f64,
    pub pass: bool,
}

impl VerifyReport {
    pub fn new(name: impl Into<String>, expected: Complex64, observed: Complex64, residual: f64, tolerance: f64) -> Self {
        Self { name: name.into(), expected, observed, residual, tolerance, pass: residual <= tolerance }
    }

    /// A failed report for a check that could not be evaluated.
    pub fn failed(name: impl Into<String>, err: &Error, tolerance: f64) -> Self {
        let nan = Complex64::new(f64::NAN, f64::NAN);
        Self { name: format!("{} ({err})", name.into()), expected: nan, observed: nan, residual: f64::NAN, tolerance, pass: false }
    }
}

/// Pass thresholds, one per group of relations.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tolerances {
    /// |C2 F - k(k+1) F| / max(1, |F|)
    pub eigen: f64,
    /// |K3 F - m F| / max(1, |F|), with the φ-derivative taken by differences
    pub k3: f64,
    pub ladder: f64,
    pub annihilate: f64,
    pub recurrence: f64,
    /// two closed-form routes to the same function
    pub route: f64,
    /// closed form against a nested finite-difference ladder
    pub route_fd: f64,
    pub closed_form: f64,
    pub identity: f64,
    pub ode: f64,
    pub joining: f64,
    /// largest admissible ratio of the norm increment on [5, 10] to that on [10, 20]
    pub divergence: f64,
    pub orthonormality: f64,
    pub norm_constant: f64,
    pub asymptotic_principal: f64,
    pub asymptotic_supplementary: f64,
    pub hyp2f1: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            eigen: 1e-4,
            k3: 1e-8,
            ladder: 1e-4,
            annihilate: 1e-6,
            recurrence: 1e-10,
            route: 1e-9,
            route_fd: 1e-4,
            closed_form: 1e-10,
            identity: 1e-12,
            ode: 1e-5,
            joining: 1e-4,
            divergence: 1.0,
            orthonormality: 1e-7,
            norm_constant: 1e-14,
            asymptotic_principal: 0.01,
            asymptotic_supplementary: 0.02,
            hyp2f1: 1e-10,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    All,
    Discrete,
    Continuous,
    NewClass,
    Numerics,
}

impl Suite {
    pub const ALL: [Suite; 5] = [Suite::All, Suite::Discrete, Suite::Continuous, Suite::NewClass, Suite::Numerics];

    pub fn name(self) -> &'static str {
        match self {
            Suite::All => "all",
            Suite::Discrete => "discrete",
            Suite::Continuous => "continuous",
            Suite::NewClass => "newclass",
            Suite::Numerics => "numerics",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| domain(format!("unknown suite `{s}`; expected all, discrete, continuous, newclass or numerics")))
    }
}

/// One check with its parameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Relation {
    EigenCasimir { spec: SeriesSpec, at: HyperPoint },
    EigenK3 { spec: SeriesSpec, at: HyperPoint },
    LadderRaise { spec: SeriesSpec, at: HyperPoint },
    LadderLower { spec: SeriesSpec, at: HyperPoint },
    /// K- Y₁^{1/2} = -λ Y₂^{-1/2} and K- Y₂^{1/2} = λ Y₁^{-1/2}
    LadderCrossing { spec: PrincipalSpec, at: HyperPoint },
    AnnihilateLowest { k: f64, at: HyperPoint },
    AnnihilateHighest { k: f64, at: HyperPoint },
    Recurrence { id: Recurrence, k: f64, m: f64, x: f64 },
    Orthonormality { a: DiscreteSpec, b: DiscreteSpec },
    LowestWeightNorm { k: u32 },
    RouteDiscrete { k: f64, m: f64, at: HyperPoint },
    RoutePrincipalRaw { spec: PrincipalSpec, at: HyperPoint },
    RouteLegendre { spec: PrincipalSpec, at: HyperPoint },
    RouteLadder { spec: SeriesSpec, steps: u32, at: HyperPoint },
    HalfVacuum { parity: Parity, lambda: f64, at: HyperPoint },
    TuIdentity { parity: Parity, lambda: f64, tau: f64 },
    NormIdentity { parity: Parity, m: f64, lambda: f64 },
    AsymptoticPrincipal { spec: PrincipalSpec },
    AsymptoticSupplementary { spec: SupplementarySpec },
    NewClassOde { spec: NewClassSpec, tau: f64 },
    Gudermannian { tau: f64 },
    Joining { raise: bool },
    Divergence { spec: SeriesSpec },
    GammaHalfImag { x: f64 },
    GammaImag { x: f64 },
    Hyp2f1Quadratic { alpha: Complex64, z: f64 },
    Hyp2f1Continuation { a: Complex64, b: Complex64, c: Complex64, z: f64 },
    Hyp2f1Pfaff { a: Complex64, b: Complex64, c: Complex64, z: f64 },
    Hyp2f1Derivative { a: Complex64, n: u32, z: f64 },
    ZFactor { m: u32, lambda: f64 },
}

/// Loose parameters for [`verify_relation`]; each relation reads the fields it needs.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct RelationParams {
    pub spec: Option<SeriesSpec>,
    pub other: Option<SeriesSpec>,
    pub point: Option<HyperPoint>,
    pub k: Option<f64>,
    pub m: Option<f64>,
    pub x: Option<f64>,
    pub lambda: Option<f64>,
    pub steps: Option<u32>,
    pub a: Option<Complex64>,
    pub b: Option<Complex64>,
    pub c: Option<Complex64>,
}

const DEFAULT_POINT: HyperPoint = HyperPoint { tau: 0.5, phi: 0.3 };

fn need<T>(v: Option<T>, what: &str, id: &str) -> Result<T> {
    v.ok_or_else(|| domain(format!("relation `{id}` needs parameter `{what}`")))
}

fn principal(spec: SeriesSpec, id: &str) -> Result<PrincipalSpec> {
    match spec {
        SeriesSpec::Principal(s) => Ok(s),
        _ => Err(domain(format!("relation `{id}` needs a principal-series spec"))),
    }
}

fn discrete(spec: SeriesSpec, id: &str) -> Result<DiscreteSpec> {
    match spec {
        SeriesSpec::Discrete(s) => Ok(s),
        _ => Err(domain(format!("relation `{id}` needs a discrete-series spec"))),
    }
}

fn parity_of(spec: &PrincipalSpec) -> Parity {
    let l = spec.m.abs().floor() as u32;
    match spec.family {
        PrincipalFamily::EvenRaw => Parity::Even,
        PrincipalFamily::OddRaw => Parity::Odd,
        PrincipalFamily::Seq1 => Sequence::One.parity_at(l),
        PrincipalFamily::Seq2 => Sequence::Two.parity_at(l),
    }
}

impl Relation {
    /// Every id accepted by [`Relation::from_id`].
    pub const IDS: [&'static str; 38] = [
        "eigen-C2",
        "eigen-K3",
        "ladder-raise",
        "ladder-lower",
        "ladder-crossing",
        "annihilate-lowest",
        "annihilate-highest",
        "recurrence-A1",
        "recurrence-A2",
        "recurrence-A3",
        "recurrence-A4",
        "recurrence-A5",
        "recurrence-A6",
        "orthonormality",
        "lowest-weight-norm",
        "route-dplus-hypergeometric",
        "route-principal-raw",
        "route-legendre",
        "route-ladder",
        "half-vacuum-even",
        "half-vacuum-odd",
        "tu-identity-cos",
        "tu-identity-sin",
        "norm-identity",
        "asymptotic-principal",
        "asymptotic-supplementary",
        "newclass-ode",
        "gudermannian",
        "newclass-joining-lower",
        "newclass-joining-raise",
        "divergence",
        "gamma-half-imag",
        "gamma-imag",
        "hyp2f1-quadratic",
        "hyp2f1-continuation",
        "hyp2f1-pfaff",
        "hyp2f1-derivative",
        "z-factor",
    ];

    pub fn from_id(id: &str, p: &RelationParams) -> Result<Self> {
        let at = p.point.unwrap_or(DEFAULT_POINT);
        let spec = || need(p.spec, "spec", id);
        let k = || need(p.k, "k", id);
        let lambda = || need(p.lambda, "lambda", id);
        let x = || need(p.x, "x", id);
        let a = || need(p.a, "a", id);
        Ok(match id {
            "eigen-C2" => Relation::EigenCasimir { spec: spec()?, at },
            "eigen-K3" => Relation::EigenK3 { spec: spec()?, at },
            "ladder-raise" => Relation::LadderRaise { spec: spec()?, at },
            "ladder-lower" => Relation::LadderLower { spec: spec()?, at },
            "ladder-crossing" => Relation::LadderCrossing { spec: principal(spec()?, id)?, at },
            "annihilate-lowest" => Relation::AnnihilateLowest { k: k()?, at },
            "annihilate-highest" => Relation::AnnihilateHighest { k: k()?, at },
            "orthonormality" => Relation::Orthonormality {
                a: discrete(spec()?, id)?,
                b: discrete(need(p.other, "other", id)?, id)?,
            },
            "lowest-weight-norm" => {
                let k = k()?;
                if !(k >= 0.0 && k.fract() == 0.0) {
                    return Err(domain(format!("`{id}` takes a nonnegative integer k, got {k}")));
                }
                Relation::LowestWeightNorm { k: k as u32 }
            }
            "route-dplus-hypergeometric" => Relation::RouteDiscrete { k: k()?, m: need(p.m, "m", id)?, at },
            "route-principal-raw" => Relation::RoutePrincipalRaw { spec: principal(spec()?, id)?, at },
            "route-legendre" => Relation::RouteLegendre { spec: principal(spec()?, id)?, at },
            "route-ladder" => Relation::RouteLadder { spec: spec()?, steps: need(p.steps, "steps", id)?, at },
            "half-vacuum-even" => Relation::HalfVacuum { parity: Parity::Even, lambda: lambda()?, at },
            "half-vacuum-odd" => Relation::HalfVacuum { parity: Parity::Odd, lambda: lambda()?, at },
            "tu-identity-cos" => Relation::TuIdentity { parity: Parity::Even, lambda: lambda()?, tau: at.tau },
            "tu-identity-sin" => Relation::TuIdentity { parity: Parity::Odd, lambda: lambda()?, tau: at.tau },
            "norm-identity" => {
                let s = principal(spec()?, id)?;
                Relation::NormIdentity { parity: parity_of(&s), m: s.m, lambda: s.lambda }
            }
            "asymptotic-principal" => Relation::AsymptoticPrincipal { spec: principal(spec()?, id)? },
            "asymptotic-supplementary" => match spec()? {
                SeriesSpec::Supplementary(s) => Relation::AsymptoticSupplementary { spec: s },
                _ => return Err(domain(format!("relation `{id}` needs a supplementary-series spec"))),
            },
            "newclass-ode" => match spec()? {
                SeriesSpec::NewClass(s) => Relation::NewClassOde { spec: s, tau: at.tau },
                _ => return Err(domain(format!("relation `{id}` needs a new-class spec"))),
            },
            "gudermannian" => Relation::Gudermannian { tau: at.tau },
            "newclass-joining-lower" => Relation::Joining { raise: false },
            "newclass-joining-raise" => Relation::Joining { raise: true },
            "divergence" => Relation::Divergence { spec: spec()? },
            "gamma-half-imag" => Relation::GammaHalfImag { x: x()? },
            "gamma-imag" => Relation::GammaImag { x: x()? },
            "hyp2f1-quadratic" => Relation::Hyp2f1Quadratic { alpha: a()?, z: x()? },
            "hyp2f1-continuation" => Relation::Hyp2f1Continuation {
                a: a()?,
                b: need(p.b, "b", id)?,
                c: need(p.c, "c", id)?,
                z: x()?,
            },
            "hyp2f1-pfaff" => Relation::Hyp2f1Pfaff { a: a()?, b: need(p.b, "b", id)?, c: need(p.c, "c", id)?, z: x()? },
            "hyp2f1-derivative" => Relation::Hyp2f1Derivative { a: a()?, n: need(p.steps, "steps", id)?, z: x()? },
            "z-factor" => {
                let m = need(p.m, "m", id)?;
                if !(m >= 0.0 && m.fract() == 0.0) {
                    return Err(domain(format!("`{id}` takes a nonnegative integer m, got {m}")));
                }
                Relation::ZFactor { m: m as u32, lambda: lambda()? }
            }
            _ => {
                if let Some(r) = id.strip_prefix("recurrence-") {
                    let rid = match r {
                        "A1" => Recurrence::A1,
                        "A2" => Recurrence::A2,
                        "A3" => Recurrence::A3,
                        "A4" => Recurrence::A4,
                        "A5" => Recurrence::A5,
                        "A6" => Recurrence::A6,
                        _ => return Err(Error::UnknownRelation(id.to_string())),
                    };
                    Relation::Recurrence { id: rid, k: k()?, m: need(p.m, "m", id)?, x: x()? }
                } else {
                    return Err(Error::UnknownRelation(id.to_string()));
                }
            }
        })
    }

    pub fn id(&self) -> &'static str {
        match self {
            Relation::EigenCasimir { .. } => "eigen-C2",
            Relation::EigenK3 { .. } => "eigen-K3",
            Relation::LadderRaise { .. } => "ladder-raise",
            Relation::LadderLower { .. } => "ladder-lower",
            Relation::LadderCrossing { .. } => "ladder-crossing",
            Relation::AnnihilateLowest { .. } => "annihilate-lowest",
            Relation::AnnihilateHighest { .. } => "annihilate-highest",
            Relation::Recurrence { id, .. } => match id {
                Recurrence::A1 => "recurrence-A1",
                Recurrence::A2 => "recurrence-A2",
                Recurrence::A3 => "recurrence-A3",
                Recurrence::A4 => "recurrence-A4",
                Recurrence::A5 => "recurrence-A5",
                Recurrence::A6 => "recurrence-A6",
            },
            Relation::Orthonormality { .. } => "orthonormality",
            Relation::LowestWeightNorm { .. } => "lowest-weight-norm",
            Relation::RouteDiscrete { .. } => "route-dplus-hypergeometric",
            Relation::RoutePrincipalRaw { .. } => "route-principal-raw",
            Relation::RouteLegendre { .. } => "route-legendre",
            Relation::RouteLadder { .. } => "route-ladder",
            Relation::HalfVacuum { parity: Parity::Even, .. } => "half-vacuum-even",
            Relation::HalfVacuum { parity: Parity::Odd, .. } => "half-vacuum-odd",
            Relation::TuIdentity { parity: Parity::Even, .. } => "tu-identity-cos",
            Relation::TuIdentity { parity: Parity::Odd, .. } => "tu-identity-sin",
            Relation::NormIdentity { .. } => "norm-identity",
            Relation::AsymptoticPrincipal { .. } => "asymptotic-principal",
            Relation::AsymptoticSupplementary { .. } => "asymptotic-supplementary",
            Relation::NewClassOde { .. } => "newclass-ode",
            Relation::Gudermannian { .. } => "gudermannian",
            Relation::Joining { raise: false } => "newclass-joining-lower",
            Relation::Joining { raise: true } => "newclass-joining-raise",
            Relation::Divergence { .. } => "divergence",
            Relation::GammaHalfImag { .. } => "gamma-half-imag",
            Relation::GammaImag { .. } => "gamma-imag",
            Relation::Hyp2f1Quadratic { .. } => "hyp2f1-quadratic",
            Relation::Hyp2f1Continuation { .. } => "hyp2f1-continuation",
            Relation::Hyp2f1Pfaff { .. } => "hyp2f1-pfaff",
            Relation::Hyp2f1Derivative { .. } => "hyp2f1-derivative",
            Relation::ZFactor { .. } => "z-factor",
        }
    }

    /// The id followed by the parameters, used as the report name.
    pub fn label(&self) -> String {
        let id = self.id();
        let pt = |p: &HyperPoint| format!("tau={} phi={}", p.tau, p.phi);
        match self {
            Relation::EigenCasimir { spec, at }
            | Relation::EigenK3 { spec, at }
            | Relation::LadderRaise { spec, at }
            | Relation::LadderLower { spec, at } => format!("{id} [{spec}] {}", pt(at)),
            Relation::AnnihilateLowest { k, at } | Relation::AnnihilateHighest { k, at } => {
                format!("{id} [k={k}] {}", pt(at))
            }
            Relation::Recurrence { k, m, x, .. } => format!("{id} [k={k} m={m}] x={x}"),
            Relation::Orthonormality { a, b } => format!("{id} [k={} m={}] [k={} m={}]", a.k, a.m, b.k, b.m),
            Relation::LowestWeightNorm { k } => format!("{id} [k={k}]"),
            Relation::RouteDiscrete { k, m, at } => format!("{id} [k={k} m={m}] {}", pt(at)),
            Relation::RoutePrincipalRaw { spec, at }
            | Relation::RouteLegendre { spec, at }
            | Relation::LadderCrossing { spec, at } => {
                format!("{id} [{}] {}", SeriesSpec::from(*spec), pt(at))
            }
            Relation::RouteLadder { spec, steps, at } => format!("{id} [{spec}] steps={steps} {}", pt(at)),
            Relation::HalfVacuum { lambda, at, .. } => format!("{id} [lambda={lambda}] {}", pt(at)),
            Relation::TuIdentity { lambda, tau, .. } => format!("{id} [lambda={lambda}] tau={tau}"),
            Relation::NormIdentity { parity, m, lambda } => format!("{id} [{parity:?} m={m} lambda={lambda}]"),
            Relation::AsymptoticPrincipal { spec } => format!("{id} [{}]", SeriesSpec::from(*spec)),
            Relation::AsymptoticSupplementary { spec } => format!("{id} [{}]", SeriesSpec::from(*spec)),
            Relation::NewClassOde { spec, tau } => format!("{id} [{}] tau={tau}", SeriesSpec::from(*spec)),
            Relation::Gudermannian { tau } => format!("{id} tau={tau}"),
            Relation::Joining { .. } => format!("{id} [k=0]"),
            Relation::Divergence { spec } => format!("{id} [{spec}]"),
            Relation::GammaHalfImag { x } | Relation::GammaImag { x } => format!("{id} x={x}"),
            Relation::Hyp2f1Quadratic { alpha, z } => format!("{id} alpha={alpha} z={z}"),
            Relation::Hyp2f1Continuation { a, b, c, z } | Relation::Hyp2f1Pfaff { a, b, c, z } => {
                format!("{id} a={a} b={b} c={c} z={z}")
            }
            Relation::Hyp2f1Derivative { a, n, z } => format!("{id} a={a} n={n} z={z}"),
            Relation::ZFactor { m, lambda } => format!("{id} [m={m} lambda={lambda}]"),
        }
    }

    pub fn tolerance(&self, tol: &Tolerances) -> f64 {
        match self {
            Relation::EigenCasimir { .. } => tol.eigen,
            Relation::EigenK3 { .. } => tol.k3,
            Relation::LadderRaise { .. } | Relation::LadderLower { .. } | Relation::LadderCrossing { .. } => tol.ladder,
            Relation::AnnihilateLowest { .. } | Relation::AnnihilateHighest { .. } => tol.annihilate,
            Relation::Recurrence { .. } => tol.recurrence,
            Relation::Orthonormality { .. } => tol.orthonormality,
            Relation::LowestWeightNorm { .. } => tol.norm_constant,
            Relation::RouteDiscrete { .. } | Relation::RoutePrincipalRaw { .. } | Relation::RouteLegendre { .. } => {
                tol.route
            }
            Relation::RouteLadder { .. } => tol.route_fd,
            Relation::HalfVacuum { .. } => tol.closed_form,
            Relation::TuIdentity { .. }
            | Relation::NormIdentity { .. }
            | Relation::Gudermannian { .. }
            | Relation::GammaHalfImag { .. }
            | Relation::GammaImag { .. }
            | Relation::ZFactor { .. } => tol.identity,
            Relation::AsymptoticPrincipal { .. } => tol.asymptotic_principal,
            Relation::AsymptoticSupplementary { .. } => tol.asymptotic_supplementary,
            Relation::NewClassOde { .. } => tol.ode,
            Relation::Joining { .. } => tol.joining,
            Relation::Divergence { .. } => tol.divergence,
            Relation::Hyp2f1Quadratic { .. }
            | Relation::Hyp2f1Continuation { .. }
            | Relation::Hyp2f1Pfaff { .. }
            | Relation::Hyp2f1Derivative { .. } => tol.hyp2f1,
        }
    }

    /// Runs the check; evaluation failures come back as failed reports.
    pub fn check(&self, opts: &EvalOptions, tol: &Tolerances) -> VerifyReport {
        let t = self.tolerance(tol);
        match self.evaluate(opts) {
            Ok((expected, observed, residual)) => VerifyReport::new(self.label(), expected, observed, residual, t),
            Err(e) => VerifyReport::failed(self.label(), &e, t),
        }
    }

    /// (expected, observed, residual)
    fn evaluate(&self, opts: &EvalOptions) -> Result<(Complex64, Complex64, f64)> {
        opts.validate()?;
        match *self {
            Relation::EigenCasimir { spec, at } => {
                let f = spec.surface(*opts);
                let v = f.eval(at.tau, at.phi)?;
                let c = apply_casimir(&f, at.tau, at.phi, opts)?;
                let e = v * spec.casimir_eigenvalue();
                Ok((e, c, (c - e).norm() / v.norm().max(1.0)))
            }
            Relation::EigenK3 { spec, at } => {
                let f = spec.surface(*opts).without_weight();
                let v = f.eval(at.tau, at.phi)?;
                let k = apply_k3(&f, at.tau, at.phi, &opts.with_fd_step(0.1 * opts.fd_step))?;
                let e = v * spec.weight();
                Ok((e, k, (k - e).norm() / v.norm().max(1.0)))
            }
            Relation::LadderRaise { spec, at } => ladder(spec, at, true, opts),
            Relation::LadderLower { spec, at } => ladder(spec, at, false, opts),
            Relation::LadderCrossing { spec, at } => {
                let (other, c) = match spec.family {
                    PrincipalFamily::Seq1 => (PrincipalFamily::Seq2, -spec.lambda),
                    PrincipalFamily::Seq2 => (PrincipalFamily::Seq1, spec.lambda),
                    _ => return Err(domain("ladder-crossing needs seq1 or seq2")),
                };
                if spec.m != 0.5 {
                    return Err(domain(format!("ladder-crossing starts at m = 1/2, got {}", spec.m)));
                }
                let next: SeriesSpec = PrincipalSpec::new(spec.lambda, -0.5, other)?.into();
                let f = SeriesSpec::from(spec).surface(*opts);
                let lhs = apply_kminus(&f, at.tau, at.phi, opts)?;
                let rhs = next.evaluate(at.tau, at.phi, opts)? * c;
                let scale = rhs.norm().max(f.eval(at.tau, at.phi)?.norm());
                Ok((rhs, lhs, (lhs - rhs).norm() / scale))
            }
            Relation::AnnihilateLowest { k, at } => {
                let s: SeriesSpec = DiscreteSpec::dplus(k, k + 1.0)?.into();
                let v = apply_kminus(&s.surface(*opts), at.tau, at.phi, opts)?;
                Ok((Complex64::new(0.0, 0.0), v, v.norm()))
            }
            Relation::AnnihilateHighest { k, at } => {
                let s: SeriesSpec = DiscreteSpec::dminus(k, -(k + 1.0))?.into();
                let v = apply_kplus(&s.surface(*opts), at.tau, at.phi, opts)?;
                Ok((Complex64::new(0.0, 0.0), v, v.norm()))
            }
            Relation::Recurrence { id, k, m, x } => {
                let c = recurrence_check(id, k, m, x)?;
                let sum: f64 = c.terms.iter().sum();
                Ok((Complex64::new(0.0, 0.0), sum.into(), c.relative()))
            }
            Relation::Orthonormality { a, b } => {
                let fa = SeriesSpec::from(a).surface(*opts);
                let fb = SeriesSpec::from(b).surface(*opts);
                let v = inner_product(&fa, &fb, opts)?;
                let e = if a == b { 1.0 } else { 0.0 };
                Ok((e.into(), v, (v - e).norm()))
            }
            Relation::LowestWeightNorm { k } => {
                // (2k)!!/(2k-1)!! from exact integer products
                let (mut even, mut odd) = (1u128, 1u128);
                for j in 1..=k as u128 {
                    even *= 2 * j;
                    odd *= 2 * j - 1;
                }
                let e = (even as f64 / odd as f64).sqrt() / (2f64.sqrt() * PI);
                let v = lowest_weight_norm(k as f64)?;
                Ok((e.into(), v.into(), rel(v.into(), e.into())))
            }
            Relation::RouteDiscrete { k, m, at } => {
                let a = y_dplus(k, m, at.tau, at.phi)?;
                let b = y_dplus_hypergeometric(k, m, at.tau, at.phi, opts)?;
                Ok((a, b, rel(b, a)))
            }
            Relation::RoutePrincipalRaw { spec, at } => {
                if !matches!(spec.family, PrincipalFamily::Seq1 | PrincipalFamily::Seq2) {
                    return Err(domain("route-principal-raw compares a sequence member with the raw family"));
                }
                let a = y_principal_raw(parity_of(&spec), spec.m, spec.lambda, at.tau, at.phi, opts)?;
                let b = spec.evaluate(at.tau, at.phi, opts)?;
                Ok((a, b, rel(b, a)))
            }
            Relation::RouteLegendre { spec, at } => {
                let (seq, pre) = match spec.family {
                    PrincipalFamily::Seq1 => (Sequence::One, 1.0 / (2.0 * 2f64.sqrt() * PI.powf(1.5))),
                    PrincipalFamily::Seq2 => (Sequence::Two, 1.0 / (2f64.sqrt() * PI.powf(1.5))),
                    _ => return Err(domain("route-legendre needs seq1 or seq2")),
                };
                if !(spec.m >= 0.0 && spec.m.fract() == 0.0) {
                    return Err(domain("route-legendre needs a nonnegative integer m"));
                }
                spec.validate()?;
                let m = spec.m as u32;
                let x = at.tau.sinh();
                let p = match seq {
                    Sequence::One => legendre_p1(m, spec.lambda, x, opts)?,
                    Sequence::Two => legendre_p2(m, spec.lambda, x, opts)?,
                };
                let a = p * Complex64::from_polar(pre * z_factor(m, spec.lambda), spec.m * at.phi);
                let b = y_seq(seq, m, spec.lambda, at.tau, at.phi, opts)?;
                Ok((a, b, rel(b, a)))
            }
            Relation::RouteLadder { spec, steps, at } => {
                let mut base = spec;
                let mut product = 1.0;
                for _ in 0..steps {
                    let (lower, _) =
                        base.lowered().ok_or_else(|| domain(format!("cannot lower {base} inside its ladder")))?;
                    let (_, c) = lower.raised().ok_or_else(|| domain(format!("cannot raise {lower}")))?;
                    product *= c;
                    base = lower;
                }
                // a single application keeps the first-derivative step
                let h = if steps <= 1 { opts.fd_step } else { opts.fd_step_second };
                let nested = EvalOptions { fd_step: h, ..*opts };
                let mut f = base.surface(*opts);
                for _ in 0..steps {
                    f = f.kplus(nested);
                }
                let a = spec.evaluate(at.tau, at.phi, opts)?;
                let b = f.eval(at.tau, at.phi)? / product;
                Ok((a, b, rel(b, a)))
            }
            Relation::HalfVacuum { parity, lambda, at } => {
                let v = y_principal_raw(parity, 0.5, lambda, at.tau, at.phi, opts)?;
                let radial = match parity {
                    Parity::Even => (lambda * at.tau).cos(),
                    Parity::Odd => (lambda * at.tau).sin(),
                } / at.tau.cosh().sqrt();
                let e = Complex64::from_polar(radial / (2f64.sqrt() * PI), 0.5 * at.phi);
                Ok((e, v, (v - e).norm()))
            }
            Relation::TuIdentity { parity, lambda, tau } => {
                let x = tau.sinh();
                let scale = 0.5 * tau.cosh().sqrt();
                let (v, e) = match parity {
                    Parity::Even => (legendre_t(0, lambda, x) * scale, (lambda * tau).cos()),
                    Parity::Odd => (legendre_u(0, lambda, x) * scale / Complex64::new(0.0, 1.0), (lambda * tau).sin()),
                };
                Ok((e.into(), v, (v - e).norm()))
            }
            Relation::NormIdentity { parity, m, lambda } => {
                let c = match parity {
                    Parity::Even => norm_even(m, lambda)?,
                    Parity::Odd => norm_odd(m, lambda)?,
                };
                let a = asymptotic_amplitude(parity, m, lambda)?;
                let v = 8.0 * PI * PI * a * a * c * c;
                Ok((1.0.into(), v.into(), (v - 1.0).abs()))
            }
            Relation::AsymptoticPrincipal { spec } => {
                const TAU: f64 = 12.0;
                spec.validate()?;
                let g = |t: f64| -> Result<Complex64> { Ok(spec.evaluate(t, 0.0, opts)? * t.cosh().sqrt()) };
                let h = opts.fd_step;
                let dg = (g(TAU + h)? - g(TAU - h)?) / (2.0 * h);
                let amp = (g(TAU)? + Complex64::new(0.0, 1.0) * dg / spec.lambda).norm() / 2.0;
                let parity = parity_of(&spec);
                let norm = match parity {
                    Parity::Even => norm_even(spec.m, spec.lambda)?,
                    Parity::Odd => norm_odd(spec.m, spec.lambda)?,
                };
                let e = norm * asymptotic_amplitude(parity, spec.m, spec.lambda)?;
                Ok((e.into(), amp.into(), (amp - e).abs() / e))
            }
            Relation::AsymptoticSupplementary { spec } => {
                const TAU: f64 = 8.0;
                let v = y_supplementary(&spec, TAU, 0.0, opts)?.re;
                let e = supplementary_asymptotic(&spec, TAU)?;
                Ok((e.into(), v.into(), (v - e).abs() / e.abs()))
            }
            Relation::NewClassOde { spec, tau } => {
                let r = ode_residual_newclass(&spec, tau, opts)?;
                Ok((0.0.into(), r.into(), r))
            }
            Relation::Gudermannian { tau } => {
                let v = arcsin_tanh(tau);
                let e = 2.0 * tau.exp().atan() - FRAC_PI_2;
                Ok((e.into(), v.into(), (v - e).abs()))
            }
            Relation::Joining { raise } => joining(raise, opts),
            Relation::Divergence { spec } => {
                if !matches!(spec, SeriesSpec::NewClass(_) | SeriesSpec::Supplementary(_)) {
                    return Err(domain("divergence applies to new-class and supplementary functions"));
                }
                spec.validate()?;
                let f = spec.surface(*opts);
                let n5 = truncated_norm(&f, 5.0, opts)?;
                let n10 = truncated_norm(&f, 10.0, opts)?;
                let n20 = truncated_norm(&f, 20.0, opts)?;
                let (d1, d2) = (n10 - n5, n20 - n10);
                let r = if n5 > 0.0 && d1 > 0.0 && d2 > 0.0 { d1 / d2 } else { f64::INFINITY };
                Ok((n10.into(), n20.into(), r))
            }
            Relation::GammaHalfImag { x } => {
                let v = gamma_magnitude_sq(GammaArg::General(Complex64::new(0.5, x)))?;
                let e = PI / (PI * x).cosh();
                Ok((e.into(), v.into(), (v - e).abs() / e))
            }
            Relation::GammaImag { x } => {
                let v = gamma_magnitude_sq(GammaArg::General(Complex64::new(0.0, x)))?;
                let e = PI / (x * (PI * x).sinh());
                Ok((e.into(), v.into(), (v - e).abs() / e))
            }
            Relation::Hyp2f1Quadratic { alpha, z } => {
                if !(0.0..1.0).contains(&z) {
                    return Err(domain("the quadratic identity is checked on 0 <= z < 1"));
                }
                let p = Hyp2F1Params::new(alpha + 0.5, alpha, 0.5.into(), z);
                let v = crate::numerics::gauss_2f1(p, opts)?;
                let s = z.sqrt();
                let e = 0.5 * (Complex64::new(1.0 + s, 0.0).powc(-2.0 * alpha) + Complex64::new(1.0 - s, 0.0).powc(-2.0 * alpha));
                Ok((e, v, rel(v, e)))
            }
            Relation::Hyp2f1Continuation { a, b, c, z } => {
                let p = Hyp2F1Params::new(a, b, c, z);
                let e = gauss_2f1_series(p, opts)?;
                let v = gauss_2f1_continued(p, opts)?;
                Ok((e, v, rel(v, e)))
            }
            Relation::Hyp2f1Pfaff { a, b, c, z } => {
                let p = Hyp2F1Params::new(a, b, c, z);
                let e = gauss_2f1_series(p, opts)?;
                let v = gauss_2f1_pfaff(p, opts)?;
                Ok((e, v, rel(v, e)))
            }
            Relation::Hyp2f1Derivative { a, n, z } => {
                // ₂F₁(a, b; b; z) = (1-z)^{-a}
                let b = Complex64::new(0.75, 0.0);
                let v = gauss_2f1_deriv(Hyp2F1Params::new(a, b, b, z), n as usize, opts)?;
                let mut poch = Complex64::new(1.0, 0.0);
                for j in 0..n {
                    poch *= a + j as f64;
                }
                let e = poch * Complex64::new(1.0 - z, 0.0).powc(-a - n as f64);
                Ok((e, v, rel(v, e)))
            }
            Relation::ZFactor { m, lambda } => {
                let e = z_factor(m, lambda);
                let v1 = z_factor_ratio(m, lambda, 0.5)?;
                let v2 = z_factor_ratio(m, lambda, 1.5)?;
                let r = ((v1 - e).abs().max((v2 - e).abs())) / e;
                let worst = if (v1 - e).abs() >= (v2 - e).abs() { v1 } else { v2 };
                Ok((e.into(), worst.into(), r))
            }
        }
    }
}

/// |a - b| / max(|a|, |b|), or 0 when both vanish.
fn rel(a: Complex64, b: Complex64) -> f64 {
    let d = a.norm().max(b.norm());
    if d == 0.0 {
        0.0
    } else {
        (a - b).norm() / d
    }
}

fn ladder(spec: SeriesSpec, at: HyperPoint, raise: bool, opts: &EvalOptions) -> Result<(Complex64, Complex64, f64)> {
    spec.validate()?;
    let (next, c) = if raise { spec.raised() } else { spec.lowered() }
        .ok_or_else(|| domain(format!("{spec} has no ladder neighbour in this direction")))?;
    let f = spec.surface(*opts);
    let lhs = if raise { apply_kplus(&f, at.tau, at.phi, opts)? } else { apply_kminus(&f, at.tau, at.phi, opts)? };
    let rhs = next.evaluate(at.tau, at.phi, opts)? * c;
    let scale = rhs.norm().max(f.eval(at.tau, at.phi)?.norm());
    let r = if scale == 0.0 { 0.0 } else { (lhs - rhs).norm() / scale };
    Ok((rhs, lhs, r))
}

/// Sample points for the joining relation.
const JOIN_POINTS: [(f64, f64); 10] = [
    (-1.8, 0.1),
    (-1.1, 2.4),
    (-0.6, 4.0),
    (-0.25, 5.5),
    (0.15, 0.9),
    (0.5, 3.1),
    (0.9, 1.7),
    (1.3, 6.0),
    (1.7, 0.4),
    (2.2, 2.8),
];

/// K- Y⁰₀ against Ỹ⁻¹₀, or K+ of the weight-0 function on the minus branch against Y¹₀:
/// the pointwise ratio must not depend on the point.
fn joining(raise: bool, opts: &EvalOptions) -> Result<(Complex64, Complex64, f64)> {
    let sign = if raise { WeightSign::Minus } else { WeightSign::Plus };
    let f = SeriesSpec::from(NewClassSpec::new(0).with_sign(sign)).surface(*opts);
    let mut ratios = Vec::with_capacity(JOIN_POINTS.len());
    for (tau, phi) in JOIN_POINTS {
        let (v, g) = if raise {
            (apply_kplus(&f, tau, phi, opts)?, y_dplus(0.0, 1.0, tau, phi)?)
        } else {
            (apply_kminus(&f, tau, phi, opts)?, y_dminus(0.0, -1.0, tau, phi)?)
        };
        ratios.push(v / g);
    }
    let r0 = ratios[0];
    let (worst, dev) = ratios
        .iter()
        .map(|r| (*r, (r - r0).norm() / r0.norm()))
        .fold((r0, 0.0), |acc, x| if x.1 > acc.1 { x } else { acc });
    Ok((r0, worst, dev))
}

/// Runs a relation by id.
pub fn verify_relation(id: &str, params: &RelationParams, opts: &EvalOptions) -> Result<VerifyReport> {
    verify_relation_with(id, params, opts, &Tolerances::default())
}

pub fn verify_relation_with(
    id: &str,
    params: &RelationParams,
    opts: &EvalOptions,
    tol: &Tolerances,
) -> Result<VerifyReport> {
    let r = Relation::from_id(id, params)?;
    let t = r.tolerance(tol);
    let (e, o, res) = r.evaluate(opts)?;
    Ok(VerifyReport::new(r.label(), e, o, res, t))
}

/// Seed of the random sample points in the built-in catalog.
pub const CATALOG_SEED: u64 = 0x5eed_2f1;

fn random_points(rng: &mut ChaCha8Rng, n: usize, tau_max: f64) -> Vec<HyperPoint> {
    (0..n).map(|_| HyperPoint::new(rng.gen_range(-tau_max..tau_max), rng.gen_range(0.0..2.0 * PI))).collect()
}

/// Families used by the eigenvalue and ladder suites.
pub fn discrete_family() -> Vec<SeriesSpec> {
    let mut out = Vec::new();
    for (k, m) in [(0.0, 1.0), (0.0, 3.0), (0.5, 1.5), (0.5, 2.5), (1.0, 2.0), (1.0, 4.0), (2.0, 3.0), (2.0, 5.0)] {
        out.push(DiscreteSpec::dplus(k, m).expect("valid D+ index").into());
        out.push(DiscreteSpec::dminus(k, -m).expect("valid D- index").into());
    }
    out
}

pub fn principal_family(lambda: f64) -> Vec<SeriesSpec> {
    let mut out = Vec::new();
    for family in [PrincipalFamily::Seq1, PrincipalFamily::Seq2] {
        for m in [0.0, 1.0, 2.0, 3.0, 0.5, 1.5, 2.5, 3.5, -1.0, -2.5] {
            out.push(PrincipalSpec::new(lambda, m, family).expect("valid principal spec").into());
        }
    }
    out
}

pub fn supplementary_family() -> Vec<SeriesSpec> {
    let mut out = Vec::new();
    for parity in [Parity::Even, Parity::Odd] {
        for (gamma, m) in [(0.2, 0), (0.35, 1), (0.1, -2)] {
            out.push(SupplementarySpec::new(gamma, m, parity).expect("valid supplementary spec").into());
        }
    }
    out
}

pub fn newclass_family() -> Vec<SeriesSpec> {
    let mut out = Vec::new();
    for k in 0..4 {
        for sign in [WeightSign::Plus, WeightSign::Minus] {
            out.push(NewClassSpec::new(k).with_sign(sign).into());
            out.push(NewClassSpec::new(k).with_constants(1.0, 0.5).with_sign(sign).into());
        }
    }
    out
}

fn eigen_checks(out: &mut Vec<Relation>, specs: &[SeriesSpec], rng: &mut ChaCha8Rng) {
    for &spec in specs {
        for at in random_points(rng, 20, 2.0) {
            out.push(Relation::EigenCasimir { spec, at });
            out.push(Relation::EigenK3 { spec, at });
        }
    }
}

fn ladder_checks(out: &mut Vec<Relation>, specs: &[SeriesSpec], rng: &mut ChaCha8Rng) {
    for &spec in specs {
        for at in random_points(rng, 20, 2.0) {
            if spec.raised().is_some() {
                out.push(Relation::LadderRaise { spec, at });
            }
            if spec.lowered().is_some() {
                out.push(Relation::LadderLower { spec, at });
            }
        }
    }
}

fn discrete_catalog(rng: &mut ChaCha8Rng) -> Vec<Relation> {
    let mut out = Vec::new();
    for k in 0..=6 {
        out.push(Relation::LowestWeightNorm { k });
    }
    let mut ortho = Vec::new();
    for k in [0.0, 0.5, 1.0, 2.0] {
        for n in 0..2 {
            ortho.push(DiscreteSpec::dplus(k, k + 1.0 + n as f64).expect("valid D+ index"));
        }
    }
    for (i, &a) in ortho.iter().enumerate() {
        for &b in &ortho[i..] {
            out.push(Relation::Orthonormality { a, b });
        }
    }
    let family = discrete_family();
    eigen_checks(&mut out, &family, rng);
    ladder_checks(&mut out, &family, rng);
    for k in [0.0, 0.5, 1.0, 2.0] {
        for at in random_points(rng, 5, 2.0) {
            out.push(Relation::AnnihilateLowest { k, at });
            out.push(Relation::AnnihilateHighest { k, at });
        }
    }
    for id in Recurrence::ALL {
        let mut n = 0;
        while n < 50 {
            let k = rng.gen_range(0..=8) as f64 / 2.0;
            let m = k + 1.0 + rng.gen_range(0..5) as f64;
            let x = rng.gen_range(-5.0..5.0);
            if id.admissible(k, m) {
                out.push(Relation::Recurrence { id, k, m, x });
                n += 1;
            }
        }
    }
    for k in [0.0, 0.5, 1.0, 2.0] {
        for n in 0..4 {
            for at in random_points(rng, 5, 3.0) {
                out.push(Relation::RouteDiscrete { k, m: k + 1.0 + n as f64, at });
            }
        }
    }
    for k in [0.0, 0.5, 1.0] {
        for steps in 1..=3u32 {
            let spec = DiscreteSpec::dplus(k, k + 1.0 + steps as f64).expect("valid D+ index").into();
            for at in random_points(rng, 5, 3.0) {
                out.push(Relation::RouteLadder { spec, steps, at });
            }
        }
    }
    out
}

fn continuous_catalog(rng: &mut ChaCha8Rng) -> Vec<Relation> {
    let mut out = Vec::new();
    let principal = principal_family(1.3);
    eigen_checks(&mut out, &principal, rng);
    eigen_checks(&mut out, &supplementary_family(), rng);
    let ladder: Vec<SeriesSpec> = principal_family(0.8).into_iter().filter(|s| s.weight().abs() <= 2.5).collect();
    ladder_checks(&mut out, &ladder, rng);
    for family in [PrincipalFamily::Seq1, PrincipalFamily::Seq2] {
        for lambda in [0.5, 1.3] {
            let spec = PrincipalSpec::new(lambda, 0.5, family).expect("valid principal spec");
            for at in random_points(rng, 10, 2.0) {
                out.push(Relation::LadderCrossing { spec, at });
            }
        }
    }
    for family in [PrincipalFamily::Seq1, PrincipalFamily::Seq2] {
        for m in [0.0, 1.0, 2.0, 3.0, 4.0, 0.5, 1.5, 2.5, 3.5, -0.5, -1.0, -2.0, -2.5, -3.0] {
            let spec = PrincipalSpec::new(0.9, m, family).expect("valid principal spec");
            for at in random_points(rng, 5, 3.0) {
                out.push(Relation::RoutePrincipalRaw { spec, at });
            }
        }
        for m in 0..5 {
            let spec = PrincipalSpec::new(1.0, m as f64, family).expect("valid principal spec");
            for at in random_points(rng, 3, 3.0) {
                out.push(Relation::RouteLegendre { spec, at });
            }
        }
        for (m, steps) in [(1.0, 1), (2.0, 2), (3.0, 3), (1.5, 1), (2.5, 2)] {
            let spec = PrincipalSpec::new(1.0, m, family).expect("valid principal spec").into();
            for at in random_points(rng, 5, 3.0) {
                out.push(Relation::RouteLadder { spec, steps, at });
            }
        }
    }
    for lambda in [0.5, 1.0, 3.0] {
        for at in random_points(rng, 5, 3.0) {
            for parity in [Parity::Even, Parity::Odd] {
                out.push(Relation::HalfVacuum { parity, lambda, at });
                out.push(Relation::TuIdentity { parity, lambda, tau: at.tau });
            }
        }
    }
    for parity in [Parity::Even, Parity::Odd] {
        for m in [0.0, 1.0, 2.0, 3.0, 0.5, 1.5, -2.0] {
            for lambda in [0.5, 1.0, 3.0] {
                out.push(Relation::NormIdentity { parity, m, lambda });
            }
        }
    }
    for family in PRINCIPAL_FAMILIES {
        for m in [0.0, 1.0, 2.0, 0.5, 1.5] {
            for lambda in [0.5, 1.0, 3.0] {
                let spec = PrincipalSpec::new(lambda, m, family).expect("valid principal spec");
                out.push(Relation::AsymptoticPrincipal { spec });
            }
        }
    }
    for parity in [Parity::Even, Parity::Odd] {
        for gamma in [0.1, 0.25, 0.4] {
            for m in [0, 1, 2] {
                let spec = SupplementarySpec::new(gamma, m, parity).expect("valid supplementary spec");
                out.push(Relation::AsymptoticSupplementary { spec });
            }
        }
        for gamma in [0.1, 0.3] {
            let spec = SupplementarySpec::new(gamma, 1, parity).expect("valid supplementary spec");
            out.push(Relation::Divergence { spec: spec.into() });
        }
    }
    out
}

const PRINCIPAL_FAMILIES: [PrincipalFamily; 4] =
    [PrincipalFamily::Seq1, PrincipalFamily::Seq2, PrincipalFamily::EvenRaw, PrincipalFamily::OddRaw];

fn newclass_catalog(rng: &mut ChaCha8Rng) -> Vec<Relation> {
    let mut out = Vec::new();
    eigen_checks(&mut out, &newclass_family(), rng);
    for k in 0..5 {
        for (alpha, beta) in [(0.0, 1.0), (1.0, 0.0), (0.5, -1.0)] {
            let spec = NewClassSpec::new(k).with_constants(alpha, beta);
            for _ in 0..5 {
                out.push(Relation::NewClassOde { spec, tau: rng.gen_range(-3.0..3.0) });
            }
        }
    }
    for _ in 0..20 {
        out.push(Relation::Gudermannian { tau: rng.gen_range(-25.0..25.0) });
    }
    out.push(Relation::Joining { raise: false });
    out.push(Relation::Joining { raise: true });
    for k in 0..4 {
        for (alpha, beta) in [(0.0, 1.0), (1.0, 0.0)] {
            let spec = NewClassSpec::new(k).with_constants(alpha, beta);
            out.push(Relation::Divergence { spec: spec.into() });
        }
    }
    out
}

fn numerics_catalog() -> Vec<Relation> {
    let mut out = Vec::new();
    for x in [0.1, 0.5, 1.0, 2.0, 5.0] {
        out.push(Relation::GammaHalfImag { x });
        out.push(Relation::GammaImag { x });
    }
    for lambda in [0.5, 1.0, 3.0] {
        // α = ½(½ ± iλ), the m = ½ parameters
        let alpha = Complex64::new(0.25, 0.5 * lambda);
        for z in [0.1, 0.4, 0.7, 0.9] {
            out.push(Relation::Hyp2f1Quadratic { alpha, z });
            out.push(Relation::Hyp2f1Quadratic { alpha: alpha.conj(), z });
        }
    }
    let c = |re: f64, im: f64| Complex64::new(re, im);
    let params = [
        (c(0.25, 0.5), c(0.25, -0.5), c(0.5, 0.0)),
        (c(1.25, 0.65), c(-0.75, 0.65), c(0.5, 0.0)),
        (c(0.3, 0.0), c(0.45, 0.0), c(1.5, 0.0)),
        (c(0.75, 1.5), c(0.75, -1.5), c(1.5, 0.0)),
    ];
    for (a, b, cc) in params {
        for z in [0.55, 0.75, 0.9] {
            out.push(Relation::Hyp2f1Continuation { a, b, c: cc, z });
        }
        for z in [-0.8, -0.3, 0.2, 0.45] {
            out.push(Relation::Hyp2f1Pfaff { a, b, c: cc, z });
        }
    }
    for a in [c(0.25, 0.5), c(1.3, -0.7)] {
        for n in 1..=4 {
            for z in [-0.5, 0.3, 0.8] {
                out.push(Relation::Hyp2f1Derivative { a, n, z });
            }
        }
    }
    for m in 0..=6 {
        for lambda in [0.5, 1.0, 3.0] {
            out.push(Relation::ZFactor { m, lambda });
        }
    }
    out
}

/// The checks of a suite, with sample points drawn from a ChaCha stream seeded by `seed`.
pub fn catalog(suite: Suite, seed: u64) -> Vec<Relation> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    match suite {
        Suite::Discrete => discrete_catalog(&mut rng),
        Suite::Continuous => continuous_catalog(&mut rng),
        Suite::NewClass => newclass_catalog(&mut rng),
        Suite::Numerics => numerics_catalog(),
        Suite::All => {
            let mut out = numerics_catalog();
            out.extend(discrete_catalog(&mut rng));
            out.extend(continuous_catalog(&mut rng));
            out.extend(newclass_catalog(&mut rng));
            out
        }
    }
}

pub fn run_suite(suite: Suite, opts: &EvalOptions, tol: &Tolerances) -> Vec<VerifyReport> {
    catalog(suite, CATALOG_SEED).iter().map(|r| r.check(opts, tol)).collect()
}

/// Reports of one relation id within a suite.
pub fn run_relation_group(suite: Suite, id: &str, opts: &EvalOptions, tol: &Tolerances) -> Vec<VerifyReport> {
    catalog(suite, CATALOG_SEED).iter().filter(|r| r.id() == id).map(|r| r.check(opts, tol)).collect()
}
