//! Gauss hypergeometric function ₂F₁(a, b; c; z) for real z < 1.
//!
//! Evaluation routes:
//! * z = 0 and terminating parameter sets are summed exactly;
//! * |z| <= `transform_threshold` uses the power series;
//! * threshold < z < 1 maps to argument 1 - z with the connection formula;
//! * z < -threshold maps to z / (z - 1) with the Pfaff transformation.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::gamma::{gamma, is_nonpositive_integer, rgamma};
use super::sum::ComplexSum;
use crate::error::{Error, Result};
use crate::options::EvalOptions;

const CONSECUTIVE_SMALL_TERMS: usize = 3;

/// Parameters of ₂F₁(a, b; c; z).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Hyp2F1Params {
    pub a: Complex64,
    pub b: Complex64,
    pub c: Complex64,
    pub z: f64,
}

impl Hyp2F1Params {
    pub fn new(a: Complex64, b: Complex64, c: Complex64, z: f64) -> Self {
        Self { a, b, c, z }
    }

    pub fn real(a: f64, b: f64, c: f64, z: f64) -> Self {
        Self::new(a.into(), b.into(), c.into(), z)
    }

    /// Degree of the polynomial when a or b is a non-positive integer.
    pub fn terminating_degree(&self) -> Option<usize> {
        [self.a, self.b]
            .into_iter()
            .filter(|&p| is_nonpositive_integer(p))
            .map(|p| (-p.re) as usize)
            .min()
    }

    fn check(&self) -> Result<()> {
        self.check_with(1.0 - self.z)
    }

    fn check_with(&self, w: f64) -> Result<()> {
        for (name, v) in [("a", self.a), ("b", self.b), ("c", self.c)] {
            if !(v.re.is_finite() && v.im.is_finite()) {
                return Err(Error::Domain(format!("2F1 parameter {name} is not finite")));
            }
        }
        if !self.z.is_finite() || !(w > 0.0) {
            return Err(Error::Domain(format!("2F1 requires finite z < 1, got {}", self.z)));
        }
        if is_nonpositive_integer(self.c) {
            let pole = (-self.c.re) as usize;
            match self.terminating_degree() {
                Some(n) if n <= pole => {}
                _ => {
                    return Err(Error::ParameterPole(format!(
                        "c = {} is a non-positive integer and the series does not terminate before it",
                        self.c.re
                    )))
                }
            }
        }
        Ok(())
    }
}

/// ₂F₁(a, b; c; z), choosing the evaluation route from `opts.transform_threshold`.
pub fn gauss_2f1(p: Hyp2F1Params, opts: &EvalOptions) -> Result<Complex64> {
    gauss_2f1_at(p, 1.0 - p.z, opts)
}

/// As [`gauss_2f1`] with 1 - z supplied by the caller.
///
/// Arguments like z = tanh²τ round to 1 long before 1 - z = sech²τ loses precision;
/// passing the complement keeps the connection-formula route accurate for large τ.
pub fn gauss_2f1_at(p: Hyp2F1Params, one_minus_z: f64, opts: &EvalOptions) -> Result<Complex64> {
    p.check_with(one_minus_z)?;
    if p.z == 0.0 {
        return Ok(Complex64::new(1.0, 0.0));
    }
    if let Some(n) = p.terminating_degree() {
        return Ok(polynomial(&p, n));
    }
    if p.z.abs() <= opts.transform_threshold {
        series(&p, opts)
    } else if p.z > 0.0 {
        continued(&p, one_minus_z, opts)
    } else {
        pfaff(&p, opts)
    }
}

/// Direct power series regardless of |z|; the caller is responsible for convergence speed.
pub fn gauss_2f1_series(p: Hyp2F1Params, opts: &EvalOptions) -> Result<Complex64> {
    p.check()?;
    if let Some(n) = p.terminating_degree() {
        return Ok(polynomial(&p, n));
    }
    series(&p, opts)
}

/// Route through the connection formula to argument 1 - z, for 0 < z < 1.
pub fn gauss_2f1_continued(p: Hyp2F1Params, opts: &EvalOptions) -> Result<Complex64> {
    p.check()?;
    if p.z <= 0.0 {
        return Err(Error::Domain(format!("continuation route requires 0 < z < 1, got {}", p.z)));
    }
    continued(&p, 1.0 - p.z, opts)
}

/// Route through the Pfaff transformation
/// ₂F₁(a,b;c;z) = (1-z)^{-a} ₂F₁(a, c-b; c; z/(z-1)).
pub fn gauss_2f1_pfaff(p: Hyp2F1Params, opts: &EvalOptions) -> Result<Complex64> {
    p.check()?;
    pfaff(&p, opts)
}

/// n-th derivative in z: (a)_n (b)_n / (c)_n · ₂F₁(a+n, b+n; c+n; z).
pub fn gauss_2f1_deriv(p: Hyp2F1Params, n: usize, opts: &EvalOptions) -> Result<Complex64> {
    p.check()?;
    let mut factor = Complex64::new(1.0, 0.0);
    for j in 0..n {
        let j = j as f64;
        factor *= (p.a + j) * (p.b + j) / (p.c + j);
    }
    if factor == Complex64::new(0.0, 0.0) {
        return Ok(factor);
    }
    let shifted = Hyp2F1Params::new(p.a + n as f64, p.b + n as f64, p.c + n as f64, p.z);
    Ok(factor * gauss_2f1(shifted, opts)?)
}

/// Coefficients (A₁, A₂) of the connection formula
/// ₂F₁(a,b;c;z) = A₁ ₂F₁(a,b;a+b-c+1;1-z) + A₂ (1-z)^{c-a-b} ₂F₁(c-a,c-b;c-a-b+1;1-z).
pub fn continuation_coefficients(a: Complex64, b: Complex64, c: Complex64) -> Result<(Complex64, Complex64)> {
    let s = c - a - b;
    if (s.im == 0.0 && s.re.fract() == 0.0) || is_nonpositive_integer(c) {
        return Err(Error::ParameterPole(format!(
            "c - a - b = {} + {}i is an integer; the connection coefficients are singular",
            s.re, s.im
        )));
    }
    let gc = gamma(c)?;
    let a1 = gc * gamma(s)? * rgamma(c - a)? * rgamma(c - b)?;
    let a2 = gc * gamma(-s)? * rgamma(a)? * rgamma(b)?;
    Ok((a1, a2))
}

fn polynomial(p: &Hyp2F1Params, n: usize) -> Complex64 {
    let mut sum = ComplexSum::default();
    let mut term = Complex64::new(1.0, 0.0);
    sum.add(term);
    for j in 0..n {
        let jf = j as f64;
        term *= (p.a + jf) * (p.b + jf) / ((p.c + jf) * (jf + 1.0)) * p.z;
        sum.add(term);
    }
    sum.value()
}

fn series(p: &Hyp2F1Params, opts: &EvalOptions) -> Result<Complex64> {
    let mut sum = ComplexSum::default();
    let mut term = Complex64::new(1.0, 0.0);
    sum.add(term);
    let mut small = 0;
    for j in 0..opts.max_terms {
        let jf = j as f64;
        term *= (p.a + jf) * (p.b + jf) / ((p.c + jf) * (jf + 1.0)) * p.z;
        sum.add(term);
        let s = sum.value();
        if term.norm() <= opts.series_tol * s.norm() {
            small += 1;
            if small >= CONSECUTIVE_SMALL_TERMS {
                return finite(s);
            }
        } else {
            small = 0;
        }
    }
    Err(Error::NonConvergence { terms: opts.max_terms })
}

fn continued(p: &Hyp2F1Params, w: f64, opts: &EvalOptions) -> Result<Complex64> {
    let s = p.c - p.a - p.b;
    let (a1, a2) = match continuation_coefficients(p.a, p.b, p.c) {
        Ok(v) => v,
        Err(Error::ParameterPole(msg)) => {
            return series(p, opts).map_err(|_| Error::ParameterPole(msg));
        }
        Err(e) => return Err(e),
    };
    let mut out = Complex64::new(0.0, 0.0);
    if a1 != Complex64::new(0.0, 0.0) {
        let f1 = gauss_2f1_at(Hyp2F1Params::new(p.a, p.b, 1.0 - s, w), p.z, opts)?;
        out += a1 * f1;
    }
    if a2 != Complex64::new(0.0, 0.0) {
        let f2 = gauss_2f1_at(Hyp2F1Params::new(p.c - p.a, p.c - p.b, 1.0 + s, w), p.z, opts)?;
        out += a2 * (s * w.ln()).exp() * f2;
    }
    finite(out)
}

fn pfaff(p: &Hyp2F1Params, opts: &EvalOptions) -> Result<Complex64> {
    let w = 1.0 - p.z;
    let inner = Hyp2F1Params::new(p.a, p.c - p.b, p.c, p.z / (p.z - 1.0));
    let f = gauss_2f1_at(inner, 1.0 / w, opts)?;
    finite((-p.a * w.ln()).exp() * f)
}

fn finite(v: Complex64) -> Result<Complex64> {
    if v.re.is_finite() && v.im.is_finite() {
        Ok(v)
    } else {
        Err(Error::NonFinite("2F1"))
    }
}
