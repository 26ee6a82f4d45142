//! su(1,1) generators as differential operators in biharmonic coordinates,
//! applied by central differences, and the hyperboloid inner product.
//!
//! ```text
//! K+ = -e^{iφ}(∂τ + i tanh τ ∂φ)     K- = e^{-iφ}(∂τ - i tanh τ ∂φ)     K3 = -i∂φ
//! C2 = ∂²τ + tanh τ ∂τ - sech²τ ∂²φ
//! ```

mod quadrature;

use std::fmt;
use std::sync::Arc;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::options::EvalOptions;

pub use quadrature::{inner_product, inner_product_truncated, integrate, truncated_norm, QuadResult};
pub use crate::verify::VerifyReport;

const I: Complex64 = Complex64::new(0.0, 1.0);

type Callback = dyn Fn(f64, f64) -> Result<Complex64> + Send + Sync;

/// A function on the hyperboloid, optionally declaring its e^{imφ} dependence and
/// the rate p of its decay |F| <= C cosh^{-p}τ.
#[derive(Clone)]
pub struct SurfaceFunction {
    f: Arc<Callback>,
    weight: Option<f64>,
    decay: Option<f64>,
}

impl fmt::Debug for SurfaceFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SurfaceFunction").field("weight", &self.weight).field("decay", &self.decay).finish()
    }
}

impl SurfaceFunction {
    pub fn new(f: impl Fn(f64, f64) -> Result<Complex64> + Send + Sync + 'static) -> Self {
        Self { f: Arc::new(f), weight: None, decay: None }
    }

    /// Declares F(τ, φ) = e^{imφ} F(τ, 0), which makes φ-derivatives exact.
    pub fn with_weight(mut self, m: f64) -> Self {
        self.weight = Some(m);
        self
    }

    pub fn with_decay(mut self, p: f64) -> Self {
        self.decay = Some(p);
        self
    }

    /// Same callback with no declared weight, so φ-derivatives fall back to differences.
    pub fn without_weight(&self) -> Self {
        Self { weight: None, ..self.clone() }
    }

    pub fn weight(&self) -> Option<f64> {
        self.weight
    }

    pub fn decay(&self) -> Option<f64> {
        self.decay
    }

    pub fn eval(&self, tau: f64, phi: f64) -> Result<Complex64> {
        let v = (self.f)(tau, phi)?;
        if v.re.is_finite() && v.im.is_finite() {
            Ok(v)
        } else {
            Err(Error::NonFinite("surface function"))
        }
    }

    /// The function K+F, itself a surface function of weight m+1.
    pub fn kplus(&self, opts: EvalOptions) -> Self {
        let g = self.clone();
        let out = Self::new(move |t, p| apply_kplus(&g, t, p, &opts));
        match self.weight {
            Some(m) => out.with_weight(m + 1.0),
            None => out,
        }
    }

    pub fn kminus(&self, opts: EvalOptions) -> Self {
        let g = self.clone();
        let out = Self::new(move |t, p| apply_kminus(&g, t, p, &opts));
        match self.weight {
            Some(m) => out.with_weight(m - 1.0),
            None => out,
        }
    }

    pub fn k3(&self, opts: EvalOptions) -> Self {
        let g = self.clone();
        let out = Self::new(move |t, p| apply_k3(&g, t, p, &opts));
        match self.weight {
            Some(m) => out.with_weight(m),
            None => out,
        }
    }
}

fn check_step(x: f64, h: f64) -> Result<()> {
    if !(h.is_finite() && h > 0.0) || x + h == x || x - h == x {
        return Err(Error::StepUnderflow(h));
    }
    Ok(())
}

/// ∂F/∂τ by second-order central differences.
pub fn d_tau(f: &SurfaceFunction, tau: f64, phi: f64, h: f64) -> Result<Complex64> {
    check_step(tau, h)?;
    Ok((f.eval(tau + h, phi)? - f.eval(tau - h, phi)?) / (2.0 * h))
}

pub fn d2_tau(f: &SurfaceFunction, tau: f64, phi: f64, h: f64) -> Result<Complex64> {
    check_step(tau, h)?;
    Ok((f.eval(tau + h, phi)? - f.eval(tau, phi)? * 2.0 + f.eval(tau - h, phi)?) / (h * h))
}

/// ∂F/∂φ, exact when the weight is declared.
pub fn d_phi(f: &SurfaceFunction, tau: f64, phi: f64, h: f64) -> Result<Complex64> {
    match f.weight {
        Some(m) => Ok(f.eval(tau, phi)? * I * m),
        None => {
            check_step(phi, h)?;
            Ok((f.eval(tau, phi + h)? - f.eval(tau, phi - h)?) / (2.0 * h))
        }
    }
}

pub fn d2_phi(f: &SurfaceFunction, tau: f64, phi: f64, h: f64) -> Result<Complex64> {
    match f.weight {
        Some(m) => Ok(f.eval(tau, phi)? * (-m * m)),
        None => {
            check_step(phi, h)?;
            Ok((f.eval(tau, phi + h)? - f.eval(tau, phi)? * 2.0 + f.eval(tau, phi - h)?) / (h * h))
        }
    }
}

/// Central difference of a scalar function of one variable.
pub fn central_d1(f: impl Fn(f64) -> Result<f64>, x: f64, h: f64) -> Result<f64> {
    check_step(x, h)?;
    Ok((f(x + h)? - f(x - h)?) / (2.0 * h))
}

pub fn central_d2(f: impl Fn(f64) -> Result<f64>, x: f64, h: f64) -> Result<f64> {
    check_step(x, h)?;
    Ok((f(x + h)? - 2.0 * f(x)? + f(x - h)?) / (h * h))
}

/// K3 F = -i ∂F/∂φ.
pub fn apply_k3(f: &SurfaceFunction, tau: f64, phi: f64, opts: &EvalOptions) -> Result<Complex64> {
    Ok(-I * d_phi(f, tau, phi, opts.fd_step)?)
}

/// K+ F = -e^{iφ}(∂τ F + i tanh τ ∂φ F).
pub fn apply_kplus(f: &SurfaceFunction, tau: f64, phi: f64, opts: &EvalOptions) -> Result<Complex64> {
    let dt = d_tau(f, tau, phi, opts.fd_step)?;
    let dp = d_phi(f, tau, phi, opts.fd_step)?;
    Ok(-Complex64::from_polar(1.0, phi) * (dt + I * tau.tanh() * dp))
}

/// K- F = e^{-iφ}(∂τ F - i tanh τ ∂φ F).
pub fn apply_kminus(f: &SurfaceFunction, tau: f64, phi: f64, opts: &EvalOptions) -> Result<Complex64> {
    let dt = d_tau(f, tau, phi, opts.fd_step)?;
    let dp = d_phi(f, tau, phi, opts.fd_step)?;
    Ok(Complex64::from_polar(1.0, -phi) * (dt - I * tau.tanh() * dp))
}

/// C2 F = ∂²τ F + tanh τ ∂τ F - sech²τ ∂²φ F.
pub fn apply_casimir(f: &SurfaceFunction, tau: f64, phi: f64, opts: &EvalOptions) -> Result<Complex64> {
    let dtt = d2_tau(f, tau, phi, opts.fd_step_second)?;
    let dt = d_tau(f, tau, phi, opts.fd_step)?;
    let dpp = d2_phi(f, tau, phi, opts.fd_step_second)?;
    let sech = 1.0 / tau.cosh();
    Ok(dtt + dt * tau.tanh() - dpp * (sech * sech))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn opts() -> EvalOptions {
        EvalOptions::default()
    }

    /// e^{imφ} sech τ, smooth and decaying.
    fn test_fn(m: f64) -> SurfaceFunction {
        SurfaceFunction::new(move |t: f64, p: f64| Ok(Complex64::from_polar(1.0 / t.cosh(), m * p)))
    }

    #[test]
    fn k3_eigenfunction_and_constant() {
        let o = opts();
        let f = SurfaceFunction::new(|_, p: f64| Ok(Complex64::from_polar(1.0, 2.0 * p)));
        for tau in [0.0, 1.0] {
            let v = apply_k3(&f, tau, 0.4, &o).unwrap();
            assert!((v - f.eval(tau, 0.4).unwrap() * 2.0).norm() < 1e-7);
            let exact = apply_k3(&f.clone().with_weight(2.0), tau, 0.4, &o).unwrap();
            assert!((exact - f.eval(tau, 0.4).unwrap() * 2.0).norm() < 1e-15);
        }
        let c = SurfaceFunction::new(|_, _| Ok(Complex64::new(3.0, 0.0)));
        assert_eq!(apply_k3(&c, 0.3, 0.1, &o).unwrap(), Complex64::new(0.0, 0.0));
        assert_eq!(apply_kplus(&c, 0.3, 0.1, &o).unwrap().norm(), 0.0);
        assert_eq!(apply_casimir(&c, 0.3, 0.1, &o).unwrap().norm(), 0.0);
    }

    #[test]
    fn bad_step_is_reported() {
        let o = opts().with_fd_step(0.0);
        assert!(matches!(apply_kplus(&test_fn(1.0), 0.2, 0.0, &o), Err(Error::StepUnderflow(_))));
        let o = opts().with_fd_step(1e-30);
        assert!(matches!(apply_kplus(&test_fn(1.0), 5.0, 0.0, &o), Err(Error::StepUnderflow(_))));
    }

    #[test]
    fn commutators() {
        let o = EvalOptions { fd_step: 1e-3, fd_step_second: 1e-3, ..opts() };
        for f in [test_fn(1.0), test_fn(1.0).with_weight(1.0), test_fn(-2.0)] {
            for (t, p) in [(0.3, 0.2), (-1.1, 2.0)] {
                // [K3, K+] = K+
                let a = f.kplus(o).k3(o).eval(t, p).unwrap() - f.k3(o).kplus(o).eval(t, p).unwrap();
                let b = f.kplus(o).eval(t, p).unwrap();
                assert!((a - b).norm() < 1e-3, "{a} vs {b}");
                // [K+, K-] = -2 K3
                let a = f.kminus(o).kplus(o).eval(t, p).unwrap() - f.kplus(o).kminus(o).eval(t, p).unwrap();
                let b = f.k3(o).eval(t, p).unwrap() * -2.0;
                assert!((a - b).norm() < 1e-3, "{a} vs {b}");
            }
        }
    }

    #[test]
    fn casimir_factorization() {
        // C2 = K3(K3 + 1) - K- K+
        let o = EvalOptions { fd_step: 1e-3, fd_step_second: 1e-3, ..opts() };
        for f in [test_fn(1.0).with_weight(1.0), test_fn(0.5)] {
            for (t, p) in [(0.0, 0.0), (0.7, 1.3)] {
                let c = apply_casimir(&f, t, p, &o).unwrap();
                let k3 = f.k3(o);
                let k3k3 = k3.k3(o).eval(t, p).unwrap();
                let kmkp = f.kplus(o).kminus(o).eval(t, p).unwrap();
                let other = k3k3 + k3.eval(t, p).unwrap() - kmkp;
                assert!((c - other).norm() < 1e-3, "{c} vs {other}");
            }
        }
    }

    #[test]
    fn second_order_convergence() {
        let f = test_fn(1.0).with_weight(1.0);
        let (t, p) = (0.6f64, 0.3);
        // exact: ∂τ sech = -tanh sech
        let exact_dt = -t.tanh() / t.cosh();
        let exact = -Complex64::from_polar(1.0, p)
            * (Complex64::from_polar(exact_dt, p) + I * t.tanh() * I * Complex64::from_polar(1.0 / t.cosh(), p));
        let e1 = (apply_kplus(&f, t, p, &opts().with_fd_step(1e-2)).unwrap() - exact).norm();
        let e2 = (apply_kplus(&f, t, p, &opts().with_fd_step(5e-3)).unwrap() - exact).norm();
        let ratio = e1 / e2;
        assert!((3.5..4.5).contains(&ratio), "ratio {ratio}");
    }
}
