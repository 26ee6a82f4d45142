//! Globally adaptive Gauss-Kronrod (7, 15) quadrature and the inner product
//! ⟨F|G⟩ = ∫ cosh τ dτ ∫ dφ F* G.

use std::f64::consts::PI;

use num_complex::Complex64;

use super::SurfaceFunction;
use crate::error::{Error, Result};
use crate::options::EvalOptions;

const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_845_693_013,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

const INITIAL_PIECES: usize = 16;
const MAX_INTERVALS: usize = 4000;
const REL_TOL: f64 = 1e-13;
const PHI_NODES: usize = 256;

/// Integral estimate with its error bound and the estimated remainder beyond the range.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadResult {
    pub value: Complex64,
    pub error: f64,
    pub tail: f64,
}

struct Piece {
    a: f64,
    b: f64,
    value: Complex64,
    error: f64,
}

fn gk15(f: &dyn Fn(f64) -> Result<Complex64>, a: f64, b: f64) -> Result<Piece> {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let fc = f(c)?;
    let mut kron = fc * WGK[7];
    let mut gauss = fc * WG[3];
    for j in 0..7 {
        let x = h * XGK[j];
        let s = f(c - x)? + f(c + x)?;
        kron += s * WGK[j];
        if j % 2 == 1 {
            gauss += s * WG[j / 2];
        }
    }
    Ok(Piece { a, b, value: kron * h, error: ((kron - gauss) * h).norm() })
}

/// ∫_a^b f, refined until the error bound is below max(abs_tol, 1e-13·|value|).
pub fn integrate(f: impl Fn(f64) -> Result<Complex64>, a: f64, b: f64, abs_tol: f64) -> Result<QuadResult> {
    if !(a.is_finite() && b.is_finite()) {
        return Err(Error::Domain("integration limits must be finite".into()));
    }
    let f: &dyn Fn(f64) -> Result<Complex64> = &f;
    let mut pieces = Vec::with_capacity(INITIAL_PIECES * 4);
    let w = (b - a) / INITIAL_PIECES as f64;
    for j in 0..INITIAL_PIECES {
        let lo = a + w * j as f64;
        let hi = if j + 1 == INITIAL_PIECES { b } else { lo + w };
        pieces.push(gk15(f, lo, hi)?);
    }
    loop {
        let value: Complex64 = pieces.iter().map(|p| p.value).sum();
        let error: f64 = pieces.iter().map(|p| p.error).sum();
        if error <= abs_tol.max(REL_TOL * value.norm()) {
            return Ok(QuadResult { value, error, tail: 0.0 });
        }
        if pieces.len() >= MAX_INTERVALS {
            return Err(Error::NonConvergence { terms: pieces.len() * 15 });
        }
        let (worst, _) = pieces
            .iter()
            .enumerate()
            .max_by(|x, y| x.1.error.total_cmp(&y.1.error))
            .expect("at least one piece");
        let p = pieces.swap_remove(worst);
        let mid = 0.5 * (p.a + p.b);
        pieces.push(gk15(f, p.a, mid)?);
        pieces.push(gk15(f, mid, p.b)?);
    }
}

#[derive(Clone, Copy)]
enum PhiFactor {
    /// both weights declared: ½∫₀^{4π} e^{i(m_g - m_f)φ} dφ
    Exact(Complex64),
    /// trapezoid rule on the double cover of the circle
    Numeric,
}

fn phi_factor(f: &SurfaceFunction, g: &SurfaceFunction) -> PhiFactor {
    match (f.weight(), g.weight()) {
        (Some(mf), Some(mg)) => {
            let d = mg - mf;
            if d == 0.0 {
                PhiFactor::Exact(Complex64::new(2.0 * PI, 0.0))
            } else if (2.0 * d).fract() == 0.0 {
                PhiFactor::Exact(Complex64::new(0.0, 0.0))
            } else {
                let i = Complex64::new(0.0, 1.0);
                PhiFactor::Exact((Complex64::from_polar(1.0, 4.0 * PI * d) - 1.0) / (i * 2.0 * d))
            }
        }
        _ => PhiFactor::Numeric,
    }
}

fn radial(f: &SurfaceFunction, g: &SurfaceFunction, factor: PhiFactor, tau: f64) -> Result<Complex64> {
    let base = match factor {
        PhiFactor::Exact(c) => f.eval(tau, 0.0)?.conj() * g.eval(tau, 0.0)? * c,
        PhiFactor::Numeric => {
            let h = 4.0 * PI / PHI_NODES as f64;
            let mut acc = Complex64::new(0.0, 0.0);
            for j in 0..PHI_NODES {
                let phi = h * j as f64;
                acc += f.eval(tau, phi)?.conj() * g.eval(tau, phi)?;
            }
            acc * (0.5 * h)
        }
    };
    Ok(base * tau.cosh())
}

fn tail_bound(f: &SurfaceFunction, g: &SurfaceFunction, factor: PhiFactor, cutoff: f64) -> Result<f64> {
    let mut tail = 0.0;
    for end in [cutoff, -cutoff] {
        let at = radial(f, g, factor, end)?.norm();
        if at == 0.0 {
            continue;
        }
        let rate = match (f.decay(), g.decay()) {
            (Some(p), Some(q)) => p + q - 1.0,
            _ => {
                let inner = radial(f, g, factor, end - end.signum())?.norm();
                (inner / at).ln()
            }
        };
        if !(rate > 0.0) {
            return Ok(f64::INFINITY);
        }
        tail += at / rate;
    }
    Ok(tail)
}

/// ⟨F|G⟩ restricted to |τ| <= cutoff, with the estimated remainder in `tail`.
pub fn inner_product_truncated(
    f: &SurfaceFunction,
    g: &SurfaceFunction,
    cutoff: f64,
    opts: &EvalOptions,
) -> Result<QuadResult> {
    if !(cutoff.is_finite() && cutoff > 0.0) {
        return Err(Error::Domain(format!("cutoff must be finite and > 0, got {cutoff}")));
    }
    let factor = phi_factor(f, g);
    if let PhiFactor::Exact(c) = factor {
        if c == Complex64::new(0.0, 0.0) {
            return Ok(QuadResult { value: c, error: 0.0, tail: 0.0 });
        }
    }
    let mut r = integrate(|t| radial(f, g, factor, t), -cutoff, cutoff, 0.1 * opts.quad_tol)?;
    r.tail = tail_bound(f, g, factor, cutoff)?;
    Ok(r)
}

/// ⟨F|G⟩ over the hyperboloid, truncated at |τ| = `quad_cutoff`.
///
/// Fails with [`Error::QuadratureDivergence`] when the remainder beyond the
/// cutoff is not below `quad_tol`, which is the case for non-normalizable functions.
pub fn inner_product(f: &SurfaceFunction, g: &SurfaceFunction, opts: &EvalOptions) -> Result<Complex64> {
    let r = inner_product_truncated(f, g, opts.quad_cutoff, opts)?;
    if !(r.tail <= opts.quad_tol) {
        return Err(Error::QuadratureDivergence { tail: r.tail, tol: opts.quad_tol });
    }
    Ok(r.value)
}

/// ∫_{|τ|<=T} cosh τ dτ ∫ dφ |F|², the norm restricted to a band.
pub fn truncated_norm(f: &SurfaceFunction, cutoff: f64, opts: &EvalOptions) -> Result<f64> {
    Ok(inner_product_truncated(f, f, cutoff, opts)?.value.re)
}
